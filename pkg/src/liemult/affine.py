"""The dual affine Weyl group action on the weight lattice.

The affine system is built on coroots: its simple system consists of the
simple coroots (index 1..n) plus one affine root at the highest-coroot wall
(index 0).  A weight is *minuscule* when it lies in the fundamental alcove,
i.e. pairs non-negatively with every simple affine root; each orbit contains
exactly one such weight, and walking a weight down into the alcove yields the
reduced word, the intermediate chain, and the exact step coefficients that
drive the polynomial recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularParameterError
from .kpoly import KPoly
from .root_system import Root, RootSystem

_DESCENT_CAP = 100_000


@dataclass(frozen=True)
class AffineRoot:
    """m*delta + (a coroot), with the coroot stored in simple-coroot coords."""

    delta_coeff: int
    coroot_coords: tuple


def simple_affine_roots(rs: RootSystem):
    """The simple system a_0 = delta - beta^vee, a_i = alpha_i^vee."""
    n = rs.rank
    roots = [AffineRoot(1, tuple(-c for c in rs.beta.coroot_coords))]
    for i in range(n):
        roots.append(AffineRoot(0, tuple(int(i == j) for j in range(n))))
    return tuple(roots)


def affine_pair(rs: RootSystem, a: AffineRoot, lam):
    """(m*delta + x^vee, lam) = m + (x^vee, lam).

    Works on integer weights (returns int) and on vectors of KPoly
    coordinates (returns KPoly), since the pairing is coordinate-linear.
    """
    acc = sum(c * x for c, x in zip(a.coroot_coords, lam) if c)
    if isinstance(acc, KPoly):
        return acc + a.delta_coeff
    return a.delta_coeff + acc


def apply_affine_reflection(rs: RootSystem, i: int, lam):
    """s_i for i in 0..n acting on a weight; i = 0 is the affine wall,
    where s_0(lam) = s_beta(lam) + beta."""
    if i == 0:
        reflected = rs.reflect_root(rs.beta, lam)
        return tuple(r + b for r, b in zip(reflected, rs.beta.fw_coords))
    return rs.reflect_simple(i, lam)


def is_minuscule(rs: RootSystem, lam) -> bool:
    """Whether lam lies in the fundamental alcove: dominant with
    (beta^vee, lam) <= 1."""
    if any(c < 0 for c in lam):
        return False
    return rs.pair_coroot(rs.beta, lam) <= 1


def deformed_weight(rs: RootSystem, lam):
    """lam shifted by the sign-weighted half sum of positive roots.

    Returns fundamental-weight coordinates as degree <= 1 polynomials in the
    length-class parameters: lam + (1/2) * sum over positive alpha of
    k_class(alpha) * eps * alpha, where eps is +1 if (alpha^vee, lam) > 0 and
    -1 otherwise (in particular -1 at 0).
    """
    n = rs.rank
    acc = [[Fraction(0)] * n, [Fraction(0)] * n]
    for alpha in rs.positive_roots:
        eps = 1 if rs.pair_coroot(alpha, lam) > 0 else -1
        cls = rs.param_classes[alpha.length_class]
        row = acc[cls]
        for j, f in enumerate(alpha.fw_coords):
            if f:
                row[j] += Fraction(eps * f, 2)
    coords = []
    for j in range(n):
        terms = {(0, 0): Fraction(lam[j])}
        if acc[0][j]:
            terms[(1, 0)] = acc[0][j]
        if acc[1][j]:
            terms[(0, 1)] = acc[1][j]
        coords.append(KPoly(terms))
    return tuple(coords)


@dataclass(frozen=True)
class ReductionChain:
    """The walk from a weight down to its minuscule representative.

    ``word`` is the reduced word (i_1, ..., i_m) with letters in 0..n, applied
    to the minuscule representative last-letter-last: chain[0] is the
    minuscule weight, chain[j] = s_{word[j-1]} applied to chain[j-1], and one
    more step s_{word[m-1]} lands on ``weight``.  ``denominators[j]`` is the
    affine pairing of the word[j] wall against the deformed chain[j] weight (a
    degree <= 1 polynomial), and ``coeff_classes[j]`` the parameter class
    whose variable forms the numerator of the step coefficient.
    """

    weight: tuple
    minuscule: tuple
    word: tuple
    chain: tuple
    denominators: tuple
    coeff_classes: tuple

    def __len__(self) -> int:
        return len(self.word)

    def coeffs_at(self, k_values) -> tuple:
        """The step coefficients as exact rationals at a numeric parameter
        assignment; raises SingularParameterError if a denominator vanishes."""
        out = []
        for j, (den, cls) in enumerate(zip(self.denominators, self.coeff_classes), 1):
            value = den.specialize(k_values)
            if value == 0:
                raise SingularParameterError(j, den)
            out.append(Fraction(k_values[cls]) / value)
        return tuple(out)


def reduce_to_minuscule(rs: RootSystem, lam, largest_index: bool = False) -> ReductionChain:
    """Greedy alcove descent from lam to the minuscule set.

    At each step the smallest index i in 0..n with a negative wall pairing is
    applied (the largest with ``largest_index=True``; the resulting polynomial
    recursion is word-independent, which tests exploit).
    """
    lam = tuple(int(c) for c in lam)
    affine = simple_affine_roots(rs)
    order = range(rs.rank, -1, -1) if largest_index else range(rs.rank + 1)
    cur = lam
    descent = []
    for _ in range(_DESCENT_CAP):
        neg = next(
            (i for i in order if affine_pair(rs, affine[i], cur) < 0), None
        )
        if neg is None:
            break
        cur = apply_affine_reflection(rs, neg, cur)
        descent.append(neg)
    else:
        raise AssertionError("alcove descent failed to terminate")

    word = tuple(reversed(descent))
    chain = []
    if word:
        chain.append(cur)
        for i in word[:-1]:
            chain.append(apply_affine_reflection(rs, i, chain[-1]))
        assert apply_affine_reflection(rs, word[-1], chain[-1]) == lam

    short_class = rs.param_classes["short"]
    denominators = []
    classes = []
    for i, mu in zip(word, chain):
        tilde = deformed_weight(rs, mu)
        den = affine_pair(rs, affine[i], tilde)
        if not isinstance(den, KPoly):
            den = KPoly.const(den)
        denominators.append(den)
        if i == 0:
            classes.append(short_class)  # the affine wall carries k_beta
        else:
            classes.append(rs.param_classes[rs.simple_roots[i - 1].length_class])
    return ReductionChain(
        weight=lam,
        minuscule=cur,
        word=word,
        chain=tuple(chain),
        denominators=tuple(denominators),
        coeff_classes=tuple(classes),
    )
