"""Exponential sums, Cherednik operators, and the polynomial recursion.

Everything here is exact.  Two scalar modes are supported: numeric (Fraction
coefficients, parameters assigned rational values) for the operators and the
nonsymmetric polynomials, and cleared-symbolic (KPoly coefficients) where each
recursion step is multiplied through by its denominator so that no division in
the parameters ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine import apply_affine_reflection, deformed_weight, reduce_to_minuscule
from .errors import ResourceGuardError
from .kpoly import KPoly, is_nonneg_integral
from .root_system import ORBIT_ENUMERATION_GUARD, Root, RootSystem

SUBSET_SUM_GUARD = 22


class ExpSum:
    """A finite formal sum of exponentials: sparse map weight -> coefficient.

    Coefficients are Fractions in numeric mode or KPoly values in symbolic
    mode; zero coefficients are never stored, so equality is exact.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mu, c in terms.items():
                if c:
                    clean[tuple(mu)] = c
        self._terms = clean

    @classmethod
    def basis(cls, mu, coeff=Fraction(1)) -> "ExpSum":
        return cls({tuple(mu): coeff})

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, mu):
        return self._terms.get(tuple(mu), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExpSum):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "ExpSum") -> "ExpSum":
        terms = dict(self._terms)
        for mu, c in other._terms.items():
            cur = terms.get(mu)
            terms[mu] = c if cur is None else cur + c
        return ExpSum(terms)

    def __sub__(self, other: "ExpSum") -> "ExpSum":
        terms = dict(self._terms)
        for mu, c in other._terms.items():
            cur = terms.get(mu)
            terms[mu] = -c if cur is None else cur - c
        return ExpSum(terms)

    def __neg__(self) -> "ExpSum":
        return ExpSum({mu: -c for mu, c in self._terms.items()})

    def scale(self, factor) -> "ExpSum":
        if not factor:
            return ExpSum()
        return ExpSum({mu: factor * c for mu, c in self._terms.items()})

    def map_weights(self, fn) -> "ExpSum":
        # fn must be injective on the support (reflections are)
        return ExpSum({fn(mu): c for mu, c in self._terms.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{mu}: {c}" for mu, c in sorted(self._terms.items()))
        return f"ExpSum({{{inner}}})"


def act_reflection(rs: RootSystem, i: int, f: ExpSum) -> ExpSum:
    """Relabel e^mu -> e^{s_i mu} for i in 0..n; coefficients untouched."""
    return f.map_weights(lambda mu: apply_affine_reflection(rs, i, mu))


def act_root_string(rs: RootSystem, alpha: Root, f: ExpSum) -> ExpSum:
    """The divided-difference operator (1 - s_alpha) / (1 - e^{-alpha}).

    On e^mu with r = (alpha^vee, mu) this is the closed-form string
    sum_{j=0}^{r-1} e^{mu - j alpha} for r > 0, zero for r = 0, and
    -sum_{j=1}^{-r} e^{mu + j alpha} for r < 0.
    """
    fw = alpha.fw_coords
    out = {}
    for mu, c in f.items():
        r = rs.pair_coroot(alpha, mu)
        if r > 0:
            steps = range(0, -r, -1)
        elif r < 0:
            steps = range(1, 1 - r)
            c = -c
        else:
            continue
        for j in steps:
            nu = tuple(m + j * a for m, a in zip(mu, fw))
            cur = out.get(nu)
            out[nu] = c if cur is None else cur + c
    return ExpSum(out)


class CherednikContext:
    """A root system together with a numeric parameter assignment.

    ``k`` maps parameter class index (0 = short, 1 = long) to a Fraction.
    ``rho`` is the k-weighted half sum of positive roots in fundamental-weight
    coordinates; at k = 1 it is the classical half sum (all coordinates 1).
    """

    def __init__(self, rs: RootSystem, k=None):
        self.rs = rs
        if k is None:
            k = {}
        self.k = {0: Fraction(k.get(0, 1)), 1: Fraction(k.get(1, 1))}
        n = rs.rank
        rho = [Fraction(0)] * n
        weighted = []
        for alpha in rs.positive_roots:
            ka = self.k[rs.param_classes[alpha.length_class]]
            weighted.append((alpha, ka))
            for j, fcoord in enumerate(alpha.fw_coords):
                if fcoord:
                    rho[j] += Fraction(ka * fcoord, 2)
        self.rho = tuple(rho)
        self._weighted_roots = tuple(weighted)

    def k_of(self, alpha: Root) -> Fraction:
        return self.k[self.rs.param_classes[alpha.length_class]]


def cherednik_apply(ctx: CherednikContext, y, f: ExpSum) -> ExpSum:
    """The commuting differential-reflection operator attached to y.

    D_y = d_y + sum over positive alpha of (y, alpha) k_alpha times the root
    string operator, minus (y, rho); d_y scales e^mu by (mu, y).
    """
    rs = ctx.rs
    y = tuple(Fraction(c) for c in y)
    rho_pair = rs.pair_inner(y, ctx.rho)
    terms = {}
    for mu, c in f.items():
        scalar = rs.pair_inner(mu, y) - rho_pair
        if scalar:
            terms[mu] = scalar * c
    out = ExpSum(terms)
    for alpha, ka in ctx._weighted_roots:
        factor = ka * rs.pair_inner(y, alpha.fw_coords)
        if factor:
            out = out + act_root_string(rs, alpha, f).scale(factor)
    return out


def affine_cherednik_apply(ctx: CherednikContext, v, f: ExpSum) -> ExpSum:
    """Operator for an affine vector v = (r, y): D_y + r * identity."""
    r, y = v
    out = cherednik_apply(ctx, y, f)
    if r:
        out = out + f.scale(Fraction(r))
    return out


def reflect_affine_vector(rs: RootSystem, v):
    """s_0 acting on an affine vector (r, y): (r + (y, beta), s_beta y)."""
    r, y = v
    y = tuple(Fraction(c) for c in y)
    shift = rs.pair_inner(y, rs.beta.fw_coords)
    return (Fraction(r) + shift, rs.reflect_root(rs.beta, y))


# -- the recursion -------------------------------------------------------------


def nonsymmetric_poly(ctx: CherednikContext, lam) -> ExpSum:
    """Simultaneous eigenfunction of the Cherednik operators with leading
    term e^lam, built by walking the reduction word with intertwiners.

    Numeric mode; raises SingularParameterError when the parameter assignment
    hits a pole of a step coefficient.
    """
    chain = reduce_to_minuscule(ctx.rs, lam)
    coeffs = chain.coeffs_at(ctx.k)
    f = ExpSum.basis(chain.minuscule)
    for i, c in zip(chain.word, coeffs):
        f = act_reflection(ctx.rs, i, f) + f.scale(c)
    return f


def nonsymmetric_poly_cleared(rs: RootSystem, lam):
    """Denominator-free form of the recursion, fully symbolic.

    Returns (sum, denom): each step applies (d_j s_{i_j} + k_{i_j}) instead of
    (s_{i_j} + k_{i_j}/d_j), and denom is the product of the d_j; the
    coefficient of e^lam in the sum equals denom exactly.
    """
    chain = reduce_to_minuscule(rs, lam)
    f = ExpSum.basis(chain.minuscule, KPoly.one())
    denom = KPoly.one()
    for i, den, cls in zip(chain.word, chain.denominators, chain.coeff_classes):
        f = act_reflection(rs, i, f).scale(den) + f.scale(KPoly.var(cls))
        denom = denom * den
    return f, denom


# -- symmetrization ------------------------------------------------------------


def weyl_group_words(rs: RootSystem):
    """One reduced-ish word per finite Weyl group element (BFS transversal)."""
    if rs.w0_order > ORBIT_ENUMERATION_GUARD:
        raise ResourceGuardError(
            f"group enumeration refused for |W0| = {rs.w0_order}"
        )
    seed = tuple([1] * rs.rank)  # regular, so the orbit is the full group
    words = {seed: ()}
    frontier = [seed]
    while frontier:
        nxt = []
        for vec in frontier:
            base = words[vec]
            for i in range(1, rs.rank + 1):
                img = rs.reflect_simple(i, vec)
                if img not in words:
                    words[img] = (i,) + base
                    nxt.append(img)
        frontier = nxt
    assert len(words) == rs.w0_order
    return tuple(words.values())


def act_word(rs: RootSystem, word, f: ExpSum) -> ExpSum:
    """Act by the product s_{word[0]} s_{word[1]} ... (rightmost first)."""
    for i in reversed(word):
        f = act_reflection(rs, i, f)
    return f


def symmetrize_full(rs: RootSystem, f: ExpSum) -> ExpSum:
    """The plain sum of w(f) over the whole finite Weyl group.

    Computed by orbit grouping: the coefficient of e^mu in the sum equals
    |stab(mu)| times the sum of the coefficients of f over the orbit of mu,
    which avoids enumerating the group.
    """
    acc = {}
    for mu, c in f.items():
        dom, _ = rs.dominant_representative(mu)
        cur = acc.get(dom)
        acc[dom] = c if cur is None else cur + c
    out = {}
    for dom, total in acc.items():
        if not total:
            continue
        value = total * rs.stabilizer_order(dom)
        for nu in rs.weyl_orbit(dom):
            out[nu] = value
    return ExpSum(out)


def symmetrize(rs: RootSystem, f: ExpSum, lam) -> ExpSum:
    """(|orbit of lam| / |W0|) times the full Weyl-group symmetrization."""
    scale = Fraction(rs.orbit_size(lam), rs.w0_order)
    return symmetrize_full(rs, f).scale(scale)


# -- characters and multiplicities ----------------------------------------------


def _require_dominant(lam):
    if any(c < 0 for c in lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    return tuple(int(c) for c in lam)


def multiplicity_table(rs: RootSystem, lam):
    """Weight multiplicities of the irreducible with highest weight lam,
    keyed by dominant representative.

    Runs the recursion at all parameters 1 and symmetrizes by orbit grouping;
    every value is a positive integer.
    """
    lam = _require_dominant(lam)
    ctx = CherednikContext(rs, {0: 1, 1: 1})
    f = nonsymmetric_poly(ctx, lam)
    acc = {}
    for mu, c in f.items():
        dom, _ = rs.dominant_representative(mu)
        cur = acc.get(dom)
        acc[dom] = c if cur is None else cur + c
    lam_orbit = rs.orbit_size(lam)
    table = {}
    for dom, total in acc.items():
        if not total:
            continue
        value = Fraction(lam_orbit, rs.orbit_size(dom)) * total
        assert value.denominator == 1 and value > 0
        table[dom] = int(value)
    assert table.get(lam) == 1
    return table

def character(rs: RootSystem, lam) -> ExpSum:
    """Full character: every weight of the irreducible with its multiplicity."""
    table = multiplicity_table(rs, lam)
    out = {}
    for dom, m in table.items():
        value = Fraction(m)
        for nu in rs.weyl_orbit(dom):
            out[nu] = value
    return ExpSum(out)


def multiplicity(rs: RootSystem, lam, mu) -> int:
    """Multiplicity of mu (any Weyl translate) in the irreducible of highest
    weight lam; 0 when mu is not a weight of it."""
    lam = _require_dominant(lam)
    dom, _ = rs.dominant_representative(mu)
    return multiplicity_table(rs, lam).get(dom, 0)


def dimension(rs: RootSystem, lam) -> int:
    """Sum of all multiplicities over the full orbit expansion."""
    return sum(
        m * rs.orbit_size(dom) for dom, m in multiplicity_table(rs, lam).items()
    )


# -- the deletion expansion ------------------------------------------------------


def subset_sum_table(rs: RootSystem, lam):
    """For each dominant weight class, the sum of step-coefficient products
    over all deletion subsets of the reduction word landing in that class.

    Walking the word with letters either applied or deleted: a subset J
    contributes the product of the coefficients of the deleted steps, and the
    surviving letters move the minuscule representative to some weight whose
    dominant representative keys the contribution.  All parameters are 1.
    """
    lam = _require_dominant(lam)
    chain = reduce_to_minuscule(rs, lam)
    m = len(chain.word)
    if m > SUBSET_SUM_GUARD:
        raise ResourceGuardError(
            f"deletion expansion refused for word length {m} > "
            f"{SUBSET_SUM_GUARD}; use the operator path instead"
        )
    coeffs = chain.coeffs_at({0: Fraction(1), 1: Fraction(1)})
    raw = {}

    def walk(t, weight, product):
        if t == m:
            cur = raw.get(weight)
            raw[weight] = product if cur is None else cur + product
            return
        walk(t + 1, apply_affine_reflection(rs, chain.word[t], weight), product)
        walk(t + 1, weight, product * coeffs[t])

    walk(0, chain.minuscule, Fraction(1))
    table = {}
    for weight, total in raw.items():
        dom, _ = rs.dominant_representative(weight)
        cur = table.get(dom)
        table[dom] = total if cur is None else cur + total
    return table


def multiplicity_subset_sum(rs: RootSystem, lam, mu) -> Fraction:
    """Multiplicity of mu via the deletion expansion: the orbit-size ratio
    times the sum of coefficient products over qualifying subsets."""
    lam = _require_dominant(lam)
    dom, _ = rs.dominant_representative(mu)
    total = subset_sum_table(rs, lam).get(dom, Fraction(0))
    return Fraction(rs.orbit_size(lam), rs.orbit_size(dom)) * total


# -- positivity -------------------------------------------------------------------


@dataclass(frozen=True)
class PositivityReport:
    weight: tuple
    scale_poly: KPoly          # the clearing constant
    scale_ok: bool
    coefficients: dict         # weight -> KPoly of the cleared symmetric sum
    failures: tuple
    passed: bool


def clearing_constant(rs: RootSystem, lam) -> KPoly:
    """Stabilizer order of lam times the product of all step denominators;
    multiplying the symmetric polynomial by it clears every denominator."""
    lam = _require_dominant(lam)
    chain = reduce_to_minuscule(rs, lam)
    out = KPoly.const(rs.stabilizer_order(lam))
    for den in chain.denominators:
        out = out * den
    return out


def cleared_symmetric_sum(rs: RootSystem, lam) -> ExpSum:
    """The symmetric polynomial scaled by the clearing constant: the plain
    Weyl-group symmetrization of the denominator-free recursion output."""
    lam = _require_dominant(lam)
    f, _ = nonsymmetric_poly_cleared(rs, lam)
    return symmetrize_full(rs, f)


def verify_positivity(rs: RootSystem, lam) -> PositivityReport:
    """Certificate that the clearing constant and every coefficient of the
    cleared symmetric polynomial have non-negative integer coefficients."""
    lam = _require_dominant(lam)
    scale = clearing_constant(rs, lam)
    table = cleared_symmetric_sum(rs, lam)
    coefficients = dict(table.items())
    failures = tuple(
        sorted(mu for mu, p in coefficients.items() if not is_nonneg_integral(p))
    )
    scale_ok = is_nonneg_integral(scale)
    return PositivityReport(
        weight=lam,
        scale_poly=scale,
        scale_ok=scale_ok,
        coefficients=coefficients,
        failures=failures,
        passed=scale_ok and not failures,
    )
