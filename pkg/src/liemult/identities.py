"""Seeded randomized checks of the operator identities.

Each check runs a number of independent cases and returns (passed, detail);
all comparisons are exact equalities of exponential sums, never approximate.
The CLI `verify` command and the acceptance suite both drive these.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .affine import deformed_weight
from .engine import (
    CherednikContext,
    ExpSum,
    act_reflection,
    affine_cherednik_apply,
    cherednik_apply,
    nonsymmetric_poly,
    reflect_affine_vector,
    multiplicity_table,
    dimension,
)
from .oracles import freudenthal, weyl_dimension
from .root_system import RootSystem


def random_parameter(rng: Random) -> Fraction:
    """A random rational in (0, 3]; positive values never hit a pole of the
    recursion denominators."""
    den = rng.randint(1, 8)
    return Fraction(rng.randint(1, 3 * den), den)


def random_context(rs: RootSystem, rng: Random) -> CherednikContext:
    return CherednikContext(
        rs, {0: random_parameter(rng), 1: random_parameter(rng)}
    )


def random_weight(rs: RootSystem, rng: Random, span: int = 3):
    return tuple(rng.randint(-span, span) for _ in range(rs.rank))


def random_vector(rs: RootSystem, rng: Random):
    return tuple(
        Fraction(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(rs.rank)
    )


def random_expsum(rs: RootSystem, rng: Random) -> ExpSum:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        mu = random_weight(rs, rng)
        terms[mu] = Fraction(rng.choice([c for c in range(-5, 6) if c]), rng.randint(1, 4))
    return ExpSum(terms)


def check_commutativity(rs: RootSystem, rng: Random, cases: int):
    """D_x D_y f = D_y D_x f on random f, x, y, k."""
    for n in range(cases):
        ctx = random_context(rs, rng)
        f = random_expsum(rs, rng)
        x = random_vector(rs, rng)
        y = random_vector(rs, rng)
        left = cherednik_apply(ctx, x, cherednik_apply(ctx, y, f))
        right = cherednik_apply(ctx, y, cherednik_apply(ctx, x, f))
        if left != right:
            return False, f"case {n}: operators fail to commute on {f!r}"
    return True, f"{cases} cases"


def check_finite_intertwiner(rs: RootSystem, rng: Random, cases: int):
    """s_i D_y - D_{s_i y} s_i acts as the scalar -k_i (y, alpha_i)."""
    for n in range(cases):
        ctx = random_context(rs, rng)
        f = random_expsum(rs, rng)
        y = random_vector(rs, rng)
        i = rng.randint(1, rs.rank)
        alpha = rs.simple_roots[i - 1]
        left = act_reflection(rs, i, cherednik_apply(ctx, y, f))
        right = cherednik_apply(
            ctx, rs.reflect_simple(i, y), act_reflection(rs, i, f)
        )
        scalar = -ctx.k_of(alpha) * rs.pair_inner(y, alpha.fw_coords)
        if left - right != f.scale(scalar):
            return False, f"case {n}: finite intertwiner fails at i={i}"
    return True, f"{cases} cases"


def check_affine_intertwiner(rs: RootSystem, rng: Random, cases: int):
    """D_v s_0 - s_0 D_{s_0 v} acts as the scalar k_beta (y, beta)."""
    for n in range(cases):
        ctx = random_context(rs, rng)
        f = random_expsum(rs, rng)
        v = (Fraction(rng.randint(-3, 3)), random_vector(rs, rng))
        left = affine_cherednik_apply(ctx, v, act_reflection(rs, 0, f))
        right = act_reflection(
            rs, 0, affine_cherednik_apply(ctx, reflect_affine_vector(rs, v), f)
        )
        scalar = ctx.k_of(rs.beta) * rs.pair_inner(v[1], rs.beta.fw_coords)
        if left - right != f.scale(scalar):
            return False, f"case {n}: affine intertwiner fails"
    return True, f"{cases} cases"


def check_eigen_equation(rs: RootSystem, rng: Random, cases: int):
    """The recursion output is a simultaneous eigenfunction: D_y applied to it
    scales by (y, deformed weight), for y over the fundamental-weight basis."""
    for n in range(cases):
        ctx = random_context(rs, rng)
        lam = random_weight(rs, rng)
        poly = nonsymmetric_poly(ctx, lam)
        tilde = tuple(p.specialize(ctx.k) for p in deformed_weight(rs, lam))
        for t in range(rs.rank):
            y = tuple(Fraction(int(t == j)) for j in range(rs.rank))
            eig = rs.pair_inner(y, tilde)
            if cherednik_apply(ctx, y, poly) != poly.scale(eig):
                return False, f"case {n}: eigen-equation fails for {lam}"
    return True, f"{cases} cases"


def check_oracle_equivalence(rs: RootSystem, bound: int = 2):
    """Recursion multiplicities equal Freudenthal's, and total dimension
    matches the Weyl dimension formula, over a small dominant grid."""
    checked = 0
    for lam in _dominant_grid(rs.rank, bound):
        if multiplicity_table(rs, lam) != freudenthal(rs, lam):
            return False, f"multiplicity tables differ at {lam}"
        if dimension(rs, lam) != weyl_dimension(rs, lam):
            return False, f"dimension mismatch at {lam}"
        checked += 1
    return True, f"{checked} highest weights"


def _dominant_grid(rank: int, bound: int):
    if rank <= 2:
        span = range(bound + 1)
        if rank == 1:
            return [(a,) for a in span]
        return [(a, b) for a in span for b in span]
    out = []

    def rec(prefix, left):
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    rec([], bound)
    return out


ALL_CHECKS = (
    ("commutativity", check_commutativity),
    ("finite-intertwiner", check_finite_intertwiner),
    ("affine-intertwiner", check_affine_intertwiner),
    ("eigen-equation", check_eigen_equation),
)


def run_identity_suite(rs: RootSystem, seed: int, cases: int):
    """Run every identity check plus the oracle comparison with one seed.

    Returns a list of (name, passed, detail) triples; deterministic for a
    fixed seed.
    """
    results = []
    for name, check in ALL_CHECKS:
        rng = Random(seed)
        passed, detail = check(rs, rng, cases)
        results.append((name, passed, detail))
    passed, detail = check_oracle_equivalence(rs)
    results.append(("oracle-equivalence", passed, detail))
    return results
