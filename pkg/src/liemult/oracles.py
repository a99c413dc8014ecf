"""Independent classical cross-checks: Freudenthal's multiplicity recursion,
the Weyl dimension formula, and a breadth-first shortest-word search.

These deliberately share nothing with the recursion engine beyond the root
system itself, so agreement between the two paths is meaningful evidence.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import product

from .affine import is_minuscule, apply_affine_reflection
from .errors import ResourceGuardError
from .root_system import RootSystem

BFS_NODE_BOUND = 10**6


def dominant_weights_below(rs: RootSystem, lam):
    """All dominant mu with lam - mu a non-negative integer combination of
    simple roots, sorted by increasing combination height (lam first)."""
    n = rs.rank
    lam = tuple(int(c) for c in lam)
    # mu dominant forces the simple-root coefficient vector into a box
    bounds = []
    for i in range(n):
        top = sum(rs.inverse_cartan[i][j] * lam[j] for j in range(n))
        bounds.append(int(top))
    A = rs.cartan_matrix
    found = []
    for m in product(*(range(b + 1) for b in bounds)):
        mu = tuple(
            lam[j] - sum(m[i] * A[j][i] for i in range(n)) for j in range(n)
        )
        if all(c >= 0 for c in mu):
            found.append((sum(m), mu))
    found.sort()
    return [mu for _, mu in found]


def freudenthal(rs: RootSystem, lam):
    """Exact multiplicity table of the irreducible with highest weight lam,
    keyed by dominant weight, via Freudenthal's recursion.

    ((lam+rho, lam+rho) - (mu+rho, mu+rho)) * m(mu)
        = 2 * sum over positive alpha, j >= 1 of (mu + j alpha, alpha) * m(mu + j alpha)
    with rho the half sum of positive roots, processed downward from lam.
    """
    if any(c < 0 for c in lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    rho = (1,) * rs.rank
    lam = tuple(int(c) for c in lam)

    def shifted_norm(x):
        v = tuple(a + b for a, b in zip(x, rho))
        return rs.pair_inner(v, v)

    top_norm = shifted_norm(lam)
    table = {lam: 1}
    for mu in dominant_weights_below(rs, lam)[1:]:
        total = Fraction(0)
        for alpha in rs.positive_roots:
            fw = alpha.fw_coords
            j = 1
            while True:
                nu = tuple(m + j * a for m, a in zip(mu, fw))
                dom, _ = rs.dominant_representative(nu)
                mult = table.get(dom)
                if mult is None:
                    break  # weight strings have no gaps
                total += rs.pair_inner(nu, fw) * mult
                j += 1
        value = 2 * total / (top_norm - shifted_norm(mu))
        assert value.denominator == 1 and value > 0
        table[mu] = int(value)
    return table


def weyl_dimension(rs: RootSystem, lam) -> int:
    """Dimension of the irreducible with highest weight lam, by the product
    over positive roots of (lam+rho, alpha^vee) / (rho, alpha^vee)."""
    if any(c < 0 for c in lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    shifted = tuple(int(c) + 1 for c in lam)
    dim = Fraction(1)
    for alpha in rs.positive_roots:
        dim *= Fraction(
            rs.pair_coroot(alpha, shifted), sum(alpha.coroot_coords)
        )
    assert dim.denominator == 1
    return int(dim)


def bfs_shortest_word(rs: RootSystem, lam, node_bound: int = BFS_NODE_BOUND):
    """Shortest number of affine-wall reflections taking lam into the
    minuscule set, found by breadth-first search; returns (length, terminal).
    """
    start = tuple(int(c) for c in lam)
    if is_minuscule(rs, start):
        return 0, start
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        weight, dist = queue.popleft()
        for i in range(rs.rank + 1):
            img = apply_affine_reflection(rs, i, weight)
            if img in seen:
                continue
            if is_minuscule(rs, img):
                return dist + 1, img
            seen.add(img)
            if len(seen) > node_bound:
                raise ResourceGuardError(
                    f"shortest-word search exceeded {node_bound} nodes"
                )
            queue.append((img, dist + 1))
    raise AssertionError("search exhausted without reaching the minuscule set")
