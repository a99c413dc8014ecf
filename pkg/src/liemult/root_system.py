"""Finite irreducible root systems over exact rational arithmetic.

Conventions used throughout the package:

* weights are tuples of integers in the fundamental-weight basis, so
  ``lam[i] == (alpha_i^vee, lam)``;
* roots are stored in the simple-root basis, with fundamental-weight
  coordinates and simple-coroot coordinates cached on the object;
* short roots are normalized to squared length 2, hence ``beta^vee == beta``
  as vectors for the highest short root beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstructionError, ResourceGuardError

# full Weyl-orbit enumeration is refused above this group order
ORBIT_ENUMERATION_GUARD = 2 * 10**6

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        test = _ADMISSIBLE.get(self.series)
        if test is None or not test(self.rank):
            raise ConstructionError(f"inadmissible Cartan type {self.series}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ConstructionError(f"cannot parse Cartan type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root with its coordinate renderings precomputed.

    ``simple_coords`` is the expansion in simple roots, ``fw_coords`` the
    pairings against the simple coroots (both integer tuples), and
    ``coroot_coords`` the expansion of the coroot in simple coroots, so
    ``(root^vee, lam) = sum(coroot_coords[j] * lam[j])``.
    """

    simple_coords: tuple
    fw_coords: tuple
    coroot_coords: tuple
    length_sq: int

    @property
    def length_class(self) -> str:
        return "short" if self.length_sq == 2 else "long"

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords)


def _cartan_data(ct: CartanType):
    """Cartan matrix A[i][j] = (alpha_i^vee, alpha_j) and root lengths d_i
    (with (alpha_i, alpha_i) = 2 d_i, short roots d = 1)."""
    n = ct.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    d = [1] * n

    def bond(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    s = ct.series
    if s == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif s == "B":
        # chain of long roots ending in one short root
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)
        d = [2] * (n - 1) + [1]
    elif s == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)
        d = [1] * (n - 1) + [2]
    elif s == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif s == "E":
        # Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
        d = [2, 2, 1, 1]
    elif s == "G":
        bond(0, 1, -3, -1)
        d = [1, 3]
    return A, d


def _invert(matrix):
    """Exact inverse of a small integer matrix over Fractions."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _classify_weyl_order(A, nodes):
    """Order of the Weyl group of the (connected) diagram induced on nodes."""
    m = len(nodes)
    if m == 0:
        return 1
    if m == 1:
        return 2
    fact = 1
    for i in range(2, m + 1):
        fact *= i
    edges = []
    for a in range(m):
        for b in range(a + 1, m):
            prod = A[nodes[a]][nodes[b]] * A[nodes[b]][nodes[a]]
            if prod:
                edges.append((a, b, prod))
    if any(p == 3 for _, _, p in edges):
        return 12  # G2
    degree = [0] * m
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    doubles = [(a, b) for a, b, p in edges if p == 2]
    if doubles:
        a, b = doubles[0]
        if degree[a] == 1 or degree[b] == 1:
            return (2**m) * fact  # B/C chain
        return 1152  # F4
    if max(degree) <= 2:
        return fact * (m + 1)  # A chain
    # one trivalent node: D or E, told apart by the two shortest branches
    hub = degree.index(3)
    adj = {i: [] for i in range(m)}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    branch_lengths = []
    for start in adj[hub]:
        length, prev, cur = 1, hub, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        branch_lengths.append(length)
    branch_lengths.sort()
    if branch_lengths[0] == 1 and branch_lengths[1] == 1:
        return (2 ** (m - 1)) * fact  # D
    return {6: 51840, 7: 2903040, 8: 696729600}[m]  # E


class RootSystem:
    """Immutable container for the static geometry of one Cartan type.

    All pairings reduce to exact integer or Fraction arithmetic in the
    fundamental-weight / simple-root coordinate pair.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        n = self.rank = cartan_type.rank
        A, d = _cartan_data(cartan_type)
        self.cartan_matrix = tuple(tuple(row) for row in A)
        self.root_lengths = tuple(d)
        inv = _invert(A)
        self.inverse_cartan = tuple(tuple(row) for row in inv)
        # (omega_i, omega_j) = inverse_cartan[j][i] * d_j
        self._gram = tuple(
            tuple(inv[j][i] * d[j] for j in range(n)) for i in range(n)
        )
        # (alpha_i, alpha_j) = d_j * A[j][i]
        self._root_gram = tuple(
            tuple(d[j] * A[j][i] for j in range(n)) for i in range(n)
        )
        self.positive_roots = self._generate_positive_roots()
        self.beta = self._find_highest_short_root()
        self.w0_order = _classify_weyl_order(A, list(range(n)))
        self.param_classes = {"short": 0}
        if any(r.length_class == "long" for r in self.positive_roots):
            self.param_classes["long"] = 1
        self.simple_roots = tuple(
            sorted(
                (r for r in self.positive_roots if sum(r.simple_coords) == 1),
                key=lambda r: r.simple_coords.index(1),
            )
        )
        self._stab_cache = {}

    # -- construction helpers -------------------------------------------------

    def _make_root(self, coords) -> Root:
        n = self.rank
        A = self.cartan_matrix
        fw = tuple(sum(A[i][j] * coords[j] for j in range(n)) for i in range(n))
        length = sum(
            coords[i] * coords[j] * self._root_gram[i][j]
            for i in range(n) for j in range(n) if coords[i] and coords[j]
        )
        half = length // 2
        assert length in (2, 4, 6) and length == half * 2
        coroot = []
        for j in range(n):
            c = Fraction(coords[j] * self.root_lengths[j], half)
            assert c.denominator == 1
            coroot.append(int(c))
        return Root(tuple(coords), fw, tuple(coroot), length)

    def _generate_positive_roots(self):
        n = self.rank
        A = self.cartan_matrix
        seen = set()
        frontier = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    pairing = sum(A[i][j] * c[j] for j in range(n))
                    image = list(c)
                    image[i] -= pairing
                    image = tuple(image)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        positives = sorted(c for c in seen if all(x >= 0 for x in c))
        roots = tuple(self._make_root(c) for c in positives)
        assert len(seen) == 2 * len(roots)
        return roots

    def _find_highest_short_root(self) -> Root:
        shorts = [r for r in self.positive_roots if r.length_class == "short"]
        tops = [
            r for r in shorts
            if all(
                all(a >= b for a, b in zip(r.simple_coords, s.simple_coords))
                for s in shorts
            )
        ]
        assert len(tops) == 1, "highest short root must be unique"
        beta = tops[0]
        assert all(c >= 0 for c in beta.fw_coords), "highest short root is dominant"
        return beta

    # -- pairings --------------------------------------------------------------

    def pair_coroot(self, alpha: Root, lam) -> int:
        """(alpha^vee, lam), an exact integer for lam in the weight lattice."""
        return sum(c * x for c, x in zip(alpha.coroot_coords, lam))

    def pair_inner(self, x, y) -> Fraction:
        """Symmetric bilinear form on fundamental-weight coordinates."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._gram[i]
            for j, yj in enumerate(y):
                if yj:
                    total += Fraction(xi) * row[j] * yj
        return total

    def root_fw(self, alpha: Root):
        return alpha.fw_coords

    # -- Weyl group action -----------------------------------------------------

    def reflect_simple(self, i: int, lam):
        """Apply the reflection in the i-th simple root (1-based) to a weight
        or any vector in fundamental-weight coordinates."""
        j = i - 1
        pairing = lam[j]
        if not pairing:
            return tuple(lam)
        A = self.cartan_matrix
        return tuple(lam[t] - pairing * A[t][j] for t in range(self.rank))

    def reflect_root(self, alpha: Root, x):
        """Reflection in an arbitrary root, on fundamental-weight coordinates."""
        pairing = sum(c * v for c, v in zip(alpha.coroot_coords, x))
        if not pairing:
            return tuple(x)
        fw = alpha.fw_coords
        return tuple(v - pairing * f for v, f in zip(x, fw))

    def partition_by_beta(self):
        """Split the positive roots by their coroot pairing with beta.

        Returns (level0, level1, level2, prime_map) where level_i collects the
        alpha with (alpha^vee, beta) = i, level2 = [beta], and prime_map sends
        alpha to s_beta(alpha) on level0 and to -s_beta(alpha) on the rest.
        """
        by_coords = {r.simple_coords: r for r in self.positive_roots}
        negatives = {
            tuple(-c for c in r.simple_coords): r for r in self.positive_roots
        }
        beta_fw = self.beta.fw_coords
        levels = ([], [], [])
        prime = {}
        for r in self.positive_roots:
            pairing = self.pair_coroot(r, beta_fw)
            assert 0 <= pairing <= 2
            levels[pairing].append(r)
            reflected = self._reflect_root_coords(self.beta, r.simple_coords)
            if pairing == 0:
                prime[r] = by_coords[reflected]
            else:
                prime[r] = negatives[reflected]
        return levels[0], levels[1], levels[2], prime

    def _reflect_root_coords(self, alpha: Root, coords):
        pairing = self.pair_coroot(alpha, self._root_to_fw(coords))
        return tuple(
            c - pairing * a for c, a in zip(coords, alpha.simple_coords)
        )

    def _root_to_fw(self, coords):
        A = self.cartan_matrix
        n = self.rank
        return tuple(sum(A[i][j] * coords[j] for j in range(n)) for i in range(n))

    def weyl_orbit(self, lam):
        """Full finite Weyl orbit of a weight; guarded by the group order."""
        if self.w0_order > ORBIT_ENUMERATION_GUARD:
            raise ResourceGuardError(
                f"orbit enumeration refused for |W0| = {self.w0_order}"
            )
        lam = tuple(lam)
        orbit = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(1, self.rank + 1):
                    img = self.reflect_simple(i, mu)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        return orbit

    def dominant_representative(self, mu):
        """The dominant weight in the orbit of mu, with a word of 1-based
        simple-reflection indices that maps mu to it (applied left to right)."""
        cur = tuple(mu)
        word = []
        while True:
            neg = next((j for j in range(self.rank) if cur[j] < 0), None)
            if neg is None:
                return cur, word
            cur = self.reflect_simple(neg + 1, cur)
            word.append(neg + 1)

    def stabilizer_order(self, dominant) -> int:
        """Order of the stabilizer of a dominant weight (a parabolic subgroup)."""
        zeros = tuple(j for j in range(self.rank) if dominant[j] == 0)
        cached = self._stab_cache.get(zeros)
        if cached is not None:
            return cached
        remaining = set(zeros)
        order = 1
        while remaining:
            comp = [remaining.pop()]
            grow = True
            while grow:
                grow = False
                for node in list(remaining):
                    if any(self.cartan_matrix[node][c] for c in comp):
                        comp.append(node)
                        remaining.remove(node)
                        grow = True
            order *= _classify_weyl_order(self.cartan_matrix, comp)
        self._stab_cache[zeros] = order
        return order

    def orbit_size(self, lam) -> int:
        dom, _ = self.dominant_representative(lam)
        return self.w0_order // self.stabilizer_order(dom)

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def build_root_system(ct) -> RootSystem:
    """Construct the root system for a CartanType or a string like 'B2'."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return RootSystem(ct)
