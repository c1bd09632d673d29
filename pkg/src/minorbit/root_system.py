"""Irreducible reduced root systems with all derived combinatorial data.

Roots are integer coordinate vectors over the simple-root basis.  The
simple-root numbering follows the usual Dynkin-diagram conventions (the
branch node of E-types is vertex 4, the short roots of B/F sit at the
high-numbered end, G2 has the long root first), so the coordinate strings
n_1...n_rank match the standard published diagrams.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InvalidTypeError

Root = tuple[int, ...]

_RANK_CONSTRAINTS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

BAD_PRIMES = {
    "A": frozenset(),
    "B": frozenset({2}),
    "C": frozenset({2}),
    "D": frozenset({2}),
    "E6": frozenset({2, 3}),
    "E7": frozenset({2, 3}),
    "E8": frozenset({2, 3, 5}),
    "F": frozenset({2, 3}),
    "G": frozenset({2, 3}),
}


@dataclass(frozen=True, order=True)
class TypeLabel:
    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in _RANK_CONSTRAINTS:
            raise InvalidTypeError(f"unknown series {self.series!r}")
        if not _RANK_CONSTRAINTS[self.series](self.rank):
            raise InvalidTypeError(f"rank {self.rank} invalid for series {self.series}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def parse_type(text: str) -> TypeLabel:
    """Parse labels like "A5", "e8", "G2" (letter case-insensitive)."""
    m = re.fullmatch(r"\s*([A-Za-z])(\d+)\s*", text)
    if not m:
        raise InvalidTypeError(f"cannot parse type label {text!r}")
    return TypeLabel(m.group(1).upper(), int(m.group(2)))


def _chain_cartan(n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_matrix(label: TypeLabel) -> list[list[int]]:
    """Cartan matrix with entries <alpha_i, alpha_j^vee>."""
    return [list(row) for row in _cartan_and_lengths(label)[0]]


def _cartan_and_lengths(label: TypeLabel) -> tuple[list[list[int]], list[int], int]:
    """(cartan, squared length of each simple root, max squared length r).

    Lengths are normalized so the short roots have squared length 1.
    """
    s, n = label.series, label.rank
    if s == "A":
        return _chain_cartan(n), [1] * n, 1
    if s == "B":
        c = _chain_cartan(n)
        c[n - 2][n - 1] = -2  # alpha_{n-1} long, alpha_n short
        return c, [2] * (n - 1) + [1], 2
    if s == "C":
        c = _chain_cartan(n)
        c[n - 1][n - 2] = -2  # alpha_n long, the rest short
        return c, [1] * (n - 1) + [2], 2
    if s == "D":
        c = _chain_cartan(n - 1)
        for row in c:
            row.append(0)
        c.append([0] * n)
        c[n - 1][n - 1] = 2
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1  # fork tips n-1, n on vertex n-2
        return c, [1] * n, 1
    if s == "E":
        c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        bonds = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if n >= 7:
            bonds.append((6, 7))
        if n == 8:
            bonds.append((7, 8))
        for i, j in bonds:
            c[i - 1][j - 1] = c[j - 1][i - 1] = -1
        return c, [1] * n, 1
    if s == "F":
        c = _chain_cartan(4)
        c[1][2] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        return c, [2, 2, 1, 1], 2
    # G2: alpha_1 long, alpha_2 short, triple bond
    return [[2, -3], [-1, 2]], [3, 1], 3


def _degrees(label: TypeLabel) -> tuple[int, ...]:
    s, n = label.series, label.rank
    if s == "A":
        return tuple(range(2, n + 2))
    if s in ("B", "C"):
        return tuple(2 * i for i in range(1, n + 1))
    if s == "D":
        return tuple(sorted([2 * i for i in range(1, n)] + [n]))
    if s == "E":
        return {6: (2, 5, 6, 8, 9, 12), 7: (2, 6, 8, 10, 12, 14, 18), 8: (2, 8, 12, 14, 18, 20, 24, 30)}[n]
    if s == "F":
        return (2, 6, 8, 12)
    return (2, 6)


def _bad_primes(label: TypeLabel) -> frozenset[int]:
    if label.series == "E":
        return BAD_PRIMES[f"E{label.rank}"]
    return BAD_PRIMES[label.series]


@dataclass(frozen=True)
class RootSystem:
    type_label: TypeLabel
    cartan: tuple[tuple[int, ...], ...]
    r: int
    simple_lengths: tuple[int, ...]
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    long_simple_indices: tuple[int, ...]
    h: int
    h_dual: int
    degrees: tuple[int, ...]
    bad_primes: frozenset[int]
    _root_set: frozenset[Root]
    _bilinear: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.type_label.rank

    def is_root(self, v: Root) -> bool:
        return v in self._root_set

    def bilinear(self, a: Root, b: Root) -> int:
        """Twice the invariant scalar product (a|b), as an integer."""
        bl = self._bilinear
        return sum(ai * sum(bj * bl[i][j] for j, bj in enumerate(b) if bj) for i, ai in enumerate(a) if ai)

    def pairing(self, a: Root, b: Root) -> int:
        """<a, b^vee> = 2(a|b)/(b|b) for a root b."""
        num = 2 * self.bilinear(a, b)
        den = self.bilinear(b, b)
        if num % den:
            raise DomainError("pairing is not integral; b is not a root")
        return num // den

    def reflect(self, a: Root, b: Root) -> Root:
        """Image of a under the reflection in the root b."""
        c = self.pairing(a, b)
        return tuple(ai - c * bi for ai, bi in zip(a, b))


def height(root: Root) -> int:
    return sum(root)


@lru_cache(maxsize=None)
def build(label: TypeLabel) -> RootSystem:
    """Construct the full root system of the given irreducible type."""
    cartan, lengths, r = _cartan_and_lengths(label)
    n = label.rank
    bilinear = [[cartan[i][j] * lengths[j] for j in range(n)] for i in range(n)]
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    # closure of the simple roots under the simple reflections
    seen: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt: list[Root] = []
        for root in frontier:
            for j in range(n):
                c = sum(root[i] * cartan[i][j] for i in range(n) if root[i])
                image = tuple(ri - c if i == j else ri for i, ri in enumerate(root))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt

    positive = sorted((v for v in seen if all(x >= 0 for x in v)), key=lambda v: (height(v), v))
    if 2 * len(positive) != len(seen):
        raise InvalidTypeError(f"root enumeration failed for {label}")
    roots = tuple(positive) + tuple(tuple(-x for x in v) for v in positive)

    h = len(seen) // n
    long_simple = tuple(i for i in range(n) if lengths[i] == r)
    highest = positive[-1]
    h_dual = 1 + _dual_height(highest, lengths, r)

    return RootSystem(
        type_label=label,
        cartan=tuple(tuple(row) for row in cartan),
        r=r,
        simple_lengths=tuple(lengths),
        roots=roots,
        positive_roots=tuple(positive),
        simple_roots=tuple(simple),
        long_simple_indices=long_simple,
        h=h,
        h_dual=h_dual,
        degrees=_degrees(label),
        bad_primes=_bad_primes(label),
        _root_set=frozenset(roots),
        _bilinear=tuple(tuple(row) for row in bilinear),
    )


def build_from_string(text: str) -> RootSystem:
    return build(parse_type(text))


def highest_root(rs: RootSystem) -> Root:
    """The unique maximal root; its coordinates dominate every positive root."""
    return rs.positive_roots[-1]


def is_long(rs: RootSystem, root: Root) -> bool:
    """True iff the root has maximal squared length.

    Equivalently (and this is asserted by the tests): r divides every
    coordinate sitting at a short simple-root position.
    """
    if not rs.is_root(root):
        raise DomainError(f"{root} is not a root of {rs.type_label}")
    return rs.bilinear(root, root) == 2 * rs.r


def _dual_height(root: Root, lengths: list[int] | tuple[int, ...], r: int) -> int:
    total_long = sum(c for c, length in zip(root, lengths) if length == r)
    total_short = sum(c for c, length in zip(root, lengths) if length != r)
    if total_short % r:
        raise DomainError(f"{root} is not a long root")
    return total_long + total_short // r


def dual_height(rs: RootSystem, root: Root) -> int:
    """Height of the coroot of a long root."""
    if not rs.is_root(root) or not is_long(rs, root):
        raise DomainError(f"dual height is defined on long roots only, got {root}")
    return _dual_height(root, rs.simple_lengths, rs.r)


def cartan_of_subset(rs: RootSystem, indices: tuple[int, ...] | list[int]) -> list[list[int]]:
    """Principal submatrix of the Cartan matrix on a vertex subset."""
    for i in indices:
        if not 0 <= i < rs.rank:
            raise DomainError(f"index {i} out of range")
    return [[rs.cartan[i][j] for j in indices] for i in indices]


def _classify_simply_laced(cartan_sub: list[list[int]]) -> TypeLabel:
    """Identify a connected simply-laced Cartan matrix as A/D/E."""
    k = len(cartan_sub)
    adj = {i: [j for j in range(k) if j != i and cartan_sub[i][j]] for i in range(k)}
    for i in range(k):
        for j in adj[i]:
            if cartan_sub[i][j] != -1 or cartan_sub[j][i] != -1:
                raise DomainError("subdiagram is not simply laced")
    edges = sum(len(v) for v in adj.values()) // 2
    if edges != k - 1:
        raise DomainError("subdiagram is not a tree")
    reached = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in reached:
                reached.add(j)
                stack.append(j)
    if len(reached) != k:
        raise DomainError("subdiagram is not connected")

    forks = [i for i in range(k) if len(adj[i]) >= 3]
    if not forks:
        return TypeLabel("A", k)
    if len(forks) > 1 or len(adj[forks[0]]) > 3:
        raise DomainError("subdiagram is not of finite type")
    center = forks[0]
    branch_sizes = []
    for start in adj[center]:
        size, prev, cur = 1, center, start
        while True:
            ahead = [j for j in adj[cur] if j != prev]
            if not ahead:
                break
            prev, cur = cur, ahead[0]
            size += 1
        branch_sizes.append(size)
    a, b, c = sorted(branch_sizes)
    if (a, b) == (1, 1):
        return TypeLabel("D", c + 3)
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return TypeLabel("E", c + 4)
    raise DomainError("subdiagram is not of finite type")


def long_simple_subsystem(rs: RootSystem) -> TypeLabel:
    """Type of the root subsystem generated by the long simple roots."""
    return _classify_simply_laced(cartan_of_subset(rs, rs.long_simple_indices))
