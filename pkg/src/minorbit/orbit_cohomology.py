"""Integral cohomology of minimal nilpotent orbits, assembled exactly.

The Gysin sequence of the C*-bundle resolving the orbit closure breaks the
cohomology into cokernels (even degrees) and kernels (odd degrees) of the
level-raising matrices of the long-root poset.  Everything else here is
bookkeeping around that: the closed-form alternative in type A, the cone
over a smooth projective curve, and cross-checks (middle group from the
lattice, bad-prime locality, the rational half).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import int_linalg, long_root_poset
from .errors import DomainError, InvariantFailureError
from .int_linalg import cokernel, kernel_rank
from .root_system import (
    RootSystem,
    TypeLabel,
    build,
    cartan_matrix,
    long_simple_subsystem,
)

__all__ = [
    "GradedAbelianGroup",
    "OrbitCohomology",
    "minimal_orbit_cohomology",
    "middle_via_lattice",
    "type_a_alternative",
    "cone_over_curve",
    "bad_torsion_report",
    "rational_half_check",
    "to_json_dict",
    "from_json_dict",
]


class GradedAbelianGroup:
    """Map degree -> (free rank, torsion invariant factors); absent = 0."""

    def __init__(self, entries: dict[int, tuple[int, tuple[int, ...]]]):
        clean: dict[int, tuple[int, tuple[int, ...]]] = {}
        for n, (free, torsion) in entries.items():
            torsion = tuple(torsion)
            for a, b in zip(torsion, torsion[1:]):
                if a < 2 or b % a:
                    raise DomainError(f"torsion {torsion} is not a divisibility chain")
            if torsion and torsion[0] < 2:
                raise DomainError(f"torsion {torsion} contains a unit")
            if free < 0:
                raise DomainError("negative free rank")
            if free or torsion:
                clean[n] = (free, torsion)
        self._entries = dict(sorted(clean.items()))

    def degrees(self) -> tuple[int, ...]:
        return tuple(self._entries)

    def free_rank(self, n: int) -> int:
        return self._entries.get(n, (0, ()))[0]

    def torsion(self, n: int) -> tuple[int, ...]:
        return self._entries.get(n, (0, ()))[1]

    def items(self):
        return self._entries.items()

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedAbelianGroup) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"GradedAbelianGroup({self._entries!r})"


@dataclass(frozen=True)
class OrbitCohomology:
    type_label: TypeLabel
    d: int
    h_dual: int
    table: GradedAbelianGroup


def minimal_orbit_cohomology(rs: RootSystem) -> OrbitCohomology:
    """H^*(minimal orbit, Z) over degrees 0 .. 2d-1, d = 2 h_dual - 2."""
    lv = long_root_poset.levels(rs)
    d = long_root_poset.dimension(rs)
    matrices = {i: [list(row) for row in long_root_poset.d_matrix(rs, i)] for i in range(1, d)}
    entries: dict[int, tuple[int, tuple[int, ...]]] = {}
    for i in range(d):
        if i == 0:
            # map from the zero module into Z^{|level 0|}
            free, torsion = len(lv[0]), ()
        else:
            free, torsion = cokernel(matrices[i])
        entries[2 * i] = (free, torsion)
        if i + 1 <= d - 1:
            entries[2 * i + 1] = (kernel_rank(matrices[i + 1]), ())
        else:
            # top degree: the map out of the last level is zero
            entries[2 * d - 1] = (len(lv[d - 1]), ())
    return OrbitCohomology(rs.type_label, d, rs.h_dual, GradedAbelianGroup(entries))


def middle_via_lattice(rs: RootSystem) -> tuple[int, ...]:
    """Invariant factors of the coweight/coroot quotient of the long-simple
    subsystem; an independent route to the torsion in degree d."""
    sub = long_simple_subsystem(rs)
    transposed = int_linalg.transpose(cartan_matrix(sub))
    free, torsion = cokernel(transposed)
    if free:
        raise InvariantFailureError("Cartan matrix of a finite type is singular")
    return torsion


def type_a_alternative(n: int) -> OrbitCohomology:
    """Cohomology for type A_{n-1} from the rank-one resolution over P^{n-1}.

    The orbit is the rank-one traceless matrices; the projectivized bundle
    route gives the closed form directly: Z in even degrees up to 2n-4 and
    odd degrees from 2n-1 to 4n-5, Z/n in the middle degree 2n-2.
    """
    if n < 2:
        raise DomainError("type A alternative needs n >= 2")
    entries: dict[int, tuple[int, tuple[int, ...]]] = {}
    for i in range(0, 2 * n - 3, 2):
        entries[i] = (1, ())
    entries[2 * n - 2] = (0, (n,))
    for i in range(2 * n - 1, 4 * n - 4, 2):
        entries[i] = (1, ())
    return OrbitCohomology(TypeLabel("A", n - 1), 2 * n - 2, n, GradedAbelianGroup(entries))


def cone_over_curve(g: int, c: int) -> GradedAbelianGroup:
    """Cohomology of the punctured cone over a smooth projective curve.

    g is the genus, c the degree of the contracted line bundle; the four
    graded pieces are Z, Z^2g, Z^2g + Z/c, Z.
    """
    if g < 0:
        raise DomainError("genus must be nonnegative")
    if c <= 0:
        raise DomainError("the contracted bundle degree must be positive")
    return GradedAbelianGroup(
        {
            0: (1, ()),
            1: (2 * g, ()),
            2: (2 * g, (c,) if c > 1 else ()),
            3: (1, ()),
        }
    )


def bad_torsion_report(oc: OrbitCohomology) -> dict[int, tuple[int, ...]]:
    """Primes dividing torsion away from the middle degree, with locations.

    Every such prime must be a bad prime of the type; a violation would
    falsify the computation and raises accordingly.
    """
    bad = build(oc.type_label).bad_primes
    found: dict[int, list[int]] = {}
    for n, (_, torsion) in oc.table.items():
        if n == oc.d:
            continue
        for t in torsion:
            for p in _prime_divisors(t):
                if p not in bad:
                    raise InvariantFailureError(
                        f"prime {p} divides torsion at degree {n} of {oc.type_label} "
                        f"but is not in the bad-prime set {sorted(bad)}"
                    )
                found.setdefault(p, [])
                if n not in found[p]:
                    found[p].append(n)
    return {p: tuple(sorted(ds)) for p, ds in sorted(found.items())}


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def to_json_dict(oc: OrbitCohomology) -> dict:
    """Schema-stable JSON form: degrees ascending, torsion ascending."""
    return {
        "type": str(oc.type_label),
        "d": oc.d,
        "h_dual": oc.h_dual,
        "H": [
            {"n": n, "rank": free, "torsion": list(torsion)}
            for n, (free, torsion) in oc.table.items()
        ],
    }


def from_json_dict(obj: dict) -> OrbitCohomology:
    from .root_system import parse_type

    entries = {e["n"]: (e["rank"], tuple(e["torsion"])) for e in obj["H"]}
    return OrbitCohomology(
        parse_type(obj["type"]), obj["d"], obj["h_dual"], GradedAbelianGroup(entries)
    )


def rational_half_check(rs: RootSystem, oc: OrbitCohomology) -> bool:
    """Check the free ranks below the middle against the Weyl-group degrees.

    The multiset of half-degrees carrying a free class below degree d must
    equal {d_i - 2} over the k smallest degrees, k = number of long simple
    roots.
    """
    k = len(rs.long_simple_indices)
    expected = Counter(d - 2 for d in sorted(rs.degrees)[:k])
    got: Counter[int] = Counter()
    for n, (free, _) in oc.table.items():
        if n % 2 == 0 and n < oc.d and free:
            got[n // 2] += free
    return got == expected
