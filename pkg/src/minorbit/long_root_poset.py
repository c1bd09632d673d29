"""The level grading on long roots and the boundary matrices it carries.

The long roots of an irreducible system form a graded poset: a long root
sits at level ht_coroot(highest) - ht_coroot(root), shifted down by one on
the negative side.  Multiplication by the Chern class of the minimal-orbit
resolution acts level by level; its matrices are assembled here from edge
coefficients that only depend on the root combinatorics.

Within a level, roots are listed in decreasing lexicographic order of the
absolute coordinate vector.  On positive levels this is exactly the order
of the published diagrams (coordinate strings read as words); mirroring it
through negation on negative levels makes the matrices in complementary
degrees literal transposes of each other.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError
from .root_system import Root, RootSystem, dual_height, is_long

__all__ = ["level", "levels", "edge_coefficient", "d_matrix", "middle_matrix", "dimension"]


def dimension(rs: RootSystem) -> int:
    """Complex dimension of the minimal nilpotent orbit, 2 h_dual - 2."""
    return 2 * rs.h_dual - 2


def level(rs: RootSystem, root: Root) -> int:
    """Grading of a long root, from 0 (highest root) to 2 h_dual - 3."""
    if not is_long(rs, root):
        raise DomainError(f"level is defined on long roots only, got {root}")
    top = rs.h_dual - 1
    if all(x >= 0 for x in root):
        return top - dual_height(rs, root)
    return top - dual_height(rs, root) - 1


def _level_sort_key(root: Root):
    # decreasing lex on |coords|; all members of one level share a sign
    return tuple(-abs(x) for x in root)


@lru_cache(maxsize=None)
def levels(rs: RootSystem) -> tuple[tuple[Root, ...], ...]:
    """All long roots bucketed by level, each level sorted for output."""
    buckets: dict[int, list[Root]] = {}
    for root in rs.roots:
        if is_long(rs, root):
            buckets.setdefault(level(rs, root), []).append(root)
    top = 2 * rs.h_dual - 3
    if sorted(buckets) != list(range(top + 1)):
        raise DomainError(f"level range broken for {rs.type_label}")
    return tuple(tuple(sorted(buckets[i], key=_level_sort_key)) for i in range(top + 1))


def edge_coefficient(rs: RootSystem, beta: Root, alpha: Root) -> int:
    """Multiplicity of the covering edge from beta down to alpha.

    beta and alpha must be long with level(alpha) = level(beta) + 1.
    Between the two middle levels (simple long roots to their negatives)
    the linking reflection may be non-simple: the coefficient is 2 on the
    pair (beta, -beta) and 1 when beta - alpha is a root.  Everywhere else
    an edge needs a simple root gamma with s_gamma(beta) = alpha, and the
    coefficient <beta, gamma^vee> is 1 for gamma long, r for gamma short.
    """
    if level(rs, alpha) != level(rs, beta) + 1:
        raise DomainError("edge coefficient needs level(alpha) = level(beta) + 1")
    if _is_simple(beta) and _is_simple(tuple(-x for x in alpha)):
        if alpha == tuple(-x for x in beta):
            return 2
        diff = tuple(b - a for b, a in zip(beta, alpha))
        return 1 if rs.is_root(diff) else 0
    for gamma in rs.simple_roots:
        if rs.bilinear(beta, gamma) > 0 and rs.reflect(beta, gamma) == alpha:
            return rs.pairing(beta, gamma)
    return 0


def _is_simple(root: Root) -> bool:
    return sum(root) == 1 and all(x in (0, 1) for x in root)


@lru_cache(maxsize=None)
def d_matrix(rs: RootSystem, i: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of the level-raising map from level i-1 to level i.

    Rows are indexed by level i, columns by level i-1, both in the level
    sort order; entry (alpha, beta) is the edge coefficient.
    """
    d = dimension(rs)
    if not 1 <= i <= d - 1:
        raise DomainError(f"matrix index {i} outside 1..{d - 1}")
    lv = levels(rs)
    return tuple(
        tuple(edge_coefficient(rs, beta, alpha) for beta in lv[i - 1]) for alpha in lv[i]
    )


def middle_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """The matrix between the two middle levels.

    Equals the Cartan matrix of the long-simple subsystem with the minus
    signs dropped, rows and columns both running through the long simple
    roots in index order.
    """
    return d_matrix(rs, rs.h_dual - 1)
