"""Partition combinatorics behind the nilpotent orbits of GL_n.

Partitions are plain weakly-decreasing tuples of positive integers.  The
module covers the dominance order, the ell-regular/ell-restricted split,
the map sending a simple module label to its orbit (conjugation), the
row-and-column removal rule for degeneration pairs, and the resulting
multiplicity for adjacent orbit pairs.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import DomainError, InvariantFailureError
from .int_linalg import is_prime

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "parse_partition",
    "format_partition",
    "partitions_of",
    "conjugate",
    "dominance_le",
    "is_ell_regular",
    "is_ell_restricted",
    "springer_image",
    "psi",
    "row_column_reduce",
    "adjacent_in_dominance",
    "minimal_degeneration",
    "decomp_adjacent",
    "row_column_invariance_check",
]


def _validate(p: Partition) -> Partition:
    if any(x <= 0 for x in p):
        raise DomainError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError(f"partition parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts; exponents allowed, e.g. "2,1^3"."""
    parts: list[int] = []
    for chunk in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", chunk)
        if not m:
            raise DomainError(f"cannot parse partition {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return _validate(tuple(parts))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise DomainError("partitions of a negative integer")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(gen(n, n), reverse=True))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram."""
    _validate(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def dominance_le(mu: Partition, lam: Partition) -> bool:
    """mu <= lam in dominance: partial sums of mu never exceed those of lam."""
    _validate(mu)
    _validate(lam)
    if sum(mu) != sum(lam):
        raise DomainError("dominance compares partitions of the same integer")
    total_mu = total_lam = 0
    for i in range(max(len(mu), len(lam))):
        total_mu += mu[i] if i < len(mu) else 0
        total_lam += lam[i] if i < len(lam) else 0
        if total_mu > total_lam:
            return False
    return True


def is_ell_regular(p: Partition, ell: int) -> bool:
    """No part repeated ell times or more."""
    _validate(p)
    if ell < 2:
        raise DomainError("ell must be at least 2")
    return all(p.count(x) < ell for x in set(p))


def is_ell_restricted(p: Partition, ell: int) -> bool:
    """Conjugate is ell-regular."""
    return is_ell_regular(conjugate(p), ell)


def springer_image(n: int, ell: int) -> tuple[Partition, ...]:
    """Orbits hit by simple modules mod ell: the ell-restricted partitions."""
    if n < 1:
        raise DomainError("springer_image needs n >= 1")
    if not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    return tuple(p for p in partitions_of(n) if is_ell_restricted(p, ell))


def psi(mu: Partition, ell: int) -> Partition:
    """Orbit attached to the simple module labelled by an ell-regular mu."""
    if not is_ell_regular(mu, ell):
        raise DomainError(f"{mu} is not {ell}-regular, no simple module attached")
    return conjugate(mu)


def row_column_reduce(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    """Erase common leading rows and columns of a degeneration pair.

    Rows with lam_i = mu_i are removed from the top, columns with equal
    heights from the left, repeating until neither applies.  Idempotent;
    the singularity of the orbit closure pair is unchanged.
    """
    if sum(lam) != sum(mu):
        raise DomainError("pair must partition the same integer")
    if lam == mu:
        raise DomainError("pair must be a strict degeneration")
    if not dominance_le(mu, lam):
        raise DomainError("reduction expects mu <= lam in dominance")
    while True:
        r = 0
        while r < min(len(lam), len(mu)) and lam[r] == mu[r]:
            r += 1
        if r:
            lam, mu = lam[r:], mu[r:]
        lam_c, mu_c = conjugate(lam), conjugate(mu)
        s = 0
        while s < min(len(lam_c), len(mu_c)) and lam_c[s] == mu_c[s]:
            s += 1
        if s:
            lam = tuple(x - s for x in lam if x > s)
            mu = tuple(x - s for x in mu if x > s)
        if not r and not s:
            return lam, mu


def adjacent_in_dominance(lam: Partition, mu: Partition) -> bool:
    """True iff the two partitions are comparable with nothing in between."""
    if sum(lam) != sum(mu):
        raise DomainError("adjacency compares partitions of the same integer")
    if lam == mu:
        return False
    if dominance_le(lam, mu):
        lam, mu = mu, lam
    elif not dominance_le(mu, lam):
        return False
    return not any(
        nu != lam and nu != mu and dominance_le(mu, nu) and dominance_le(nu, lam)
        for nu in partitions_of(sum(lam))
    )


def minimal_degeneration(lam: Partition, mu: Partition) -> tuple[str, int]:
    """Classify an adjacent pair after reduction.

    Every adjacent pair reduces to one of two extremes on m boxes:
    ((m), (m-1,1)), the type A_{m-1} surface singularity ("simple_A"), or
    ((2,1^{m-2}), (1^m)), the minimal orbit closure in gl_m ("minimal_a").
    At m = 2 the two coincide; the tie goes to "simple_A".
    """
    if not adjacent_in_dominance(lam, mu):
        raise DomainError(f"({lam}, {mu}) is not an adjacent pair")
    if dominance_le(lam, mu):
        lam, mu = mu, lam
    lam1, mu1 = row_column_reduce(lam, mu)
    m = sum(lam1)
    if lam1 == (m,) and mu1 == (m - 1, 1):
        return "simple_A", m
    if lam1 == (2,) + (1,) * (m - 2) and mu1 == (1,) * m:
        return "minimal_a", m
    raise InvariantFailureError(
        f"adjacent pair ({lam}, {mu}) reduced to ({lam1}, {mu1}), matching "
        f"neither extreme; the minimal-degeneration classification fails here"
    )


def decomp_adjacent(lam: Partition, mu: Partition, ell: int) -> int:
    """Multiplicity for an adjacent orbit pair: 1 iff ell divides the box
    count of the reduced extreme pair."""
    if not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    _, m = minimal_degeneration(lam, mu)
    return 1 if m % ell == 0 else 0


def row_column_invariance_check(lam: Partition, mu: Partition, ell: int) -> bool:
    """The adjacent-pair multiplicity is unchanged by row/column removal."""
    if dominance_le(lam, mu):
        lam, mu = mu, lam
    reduced = row_column_reduce(lam, mu)
    return decomp_adjacent(lam, mu, ell) == decomp_adjacent(*reduced, ell)
