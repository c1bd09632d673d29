"""Decomposition numbers that reduce to lattice quotients.

Three families are computed: the weight/root quotient of the simple
(Kleinian) singularity attached to a type, the subregular multiplicities
split by character of the symmetry group, and the single number attached
to the minimal class.  The inhomogeneous subregular cases are table-driven
case analyses; a degree-weighted sum rule guards each table against the
dimension of the full quotient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantFailureError
from .int_linalg import cokernel, is_prime, tensor_f_dimension
from .orbit_cohomology import middle_via_lattice
from .root_system import TypeLabel, build, cartan_matrix

__all__ = [
    "SimpleSingularityData",
    "simple_singularity",
    "characters",
    "character_degree",
    "decomp_minimal",
    "decomp_subregular",
]

# irreducible characters of the symmetry group that survive reduction mod ell
_CHARACTER_DEGREES = {"1": 1, "eps": 1, "psi": 2}


@dataclass(frozen=True)
class SimpleSingularityData:
    """Homogeneous diagram, symmetry group and lattice quotient of a type."""

    gamma: TypeLabel
    gamma_hat: TypeLabel
    symmetry_group: str  # "trivial", "Z2" or "S3"
    quotient: tuple[int, ...]  # invariant factors of weight/root quotient


def _gamma_hat(label: TypeLabel) -> tuple[TypeLabel, str]:
    s, n = label.series, label.rank
    if s == "B":
        return TypeLabel("A", 2 * n - 1), "Z2"
    if s == "C":
        # the rank-3 homogeneous diagram D_3 is A_3
        return (TypeLabel("A", 3) if n == 2 else TypeLabel("D", n + 1)), "Z2"
    if s == "F":
        return TypeLabel("E", 6), "Z2"
    if s == "G":
        return TypeLabel("D", 4), "S3"
    return label, "trivial"


def simple_singularity(label: TypeLabel) -> SimpleSingularityData:
    """Attach the homogeneous diagram, its symmetry group, and the
    invariant factors of its weight lattice modulo root lattice."""
    hat, sym = _gamma_hat(label)
    free, torsion = cokernel(cartan_matrix(hat))
    if free:
        raise InvariantFailureError("Cartan matrix of a finite type is singular")
    return SimpleSingularityData(label, hat, sym, torsion)


def characters(symmetry_group: str, ell: int) -> tuple[str, ...]:
    """Names of the irreducible modular characters of the symmetry group."""
    if not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    if symmetry_group == "trivial":
        return ("1",)
    if symmetry_group == "Z2":
        return ("1",) if ell == 2 else ("1", "eps")
    if symmetry_group == "S3":
        if ell == 2:
            return ("1", "psi")
        if ell == 3:
            return ("1", "eps")
        return ("1", "eps", "psi")
    raise DomainError(f"unknown symmetry group {symmetry_group!r}")


def character_degree(name: str) -> int:
    return _CHARACTER_DEGREES[name]


def decomp_minimal(label: TypeLabel, ell: int) -> int:
    """Multiplicity tying the minimal class to the origin.

    Equals the F_ell-dimension of the coweight/coroot quotient of the
    subsystem generated by the long simple roots; nonzero exactly when ell
    divides its connection index.
    """
    return tensor_f_dimension(middle_via_lattice(build(label)), 0, ell)


def decomp_subregular(label: TypeLabel, ell: int) -> dict[str, int]:
    """Per-character multiplicities tying the regular class to the
    subregular one, as a map over the modular characters at ell."""
    data = simple_singularity(label)
    s, n = label.series, label.rank
    if data.symmetry_group == "trivial":
        out = {"1": tensor_f_dimension(data.quotient, 0, ell)}
    elif s == "B":
        if ell == 2:
            out = {"1": 1}
        else:
            out = {"1": 0, "eps": 1 if n % ell == 0 else 0}
    elif s == "C":
        if ell == 2:
            out = {"1": 1 if n % 2 == 0 else 2}
        else:
            out = {"1": 0, "eps": 0}
    elif s == "F":
        if ell == 2:
            out = {"1": 0}
        elif ell == 3:
            out = {"1": 0, "eps": 1}
        else:
            out = {"1": 0, "eps": 0}
    else:  # G2
        if ell == 2:
            out = {"1": 0, "psi": 1}
        elif ell == 3:
            out = {"1": 0, "eps": 0}
        else:
            out = {"1": 0, "eps": 0, "psi": 0}

    if tuple(out) != characters(data.symmetry_group, ell):
        raise InvariantFailureError(f"character set mismatch for {label} at {ell}")
    weighted = sum(character_degree(name) * mult for name, mult in out.items())
    if weighted != tensor_f_dimension(data.quotient, 0, ell):
        raise InvariantFailureError(
            f"degree-weighted multiplicities for {label} at ell={ell} do not "
            f"sum to the quotient dimension"
        )
    return out
