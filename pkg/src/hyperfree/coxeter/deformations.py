"""
Deformations - truncated affine Weyl arrangements and checks of their known exponents
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple, Union

from loguru import logger

from hyperfree.algebra.polynomials import UniPoly
from hyperfree.arrangements.charpoly import CharpolyMethod, charpoly
from hyperfree.arrangements.models import Arrangement, Multiplicity
from hyperfree.arrangements.operations import cone
from hyperfree.certificates import FreenessCertificate
from hyperfree.coxeter.rootsystems import RootSystem, coxeter_arrangement
from hyperfree.derivations.module import exponents_rank2
from hyperfree.errors import DomainError
from hyperfree.freeness.criteria import free_test


class DeformationKind(str, Enum):
    """Families with closed-form exponents"""

    CATALAN = "catalan"
    SHI = "shi"


@dataclass(frozen=True)
class DeformationSpec:
    """
    Window [lo, hi] of levels: hyperplanes alpha(x) = k for lo <= k <= hi

    Attributes:
        root_system: Root system providing the positive roots
        lo: Lowest level
        hi: Highest level
    """

    root_system: RootSystem
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"Empty window [{self.lo}, {self.hi}]")

    @classmethod
    def from_conjecture(cls, root_system: RootSystem, a: int, b: int) -> "DeformationSpec":
        """The pair (a, b) denotes the window [-a, b]"""
        return cls(root_system, -a, b)

    @classmethod
    def catalan(cls, root_system: RootSystem, k: int) -> "DeformationSpec":
        if k < 0:
            raise DomainError(f"Catalan deformation needs k >= 0, got {k}")
        return cls(root_system, -k, k)

    @classmethod
    def shi(cls, root_system: RootSystem, k: int) -> "DeformationSpec":
        if k < 1:
            raise DomainError(f"Shi deformation needs k >= 1, got {k}")
        return cls(root_system, 1 - k, k)

    @property
    def levels(self) -> int:
        return self.hi - self.lo + 1

    @property
    def label(self) -> str:
        return f"{self.root_system.name}[{self.lo},{self.hi}]"


def deformation(spec: DeformationSpec) -> Arrangement:
    """
    Affine arrangement of alpha(x) = k over positive roots and window levels

    Hyperplanes are ordered root-major: all levels of the first root, then
    the next root.
    """
    equations = [
        (list(root), level)
        for root in spec.root_system.positive_roots
        for level in range(spec.lo, spec.hi + 1)
    ]
    arrangement = Arrangement.from_equations(spec.root_system.rank, equations)
    logger.debug(f"{spec.label}: {len(arrangement)} hyperplanes")
    return arrangement


# ============================================================================
# Closed forms for Catalan and Shi deformations
# ============================================================================


def expected_exponents(system: RootSystem, k: int, kind: Union[str, DeformationKind]) -> List[int]:
    """Exponents of the cone: (1, e_i + kh) for Catalan, (1, kh, ..., kh) for Shi"""
    kind = DeformationKind(kind)
    kh = k * system.coxeter_number
    if kind == DeformationKind.CATALAN:
        return [1] + [e + kh for e in system.exponents]
    return [1] + [kh] * system.rank


def expected_charpoly(system: RootSystem, k: int, kind: Union[str, DeformationKind]) -> UniPoly:
    """chi of the affine deformation as a product of linear factors"""
    return UniPoly.from_roots(expected_exponents(system, k, kind)[1:])


@dataclass
class DeformationCheck:
    """Outcome of er_verify"""

    spec: DeformationSpec
    kind: DeformationKind
    k: int
    certificate: FreenessCertificate
    charpoly: UniPoly
    expected_exponents: List[int]
    expected_charpoly: UniPoly
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "root_system": self.spec.root_system.name,
            "kind": self.kind.value,
            "k": self.k,
            "window": [self.spec.lo, self.spec.hi],
            "charpoly": self.charpoly.format(),
            "expected_charpoly": self.expected_charpoly.format(),
            "expected_exponents": self.expected_exponents,
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def er_verify(
    system: RootSystem,
    k: int,
    kind: Union[str, DeformationKind],
    method: Union[str, CharpolyMethod] = CharpolyMethod.MOBIUS,
) -> DeformationCheck:
    """
    Test freeness of the cone of a Catalan or Shi deformation against the closed forms

    Args:
        system: Root system
        k: Catalan window [-k, k] (k >= 0) or Shi window [1-k, k] (k >= 1)
        kind: catalan or shi
        method: How chi of the affine arrangement is computed

    Returns:
        DeformationCheck with the certificate of the cone and pass/fail checks
    """
    try:
        kind = DeformationKind(kind)
    except ValueError as e:
        raise DomainError(f"Unknown deformation kind '{kind}'") from e
    spec = DeformationSpec.catalan(system, k) if kind == DeformationKind.CATALAN else DeformationSpec.shi(system, k)

    affine = deformation(spec)
    chi = charpoly(affine, method)
    coned = cone(affine)
    certificate = free_test(coned, chi=chi * UniPoly([-1, 1]))

    exps = expected_exponents(system, k, kind)
    expected_chi = expected_charpoly(system, k, kind)
    check = DeformationCheck(
        spec=spec,
        kind=kind,
        k=k,
        certificate=certificate,
        charpoly=chi,
        expected_exponents=exps,
        expected_charpoly=expected_chi,
        checks={
            "free": certificate.is_free,
            "exponents": certificate.exponents == sorted(exps),
            "charpoly": chi == expected_chi,
        },
    )
    if check.passed:
        logger.info(f"{spec.label} ({kind.value}): free with exponents {certificate.exponents}")
    else:
        logger.warning(f"{spec.label} ({kind.value}): checks failed {check.checks}")
    return check


# ============================================================================
# Constant and shifted multiplicities on rank-2 Coxeter arrangements
# ============================================================================


@dataclass(frozen=True)
class MultiplicityCheck:
    """Computed against closed-form exponents of a Coxeter multiarrangement"""

    root_system: str
    multiplicity: Tuple[int, ...]
    exponents: Tuple[int, int]
    expected: Tuple[int, int]

    @property
    def passed(self) -> bool:
        return self.exponents == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "root_system": self.root_system,
            "multiplicity": list(self.multiplicity),
            "exponents": list(self.exponents),
            "expected": list(self.expected),
            "passed": self.passed,
        }


def _require_rank2(system: RootSystem, operation: str) -> Arrangement:
    if system.rank != 2:
        raise DomainError(f"{operation} needs a rank-2 root system, got {system.name}")
    return coxeter_arrangement(system)


def coxeter_multi_check(system: RootSystem, m: int) -> MultiplicityCheck:
    """
    exponents_rank2 of the Coxeter arrangement with constant multiplicity m

    Expected: (kh, kh) for m = 2k and (e1 + kh, e2 + kh) for m = 2k + 1.

    Raises:
        DomainError: If the rank is not 2 or m < 1
    """
    arrangement = _require_rank2(system, "coxeter_multi_check")
    if m < 1:
        raise DomainError(f"Multiplicity must be >= 1, got {m}")
    multiplicity = Multiplicity.constant(len(arrangement), m)
    k, odd = divmod(m, 2)
    kh = k * system.coxeter_number
    if odd:
        e1, e2 = system.exponents
        expected = (e1 + kh, e2 + kh)
    else:
        expected = (kh, kh)
    result = MultiplicityCheck(
        root_system=system.name,
        multiplicity=multiplicity.values,
        exponents=exponents_rank2(arrangement, multiplicity),
        expected=expected,
    )
    logger.debug(f"{system.name} m = {m}: {result.exponents} vs {expected}")
    return result


def coxeter_shift_check(system: RootSystem, k: int, values: Sequence[int]) -> MultiplicityCheck:
    """
    exponents(A, 2k + m) against exponents(A, m) + kh for a {0,1}-valued m

    Raises:
        DomainError: If the rank is not 2, k < 0 or m is not {0,1}-valued
    """
    arrangement = _require_rank2(system, "coxeter_shift_check")
    if k < 0:
        raise DomainError(f"Shift needs k >= 0, got {k}")
    if any(v not in (0, 1) for v in values):
        raise DomainError(f"Base multiplicity must be 0/1-valued, got {list(values)}")
    base = Multiplicity(tuple(values))
    base.validate_for(arrangement)
    shifted = Multiplicity(tuple(2 * k + v for v in values))

    d1, d2 = exponents_rank2(arrangement, base)
    kh = k * system.coxeter_number
    return MultiplicityCheck(
        root_system=system.name,
        multiplicity=shifted.values,
        exponents=exponents_rank2(arrangement, shifted),
        expected=(d1 + kh, d2 + kh),
    )


def parse_window(text: str) -> Tuple[int, int]:
    """
    Parse LO:HI into integers

    Raises:
        DomainError: On malformed input or an empty window
    """
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as e:
        raise DomainError(f"Window must look like LO:HI, got '{text}'") from e
    if lo > hi:
        raise DomainError(f"Empty window [{lo}, {hi}]")
    return lo, hi


def window_to_pair(lo: int, hi: int) -> Tuple[int, int]:
    """Raw window [lo, hi] to the conjecture pair (a, b) = (-lo, hi)"""
    return -lo, hi

