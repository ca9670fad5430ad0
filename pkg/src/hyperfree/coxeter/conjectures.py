"""
Conjecture checkers - exact tests of the functional equation, h-shift and Riemann hypothesis
for characteristic polynomials of truncated affine Weyl arrangements
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from loguru import logger

from hyperfree.algebra.polynomials import UniPoly, compose_affine
from hyperfree.algebra.realroots import all_real_roots_nonpositive, count_real_roots
from hyperfree.algebra.scalars import format_scalar
from hyperfree.arrangements.charpoly import charpoly
from hyperfree.coxeter.deformations import DeformationSpec, deformation
from hyperfree.coxeter.rootsystems import RootSystem
from hyperfree.errors import DomainError


class ConjectureCheck(str, Enum):
    """Which identity is tested"""

    FE = "fe"
    HSHIFT = "hshift"
    RH = "rh"

    @classmethod
    def parse(cls, value: Union[str, "ConjectureCheck"]) -> "ConjectureCheck":
        try:
            return cls(str(value).strip().lower().replace("-", ""))
        except ValueError as e:
            raise DomainError(
                f"Unknown check '{value}'. Available: {', '.join(c.value for c in cls)}"
            ) from e


@dataclass(frozen=True)
class ConjectureResult:
    """
    Outcome of one conjecture check on A^[-a, b]

    Attributes:
        check: fe, hshift or rh
        root_system: Name such as A3
        a: Window parameter, the window is [-a, b]
        b: Window parameter
        holds: Whether the identity holds exactly
        in_domain: False when run outside the stated parameter range
        center: Symmetry center of the roots (fe and rh)
        charpoly: chi(A^[-a, b], t)
        witness: Failed residual or offending factor, None when the check holds
    """

    check: ConjectureCheck
    root_system: str
    a: int
    b: int
    holds: bool
    in_domain: bool
    charpoly: UniPoly
    center: Optional[Fraction] = None
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check.value,
            "root_system": self.root_system,
            "window": [-self.a, self.b],
            "holds": self.holds,
            "in_domain": self.in_domain,
            "center": None if self.center is None else format_scalar(self.center),
            "charpoly": self.charpoly.format(),
            "witness": self.witness,
        }


def _in_symmetric_domain(a: int, b: int) -> bool:
    return -1 <= a <= b and (a, b) not in ((-1, 0), (-1, -1))


def _require_domain(a: int, b: int, operation: str) -> None:
    if not _in_symmetric_domain(a, b):
        raise DomainError(
            f"{operation} needs -1 <= a <= b with (a, b) not in {{(-1, 0), (-1, -1)}}, "
            f"got ({a}, {b})"
        )


def window_charpoly(system: RootSystem, a: int, b: int) -> UniPoly:
    """chi(A^[-a, b], t)"""
    return charpoly(deformation(DeformationSpec.from_conjecture(system, a, b)))


def conjecture_fe(system: RootSystem, a: int, b: int) -> ConjectureResult:
    """
    chi(c - t) == (-1)^l chi(t) with c = (a + b + 1) h

    Raises:
        DomainError: Outside -1 <= a <= b, (a, b) not (-1, 0) or (-1, -1)
    """
    _require_domain(a, b, "conjecture_fe")
    chi = window_charpoly(system, a, b)
    c = (a + b + 1) * system.coxeter_number
    reflected = compose_affine(chi, -1, c)
    expected = chi * (-1) ** system.rank
    holds = reflected == expected
    witness = None if holds else f"chi({c} - t) - (-1)^l chi(t) = {(reflected - expected).format()}"
    logger.debug(f"fe {system.name} ({a}, {b}): {holds}")
    return ConjectureResult(ConjectureCheck.FE, system.name, a, b, holds, True, chi, Fraction(c, 2), witness)


def conjecture_hshift(system: RootSystem, a: int, b: int) -> ConjectureResult:
    """
    chi(A^[-a-1, b+1], t) == chi(A^[-a, b], t - h)

    Raises:
        DomainError: Outside the functional-equation domain
    """
    _require_domain(a, b, "conjecture_hshift")
    chi = window_charpoly(system, a, b)
    wider = window_charpoly(system, a + 1, b + 1)
    shifted = compose_affine(chi, 1, -system.coxeter_number)
    holds = wider == shifted
    witness = None if holds else f"residual {(wider - shifted).format()}"
    logger.debug(f"hshift {system.name} ({a}, {b}): {holds}")
    return ConjectureResult(ConjectureCheck.HSHIFT, system.name, a, b, holds, True, chi, None, witness)


def conjecture_rh(
    system: RootSystem, a: int, b: int, allow_out_of_domain: bool = False
) -> ConjectureResult:
    """
    All roots of chi(A^[-a, b], t) have real part c = (a + b + 1) h / 2

    Writes psi(s) = chi(c + s). Roots c +- i beta of chi are roots +- i beta
    of psi, so psi must have parity (-1)^l and psi(s) = s^e q(s^2) with q
    having only real nonpositive roots.

    Args:
        system: Root system
        a: Window is [-a, b]
        b: Window is [-a, b]
        allow_out_of_domain: Accept a = -1 or a = b and report in_domain False

    Raises:
        DomainError: Outside 0 <= a < b unless allow_out_of_domain is set
    """
    in_domain = 0 <= a < b
    if not in_domain:
        if not allow_out_of_domain:
            raise DomainError(f"conjecture_rh needs 0 <= a < b, got ({a}, {b})")
        _require_domain(a, b, "conjecture_rh")

    chi = window_charpoly(system, a, b)
    center = Fraction((a + b + 1) * system.coxeter_number, 2)
    psi = compose_affine(chi, 1, center)
    parity = system.rank % 2
    if compose_affine(psi, -1, 0) != psi * (-1) ** parity:
        return ConjectureResult(
            ConjectureCheck.RH, system.name, a, b, False, in_domain, chi, center,
            f"chi(c + s) is not {'odd' if parity else 'even'} in s",
        )

    q = UniPoly(psi.coefficient(2 * k + parity) for k in range((psi.degree - parity) // 2 + 1))
    holds = all_real_roots_nonpositive(q)
    witness = None
    if not holds:
        witness = (
            f"q(u) = {q.format('u')} of degree {q.degree}: {count_real_roots(q)} distinct real "
            f"roots, {count_real_roots(q, 0, None)} of them positive"
        )
    logger.debug(f"rh {system.name} ({a}, {b}): center {center}, holds {holds}")
    return ConjectureResult(ConjectureCheck.RH, system.name, a, b, holds, in_domain, chi, center, witness)


def run_check(
    check: Union[str, ConjectureCheck],
    system: RootSystem,
    a: int,
    b: int,
    allow_out_of_domain: bool = False,
) -> ConjectureResult:
    check = ConjectureCheck.parse(check)
    if check == ConjectureCheck.FE:
        return conjecture_fe(system, a, b)
    if check == ConjectureCheck.HSHIFT:
        return conjecture_hshift(system, a, b)
    return conjecture_rh(system, a, b, allow_out_of_domain)


def conjecture_sweep(
    systems: Sequence[RootSystem],
    pairs: Sequence[Tuple[int, int]],
    checks: Sequence[Union[str, ConjectureCheck]],
    workers: int = 1,
    allow_out_of_domain: bool = False,
) -> List[Dict[str, Any]]:
    """
    Run every check on every (system, (a, b)) cell

    Cells outside a check's domain are reported with an error entry
    instead of aborting the sweep.

    Returns:
        One record per cell in input order (system-major, then pair, then check)
    """
    cells = [
        (system, a, b, ConjectureCheck.parse(check))
        for system in systems
        for a, b in pairs
        for check in checks
    ]
    records: List[Optional[Dict[str, Any]]] = [None] * len(cells)

    def run_cell(index: int) -> Dict[str, Any]:
        system, a, b, check = cells[index]
        try:
            return run_check(check, system, a, b, allow_out_of_domain).to_dict()
        except DomainError as e:
            return {
                "check": check.value,
                "root_system": system.name,
                "window": [-a, b],
                "error": str(e),
            }

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = {executor.submit(run_cell, i): i for i in range(len(cells))}
        for future in as_completed(futures):
            index = futures[future]
            try:
                records[index] = future.result()
            except Exception as e:
                logger.error(f"Sweep cell {index} failed: {e}")
                system, a, b, check = cells[index]
                records[index] = {
                    "check": check.value,
                    "root_system": system.name,
                    "window": [-a, b],
                    "error": str(e),
                }

    failed = sum(1 for r in records if r and r.get("holds") is False)
    logger.info(f"Conjecture sweep: {len(cells)} cells, {failed} failing")
    return [r for r in records if r is not None]
