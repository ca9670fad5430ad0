"""
Root systems - positive roots, exponents and Coxeter numbers for types A, B, C, D and G2
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple, Union

from loguru import logger

from hyperfree.arrangements.models import Arrangement
from hyperfree.errors import DomainError

SUPPORTED_RANKS: Dict[str, Tuple[int, ...]] = {
    "A": (1, 2, 3, 4),
    "B": (2, 3, 4),
    "C": (2, 3, 4),
    "D": (3, 4),
    "G": (2,),
}


class RootFamily(str, Enum):
    """Cartan-Killing family"""

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    G = "G"


@dataclass(frozen=True)
class RootSystem:
    """Positive roots as integer linear forms in an essential coordinate model"""

    family: RootFamily
    rank: int
    positive_roots: Tuple[Tuple[int, ...], ...]
    exponents: Tuple[int, ...]
    coxeter_number: int

    @property
    def name(self) -> str:
        return f"{self.family.value}{self.rank}"

    def validate(self) -> bool:
        """
        Check the stored tables

        Raises:
            ValueError: If |Phi+| != sum of exponents or duality fails
        """
        if len(self.positive_roots) != sum(self.exponents):
            raise ValueError(
                f"{self.name}: {len(self.positive_roots)} roots but exponents sum to "
                f"{sum(self.exponents)}"
            )
        e = self.exponents
        for i in range(len(e)):
            if e[i] + e[len(e) - 1 - i] != self.coxeter_number:
                raise ValueError(f"{self.name}: exponents {e} fail duality with h = {self.coxeter_number}")
        return True


def _unit(n: int, *entries: Tuple[int, int]) -> Tuple[int, ...]:
    v = [0] * n
    for index, value in entries:
        v[index] = value
    return tuple(v)


def _pairs(n: int, signs: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    return [_unit(n, (i, 1), (j, s)) for i in range(n) for j in range(i + 1, n) for s in signs]


def positive_roots(family: Union[str, RootFamily], rank: int) -> RootSystem:
    """
    Root system of the given type

    Type A uses the chart x_(l+1) = 0 (forms x_i - x_j and x_i), B/C/D
    the forms x_i +- x_j with x_i (B) or 2x_i (C), and G2 its six roots in
    simple-root coordinates.

    Raises:
        DomainError: For unsupported families or ranks
    """
    try:
        fam = RootFamily(str(family).upper())
    except ValueError as e:
        raise DomainError(f"Unsupported root system family '{family}'") from e
    if rank not in SUPPORTED_RANKS[fam.value]:
        raise DomainError(
            f"Unsupported root system {fam.value}{rank}; supported ranks for "
            f"{fam.value}: {SUPPORTED_RANKS[fam.value]}"
        )

    n = rank
    if fam == RootFamily.A:
        roots = _pairs(n, (-1,)) + [_unit(n, (i, 1)) for i in range(n)]
        exponents = tuple(range(1, n + 1))
        h = n + 1
    elif fam == RootFamily.B:
        roots = _pairs(n, (-1, 1)) + [_unit(n, (i, 1)) for i in range(n)]
        exponents = tuple(range(1, 2 * n, 2))
        h = 2 * n
    elif fam == RootFamily.C:
        roots = _pairs(n, (-1, 1)) + [_unit(n, (i, 2)) for i in range(n)]
        exponents = tuple(range(1, 2 * n, 2))
        h = 2 * n
    elif fam == RootFamily.D:
        roots = _pairs(n, (-1, 1))
        exponents = tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
        h = 2 * n - 2
    else:
        roots = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
        exponents = (1, 5)
        h = 6

    system = RootSystem(fam, rank, tuple(roots), exponents, h)
    system.validate()
    logger.debug(f"{system.name}: {len(roots)} positive roots, exponents {exponents}, h = {h}")
    return system


def coxeter_arrangement(system: RootSystem) -> Arrangement:
    """Central arrangement of the reflecting hyperplanes alpha = 0"""
    return Arrangement.from_normals([list(r) for r in system.positive_roots])


def verify_root_table(system: RootSystem) -> Dict[str, bool]:
    """
    Recompute the exponent table through free_test and check the identities

    Returns:
        Named pass/fail checks: root_count, duality, exponents
    """
    from hyperfree.freeness.criteria import free_test

    checks = {
        "root_count": len(system.positive_roots) == sum(system.exponents),
        "duality": all(
            a + b == system.coxeter_number
            for a, b in zip(system.exponents, reversed(system.exponents))
        ),
    }
    certificate = free_test(coxeter_arrangement(system))
    checks["exponents"] = certificate.is_free and certificate.exponents == list(system.exponents)
    if not checks["exponents"]:
        logger.warning(
            f"{system.name}: free_test gave {certificate.status.value} {certificate.exponents}, "
            f"table says {list(system.exponents)}"
        )
    return checks
