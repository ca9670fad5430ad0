"""
Characteristic polynomial - Möbius sums, deletion-restriction and finite-field counting
"""

from enum import Enum
from functools import reduce
from itertools import combinations
from math import comb, lcm
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import numpy as np
from loguru import logger
from sympy import nextprime

from hyperfree.algebra.matrices import bareiss_echelon
from hyperfree.algebra.polynomials import UniPoly
from hyperfree.arrangements.lattice import intersection_lattice
from hyperfree.arrangements.models import Arrangement, Hyperplane
from hyperfree.arrangements.operations import deletion, restrict
from hyperfree.config import get_settings
from hyperfree.errors import DomainError, InvariantViolation, ResourceBudgetError

_CHUNK = 1 << 16


class CharpolyMethod(str, Enum):
    """Available methods for computing chi(A, t)"""

    MOBIUS = "mobius"
    DELRES = "delres"
    FINITEFIELD = "finitefield"

    @classmethod
    def parse(cls, value: Union[str, "CharpolyMethod"]) -> "CharpolyMethod":
        if isinstance(value, CharpolyMethod):
            return value
        aliases = {"ff": cls.FINITEFIELD, "dr": cls.DELRES, "mu": cls.MOBIUS}
        key = value.strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError as e:
            raise DomainError(
                f"Unknown method '{value}'. Available: {', '.join(m.value for m in cls)}"
            ) from e


def charpoly(
    arrangement: Arrangement, method: Union[str, CharpolyMethod] = CharpolyMethod.MOBIUS
) -> UniPoly:
    """
    Characteristic polynomial chi(A, t)

    Args:
        arrangement: Any arrangement
        method: mobius, delres or finitefield (alias ff)

    Returns:
        Monic integer polynomial of degree l
    """
    method = CharpolyMethod.parse(method)
    if method == CharpolyMethod.MOBIUS:
        chi = intersection_lattice(arrangement).characteristic_polynomial()
    elif method == CharpolyMethod.DELRES:
        chi = _delres(arrangement, {})
    else:
        chi = _finite_field(arrangement)
    logger.debug(f"chi via {method.value}: {chi}")
    return chi


# ============================================================================
# Deletion-restriction
# ============================================================================


def _delres(
    arrangement: Arrangement, memo: Dict[Tuple[int, FrozenSet[Hyperplane]], UniPoly]
) -> UniPoly:
    """chi(A) = chi(A minus H) - chi((A minus H)^H), always removing the last hyperplane"""
    if not arrangement.hyperplanes:
        return UniPoly.variable() ** arrangement.dimension
    key = (arrangement.dimension, frozenset(arrangement.hyperplanes))
    cached = memo.get(key)
    if cached is not None:
        return cached
    last = len(arrangement) - 1
    result = _delres(deletion(arrangement, last), memo) - _delres(
        restrict(arrangement, last).arrangement, memo
    )
    memo[key] = result
    return result


# ============================================================================
# Finite-field method
# ============================================================================


def safety_bound(arrangement: Arrangement, max_minors: Optional[int] = None) -> int:
    """
    lcm of |m| over all nonzero minors m of the integer (normal | constant) matrix

    For primes q > B the reduction mod q preserves every rank condition of
    the augmented system, so the mod-q complement count equals chi(A, q).

    Raises:
        ResourceBudgetError: If the number of minors exceeds the budget
    """
    limit = get_settings().budgets.minor_count if max_minors is None else max_minors
    rows = [list(h.row) for h in arrangement.hyperplanes]
    if not rows:
        return 1
    width = len(rows[0])
    top = min(len(rows), width)
    needed = sum(comb(len(rows), k) * comb(width, k) for k in range(1, top + 1))
    if needed > limit:
        raise ResourceBudgetError("minor_count", limit, needed, "finite-field safety bound")

    values = set()
    for k in range(1, top + 1):
        for row_set in combinations(range(len(rows)), k):
            for col_set in combinations(range(width), k):
                sub = [[rows[i][j] for j in col_set] for i in row_set]
                echelon, pivots, sign = bareiss_echelon(sub, k)
                if len(pivots) == k:
                    values.add(abs(echelon[k - 1][k - 1]))
    bound = reduce(lcm, values, 1)
    logger.debug(f"Safety bound B = {bound} from {len(values)} distinct minors")
    return bound


def count_complement_mod(
    arrangement: Arrangement, q: int, max_points: Optional[int] = None
) -> int:
    """
    Number of points of (Z/qZ)^l lying on no reduced hyperplane

    Args:
        arrangement: Arrangement with integer canonical coefficients
        q: Modulus, at least 2
        max_points: Enumeration budget, defaults to enumeration_points

    Returns:
        Exact count

    Raises:
        DomainError: If q < 2
        ResourceBudgetError: If q^l exceeds the enumeration budget
    """
    if q < 2:
        raise DomainError(f"Modulus must be at least 2, got {q}")
    limit = get_settings().budgets.enumeration_points if max_points is None else max_points
    dim = arrangement.dimension
    total = q**dim
    if total > limit:
        raise ResourceBudgetError("enumeration_points", limit, total, f"q={q}, l={dim}")
    if not arrangement.hyperplanes:
        return total

    normals = np.array([h.normal for h in arrangement.hyperplanes], dtype=np.int64) % q
    constants = np.array([h.constant for h in arrangement.hyperplanes], dtype=np.int64) % q
    radix = np.array([q**k for k in range(dim)], dtype=np.int64)

    count = 0
    for start in range(0, total, _CHUNK):
        index = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coords = (index[None, :] // radix[:, None]) % q
        values = (normals @ coords) % q
        alive = np.all(values != constants[:, None], axis=0)
        count += int(alive.sum())
    return count


def _finite_field(arrangement: Arrangement) -> UniPoly:
    dim = arrangement.dimension
    bound = safety_bound(arrangement)
    primes: List[int] = []
    q = bound
    while len(primes) < dim + 1:
        q = int(nextprime(q))
        primes.append(q)
    counts = [count_complement_mod(arrangement, p) for p in primes]
    logger.debug(f"Finite-field counts at {primes}: {counts}")

    chi = UniPoly.interpolate(primes, counts)
    if chi.degree != dim or not chi.is_monic() or not chi.has_integer_coefficients():
        raise InvariantViolation(
            f"Finite-field interpolant {chi} is not monic of degree {dim} over Z"
        )
    return chi


# ============================================================================
# Derived invariants
# ============================================================================


def chamber_counts(arrangement: Arrangement) -> Tuple[int, int]:
    """
    (number of chambers, number of bounded chambers) = (|chi(-1)|, |chi(1)|)

    For a non-essential arrangement no chamber is bounded, but the formula
    still yields |chi(1)|; the empty arrangement gives (1, 1).
    """
    chi = charpoly(arrangement)
    return abs(int(chi(-1))), abs(int(chi(1)))


def betti(arrangement: Arrangement) -> List[int]:
    """
    Betti numbers b_0..b_l with chi(A, t) = sum (-1)^i b_i t^(l-i)

    Raises:
        InvariantViolation: If a coefficient has the wrong sign
    """
    chi = charpoly(arrangement)
    dim = arrangement.dimension
    numbers = []
    for i in range(dim + 1):
        c = chi.coefficient(dim - i)
        signed = c if i % 2 == 0 else -c
        if signed < 0:
            raise InvariantViolation(f"Coefficient of t^{dim - i} in {chi} has the wrong sign")
        numbers.append(int(signed))
    return numbers


def poincare(arrangement: Arrangement) -> UniPoly:
    """Poincaré polynomial pi(A, t) = sum b_i t^i"""
    return UniPoly(betti(arrangement))
