"""
Sweeps - randomized and parametric experiments on exponents of 2-multiarrangements
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from hyperfree.arrangements.generators import generic_central, lines
from hyperfree.arrangements.models import Arrangement, Multiplicity
from hyperfree.derivations.module import exponents_rank2
from hyperfree.errors import DomainError


# ============================================================================
# Closed-form cases
# ============================================================================


class TypicalCase(str, Enum):
    """Multiplicity patterns whose exponents are determined combinatorially"""

    DOMINANT = "dominant"  # max m_i >= |m|/2
    MANY_LINES = "many-lines"  # n >= |m|/2 + 1
    DOUBLE = "double"  # m = 2 on every line
    THREE_LINES = "three-lines"  # n = 3, balanced


def typical_exponents(case: TypicalCase, values: Sequence[int]) -> Tuple[int, int]:
    """
    Closed-form exponents for a multiplicity satisfying the hypothesis of `case`

    Raises:
        DomainError: If the values do not satisfy the hypothesis
    """
    weight = sum(values)
    n = len(values)
    top = max(values)
    if case == TypicalCase.DOMINANT:
        if 2 * top < weight:
            raise DomainError(f"max {top} < |m|/2 for {list(values)}")
        return tuple(sorted((top, weight - top)))  # type: ignore[return-value]
    if case == TypicalCase.MANY_LINES:
        if 2 * n < weight + 2:
            raise DomainError(f"n = {n} < |m|/2 + 1 for {list(values)}")
        return tuple(sorted((weight - n + 1, n - 1)))  # type: ignore[return-value]
    if case == TypicalCase.DOUBLE:
        if any(v != 2 for v in values):
            raise DomainError(f"Not constant 2: {list(values)}")
        return n, n
    if n != 3 or 2 * top > weight:
        raise DomainError(f"Not a balanced multiplicity on three lines: {list(values)}")
    return weight // 2, weight - weight // 2


def random_multiplicity(case: TypicalCase, n: int, rng: np.random.Generator) -> Tuple[int, ...]:
    """Random positive multiplicity on n lines satisfying the hypothesis of `case`"""
    if case == TypicalCase.DOMINANT:
        rest = [int(v) for v in rng.integers(1, 4, size=n - 1)]
        return tuple([sum(rest) + int(rng.integers(0, 3))] + rest)
    if case == TypicalCase.MANY_LINES:
        values = [1] * n
        for _ in range(int(rng.integers(0, n - 1))):
            values[int(rng.integers(0, n))] += 1
        return tuple(values)
    if case == TypicalCase.DOUBLE:
        return tuple([2] * n)
    if n != 3:
        raise DomainError("The three-lines case needs n = 3")
    while True:
        values = [int(v) for v in rng.integers(1, 7, size=3)]
        if 2 * max(values) <= sum(values):
            return tuple(values)


def random_balanced(n: int, rng: np.random.Generator, top: int = 5) -> Tuple[int, ...]:
    """Random balanced multiplicity: every m_i <= |m| / 2"""
    while True:
        values = [int(v) for v in rng.integers(1, top + 1, size=n)]
        if 2 * max(values) <= sum(values):
            return tuple(values)


@dataclass
class SweepResult:
    """Records of one randomized sweep and the ones that failed their check"""

    name: str
    seed: int
    records: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def failures(self) -> List[Dict[str, Any]]:
        return [r for r in self.records if not r["passed"]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "seed": self.seed,
            "samples": len(self.records),
            "failures": self.failures,
            "passed": self.passed,
        }


def _record(arrangement: Arrangement, values: Sequence[int], exponents: Tuple[int, int]) -> Dict[str, Any]:
    return {
        "normals": [list(h.normal) for h in arrangement.hyperplanes],
        "multiplicity": list(values),
        "exponents": list(exponents),
    }


def typical_sweep(
    case: TypicalCase,
    samples: int = 200,
    seed: int = 0,
    max_lines: int = 6,
    box: int = 20,
) -> SweepResult:
    """
    Compare exponents_rank2 with the closed form on random line sets

    Args:
        case: Which multiplicity pattern to draw
        samples: Number of random instances
        seed: Seed for numpy's default_rng
        max_lines: Upper bound on the number of lines
        box: Normals are drawn from [-box, box]^2
    """
    rng = np.random.default_rng(seed)
    result = SweepResult(name=f"typical:{case.value}", seed=seed)
    for _ in range(samples):
        n = 3 if case == TypicalCase.THREE_LINES else int(rng.integers(2, max_lines + 1))
        arrangement = generic_central(n, 2, rng, box)
        values = random_multiplicity(case, n, rng)
        exponents = exponents_rank2(arrangement, Multiplicity(values))
        expected = typical_exponents(case, values)
        record = _record(arrangement, values, exponents)
        record.update(expected=list(expected), passed=exponents == expected)
        result.records.append(record)
    logger.info(f"{result.name}: {samples} samples, {len(result.failures)} failures")
    return result


def abe_bound_sweep(samples: int = 200, seed: int = 0, max_lines: int = 6, box: int = 20) -> SweepResult:
    """delta <= n - 2 on random balanced multiarrangements with n >= 3 lines"""
    rng = np.random.default_rng(seed)
    result = SweepResult(name="abe-bound", seed=seed)
    for _ in range(samples):
        n = int(rng.integers(3, max_lines + 1))
        arrangement = generic_central(n, 2, rng, box)
        values = random_balanced(n, rng)
        d1, d2 = exponents_rank2(arrangement, Multiplicity(values))
        record = _record(arrangement, values, (d1, d2))
        record.update(delta=d2 - d1, bound=n - 2, passed=d2 - d1 <= n - 2)
        result.records.append(record)
    logger.info(f"{result.name}: {samples} samples, {len(result.failures)} failures")
    return result


def generic_delta_sweep(samples: int = 50, seed: int = 0, max_lines: int = 6, box: int = 1000) -> SweepResult:
    """
    delta <= 1 for random lines with random multiplicities

    Random normals from a large box are generic only with high probability,
    so failures are logged and reported, never raised.
    """
    rng = np.random.default_rng(seed)
    result = SweepResult(name="generic-delta", seed=seed)
    for _ in range(samples):
        n = int(rng.integers(3, max_lines + 1))
        arrangement = generic_central(n, 2, rng, box)
        values = random_balanced(n, rng)
        d1, d2 = exponents_rank2(arrangement, Multiplicity(values))
        record = _record(arrangement, values, (d1, d2))
        record.update(delta=d2 - d1, passed=d2 - d1 <= 1)
        if not record["passed"]:
            logger.warning(f"delta {d2 - d1} > 1 on {record['normals']} with m = {list(values)}")
        result.records.append(record)
    return result


# ============================================================================
# Parametric family x^3 y^3 (x + y)(tx - y)
# ============================================================================


def t_family(t: int) -> Tuple[Arrangement, Multiplicity]:
    """
    Lines x, y (multiplicity 3), x + y and tx - y (multiplicity 1)

    Raises:
        DomainError: For t in {0, -1}, where tx - y coincides with another line
    """
    if t in (0, -1):
        raise DomainError(f"t = {t} makes tx - y coincide with another line")
    return lines([(1, 0), (0, 1), (1, 1), (t, -1)]), Multiplicity((3, 3, 1, 1))


@dataclass
class DeltaSweep:
    """Exponents over a range of t, with the jump locus of delta"""

    records: List[Dict[str, Any]]

    @property
    def generic_delta(self) -> Optional[int]:
        return min((r["delta"] for r in self.records), default=None)

    @property
    def jumps(self) -> List[int]:
        """Parameters where delta exceeds its generic value"""
        generic = self.generic_delta
        return [r["t"] for r in self.records if r["delta"] != generic]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "records": self.records,
            "generic_delta": self.generic_delta,
            "jumps": self.jumps,
        }


def delta_sweep(t_values: Sequence[int]) -> DeltaSweep:
    """exponents_rank2 and delta of the t-family; t = 0 and t = -1 are skipped"""
    records = []
    for t in t_values:
        if t in (0, -1):
            logger.debug(f"Skipping degenerate t = {t}")
            continue
        arrangement, multiplicity = t_family(t)
        d1, d2 = exponents_rank2(arrangement, multiplicity)
        records.append({"t": t, "exponents": [d1, d2], "delta": d2 - d1})
    sweep = DeltaSweep(records)
    logger.info(f"Delta sweep over {len(records)} values: generic {sweep.generic_delta}, jumps at {sweep.jumps}")
    return sweep
