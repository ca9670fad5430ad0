"""
Intersection lattice - flats keyed by canonical echelon form, Möbius values
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from hyperfree.algebra.polynomials import UniPoly
from hyperfree.arrangements.models import Arrangement
from hyperfree.config import get_settings
from hyperfree.errors import DomainError, InvariantViolation, ResourceBudgetError

Row = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Flat:
    """
    A nonempty intersection of hyperplanes.

    `equations` is the reduced row-echelon form of the augmented system
    (normal | constant) of any defining subset, so it identifies the flat.
    """

    equations: Tuple[Row, ...]
    pivots: Tuple[int, ...]
    members: FrozenSet[int]
    dimension: int

    @property
    def rank(self) -> int:
        """Codimension r(X)"""
        return len(self.equations)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        return all(
            sum((a * x for a, x in zip(row[:-1], point)), Fraction(0)) == row[-1]
            for row in self.equations
        )

    def to_dict(self) -> Dict:
        return {
            "rank": self.rank,
            "dimension": self.dimension,
            "members": sorted(self.members),
        }


# ============================================================================
# Incremental echelon helpers
# ============================================================================


def _reduce(row: Sequence[Fraction], equations: Sequence[Row], pivots: Sequence[int]) -> List[Fraction]:
    out = list(row)
    for eq, p in zip(equations, pivots):
        f = out[p]
        if f != 0:
            out = [a - f * b for a, b in zip(out, eq)]
    return out


def _extend(
    equations: Tuple[Row, ...], pivots: Tuple[int, ...], row: Sequence[int]
) -> Optional[Tuple[Tuple[Row, ...], Tuple[int, ...]]]:
    """
    Add one augmented row to a reduced echelon system.

    Returns None when the row is already implied (the hyperplane contains
    the flat) and a pair of empty tuples when the enlarged system is
    inconsistent (the intersection is empty).
    """
    reduced = _reduce([Fraction(v) for v in row], equations, pivots)
    width = len(reduced) - 1
    p = next((j for j in range(width) if reduced[j] != 0), None)
    if p is None:
        if reduced[-1] == 0:
            return None
        return (), ()
    lead = reduced[p]
    new_row = tuple(v / lead for v in reduced)
    rows: List[Row] = []
    for eq in equations:
        f = eq[p]
        rows.append(tuple(a - f * b for a, b in zip(eq, new_row)) if f != 0 else eq)
    rows.append(new_row)
    all_pivots = list(pivots) + [p]
    order = sorted(range(len(rows)), key=lambda k: all_pivots[k])
    return tuple(rows[k] for k in order), tuple(all_pivots[k] for k in order)


def _contains(flat_equations: Tuple[Row, ...], pivots: Tuple[int, ...], row: Sequence[int]) -> bool:
    reduced = _reduce([Fraction(v) for v in row], flat_equations, pivots)
    return not any(reduced)


def flat_of(arrangement: Arrangement, indices: Sequence[int]) -> Flat:
    """
    Intersection of the hyperplanes at `indices` as a Flat of the arrangement

    Raises:
        DomainError: If the intersection is empty
    """
    equations: Tuple[Row, ...] = ()
    pivots: Tuple[int, ...] = ()
    for i in indices:
        step = _extend(equations, pivots, arrangement[i].row)
        if step is None:
            continue
        if not step[0]:
            raise DomainError(f"Hyperplanes {list(indices)} have empty intersection")
        equations, pivots = step
    members = frozenset(
        k
        for k, h in enumerate(arrangement.hyperplanes)
        if _contains(equations, pivots, h.row)
    )
    return Flat(equations, pivots, members, arrangement.dimension - len(equations))


# ============================================================================
# Lattice
# ============================================================================


class IntersectionLattice:
    """
    Flats of an arrangement grouped by rank, with Möbius values.

    Within each rank flats are sorted by their echelon equations, so the
    ordering does not depend on hyperplane order.
    """

    def __init__(self, arrangement: Arrangement, levels: List[List[Flat]], mobius: Dict[Flat, int]):
        self.arrangement = arrangement
        self.levels = levels
        self.mobius = mobius

    @property
    def rank(self) -> int:
        """Largest flat rank"""
        return len(self.levels) - 1

    @property
    def ambient(self) -> Flat:
        return self.levels[0][0]

    def flats(self) -> Iterator[Flat]:
        for level in self.levels:
            yield from level

    def flats_of_rank(self, rank: int) -> List[Flat]:
        if 0 <= rank < len(self.levels):
            return list(self.levels[rank])
        return []

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __contains__(self, flat: object) -> bool:
        return flat in self.mobius

    def find(self, flat: Flat) -> Flat:
        """Lattice element with the same equations, or DomainError"""
        for candidate in self.flats_of_rank(flat.rank):
            if candidate.equations == flat.equations:
                return candidate
        raise DomainError("Flat does not belong to this lattice")

    def flats_inside(self, index: int) -> List[Flat]:
        """Flats contained in hyperplane `index`"""
        return [f for f in self.flats() if index in f.members]

    def characteristic_polynomial(self) -> UniPoly:
        """sum over flats of mu(X) t^dim(X)"""
        coeffs = [0] * (self.arrangement.dimension + 1)
        for flat, mu in self.mobius.items():
            coeffs[flat.dimension] += mu
        return UniPoly(coeffs)

    def summary(self) -> List[Dict]:
        return [
            {"rank": r, "flats": len(level), "mobius_sum": sum(self.mobius[f] for f in level)}
            for r, level in enumerate(self.levels)
        ]


def intersection_lattice(arrangement: Arrangement, max_flats: Optional[int] = None) -> IntersectionLattice:
    """
    Build L(A) rank by rank

    Every flat of rank r+1 is X ∩ H for a flat X of rank r and a hyperplane
    H not containing X; duplicates are merged on their echelon key.

    Args:
        arrangement: Any arrangement (affine, non-essential or empty)
        max_flats: Flat budget, defaults to the configured lattice_flats

    Returns:
        The lattice with Möbius values

    Raises:
        ResourceBudgetError: If more than max_flats flats appear
        InvariantViolation: If a Möbius value has the wrong sign
    """
    limit = get_settings().budgets.lattice_flats if max_flats is None else max_flats
    n = len(arrangement)
    rows = [h.row for h in arrangement.hyperplanes]
    ambient = Flat((), (), frozenset(), arrangement.dimension)
    levels: List[List[Flat]] = [[ambient]]
    total = 1

    while True:
        seen: Dict[Tuple[Row, ...], Flat] = {}
        for parent in levels[-1]:
            covered = set(parent.members)
            for h in range(n):
                if h in covered:
                    continue
                step = _extend(parent.equations, parent.pivots, rows[h])
                if step is None or not step[0]:
                    continue
                equations, pivots = step
                child = seen.get(equations)
                if child is None:
                    members = set(parent.members)
                    members.add(h)
                    for k in range(n):
                        if k not in members and _contains(equations, pivots, rows[k]):
                            members.add(k)
                    child = Flat(
                        equations,
                        pivots,
                        frozenset(members),
                        arrangement.dimension - len(equations),
                    )
                    seen[equations] = child
                    total += 1
                    if total > limit:
                        raise ResourceBudgetError(
                            "lattice_flats", limit, total, "intersection lattice"
                        )
                covered |= child.members
        if not seen:
            break
        levels.append([seen[key] for key in sorted(seen)])
        logger.debug(f"Rank {len(levels) - 1}: {len(seen)} flats")

    mobius = _mobius(levels)
    logger.debug(f"Lattice of {n} hyperplanes: {total} flats, rank {len(levels) - 1}")
    return IntersectionLattice(arrangement, levels, mobius)


def _mobius(levels: List[List[Flat]]) -> Dict[Flat, int]:
    """mu(V) = 1 and mu(X) = -sum of mu(Y) over flats Y strictly containing X"""
    mobius: Dict[Flat, int] = {levels[0][0]: 1}
    masks: List[List[Tuple[int, int]]] = [[(0, 1)]]
    for r in range(1, len(levels)):
        level_masks = []
        for flat in levels[r]:
            mask = flat.mask
            if r == 1:
                mu = -1
            elif r == 2:
                mu = len(flat.members) - 1
            else:
                total = 0
                for lower in masks:
                    for m, value in lower:
                        if m & ~mask == 0:
                            total += value
                mu = -total
            if mu == 0 or (mu > 0) != (r % 2 == 0):
                raise InvariantViolation(
                    f"Möbius value {mu} of a rank-{r} flat has the wrong sign"
                )
            mobius[flat] = mu
            level_masks.append((mask, mu))
        masks.append(level_masks)
    return mobius
