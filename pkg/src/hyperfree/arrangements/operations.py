"""
Arrangement operations - cone, deletion, restriction charts, Ziegler multirestriction,
localization and essentialization
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from hyperfree.algebra.matrices import MatrixQ, rref
from hyperfree.algebra.polynomials import MultiPoly
from hyperfree.algebra.scalars import ScalarLike, as_scalar
from hyperfree.arrangements.lattice import Flat, flat_of
from hyperfree.arrangements.models import Arrangement, Hyperplane, Multiplicity
from hyperfree.errors import DimensionError, DomainError


# ============================================================================
# Restriction chart
# ============================================================================


@dataclass(frozen=True)
class RestrictionChart:
    """
    Affine chart of a hyperplane H: a . x = d in ambient dimension l.

    H is solved for its pivot variable x_p, and the remaining l-1
    coordinates (in their original order) parametrize H.
    """

    hyperplane: Hyperplane

    @property
    def ambient_dimension(self) -> int:
        return self.hyperplane.dimension

    @property
    def pivot(self) -> int:
        return self.hyperplane.pivot

    @property
    def kept(self) -> List[int]:
        """Ambient indices of the chart coordinates"""
        return [j for j in range(self.ambient_dimension) if j != self.pivot]

    def pivot_substitution(self) -> MultiPoly:
        """x_p = (d - sum_{j != p} a_j x_j) / a_p as a polynomial in the ambient ring"""
        a = self.hyperplane.normal
        p = self.pivot
        coeffs = [Fraction(0) if j == p else Fraction(-a[j], a[p]) for j in range(len(a))]
        return MultiPoly.linear_form(coeffs, Fraction(self.hyperplane.constant, a[p]))

    def pullback(self, poly: MultiPoly) -> MultiPoly:
        """Restrict an ambient polynomial to H, in chart coordinates"""
        if poly.arity != self.ambient_dimension:
            raise DimensionError(
                f"Polynomial arity {poly.arity} does not match chart of {self.ambient_dimension}"
            )
        return poly.substitute(self.pivot, self.pivot_substitution()).drop_variable(self.pivot)

    def lift(self, point: Sequence[ScalarLike]) -> List[Fraction]:
        """Ambient coordinates of a chart point"""
        if len(point) != self.ambient_dimension - 1:
            raise DimensionError(f"Chart point must have {self.ambient_dimension - 1} coordinates")
        values = [as_scalar(v) for v in point]
        full = [Fraction(0)] * self.ambient_dimension
        for j, v in zip(self.kept, values):
            full[j] = v
        full[self.pivot] = self.pivot_substitution().evaluate(full)
        return full

    def restrict_hyperplane(self, other: Hyperplane) -> Optional[Hyperplane]:
        """
        H ∩ other in chart coordinates

        Returns:
            The restricted hyperplane, or None when other is parallel to H

        Raises:
            DomainError: If other equals H
        """
        a, d = self.hyperplane.normal, self.hyperplane.constant
        b, e = other.normal, other.constant
        p = self.pivot
        ratio = Fraction(b[p], a[p])
        normal = [b[j] - ratio * a[j] for j in self.kept]
        constant = e - ratio * d
        if not any(normal):
            if constant == 0:
                raise DomainError(f"{other} coincides with the restriction hyperplane")
            return None
        return Hyperplane.from_coefficients(normal, constant)

    def to_dict(self) -> Dict:
        return {
            "pivot": self.pivot,
            "kept": self.kept,
            "hyperplane": list(self.hyperplane.row),
        }


@dataclass(frozen=True)
class Restriction:
    """A^H with its chart and, per restricted hyperplane, the source indices of A"""

    index: int
    chart: RestrictionChart
    arrangement: Arrangement
    sources: Tuple[Tuple[int, ...], ...]

    @property
    def multiplicity(self) -> Multiplicity:
        """Ziegler multiplicity: number of other hyperplanes of A through each X"""
        return Multiplicity(tuple(len(s) for s in self.sources))


# ============================================================================
# Operations
# ============================================================================


def deletion(arrangement: Arrangement, index: int) -> Arrangement:
    """A minus H_index, order preserved"""
    arrangement.check_index(index)
    return arrangement.subarrangement(
        [k for k in range(len(arrangement)) if k != index]
    )


def restrict(arrangement: Arrangement, index: int) -> Restriction:
    """
    Restriction A^H of the arrangement to H = H_index

    Args:
        arrangement: Any arrangement
        index: Index of the hyperplane to restrict to

    Returns:
        Restriction carrying the (l-1)-dimensional arrangement, the chart and
        the source hyperplanes of each restricted hyperplane

    Raises:
        DomainError: If index is out of range or l = 0
    """
    arrangement.check_index(index)
    chart = RestrictionChart(arrangement[index])
    order: List[Hyperplane] = []
    sources: Dict[Hyperplane, List[int]] = {}
    for k, h in enumerate(arrangement.hyperplanes):
        if k == index:
            continue
        image = chart.restrict_hyperplane(h)
        if image is None:
            continue
        if image not in sources:
            sources[image] = []
            order.append(image)
        sources[image].append(k)

    names = [arrangement.variable_names[j] for j in chart.kept]
    restricted = Arrangement(arrangement.dimension - 1, tuple(order), tuple(names))
    logger.debug(
        f"Restricted {len(arrangement)} hyperplanes to H{index}: {len(order)} remain"
    )
    return Restriction(
        index=index,
        chart=chart,
        arrangement=restricted,
        sources=tuple(tuple(sources[h]) for h in order),
    )


def ziegler(arrangement: Arrangement, index: int) -> Tuple[Arrangement, Multiplicity]:
    """
    Ziegler multirestriction (A^H, m^H) of a central arrangement

    m^H(X) counts the hyperplanes of A other than H that contain X, so the
    multiplicities sum to |A| - 1.
    """
    arrangement.require_central("Ziegler multirestriction")
    restriction = restrict(arrangement, index)
    return restriction.arrangement, restriction.multiplicity


def cone(arrangement: Arrangement) -> Arrangement:
    """
    Cone cA in dimension l+1 with the new coordinate z last

    H_0: z = 0 comes first, then a . x - d z = 0 for each a . x = d.
    """
    dim = arrangement.dimension
    infinity = Hyperplane(tuple([0] * dim + [1]), 0)
    lifted = [
        Hyperplane.from_coefficients(list(h.normal) + [-h.constant], 0)
        for h in arrangement.hyperplanes
    ]
    names = None
    if arrangement.names:
        used = set(arrangement.names)
        extra = next(n for n in ("z", "w", "x0", "h0") if n not in used)
        names = tuple(arrangement.names) + (extra,)
    return Arrangement(dim + 1, (infinity, *lifted), names)


def localization(arrangement: Arrangement, flat: Flat) -> Arrangement:
    """
    A_X: the hyperplanes containing X, same ambient dimension and order

    Raises:
        DomainError: If X is not a flat of A
    """
    if not flat.members:
        if flat.rank == 0:
            return Arrangement(arrangement.dimension, (), arrangement.names)
        raise DomainError("Flat is not an intersection of hyperplanes of the arrangement")
    if max(flat.members) >= len(arrangement):
        raise DomainError("Flat refers to hyperplanes outside the arrangement")
    recomputed = flat_of(arrangement, sorted(flat.members))
    if recomputed.equations != flat.equations or recomputed.members != flat.members:
        raise DomainError("Flat is not a flat of this arrangement")
    return arrangement.subarrangement(sorted(flat.members))


def essentialize(arrangement: Arrangement) -> Tuple[Arrangement, int]:
    """
    Re-express a central arrangement on the row space of its normals

    Coordinates are the pivot columns of the reduced echelon form of the
    normal matrix, so each normal a maps to (a_p for p in pivots).

    Returns:
        (essential arrangement of rank = dimension, dropped dimension)
    """
    arrangement.require_central("essentialize")
    if not arrangement.hyperplanes:
        return Arrangement(0, ()), arrangement.dimension
    _, pivots = rref(MatrixQ.from_rows([h.normal for h in arrangement.hyperplanes]))
    hyperplanes = tuple(
        Hyperplane.from_coefficients([h.normal[p] for p in pivots], 0)
        for h in arrangement.hyperplanes
    )
    names = tuple(arrangement.variable_names[p] for p in pivots)
    dropped = arrangement.dimension - len(pivots)
    if dropped:
        logger.debug(f"Essentialized: dropped {dropped} center dimensions")
    return Arrangement(len(pivots), hyperplanes, names), dropped
