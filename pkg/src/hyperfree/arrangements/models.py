"""
Data models for hyperplane (multi)arrangements
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from hyperfree.algebra.polynomials import MultiPoly, default_variable_names
from hyperfree.algebra.scalars import ScalarLike, as_scalar, primitive_vector
from hyperfree.errors import DimensionError, DomainError


# ============================================================================
# Hyperplane
# ============================================================================


@dataclass(frozen=True, order=True)
class Hyperplane:
    """
    The locus normal . x = constant, stored in canonical integer form.

    The row (normal | constant) has cleared denominators, content 1 and a
    positive first nonzero normal entry, so equal hyperplanes compare equal.
    """

    normal: Tuple[int, ...]
    constant: int = 0

    def __post_init__(self):
        if not any(self.normal):
            raise DomainError("Hyperplane normal vector must be nonzero")

    @classmethod
    def from_coefficients(
        cls, normal: Sequence[ScalarLike], constant: ScalarLike = 0
    ) -> "Hyperplane":
        """Canonicalize an arbitrary rational equation normal . x = constant"""
        values = [as_scalar(v) for v in normal]
        if not any(values):
            raise DomainError("Hyperplane normal vector must be nonzero")
        row = primitive_vector(values + [as_scalar(constant)])
        return cls(normal=tuple(row[:-1]), constant=row[-1])

    @property
    def dimension(self) -> int:
        return len(self.normal)

    @property
    def is_linear(self) -> bool:
        return self.constant == 0

    @property
    def pivot(self) -> int:
        """Index of the first nonzero normal coordinate"""
        return next(i for i, v in enumerate(self.normal) if v != 0)

    @property
    def row(self) -> Tuple[int, ...]:
        """Augmented row (normal | constant)"""
        return self.normal + (self.constant,)

    def linear_form(self) -> MultiPoly:
        """alpha(x) = normal . x - constant"""
        return MultiPoly.linear_form(list(self.normal), -self.constant)

    def evaluate(self, point: Sequence[ScalarLike]) -> Fraction:
        if len(point) != self.dimension:
            raise DimensionError(
                f"Point of dimension {len(point)} for hyperplane in {self.dimension}"
            )
        return sum(
            (a * as_scalar(x) for a, x in zip(self.normal, point)), Fraction(0)
        ) - self.constant

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = list(names) if names else default_variable_names(self.dimension)
        lhs = MultiPoly.linear_form(list(self.normal)).format(names)
        return f"{lhs} = {self.constant}"

    def __str__(self) -> str:
        return self.format()


# ============================================================================
# Arrangement and multiplicity
# ============================================================================


@dataclass(frozen=True)
class Arrangement:
    """Ordered finite set of distinct hyperplanes in dimension `dimension`"""

    dimension: int
    hyperplanes: Tuple[Hyperplane, ...] = ()
    names: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.dimension < 0:
            raise DimensionError("Arrangement dimension must be nonnegative")
        seen: Dict[Hyperplane, int] = {}
        for i, h in enumerate(self.hyperplanes):
            if h.dimension != self.dimension:
                raise DimensionError(
                    f"Hyperplane {i} lives in dimension {h.dimension}, "
                    f"expected {self.dimension}"
                )
            if h in seen:
                raise DomainError(
                    f"Duplicate hyperplane {h} at positions {seen[h]} and {i}"
                )
            seen[h] = i
        if self.names is not None and len(self.names) != self.dimension:
            raise DimensionError(
                f"{len(self.names)} variable names for dimension {self.dimension}"
            )

    @classmethod
    def from_equations(
        cls,
        dimension: int,
        equations: Sequence[Tuple[Sequence[ScalarLike], ScalarLike]],
        names: Optional[Sequence[str]] = None,
    ) -> "Arrangement":
        """Build from (normal, constant) pairs"""
        hyperplanes = tuple(
            Hyperplane.from_coefficients(normal, constant)
            for normal, constant in equations
        )
        return cls(dimension, hyperplanes, tuple(names) if names else None)

    @classmethod
    def from_normals(
        cls, normals: Sequence[Sequence[ScalarLike]], names: Optional[Sequence[str]] = None
    ) -> "Arrangement":
        """Central arrangement from a nonempty list of normals"""
        if not normals:
            raise DomainError("from_normals needs at least one normal")
        return cls.from_equations(len(normals[0]), [(n, 0) for n in normals], names)

    @property
    def is_central(self) -> bool:
        return all(h.is_linear for h in self.hyperplanes)

    @property
    def variable_names(self) -> List[str]:
        return list(self.names) if self.names else default_variable_names(self.dimension)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self) -> Iterator[Hyperplane]:
        return iter(self.hyperplanes)

    def __getitem__(self, index: int) -> Hyperplane:
        return self.hyperplanes[self.check_index(index)]

    def check_index(self, index: int) -> int:
        if not 0 <= index < len(self.hyperplanes):
            raise DomainError(
                f"Hyperplane index {index} out of range for {len(self)} hyperplanes"
            )
        return index

    def index_of(self, hyperplane: Hyperplane) -> int:
        try:
            return self.hyperplanes.index(hyperplane)
        except ValueError as e:
            raise DomainError(f"{hyperplane} is not in the arrangement") from e

    def rank(self) -> int:
        """Rank of the normal vectors (codimension of the center if central)"""
        from hyperfree.algebra.matrices import MatrixQ, rank

        if not self.hyperplanes:
            return 0
        return rank(MatrixQ.from_rows([h.normal for h in self.hyperplanes]))

    def subarrangement(self, indices: Sequence[int]) -> "Arrangement":
        """Hyperplanes at the given indices, kept in original order"""
        keep = sorted(set(self.check_index(i) for i in indices))
        return Arrangement(
            self.dimension, tuple(self.hyperplanes[i] for i in keep), self.names
        )

    def require_central(self, operation: str) -> None:
        if not self.is_central:
            raise DomainError(f"{operation} requires a central arrangement")

    def format(self) -> str:
        names = self.variable_names
        return "; ".join(h.format(names) for h in self.hyperplanes) or "(empty)"


@dataclass(frozen=True)
class Multiplicity:
    """Nonnegative integer multiplicity per hyperplane index"""

    values: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for v in self.values:
            if v < 0:
                raise DomainError(f"Multiplicities must be nonnegative, got {v}")

    @classmethod
    def constant(cls, count: int, value: int = 1) -> "Multiplicity":
        return cls(tuple([value] * count))

    @classmethod
    def simple(cls, arrangement: Arrangement) -> "Multiplicity":
        return cls.constant(len(arrangement), 1)

    @property
    def weight(self) -> int:
        """|m| = sum of all multiplicities"""
        return sum(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def decremented(self) -> "Multiplicity":
        """m - 1 (floored at zero)"""
        return Multiplicity(tuple(max(v - 1, 0) for v in self.values))

    def validate_for(self, arrangement: Arrangement) -> bool:
        if len(self.values) != len(arrangement):
            raise DimensionError(
                f"Multiplicity has {len(self.values)} entries for "
                f"{len(arrangement)} hyperplanes"
            )
        return True


def defining_polynomial(
    arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None
) -> MultiPoly:
    """Q(A, m) = product of alpha_H^m(H)"""
    m = multiplicity or Multiplicity.simple(arrangement)
    m.validate_for(arrangement)
    result = MultiPoly.constant(1, arrangement.dimension)
    for h, k in zip(arrangement.hyperplanes, m.values):
        if k:
            result = result * h.linear_form() ** k
    logger.debug(f"Q(A,m) of degree {result.degree} built from {len(arrangement)} forms")
    return result
