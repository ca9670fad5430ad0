"""
Matrices - dense exact matrices with fraction-free (Bareiss) elimination
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from hyperfree.algebra.scalars import (
    ScalarLike,
    as_scalar,
    clear_denominators,
    primitive_vector,
)
from hyperfree.errors import DimensionError


class MatrixQ:
    """
    Dense rows x cols matrix of Scalars stored row-major.

    Instances are immutable; all operations return new values.
    """

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike]):
        values = tuple(as_scalar(v) for v in entries)
        if rows < 0 or cols < 0:
            raise DimensionError(f"Negative matrix shape {rows}x{cols}")
        if len(values) != rows * cols:
            raise DimensionError(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(values)}"
            )
        self._rows = rows
        self._cols = cols
        self._entries = values

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None
    ) -> "MatrixQ":
        """Build from a list of rows; `cols` is needed for an empty row list"""
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError(f"Ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, (v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> List[Fraction]:
        return list(self._entries[i * self._cols : (i + 1) * self._cols])

    def to_rows(self) -> List[List[Fraction]]:
        return [self.row(i) for i in range(self._rows)]

    def transpose(self) -> "MatrixQ":
        return MatrixQ(
            self._cols,
            self._rows,
            (self[i, j] for j in range(self._cols) for i in range(self._rows)),
        )

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self._cols != other._rows:
            raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self._rows):
            r = self.row(i)
            for j in range(other._cols):
                out.append(sum((r[k] * other[k, j] for k in range(self._cols)), Fraction(0)))
        return MatrixQ(self._rows, other._cols, out)

    def apply(self, vector: Sequence[ScalarLike]) -> List[Fraction]:
        """Matrix-vector product M v"""
        if len(vector) != self._cols:
            raise DimensionError(
                f"Vector of length {len(vector)} for {self._cols} columns"
            )
        v = [as_scalar(x) for x in vector]
        return [
            sum((a * b for a, b in zip(self.row(i), v)), Fraction(0))
            for i in range(self._rows)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        return f"MatrixQ({self._rows}x{self._cols})"


# ============================================================================
# Fraction-free elimination
# ============================================================================


def bareiss_echelon(rows: List[List[int]], cols: int) -> Tuple[List[List[int]], List[int], int]:
    """
    Fraction-free row echelon form of an integer matrix (in place)

    Every intermediate entry is a minor of the input, so the divisions by
    the previous pivot are exact.

    Args:
        rows: Integer rows, modified in place
        cols: Number of columns

    Returns:
        (rows, pivot columns, sign of the row permutation)
    """
    n = len(rows)
    pivots: List[int] = []
    prev = 1
    sign = 1
    r = 0
    for c in range(cols):
        if r >= n:
            break
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pivot_row = rows[r]
        pv = pivot_row[c]
        for i in range(r + 1, n):
            row = rows[i]
            f = row[c]
            if f == 0:
                for j in range(c + 1, cols):
                    if row[j]:
                        row[j] = (pv * row[j]) // prev
                continue
            for j in range(c + 1, cols):
                row[j] = (pv * row[j] - f * pivot_row[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def det(M: MatrixQ) -> Fraction:
    """
    Exact determinant by fraction-free elimination

    Args:
        M: Square matrix

    Returns:
        det(M)

    Raises:
        DimensionError: If M is not square
    """
    if M.rows != M.cols:
        raise DimensionError(f"Determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for i in range(n):
        r = M.row(i)
        ints = clear_denominators(r)
        nz = next((k for k, v in enumerate(r) if v != 0), None)
        if nz is None:
            return Fraction(0)
        scale *= Fraction(ints[nz]) / r[nz]
        rows.append(ints)
    rows, pivots, sign = bareiss_echelon(rows, n)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def rank(M: MatrixQ) -> int:
    """Exact rank"""
    rows = [clear_denominators(M.row(i)) for i in range(M.rows)]
    _, pivots, _ = bareiss_echelon(rows, M.cols)
    return len(pivots)


def rref(M: MatrixQ) -> Tuple[MatrixQ, List[int]]:
    """
    Reduced row echelon form with pivot entries 1 and zero rows removed

    Returns:
        (R, pivot columns) where R has one row per pivot
    """
    rows = [clear_denominators(M.row(i)) for i in range(M.rows)]
    rows, pivots, _ = bareiss_echelon(rows, M.cols)
    reduced: List[List[Fraction]] = []
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        row = [Fraction(v, rows[k][c]) for v in rows[k]]
        for later, pc in zip(reduced, reversed(pivots[k + 1 :])):
            f = row[pc]
            if f != 0:
                row = [a - f * b for a, b in zip(row, later)]
        reduced.append(row)
    reduced.reverse()
    return MatrixQ.from_rows(reduced, cols=M.cols), pivots


def kernel_basis(M: MatrixQ) -> List[List[int]]:
    """
    Canonical basis of the right null space

    One vector per free column (in column order): the free variable is set
    to 1, the other free variables to 0, and the vector is scaled to integer
    entries with content 1 and first nonzero entry positive.

    Args:
        M: Any matrix

    Returns:
        List of integer vectors of length M.cols
    """
    cols = M.cols
    rows = []
    forced_zero = set()
    for i in range(M.rows):
        ints = clear_denominators(M.row(i))
        support = [j for j, v in enumerate(ints) if v != 0]
        if not support:
            continue
        if len(support) == 1:
            forced_zero.add(support[0])
            continue
        rows.append(ints)

    # Unknowns fixed to zero by single-entry rows are eliminated up front.
    live = [j for j in range(cols) if j not in forced_zero]
    reduced = [[r[j] for j in live] for r in rows]
    reduced = [r for r in reduced if any(r)]
    echelon, pivots, _ = bareiss_echelon(reduced, len(live))
    logger.debug(
        f"kernel_basis: {M.rows}x{cols}, {len(forced_zero)} forced zeros, "
        f"rank {len(pivots) + len(forced_zero)}"
    )

    pivot_set = set(pivots)
    free = [k for k in range(len(live)) if k not in pivot_set]
    basis: List[List[int]] = []
    for f in free:
        x: List[Fraction] = [Fraction(0)] * len(live)
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = echelon[r]
            s = sum(
                (row[j] * x[j] for j in range(pc + 1, len(live)) if row[j] and x[j]),
                Fraction(0),
            )
            x[pc] = -s / row[pc]
        full = [Fraction(0)] * cols
        for k, j in enumerate(live):
            full[j] = x[k]
        basis.append(primitive_vector(full))
    return basis
