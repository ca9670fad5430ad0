"""
Vector fields - polynomial derivations theta = sum f_i d/dx_i and their text syntax
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from hyperfree.algebra.polynomials import MultiPoly, default_variable_names
from hyperfree.algebra.scalars import ScalarLike, as_scalar
from hyperfree.arrangements.models import Arrangement, defining_polynomial
from hyperfree.errors import ArrangementParseError, DimensionError, DomainError

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class VectorField:
    """
    A derivation theta = sum_i f_i * d/dx_i with polynomial coefficients.

    Immutable; arithmetic returns new fields.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Iterable[MultiPoly]):
        comps = tuple(components)
        if not comps:
            raise DimensionError("A vector field needs at least one component")
        arity = comps[0].arity
        if arity != len(comps):
            raise DimensionError(
                f"{len(comps)} components of arity {arity}; expected arity {len(comps)}"
            )
        for c in comps:
            if c.arity != arity:
                raise DimensionError("Vector field components must share one arity")
        self._components: Tuple[MultiPoly, ...] = comps

    @classmethod
    def zero(cls, arity: int) -> "VectorField":
        return cls(MultiPoly.zero(arity) for _ in range(arity))

    @classmethod
    def coordinate(cls, index: int, arity: int, coefficient: Optional[MultiPoly] = None) -> "VectorField":
        """coefficient * d/dx_index (coefficient defaults to 1)"""
        coeff = coefficient if coefficient is not None else MultiPoly.constant(1, arity)
        return cls(coeff if i == index else MultiPoly.zero(arity) for i in range(arity))

    # -- accessors --------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self._components)

    @property
    def components(self) -> Tuple[MultiPoly, ...]:
        return self._components

    def __getitem__(self, index: int) -> MultiPoly:
        return self._components[index]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._components)

    @property
    def pdeg(self) -> Optional[int]:
        """Common homogeneous degree of the nonzero components, else None"""
        degrees = set()
        for c in self._components:
            if c.is_zero():
                continue
            d = c.homogeneous_degree()
            if d is None:
                return None
            degrees.add(d)
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.pdeg is not None

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "VectorField") -> None:
        if other.arity != self.arity:
            raise DimensionError(f"Arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField(a + b for a, b in zip(self._components, other._components))

    def __sub__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        return VectorField(a - b for a, b in zip(self._components, other._components))

    def __neg__(self) -> "VectorField":
        return VectorField(-c for c in self._components)

    def __mul__(self, factor: Union[MultiPoly, ScalarLike]) -> "VectorField":
        """F * theta for a polynomial or scalar F"""
        if isinstance(factor, MultiPoly):
            if factor.arity != self.arity:
                raise DimensionError("Polynomial factor has the wrong arity")
            return VectorField(factor * c for c in self._components)
        f = as_scalar(factor)
        return VectorField(c.scale(f) for c in self._components)

    __rmul__ = __mul__

    def apply(self, poly: MultiPoly) -> MultiPoly:
        """theta(f) = sum_i f_i * df/dx_i"""
        if poly.arity != self.arity:
            raise DimensionError(f"Cannot apply a field of arity {self.arity} to arity {poly.arity}")
        result = MultiPoly.zero(self.arity)
        for i, c in enumerate(self._components):
            if c.is_zero():
                continue
            partial = poly.derivative(i)
            if not partial.is_zero():
                result = result + c * partial
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    # -- formatting -------------------------------------------------------

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """Component syntax `f1; f2; ...`"""
        return "; ".join(c.format(names) for c in self._components)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"VectorField({self.format()})"


# ============================================================================
# Standard fields
# ============================================================================


def euler_field(arity: int) -> VectorField:
    """theta_E = sum x_i d/dx_i"""
    return VectorField(MultiPoly.variable(i, arity) for i in range(arity))


def power_sum_fields(n: int) -> List[VectorField]:
    """delta_k = sum x_i^k d/dx_i for k = 0..n-1 (a basis of D for the braid arrangement)"""
    return [
        VectorField(MultiPoly.variable(i, n) ** k for i in range(n)) for k in range(n)
    ]


def rank2_simple_basis(arrangement: Arrangement) -> List[VectorField]:
    """
    Basis {theta_E, Q_y d/dx - Q_x d/dy} of D(A) for a central line arrangement

    Raises:
        DomainError: If A is not central in dimension 2
    """
    if arrangement.dimension != 2:
        raise DomainError("rank2_simple_basis needs an arrangement in dimension 2")
    arrangement.require_central("rank2_simple_basis")
    q = defining_polynomial(arrangement)
    return [euler_field(2), VectorField([q.derivative(1), -q.derivative(0)])]


# ============================================================================
# sympy bridge and text syntax
# ============================================================================


def to_sympy(poly: MultiPoly, symbols: Sequence[sympy.Symbol]) -> sympy.Expr:
    expr = sympy.Integer(0)
    for exps, c in poly.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, exps):
            if k:
                term *= s**k
        expr += term
    return expr


def from_sympy(expr: sympy.Expr, symbols: Sequence[sympy.Symbol]) -> MultiPoly:
    """Convert a polynomial sympy expression in the given symbols"""
    extra = expr.free_symbols - set(symbols)
    if extra:
        raise DomainError(f"Unknown variables: {', '.join(sorted(map(str, extra)))}")
    if expr == 0:
        return MultiPoly.zero(len(symbols))
    try:
        poly = sympy.Poly(expr, *symbols, domain=sympy.QQ)
    except Exception as e:
        raise DomainError(f"Not a polynomial with rational coefficients: {expr}") from e
    return MultiPoly(
        len(symbols),
        {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms()},
    )


def parse_polynomial(text: str, names: Sequence[str]) -> MultiPoly:
    """
    Parse `c*x^e*y^f + ...` with integer or p/q coefficients

    Raises:
        ArrangementParseError: On syntax errors or unknown variables
    """
    symbols = sympy.symbols(list(names)) if names else []
    local = {n: s for n, s in zip(names, symbols)}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS, evaluate=True)
        return from_sympy(sympy.expand(expr), symbols)
    except ArrangementParseError:
        raise
    except Exception as e:
        raise ArrangementParseError(f"Cannot parse polynomial '{text.strip()}': {e}") from e


def parse_vector_field(text: str, arity: int, names: Optional[Sequence[str]] = None) -> VectorField:
    """
    Parse `f1; f2; ...; f_l` into a VectorField

    Args:
        text: Semicolon-separated component polynomials
        arity: Number of variables l
        names: Variable names, default x, y, z or x1..xl

    Returns:
        The parsed field
    """
    names = list(names) if names else default_variable_names(arity)
    parts = [p for p in text.split(";")]
    if len(parts) == arity + 1 and not parts[-1].strip():
        parts = parts[:-1]
    if len(parts) != arity:
        raise ArrangementParseError(
            f"Vector field needs {arity} components separated by ';', got {len(parts)}"
        )
    return VectorField(parse_polynomial(p, names) for p in parts)


def format_vector_field(field: VectorField, names: Optional[Sequence[str]] = None) -> str:
    return field.format(names)


def parse_basis_file(text: str, arity: int, names: Optional[Sequence[str]] = None) -> List[VectorField]:
    """One vector field per non-empty line; `#` starts a comment"""
    fields = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            fields.append(parse_vector_field(line, arity, names))
        except ArrangementParseError as e:
            raise ArrangementParseError(str(e), line=lineno) from e
    return fields
