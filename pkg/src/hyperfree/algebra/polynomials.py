"""
Polynomials - exact univariate (UniPoly) and sparse multivariate (MultiPoly) polynomials
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from hyperfree.algebra.scalars import ScalarLike, as_scalar, format_scalar
from hyperfree.errors import DimensionError, DomainError

Monomial = Tuple[int, ...]


def _format_coefficient(coeff: Fraction, body: str, first: bool) -> str:
    """Render one signed term `c*body` for polynomial printing"""
    sign = "-" if coeff < 0 else "+"
    magnitude = -coeff if coeff < 0 else coeff
    if not body:
        text = format_scalar(magnitude)
    elif magnitude == 1:
        text = body
    else:
        text = f"{format_scalar(magnitude)}*{body}"
    if first:
        return f"-{text}" if sign == "-" else text
    return f" {sign} {text}"


# ============================================================================
# Univariate polynomials
# ============================================================================


class UniPoly:
    """
    Dense univariate polynomial with Scalar coefficients, lowest degree first.

    The coefficient list is trimmed so the leading coefficient is nonzero;
    the zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[ScalarLike] = ()):
        coeffs = [as_scalar(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value: ScalarLike) -> "UniPoly":
        return cls([value])

    @classmethod
    def variable(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[ScalarLike]) -> "UniPoly":
        """Monic product of (t - r) over the given roots"""
        result = cls([1])
        for r in roots:
            result = result * cls([-as_scalar(r), 1])
        return result

    @classmethod
    def interpolate(cls, xs: Sequence[ScalarLike], ys: Sequence[ScalarLike]) -> "UniPoly":
        """Lagrange interpolant through (xs[i], ys[i]); the xs must be distinct"""
        if len(xs) != len(ys):
            raise DimensionError(f"{len(xs)} nodes but {len(ys)} values")
        nodes = [as_scalar(x) for x in xs]
        if len(set(nodes)) != len(nodes):
            raise DomainError("Interpolation nodes must be distinct")
        result = cls()
        for i, (xi, yi) in enumerate(zip(nodes, ys)):
            basis = cls([1])
            denom = Fraction(1)
            for j, xj in enumerate(nodes):
                if j != i:
                    basis = basis * cls([-xj, 1])
                    denom *= xi - xj
            result = result + basis * (as_scalar(yi) / denom)
        return result

    # -- accessors --------------------------------------------------------

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_monic(self) -> bool:
        return self.leading() == 1

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Union["UniPoly", ScalarLike]) -> "UniPoly":
        other = _as_unipoly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["UniPoly", ScalarLike]) -> "UniPoly":
        return self + (-_as_unipoly(other))

    def __rsub__(self, other: ScalarLike) -> "UniPoly":
        return _as_unipoly(other) - self

    def __mul__(self, other: Union["UniPoly", ScalarLike]) -> "UniPoly":
        other = _as_unipoly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise DomainError("Negative polynomial power")
        result = UniPoly([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __call__(self, value: ScalarLike) -> Fraction:
        """Evaluate by Horner's rule"""
        x = as_scalar(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Euclidean division; raises DomainError on a zero divisor"""
        if divisor.is_zero():
            raise DomainError("Division by the zero polynomial")
        remainder = list(self._coeffs)
        dq = divisor.degree
        lead = divisor.leading()
        if len(remainder) - 1 < dq:
            return UniPoly(), self
        quotient = [Fraction(0)] * (len(remainder) - dq)
        for k in range(len(remainder) - 1, dq - 1, -1):
            c = remainder[k]
            if c == 0:
                continue
            factor = c / lead
            quotient[k - dq] = factor
            for j, d in enumerate(divisor._coeffs):
                remainder[k - dq + j] -= factor * d
        return UniPoly(quotient), UniPoly(remainder[:dq])

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise DomainError(f"{divisor} does not divide {self}")
        return quotient

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor (zero if both are zero)"""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(t)) by Horner's rule"""
        acc = UniPoly()
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc

    # -- formatting -------------------------------------------------------

    def format(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            body = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            parts.append(_format_coefficient(c, body, first=not parts))
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"


def _as_unipoly(value: Union[UniPoly, ScalarLike]) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly([value])


def compose_affine(p: UniPoly, a: ScalarLike, b: ScalarLike) -> UniPoly:
    """
    Return p(a*t + b) exactly

    Args:
        p: Polynomial in t
        a: Slope of the substitution
        b: Offset of the substitution

    Returns:
        The composed polynomial
    """
    return p.compose(UniPoly([as_scalar(b), as_scalar(a)]))


# ============================================================================
# Multivariate polynomials
# ============================================================================


def monomials(arity: int, degree: int) -> List[Monomial]:
    """
    All exponent tuples of the given total degree, in descending lex order

    Args:
        arity: Number of variables
        degree: Total degree

    Returns:
        List of exponent tuples; x_1^d comes first
    """
    if arity == 0:
        return [()] if degree == 0 else []
    out = []
    for combo in combinations_with_replacement(range(arity), degree):
        exps = [0] * arity
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(reverse=True)
    return out


def monomial_count(arity: int, degree: int) -> int:
    """Number of monomials of a given degree, C(degree + arity - 1, arity - 1)"""
    from math import comb

    if arity == 0:
        return 1 if degree == 0 else 0
    if degree < 0:
        return 0
    return comb(degree + arity - 1, arity - 1)


class MultiPoly:
    """
    Sparse polynomial in `arity` variables with Scalar coefficients.

    Terms map exponent tuples to nonzero coefficients.
    """

    __slots__ = ("_arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Optional[Mapping[Monomial, ScalarLike]] = None):
        self._arity = arity
        clean: Dict[Monomial, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != arity:
                raise DimensionError(
                    f"Exponent tuple {exps} does not have length {arity}"
                )
            c = as_scalar(coeff)
            if c != 0:
                clean[tuple(exps)] = c
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Monomial, Fraction]) -> "MultiPoly":
        """Build from an already clean dict (no zero coefficients)"""
        poly = cls.__new__(cls)
        poly._arity = arity
        poly._terms = terms
        poly._hash = None
        return poly

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, value: ScalarLike, arity: int) -> "MultiPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, index: int, arity: int) -> "MultiPoly":
        if not 0 <= index < arity:
            raise DimensionError(f"Variable index {index} out of range for {arity}")
        exps = [0] * arity
        exps[index] = 1
        return cls._raw(arity, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(
        cls, exponents: Sequence[int], coefficient: ScalarLike = 1
    ) -> "MultiPoly":
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def linear_form(
        cls, coefficients: Sequence[ScalarLike], constant: ScalarLike = 0
    ) -> "MultiPoly":
        """sum_i c_i x_i + constant"""
        arity = len(coefficients)
        terms: Dict[Monomial, ScalarLike] = {(0,) * arity: constant}
        for i, c in enumerate(coefficients):
            exps = [0] * arity
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(arity, terms)

    # -- accessors --------------------------------------------------------

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponents: Monomial) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def homogeneous_degree(self) -> Optional[int]:
        """Common degree of all terms, or None if mixed (or zero polynomial)"""
        degrees = {sum(e) for e in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.homogeneous_degree() is not None

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        """Lexicographically largest term"""
        if not self._terms:
            raise DomainError("Zero polynomial has no leading term")
        exps = max(self._terms)
        return exps, self._terms[exps]

    def uses_variable(self, index: int) -> bool:
        return any(e[index] for e in self._terms)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if other._arity != self._arity:
            raise DimensionError(
                f"Arity mismatch: {self._arity} vs {other._arity}"
            )

    def _coerce(self, other: Union["MultiPoly", ScalarLike]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(other, self._arity)

    def __add__(self, other: Union["MultiPoly", ScalarLike]) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            s = terms.get(exps, 0) + c
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return MultiPoly._raw(self._arity, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["MultiPoly", ScalarLike]) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: ScalarLike) -> "MultiPoly":
        return self._coerce(other) - self

    def scale(self, factor: ScalarLike) -> "MultiPoly":
        f = as_scalar(factor)
        if f == 0:
            return MultiPoly.zero(self._arity)
        return MultiPoly._raw(self._arity, {e: c * f for e, c in self._terms.items()})

    def __mul__(self, other: Union["MultiPoly", ScalarLike]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        terms: Dict[Monomial, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return MultiPoly._raw(
            self._arity, {e: c for e, c in terms.items() if c != 0}
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise DomainError("Negative polynomial power")
        result = MultiPoly.constant(1, self._arity)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponents: Monomial, coefficient: ScalarLike = 1) -> "MultiPoly":
        """Multiply by the monomial c * x^exponents"""
        c = as_scalar(coefficient)
        if c == 0:
            return MultiPoly.zero(self._arity)
        return MultiPoly._raw(
            self._arity,
            {
                tuple(a + b for a, b in zip(e, exponents)): v * c
                for e, v in self._terms.items()
            },
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self._arity)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution -------------------------------------------

    def derivative(self, index: int) -> "MultiPoly":
        """Partial derivative with respect to x_index"""
        terms: Dict[Monomial, Fraction] = {}
        for exps, c in self._terms.items():
            k = exps[index]
            if k == 0:
                continue
            new = list(exps)
            new[index] = k - 1
            terms[tuple(new)] = c * k
        return MultiPoly._raw(self._arity, terms)

    def evaluate(self, point: Sequence[ScalarLike]) -> Fraction:
        if len(point) != self._arity:
            raise DimensionError(f"Point has {len(point)} coordinates, need {self._arity}")
        values = [as_scalar(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, k in zip(values, exps):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, index: int, replacement: "MultiPoly") -> "MultiPoly":
        """Replace x_index by a polynomial of the same arity"""
        self._check(replacement)
        powers: Dict[int, MultiPoly] = {0: MultiPoly.constant(1, self._arity)}
        result = MultiPoly.zero(self._arity)
        grouped: Dict[int, Dict[Monomial, Fraction]] = {}
        for exps, c in self._terms.items():
            k = exps[index]
            rest = list(exps)
            rest[index] = 0
            grouped.setdefault(k, {})[tuple(rest)] = c
        for k in sorted(grouped):
            if k not in powers:
                top = max(powers)
                acc = powers[top]
                for j in range(top + 1, k + 1):
                    acc = acc * replacement
                    powers[j] = acc
            result = result + MultiPoly._raw(self._arity, grouped[k]) * powers[k]
        return result

    def drop_variable(self, index: int) -> "MultiPoly":
        """Re-express in arity-1 variables; x_index must not occur"""
        if self.uses_variable(index):
            raise DomainError(f"Variable {index} still occurs in {self}")
        return MultiPoly._raw(
            self._arity - 1,
            {e[:index] + e[index + 1 :]: c for e, c in self._terms.items()},
        )

    def insert_variable(self, index: int) -> "MultiPoly":
        """Embed into arity+1 variables with a new unused x_index"""
        return MultiPoly._raw(
            self._arity + 1,
            {e[:index] + (0,) + e[index:]: c for e, c in self._terms.items()},
        )

    def divmod_linear(self, alpha: "MultiPoly") -> Tuple["MultiPoly", "MultiPoly"]:
        """
        Divide by a polynomial of degree 1

        The division runs in the pivot variable p of alpha (its first variable
        with a nonzero coefficient): alpha = a*x_p + beta with beta free of
        x_p, and the remainder is free of x_p.

        Args:
            alpha: Polynomial of total degree exactly 1

        Returns:
            (quotient, remainder) with self = quotient*alpha + remainder
        """
        self._check(alpha)
        if alpha.degree != 1:
            raise DomainError(f"Not a linear polynomial: {alpha}")
        pivot, a = _linear_pivot(alpha)
        unit = tuple(1 if i == pivot else 0 for i in range(self._arity))
        beta = alpha - MultiPoly._raw(self._arity, {unit: a})

        # g = sum_k g_k x_p^k, synthetic division in x_p over Q[other vars]
        layers: Dict[int, MultiPoly] = {}
        for exps, c in self._terms.items():
            k = exps[pivot]
            rest = list(exps)
            rest[pivot] = 0
            layer = layers.get(k, MultiPoly.zero(self._arity))
            layers[k] = layer + MultiPoly._raw(self._arity, {tuple(rest): c})
        if not layers:
            return MultiPoly.zero(self._arity), MultiPoly.zero(self._arity)

        top = max(layers)
        quotient = MultiPoly.zero(self._arity)
        carry = layers.get(top, MultiPoly.zero(self._arity))
        for k in range(top, 0, -1):
            q_k = carry.scale(1 / a)
            if not q_k.is_zero():
                quotient = quotient + q_k.shift(
                    tuple((k - 1) if i == pivot else 0 for i in range(self._arity))
                )
            carry = layers.get(k - 1, MultiPoly.zero(self._arity)) - q_k * beta
        return quotient, carry

    def exact_div_linear(self, alpha: "MultiPoly") -> "MultiPoly":
        quotient, remainder = self.divmod_linear(alpha)
        if not remainder.is_zero():
            raise DomainError(f"{alpha} does not divide {self}")
        return quotient

    def linear_valuation(self, alpha: "MultiPoly", limit: int) -> int:
        """Largest v <= limit with alpha^v dividing self (limit for zero)"""
        current = self
        for v in range(limit):
            if current.is_zero():
                return limit
            quotient, remainder = current.divmod_linear(alpha)
            if not remainder.is_zero():
                return v
            current = quotient
        return limit

    def ratio_to(self, other: "MultiPoly") -> Optional[Fraction]:
        """c with self == c*other, or None if no such constant exists"""
        self._check(other)
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        exps, lead = other.leading_term()
        c = self.coefficient(exps) / lead
        if c == 0 or self != other.scale(c):
            return None
        return c

    # -- formatting -------------------------------------------------------

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = list(names) if names else default_variable_names(self._arity)
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, key=lambda e: (sum(e), e), reverse=True):
            c = self._terms[exps]
            factors = []
            for name, k in zip(names, exps):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            parts.append(_format_coefficient(c, "*".join(factors), first=not parts))
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MultiPoly({self.format()})"


def _linear_pivot(alpha: MultiPoly) -> Tuple[int, Fraction]:
    for i in range(alpha.arity):
        exps = tuple(1 if j == i else 0 for j in range(alpha.arity))
        c = alpha.coefficient(exps)
        if c != 0:
            return i, c
    raise DomainError(f"Linear polynomial without a variable: {alpha}")


def default_variable_names(arity: int) -> List[str]:
    """x, y, z for arity <= 3, x1..xn beyond"""
    if arity <= 3:
        return ["x", "y", "z"][:arity]
    return [f"x{i + 1}" for i in range(arity)]
