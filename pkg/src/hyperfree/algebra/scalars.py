"""
Scalars - exact rationals and integer-vector normalization
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Sequence, Union

from hyperfree.errors import DomainError

# Fraction keeps numerator/denominator reduced with a positive denominator,
# and zero is stored as 0/1.
Scalar = Fraction

ScalarLike = Union[int, Fraction, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Convert an int, Fraction or literal string to a Scalar"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise DomainError(f"Not an exact scalar: {value!r}")


def parse_scalar(text: str) -> Fraction:
    """
    Parse the literal grammar `p/q` or `p`

    Args:
        text: Literal such as "3", "-2/5"

    Returns:
        Reduced Scalar

    Raises:
        DomainError: If the literal is malformed or has a zero denominator
    """
    token = text.strip()
    if not token:
        raise DomainError("Empty rational literal")
    num, sep, den = token.partition("/")
    try:
        if sep:
            if not den.strip():
                raise ValueError("missing denominator")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"Invalid rational literal '{text}': {e}") from e


def format_scalar(value: Fraction) -> str:
    """Render a Scalar as `p` or `p/q`"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def clear_denominators(values: Sequence[Fraction]) -> List[int]:
    """Multiply a rational vector by the lcm of its denominators"""
    common = reduce(lcm, (Fraction(v).denominator for v in values), 1)
    return [int(Fraction(v) * common) for v in values]


def content(values: Iterable[int]) -> int:
    """gcd of the absolute values of an integer vector (0 for the zero vector)"""
    return reduce(gcd, (abs(v) for v in values), 0)


def primitive_vector(values: Sequence[Fraction]) -> List[int]:
    """
    Canonical integer representative of the line spanned by a rational vector

    Denominators are cleared, the content is made 1 and the first nonzero
    entry is made positive. The zero vector maps to itself.
    """
    ints = clear_denominators(values)
    g = content(ints)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints
