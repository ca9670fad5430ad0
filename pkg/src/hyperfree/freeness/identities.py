"""
Polynomial identities satisfied by free arrangements
"""

from typing import Sequence

from hyperfree.algebra.polynomials import MultiPoly, UniPoly
from hyperfree.errors import DomainError, InvariantViolation


def _exponent_product(exponents: Sequence[int]) -> UniPoly:
    return UniPoly.from_roots(exponents)


def terao_factor_check(chi: UniPoly, exponents: Sequence[int]) -> bool:
    """chi(A, t) == prod (t - e_i)"""
    return chi == _exponent_product(exponents)


def chern_relation_check(chi: UniPoly, exponents: Sequence[int], dimension: int) -> bool:
    """
    t^l chi(1/t) == prod (1 - d_i t) modulo t^l

    Raises:
        DomainError: If chi has degree above l
    """
    if chi.degree > dimension:
        raise DomainError(f"chi has degree {chi.degree} > l = {dimension}")
    reversed_chi = UniPoly(chi.coefficient(dimension - k) for k in range(dimension + 1))
    chern = UniPoly([1])
    for d in exponents:
        chern = chern * UniPoly([1, -d])
    return all(
        reversed_chi.coefficient(k) == chern.coefficient(k) for k in range(dimension)
    )


def solomon_terao_free(exponents: Sequence[int]) -> UniPoly:
    """
    Limit x -> 1 of the Solomon-Terao series for a free module with these exponents

    Each exponent e contributes (t(1 - x) - (1 - x^e)) / ((1 - x) x^e) at
    x = 1. The division by 1 - x is carried out on polynomials in (t, x),
    then x is set to 1.

    Raises:
        DomainError: If an exponent is negative
    """
    t = MultiPoly.variable(0, 2)
    x = MultiPoly.variable(1, 2)
    one = MultiPoly.constant(1, 2)
    result = UniPoly([1])
    for e in exponents:
        if e < 0:
            raise DomainError(f"Exponents must be nonnegative, got {e}")
        numerator = t * (one - x) - (one - x**e)
        quotient, remainder = numerator.divmod_linear(one - x)
        if not remainder.is_zero():
            raise InvariantViolation(f"1 - x does not divide {numerator}")
        # x^e is 1 at x = 1
        at_one = quotient.substitute(1, one).drop_variable(1)
        factor = UniPoly(at_one.coefficient((k,)) for k in range(at_one.degree + 1))
        result = result * factor
    return result
