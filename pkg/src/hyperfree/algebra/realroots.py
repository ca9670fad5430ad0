"""
Real roots - exact Sturm-sequence counting on square-free parts
"""

from fractions import Fraction
from typing import List, Optional

from loguru import logger

from hyperfree.algebra.polynomials import UniPoly
from hyperfree.algebra.scalars import ScalarLike, as_scalar
from hyperfree.errors import DomainError


def squarefree_part(q: UniPoly) -> UniPoly:
    """Monic q / gcd(q, q'), which has the same roots as q, all simple"""
    if q.is_zero():
        raise DomainError("Square-free part of the zero polynomial")
    if q.degree <= 0:
        return UniPoly([1])
    g = q.gcd(q.derivative())
    return q.exact_div(g).monic()


def sturm_sequence(q: UniPoly) -> List[UniPoly]:
    """p0 = q, p1 = q', p(k+1) = -rem(p(k-1), p(k)) until the remainder vanishes"""
    seq = [q, q.derivative()]
    while not seq[-1].is_zero():
        _, remainder = seq[-2].divmod(seq[-1])
        seq.append(-remainder)
    seq.pop()
    return seq


def _sign_at(p: UniPoly, point: Optional[Fraction], at_plus_infinity: bool) -> int:
    if point is None:
        lead = p.leading()
        sign = 1 if lead > 0 else -1
        if not at_plus_infinity and p.degree % 2 == 1:
            sign = -sign
        return sign
    value = p(point)
    return (value > 0) - (value < 0)


def _variations(seq: List[UniPoly], point: Optional[Fraction], plus: bool) -> int:
    signs = [s for s in (_sign_at(p, point, plus) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(
    q: UniPoly,
    lo: Optional[ScalarLike] = None,
    hi: Optional[ScalarLike] = None,
) -> int:
    """
    Number of distinct real roots of q in (lo, hi]

    Args:
        q: Nonzero polynomial
        lo: Lower end, None for minus infinity
        hi: Upper end, None for plus infinity

    Returns:
        Count of distinct real roots in the half-open interval
    """
    if q.is_zero():
        raise DomainError("Root count of the zero polynomial")
    p = squarefree_part(q)
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)
    lo_v = _variations(seq, None if lo is None else as_scalar(lo), plus=False)
    hi_v = _variations(seq, None if hi is None else as_scalar(hi), plus=True)
    return lo_v - hi_v


def all_real_roots_nonpositive(q: UniPoly) -> bool:
    """
    True iff every complex root of q is real and <= 0

    The square-free part must have as many distinct real roots as its
    degree, none of them in (0, infinity).

    Args:
        q: Nonzero polynomial

    Returns:
        Whether all roots are real and nonpositive

    Raises:
        DomainError: If q is the zero polynomial
    """
    if q.is_zero():
        raise DomainError("all_real_roots_nonpositive of the zero polynomial")
    p = squarefree_part(q)
    if p.degree <= 0:
        return True
    if p(0) == 0:
        # simple root at the origin is allowed; test the cofactor
        p = p.exact_div(UniPoly([0, 1]))
        if p.degree <= 0:
            return True
    real = count_real_roots(p)
    positive = count_real_roots(p, 0, None)
    logger.debug(
        f"square-free degree {p.degree}: {real} real roots, {positive} positive"
    )
    return real == p.degree and positive == 0
