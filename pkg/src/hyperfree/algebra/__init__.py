"""
Exact algebra - rationals, polynomials, fraction-free linear algebra, real roots
"""

from hyperfree.algebra.matrices import MatrixQ, det, kernel_basis, rank, rref
from hyperfree.algebra.polynomials import (
    MultiPoly,
    UniPoly,
    compose_affine,
    monomial_count,
    monomials,
)
from hyperfree.algebra.realroots import (
    all_real_roots_nonpositive,
    count_real_roots,
    squarefree_part,
    sturm_sequence,
)
from hyperfree.algebra.scalars import (
    Scalar,
    as_scalar,
    format_scalar,
    parse_scalar,
    primitive_vector,
)

__all__ = [
    "MatrixQ",
    "MultiPoly",
    "Scalar",
    "UniPoly",
    "all_real_roots_nonpositive",
    "as_scalar",
    "compose_affine",
    "count_real_roots",
    "det",
    "format_scalar",
    "kernel_basis",
    "monomial_count",
    "monomials",
    "parse_scalar",
    "primitive_vector",
    "rank",
    "rref",
    "squarefree_part",
    "sturm_sequence",
]
