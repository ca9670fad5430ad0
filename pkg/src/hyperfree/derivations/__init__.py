"""
Derivations - vector fields and the graded module D(A, m)
"""

from hyperfree.derivations.fields import (
    VectorField,
    euler_field,
    format_vector_field,
    parse_basis_file,
    parse_polynomial,
    parse_vector_field,
    power_sum_fields,
    rank2_simple_basis,
)
from hyperfree.derivations.module import (
    GradedDim,
    coefficient_determinant,
    delta,
    exponents_rank2,
    graded_basis,
    graded_dim,
    has_member_divisor,
    hilbert,
    is_member,
    nabla,
    restrict_field,
    saito_check,
    split_d1,
)

__all__ = [
    "GradedDim",
    "VectorField",
    "coefficient_determinant",
    "delta",
    "euler_field",
    "exponents_rank2",
    "format_vector_field",
    "graded_basis",
    "graded_dim",
    "has_member_divisor",
    "hilbert",
    "is_member",
    "nabla",
    "parse_basis_file",
    "parse_polynomial",
    "parse_vector_field",
    "power_sum_fields",
    "rank2_simple_basis",
    "restrict_field",
    "saito_check",
    "split_d1",
]
