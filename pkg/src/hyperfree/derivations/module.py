"""
Logarithmic derivation module D(A, m) - membership, graded pieces, Saito's criterion,
the connection nabla and Ziegler restriction of fields
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from loguru import logger

from hyperfree.algebra.matrices import MatrixQ, kernel_basis
from hyperfree.algebra.polynomials import Monomial, MultiPoly, monomial_count, monomials
from hyperfree.arrangements.models import (
    Arrangement,
    Hyperplane,
    Multiplicity,
    defining_polynomial,
)
from hyperfree.arrangements.operations import restrict
from hyperfree.certificates import CertificateMethod, FreenessCertificate, FreenessStatus
from hyperfree.config import get_settings
from hyperfree.derivations.fields import VectorField, euler_field, from_sympy, to_sympy
from hyperfree.errors import DimensionError, DomainError, InvariantViolation, ResourceBudgetError


def _check_inputs(arrangement: Arrangement, multiplicity: Multiplicity, operation: str) -> None:
    arrangement.require_central(operation)
    multiplicity.validate_for(arrangement)


# ============================================================================
# Membership
# ============================================================================


def is_member(field_: VectorField, arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None) -> bool:
    """
    True iff theta(alpha_i) is divisible by alpha_i^m_i for every hyperplane

    Args:
        field_: Vector field of arity l
        arrangement: Central arrangement in dimension l
        multiplicity: Defaults to m = 1

    Raises:
        DimensionError: On arity mismatch
    """
    m = multiplicity or Multiplicity.simple(arrangement)
    _check_inputs(arrangement, m, "is_member")
    if field_.arity != arrangement.dimension:
        raise DimensionError(
            f"Field of arity {field_.arity} for an arrangement in dimension {arrangement.dimension}"
        )
    for i, (h, k) in enumerate(zip(arrangement.hyperplanes, m.values)):
        if k == 0:
            continue
        alpha = h.linear_form()
        if field_.apply(alpha).linear_valuation(alpha, k) < k:
            logger.debug(f"Membership fails at hyperplane {i} ({h})")
            return False
    return True


# ============================================================================
# Graded pieces
# ============================================================================


@dataclass
class GradedDim:
    """dim D(A, m)_d for d = 0..dmax"""

    dims: Dict[int, int] = field(default_factory=dict)

    @property
    def max_degree(self) -> int:
        return max(self.dims) if self.dims else -1

    def first_nonzero(self) -> Optional[int]:
        return next((d for d in sorted(self.dims) if self.dims[d] > 0), None)

    def __getitem__(self, degree: int) -> int:
        return self.dims[degree]

    def to_dict(self) -> Dict[str, int]:
        return {str(d): self.dims[d] for d in sorted(self.dims)}


class _ConditionBuilder:
    """
    Linear conditions on the coefficients of a degree-d field.

    For H with pivot p, x_p is replaced by (s - sum_{j != p} a_j x_j) / a_p,
    with s = alpha_H stored in slot p; alpha^m divides theta(alpha) iff the
    image has no term of s-degree below m. Images are cached per hyperplane.
    """

    def __init__(self, dimension: int, degree: int):
        self.dimension = dimension
        self.degree = degree
        self.monos = monomials(dimension, degree)
        self._images: Dict[Hyperplane, List[MultiPoly]] = {}

    def images(self, hyperplane: Hyperplane) -> List[MultiPoly]:
        cached = self._images.get(hyperplane)
        if cached is not None:
            return cached
        a = hyperplane.normal
        p = hyperplane.pivot
        coeffs = [
            Fraction(1, a[p]) if j == p else Fraction(-a[j], a[p]) for j in range(self.dimension)
        ]
        chart = MultiPoly.linear_form(coeffs)
        powers = [MultiPoly.constant(1, self.dimension)]
        for _ in range(self.degree):
            powers.append(powers[-1] * chart)
        images = []
        for mono in self.monos:
            rest = tuple(0 if j == p else e for j, e in enumerate(mono))
            images.append(powers[mono[p]].shift(rest))
        self._images[hyperplane] = images
        return images

    def rows(self, hyperplane: Hyperplane, order: int) -> List[List[Fraction]]:
        """One row per monomial of s-degree < order in the image of theta(alpha)"""
        p = hyperplane.pivot
        a = hyperplane.normal
        n_monos = len(self.monos)
        width = self.dimension * n_monos
        by_target: Dict[Monomial, Dict[int, Fraction]] = {}
        for k, image in enumerate(self.images(hyperplane)):
            for exps, c in image.items():
                if exps[p] >= order:
                    continue
                row = by_target.setdefault(exps, {})
                for i in range(self.dimension):
                    if a[i]:
                        col = i * n_monos + k
                        row[col] = row.get(col, Fraction(0)) + a[i] * c
        rows = []
        for target in sorted(by_target):
            dense = [Fraction(0)] * width
            for col, v in by_target[target].items():
                dense[col] = v
            rows.append(dense)
        return rows


def _unknowns_budget(dimension: int, degree: int) -> int:
    unknowns = dimension * monomial_count(dimension, degree)
    limit = get_settings().budgets.monomial_basis
    if unknowns > limit:
        raise ResourceBudgetError(
            "monomial_basis", limit, unknowns, f"degree {degree} in {dimension} variables"
        )
    return unknowns


def graded_basis(arrangement: Arrangement, multiplicity: Multiplicity, degree: int) -> List[VectorField]:
    """
    Canonical basis of the degree-d component of D(A, m)

    Args:
        arrangement: Central arrangement
        multiplicity: Multiplicity (zero entries impose nothing)
        degree: Polynomial degree d >= 0

    Returns:
        One field per canonical kernel vector of the stacked conditions
    """
    _check_inputs(arrangement, multiplicity, "graded_basis")
    if degree < 0:
        raise DomainError(f"Degree must be nonnegative, got {degree}")
    dim = arrangement.dimension
    unknowns = _unknowns_budget(dim, degree)
    builder = _ConditionBuilder(dim, degree)
    rows: List[List[Fraction]] = []
    for h, k in zip(arrangement.hyperplanes, multiplicity.values):
        if k:
            rows.extend(builder.rows(h, k))
    kernel = kernel_basis(MatrixQ.from_rows(rows, cols=unknowns))
    logger.debug(
        f"D(A,m)_{degree}: {len(rows)} conditions on {unknowns} unknowns, dim {len(kernel)}"
    )

    n_monos = len(builder.monos)
    basis = []
    for vector in kernel:
        comps = []
        for i in range(dim):
            terms = {
                builder.monos[k]: vector[i * n_monos + k]
                for k in range(n_monos)
                if vector[i * n_monos + k]
            }
            comps.append(MultiPoly(dim, terms))
        basis.append(VectorField(comps))
    return basis


def graded_dim(arrangement: Arrangement, multiplicity: Multiplicity, degree: int) -> int:
    """dim D(A, m)_d"""
    return len(graded_basis(arrangement, multiplicity, degree))


def hilbert(
    arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None, dmax: Optional[int] = None
) -> GradedDim:
    """
    Graded dimensions of D(A, m) up to dmax (default |m|)

    Raises:
        ResourceBudgetError: If the top degree needs more unknowns than allowed
    """
    m = multiplicity or Multiplicity.simple(arrangement)
    top = m.weight if dmax is None else dmax
    if top < 0:
        raise DomainError(f"dmax must be nonnegative, got {top}")
    _unknowns_budget(arrangement.dimension, top)
    return GradedDim({d: graded_dim(arrangement, m, d) for d in range(top + 1)})


def exponents_rank2(arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None) -> Tuple[int, int]:
    """
    Exponents (d1, d2), d1 <= d2, of a multiarrangement of lines in the plane

    d1 is the lowest degree with a nonzero derivation and d2 = |m| - d1,
    since every such multiarrangement is free.

    Raises:
        DomainError: If the arrangement is not central in dimension 2
    """
    if arrangement.dimension != 2:
        raise DomainError(
            f"exponents_rank2 needs dimension 2, got {arrangement.dimension}"
        )
    m = multiplicity or Multiplicity.simple(arrangement)
    _check_inputs(arrangement, m, "exponents_rank2")
    weight = m.weight
    for d in range(weight // 2 + 1):
        if graded_dim(arrangement, m, d) > 0:
            return d, weight - d
    raise InvariantViolation(f"No derivation of degree <= {weight // 2} for |m| = {weight}")


def delta(arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None) -> int:
    """d2 - d1 of a rank-2 multiarrangement"""
    d1, d2 = exponents_rank2(arrangement, multiplicity)
    return d2 - d1


# ============================================================================
# Saito's criterion
# ============================================================================


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def coefficient_determinant(fields: Sequence[VectorField]) -> MultiPoly:
    """det [theta_j(x_i)] by Leibniz expansion"""
    n = len(fields)
    arity = fields[0].arity
    total = MultiPoly.zero(arity)
    for perm in permutations(range(n)):
        term = MultiPoly.constant(_permutation_sign(perm), arity)
        for j, i in enumerate(perm):
            term = term * fields[j][i]
            if term.is_zero():
                break
        total = total + term
    return total


def saito_check(
    arrangement: Arrangement, multiplicity: Optional[Multiplicity], candidates: Sequence[VectorField]
) -> FreenessCertificate:
    """
    Verify a candidate basis by Saito's criterion

    The candidates form a basis iff all are members and the determinant of
    their coefficient matrix is a nonzero constant multiple of Q(A, m).

    Returns:
        Free with exponents = sorted pdegs, or NotFree naming the failed condition

    Raises:
        DimensionError: If the number of candidates is not l
        DomainError: If a candidate is not homogeneous
    """
    m = multiplicity or Multiplicity.simple(arrangement)
    _check_inputs(arrangement, m, "saito_check")
    dim = arrangement.dimension
    if len(candidates) != dim:
        raise DimensionError(f"Saito's criterion needs {dim} candidates, got {len(candidates)}")
    for k, c in enumerate(candidates):
        if not c.is_homogeneous():
            raise DomainError(f"Candidate {k} is not homogeneous: {c}")

    degrees = [c.pdeg if c.pdeg is not None else 0 for c in candidates]
    for k, c in enumerate(candidates):
        if not is_member(c, arrangement, m):
            return FreenessCertificate(
                status=FreenessStatus.NOT_FREE,
                method=CertificateMethod.SAITO,
                exponents=degrees,
                failure=f"candidate {k} is not in D(A,m)",
            )

    determinant = coefficient_determinant(candidates)
    if determinant.is_zero():
        return FreenessCertificate(
            status=FreenessStatus.NOT_FREE,
            method=CertificateMethod.SAITO,
            exponents=degrees,
            failure="determinant is identically zero",
        )
    ratio = determinant.ratio_to(defining_polynomial(arrangement, m))
    if ratio is None:
        return FreenessCertificate(
            status=FreenessStatus.NOT_FREE,
            method=CertificateMethod.SAITO,
            exponents=degrees,
            failure="determinant is not a constant multiple of Q(A,m)",
        )
    logger.debug(f"Saito's criterion holds with constant {ratio}, exponents {sorted(degrees)}")
    return FreenessCertificate(
        status=FreenessStatus.FREE,
        method=CertificateMethod.SAITO,
        exponents=degrees,
        basis=list(candidates),
    )


# ============================================================================
# Connection, Euler decomposition and restriction
# ============================================================================


def nabla(eta: VectorField, theta: VectorField) -> VectorField:
    """nabla_eta theta = sum_i eta(f_i) d/dx_i"""
    if eta.arity != theta.arity:
        raise DimensionError(f"Arity mismatch: {eta.arity} vs {theta.arity}")
    return VectorField(eta.apply(f) for f in theta.components)


def split_d1(theta: VectorField, arrangement: Arrangement, index: int) -> Tuple[MultiPoly, VectorField]:
    """
    Decompose theta = f * theta_E + theta_1 with theta_1(alpha_index) = 0

    Returns:
        (f, theta_1) with f = theta(alpha) / alpha

    Raises:
        DomainError: If theta is not in D(A)
    """
    arrangement.check_index(index)
    if not is_member(theta, arrangement):
        raise DomainError(f"{theta} is not in D(A)")
    alpha = arrangement[index].linear_form()
    coefficient = theta.apply(alpha).exact_div_linear(alpha)
    remainder = theta - euler_field(theta.arity) * coefficient
    if not remainder.apply(alpha).is_zero():
        raise InvariantViolation("D1 part does not annihilate the chosen form")
    return coefficient, remainder


def restrict_field(theta: VectorField, arrangement: Arrangement, index: int) -> VectorField:
    """
    Ziegler restriction of a field tangent to H_index, in the chart of H_index

    Raises:
        DomainError: If theta(alpha_index) is not zero
    """
    arrangement.require_central("restrict_field")
    arrangement.check_index(index)
    if theta.arity != arrangement.dimension:
        raise DimensionError("Field arity does not match the arrangement")
    alpha = arrangement[index].linear_form()
    if not theta.apply(alpha).is_zero():
        raise DomainError(f"{theta} does not annihilate alpha_{index}")
    chart = restrict(arrangement, index).chart
    return VectorField(chart.pullback(theta[j]) for j in chart.kept)


def has_member_divisor(theta: VectorField, arrangement: Arrangement, multiplicity: Optional[Multiplicity] = None) -> bool:
    """
    True iff theta = F * theta' with deg F > 0 and theta' in D(A, m)

    The common factor of the components is factored with sympy and every
    divisor of positive degree is tried.
    """
    m = multiplicity or Multiplicity.simple(arrangement)
    if theta.is_zero():
        return False
    symbols = sympy.symbols([f"v{i}" for i in range(theta.arity)])
    comps = [to_sympy(c, symbols) for c in theta.components]
    common = sympy.Integer(0)
    for c in comps:
        common = sympy.gcd(common, c)
    _, factors = sympy.factor_list(common)
    factors = [(f, k) for f, k in factors if sympy.Poly(f, *symbols).total_degree() > 0]
    if not factors:
        return False

    def divisors(index: int):
        if index == len(factors):
            yield sympy.Integer(1)
            return
        base, power = factors[index]
        for rest in divisors(index + 1):
            for k in range(power + 1):
                yield rest * base**k

    for divisor in divisors(0):
        if sympy.Poly(divisor, *symbols).total_degree() == 0:
            continue
        reduced = VectorField(from_sympy(sympy.cancel(c / divisor), symbols) for c in comps)
        if is_member(reduced, arrangement, m):
            logger.debug(f"{theta} has member divisor {divisor}")
            return True
    return False
