"""
Freeness criteria - rank dispatch, b2 criteria, local freeness and multirestriction search
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from loguru import logger

from hyperfree.algebra.polynomials import Monomial, MultiPoly, UniPoly, monomials
from hyperfree.arrangements.charpoly import charpoly
from hyperfree.arrangements.lattice import intersection_lattice
from hyperfree.arrangements.models import Arrangement, Multiplicity
from hyperfree.arrangements.operations import essentialize, localization, ziegler
from hyperfree.certificates import CertificateMethod, FreenessCertificate, FreenessStatus
from hyperfree.config import get_settings
from hyperfree.derivations.fields import VectorField, rank2_simple_basis
from hyperfree.derivations.module import exponents_rank2, graded_basis, saito_check
from hyperfree.errors import DomainError, InvariantViolation


@dataclass(frozen=True)
class ConeForm:
    """A central arrangement together with the pivot hyperplane used for testing"""

    arrangement: Arrangement
    pivot: int

    def __post_init__(self):
        self.arrangement.require_central("ConeForm")
        self.arrangement.check_index(self.pivot)


def reduced_charpoly(chi: UniPoly) -> UniPoly:
    """
    chi(A, t) / (t - 1) for a nonempty central arrangement

    Raises:
        InvariantViolation: If t - 1 does not divide chi
    """
    quotient, remainder = chi.divmod(UniPoly([-1, 1]))
    if not remainder.is_zero():
        raise InvariantViolation(f"t - 1 does not divide {chi}")
    return quotient


def _b2(chi: UniPoly, dimension: int) -> int:
    """Coefficient b2 in chi/(t-1) = t^(l-1) - b1 t^(l-2) + b2 t^(l-3) - ..."""
    return int(reduced_charpoly(chi).coefficient(dimension - 3))


def _pair_sum(values: List[int]) -> int:
    return sum(a * b for a, b in combinations(values, 2))


def _essential(
    arrangement: Arrangement, chi: Optional[UniPoly]
) -> Tuple[Arrangement, int, Optional[UniPoly]]:
    essential, dropped = essentialize(arrangement)
    if chi is not None and dropped:
        chi = chi.exact_div(UniPoly.variable() ** dropped)
    return essential, dropped, chi


# ============================================================================
# Rank dispatch
# ============================================================================


def free_test(arrangement: Arrangement, chi: Optional[UniPoly] = None) -> FreenessCertificate:
    """
    Decide freeness of a central arrangement with a certificate

    The arrangement is essentialized first and the exponents are padded
    with one zero per dropped center dimension.

    Args:
        arrangement: Central arrangement
        chi: Known characteristic polynomial, computed when omitted

    Returns:
        FreenessCertificate (rank <= 2 always Free; rank 3 decided by the
        b2 criterion; rank >= 4 Free, NotFree or Unknown)

    Raises:
        DomainError: If the arrangement is not central
    """
    arrangement.require_central("free_test")
    essential, dropped, chi = _essential(arrangement, chi)
    rank = essential.dimension
    n = len(essential)

    if rank <= 2:
        exponents = [1] * rank if rank < 2 else [1, n - 1]
        basis = rank2_simple_basis(essential) if rank == 2 and not dropped else None
        certificate = FreenessCertificate(
            status=FreenessStatus.FREE,
            method=CertificateMethod.RANK_LE_2,
            exponents=exponents,
            basis=basis,
        )
        return certificate.with_padding(dropped)

    if chi is None:
        chi = charpoly(essential)

    if rank == 3:
        best: Optional[FreenessCertificate] = None
        for pivot in range(n):
            certificate = free_test_rank3(essential, pivot, chi)
            if certificate.is_free:
                return certificate.with_padding(dropped)
            if best is None or (certificate.obstruction or 0) < (best.obstruction or 0):
                best = certificate
        assert best is not None
        return best.with_padding(dropped)

    notes: List[str] = []
    for pivot in range(n):
        certificate = free_test_highrank(essential, pivot, chi)
        if certificate.status != FreenessStatus.UNKNOWN:
            return certificate.with_padding(dropped)
        notes.append(f"pivot {pivot}: inconclusive")
    return FreenessCertificate(
        status=FreenessStatus.UNKNOWN,
        method=CertificateMethod.DISPATCH,
        notes=notes,
    ).with_padding(dropped)


def free_test_at(form: ConeForm) -> FreenessCertificate:
    """Run the criterion matching the rank of the arrangement at a fixed pivot"""
    essential, dropped, _ = _essential(form.arrangement, None)
    if essential.dimension == 3:
        return free_test_rank3(essential, form.pivot).with_padding(dropped)
    if essential.dimension >= 4:
        return free_test_highrank(essential, form.pivot).with_padding(dropped)
    return free_test(form.arrangement)


def free_test_rank3(arrangement: Arrangement, pivot: int, chi: Optional[UniPoly] = None) -> FreenessCertificate:
    """
    b2 >= d1*d2 with equality iff A is free with exponents (1, d1, d2)

    (d1, d2) are the exponents of the Ziegler multirestriction onto H_pivot
    and b2 - d1*d2 is the cokernel dimension of the restriction map.
    """
    arrangement.require_central("free_test_rank3")
    arrangement.check_index(pivot)
    if arrangement.rank() != 3:
        raise DomainError(f"free_test_rank3 needs rank 3, got {arrangement.rank()}")
    if arrangement.dimension != 3:
        essential, dropped, chi = _essential(arrangement, chi)
        return free_test_rank3(essential, pivot, chi).with_padding(dropped)

    chi = chi if chi is not None else charpoly(arrangement)
    b2 = _b2(chi, 3)
    restricted, multiplicity = ziegler(arrangement, pivot)
    d1, d2 = exponents_rank2(restricted, multiplicity)
    obstruction = b2 - d1 * d2
    logger.debug(f"char3 at pivot {pivot}: b2 = {b2}, (d1, d2) = ({d1}, {d2})")
    if obstruction < 0:
        raise InvariantViolation(f"b2 = {b2} < d1*d2 = {d1 * d2}")
    if obstruction == 0:
        return FreenessCertificate(
            status=FreenessStatus.FREE,
            method=CertificateMethod.CHAR3,
            exponents=[1, d1, d2],
            obstruction=0,
            notes=[f"pivot {pivot}"],
        )
    return FreenessCertificate(
        status=FreenessStatus.NOT_FREE,
        method=CertificateMethod.CHAR3,
        exponents=[1, d1, d2],
        obstruction=obstruction,
        failure="b2 - d1*d2 > 0 (cokernel dimension of the restriction map)",
        notes=[f"pivot {pivot}"],
    )


def free_test_highrank(
    arrangement: Arrangement,
    pivot: int,
    chi: Optional[UniPoly] = None,
    cross_check: bool = True,
) -> FreenessCertificate:
    """
    Rank >= 4 test through the multirestriction onto H_pivot

    When the multirestriction is certified free with exponents (d2..dl),
    A is free iff b2 = sum_{i<j} d_i d_j. When the search is inconclusive,
    a localization along H_pivot certified not free still proves A is not
    free; an undecided localization leaves the verdict Unknown.

    Args:
        arrangement: Central arrangement of rank >= 4
        pivot: Hyperplane index
        chi: Known characteristic polynomial
        cross_check: Compare the verdict with local freeness along H_pivot

    Returns:
        FreenessCertificate with method b2-highrank or char4-local
    """
    arrangement.require_central("free_test_highrank")
    arrangement.check_index(pivot)
    rank = arrangement.rank()
    if rank < 4:
        raise DomainError(f"free_test_highrank needs rank >= 4, got {rank}")
    if arrangement.dimension != rank:
        essential, dropped, chi = _essential(arrangement, chi)
        return free_test_highrank(essential, pivot, chi, cross_check).with_padding(dropped)

    chi = chi if chi is not None else charpoly(arrangement)
    restricted, multiplicity = ziegler(arrangement, pivot)
    if restricted.rank() > 3:
        return FreenessCertificate(
            status=FreenessStatus.UNKNOWN,
            method=CertificateMethod.B2,
            notes=[f"pivot {pivot}: multirestriction of rank {restricted.rank()} is not searched"],
        )

    search = multi_free_search(restricted, multiplicity)
    if search.status == FreenessStatus.FREE:
        tail = list(search.exponents or [])
        b2 = _b2(chi, rank)
        products = _pair_sum(tail)
        obstruction = b2 - products
        logger.debug(f"b2 criterion at pivot {pivot}: b2 = {b2}, sum d_i d_j = {products}")
        if obstruction < 0:
            raise InvariantViolation(f"b2 = {b2} < sum d_i d_j = {products}")
        if obstruction == 0:
            certificate = FreenessCertificate(
                status=FreenessStatus.FREE,
                method=CertificateMethod.B2,
                exponents=[1] + tail,
                obstruction=0,
                notes=[f"pivot {pivot}"],
            )
        else:
            certificate = FreenessCertificate(
                status=FreenessStatus.NOT_FREE,
                method=CertificateMethod.B2,
                exponents=[1] + tail,
                obstruction=obstruction,
                failure="b2 exceeds the sum of products of multirestriction exponents",
                notes=[f"pivot {pivot}"],
            )
        # free implies locally free; the converse does not hold
        if cross_check and certificate.is_free:
            if local_freeness(arrangement, pivot) == FreenessStatus.NOT_FREE:
                logger.warning(
                    f"b2 verdict {certificate.status.value} but A is not locally free along H{pivot}"
                )
                certificate.notes.append(f"not locally free along H{pivot}")
        return certificate

    local = local_freeness(arrangement, pivot)
    if local == FreenessStatus.NOT_FREE:
        return FreenessCertificate(
            status=FreenessStatus.NOT_FREE,
            method=CertificateMethod.CHAR4,
            failure=f"not locally free along H{pivot}",
            notes=search.notes,
        )
    if local == FreenessStatus.UNKNOWN:
        remark = f"pivot {pivot}: local freeness undecided"
    else:
        remark = f"pivot {pivot}: locally free, multirestriction undecided"
    return FreenessCertificate(
        status=FreenessStatus.UNKNOWN,
        method=CertificateMethod.CHAR4,
        notes=search.notes + [remark],
    )


def local_freeness(arrangement: Arrangement, index: int) -> FreenessStatus:
    """
    Combined verdict over the localizations A_X with X inside H_index and
    0 < r(X) < rank(A)

    Returns:
        NOT_FREE if some localization is certified not free, UNKNOWN if none
        is but some stays undecided, FREE otherwise
    """
    arrangement.require_central("local_freeness")
    arrangement.check_index(index)
    top = arrangement.rank()
    lattice = intersection_lattice(arrangement)
    verdict = FreenessStatus.FREE
    for flat in lattice.flats_inside(index):
        if flat.rank <= 2 or flat.rank >= top:
            continue
        certificate = free_test(localization(arrangement, flat))
        if certificate.is_free:
            continue
        logger.debug(
            f"Localization at a rank-{flat.rank} flat in H{index} is "
            f"{certificate.status.value}"
        )
        if certificate.status == FreenessStatus.NOT_FREE:
            return FreenessStatus.NOT_FREE
        verdict = FreenessStatus.UNKNOWN
    return verdict


def locally_free_along(arrangement: Arrangement, index: int) -> bool:
    """True iff every localization A_X with X inside H_index is certified free"""
    arrangement.require_central("locally_free_along")
    return local_freeness(arrangement, index) == FreenessStatus.FREE


# ============================================================================
# Multiarrangement search
# ============================================================================


class _SpanTracker:
    """Incremental row echelon form over sparse Fraction vectors"""

    def __init__(self):
        self.rows: Dict[int, Dict[int, Fraction]] = {}

    def add(self, vector: Dict[int, Fraction]) -> bool:
        """Insert a vector; True iff it was independent of the span so far"""
        v = dict(vector)
        while v:
            col = min(v)
            row = self.rows.get(col)
            if row is None:
                lead = v[col]
                self.rows[col] = {k: c / lead for k, c in v.items()}
                return True
            f = v[col]
            for k, c in row.items():
                value = v.get(k, Fraction(0)) - f * c
                if value == 0:
                    v.pop(k, None)
                else:
                    v[k] = value
        return False


def _field_vector(field_: VectorField, index: Dict[Monomial, int], n_monos: int) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for i, comp in enumerate(field_.components):
        for exps, c in comp.items():
            out[i * n_monos + index[exps]] = c
    return out


def multi_free_search(arrangement: Arrangement, multiplicity: Multiplicity) -> FreenessCertificate:
    """
    Semidecision for freeness of a multiarrangement of rank <= 3

    Rank 2 is always free. In rank 3 minimal generators are extracted
    degree by degree (basis fields outside the span of S times lower
    generators); triples whose degrees sum to |m| are tested with Saito's
    criterion. The search never reports NotFree.

    Raises:
        DomainError: If the rank exceeds 3
    """
    arrangement.require_central("multi_free_search")
    multiplicity.validate_for(arrangement)
    essential, dropped = essentialize(arrangement)
    rank = essential.dimension
    if rank > 3:
        raise DomainError(f"multi_free_search supports rank <= 3, got {rank}")

    if rank <= 1:
        exponents = [multiplicity.weight] if rank == 1 else []
        return FreenessCertificate(
            status=FreenessStatus.FREE,
            method=CertificateMethod.RANK_LE_2,
            exponents=exponents,
        ).with_padding(dropped)
    if rank == 2:
        d1, d2 = exponents_rank2(essential, multiplicity)
        return FreenessCertificate(
            status=FreenessStatus.FREE,
            method=CertificateMethod.RANK_LE_2,
            exponents=[d1, d2],
        ).with_padding(dropped)

    weight = multiplicity.weight
    budget = get_settings().budgets.saito_attempts
    attempts = 0
    generators: List[Tuple[int, VectorField]] = []
    for degree in range(weight + 1):
        monos = monomials(rank, degree)
        index = {m: k for k, m in enumerate(monos)}
        tracker = _SpanTracker()
        for gen_degree, gen in generators:
            for shift in monomials(rank, degree - gen_degree):
                tracker.add(_field_vector(gen * MultiPoly.monomial(shift), index, len(monos)))

        fresh = []
        for candidate in graded_basis(essential, multiplicity, degree):
            if tracker.add(_field_vector(candidate, index, len(monos))):
                fresh.append((degree, candidate))
        if not fresh:
            continue
        generators.extend(fresh)
        logger.debug(f"Degree {degree}: {len(fresh)} new generators, {len(generators)} total")
        if len(generators) > rank:
            return FreenessCertificate(
                status=FreenessStatus.UNKNOWN,
                method=CertificateMethod.SAITO,
                notes=[f"{len(generators)} minimal generators found up to degree {degree}"],
            )

        for combo in combinations(range(len(generators)), rank):
            if combo[-1] < len(generators) - len(fresh):
                continue
            degrees = [generators[k][0] for k in combo]
            if sum(degrees) != weight:
                continue
            attempts += 1
            if attempts > budget:
                return FreenessCertificate(
                    status=FreenessStatus.UNKNOWN,
                    method=CertificateMethod.SAITO,
                    notes=[f"saito_attempts budget of {budget} exhausted"],
                )
            certificate = saito_check(essential, multiplicity, [generators[k][1] for k in combo])
            if certificate.is_free:
                logger.debug(f"Multirestriction basis found with exponents {certificate.exponents}")
                if dropped:
                    return certificate.with_padding(dropped)
                return certificate

    return FreenessCertificate(
        status=FreenessStatus.UNKNOWN,
        method=CertificateMethod.SAITO,
        notes=[f"no basis found up to degree {weight}"],
    )
