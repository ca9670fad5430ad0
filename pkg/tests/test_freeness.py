"""
Unit tests for freeness decisions and identities
Tests: rank dispatch, b2 criteria, local freeness, multiarrangement search, identities
"""

import numpy as np
import pytest
import sympy

from hyperfree.algebra import UniPoly
from hyperfree.arrangements import (
    Arrangement,
    Multiplicity,
    boolean,
    braid,
    charpoly,
    cone,
    essentialize,
    generic_central,
    lines,
    ziegler,
)
from hyperfree.coxeter import DeformationSpec, deformation, positive_roots
from hyperfree.derivations import rank2_simple_basis, saito_check
from hyperfree.errors import DomainError, InvariantViolation
from hyperfree.freeness import (
    CertificateMethod,
    ConeForm,
    FreenessCertificate,
    FreenessStatus,
    chern_relation_check,
    free_test,
    free_test_at,
    free_test_highrank,
    free_test_rank3,
    local_freeness,
    locally_free_along,
    multi_free_search,
    reduced_charpoly,
    solomon_terao_free,
    terao_factor_check,
)


class TestRankDispatch:
    """Tests for free_test on small ranks"""

    def test_fig1_free_by_char3(self, fig1):
        certificate = free_test(fig1)
        assert certificate.status == FreenessStatus.FREE
        assert certificate.method == CertificateMethod.CHAR3
        assert certificate.exponents == [1, 3, 5]
        assert certificate.obstruction == 0
        assert certificate.validate(weight=len(fig1))

    def test_generic_not_free(self, load_fixture):
        A = load_fixture("generic4.arr").arrangement
        certificate = free_test(A)
        assert certificate.status == FreenessStatus.NOT_FREE
        assert certificate.obstruction == 1
        assert certificate.validate()

    def test_lines_always_free(self):
        A = lines([(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)])
        certificate = free_test(A)
        assert certificate.status == FreenessStatus.FREE
        assert certificate.method == CertificateMethod.RANK_LE_2
        assert certificate.exponents == [1, 4]
        assert len(certificate.basis) == 2

    def test_braid_padded_with_center(self, load_fixture):
        A = load_fixture("braid4.arr").arrangement
        certificate = free_test(A)
        assert certificate.is_free
        assert certificate.exponents == [0, 1, 2, 3]

    def test_boolean_plane(self):
        assert free_test(boolean(2)).exponents == [1, 1]

    def test_supplied_charpoly(self, fig1):
        chi = UniPoly.from_roots([1, 3, 5])
        assert free_test(fig1, chi=chi).exponents == [1, 3, 5]

    def test_affine_rejected(self, load_fixture):
        with pytest.raises(DomainError):
            free_test(load_fixture("square.arr").arrangement)


class TestFixedPivot:
    """Tests for free_test_at and free_test_rank3"""

    def test_g2_catalan_cone(self, load_fixture):
        A = load_fixture("g2cat_cone.arr").arrangement
        certificate = free_test_at(ConeForm(A, 0))
        assert certificate.status == FreenessStatus.FREE
        assert certificate.exponents == [1, 7, 11]
        assert certificate.obstruction == 0

    def test_g2_catalan_b2(self, load_fixture):
        A = load_fixture("g2cat_cone.arr").arrangement
        assert reduced_charpoly(charpoly(A)) == UniPoly([77, -18, 1])

    def test_every_pivot_agrees_when_free(self, fig1):
        for pivot in range(len(fig1)):
            certificate = free_test_rank3(fig1, pivot)
            assert certificate.is_free
            assert certificate.exponents == [1, 3, 5]

    def test_cone_form_rejects_bad_pivot(self, fig1):
        with pytest.raises(DomainError):
            ConeForm(fig1, len(fig1))

    def test_rank3_needs_rank3(self):
        with pytest.raises(DomainError):
            free_test_rank3(boolean(4), 0)

    def test_reduced_charpoly_needs_central_factor(self):
        with pytest.raises(InvariantViolation):
            reduced_charpoly(UniPoly.from_roots([2, 3]))


class TestHighRank:
    """Tests for the b2 criterion in rank >= 4"""

    def test_boolean(self):
        certificate = free_test_highrank(boolean(4), 1)
        assert certificate.status == FreenessStatus.FREE
        assert certificate.method == CertificateMethod.B2
        assert certificate.exponents == [1, 1, 1, 1]
        assert certificate.obstruction == 0

    def test_needs_rank4(self, fig1):
        with pytest.raises(DomainError):
            free_test_highrank(fig1, 0)

    @pytest.mark.slow
    def test_braid5_essential(self):
        essential, dropped = essentialize(braid(5))
        assert dropped == 1
        certificate = free_test_highrank(essential, 0)
        assert certificate.is_free
        assert certificate.exponents == [1, 2, 3, 4]

    @pytest.mark.slow
    def test_a3_single_level_cone_not_free(self):
        spec = DeformationSpec.from_conjecture(positive_roots("A", 3), -1, 1)
        coned = cone(deformation(spec))
        assert len(coned) == 7
        certificate = free_test(coned)
        assert certificate.status == FreenessStatus.NOT_FREE
        assert certificate.method == CertificateMethod.B2
        assert certificate.obstruction == 4
        assert certificate.exponents == [1, 1, 2, 3]


class TestLocalFreeness:
    """Tests for local_freeness and locally_free_along"""

    def test_boolean(self):
        assert locally_free_along(boolean(4), 1) is True

    def test_generic_localization(self):
        # four generic planes in x1..x3 plus x4 = 0: the x4-axis localizes to them
        A = Arrangement.from_normals(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0], [0, 0, 0, 1]]
        )
        assert locally_free_along(A, 0) is False
        assert locally_free_along(A, 4) is True

    def test_boolean_status(self):
        assert local_freeness(boolean(4), 0) == FreenessStatus.FREE

    def test_undecided_localization_is_not_locally_free(self, mocker):
        undecided = FreenessCertificate(FreenessStatus.UNKNOWN, CertificateMethod.DISPATCH)
        mocker.patch("hyperfree.freeness.criteria.free_test", return_value=undecided)
        assert local_freeness(boolean(4), 0) == FreenessStatus.UNKNOWN
        assert locally_free_along(boolean(4), 0) is False

    def test_refuted_localization(self, mocker):
        refuted = FreenessCertificate(FreenessStatus.NOT_FREE, CertificateMethod.CHAR3)
        mocker.patch("hyperfree.freeness.criteria.free_test", return_value=refuted)
        assert local_freeness(boolean(4), 0) == FreenessStatus.NOT_FREE

    def test_highrank_stays_unknown_when_localization_undecided(self, mocker):
        undecided = FreenessCertificate(FreenessStatus.UNKNOWN, CertificateMethod.DISPATCH)
        mocker.patch("hyperfree.freeness.criteria.multi_free_search", return_value=undecided)
        mocker.patch("hyperfree.freeness.criteria.free_test", return_value=undecided)
        certificate = free_test_highrank(boolean(4), 0)
        assert certificate.status == FreenessStatus.UNKNOWN
        assert certificate.method == CertificateMethod.CHAR4
        assert any("local freeness undecided" in note for note in certificate.notes)

    def test_highrank_not_free_needs_refuted_localization(self, mocker):
        undecided = FreenessCertificate(FreenessStatus.UNKNOWN, CertificateMethod.DISPATCH)
        refuted = FreenessCertificate(FreenessStatus.NOT_FREE, CertificateMethod.CHAR3)
        mocker.patch("hyperfree.freeness.criteria.multi_free_search", return_value=undecided)
        mocker.patch("hyperfree.freeness.criteria.free_test", return_value=refuted)
        certificate = free_test_highrank(boolean(4), 0)
        assert certificate.status == FreenessStatus.NOT_FREE
        assert certificate.failure == "not locally free along H0"

    def test_highrank_locally_free_but_search_undecided(self, mocker):
        undecided = FreenessCertificate(FreenessStatus.UNKNOWN, CertificateMethod.DISPATCH)
        mocker.patch("hyperfree.freeness.criteria.multi_free_search", return_value=undecided)
        certificate = free_test_highrank(boolean(4), 0)
        assert certificate.status == FreenessStatus.UNKNOWN
        assert "pivot 0: locally free, multirestriction undecided" in certificate.notes


class TestMultiFreeSearch:
    """Tests for multi_free_search"""

    def test_boolean_simple(self):
        certificate = multi_free_search(boolean(3), Multiplicity((1, 1, 1)))
        assert certificate.is_free
        assert certificate.exponents == [1, 1, 1]

    def test_boolean_weighted(self):
        certificate = multi_free_search(boolean(3), Multiplicity((2, 1, 1)))
        assert certificate.exponents == [1, 1, 2]
        assert certificate.method == CertificateMethod.SAITO

    def test_fig1_restriction_rank2(self, load_fixture):
        parsed = load_fixture("fig1_restriction.arr")
        certificate = multi_free_search(parsed.arrangement, parsed.multiplicity)
        assert certificate.exponents == [3, 5]

    def test_rank_limit(self):
        with pytest.raises(DomainError):
            multi_free_search(boolean(4), Multiplicity((1, 1, 1, 1)))


class TestIdentities:
    """Tests for the polynomial identities of free arrangements"""

    def test_factorization(self, fig1):
        assert terao_factor_check(charpoly(fig1), [1, 3, 5]) is True
        assert terao_factor_check(charpoly(fig1), [1, 2, 6]) is False

    def test_chern_relation(self):
        assert chern_relation_check(UniPoly.from_roots([1, 3, 5]), [1, 3, 5], 3) is True
        assert chern_relation_check(UniPoly.from_roots([0, 1, 2]), [0, 1, 2], 3) is True
        assert chern_relation_check(UniPoly.from_roots([1, 1]), [1, 2], 2) is False

    def test_chern_degree_check(self):
        with pytest.raises(DomainError):
            chern_relation_check(UniPoly.from_roots([1, 2, 3]), [1, 2, 3], 2)

    def test_solomon_terao(self):
        assert solomon_terao_free([1, 3, 5]) == UniPoly.from_roots([1, 3, 5])
        assert solomon_terao_free([0]) == UniPoly([0, 1])
        assert solomon_terao_free([]) == UniPoly([1])

    def test_solomon_terao_matches_expansion(self):
        rng = np.random.default_rng(11)
        t = sympy.Symbol("t")
        for _ in range(50):
            exponents = [int(e) for e in rng.integers(0, 10, size=int(rng.integers(0, 6)))]
            expanded = sympy.Poly(sympy.prod([t - e for e in exponents]), t).all_coeffs()
            expected = UniPoly([int(c) for c in reversed(expanded)])
            assert solomon_terao_free(exponents) == expected, exponents

    def test_solomon_terao_negative(self):
        with pytest.raises(DomainError):
            solomon_terao_free([-1])


class TestCertificate:
    """Tests for FreenessCertificate bookkeeping"""

    def test_exponents_sorted(self):
        certificate = FreenessCertificate(FreenessStatus.FREE, CertificateMethod.CHAR3, exponents=[5, 1, 3])
        assert certificate.exponents == [1, 3, 5]

    def test_validate_weight(self):
        certificate = FreenessCertificate(FreenessStatus.FREE, CertificateMethod.CHAR3, exponents=[1, 2])
        with pytest.raises(ValueError):
            certificate.validate(weight=4)

    def test_validate_obstruction(self):
        certificate = FreenessCertificate(FreenessStatus.NOT_FREE, CertificateMethod.CHAR3, obstruction=0)
        with pytest.raises(ValueError):
            certificate.validate()

    def test_padding(self):
        certificate = FreenessCertificate(FreenessStatus.FREE, CertificateMethod.CHAR3, exponents=[1, 2])
        padded = certificate.with_padding(2)
        assert padded.exponents == [0, 0, 1, 2]
        assert padded.notes

    def test_to_dict(self):
        certificate = FreenessCertificate(
            FreenessStatus.NOT_FREE, CertificateMethod.CHAR3, exponents=[1, 1, 1], obstruction=1
        )
        assert certificate.to_dict() == {
            "status": "NotFree",
            "method": "char3",
            "exponents": [1, 1, 1],
            "basis": None,
            "obstruction": 1,
        }


def _essential_braid4() -> Arrangement:
    return essentialize(braid(4))[0]


class TestVerdictConsistency:
    """Pivot independence, multirestriction exponents and soundness of Free verdicts"""

    @pytest.mark.parametrize(
        "name,status",
        [("fig1.arr", FreenessStatus.FREE), ("generic4.arr", FreenessStatus.NOT_FREE)],
    )
    def test_verdict_independent_of_pivot(self, load_fixture, name, status):
        A = load_fixture(name).arrangement
        certificates = [free_test_rank3(A, pivot) for pivot in range(len(A))]
        assert {c.status for c in certificates} == {status}
        assert len({c.obstruction for c in certificates}) == 1
        assert all(c.obstruction >= 0 for c in certificates)

    def test_braid4_every_pivot(self):
        A = _essential_braid4()
        for pivot in range(len(A)):
            certificate = free_test_rank3(A, pivot)
            assert certificate.is_free
            assert certificate.exponents == [1, 2, 3]

    @pytest.mark.parametrize(
        "build,tail",
        [
            (lambda: boolean(4), [1, 1, 1]),
            (_essential_braid4, [2, 3]),
        ],
    )
    def test_multirestriction_drops_the_one(self, build, tail):
        A = build()
        for pivot in range(len(A)):
            certificate = multi_free_search(*ziegler(A, pivot))
            assert certificate.is_free
            assert certificate.exponents == tail

    def test_fig1_multirestriction_every_pivot(self, fig1):
        for pivot in range(len(fig1)):
            assert multi_free_search(*ziegler(fig1, pivot)).exponents == [3, 5]

    @pytest.mark.parametrize("name", ["fig1.arr", "braid3.arr", "braid4.arr"])
    def test_free_fixture_identities(self, load_fixture, name):
        A = load_fixture(name).arrangement
        certificate = free_test(A)
        assert certificate.is_free
        chi = charpoly(A)
        assert terao_factor_check(chi, certificate.exponents)
        assert chern_relation_check(chi, certificate.exponents, A.dimension)

    def test_random_line_arrangements(self):
        rng = np.random.default_rng(2024)
        for _ in range(30):
            n = int(rng.integers(2, 7))
            A = generic_central(n, 2, rng, 10)
            certificate = free_test(A)
            assert certificate.is_free
            assert certificate.exponents == [1, n - 1]
            chi = charpoly(A)
            assert terao_factor_check(chi, certificate.exponents)
            assert chern_relation_check(chi, certificate.exponents, 2)
            basis = saito_check(A, None, rank2_simple_basis(A))
            assert basis.is_free
            assert basis.exponents == [1, n - 1]
