"""
Unit tests for root systems, deformations and conjecture checkers
Tests: root tables, Catalan/Shi deformations, Coxeter multiarrangements,
functional equation, h-shift, Riemann hypothesis, sweeps
"""

from fractions import Fraction

import pytest

from hyperfree.algebra import UniPoly
from hyperfree.arrangements import charpoly, cone
from hyperfree.coxeter import (
    SUPPORTED_RANKS,
    ConjectureCheck,
    DeformationKind,
    DeformationSpec,
    conjecture_fe,
    conjecture_hshift,
    conjecture_rh,
    conjecture_sweep,
    coxeter_arrangement,
    coxeter_multi_check,
    coxeter_shift_check,
    deformation,
    er_verify,
    expected_charpoly,
    expected_exponents,
    parse_window,
    positive_roots,
    run_check,
    verify_root_table,
    window_charpoly,
    window_to_pair,
)
from hyperfree.errors import DimensionError, DomainError


@pytest.fixture
def a2():
    return positive_roots("A", 2)


@pytest.fixture
def a3():
    return positive_roots("A", 3)


class TestRootSystems:
    """Tests for positive_roots and the stored tables"""

    @pytest.mark.parametrize(
        "family,rank,count,h",
        [("A", 2, 3, 3), ("A", 3, 6, 4), ("B", 3, 9, 6), ("C", 3, 9, 6), ("D", 4, 12, 6), ("G", 2, 6, 6)],
    )
    def test_counts(self, family, rank, count, h):
        system = positive_roots(family, rank)
        assert len(system.positive_roots) == count
        assert system.coxeter_number == h
        assert system.validate()

    def test_d4_exponents(self):
        assert positive_roots("D", 4).exponents == (1, 3, 3, 5)

    def test_every_supported_rank_validates(self):
        for family, ranks in SUPPORTED_RANKS.items():
            for rank in ranks:
                assert positive_roots(family, rank).validate()

    def test_lowercase_family(self):
        assert positive_roots("g", 2).name == "G2"

    @pytest.mark.parametrize("family,rank", [("E", 6), ("A", 5), ("G", 3), ("D", 2)])
    def test_unsupported(self, family, rank):
        with pytest.raises(DomainError):
            positive_roots(family, rank)

    @pytest.mark.parametrize("family,rank", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
    def test_verify_root_table(self, family, rank):
        checks = verify_root_table(positive_roots(family, rank))
        assert checks == {"root_count": True, "duality": True, "exponents": True}

    def test_coxeter_arrangement_charpoly(self, a3):
        assert charpoly(coxeter_arrangement(a3)) == UniPoly.from_roots([1, 2, 3])


class TestDeformations:
    """Tests for DeformationSpec, deformation and the closed forms"""

    def test_catalan_counts(self, a2):
        assert len(deformation(DeformationSpec.catalan(a2, 1))) == 9
        g2_cone = cone(deformation(DeformationSpec.catalan(positive_roots("G", 2), 1)))
        assert len(g2_cone) == 19

    def test_single_level(self, a3):
        spec = DeformationSpec.from_conjecture(a3, -1, 1)
        assert (spec.lo, spec.hi) == (1, 1)
        assert len(deformation(spec)) == 6

    def test_root_major_order(self, a2):
        A = deformation(DeformationSpec(a2, 0, 1))
        assert [h.constant for h in A.hyperplanes[:2]] == [0, 1]

    def test_spec_label_and_levels(self, a2):
        spec = DeformationSpec.shi(a2, 2)
        assert spec.label == "A2[-1,2]"
        assert spec.levels == 4

    @pytest.mark.parametrize(
        "make",
        [
            lambda s: DeformationSpec(s, 2, 1),
            lambda s: DeformationSpec.catalan(s, -1),
            lambda s: DeformationSpec.shi(s, 0),
        ],
    )
    def test_invalid_specs(self, a2, make):
        with pytest.raises(DomainError):
            make(a2)

    def test_expected_forms(self, a2):
        assert expected_exponents(a2, 1, DeformationKind.CATALAN) == [1, 4, 5]
        assert expected_exponents(a2, 1, "shi") == [1, 3, 3]
        assert expected_charpoly(a2, 1, "shi") == UniPoly.from_roots([3, 3])

    def test_shi_matches_fixture(self, a2, load_fixture):
        shi = load_fixture("a2_shi.arr").arrangement
        assert charpoly(shi) == charpoly(deformation(DeformationSpec.shi(a2, 1)))

    @pytest.mark.parametrize(
        "family,rank,k,kind,exponents",
        [
            ("G", 2, 1, "catalan", [1, 7, 11]),
            ("A", 2, 1, "shi", [1, 3, 3]),
            ("A", 2, 1, "catalan", [1, 4, 5]),
            ("B", 2, 1, "catalan", [1, 5, 7]),
            ("B", 2, 1, "shi", [1, 4, 4]),
            ("G", 2, 1, "shi", [1, 6, 6]),
            ("A", 2, 2, "shi", [1, 6, 6]),
            ("A", 2, 2, "catalan", [1, 7, 8]),
            ("B", 2, 2, "shi", [1, 8, 8]),
            ("B", 2, 2, "catalan", [1, 9, 11]),
        ],
    )
    def test_er_verify(self, family, rank, k, kind, exponents):
        check = er_verify(positive_roots(family, rank), k, kind)
        assert check.passed
        assert check.certificate.exponents == exponents
        assert check.checks == {"free": True, "exponents": True, "charpoly": True}
        assert check.to_dict()["passed"] is True

    @pytest.mark.slow
    def test_er_verify_a3_catalan(self, a3):
        check = er_verify(a3, 1, "catalan")
        assert check.passed
        assert check.certificate.exponents == [1, 5, 6, 7]

    @pytest.mark.slow
    def test_er_verify_g2_catalan_twice(self):
        check = er_verify(positive_roots("G", 2), 2, "catalan")
        assert check.passed
        assert check.certificate.exponents == [1, 13, 17]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "kind,exponents", [("shi", [1, 6, 6, 6]), ("catalan", [1, 7, 9, 11])]
    )
    def test_er_verify_b3(self, kind, exponents):
        check = er_verify(positive_roots("B", 3), 1, kind)
        assert check.passed
        assert check.certificate.exponents == exponents

    def test_er_verify_unknown_kind(self, a2):
        with pytest.raises(DomainError):
            er_verify(a2, 1, "linial")

    def test_parse_window(self):
        assert parse_window("1:2") == (1, 2)
        assert parse_window("-1:1") == (-1, 1)
        assert window_to_pair(-1, 1) == (1, 1)

    @pytest.mark.parametrize("text", ["2:1", "abc", "1:2:3", "1"])
    def test_parse_window_errors(self, text):
        with pytest.raises(DomainError):
            parse_window(text)


class TestCoxeterMultiarrangements:
    """Tests for constant and shifted multiplicities in rank 2"""

    @pytest.mark.parametrize("family", ["A", "B", "G"])
    @pytest.mark.parametrize("m", range(1, 8))
    def test_constant_multiplicity(self, family, m):
        result = coxeter_multi_check(positive_roots(family, 2), m)
        assert result.passed, result.to_dict()

    def test_b2_m5(self):
        result = coxeter_multi_check(positive_roots("B", 2), 5)
        assert result.exponents == (9, 11)

    def test_g2_m3(self):
        assert coxeter_multi_check(positive_roots("G", 2), 3).exponents == (7, 11)

    def test_a2_m2(self, a2):
        assert coxeter_multi_check(a2, 2).exponents == (3, 3)

    def test_shift(self, a2):
        result = coxeter_shift_check(a2, 1, (1, 0, 1))
        assert result.multiplicity == (3, 2, 3)
        assert result.expected == (4, 4)
        assert result.passed

    def test_shift_rejects_values(self, a2):
        with pytest.raises(DomainError):
            coxeter_shift_check(a2, 1, (2, 0, 1))
        with pytest.raises(DimensionError):
            coxeter_shift_check(a2, 1, (1, 0))

    def test_rank_two_only(self, a3):
        with pytest.raises(DomainError):
            coxeter_multi_check(a3, 2)


class TestConjectures:
    """Tests for the functional equation, h-shift and Riemann hypothesis checks"""

    def test_window_charpoly(self, a3):
        assert window_charpoly(a3, -1, 1) == UniPoly([-14, 15, -6, 1])
        assert window_charpoly(a3, 0, 2) == UniPoly([-234, 111, -18, 1])

    def test_window_charpoly_shi(self, a2):
        assert window_charpoly(a2, 0, 1) == UniPoly.from_roots([3, 3])

    def test_fe_catalan(self, a3):
        result = conjecture_fe(a3, 1, 1)
        assert result.holds
        assert result.center == 6
        assert result.witness is None
        assert result.charpoly == UniPoly.from_roots([5, 6, 7])

    def test_fe_shi(self, a2):
        assert conjecture_fe(a2, 0, 1).holds

    def test_fe_domain(self, a2):
        with pytest.raises(DomainError):
            conjecture_fe(a2, -1, 0)
        with pytest.raises(DomainError):
            conjecture_fe(a2, 2, 1)

    def test_hshift(self, a2, a3):
        assert conjecture_hshift(a3, -1, 1).holds
        assert conjecture_hshift(a2, 1, 1).holds

    def test_rh_in_domain(self, a2, a3):
        result = conjecture_rh(a3, 0, 2)
        assert result.holds
        assert result.in_domain
        assert result.center == 6
        assert conjecture_rh(a2, 0, 2).center == Fraction(9, 2)

    def test_rh_outside_domain(self, a3):
        with pytest.raises(DomainError):
            conjecture_rh(a3, -1, 1)
        result = conjecture_rh(a3, -1, 1, allow_out_of_domain=True)
        assert result.in_domain is False
        assert result.center == 2

    def test_result_to_dict(self, a2):
        record = conjecture_rh(a2, 0, 2).to_dict()
        assert record["window"] == [0, 2]
        assert record["center"] == "9/2"
        assert record["check"] == "rh"

    def test_run_check_parses_names(self, a2):
        assert run_check("FE", a2, 0, 1).check == ConjectureCheck.FE
        with pytest.raises(DomainError):
            run_check("zeta", a2, 0, 1)

    def test_sweep_order_and_errors(self, a2):
        records = conjecture_sweep([a2], [(0, 1), (-1, 0)], ["fe", "hshift"], workers=3)
        assert [r["window"] for r in records] == [[0, 1], [0, 1], [1, 0], [1, 0]]
        assert [r["check"] for r in records] == ["fe", "hshift", "fe", "hshift"]
        assert records[0]["holds"] is True
        assert "error" in records[2]
