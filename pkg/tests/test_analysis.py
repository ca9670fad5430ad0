"""
Unit tests for randomized sweeps, the t-family experiment and batch jobs
"""

import pytest

from hyperfree.analysis import (
    Job,
    TypicalCase,
    abe_bound_sweep,
    delta_sweep,
    generic_delta_sweep,
    jobs_from_glob,
    load_manifest,
    run_jobs,
    t_family,
    typical_exponents,
    typical_sweep,
)
from hyperfree.derivations import exponents_rank2
from hyperfree.errors import DomainError


class TestTypicalExponents:
    """Tests for the closed-form cases"""

    @pytest.mark.parametrize(
        "case,values,expected",
        [
            (TypicalCase.DOMINANT, (5, 1), (1, 5)),
            (TypicalCase.DOMINANT, (3, 1, 1, 1), (3, 3)),
            (TypicalCase.MANY_LINES, (1, 1, 1, 1, 1), (1, 4)),
            (TypicalCase.MANY_LINES, (2, 1, 1), (2, 2)),
            (TypicalCase.DOUBLE, (2, 2, 2), (3, 3)),
            (TypicalCase.THREE_LINES, (3, 2, 2), (3, 4)),
        ],
    )
    def test_closed_forms(self, case, values, expected):
        assert typical_exponents(case, values) == expected

    @pytest.mark.parametrize(
        "case,values",
        [
            (TypicalCase.DOMINANT, (1, 1, 1)),
            (TypicalCase.MANY_LINES, (3, 3, 1, 1)),
            (TypicalCase.DOUBLE, (2, 1)),
            (TypicalCase.THREE_LINES, (1, 1, 1, 1)),
            (TypicalCase.THREE_LINES, (5, 1, 1)),
        ],
    )
    def test_hypothesis_enforced(self, case, values):
        with pytest.raises(DomainError):
            typical_exponents(case, values)


class TestSweeps:
    """Tests for the randomized sweeps"""

    @pytest.mark.parametrize("case", list(TypicalCase))
    def test_typical_sweep(self, case):
        result = typical_sweep(case, samples=5, seed=7, max_lines=4)
        assert len(result.records) == 5
        assert result.passed, result.failures

    @pytest.mark.slow
    @pytest.mark.parametrize("case", list(TypicalCase))
    def test_typical_sweep_full(self, case):
        result = typical_sweep(case, samples=200, seed=0)
        assert len(result.records) == 200
        assert result.passed, result.failures[:3]

    @pytest.mark.slow
    def test_abe_bound_full(self):
        result = abe_bound_sweep(samples=200, seed=0)
        assert result.passed, result.failures[:3]

    def test_seed_reproducible(self):
        first = typical_sweep(TypicalCase.DOMINANT, samples=3, seed=11)
        second = typical_sweep(TypicalCase.DOMINANT, samples=3, seed=11)
        assert first.records == second.records

    def test_abe_bound(self):
        result = abe_bound_sweep(samples=5, seed=3, max_lines=4)
        assert result.passed
        assert all(r["delta"] <= r["bound"] for r in result.records)
        assert result.to_dict()["samples"] == 5

    def test_generic_delta(self):
        result = generic_delta_sweep(samples=3, seed=1, max_lines=4)
        assert result.name == "generic-delta"
        assert all(r["delta"] == r["exponents"][1] - r["exponents"][0] for r in result.records)


class TestTFamily:
    """Tests for the family x^3 y^3 (x + y)(tx - y)"""

    def test_t_one_is_special(self):
        assert exponents_rank2(*t_family(1)) == (3, 5)

    def test_generic_t(self):
        assert exponents_rank2(*t_family(2)) == (4, 4)

    @pytest.mark.parametrize("t", [0, -1])
    def test_degenerate(self, t):
        with pytest.raises(DomainError):
            t_family(t)

    def test_delta_sweep(self):
        sweep = delta_sweep(range(-1, 5))
        assert [r["t"] for r in sweep.records] == [1, 2, 3, 4]
        assert sweep.generic_delta == 0
        assert sweep.jumps == [1]
        assert sweep.to_dict()["jumps"] == [1]

    def test_empty_sweep(self):
        sweep = delta_sweep([0])
        assert sweep.generic_delta is None
        assert sweep.jumps == []


class TestJobs:
    """Tests for manifests, globs and the job runner"""

    def test_manifest(self, fixtures_dir):
        jobs = load_manifest(str(fixtures_dir / "manifest.yml"))
        assert [job.op for job in jobs] == ["exponents2", "exponents2", "charpoly", "freetest"]
        assert jobs[0].file == str(fixtures_dir / "fig1_restriction.arr")

    def test_run_manifest_in_order(self, fixtures_dir):
        records = run_jobs(load_manifest(str(fixtures_dir / "manifest.yml")), workers=4)
        assert records[0]["result"]["exponents"] == [3, 5]
        assert records[1]["result"]["exponents"] == [4, 4]
        assert records[2]["result"]["charpoly"] == "t^3 - 3*t^2 + 2*t"
        assert records[3]["result"]["status"] == "NotFree"
        assert all("error" not in r for r in records)

    def test_errors_recorded(self, fixtures_dir, tmp_path):
        jobs = [
            Job(str(fixtures_dir / "fig1_restriction.arr"), "freetest"),
            Job(str(tmp_path / "missing.arr"), "charpoly"),
            Job(str(fixtures_dir / "square.arr"), "chambers"),
        ]
        records = run_jobs(jobs)
        assert "simple arrangement" in records[0]["error"]
        assert "not found" in records[1]["error"]
        assert records[2]["result"] == {"chambers": 12, "bounded": 2}

    def test_glob(self, fixtures_dir):
        jobs = jobs_from_glob(str(fixtures_dir / "braid*.arr"), "betti")
        assert [job.file for job in jobs] == [
            str(fixtures_dir / "braid3.arr"),
            str(fixtures_dir / "braid4.arr"),
        ]

    def test_glob_no_match(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            jobs_from_glob(str(tmp_path / "*.arr"), "charpoly")

    def test_unknown_operation(self):
        with pytest.raises(DomainError):
            Job("a.arr", "volume").validate()

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_manifest(str(tmp_path / "manifest.yml"))

    @pytest.mark.parametrize(
        "content",
        ["jobs: []\n", "other: 1\n", "jobs:\n  - file: a.arr\n", "jobs:\n  - file: a.arr\n    op: volume\n"],
    )
    def test_bad_manifest(self, tmp_path, content):
        manifest = tmp_path / "manifest.yml"
        manifest.write_text(content)
        with pytest.raises(DomainError):
            load_manifest(str(manifest))
