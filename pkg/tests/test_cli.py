"""
Integration tests for the hyperfree command line
Tests: JSON reports, text rendering, output files, exit statuses
"""

import json

import pytest

from hyperfree import __version__
from hyperfree.cli import EXIT_BUDGET, EXIT_ERROR, create_parser, main
from hyperfree.files import load_arrangement
from hyperfree.reports import input_digest


@pytest.fixture
def run_json(capsys):
    """Run main with --json and return the parsed report"""

    def _run(*argv):
        main([*argv, "--json"])
        return json.loads(capsys.readouterr().out)

    return _run


@pytest.fixture
def fixture_path(fixtures_dir):
    def _path(name):
        return str(fixtures_dir / name)

    return _path


class TestParser:
    """Tests for argument parsing"""

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0
        assert __version__ in capsys.readouterr().out

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as info:
            main(["volume", "a.arr"])
        assert info.value.code == EXIT_ERROR

    def test_missing_command(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == EXIT_ERROR

    def test_common_flags_after_command(self):
        args = create_parser().parse_args(["charpoly", "a.arr", "--method", "ff", "--budget", "10", "-v"])
        assert args.method == "ff"
        assert args.budget == 10
        assert args.verbose

    def test_repeatable_conjecture_flags(self):
        args = create_parser().parse_args(
            ["conjecture", "--type", "A", "--rank", "2", "--window", "0:1", "--window=-1:1", "--check", "fe", "--check", "rh"]
        )
        assert args.window == ["0:1", "-1:1"]
        assert args.check == ["fe", "rh"]


class TestInvariantCommands:
    """Tests for charpoly, chambers, betti, lattice and info"""

    def test_charpoly_finite_field(self, run_json, fixture_path):
        report = run_json("charpoly", fixture_path("braid3.arr"), "--method", "ff")
        assert report["command"] == "charpoly"
        assert report["result"] == {
            "charpoly": "t^3 - 3*t^2 + 2*t",
            "coefficients": [0, 2, -3, 1],
            "method": "ff",
        }

    def test_input_digest(self, run_json, fixture_path, fixtures_dir):
        report = run_json("charpoly", fixture_path("braid3.arr"))
        text = (fixtures_dir / "braid3.arr").read_text()
        assert report["input"] == input_digest(text)
        assert report["input"].startswith("sha256:")
        assert report["version"] == __version__

    def test_byte_stable(self, capsys, fixture_path):
        main(["freetest", fixture_path("fig1.arr"), "--json"])
        first = capsys.readouterr().out
        main(["freetest", fixture_path("fig1.arr"), "--json"])
        assert capsys.readouterr().out == first

    def test_chambers(self, run_json, fixture_path):
        report = run_json("chambers", fixture_path("square.arr"))
        assert report["result"] == {"chambers": 12, "bounded": 2}

    def test_betti(self, run_json, fixture_path):
        report = run_json("betti", fixture_path("fig1.arr"))
        assert report["result"]["betti"] == [1, 9, 23, 15]

    def test_lattice(self, run_json, fixture_path):
        report = run_json("lattice", fixture_path("braid3.arr"))
        assert report["result"]["charpoly"] == "t^3 - 3*t^2 + 2*t"
        assert len(report["result"]["flats"]) == 5

    def test_info(self, run_json, fixture_path):
        result = run_json("info", fixture_path("fig1_restriction.arr"))["result"]
        assert result["dimension"] == 2
        assert result["central"] is True
        assert result["multiplicity"] == [3, 3, 1, 1]

    def test_text_output(self, capsys, fixture_path):
        main(["chambers", fixture_path("square.arr")])
        out = capsys.readouterr().out
        assert "chambers" in out
        assert "bounded" in out
        assert "{" not in out

    def test_timing(self, run_json, fixture_path):
        report = run_json("charpoly", fixture_path("braid3.arr"), "--timing")
        assert report["timing"]["wall_seconds"] >= 0
        assert report["timing"]["rss_bytes"] > 0


class TestConstructionCommands:
    """Tests for cone and restrict"""

    def test_cone_output(self, run_json, fixture_path, tmp_path):
        target = tmp_path / "cone.arr"
        report = run_json("cone", fixture_path("two_points.arr"), "--output", str(target))
        assert report["result"]["hyperplanes"] == 3
        parsed = load_arrangement(target)
        assert parsed.arrangement.dimension == 2
        assert parsed.arrangement.is_central

    def test_ziegler_restriction(self, run_json, fixture_path):
        result = run_json("restrict", fixture_path("fig1.arr"), "--pivot", "0", "--ziegler")["result"]
        assert result["multiplicity"] == [3, 3, 1, 1]
        assert result["hyperplanes"] == 4
        assert result["chart"]["pivot"] == 2

    def test_plain_restriction(self, run_json, fixture_path):
        result = run_json("restrict", fixture_path("square.arr"), "--pivot", "0")["result"]
        assert "multiplicity" not in result
        assert result["hyperplanes"] == 2

    def test_ziegler_needs_central(self, fixture_path):
        with pytest.raises(SystemExit) as info:
            main(["restrict", fixture_path("square.arr"), "--pivot", "0", "--ziegler"])
        assert info.value.code == EXIT_ERROR


class TestDerivationCommands:
    """Tests for exponents2, hilbert, saito and freetest"""

    def test_exponents2(self, run_json, fixture_path):
        result = run_json("exponents2", fixture_path("fig1_restriction.arr"))["result"]
        assert result == {"exponents": [3, 5], "delta": 2, "weight": 8}

    def test_hilbert(self, run_json, fixture_path):
        result = run_json("hilbert", fixture_path("braid3.arr"), "--max-degree", "2")["result"]
        assert result == {"dims": {"0": 1, "1": 4, "2": 10}, "first_nonzero": 0}

    def test_saito(self, run_json, fixture_path):
        report = run_json("saito", fixture_path("braid3.arr"), "--basis", fixture_path("braid3_basis.txt"))
        assert report["certificate"]["status"] == "Free"
        assert report["certificate"]["method"] == "saito-basis"
        assert report["certificate"]["exponents"] == [0, 1, 2]

    def test_freetest(self, run_json, fixture_path):
        report = run_json("freetest", fixture_path("g2cat_cone.arr"))
        certificate = report["certificate"]
        assert certificate["status"] == "Free"
        assert certificate["method"] == "char3"
        assert certificate["exponents"] == [1, 7, 11]
        assert certificate["obstruction"] == 0
        assert all(certificate["checks"].values())

    def test_freetest_not_free(self, run_json, fixture_path):
        certificate = run_json("freetest", fixture_path("generic4.arr"))["certificate"]
        assert certificate["status"] == "NotFree"
        assert certificate["obstruction"] == 1
        assert certificate["checks"] == {}

    def test_freetest_multiarrangement(self, run_json, fixture_path):
        certificate = run_json("freetest", fixture_path("fig1_restriction.arr"))["certificate"]
        assert certificate["exponents"] == [3, 5]


class TestCoxeterCommands:
    """Tests for coxeter and conjecture"""

    def test_g2_catalan_cone(self, run_json):
        result = run_json("coxeter", "--type", "G", "--rank", "2", "--window=-1:1", "--cone")["result"]
        assert result["hyperplanes"] == 19
        assert result["charpoly"] == "t^2 - 18*t + 77"
        assert result["exponents"] == [1, 5]

    def test_er(self, run_json):
        report = run_json("coxeter", "--type", "A", "--rank", "2", "--er", "shi")
        assert report["result"]["deformation"]["passed"] is True
        assert report["certificate"]["exponents"] == [1, 3, 3]

    def test_multi(self, run_json):
        result = run_json("coxeter", "--type", "B", "--rank", "2", "--multi", "5")["result"]
        assert result["multiplicity_check"]["exponents"] == [9, 11]

    def test_unsupported_system(self):
        with pytest.raises(SystemExit) as info:
            main(["coxeter", "--type", "E", "--rank", "6"])
        assert info.value.code == EXIT_ERROR

    def test_rh(self, run_json):
        result = run_json("conjecture", "--type", "A", "--rank", "3", "--window", "0:2", "--check", "rh")["result"]
        assert result["holds"] is True
        assert result["center"] == "6"
        assert result["window"] == [0, 2]

    def test_conjecture_grid(self, run_json):
        result = run_json(
            "conjecture", "--type", "A", "--rank", "2",
            "--window", "0:1", "--window", "-1:1", "--check", "fe", "--check", "hshift",
        )["result"]
        assert len(result["records"]) == 4
        assert all(record["holds"] for record in result["records"])

    def test_rh_out_of_domain(self):
        with pytest.raises(SystemExit) as info:
            main(["conjecture", "--type", "A", "--rank", "3", "--window=1:1", "--check", "rh"])
        assert info.value.code == EXIT_ERROR


class TestSweepCommands:
    """Tests for sweep and delta-sweep"""

    def test_manifest(self, run_json, fixture_path):
        jobs = run_json("sweep", "--manifest", fixture_path("manifest.yml"), "--workers", "2")["result"]["jobs"]
        assert [job["op"] for job in jobs] == ["exponents2", "exponents2", "charpoly", "freetest"]
        assert jobs[0]["result"]["exponents"] == [3, 5]

    def test_family(self, run_json, fixtures_dir):
        jobs = run_json("sweep", "--family", str(fixtures_dir / "braid*.arr"), "--op", "charpoly")["result"]["jobs"]
        assert len(jobs) == 2

    def test_typical(self, run_json):
        result = run_json("sweep", "--typical", "double", "--samples", "3", "--seed", "5")["result"]
        assert result["passed"] is True
        assert result["seed"] == 5

    def test_sweep_needs_source(self):
        with pytest.raises(SystemExit) as info:
            main(["sweep"])
        assert info.value.code == EXIT_ERROR

    def test_delta_sweep(self, run_json):
        result = run_json("delta-sweep", "--t-range", "1:4")["result"]
        assert result["jumps"] == [1]
        assert result["generic_delta"] == 0


class TestExitStatus:
    """Tests for error handling and exit statuses"""

    def test_missing_file(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(["charpoly", str(tmp_path / "missing.arr")])
        assert info.value.code == EXIT_ERROR

    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.arr"
        bad.write_text("arrangement 1\ndim 2\nhyp 1 0\n")
        with pytest.raises(SystemExit) as info:
            main(["charpoly", str(bad)])
        assert info.value.code == EXIT_ERROR
        assert "line 3" in capsys.readouterr().err

    def test_budget_exceeded(self, fixture_path, capsys):
        with pytest.raises(SystemExit) as info:
            main(["charpoly", fixture_path("braid3.arr"), "--method", "ff", "--budget", "10"])
        assert info.value.code == EXIT_BUDGET
        assert "Budget Error" in capsys.readouterr().err

    def test_invalid_budget(self, fixture_path):
        with pytest.raises(SystemExit) as info:
            main(["charpoly", fixture_path("braid3.arr"), "--budget", "0"])
        assert info.value.code == EXIT_ERROR

    def test_config_file(self, tmp_path, fixture_path):
        config = tmp_path / "hyperfree.yml"
        config.write_text("hyperfree:\n  budgets:\n    enumeration_points: 10\n")
        with pytest.raises(SystemExit) as info:
            main(["charpoly", fixture_path("braid3.arr"), "--method", "ff", "--config", str(config)])
        assert info.value.code == EXIT_BUDGET
