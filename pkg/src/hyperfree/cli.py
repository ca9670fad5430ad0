#!/usr/bin/env python3
"""
Command-line interface for hyperfree - invariants and freeness certificates of hyperplane arrangements
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from loguru import logger

from hyperfree import __version__
from hyperfree.errors import HyperfreeError, ResourceBudgetError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2


def setup_logging(verbose: bool = False, log_directory: Optional[str] = None):
    """Configure logging for the application"""
    from hyperfree.logs import configure

    configure(verbose=verbose, log_directory=log_directory)


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def _load(path: str):
    """Parse an arrangement file and return it with the digest of its text"""
    from hyperfree.files import parse_arrangement
    from hyperfree.reports import input_digest

    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Arrangement file not found: {path}")
    text = file_path.read_text()
    return parse_arrangement(text), input_digest(text)


def _root_system(args):
    from hyperfree.coxeter import positive_roots

    return positive_roots(args.type, args.rank)


# ============================================================================
# Command handlers
# ============================================================================


def handle_invariant_commands(args):
    """charpoly, lattice, chambers, betti, info"""
    from hyperfree.arrangements import (
        betti,
        chamber_counts,
        charpoly,
        intersection_lattice,
        poincare,
    )
    from hyperfree.reports import Report

    parsed, digest = _load(args.file)
    arrangement = parsed.arrangement
    report = Report(command=args.command, digest=digest)

    if args.command == "charpoly":
        chi = charpoly(arrangement, args.method)
        report.result = {
            "charpoly": chi.format(),
            "coefficients": [int(c) for c in chi.coefficients],
            "method": args.method,
        }

    elif args.command == "lattice":
        lattice = intersection_lattice(arrangement)
        report.result = {
            "ranks": lattice.summary(),
            "flats": [
                {**flat.to_dict(), "mobius": lattice.mobius[flat]} for flat in lattice.flats()
            ],
            "charpoly": lattice.characteristic_polynomial().format(),
        }

    elif args.command == "chambers":
        chambers, bounded = chamber_counts(arrangement)
        report.result = {"chambers": chambers, "bounded": bounded}

    elif args.command == "betti":
        report.result = {
            "betti": betti(arrangement),
            "poincare": poincare(arrangement).format(),
        }

    elif args.command == "info":
        chi = charpoly(arrangement)
        report.result = {
            "dimension": arrangement.dimension,
            "central": arrangement.is_central,
            "rank": arrangement.rank(),
            "hyperplanes": len(arrangement),
            "multiplicity": list(parsed.multiplicity.values),
            "charpoly": chi.format(),
            "betti": betti(arrangement),
        }

    return report


def handle_construction_commands(args):
    """cone, restrict"""
    from hyperfree.arrangements import Multiplicity, cone, restrict
    from hyperfree.files import serialize_arrangement
    from hyperfree.reports import Report

    parsed, digest = _load(args.file)
    arrangement = parsed.arrangement
    report = Report(command=args.command, digest=digest)

    if args.command == "cone":
        coned = cone(arrangement)
        multiplicity = Multiplicity((1,) + parsed.multiplicity.values)
        report.result = {
            "arrangement": serialize_arrangement(coned, multiplicity),
            "hyperplanes": len(coned),
        }

    elif args.command == "restrict":
        if args.ziegler:
            arrangement.require_central("restrict --ziegler")
        restriction = restrict(arrangement, args.pivot)
        multiplicity = restriction.multiplicity if args.ziegler else None
        report.result = {
            "arrangement": serialize_arrangement(restriction.arrangement, multiplicity),
            "chart": restriction.chart.to_dict(),
            "sources": [list(s) for s in restriction.sources],
            "hyperplanes": len(restriction.arrangement),
        }
        if multiplicity is not None:
            report.result["multiplicity"] = list(multiplicity.values)

    if args.output:
        Path(args.output).write_text(report.result["arrangement"])
        logger.info(f"Arrangement written to {args.output}")
    return report


def handle_derivation_commands(args):
    """hilbert, exponents2, saito"""
    from hyperfree.derivations import exponents_rank2, hilbert, parse_basis_file, saito_check
    from hyperfree.reports import Report

    parsed, digest = _load(args.file)
    arrangement = parsed.arrangement
    multiplicity = parsed.multiplicity
    report = Report(command=args.command, digest=digest)

    if args.command == "hilbert":
        dims = hilbert(arrangement, multiplicity, args.max_degree)
        report.result = {"dims": dims.to_dict(), "first_nonzero": dims.first_nonzero()}

    elif args.command == "exponents2":
        d1, d2 = exponents_rank2(arrangement, multiplicity)
        report.result = {"exponents": [d1, d2], "delta": d2 - d1, "weight": multiplicity.weight}

    elif args.command == "saito":
        basis_path = Path(args.basis)
        if not basis_path.exists():
            raise FileNotFoundError(f"Basis file not found: {args.basis}")
        names = arrangement.variable_names
        fields = parse_basis_file(basis_path.read_text(), arrangement.dimension, names)
        certificate = saito_check(arrangement, multiplicity, fields)
        report.certificate = certificate.to_dict(names)
        report.result = certificate.details()

    return report


def handle_freeness_commands(args):
    """freetest"""
    from hyperfree.arrangements import charpoly
    from hyperfree.freeness import (
        ConeForm,
        chern_relation_check,
        free_test,
        free_test_at,
        multi_free_search,
        solomon_terao_free,
        terao_factor_check,
    )
    from hyperfree.reports import Report

    parsed, digest = _load(args.file)
    arrangement = parsed.arrangement
    names = arrangement.variable_names
    report = Report(command=args.command, digest=digest)

    if not parsed.is_simple:
        certificate = multi_free_search(arrangement, parsed.multiplicity)
        payload = certificate.to_dict(names)
    else:
        if args.pivot is not None:
            certificate = free_test_at(ConeForm(arrangement, args.pivot))
        else:
            certificate = free_test(arrangement)
        chi = charpoly(arrangement)
        payload = certificate.to_dict(names)
        payload["charpoly"] = chi.format()
        checks: Dict[str, bool] = {}
        if certificate.is_free:
            exponents = certificate.exponents or []
            checks = {
                "terao_factorization": terao_factor_check(chi, exponents),
                "chern_relation": chern_relation_check(chi, exponents, arrangement.dimension),
                "solomon_terao": solomon_terao_free(exponents) == chi,
            }
            if not all(checks.values()):
                logger.warning(f"Free certificate fails identity checks: {checks}")
        payload["checks"] = checks

    report.certificate = payload
    report.result = certificate.details()
    logger.info(f"Verdict: {certificate.status.value} via {certificate.method.value}")
    return report


def handle_coxeter_commands(args):
    """coxeter, conjecture"""
    from hyperfree.arrangements import charpoly, cone
    from hyperfree.coxeter import (
        DeformationSpec,
        conjecture_sweep,
        coxeter_multi_check,
        deformation,
        er_verify,
        parse_window,
        run_check,
        verify_root_table,
        window_to_pair,
    )
    from hyperfree.config import get_settings
    from hyperfree.files import serialize_arrangement
    from hyperfree.reports import Report

    system = _root_system(args)
    report = Report(command=args.command)

    if args.command == "coxeter":
        report.result = {
            "root_system": system.name,
            "positive_roots": [list(r) for r in system.positive_roots],
            "exponents": list(system.exponents),
            "coxeter_number": system.coxeter_number,
        }
        if args.window:
            lo, hi = parse_window(args.window)
            arrangement = deformation(DeformationSpec(system, lo, hi))
            report.result["charpoly"] = charpoly(arrangement).format()
            if args.cone:
                arrangement = cone(arrangement)
            report.result["arrangement"] = serialize_arrangement(arrangement)
            report.result["hyperplanes"] = len(arrangement)
        if args.verify_table:
            report.result["table_checks"] = verify_root_table(system)
        if args.er:
            check = er_verify(system, args.k, args.er)
            report.result["deformation"] = check.to_dict()
            report.certificate = check.certificate.to_dict()
        if args.multi is not None:
            report.result["multiplicity_check"] = coxeter_multi_check(system, args.multi).to_dict()
        if args.output and "arrangement" in report.result:
            Path(args.output).write_text(report.result["arrangement"])
            logger.info(f"Arrangement written to {args.output}")

    elif args.command == "conjecture":
        pairs = [window_to_pair(*parse_window(w)) for w in args.window]
        checks = args.check
        if len(pairs) == 1 and len(checks) == 1:
            a, b = pairs[0]
            result = run_check(checks[0], system, a, b, args.allow_out_of_domain)
            report.result = result.to_dict()
        else:
            report.result = {
                "records": conjecture_sweep(
                    [system], pairs, checks, get_settings().workers, args.allow_out_of_domain
                )
            }

    return report


def handle_sweep_commands(args):
    """sweep, delta-sweep"""
    from hyperfree.analysis import (
        TypicalCase,
        abe_bound_sweep,
        delta_sweep,
        jobs_from_glob,
        load_manifest,
        run_jobs,
        typical_sweep,
    )
    from hyperfree.config import get_settings
    from hyperfree.coxeter import parse_window
    from hyperfree.errors import DomainError
    from hyperfree.reports import Report

    report = Report(command=args.command)

    if args.command == "delta-sweep":
        lo, hi = parse_window(args.t_range)
        report.result = delta_sweep(range(lo, hi + 1)).to_dict()

    elif args.command == "sweep":
        seed = args.seed if args.seed is not None else 0
        if args.manifest:
            jobs = load_manifest(args.manifest)
            report.result = {"jobs": run_jobs(jobs, get_settings().workers)}
        elif args.family:
            jobs = jobs_from_glob(args.family, args.op)
            report.result = {"jobs": run_jobs(jobs, get_settings().workers)}
        elif args.typical == "abe":
            report.result = abe_bound_sweep(args.samples, seed).to_dict()
        elif args.typical:
            try:
                case = TypicalCase(args.typical)
            except ValueError as e:
                raise DomainError(f"Unknown typical case '{args.typical}'") from e
            report.result = typical_sweep(case, args.samples, seed).to_dict()
        else:
            raise DomainError("sweep needs --family, --manifest or --typical")

    return report


COMMANDS: Dict[str, Callable[[argparse.Namespace], Any]] = {
    "charpoly": handle_invariant_commands,
    "lattice": handle_invariant_commands,
    "chambers": handle_invariant_commands,
    "betti": handle_invariant_commands,
    "info": handle_invariant_commands,
    "cone": handle_construction_commands,
    "restrict": handle_construction_commands,
    "hilbert": handle_derivation_commands,
    "exponents2": handle_derivation_commands,
    "saito": handle_derivation_commands,
    "freetest": handle_freeness_commands,
    "coxeter": handle_coxeter_commands,
    "conjecture": handle_coxeter_commands,
    "sweep": handle_sweep_commands,
    "delta-sweep": handle_sweep_commands,
}


# ============================================================================
# Parser
# ============================================================================


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the report as JSON")
    common.add_argument(
        "--budget", type=int, help="Point budget for finite-field enumeration"
    )
    common.add_argument("--seed", type=int, help="Seed for randomized sweeps")
    common.add_argument("--config", default=None, help="Path to YAML configuration file")
    common.add_argument("--workers", type=int, help="Thread pool size for sweeps")
    common.add_argument(
        "--timing", action="store_true", help="Add wall time and memory to the report"
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose (DEBUG) logging"
    )
    return common


def _coxeter_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", required=True, help="Root system family (A, B, C, D, G)")
    parser.add_argument("--rank", type=int, required=True, help="Root system rank")


def create_parser():
    """Create and configure argument parser"""
    parser = _Parser(
        prog="hyperfree",
        description="Exact invariants and freeness certificates for hyperplane arrangements",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  hyperfree charpoly braid3.arr --method ff
  hyperfree freetest g2cat_cone.arr --json
  hyperfree restrict fig1.arr --pivot 0 --ziegler
  hyperfree coxeter --type G --rank 2 --er catalan --k 1
  hyperfree conjecture --type A --rank 3 --window 0:2 --check rh
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(
        dest="command", help="Available commands", required=True, parser_class=_Parser
    )
    common = _common_flags()

    def file_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text, parents=[common])
        sub.add_argument("file", help="Arrangement file")
        return sub

    charpoly_parser = file_command("charpoly", "Characteristic polynomial")
    charpoly_parser.add_argument(
        "--method",
        default="mobius",
        choices=["mobius", "delres", "finitefield", "ff"],
        help="Computation method",
    )
    file_command("lattice", "Intersection lattice with Möbius values")
    file_command("chambers", "Number of chambers and bounded chambers")
    file_command("betti", "Betti numbers and Poincaré polynomial")
    file_command("info", "Summary of an arrangement")

    cone_parser = file_command("cone", "Cone over an affine arrangement")
    cone_parser.add_argument("--output", help="Write the cone to this file")

    restrict_parser = file_command("restrict", "Restriction to one hyperplane")
    restrict_parser.add_argument("--pivot", type=int, required=True, help="Hyperplane index")
    restrict_parser.add_argument(
        "--ziegler", action="store_true", help="Attach the Ziegler multiplicity"
    )
    restrict_parser.add_argument("--output", help="Write the restriction to this file")

    hilbert_parser = file_command("hilbert", "Graded dimensions of D(A, m)")
    hilbert_parser.add_argument(
        "--max-degree", dest="max_degree", type=int, help="Top degree (default |m|)"
    )
    file_command("exponents2", "Exponents of a multiarrangement of lines")
    saito_parser = file_command("saito", "Check a candidate basis by Saito's criterion")
    saito_parser.add_argument("--basis", required=True, help="File with one vector field per line")

    freetest_parser = file_command("freetest", "Decide freeness with a certificate")
    freetest_parser.add_argument("--pivot", type=int, help="Use this hyperplane as H0")

    coxeter_parser = subparsers.add_parser(
        "coxeter", help="Root systems and their deformations", parents=[common]
    )
    _coxeter_flags(coxeter_parser)
    coxeter_parser.add_argument("--window", help="Deformation window LO:HI")
    coxeter_parser.add_argument("--cone", action="store_true", help="Emit the cone of the deformation")
    coxeter_parser.add_argument(
        "--verify-table", dest="verify_table", action="store_true",
        help="Recompute the exponent table",
    )
    coxeter_parser.add_argument("--er", choices=["catalan", "shi"], help="Verify the cone is free")
    coxeter_parser.add_argument("--k", type=int, default=1, help="Deformation parameter")
    coxeter_parser.add_argument("--multi", type=int, help="Constant multiplicity check (rank 2)")
    coxeter_parser.add_argument("--output", help="Write the arrangement to this file")

    conjecture_parser = subparsers.add_parser(
        "conjecture", help="Exact conjecture checks on deformations", parents=[common]
    )
    _coxeter_flags(conjecture_parser)
    conjecture_parser.add_argument(
        "--window", action="append", required=True, help="Window LO:HI (repeatable)"
    )
    conjecture_parser.add_argument(
        "--check", action="append", required=True, choices=["rh", "fe", "hshift"],
        help="Identity to test (repeatable)",
    )
    conjecture_parser.add_argument(
        "--allow-out-of-domain", dest="allow_out_of_domain", action="store_true",
        help="Run rh for a = -1 or a = b",
    )

    sweep_parser = subparsers.add_parser(
        "sweep", help="Batch jobs and randomized exponent sweeps", parents=[common]
    )
    sweep_parser.add_argument("--family", help="Glob of arrangement files")
    sweep_parser.add_argument("--op", default="exponents2", help="Operation for --family")
    sweep_parser.add_argument("--manifest", help="YAML manifest of (file, op) jobs")
    sweep_parser.add_argument(
        "--typical",
        choices=["dominant", "many-lines", "double", "three-lines", "abe"],
        help="Randomized closed-form check",
    )
    sweep_parser.add_argument("--samples", type=int, default=200, help="Random instances")

    delta_parser = subparsers.add_parser(
        "delta-sweep", help="Delta over the family x^3 y^3 (x + y)(tx - y)", parents=[common]
    )
    delta_parser.add_argument("--t-range", dest="t_range", default="1:10", help="Range LO:HI of t")

    return parser


def _apply_settings(args) -> None:
    from hyperfree.config import DEFAULT_CONFIG_FILE, load_settings, set_settings

    settings = load_settings(
        config_file=args.config or DEFAULT_CONFIG_FILE,
        workers=args.workers,
        enumeration_points=args.budget,
    )
    set_settings(settings)
    setup_logging(verbose=args.verbose, log_directory=settings.log_directory)


def run(args):
    """Execute one parsed command and return its Report"""
    from hyperfree.reports import Stopwatch

    handler = COMMANDS[args.command]
    with Stopwatch() as watch:
        report = handler(args)
    if args.timing:
        report.timing = watch.timing
    return report


def _fail(message: str) -> None:
    print(f"\n {message}", file=sys.stderr)


def main(argv: Optional[List[str]] = None):
    """Main CLI entry point"""
    parser = create_parser()
    args = parser.parse_args(argv)

    try:
        _apply_settings(args)
    except (ValueError, OSError) as e:
        setup_logging(verbose=args.verbose)
        _fail(f"Configuration Error: {e}")
        sys.exit(EXIT_ERROR)

    logger.debug(f"hyperfree {__version__}: {args.command}")

    try:
        report = run(args)
    except ResourceBudgetError as e:
        _fail(f"Budget Error: {e}")
        sys.exit(EXIT_BUDGET)
    except FileNotFoundError as e:
        _fail(f"Error: {e}")
        sys.exit(EXIT_ERROR)
    except (HyperfreeError, ValueError) as e:
        _fail(f"Validation Error: {e}")
        sys.exit(EXIT_ERROR)
    except Exception as e:
        logger.exception("Unexpected error")
        _fail(f"Unexpected Error: {e}")
        sys.exit(EXIT_ERROR)

    if args.json:
        print(report.to_json())
    else:
        from hyperfree.reports import render_text

        print(render_text(report))


if __name__ == "__main__":
    main()
