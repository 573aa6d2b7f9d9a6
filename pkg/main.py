"""
Hilbert-square maximality toolkit - command-line front end.
Reads surface profiles, decides Smith-Thom maximality of the surface and of
its Hilbert square, and runs the verification oracles.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from tabulate import tabulate

from catalog import export_catalog, run_catalog
from config import GOETTSCHE_CONFIG, OUTPUT_CONFIG, apply_overrides
from errors import (
    ComplexError,
    ConfigurationError,
    HypothesisError,
    MaximalityError,
    MissingHodgeDataError,
    ProfileFormatError,
    ProfileValidationError,
    ResourceBudgetError,
    SmithTheoryError,
)
from hilbert import hilb2_verdict, hilb_betti_series
from homology import homology_ranks, maximality_exactness, smith_sequence
from surfaces import consistency_violations, smith_defect
from tasks import SUITES, VerificationTasks
from tools import ComplexReader, ProfileReader

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

INPUT_ERRORS = (
    ComplexError,
    ConfigurationError,
    HypothesisError,
    MissingHodgeDataError,
    ProfileFormatError,
    ProfileValidationError,
    ResourceBudgetError,
    SmithTheoryError,
)


def _optional(value):
    return "N/A" if value is None else value


class MaximalitySystem:
    """Runs one analysis per invocation and reports it as text or records."""

    def __init__(self, output_format: str = "text", table_format: Optional[str] = None):
        """
        Args:
            output_format: "text" for banners and tables, "records" for JSON lines
            table_format: tabulate style; defaults to OUTPUT_CONFIG["table_format"]
        """
        self.records = output_format == "records"
        self.table_format = table_format or OUTPUT_CONFIG["table_format"]

    def emit(self, record: dict):
        print(json.dumps(record, sort_keys=True))

    def banner(self, title: str):
        print("\n" + "=" * 80)
        print(title)
        print("=" * 80)

    def table(self, rows, headers):
        print("\n" + tabulate(rows, headers=headers, tablefmt=self.table_format))

    # analyze

    def analyze(self, path: str) -> int:
        profile = ProfileReader.read(path)
        report = smith_defect(profile)
        problems = consistency_violations(profile)

        if self.records:
            self.emit({
                "record": "smith",
                "profile": profile.name,
                "beta_star_X": report.beta_star_X,
                "beta_star_R": report.beta_star_R,
                "defect": report.defect,
                "is_maximal": report.is_maximal,
                "comessatti_ok": report.comessatti_ok,
                "hodge_component_bound": report.hodge_component_bound,
                "violations": problems,
                "profile_text": ProfileReader.render(profile),
            })
            return EXIT_OK

        self.banner(f"SMITH-THOM REPORT: {profile.name}")
        print(f"\nReal locus: {profile.real_locus_label}")
        self.table(
            [
                ["beta*(X)", report.beta_star_X],
                ["beta*(X(R))", report.beta_star_R],
                ["Smith defect", report.defect],
                ["Maximal", "yes" if report.is_maximal else "no"],
                ["Comessatti inequality", _optional(report.comessatti_ok)],
                ["Hodge bound on components", _optional(report.hodge_component_bound)],
            ],
            headers=["Quantity", "Value"],
        )
        for problem in problems:
            print(f"   • {problem}")
        print("\n" + "=" * 80)
        return EXIT_OK

    # hilb2

    def hilb2(self, path: str) -> int:
        profile = ProfileReader.read(path)
        report = hilb2_verdict(profile)
        verdict = report.verdict

        if self.records:
            self.emit({
                "record": "hilb2",
                "profile": profile.name,
                "beta_star_hilb2_C": report.beta_star_hilb2_C,
                "beta_star_exact": report.beta_star_exact,
                "chi_hilb2_R": report.chi_hilb2_R,
                "beta_hilb2_R": list(report.beta_hilb2_R) if report.beta_hilb2_R else None,
                "required_beta1": report.required_beta1,
                "actual_beta1": report.actual_beta1,
                "defect": report.defect,
                "rank_mu": report.rank_mu.value if report.rank_mu else None,
                "rank_mu_source": report.rank_mu.source.value if report.rank_mu else None,
                "decision": verdict.decision.value,
                "rule": verdict.rule.value if verdict.rule else None,
                "rule_citation": verdict.rule.citation if verdict.rule else None,
                "notes": list(verdict.notes),
                "profile_text": ProfileReader.render(profile),
            })
            return EXIT_OK

        self.banner(f"HILBERT SQUARE REPORT: {profile.name}")
        print(f"\nReal locus of X: {profile.real_locus_label}")
        print("\nSummary:")
        qualifier = "" if report.beta_star_exact else " (lower bound)"
        print(f"   • beta*(X^[2]) = {report.beta_star_hilb2_C}{qualifier}")
        print(f"   • chi(X^[2](R)) = {report.chi_hilb2_R}")
        print(f"   • required beta1 = {_optional(report.required_beta1)}")
        print(f"   • actual beta1 = {_optional(report.actual_beta1)}")
        if report.rank_mu is not None:
            print(f"   • rank mu = {_optional(report.rank_mu.value)} ({report.rank_mu.source.value})")

        if report.beta_hilb2_R is not None:
            self.table([["X^[2](R)", *report.beta_hilb2_R, sum(report.beta_hilb2_R)]],
                       headers=["", "b0", "b1", "b2", "b3", "b4", "total"])

        rule = verdict.rule.value if verdict.rule else "none"
        print(f"\nVerdict: {verdict.decision.value}   (rule: {rule}, defect: {_optional(report.defect)})")
        if verdict.rule:
            print(f"   • {verdict.rule.citation}")
        for note in verdict.notes:
            print(f"   • {note}")
        print("\n" + "=" * 80)
        return EXIT_OK

    # goettsche

    def goettsche(self, betti, n_max: int) -> int:
        series = hilb_betti_series(betti, n_max)
        if self.records:
            for n, i, value in series.records():
                self.emit({"record": "betti", "n": n, "i": i, "value": value})
            return EXIT_OK

        self.banner(f"BETTI NUMBERS OF X^[n] FOR b = {tuple(betti)}")
        width = 4 * n_max + 1
        rows = []
        for n in range(n_max + 1):
            row = list(series.row(n)) + [""] * (width - 4 * n - 1)
            rows.append([n, *row, series.total(n)])
        self.table(rows, headers=["n", *(f"b{i}" for i in range(width)), "total"])
        print("\n" + "=" * 80)
        return EXIT_OK

    # verify

    def verify(self, suite: str) -> int:
        results = VerificationTasks.run(suite)
        if self.records:
            for result in results:
                self.emit({"record": "check", "suite": result.suite, "name": result.name,
                           "passed": result.passed, "detail": result.detail})
        else:
            self.banner(f"VERIFICATION: {suite}")
            self.table(
                [[r.suite, r.name, "✓" if r.passed else "✗", r.detail] for r in results],
                headers=["Suite", "Check", "Pass", "Detail"],
            )
            passed = sum(r.passed for r in results)
            print(f"\n{passed}/{len(results)} checks passed")
            print("=" * 80)
        return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED

    # catalog

    def catalog(self, name_filter: Optional[str] = None) -> int:
        results = run_catalog(name_filter)
        if self.records:
            for result in results:
                computed = result.computed
                self.emit({
                    "record": "catalog",
                    "entry": result.entry.name,
                    "expected": result.entry.expected.decision.value,
                    "computed": computed.decision.value,
                    "rule": computed.rule.value if computed.rule else None,
                    "agrees": result.agrees,
                })
        else:
            self.banner("CATALOG REGRESSION")
            rows = []
            for result in results:
                computed = result.computed
                rows.append([
                    result.entry.name,
                    result.entry.profile.real_locus_label,
                    result.entry.expected.decision.value,
                    computed.decision.value,
                    computed.rule.value if computed.rule else "none",
                    "✓" if result.agrees else "✗",
                ])
            self.table(rows, headers=["Entry", "Real locus", "Expected", "Computed", "Rule", "Agrees"])
            agreed = sum(r.agrees for r in results)
            print(f"\n{agreed}/{len(results)} entries agree")
            print("=" * 80)
        return EXIT_OK if all(r.agrees for r in results) else EXIT_FAILED

    def export_catalog(self, directory: str) -> int:
        paths = export_catalog(directory)
        for path in paths:
            if self.records:
                self.emit({"record": "exported", "path": str(path)})
            else:
                print(f"✓ {path}")
        return EXIT_OK

    # homology

    def homology(self, path: str) -> int:
        complex_, involution = ComplexReader.read(path)
        betti = homology_ranks(complex_)
        data = smith_sequence(involution) if involution is not None else None
        exact = maximality_exactness(involution) if involution is not None else None

        if self.records:
            record = {"record": "homology", "f_vector": list(complex_.f_vector), "betti": betti}
            if data is not None:
                record.update({
                    "betti_F": list(data.betti_F),
                    "betti_relative": list(data.betti_relative),
                    "smith_defect": data.smith_defect,
                    "exact": exact,
                    "subdivisions": data.subdivisions,
                })
            self.emit(record)
            return EXIT_OK

        self.banner(f"HOMOLOGY OF {path}")
        print(f"\nf-vector: {complex_.f_vector}")
        self.table([["X", *betti]], headers=["", *(f"b{k}" for k in range(len(betti)))])
        if data is not None:
            rows = []
            for k in range(len(data.betti_X)):
                rows.append([k, data.betti_X[k], data.betti_F[k], data.betti_relative[k],
                             data.rank_inclusion[k], data.rank_projection[k], data.rank_connecting[k]])
            self.table(rows, headers=["k", "H(X)", "H(F)", "H(X/c,F)", "rank i", "rank pr", "rank delta"])
            print(f"\nSmith defect: {data.smith_defect}   exact: {'yes' if exact else 'no'}"
                  f"   subdivisions: {data.subdivisions}")
        print("\n" + "=" * 80)
        return EXIT_OK


def _betti_argument(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected five comma-separated integers, got {text!r}") from None
    if len(values) != 5:
        raise argparse.ArgumentTypeError(f"expected five Betti numbers, got {len(values)}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maximality",
        description="Smith-Thom maximality of real surfaces and of their Hilbert squares.",
    )
    parser.add_argument("--config", metavar="FILE", help="KEY=VALUE settings file")
    parser.add_argument("--format", choices=("text", "records"), default="text",
                        help="human-readable text or one JSON record per line")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    analyze = commands.add_parser("analyze", help="Smith-Thom report for a profile")
    analyze.add_argument("file")

    hilb2 = commands.add_parser("hilb2", help="maximality verdict for the Hilbert square")
    hilb2.add_argument("file")

    goettsche = commands.add_parser("goettsche", help="Betti numbers of X^[n] from the product formula")
    goettsche.add_argument("--betti", type=_betti_argument, required=True, metavar="b0,b1,b2,b3,b4")
    goettsche.add_argument("--nmax", type=int, default=None, metavar="N")

    verify = commands.add_parser("verify", help="run the verification oracles")
    verify.add_argument("--suite", choices=(*SUITES, "all"), default="all")

    catalog = commands.add_parser("catalog", help="check the built-in examples")
    catalog.add_argument("--filter", default=None, metavar="NAME")

    export = commands.add_parser("export-catalog", help="write the built-in profiles to a directory")
    export.add_argument("directory")

    homology = commands.add_parser("homology", help="GF(2) homology of a complex file")
    homology.add_argument("file")
    return parser


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    _configure_logging(args.verbose)
    try:
        if args.config:
            apply_overrides(args.config)
        system = MaximalitySystem(output_format=args.format)

        if args.command == "analyze":
            return system.analyze(args.file)
        if args.command == "hilb2":
            return system.hilb2(args.file)
        if args.command == "goettsche":
            n_max = GOETTSCHE_CONFIG["default_n_max"] if args.nmax is None else args.nmax
            return system.goettsche(args.betti, n_max)
        if args.command == "verify":
            return system.verify(args.suite)
        if args.command == "catalog":
            return system.catalog(args.filter)
        if args.command == "export-catalog":
            return system.export_catalog(args.directory)
        return system.homology(args.file)

    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MaximalityError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
