"""
permspec command-line driver.

Subcommands build matrices, certify predicted spectra, verify the Specht
action, run lemma suites, print character tables, rebuild the errata ledger
and run the property suites. Reports go to standard output as JSON; progress
lines go to standard error.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import config
from .characters import character_sum_dichotomy, character_table
from .errors import PermSpecError, UsageError
from .groupalg import regular_matrix_csv
from .oracles import SUITES, errata_ledger, property_checks, run_suite
from .specht import specht_csv, verify_thsp
from .spectra import (
    MatrixKind,
    build_matrix,
    certify,
    maschke_reconciliation,
    minimal_polynomial_check,
    predicted_spectrum,
)
from .stats import registry_for
from .storage import dumps, dumps_line, save_report_to_manifest, update_status, write_json, write_jsonl, write_text

FORMATS = ("json", "text", "csv")


@dataclass
class CampaignConfig:
    """Everything one CLI invocation needs, validated up front."""

    command: str
    n: Optional[int] = None
    kind: Optional[MatrixKind] = None
    seeds: Tuple[int, ...] = config.DEFAULT_SEEDS
    output: Optional[Path] = None
    format: str = "json"
    jobs: int = config.DEFAULT_JOBS
    symbolic: bool = False
    quiet: bool = False
    timing: bool = True
    suites: Optional[List[str]] = None
    nmax: int = 5
    dump: Optional[Path] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CampaignConfig":
        try:
            seeds = config.parse_seeds(args.seeds) if getattr(args, "seeds", None) else config.DEFAULT_SEEDS
        except ValueError as exc:
            raise UsageError(f"bad --seeds: {exc}") from None
        if any(not 0 <= seed < 2 ** 64 for seed in seeds):
            raise UsageError("seeds must be 64-bit non-negative integers")
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        kind = MatrixKind.parse(args.kind) if getattr(args, "kind", None) else None
        suites = [s.strip() for s in args.suite.split(",") if s.strip()] if getattr(args, "suite", None) else None
        return cls(
            command=args.command,
            n=getattr(args, "n", None),
            kind=kind,
            seeds=seeds,
            output=Path(args.output) if args.output else None,
            format=args.format,
            jobs=args.jobs,
            symbolic=getattr(args, "symbolic", False),
            quiet=args.quiet,
            timing=not args.no_timing,
            suites=suites,
            nmax=getattr(args, "nmax", 5),
            dump=Path(args.dump) if getattr(args, "dump", None) else None,
        )


def _progress(campaign: CampaignConfig) -> Callable[[int, int, str], None]:
    def report(k: int, total: int, message: str) -> None:
        if not campaign.quiet:
            print(f"[{k}/{total}] {message}...", file=sys.stderr)

    return report


def _require_n(campaign: CampaignConfig) -> int:
    if campaign.n is None:
        raise UsageError(f"{campaign.command} needs --n")
    return campaign.n


def _require_kind(campaign: CampaignConfig) -> MatrixKind:
    if campaign.kind is None:
        raise UsageError(f"{campaign.command} needs --kind")
    return campaign.kind


def _matrix_csv(kind: MatrixKind, n: int, matrix) -> str:
    registry = registry_for(n)
    if kind is MatrixKind.SPECHT_IF:
        return specht_csv(matrix, n, registry)
    return regular_matrix_csv(matrix, n, registry)


def cmd_matrix(campaign: CampaignConfig) -> Tuple[bool, Any]:
    kind, n = _require_kind(campaign), _require_n(campaign)
    progress = _progress(campaign)
    progress(1, 2, f"Building {kind.value}({n})")
    matrix = build_matrix(kind, n)
    progress(2, 2, "Rendering CSV")
    text = _matrix_csv(kind, n, matrix)
    if campaign.dump:
        write_text(campaign.dump, text)
    if campaign.format == "csv":
        return True, text
    return True, {
        "kind": kind.value,
        "n": n,
        "rows": matrix.rows,
        "cols": matrix.cols,
        "dump": str(campaign.dump) if campaign.dump else None,
    }


def cmd_certify(campaign: CampaignConfig) -> Tuple[bool, Any]:
    kind, n = _require_kind(campaign), _require_n(campaign)
    progress = _progress(campaign)
    progress(1, 2, f"Loading predicted spectrum for {kind.value}({n})")
    spec = predicted_spectrum(kind, n)
    progress(2, 2, f"Certifying at seeds {','.join(str(s) for s in campaign.seeds)}")
    report = certify(spec, seeds=campaign.seeds, jobs=campaign.jobs, symbolic=campaign.symbolic)
    return report.passed, report.to_dict(timing=campaign.timing)


def cmd_specht(campaign: CampaignConfig) -> Tuple[bool, Any]:
    n = _require_n(campaign)
    _progress(campaign)(1, 1, f"Verifying the S^({n - 1},1) action")
    report = verify_thsp(n, seeds=campaign.seeds, jobs=campaign.jobs)
    if campaign.symbolic:
        spec = predicted_spectrum(MatrixKind.SPECHT_IF, n)
        verdict = minimal_polynomial_check(MatrixKind.SPECHT_IF, n, spec.values)
        report.details["minimal_polynomial"] = verdict.to_dict()
        if not verdict.passed:
            report.issues.append("minimal polynomial check failed")
    return report.passed, report.to_dict()


def cmd_lemmas(campaign: CampaignConfig) -> Tuple[bool, Any]:
    n = _require_n(campaign)
    result = run_suite(n, campaign.suites, progress=_progress(campaign))
    if campaign.output:
        write_jsonl(campaign.output / f"lemmas_n{n}.jsonl", result.to_rows())
    return result.passed, result.to_rows()


def cmd_characters(campaign: CampaignConfig) -> Tuple[bool, Any]:
    n = _require_n(campaign)
    progress = _progress(campaign)
    progress(1, 3, f"Character table of S_{n}")
    table = character_table(n)
    if campaign.format == "csv":
        return True, table.to_csv()
    data: Dict[str, Any] = {"table": table.to_dict()}
    passed = table.column_orthogonality_holds()
    progress(2, 3, "Character-sum dichotomy")
    if 4 <= n <= 8:
        dichotomy = character_sum_dichotomy(n)
        data["dichotomy"] = dichotomy.to_dict()
        passed = passed and dichotomy.passed
    progress(3, 3, "Block multiplicities")
    if n >= 4:
        maschke = maschke_reconciliation(n)
        data["maschke"] = maschke.to_dict()
        passed = passed and maschke.passed
    return passed, data


def cmd_errata(campaign: CampaignConfig) -> Tuple[bool, Any]:
    ledger = errata_ledger(campaign.nmax, seed=campaign.seeds[0], progress=_progress(campaign))
    return ledger.passed, ledger.to_dict()


def cmd_properties(campaign: CampaignConfig) -> Tuple[bool, Any]:
    _progress(campaign)(1, 1, "Property suites")
    reports = property_checks(campaign.seeds[0])
    return all(r.passed for r in reports), [r.to_dict() for r in reports]


COMMANDS: Dict[str, Callable[[CampaignConfig], Tuple[bool, Any]]] = {
    "matrix": cmd_matrix,
    "certify": cmd_certify,
    "specht": cmd_specht,
    "lemmas": cmd_lemmas,
    "characters": cmd_characters,
    "errata": cmd_errata,
    "properties": cmd_properties,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seeds", help="Comma-separated seeds (default from DEFAULT_SEEDS)")
    common.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS, help="Worker processes")
    common.add_argument(
        "--output", nargs="?", const=str(config.OUTPUT_DIR), help="Directory for status, manifest and report files"
    )
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format")
    common.add_argument("--quiet", action="store_true", help="Suppress progress lines")
    common.add_argument("--no-timing", action="store_true", help="Leave elapsed time out of reports")

    kinds = [kind.value for kind in MatrixKind if kind is not MatrixKind.X]
    parser = argparse.ArgumentParser(
        prog="permspec",
        description="Certify spectra of permutation-statistic matrices by exact computation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    matrix = sub.add_parser("matrix", parents=[common], help="Build a matrix and dump it as CSV")
    matrix.add_argument("--kind", required=True, type=str.upper, choices=kinds)
    matrix.add_argument("--n", type=int, required=True)
    matrix.add_argument("--dump", help="Write the CSV to this path")

    cert = sub.add_parser("certify", parents=[common], help="Certify a predicted spectrum")
    cert.add_argument("--kind", required=True, type=str.upper, choices=kinds)
    cert.add_argument("--n", type=int, required=True)
    cert.add_argument("--symbolic", action="store_true", help="Also verify the minimal polynomial")

    specht = sub.add_parser("specht", parents=[common], help="Verify the S^(n-1,1) action")
    specht.add_argument("--n", type=int, required=True)
    specht.add_argument("--symbolic", action="store_true", help="Also verify the minimal polynomial")

    lemmas = sub.add_parser("lemmas", parents=[common], help="Run lemma suites")
    lemmas.add_argument("--n", type=int, required=True)
    lemmas.add_argument("--suite", help=f"Comma-separated subset of {','.join(SUITES)}")

    characters = sub.add_parser("characters", parents=[common], help="Character table and dichotomy")
    characters.add_argument("--n", type=int, required=True)

    errata = sub.add_parser("errata", parents=[common], help="Rebuild the errata ledger")
    errata.add_argument("--nmax", type=int, default=5)

    sub.add_parser("properties", parents=[common], help="Run the property suites")
    return parser


def _render(campaign: CampaignConfig, passed: bool, payload: Any) -> str:
    if isinstance(payload, str):
        return payload
    if campaign.format == "csv":
        raise UsageError("csv output is available for matrix and characters only")
    if campaign.format == "text":
        label = campaign.command if campaign.n is None else f"{campaign.command} n={campaign.n}"
        if campaign.kind is not None:
            label += f" kind={campaign.kind.value}"
        if passed:
            return f"{label}: PASS\n"
        # failures always carry the full report
        return f"{label}: FAIL\n" + dumps(payload) + "\n"
    if isinstance(payload, list) and campaign.command == "lemmas":
        return "".join(dumps_line(row) + "\n" for row in payload)
    return dumps(payload) + "\n"


def _store(campaign: CampaignConfig, passed: bool, payload: Any) -> None:
    verdict = "PASS" if passed else "FAIL"
    name = campaign.command if campaign.n is None else f"{campaign.command}_n{campaign.n}"
    if campaign.kind is not None:
        name += f"_{campaign.kind.value}"
    suffix = ".csv" if isinstance(payload, str) else ".json"
    path = campaign.output / f"{name}{suffix}"
    if isinstance(payload, str):
        write_text(path, payload)
    else:
        write_json(path, payload)
    save_report_to_manifest(campaign.output, {"command": campaign.command, "n": campaign.n, "verdict": verdict, "path": path.name})
    update_status(campaign.output, {"status": "complete", "command": campaign.command, "verdict": verdict})


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns 0 if every verdict passed, 1 on FAIL, 2 on usage errors, 3 on resource caps."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        campaign = CampaignConfig.from_args(args)
        if campaign.output:
            update_status(campaign.output, {"status": "running", "command": campaign.command, "n": campaign.n})
        passed, payload = COMMANDS[campaign.command](campaign)
        sys.stdout.write(_render(campaign, passed, payload))
        if campaign.output:
            _store(campaign, passed, payload)
    except PermSpecError as exc:
        print(f"permspec: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0 if passed else 1


def main() -> None:
    sys.exit(run())
