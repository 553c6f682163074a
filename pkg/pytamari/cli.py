"""
Command line front end.

``pytamari build`` constructs alt ν-Tamari lattices and exports them, ``pytamari verify`` runs a verification
suite and ``pytamari scan`` looks for increment vectors that change the rowmotion orbits. Reports go to standard
output; ``--out`` writes the JSON companion. The exit status is 0 when every check passed, 1 on a failed check
or a counterexample and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import pytamari
from pytamari.AltTamari import build_alt_tamari
from pytamari.FiniteLattice import FiniteLattice  # noqa: TC001
from pytamari.LatticePath import IncrementVector, parse_path
from pytamari.Statistics import STATISTICS, orbit_stat_report
from pytamari.Verifications import (
    COUNTEREXAMPLE,
    SUITES,
    ScanConfig,
    VerifyConfig,
    render_scan_table,
    render_table,
    report_to_json,
    run_suite,
    scan_conjecture,
    scan_report_to_json,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def _stat_names(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    unknown = [name for name in names if name not in STATISTICS]
    if unknown:
        msg = f"Unknown statistic '{unknown[0]}'. Expected one of: {', '.join(STATISTICS)}."
        raise argparse.ArgumentTypeError(msg)
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pytamari", description="Rowmotion on alt ν-Tamari lattices.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {pytamari.__version__ or 'unknown'}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug output")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="build Tam_δ(ν) and report its rowmotion orbits")
    build.add_argument("--nu", required=True, help='bounding path, e.g. "EN^2E^2N"')
    deltas = build.add_mutually_exclusive_group()
    deltas.add_argument("--delta", help="comma separated increment vector; defaults to δ = ν")
    deltas.add_argument("--all-deltas", action="store_true", help="iterate over every increment vector")
    build.add_argument("--export", choices=("dot", "json"), help="export the cover graph")
    build.add_argument("--out", type=Path, help="export destination; standard output when omitted")
    build.add_argument(
        "--stats", type=_stat_names, default=(), help=f"statistics to sum over orbits: {','.join(STATISTICS)}"
    )
    build.add_argument("--max-elements", type=int, help="element guard for this run")

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, choices=SUITES)
    verify.add_argument("--max-a", type=int, default=4)
    verify.add_argument("--max-b", type=int, default=4)
    verify.add_argument("--count", type=int, default=20, help="random cases of the interval suite")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    verify.add_argument("--out", type=Path, help="write the JSON report here")

    scan = commands.add_parser("scan", help="compare rowmotion orbits across all increment vectors")
    scan.add_argument("--nu", action="append", default=[], help="path to scan; repeatable")
    scan.add_argument("--max-north", type=int, default=4)
    scan.add_argument("--max-east", type=int, default=6)
    scan.add_argument("--samples", type=int, help="scan a seeded random sample of the generated paths")
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--max-elements", type=int, help="element guard per lattice")
    scan.add_argument("--jobs", type=int, default=1, help="worker processes")
    scan.add_argument("--out", type=Path, help="write the JSON report here")
    return parser


def _write_json(path: Path | None, payload: dict[str, Any]) -> None:
    if path is not None:
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def _export_path(out: Path, delta: IncrementVector, many: bool) -> Path:
    if not many:
        return out
    return out.with_name(f"{out.stem}-{'_'.join(str(value) for value in delta.values)}{out.suffix}")


def _export(lattice: FiniteLattice, fmt: str, stats: dict[str, Any]) -> str:
    if fmt == "dot":
        return lattice.to_dot()
    payload = lattice.to_json()
    payload["orbits"] = lattice.orbit_decomposition().to_json()
    payload["statistics"] = stats
    return json.dumps(payload, indent=2, ensure_ascii=False)


def cmd_build(args: argparse.Namespace) -> int:
    nu = parse_path(args.nu)
    if args.all_deltas:
        vectors = list(IncrementVector.all_for(nu))
    elif args.delta is not None:
        vectors = [IncrementVector.parse(args.delta).aligned(nu)]
    else:
        vectors = [IncrementVector.full(nu)]
    status = EXIT_OK
    for delta in vectors:
        lattice = build_alt_tamari(nu, delta, max_elements=args.max_elements)
        semidistributive = lattice.is_semidistributive()
        print(
            f"nu={nu} delta=({delta}): {lattice.size} elements, semidistributive: {'yes' if semidistributive else 'no'}"
        )
        if not semidistributive:
            status = EXIT_FAILED
            continue
        decomposition = lattice.orbit_decomposition()
        print(f"orbit sizes: {' '.join(str(size) for size in decomposition.sizes)} (order {decomposition.order})")
        stats: dict[str, Any] = {}
        for name in args.stats:
            report = orbit_stat_report(lattice, decomposition, name)
            print(report.to_table())
            stats[name] = report.to_json()
        if args.export is None:
            continue
        text = _export(lattice, args.export, stats)
        if args.out is None:
            print(text)
        else:
            target = _export_path(args.out, delta, len(vectors) > 1)
            target.write_text(text + "\n", encoding="utf-8")
            logging.info("Wrote %s", target)
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    config = VerifyConfig(
        max_a=args.max_a,
        max_b=args.max_b,
        count=args.count,
        seed=args.seed,
        jobs=args.jobs,
    )
    results = run_suite(args.suite, config)
    print(render_table(results))
    _write_json(args.out, report_to_json(results))
    return EXIT_OK if all(result.passed for result in results) else EXIT_FAILED


def cmd_scan(args: argparse.Namespace) -> int:
    config = ScanConfig(
        paths=tuple(args.nu),
        max_north=args.max_north,
        max_east=args.max_east,
        samples=args.samples,
        seed=args.seed,
        max_elements=args.max_elements,
        jobs=args.jobs,
    )
    results = scan_conjecture(config)
    print(render_scan_table(results))
    _write_json(args.out, scan_report_to_json(results))
    return EXIT_FAILED if any(result.status == COUNTEREXAMPLE for result in results) else EXIT_OK


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "scan": cmd_scan}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line interface.

    Parameters
    ----------
    argv : Sequence[str] | None
        Arguments without the program name; ``sys.argv[1:]`` when None.

    Returns
    -------
    int
        The exit status.
    """
    args = build_parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ValueError as e:
        print(f"pytamari: error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
