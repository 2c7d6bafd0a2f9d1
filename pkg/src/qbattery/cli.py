"""Command-line interface.

Subcommands:
    simulate --config <path> [--out <dir>]   run a single configuration
    sweep    --config <path> [--workers N] [--out <dir>]
    validate [--fast]                        run the oracle suite
    presets  --list | --show <name>          shipped figure presets

Exit codes: 0 success, 1 validation or parse failure, 2 solver failure.
The environment variable QBATTERY_OUTPUT_ROOT sets the default output root.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import parse_config
from .errors import ConfigurationError, ParseError, SolverFailure, ValidationError
from .presets import PRESET_NAMES, preset_summary, preset_text
from .sweep import run_sweep
from .validate import format_report, run_checks


class _Parser(argparse.ArgumentParser):
    # Argument errors are usage/parse failures: exit 1, not argparse's 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qbattery", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run a single-point configuration")
    p_sim.add_argument("--config", required=True, type=Path)
    p_sim.add_argument("--out", type=Path, default=None)

    p_sweep = sub.add_parser("sweep", help="run a full parameter sweep")
    p_sweep.add_argument("--config", required=True, type=Path)
    p_sweep.add_argument("--workers", type=int, default=1)
    p_sweep.add_argument("--out", type=Path, default=None)

    p_val = sub.add_parser("validate", help="run the oracle suite")
    p_val.add_argument("--fast", action="store_true", help="trimmed parameter grids")

    p_presets = sub.add_parser("presets", help="shipped figure presets")
    p_presets.add_argument("--list", action="store_true")
    p_presets.add_argument("--show", metavar="NAME")
    return parser


def _load_spec(path: Path):
    try:
        text = path.read_text()
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return None
    return parse_config(text)


def _report_records(records) -> int:
    failures = [r for r in records if r.failed]
    for record in records:
        if record.failed:
            p = record.params
            print(
                f"FAILED (R={p.R:g}, delta={p.delta:g}, d={p.d:g}, "
                f"Omega={p.Omega:g}): {record.error}",
                file=sys.stderr,
            )
        else:
            print(f"wrote {record.series_path}")
    return 2 if failures else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            spec = _load_spec(args.config)
            if spec is None:
                return 1
            if spec.grid_size != 1:
                print(
                    f"config defines a {spec.grid_size}-point sweep; "
                    "use the sweep subcommand",
                    file=sys.stderr,
                )
                return 1
            return _report_records(run_sweep(spec, output_dir=args.out))

        if args.command == "sweep":
            spec = _load_spec(args.config)
            if spec is None:
                return 1
            return _report_records(
                run_sweep(spec, output_dir=args.out, workers=max(1, args.workers))
            )

        if args.command == "validate":
            results = run_checks(fast=args.fast)
            print(format_report(results))
            return 0 if all(r.passed for r in results) else 1

        if args.command == "presets":
            if args.show:
                try:
                    print(preset_text(args.show), end="")
                except KeyError as exc:
                    print(exc.args[0], file=sys.stderr)
                    return 1
                return 0
            for name in PRESET_NAMES:
                print(f"{name}: {preset_summary(name)}")
            return 0
    except ParseError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (ValidationError, ConfigurationError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 1
    except SolverFailure as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
