"""Command-line front end: ``qecfom {classical,quantum,shannon} [options]``.

Settings come from built-in defaults, then an optional ``--config`` file of
``key = value`` lines, then command-line flags (flags win). The worker count
defaults to the ``QECFOM_JOBS`` environment variable when ``--jobs`` is not
given.

Exit status: 0 on success, 1 on a configuration error, 2 on an I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Dict, Optional, Sequence

from qecfom.sweep import ConfigError, SweepConfig, SweepTable, run

JOBS_ENV = "QECFOM_JOBS"

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2

# config-file key -> (SweepConfig field, parser)
_KEYS = {
    "q_min": ("q_min", float),
    "q_max": ("q_max", float),
    "q_steps": ("q_steps", int),
    "alpha_steps": ("alpha_steps", int),
    "phi": ("phi", float),
    "strategy": ("strategies", None),
    "out": ("output_path", str),
    "format": ("format", str),
    "jobs": ("parallelism", int),
    "n_bits": ("n_bits", float),
    "err_rate": ("err_rate", float),
}


def _parse_strategy(value: str):
    value = value.strip()
    if value == "both":
        return ("I", "II")
    if value in ("I", "II"):
        return (value,)
    raise ConfigError(f"strategy must be I, II or both, got {value!r}")


def read_config_file(path: str) -> Dict[str, object]:
    """Parse ``key = value`` lines; ``#`` starts a comment, dashes equal underscores."""
    settings: Dict[str, object] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in _KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            field, conv = _KEYS[key]
            try:
                settings[field] = _parse_strategy(value) if conv is None else conv(value)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return settings


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qecfom",
        description="Fidelity vs mutual information sweeps for error-corrected bit-flip channels.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--jobs", type=int, help=f"worker processes (default: ${JOBS_ENV} or 1)")
    common.add_argument("--config", help="key = value settings file; flags take precedence")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--q-min", type=float)
    grid.add_argument("--q-max", type=float)
    grid.add_argument("--q-steps", type=int)
    grid.add_argument("--strategy", choices=("I", "II", "both"))

    sub.add_parser("classical", parents=[common, grid], help="4-bit repetition code, information and success vs q")
    quantum = sub.add_parser("quantum", parents=[common, grid], help="five-qubit code, information and fidelity over (alpha, q)")
    quantum.add_argument("--alpha-steps", type=int)
    quantum.add_argument("--phi", type=float)
    shannon = sub.add_parser("shannon", parents=[common], help="uncoded 1000 bit/s example")
    shannon.add_argument("--n-bits", type=float)
    shannon.add_argument("--err-rate", type=float)
    return parser


def config_from_args(args: argparse.Namespace) -> SweepConfig:
    settings: Dict[str, object] = {}
    env_jobs = os.environ.get(JOBS_ENV)
    if env_jobs:
        try:
            settings["parallelism"] = int(env_jobs)
        except ValueError as exc:
            raise ConfigError(f"{JOBS_ENV} must be an integer, got {env_jobs!r}") from exc
    if args.config:
        settings.update(read_config_file(args.config))
    flags = {
        "q_min": "q_min", "q_max": "q_max", "q_steps": "q_steps",
        "alpha_steps": "alpha_steps", "phi": "phi", "out": "output_path",
        "format": "format", "jobs": "parallelism", "n_bits": "n_bits",
        "err_rate": "err_rate",
    }
    for attr, field in flags.items():
        value = getattr(args, attr, None)
        if value is not None:
            settings[field] = value
    if getattr(args, "strategy", None) is not None:
        settings["strategies"] = _parse_strategy(args.strategy)
    try:
        return SweepConfig(mode=args.mode, **settings)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


def _shannon_report(table: SweepTable) -> str:
    lines = []
    for n, e, equiv, matches, erased in table.rows:
        lines.append(f"n = {n:g} bit/s, error rate = {e:g}")
        lines.append(f"  equivocation rate      : {equiv:.4g} bit/s ({equiv / n:.2%})")
        lines.append(f"  matches, random refill: {matches:g} /s")
        lines.append(f"  erasure loss, tagging : {erased:g} bit/s")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ConfigError as exc:
        print(f"qecfom: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"qecfom: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO

    table = run(cfg)
    text = table.render(cfg.format)
    if cfg.mode == "shannon" and cfg.output_path is None and cfg.format == "csv":
        text = _shannon_report(table)
    try:
        if cfg.output_path is None:
            sys.stdout.write(text)
        else:
            with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"qecfom: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
