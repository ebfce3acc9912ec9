"""Command-line interface.

``nf-isac <experiment> [--config FILE] [--out DIR] [--seed U64] [--threads N]
[--model ...]`` runs one named experiment and writes its CSV/JSON outputs.
``nf-isac validate`` runs the full self-validation battery and exits nonzero
if any check fails.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, NumericalError
from .experiments import EXPERIMENTS, build_config, load_config_file, run_experiment

_MODEL_CHOICES = ("accurate", "nopolar", "upw", "usw", "nusw")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE", help="TOML config file")
    p.add_argument("--out", metavar="DIR", help="output directory (default: runs)")
    p.add_argument("--seed", type=int, metavar="U64", help="RNG seed")
    p.add_argument("--threads", type=int, metavar="N", help="worker thread count")
    p.add_argument(
        "--model",
        action="append",
        choices=_MODEL_CHOICES,
        metavar="|".join(_MODEL_CHOICES),
        help="channel model (repeatable; overrides config/defaults)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nf-isac",
        description="Near-field ISAC performance experiments and validation.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    descriptions = {
        "dl_snr": "downlink rates versus transmit SNR",
        "dl_n": "downlink rates versus element count, per channel model",
        "dl_r": "downlink rates versus distance (r_s = r, r_c = 2r)",
        "dl_region": "downlink SR-CR region frontiers (ISAC and FDSAC)",
        "ul_snr": "uplink rates versus transmit SNR",
        "ul_n": "uplink rates versus element count, per channel model",
        "ul_region": "uplink SR-CR region frontiers with inner bound",
        "ccf": "channel-correlation-factor ladder over element counts",
    }
    for exp in EXPERIMENTS:
        p = sub.add_parser(exp, help=descriptions[exp])
        _add_common(p)
    v = sub.add_parser("validate", help="run the self-validation battery")
    v.add_argument("--seed", type=int, default=42, metavar="U64")
    v.add_argument("--threads", type=int, metavar="N")
    v.add_argument("--out", metavar="DIR", help="directory for validation artifacts")
    return parser


def _check_seed(seed: int | None) -> None:
    if seed is not None and not (0 <= seed < 2**64):
        raise ConfigError(f"seed must fit in an unsigned 64-bit integer, got {seed}")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _check_seed(getattr(args, "seed", None))
        if args.command == "validate":
            from .validation import validate_suite

            report = validate_suite(
                seed=args.seed, threads=args.threads, out_dir=args.out
            )
            return 0 if report.all_passed else 1
        file_cfg = load_config_file(args.config) if args.config else None
        cfg = build_config(
            args.command,
            file_cfg,
            out=args.out,
            seed=args.seed,
            threads=args.threads,
            models=args.model,
        )
        summary = run_experiment(cfg)
        names = ", ".join(summary["outputs"])
        print(f"{args.command}: wrote {names} and summary.json to {cfg.out}")
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
