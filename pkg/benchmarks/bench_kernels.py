#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-numpy fallback.

Times the three hot kernels (element-gain evaluation, compensated norm,
compensated inner product) on square arrays of increasing size and reports
per-call medians plus the compiled-over-python speedup.  Also cross-checks
that both backends agree bitwise-tightly on every timed case, so a speed
regression can never hide a correctness one.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 101,301,1001]
                                        [--repeats 7] [--model accurate]
"""

from __future__ import annotations

import argparse
import math
import statistics
import sys
import time

import numpy as np

from nfisac._kernels import BACKEND, MODEL_CODES, get_backend

WAVELENGTH = 0.125
SPACING = WAVELENGTH / 2.0
AREA = WAVELENGTH**2 / (4.0 * math.pi)
PLACEMENT = (10.0, math.pi / 4.0, math.pi / 6.0)


def _time(fn, repeats: int) -> float:
    """Median wall-clock seconds over `repeats` calls (1 warm-up)."""
    fn()
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench_size(n: int, model: str, repeats: int, backends: dict) -> list[dict]:
    code = MODEL_CODES[model]
    r, theta, phi = PLACEMENT
    args = (code, n, n, SPACING, AREA, WAVELENGTH, r, theta, phi)

    gains = {
        name: np.asarray(mod.channel_gains(*args))
        for name, mod in backends.items()
    }
    ref = gains["python"]
    for name, g in gains.items():
        worst = float(np.max(np.abs(g - ref))) if g.size else 0.0
        scale = float(np.max(np.abs(ref)))
        if worst > 1e-12 * scale:
            raise SystemExit(
                f"backend {name!r} disagrees on channel_gains at n={n}: "
                f"max abs diff {worst:.3e}"
            )

    rows = []
    for kernel, make in (
        ("channel_gains", lambda mod, g: (lambda: mod.channel_gains(*args))),
        ("norm_sq", lambda mod, g: (lambda: mod.norm_sq_compensated(g))),
        ("vdot", lambda mod, g: (lambda: mod.vdot_compensated(g, g))),
    ):
        timings = {
            name: _time(make(mod, gains[name]), repeats)
            for name, mod in backends.items()
        }
        rows.append({"n": n, "kernel": kernel, **timings})
    return rows


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="101,301,1001",
                    help="comma-separated square-array side lengths (odd)")
    ap.add_argument("--repeats", type=int, default=7)
    ap.add_argument("--model", default="accurate", choices=sorted(MODEL_CODES))
    args = ap.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    for n in sizes:
        if n < 1 or n % 2 == 0:
            ap.error(f"sizes must be odd and positive, got {n}")

    backends = {"python": get_backend("python")}
    try:
        backends["compiled"] = get_backend("compiled")
    except ImportError:
        print("compiled extension not built; benchmarking python backend only",
              file=sys.stderr)

    print(f"active package backend: {BACKEND}")
    print(f"model: {args.model}   repeats: {args.repeats} (median)\n")
    header = f"{'N':>9}  {'kernel':<14}" + "".join(
        f"{name:>12}" for name in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        for row in bench_size(n, args.model, args.repeats, backends):
            line = f"{n * n:>9}  {row['kernel']:<14}"
            for name in backends:
                line += f"{row[name] * 1e3:>10.3f}ms"
            if len(backends) == 2:
                line += f"{row['python'] / row['compiled']:>9.2f}x"
            print(line)
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
