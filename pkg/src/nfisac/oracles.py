"""Independent reference computations the closed forms are checked against.

Nothing here reuses a corner-function closed form: channel energies come
from compensated element sums, uplink quadratic forms from dense matrix
inverses, the correlation-factor limit from seeded Monte Carlo over random
placements, and high-SNR slopes from finite differences.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .channels import ChannelModel, ChannelVector, build_channel, ccf
from .dl_rates import SystemParams, log2_1p
from .errors import NumericalError
from .geometry import ArrayGeometry, Placement
from .ul_rates import UplinkDesign

_DENSE_LIMIT = 4096

PlacementSampler = Callable[[np.random.Generator], tuple[tuple, tuple]]


def norm_sq_bruteforce(g: ArrayGeometry, p: Placement, model: ChannelModel) -> float:
    """Channel energy as the compensated sum of per-element |gain|^2."""
    return build_channel(g, p, model).norm_sq


def ul_quadratic_form_oracle(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, design: UplinkDesign
) -> float:
    """Deflated uplink rate via an explicit dense matrix inverse.

    Comm-centric: SR = (1/L)log2(1 + p_s*L*a_s*||hs||^2 * hs^H A^{-1} hs)
    with A = I + p_c*hc*hc^H.  Sensing-centric: CR = log2(1 + p_c *
    hc^H R^{-1} hc) with R = I + p_s*a_s*||hs||^2*hs*hs^H.  Feasible only
    for small arrays; refuses above N = 4096.
    """
    n = hc.gains.size
    if n > _DENSE_LIMIT:
        raise ValueError(
            f"dense-inverse oracle limited to N <= {_DENSE_LIMIT}, got N = {n}"
        )
    if design is UplinkDesign.COMM_CENTRIC:
        a = np.eye(n, dtype=np.complex128) + sp.p_c * np.outer(
            hc.gains, np.conj(hc.gains)
        )
        form = float(np.real(np.vdot(hs.gains, np.linalg.solve(a, hs.gains))))
        l = sp.l_frame
        return log2_1p(sp.p_s * l * sp.alpha_s * hs.norm_sq * form) / l
    r = np.eye(n, dtype=np.complex128) + sp.p_s * sp.alpha_s * hs.norm_sq * np.outer(
        hs.gains, np.conj(hs.gains)
    )
    form = float(np.real(np.vdot(hc.gains, np.linalg.solve(r, hc.gains))))
    return log2_1p(sp.p_c * form)


def uniform_placement_sampler(
    r_range: tuple[float, float] = (5.0, 50.0),
    theta_range: tuple[float, float] = (math.pi / 4, 3 * math.pi / 4),
    phi_range: tuple[float, float] = (-math.pi / 3, math.pi / 3),
) -> PlacementSampler:
    """Independent uniform draws of two (r, theta, phi) placements.

    The default ranges keep the broadside direction cosine well away from
    zero, so no rejection occurs.
    """

    def sample(rng: np.random.Generator) -> tuple[tuple, tuple]:
        def one() -> tuple:
            return (
                float(rng.uniform(*r_range)),
                float(rng.uniform(*theta_range)),
                float(rng.uniform(*phi_range)),
            )

        return one(), one()

    return sample


def constant_placement_sampler(pc: tuple, ps: tuple) -> PlacementSampler:
    """Zero-variance sampler: always the same placement pair."""

    def sample(rng: np.random.Generator) -> tuple[tuple, tuple]:
        return tuple(pc), tuple(ps)

    return sample


@dataclass(frozen=True)
class CcfEstimate:
    """Per-rung Monte Carlo means of the channel correlation factor."""

    n_ladder: tuple[int, ...]
    mean_rho: tuple[float, ...]
    sample_count: int
    rng_seed: int
    converged_value: float

    def __post_init__(self) -> None:
        if self.sample_count < 1:
            raise ValueError(f"sample_count must be positive, got {self.sample_count}")
        if len(self.n_ladder) != len(self.mean_rho):
            raise ValueError("ladder and means must have equal length")
        for m in self.mean_rho:
            if not (0.0 <= m <= 1.0):
                raise ValueError(f"mean correlation factor {m} outside [0, 1]")
        if self.converged_value != self.mean_rho[-1]:
            raise ValueError("converged_value must be the largest-rung mean")

    @property
    def plateau_change(self) -> float:
        """Relative change between the last two rung means."""
        if len(self.mean_rho) < 2:
            return math.inf
        prev, last = self.mean_rho[-2], self.mean_rho[-1]
        return abs(last - prev) / max(abs(last), 1e-300)


def default_ccf_ladder(
    d: float, area: float, wavelength: float,
    counts: Sequence[int] = (15, 31, 63, 127, 255, 501),
) -> list[ArrayGeometry]:
    """Square-array geometry ladder sharing one element design."""
    return [
        ArrayGeometry(n_y=n, n_z=n, d=d, area=area, wavelength=wavelength)
        for n in counts
    ]


def _sample_ccf(
    g: ArrayGeometry,
    model: ChannelModel,
    sampler: PlacementSampler,
    seed: int,
    rung_idx: int,
    sample_idx: int,
    cache: dict,
) -> tuple[float, int]:
    """One correlation-factor draw plus the rejection count it took."""
    rng = np.random.default_rng(
        np.random.SeedSequence(seed, spawn_key=(rung_idx, sample_idx))
    )
    rejected = 0
    while True:
        raw_c, raw_s = sampler(rng)
        key = (raw_c, raw_s)
        if key in cache:
            return cache[key], rejected
        try:
            pc = Placement(*raw_c)
            ps = Placement(*raw_s)
        except ValueError:
            rejected += 1
            if rejected >= 1000:
                raise NumericalError(
                    f"placement sampler rejected {rejected} consecutive draws; "
                    "fix the sampler ranges"
                ) from None
            continue
        value = ccf(build_channel(g, pc, model), build_channel(g, ps, model))
        if len(cache) < 4096:
            cache[key] = value
        return value, rejected


def ccf_limit_estimate(
    g_ladder: Sequence[ArrayGeometry],
    sampler: PlacementSampler,
    samples: int,
    seed: int,
    model: ChannelModel,
    threads: int | None = None,
) -> CcfEstimate:
    """Monte Carlo estimate of the large-array correlation-factor limit.

    For each ladder rung, averages the correlation factor over random
    placement pairs; the largest rung (which uses a tenth of the samples
    once above 1000, for runtime) provides the limit estimate.  Every sample
    draws from its own seed-derived stream, and the mean is accumulated in
    sample order, so results do not depend on the thread count.
    """
    if samples < 100:
        raise ValueError(f"need at least 100 samples, got {samples}")
    counts = [g.n_total for g in g_ladder]
    if len(counts) < 1 or any(b <= a for a, b in zip(counts, counts[1:])):
        raise ValueError("geometry ladder must be strictly increasing in element count")

    means: list[float] = []
    for rung_idx, g in enumerate(g_ladder):
        is_last = rung_idx == len(g_ladder) - 1
        n_samples = samples if not (is_last and samples > 1000) else max(1000, samples // 10)
        cache: dict = {}
        if threads == 1:
            drawn = [
                _sample_ccf(g, model, sampler, seed, rung_idx, i, cache)
                for i in range(n_samples)
            ]
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                drawn = list(
                    pool.map(
                        lambda i: _sample_ccf(g, model, sampler, seed, rung_idx, i, cache),
                        range(n_samples),
                    )
                )
        rejected = sum(r for _, r in drawn)
        attempts = rejected + n_samples
        if attempts >= 100 and rejected / attempts > 0.9:
            raise NumericalError(
                f"placement sampler rejection rate {rejected / attempts:.1%} "
                "exceeds 90%; fix the sampler ranges"
            )
        means.append(math.fsum(v for v, _ in drawn) / n_samples)

    return CcfEstimate(
        n_ladder=tuple(counts),
        mean_rho=tuple(means),
        sample_count=samples,
        rng_seed=seed,
        converged_value=means[-1],
    )


def slope_estimate(rate_fn: Callable[[float], float], p_grid: Sequence[float]) -> float:
    """High-SNR slope: least-squares fit of rate against log2(power) over the
    top half of a geometric power grid."""
    if len(p_grid) < 2:
        raise ValueError(f"need at least 2 grid powers, got {len(p_grid)}")
    powers = [float(p) for p in p_grid]
    if any(b <= a for a, b in zip(powers, powers[1:])):
        raise ValueError("power grid must be strictly increasing")
    ratios = [b / a for a, b in zip(powers, powers[1:])]
    if any(abs(r - ratios[0]) > 1e-9 * ratios[0] for r in ratios):
        raise ValueError("power grid must be a geometric progression")
    rates = [rate_fn(p) for p in powers]
    if any(b < a - 1e-12 for a, b in zip(rates, rates[1:])):
        raise NumericalError(
            f"rates are not nondecreasing over the power grid: {rates}"
        )
    half = len(powers) // 2
    xs = np.log2(powers[half:])
    ys = np.array(rates[half:])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)
