"""Achievable sensing-rate/communication-rate regions and containment checks.

A region is represented by its sampled Pareto frontier: rate pairs sorted by
nonincreasing SR with CR nondecreasing along the way.  The region itself is
everything dominated by the frontier polyline (time sharing between two
achievable operating points is achievable, so the polyline's segments are
too).

All builders default to element-sum channel energies: regions from different
designs get compared point-for-point, and mixing norm families would inject
the closed form's approximation gap (~1e-5 relative) into containment
margins that are meaningful down to 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import ChannelVector
from .dl_rates import RatePair, SystemParams, fdsac_rates, log2_1p, tau_rate_pair
from .channels import norm_sq as channel_norm_sq
from .ul_rates import (
    time_sharing,
    ul_cc_rates,
    ul_cc_sr_lower,
    ul_fdsac_rates,
    ul_sc_cr_lower,
    ul_sc_rates,
)


@dataclass(frozen=True)
class RegionBoundary:
    """Sampled Pareto frontier of an achievable region."""

    points: tuple[RatePair, ...]
    label: str
    sweep_parameterization: str

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise ValueError(
                f"a region boundary needs at least 2 points, got {len(self.points)}"
            )
        srs = [pt.sr for pt in self.points]
        if any(srs[i + 1] > srs[i] for i in range(len(srs) - 1)):
            raise ValueError("boundary points must be sorted by nonincreasing SR")

    @property
    def sr(self) -> np.ndarray:
        return np.array([pt.sr for pt in self.points])

    @property
    def cr(self) -> np.ndarray:
        return np.array([pt.cr for pt in self.points])

    @property
    def max_sr_point(self) -> RatePair:
        return self.points[0]

    @property
    def max_cr_point(self) -> RatePair:
        return max(self.points, key=lambda pt: pt.cr)


def _pareto_frontier(pairs: list[RatePair], label: str, sweep: str) -> RegionBoundary:
    """Upper-right frontier: sort by SR descending and keep CR record-setters."""
    if len(pairs) < 2:
        raise ValueError(f"need at least 2 swept points, got {len(pairs)}")
    ordered = sorted(pairs, key=lambda pt: (-pt.sr, -pt.cr))
    kept: list[RatePair] = [ordered[0]]
    for pt in ordered[1:]:
        if pt.cr > kept[-1].cr:
            kept.append(pt)
    if len(kept) == 1:
        # degenerate frontier (single nondominated point); keep the max-SR
        # companion so the boundary still has two vertices
        kept = [ordered[0], kept[0]] if ordered[0] != kept[0] else ordered[:2]
        kept.sort(key=lambda pt: -pt.sr)
    return RegionBoundary(points=tuple(kept), label=label, sweep_parameterization=sweep)


def downlink_isac_region(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, grid_size: int = 201
) -> RegionBoundary:
    """Frontier swept by the tau-parametrized boundary beamformer family."""
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    taus = np.linspace(0.0, 1.0, grid_size)
    pairs = [tau_rate_pair(hc, hs, sp, float(t)) for t in taus]
    return _pareto_frontier(pairs, label="dl_isac", sweep="tau")


def fdsac_region(
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
    grid: tuple[int, int] = (101, 101),
    direction: str = "downlink",
    norm_source: str = "element_sum",
) -> RegionBoundary:
    """Frontier of the frequency-division baseline.

    Downlink sweeps the (kappa, iota) bandwidth/power splits on a grid;
    uplink has no power split and sweeps kappa only (grid[0] points).
    """
    nk, ni = grid
    if nk < 2 or (direction == "downlink" and ni < 2):
        raise ValueError(f"grid must be at least 2x2, got {grid}")
    pairs: list[RatePair] = []
    if direction == "downlink":
        for kappa in np.linspace(0.0, 1.0, nk):
            for iota in np.linspace(0.0, 1.0, ni):
                sp_ki = SystemParams(
                    p=sp.p, p_c=sp.p_c, p_s=sp.p_s, l_frame=sp.l_frame,
                    alpha_s=sp.alpha_s, kappa=float(kappa), iota=float(iota),
                )
                pairs.append(fdsac_rates(hc, hs, sp_ki, norm_source))
        return _pareto_frontier(pairs, label="dl_fdsac", sweep="kappa,iota")
    if direction == "uplink":
        for kappa in np.linspace(0.0, 1.0, nk):
            sp_k = SystemParams(
                p=sp.p, p_c=sp.p_c, p_s=sp.p_s, l_frame=sp.l_frame,
                alpha_s=sp.alpha_s, kappa=float(kappa), iota=sp.iota,
            )
            pairs.append(ul_fdsac_rates(hc, hs, sp_k, norm_source))
        return _pareto_frontier(pairs, label="ul_fdsac", sweep="kappa")
    raise ValueError(f"direction must be 'downlink' or 'uplink', got {direction!r}")


def auxiliary_region(
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
    grid_size: int = 101,
    norm_source: str = "element_sum",
) -> RegionBoundary:
    """Downlink power-splitting region: full bandwidth to both functions,
    fraction varsigma of the power to sensing.

        SR = (1/L)log2(1 + varsigma*p*L*a_s*||hs||^4)
        CR = log2(1 + (1-varsigma)*p*||hc||^2)

    Sits between the frequency-division region and the ISAC region.
    """
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    nc, _ = channel_norm_sq(hc, norm_source)
    ns, _ = channel_norm_sq(hs, norm_source)
    l = sp.l_frame
    pairs = [
        RatePair(
            sr=log2_1p(float(v) * sp.p * l * sp.alpha_s * ns * ns) / l,
            cr=log2_1p((1.0 - float(v)) * sp.p * nc),
        )
        for v in np.linspace(0.0, 1.0, grid_size)
    ]
    return _pareto_frontier(pairs, label="dl_auxiliary", sweep="varsigma")


def uplink_isac_region(
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
    grid_size: int = 201,
    bound: str = "exact",
    norm_source: str = "element_sum",
) -> RegionBoundary:
    """Uplink region: the two SIC corner pairs joined by time sharing.

    bound = "exact" uses the true corner pairs; "inner" replaces each
    deflated rate with its worst-case lower bound, giving the corners
    (SR_sc, CR_sc_lower) and (SR_cc_lower, CR_cc) — a region certified
    achievable regardless of the channel correlation.
    """
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    if bound == "exact":
        pairs = [
            time_sharing(hc, hs, sp, float(v), norm_source)
            for v in np.linspace(1.0, 0.0, grid_size)
        ]
        return _pareto_frontier(pairs, label="ul_isac", sweep="varrho")
    if bound == "inner":
        cc = ul_cc_rates(hc, hs, sp, norm_source)
        sc = ul_sc_rates(hc, hs, sp, norm_source)
        hi_sr = RatePair(sr=sc.sr, cr=ul_sc_cr_lower(hc, hs, sp, norm_source))
        hi_cr = RatePair(sr=ul_cc_sr_lower(hc, hs, sp, norm_source), cr=cc.cr)
        ts = np.linspace(0.0, 1.0, grid_size)
        pairs = [
            RatePair(
                sr=(1.0 - float(t)) * hi_sr.sr + float(t) * hi_cr.sr,
                cr=(1.0 - float(t)) * hi_sr.cr + float(t) * hi_cr.cr,
            )
            for t in ts
        ]
        return _pareto_frontier(pairs, label="ul_isac_inner", sweep="varrho")
    raise ValueError(f"bound must be 'exact' or 'inner', got {bound!r}")


def contains(
    outer: RegionBoundary, inner: RegionBoundary, tolerance: float = 1e-9
) -> tuple[bool, RatePair | None]:
    """Is every inner frontier point dominated by the outer region?

    The outer region is the dominated set of its frontier polyline.  A point
    (sr, cr) is inside iff sr <= max outer SR and cr <= the polyline's CR at
    that SR (linearly interpolated; constant at max CR below the smallest
    frontier SR), all up to ``tolerance`` in rate units.  Returns
    (verdict, first violating point or None).
    """
    if tolerance < 0.0:
        raise ValueError(f"tolerance must be nonnegative, got {tolerance}")
    out_sr = outer.sr
    out_cr = outer.cr
    max_sr = float(out_sr[0])
    # np.interp needs ascending x; frontier is sorted by nonincreasing SR
    asc_sr = out_sr[::-1].copy()
    asc_cr = out_cr[::-1].copy()
    for pt in inner.points:
        if pt.sr > max_sr + tolerance:
            return False, pt
        sr_clamped = min(pt.sr, max_sr)
        allowed_cr = float(np.interp(sr_clamped, asc_sr, asc_cr))
        # duplicate SR vertices: np.interp picks one; allow the best of them
        exact = np.nonzero(np.abs(asc_sr - sr_clamped) <= tolerance)[0]
        if exact.size:
            allowed_cr = max(allowed_cr, float(asc_cr[exact].max()))
        if pt.cr > allowed_cr + tolerance:
            return False, pt
    return True, None


def _point_segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    denom = float(ab @ ab)
    t = 0.0 if denom <= 0.0 else min(1.0, max(0.0, float((p - a) @ ab) / denom))
    return float(np.linalg.norm(p - (a + t * ab)))


def _directed_hausdorff(pts: np.ndarray, poly: np.ndarray) -> float:
    worst = 0.0
    for p in pts:
        d = min(
            _point_segment_distance(p, poly[i], poly[i + 1])
            for i in range(len(poly) - 1)
        )
        worst = max(worst, d)
    return worst


def frontier_hausdorff(
    a: RegionBoundary, b: RegionBoundary, normalize: bool = True
) -> float:
    """Symmetric Hausdorff distance between two frontier polylines.

    Vertices of each curve are measured against the other curve's segments.
    With ``normalize`` the SR/CR axes are first scaled by the larger of the
    two curves' maxima, making the result a dimensionless frontier gap.
    """
    pa = np.column_stack([a.sr, a.cr])
    pb = np.column_stack([b.sr, b.cr])
    if normalize:
        sr_max = max(pa[:, 0].max(), pb[:, 0].max())
        cr_max = max(pa[:, 1].max(), pb[:, 1].max())
        if sr_max <= 0.0 or cr_max <= 0.0:
            raise ValueError("cannot normalize a frontier with zero rate maxima")
        scale = np.array([sr_max, cr_max])
        pa = pa / scale
        pb = pb / scale
    return max(_directed_hausdorff(pa, pb), _directed_hausdorff(pb, pa))


def sigma_frontier(solutions, label: str = "dl_isac_sigma") -> RegionBoundary:
    """Frontier from rate-profile solutions (their achieved pairs)."""
    pairs = [sol.achieved for sol in solutions]
    return _pareto_frontier(pairs, label=label, sweep="sigma")
