"""Self-validation battery.

Each check exercises one verifiable claim of the library — closed forms
against brute force, finite-size rates against their large-array limits,
solver optimality conditions, region containment, determinism of emitted
files — and returns a machine-readable result.  ``validate_suite`` runs all
of them and prints one PASS/FAIL line per check.

The checks are deliberately side-effect free except for the determinism
check, which writes CSV files into a scratch directory and compares bytes.
"""

from __future__ import annotations

import math
import shutil
import tempfile
from dataclasses import dataclass, replace
from pathlib import Path
from time import perf_counter

import numpy as np

from .channels import (
    ChannelModel,
    ChannelVector,
    build_channel,
    closed_form_norm_sq,
    norm_sq,
)
from .dl_rates import (
    SystemParams,
    asymptotic_limit,
    cc_rates,
    fdsac_rates,
    sc_rates,
)
from .geometry import ArrayGeometry, Placement
from .oracles import (
    ccf_limit_estimate,
    constant_placement_sampler,
    norm_sq_bruteforce,
    slope_estimate,
    ul_quadratic_form_oracle,
)
from .pareto import Regime, kkt_residuals, sigma_sweep, sigma_thresholds, solve_rate_profile
from .regions import (
    auxiliary_region,
    contains,
    downlink_isac_region,
    fdsac_region,
    frontier_hausdorff,
    sigma_frontier,
    uplink_isac_region,
)
from .ul_rates import (
    UplinkDesign,
    ul_cc_rates,
    ul_cc_sr_lower,
    ul_fdsac_rates,
    ul_sc_cr_lower,
    ul_sc_rates,
)

_D = 0.0625
_LAM = 0.125
_A = _LAM * _LAM / (4.0 * math.pi)
_CU = (10.0, math.pi / 4.0, math.pi / 6.0)
_TARGET = (5.0, math.pi / 4.0, -math.pi / 6.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    results: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)


def _geometry(n: int) -> ArrayGeometry:
    return ArrayGeometry(n_y=n, n_z=n, d=_D, area=_A, wavelength=_LAM)


def _default_pair(n: int, model: ChannelModel) -> tuple[ChannelVector, ChannelVector]:
    g = _geometry(n)
    return (
        build_channel(g, Placement(*_CU), model),
        build_channel(g, Placement(*_TARGET), model),
    )


def _default_sp() -> SystemParams:
    return SystemParams()


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------------------
# 1. closed-form channel energies vs element summation
# ---------------------------------------------------------------------------


def check_closed_form_norms(seed: int = 42, cases: int = 50) -> CheckResult:
    """Randomized closed-form vs brute-force channel energies (eps <= 0.01)."""
    rng = np.random.default_rng(seed)
    t0 = perf_counter()
    worst_near = 0.0
    worst_plane = 0.0
    for _ in range(cases):
        d = float(rng.uniform(0.05, 0.10))
        zeta = float(rng.uniform(0.3, 1.0))
        n_y = 2 * int(rng.integers(2, 21)) + 1
        n_z = 2 * int(rng.integers(2, 21)) + 1
        g = ArrayGeometry(n_y=n_y, n_z=n_z, d=d, area=zeta * d * d, wavelength=2.0 * d)
        r = float(rng.uniform(100.0 * d, 60.0))
        theta = float(rng.uniform(math.pi / 4.0, 3.0 * math.pi / 4.0))
        phi = float(rng.uniform(-math.pi / 3.0, math.pi / 3.0))
        p = Placement(r, theta, phi)
        for model in (ChannelModel.ACCURATE, ChannelModel.NOPOLAR):
            brute = norm_sq_bruteforce(g, p, model)
            rel = _rel(closed_form_norm_sq(g, p, model), brute)
            worst_near = max(worst_near, rel)
        for model in (ChannelModel.UPW, ChannelModel.USW):
            brute = norm_sq_bruteforce(g, p, model)
            rel = _rel(closed_form_norm_sq(g, p, model), brute)
            worst_plane = max(worst_plane, rel)
    elapsed = perf_counter() - t0
    passed = worst_near < 1e-3 and worst_plane < 1e-12 and elapsed < 30.0
    return CheckResult(
        "closed-form norms vs brute force",
        passed,
        f"{cases} cases: near-field worst rel {worst_near:.3e} (<1e-3), "
        f"plane-wave worst rel {worst_plane:.3e} (<1e-12), {elapsed:.1f}s (<30s)",
    )


# ---------------------------------------------------------------------------
# 2. finite-array rates vs large-array limits
# ---------------------------------------------------------------------------

_SATURATION_N = 2001
_CCF_LIMIT_LADDER = (15, 31, 63, 127, 255, 501, 1001, 2001, 4001)


def check_saturation_limits(
    seed: int = 42, threads: int | None = None
) -> CheckResult:
    """Rates at a 2001x2001 array sit within 1% of their large-array limits."""
    sp = _default_sp()
    zeta = _A / (_D * _D)

    ladder = [_geometry(n) for n in _CCF_LIMIT_LADDER]
    est = ccf_limit_estimate(
        ladder,
        constant_placement_sampler(_CU, _TARGET),
        samples=100,
        seed=seed,
        model=ChannelModel.ACCURATE,
        threads=threads,
    )
    c_rho = est.converged_value

    errors: dict[str, float] = {}

    hc, hs = _default_pair(_SATURATION_N, ChannelModel.ACCURATE)
    cc = cc_rates(hc, hs, sp)
    sc = sc_rates(hc, hs, sp)
    errors["cr_cc"] = _rel(cc.cr, asymptotic_limit("cc_cr", sp, zeta))
    errors["sr_sc"] = _rel(sc.sr, asymptotic_limit("sc_sr", sp, zeta))
    errors["sr_cc"] = _rel(cc.sr, asymptotic_limit("cc_sr", sp, zeta, c_rho=c_rho))
    errors["cr_sc"] = _rel(sc.cr, asymptotic_limit("sc_cr", sp, zeta, c_rho=c_rho))
    del hc, hs

    hc, hs = _default_pair(_SATURATION_N, ChannelModel.NOPOLAR)
    errors["cr_cc_nopolar"] = _rel(
        cc_rates(hc, hs, sp).cr, asymptotic_limit("cc_cr", sp, zeta, polarized=False)
    )
    errors["sr_sc_nopolar"] = _rel(
        sc_rates(hc, hs, sp).sr, asymptotic_limit("sc_sr", sp, zeta, polarized=False)
    )
    del hc, hs

    worst = max(errors, key=errors.get)
    passed = errors[worst] < 0.01
    detail = ", ".join(f"{k} {v * 100:.3f}%" for k, v in errors.items())
    return CheckResult(
        f"rate saturation at N={_SATURATION_N}^2 (tol 1%, C_rho={c_rho:.4e})",
        passed,
        detail,
    )


# ---------------------------------------------------------------------------
# 3. plane-wave model diverges past the physical limit
# ---------------------------------------------------------------------------


def check_planewave_divergence() -> CheckResult:
    """UPW comm rate at 1001^2 exceeds the accurate-model limit by >= 3 bits."""
    sp = _default_sp()
    zeta = _A / (_D * _D)
    g = _geometry(1001)
    nc_upw = closed_form_norm_sq(g, Placement(*_CU), ChannelModel.UPW)
    cr_upw = math.log2(1.0 + sp.p * nc_upw)
    cr_limit = asymptotic_limit("cc_cr", sp, zeta)
    excess = cr_upw - cr_limit
    return CheckResult(
        "plane-wave divergence beyond physical limit",
        excess >= 3.0,
        f"UPW CR {cr_upw:.3f} vs accurate limit {cr_limit:.3f}: "
        f"excess {excess:.3f} bits (>= 3)",
    )


# ---------------------------------------------------------------------------
# 4. high-SNR slopes
# ---------------------------------------------------------------------------


def check_high_snr_slopes() -> CheckResult:
    """Least-squares rate slopes over 100-130 dB match the design table."""
    sp = _default_sp()
    hc, hs = _default_pair(15, ChannelModel.ACCURATE)
    p_grid = [10.0 ** (db / 10.0) for db in range(100, 131, 5)]

    battery = [
        ("dl cr_cc", lambda p: cc_rates(hc, hs, replace(sp, p=p)).cr, 1.0, 0.02),
        ("dl cr_sc", lambda p: sc_rates(hc, hs, replace(sp, p=p)).cr, 1.0, 0.02),
        ("dl sr_cc", lambda p: cc_rates(hc, hs, replace(sp, p=p)).sr, 0.25, 0.005),
        ("dl sr_sc", lambda p: sc_rates(hc, hs, replace(sp, p=p)).sr, 0.25, 0.005),
        ("dl cr_fdsac", lambda p: fdsac_rates(hc, hs, replace(sp, p=p)).cr, 0.5, 0.01),
        ("dl sr_fdsac", lambda p: fdsac_rates(hc, hs, replace(sp, p=p)).sr, 0.125, 0.005),
        ("ul cr_cc", lambda q: ul_cc_rates(hc, hs, replace(sp, p_c=q)).cr, 1.0, 0.02),
        ("ul cr_sc", lambda q: ul_sc_rates(hc, hs, replace(sp, p_c=q)).cr, 1.0, 0.02),
        ("ul sr_sc", lambda q: ul_sc_rates(hc, hs, replace(sp, p_s=q)).sr, 0.25, 0.005),
        ("ul sr_cc", lambda q: ul_cc_rates(hc, hs, replace(sp, p_s=q)).sr, 0.25, 0.005),
        ("ul cr_fdsac", lambda q: ul_fdsac_rates(hc, hs, replace(sp, p_c=q)).cr, 0.5, 0.01),
        ("ul sr_fdsac", lambda q: ul_fdsac_rates(hc, hs, replace(sp, p_s=q)).sr, 0.125, 0.005),
    ]
    failures = []
    measured = []
    for name, fn, target, tol in battery:
        slope = slope_estimate(fn, p_grid)
        measured.append(f"{name} {slope:.4f}")
        if abs(slope - target) > tol:
            failures.append(f"{name}: {slope:.4f} vs {target} +/- {tol}")
    return CheckResult(
        "high-SNR slopes (downlink + uplink)",
        not failures,
        "; ".join(failures) if failures else ", ".join(measured),
    )


# ---------------------------------------------------------------------------
# 5. rate-profile solver optimality
# ---------------------------------------------------------------------------


def check_rate_profile_solver() -> CheckResult:
    """Interior solutions satisfy first-order optimality to 1e-6."""
    sp = _default_sp()
    hc, hs = _default_pair(15, ChannelModel.ACCURATE)
    lo, hi = sigma_thresholds(hc, hs, sp)
    sigmas = np.linspace(lo, hi, 23)[1:-1]
    worst_kkt = 0.0
    worst_activity = 0.0
    mu_ok = True
    for sigma in sigmas:
        sol = solve_rate_profile(hc, hs, sp, float(sigma))
        if sol.regime is not Regime.INTERIOR:
            return CheckResult(
                "rate-profile solver optimality",
                False,
                f"sigma={sigma:.6f} inside ({lo:.6f}, {hi:.6f}) "
                f"resolved as {sol.regime.value}",
            )
        worst_kkt = max(worst_kkt, kkt_residuals(sol, hc, hs, sp))
        mu_ok = mu_ok and sol.mu1 >= 0.0 and sol.mu2 >= 0.0
        worst_activity = max(
            worst_activity,
            _rel(sol.achieved.sr, sigma * sol.r_star),
            _rel(sol.achieved.cr, (1.0 - sigma) * sol.r_star),
        )
    passed = worst_kkt < 1e-6 and mu_ok and worst_activity < 1e-6
    return CheckResult(
        "rate-profile solver optimality",
        passed,
        f"21 interior points in ({lo:.5f}, {hi:.5f}): worst KKT {worst_kkt:.2e} "
        f"(<1e-6), multipliers nonnegative: {mu_ok}, "
        f"worst constraint-activity rel {worst_activity:.2e} (<1e-6)",
    )


# ---------------------------------------------------------------------------
# 6. profile-parameterized and mix-parameterized frontiers coincide
# ---------------------------------------------------------------------------


def check_boundary_equivalence() -> CheckResult:
    """sigma-sweep and tau-sweep trace the same frontier (Hausdorff < 1e-3)."""
    sp = _default_sp()
    hc, hs = _default_pair(15, ChannelModel.ACCURATE)
    sols = sigma_sweep(hc, hs, sp, grid_size=101)
    sigma_front = sigma_frontier(sols, label="sigma-sweep")
    tau_front = downlink_isac_region(hc, hs, sp, grid_size=4001)
    dist = frontier_hausdorff(sigma_front, tau_front, normalize=True)
    return CheckResult(
        "frontier equivalence (sigma vs tau sweep)",
        dist < 1e-3,
        f"normalized Hausdorff distance {dist:.3e} (< 1e-3)",
    )


# ---------------------------------------------------------------------------
# 7. region containment
# ---------------------------------------------------------------------------


def check_region_containment(seed: int = 42) -> CheckResult:
    """ISAC regions contain FDSAC regions; the auxiliary chain holds."""
    sp = _default_sp()
    hc, hs = _default_pair(15, ChannelModel.ACCURATE)

    problems = []

    # the true frontier is concave, so a coarse polyline under-covers the
    # region near tangent curves; 1001 tau samples keep the sagitta far
    # below the containment tolerance
    isac = downlink_isac_region(hc, hs, sp, grid_size=1001)
    fd = fdsac_region(hc, hs, sp)
    ok, witness = contains(isac, fd)
    if not ok:
        problems.append(f"downlink FDSAC not inside ISAC (witness {witness})")

    sp_ul = replace(sp, p_s=10.0**8.5, p_c=10.0**6.0)
    ul_outer = uplink_isac_region(hc, hs, sp_ul)
    ul_inner = uplink_isac_region(hc, hs, sp_ul, bound="inner")
    ul_fd = fdsac_region(hc, hs, sp_ul, direction="uplink")
    ok, witness = contains(ul_outer, ul_fd)
    if not ok:
        problems.append(f"uplink FDSAC not inside ISAC (witness {witness})")
    ok, witness = contains(ul_inner, ul_fd)
    if not ok:
        problems.append(f"uplink FDSAC not inside ISAC inner bound (witness {witness})")
    ok, witness = contains(ul_outer, ul_inner)
    if not ok:
        problems.append(f"uplink inner bound escapes exact region (witness {witness})")

    rng = np.random.default_rng(seed)
    chain_checked = 0
    for _ in range(20):
        pc = (
            float(rng.uniform(5.0, 50.0)),
            float(rng.uniform(math.pi / 4.0, 3.0 * math.pi / 4.0)),
            float(rng.uniform(-math.pi / 3.0, math.pi / 3.0)),
        )
        ps = (
            float(rng.uniform(5.0, 50.0)),
            float(rng.uniform(math.pi / 4.0, 3.0 * math.pi / 4.0)),
            float(rng.uniform(-math.pi / 3.0, math.pi / 3.0)),
        )
        g = _geometry(15)
        hcr = build_channel(g, Placement(*pc), ChannelModel.ACCURATE)
        hsr = build_channel(g, Placement(*ps), ChannelModel.ACCURATE)
        fd_r = fdsac_region(hcr, hsr, sp)
        aux_r = auxiliary_region(hcr, hsr, sp)
        isac_r = downlink_isac_region(hcr, hsr, sp, grid_size=1001)
        ok1, w1 = contains(aux_r, fd_r)
        ok2, w2 = contains(isac_r, aux_r)
        if not ok1:
            problems.append(f"chain: FDSAC escapes auxiliary at {pc}/{ps} (witness {w1})")
        if not ok2:
            problems.append(f"chain: auxiliary escapes ISAC at {pc}/{ps} (witness {w2})")
        chain_checked += 1

    return CheckResult(
        "region containment (downlink, uplink, auxiliary chain)",
        not problems,
        "; ".join(problems)
        if problems
        else f"default containments hold; chain verified on {chain_checked} random placements",
    )


# ---------------------------------------------------------------------------
# 8. uplink closed forms vs dense-inverse oracle; bound tightness
# ---------------------------------------------------------------------------


def check_uplink_oracle(seed: int = 42) -> CheckResult:
    """Uplink closed-form rates match dense inverses; bounds tight at rho=1."""
    sp = _default_sp()
    problems = []
    worst_match = 0.0
    for n in (3, 5, 7):
        hc, hs = _default_pair(n, ChannelModel.ACCURATE)
        # the oracle works on raw gains, so the closed forms must take their
        # norms from the same element sums for a machine-precision match
        d_cc = abs(
            ul_cc_rates(hc, hs, sp, norm_source="element_sum").sr
            - ul_quadratic_form_oracle(hc, hs, sp, UplinkDesign.COMM_CENTRIC)
        )
        d_sc = abs(
            ul_sc_rates(hc, hs, sp, norm_source="element_sum").cr
            - ul_quadratic_form_oracle(hc, hs, sp, UplinkDesign.SENSING_CENTRIC)
        )
        worst_match = max(worst_match, d_cc, d_sc)
        if d_cc > 1e-10 or d_sc > 1e-10:
            problems.append(f"N={n * n}: oracle mismatch cc {d_cc:.2e} sc {d_sc:.2e}")

    hc, hs = _default_pair(15, ChannelModel.ACCURATE)
    hs_aligned = ChannelVector(
        geometry=hc.geometry,
        placement=hc.placement,
        model=hc.model,
        gains=0.7 * hc.gains,
    )
    tight_sr = abs(
        ul_cc_sr_lower(hc, hs_aligned, sp, norm_source="element_sum")
        - ul_cc_rates(hc, hs_aligned, sp, norm_source="element_sum").sr
    )
    tight_cr = abs(
        ul_sc_cr_lower(hc, hs_aligned, sp, norm_source="element_sum")
        - ul_sc_rates(hc, hs_aligned, sp, norm_source="element_sum").cr
    )
    if tight_sr > 1e-10 or tight_cr > 1e-10:
        problems.append(
            f"bounds not tight on aligned channels: sr {tight_sr:.2e} cr {tight_cr:.2e}"
        )

    rng = np.random.default_rng(seed)
    for _ in range(10):
        pc = (
            float(rng.uniform(5.0, 50.0)),
            float(rng.uniform(math.pi / 4.0, 3.0 * math.pi / 4.0)),
            float(rng.uniform(-math.pi / 3.0, math.pi / 3.0)),
        )
        ps = (
            float(rng.uniform(5.0, 50.0)),
            float(rng.uniform(math.pi / 4.0, 3.0 * math.pi / 4.0)),
            float(rng.uniform(-math.pi / 3.0, math.pi / 3.0)),
        )
        g = _geometry(15)
        hcr = build_channel(g, Placement(*pc), ChannelModel.ACCURATE)
        hsr = build_channel(g, Placement(*ps), ChannelModel.ACCURATE)
        kw = {"norm_source": "element_sum"}
        if ul_cc_sr_lower(hcr, hsr, sp, **kw) > ul_cc_rates(hcr, hsr, sp, **kw).sr + 1e-12:
            problems.append(f"SR lower bound exceeds exact at {pc}/{ps}")
        if ul_sc_cr_lower(hcr, hsr, sp, **kw) > ul_sc_rates(hcr, hsr, sp, **kw).cr + 1e-12:
            problems.append(f"CR lower bound exceeds exact at {pc}/{ps}")

    return CheckResult(
        "uplink quadratic forms vs dense oracle; bound tightness",
        not problems,
        "; ".join(problems)
        if problems
        else (
            f"oracle match worst {worst_match:.2e} (<1e-10); bounds tight at "
            f"rho=1 to {max(tight_sr, tight_cr):.2e}; never exceeded on 10 random pairs"
        ),
    )


# ---------------------------------------------------------------------------
# 9. energy conservation and polarization ordering
# ---------------------------------------------------------------------------


def check_energy_conservation() -> CheckResult:
    """Channel energies stay below zeta/3 (zeta/2 without polarization loss)."""
    sp = _default_sp()
    zeta = _A / (_D * _D)
    cap_acc = zeta / 3.0
    cap_np = zeta / 2.0
    problems = []
    for n in (15, 31, 63, 127, 255, 501, 1001):
        g = _geometry(n)
        for place in (_CU, _TARGET):
            p = Placement(*place)
            if not closed_form_norm_sq(g, p, ChannelModel.ACCURATE) < cap_acc:
                problems.append(f"accurate energy cap violated at N={n}^2 r={place[0]}")
            if not closed_form_norm_sq(g, p, ChannelModel.NOPOLAR) < cap_np:
                problems.append(f"no-polar energy cap violated at N={n}^2 r={place[0]}")
        hc_a, hs_a = _default_pair(n, ChannelModel.ACCURATE)
        hc_n, hs_n = _default_pair(n, ChannelModel.NOPOLAR)
        pairs = [
            (cc_rates(hc_n, hs_n, sp), cc_rates(hc_a, hs_a, sp), "cc"),
            (sc_rates(hc_n, hs_n, sp), sc_rates(hc_a, hs_a, sp), "sc"),
            (fdsac_rates(hc_n, hs_n, sp), fdsac_rates(hc_a, hs_a, sp), "fdsac"),
        ]
        for np_pair, acc_pair, label in pairs:
            if not (np_pair.sr > acc_pair.sr and np_pair.cr > acc_pair.cr):
                problems.append(f"no-polar {label} rates fail to exceed accurate at N={n}^2")

    g = _geometry(1001)
    for place in (_CU, _TARGET):
        vec = build_channel(g, Placement(*place), ChannelModel.ACCURATE)
        val, _ = norm_sq(vec, source="element_sum")
        if not val < cap_acc:
            problems.append(f"element-sum accurate energy cap violated at 1001^2 r={place[0]}")
        vec = build_channel(g, Placement(*place), ChannelModel.NOPOLAR)
        val, _ = norm_sq(vec, source="element_sum")
        if not val < cap_np:
            problems.append(f"element-sum no-polar energy cap violated at 1001^2 r={place[0]}")

    return CheckResult(
        "energy conservation and polarization ordering",
        not problems,
        "; ".join(problems)
        if problems
        else "caps hold on ladder to 1001^2; no-polar rates exceed accurate pointwise",
    )


# ---------------------------------------------------------------------------
# 10. model gap narrows with distance
# ---------------------------------------------------------------------------


def check_distance_gap() -> CheckResult:
    """UPW-vs-accurate CR gap shrinks from r=5 m to r=100 m (N=301)."""
    sp = _default_sp()
    g = _geometry(301)

    def cr_gap(r: float) -> float:
        p = Placement(2.0 * r, _CU[1], _CU[2])
        cr_acc = math.log2(1.0 + sp.p * closed_form_norm_sq(g, p, ChannelModel.ACCURATE))
        cr_upw = math.log2(1.0 + sp.p * closed_form_norm_sq(g, p, ChannelModel.UPW))
        return cr_upw - cr_acc

    near = cr_gap(5.0)
    far = cr_gap(100.0)
    return CheckResult(
        "model gap narrows with distance",
        far < near,
        f"UPW-vs-accurate CR gap at r=5m: {near:.4f} bits, at r=100m: {far:.4f} bits",
    )


# ---------------------------------------------------------------------------
# 11. deterministic outputs
# ---------------------------------------------------------------------------

_DETERMINISM_RUNS: tuple[tuple[str, dict], ...] = (
    ("dl_snr", {"sweep": {"points": 7, "start": 60.0, "stop": 120.0}}),
    ("dl_n", {"sweep": {"values": [15, 31, 63]}}),
    (
        "dl_r",
        {
            "sweep": {"start": 5.0, "stop": 100.0, "points": 5, "scale": "log"},
            "geometry": {"n_y": 101, "n_z": 101},
        },
    ),
    ("dl_region", {"sweep": {"points": 41}, "sweep2": {"points": 21}}),
    (
        "ul_snr",
        {
            "sweep": {"start": 40.0, "stop": 100.0, "points": 7},
            "sweep2": {"start": 60.0, "stop": 110.0, "points": 6},
        },
    ),
    ("ul_n", {"sweep": {"values": [15, 31, 63]}}),
    ("ul_region", {"sweep": {"points": 21}, "sweep2": {"points": 21}}),
    ("ccf", {"sweep": {"values": [15, 31]}, "ccf_samples": 200}),
)


def check_output_determinism(
    seed: int = 42, threads: int | None = None, out_dir: str | None = None
) -> CheckResult:
    """Identical seeds produce byte-identical CSVs across thread counts."""
    from .experiments import build_config, run_experiment

    base = Path(out_dir) if out_dir else Path(tempfile.mkdtemp(prefix="nfisac-validate-"))
    cleanup = out_dir is None
    problems = []
    compared = 0
    try:
        for label, thread_count in (("a", threads), ("b", 1)):
            for exp, file_cfg in _DETERMINISM_RUNS:
                cfg = build_config(
                    exp,
                    dict(file_cfg),
                    out=str(base / label / exp),
                    seed=seed,
                    threads=thread_count,
                )
                run_experiment(cfg)
        for exp, _ in _DETERMINISM_RUNS:
            dir_a = base / "a" / exp
            dir_b = base / "b" / exp
            for csv_a in sorted(dir_a.glob("*.csv")):
                csv_b = dir_b / csv_a.name
                compared += 1
                if not csv_b.is_file():
                    problems.append(f"{exp}/{csv_a.name} missing in rerun")
                elif csv_a.read_bytes() != csv_b.read_bytes():
                    problems.append(f"{exp}/{csv_a.name} differs between runs")
    finally:
        if cleanup:
            shutil.rmtree(base, ignore_errors=True)
    return CheckResult(
        "deterministic CSV outputs",
        not problems and compared > 0,
        "; ".join(problems)
        if problems
        else f"{compared} CSV files byte-identical across reruns and thread counts",
    )


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------


def validate_suite(
    seed: int = 42,
    threads: int | None = None,
    out_dir: str | None = None,
    print_fn=print,
) -> ValidationReport:
    """Run every check; print one PASS/FAIL line each; return the report."""
    t0 = perf_counter()
    checks = (
        lambda: check_closed_form_norms(seed),
        lambda: check_saturation_limits(seed, threads),
        check_planewave_divergence,
        check_high_snr_slopes,
        check_rate_profile_solver,
        check_boundary_equivalence,
        lambda: check_region_containment(seed),
        lambda: check_uplink_oracle(seed),
        check_energy_conservation,
        check_distance_gap,
        lambda: check_output_determinism(seed, threads, out_dir),
    )
    results = []
    for fn in checks:
        res = fn()
        results.append(res)
        status = "PASS" if res.passed else "FAIL"
        print_fn(f"[{status}] {res.name}: {res.detail}")
    report = ValidationReport(results=tuple(results))
    verdict = "all checks passed" if report.all_passed else "SOME CHECKS FAILED"
    print_fn(f"validate: {verdict} ({len(results)} checks, {perf_counter() - t0:.1f}s)")
    return report
