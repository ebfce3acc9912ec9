"""Rate-profile beamforming solver: optimality, regimes, thresholds."""

import math

import numpy as np
import pytest

from nfisac import (
    ChannelModel,
    ChannelVector,
    DegenerateChannelError,
    Regime,
    build_channel,
    kkt_residuals,
    sigma_sweep,
    sigma_thresholds,
    solve_rate_profile,
)
from nfisac.pareto import cr_given_w, sr_given_w

from conftest import CU, make_geometry


FROZEN_SIGMA_LO = 0.027015
FROZEN_SIGMA_HI = 0.225750


def test_threshold_frozen_values(default_pair, sp):
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    assert lo == pytest.approx(FROZEN_SIGMA_LO, abs=5e-7)
    assert hi == pytest.approx(FROZEN_SIGMA_HI, abs=5e-7)
    assert 0.0 < lo < hi < 1.0


def test_regimes_partition_sigma_axis(default_pair, sp):
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    eps = 1e-4
    assert solve_rate_profile(hc, hs, sp, lo - eps).regime is Regime.CC_ENDPOINT
    assert solve_rate_profile(hc, hs, sp, lo + eps).regime is Regime.INTERIOR
    assert solve_rate_profile(hc, hs, sp, hi - eps).regime is Regime.INTERIOR
    assert solve_rate_profile(hc, hs, sp, hi + eps).regime is Regime.SC_ENDPOINT
    assert solve_rate_profile(hc, hs, sp, 0.5).regime is Regime.SC_ENDPOINT


def test_interior_solutions_satisfy_first_order_conditions(default_pair, sp):
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    for sigma in np.linspace(lo, hi, 17)[1:-1]:
        sol = solve_rate_profile(hc, hs, sp, float(sigma))
        assert sol.regime is Regime.INTERIOR
        assert sol.mu1 >= 0.0 and sol.mu2 >= 0.0
        assert kkt_residuals(sol, hc, hs, sp) < 1e-6
        # both rate constraints are active at the optimum
        assert sol.achieved.sr == pytest.approx(sigma * sol.r_star, rel=1e-9)
        assert sol.achieved.cr == pytest.approx((1.0 - sigma) * sol.r_star, rel=1e-9)


def test_achieved_rates_come_from_the_returned_beamformer(default_pair, sp):
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    sol = solve_rate_profile(hc, hs, sp, 0.5 * (lo + hi))
    assert np.linalg.norm(sol.w) == pytest.approx(1.0, rel=1e-12)
    assert cr_given_w(hc, sol.w, sp.p) == pytest.approx(sol.achieved.cr, rel=1e-12)
    assert sr_given_w(hs, sol.w, sp) == pytest.approx(sol.achieved.sr, rel=1e-12)


def test_perturbing_the_beamformer_breaks_optimality(default_pair, sp):
    # the KKT residual is a genuine discriminator: nudging the solution off
    # its stationary point must grow it by orders of magnitude
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    sol = solve_rate_profile(hc, hs, sp, 0.5 * (lo + hi))
    base = kkt_residuals(sol, hc, hs, sp)
    rng = np.random.default_rng(31)
    noise = rng.standard_normal(sol.w.size) + 1j * rng.standard_normal(sol.w.size)
    w_bad = sol.w + 1e-4 * noise / np.linalg.norm(noise)
    w_bad /= np.linalg.norm(w_bad)
    import dataclasses

    perturbed = dataclasses.replace(
        sol,
        w=w_bad,
        achieved=dataclasses.replace(
            sol.achieved,
            sr=sr_given_w(hs, w_bad, sp),
            cr=cr_given_w(hc, w_bad, sp.p),
        ),
    )
    assert kkt_residuals(perturbed, hc, hs, sp) > max(1e3 * base, 1e-8)


def test_kkt_residuals_rejects_endpoint_solutions(default_pair, sp):
    hc, hs = default_pair
    sol = solve_rate_profile(hc, hs, sp, 0.999)
    assert sol.regime is not Regime.INTERIOR
    with pytest.raises(ValueError):
        kkt_residuals(sol, hc, hs, sp)


def test_endpoint_solutions_sit_on_the_corners(default_pair, sp):
    from nfisac import cc_rates, sc_rates

    hc, hs = default_pair
    cc = cc_rates(hc, hs, sp, norm_source="element_sum")
    sc = sc_rates(hc, hs, sp, norm_source="element_sum")
    low = solve_rate_profile(hc, hs, sp, 0.005)
    assert low.achieved.cr == pytest.approx(cc.cr, rel=1e-12)
    assert low.achieved.sr == pytest.approx(cc.sr, rel=1e-12)
    high = solve_rate_profile(hc, hs, sp, 0.9)
    assert high.achieved.sr == pytest.approx(sc.sr, rel=1e-12)
    assert high.achieved.cr == pytest.approx(sc.cr, rel=1e-12)


def test_sigma_validation(default_pair, sp):
    hc, hs = default_pair
    with pytest.raises(ValueError):
        solve_rate_profile(hc, hs, sp, -0.1)
    with pytest.raises(ValueError):
        solve_rate_profile(hc, hs, sp, 1.1)


def test_profile_weight_consistency(default_pair, sp):
    # xi stores sqrt(L*alpha_s)*||hs||; the solver's SINR bookkeeping relies
    # on it matching the norm source in use
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    sol = solve_rate_profile(hc, hs, sp, 0.5 * (lo + hi))
    assert sol.xi == pytest.approx(
        math.sqrt(sp.l_frame * sp.alpha_s * hs.norm_sq), rel=1e-12
    )
    sol_cf = solve_rate_profile(hc, hs, sp, 0.5 * (lo + hi), norm_source="closed_form")
    from nfisac import closed_form_norm_sq

    ns_cf = closed_form_norm_sq(hs.geometry, hs.placement, hs.model)
    assert sol_cf.xi == pytest.approx(math.sqrt(sp.l_frame * sp.alpha_s * ns_cf), rel=1e-12)


def test_degenerate_correlation_is_refused(geom15, sp):
    hc = build_channel(geom15, CU, ChannelModel.ACCURATE)
    hs = ChannelVector(
        geometry=hc.geometry, placement=hc.placement, model=hc.model,
        gains=(0.3 + 0.1j) * hc.gains,
    )
    for sigma in (0.1, 0.5):
        with pytest.raises(DegenerateChannelError):
            solve_rate_profile(hc, hs, sp, sigma)


def test_sigma_sweep_spans_both_corners_and_is_deterministic(default_pair, sp):
    hc, hs = default_pair
    sols = sigma_sweep(hc, hs, sp, grid_size=31)
    assert len(sols) == 31
    assert sols[0].sigma == 0.0 and sols[-1].sigma == 1.0
    regimes = {s.regime for s in sols}
    assert regimes == {Regime.CC_ENDPOINT, Regime.INTERIOR, Regime.SC_ENDPOINT}
    again = sigma_sweep(hc, hs, sp, grid_size=31)
    for a, b in zip(sols, again):
        assert a.sigma == b.sigma
        assert a.achieved.sr == b.achieved.sr
        assert a.achieved.cr == b.achieved.cr


def test_sigma_sweep_uniform_spacing_mode(default_pair, sp):
    hc, hs = default_pair
    sols = sigma_sweep(hc, hs, sp, grid_size=21, spacing="uniform")
    sigmas = [s.sigma for s in sols]
    np.testing.assert_allclose(sigmas, np.linspace(0.0, 1.0, 21), atol=1e-15)
    with pytest.raises(ValueError):
        sigma_sweep(hc, hs, sp, grid_size=21, spacing="log")


def test_interior_rate_dominates_linear_time_sharing(default_pair, sp):
    # the Pareto boundary is strictly outside the chord between the corners
    hc, hs = default_pair
    lo, hi = sigma_thresholds(hc, hs, sp)
    sol = solve_rate_profile(hc, hs, sp, 0.5 * (lo + hi))
    from nfisac import cc_rates, sc_rates

    cc = cc_rates(hc, hs, sp, norm_source="element_sum")
    sc = sc_rates(hc, hs, sp, norm_source="element_sum")
    # chord CR value at the solution's SR
    t = (sol.achieved.sr - cc.sr) / (sc.sr - cc.sr)
    chord_cr = (1.0 - t) * cc.cr + t * sc.cr
    assert sol.achieved.cr > chord_cr + 1e-9
