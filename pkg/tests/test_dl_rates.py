"""Downlink rates: closed forms, boundary beamformer, baselines, limits."""

import math
from dataclasses import replace

import numpy as np
import pytest

from nfisac import (
    ChannelModel,
    SystemParams,
    asymptotic_limit,
    cc_rates,
    ccf,
    fdsac_rates,
    high_snr_approx,
    sc_rates,
    tau_rate_pair,
)
from nfisac.dl_rates import tau_rate_pair_fraction

from conftest import AOR, make_pair


# --- frozen values at default operating point -------------------------------


def test_frozen_rates_at_defaults(default_pair, sp):
    hc, hs = default_pair
    cc = cc_rates(hc, hs, sp)
    sc = sc_rates(hc, hs, sp)
    fd = fdsac_rates(hc, hs, sp)
    assert cc.cr == pytest.approx(16.865578003686846, rel=1e-13)
    assert cc.sr == pytest.approx(0.46827948204868103, rel=1e-13)
    assert sc.sr == pytest.approx(2.4610068000705034, rel=1e-13)
    assert sc.cr == pytest.approx(8.440447443581697, rel=1e-13)
    assert fd.sr == pytest.approx(1.2305034000352517, rel=1e-13)
    assert fd.cr == pytest.approx(8.432789001843423, rel=1e-13)


def test_design_ordering(default_pair, sp):
    # comm-centric maximizes CR, sensing-centric maximizes SR, and each
    # design beats the frequency-division baseline on its own metric
    hc, hs = default_pair
    cc = cc_rates(hc, hs, sp)
    sc = sc_rates(hc, hs, sp)
    fd = fdsac_rates(hc, hs, sp)
    assert cc.cr > sc.cr > fd.cr
    assert sc.sr > cc.sr
    assert sc.sr > fd.sr


def test_fdsac_is_half_of_dedicated_designs_at_even_split(default_pair, sp):
    # kappa = iota = 1/2 gives exactly half the comm-centric CR and half the
    # sensing-centric SR: same SINR inside the log, half the resources
    hc, hs = default_pair
    fd = fdsac_rates(hc, hs, sp)
    assert fd.cr == pytest.approx(cc_rates(hc, hs, sp).cr / 2.0, rel=1e-14)
    assert fd.sr == pytest.approx(sc_rates(hc, hs, sp).sr / 2.0, rel=1e-14)


def test_fdsac_degenerate_splits(default_pair, sp):
    hc, hs = default_pair
    all_comm = fdsac_rates(hc, hs, replace(sp, kappa=0.0, iota=0.0))
    assert all_comm.sr == 0.0 and all_comm.cr > 0.0
    all_sense = fdsac_rates(hc, hs, replace(sp, kappa=1.0, iota=1.0))
    assert all_sense.cr == 0.0 and all_sense.sr > 0.0


# --- closed-form vs element-sum path ----------------------------------------


def test_norm_source_paths_agree_to_model_accuracy(default_pair, sp):
    hc, hs = default_pair
    for fn in (cc_rates, sc_rates, fdsac_rates):
        auto = fn(hc, hs, sp)
        elem = fn(hc, hs, sp, norm_source="element_sum")
        assert auto.cr == pytest.approx(elem.cr, rel=1e-4)
        assert auto.sr == pytest.approx(elem.sr, rel=1e-4)
        assert auto.norm_source == "closed_form"
        assert elem.norm_source == "element_sum"


def test_rates_monotone_in_power(default_pair):
    hc, hs = default_pair
    prev = None
    for p_db in (60, 75, 90, 105):
        sp_p = SystemParams(p=10.0 ** (p_db / 10.0))
        cur = (
            cc_rates(hc, hs, sp_p).cr,
            cc_rates(hc, hs, sp_p).sr,
            sc_rates(hc, hs, sp_p).sr,
            sc_rates(hc, hs, sp_p).cr,
            fdsac_rates(hc, hs, sp_p).cr,
            fdsac_rates(hc, hs, sp_p).sr,
        )
        if prev is not None:
            assert all(c > p for c, p in zip(cur, prev))
        prev = cur


# --- boundary beamformer -----------------------------------------------------


def test_tau_endpoints_reproduce_design_corners(default_pair, sp):
    hc, hs = default_pair
    cc = cc_rates(hc, hs, sp, norm_source="element_sum")
    sc = sc_rates(hc, hs, sp, norm_source="element_sum")
    at0 = tau_rate_pair(hc, hs, sp, 0.0)
    at1 = tau_rate_pair(hc, hs, sp, 1.0)
    assert at0.sr == pytest.approx(sc.sr, rel=1e-14)
    assert at0.cr == pytest.approx(sc.cr, rel=1e-14)
    assert at1.cr == pytest.approx(cc.cr, rel=1e-14)
    assert at1.sr == pytest.approx(cc.sr, rel=1e-14)


def test_tau_fraction_form_agrees_with_projection_form(default_pair, sp):
    hc, hs = default_pair
    for tau in np.linspace(0.0, 1.0, 21):
        a = tau_rate_pair(hc, hs, sp, float(tau))
        b = tau_rate_pair_fraction(hc, hs, sp, float(tau))
        assert a.cr == pytest.approx(b.cr, abs=1e-10)
        assert a.sr == pytest.approx(b.sr, abs=1e-10)


def test_tau_sweep_trades_monotonically(default_pair, sp):
    hc, hs = default_pair
    taus = np.linspace(0.0, 1.0, 41)
    pairs = [tau_rate_pair(hc, hs, sp, float(t)) for t in taus]
    crs = [q.cr for q in pairs]
    srs = [q.sr for q in pairs]
    assert all(b >= a - 1e-12 for a, b in zip(crs, crs[1:]))  # CR grows with tau
    assert all(b <= a + 1e-12 for a, b in zip(srs, srs[1:]))  # SR falls with tau


def test_tau_validation(default_pair, sp):
    hc, hs = default_pair
    with pytest.raises(ValueError):
        tau_rate_pair(hc, hs, sp, -0.01)
    with pytest.raises(ValueError):
        tau_rate_pair(hc, hs, sp, 1.01)


def test_collinear_pair_collapses_tau_boundary_to_a_point(geom15, sp):
    # perfectly correlated channels leave nothing to trade off: every tau
    # yields the same rate pair (the Pareto solver refuses this case instead)
    from nfisac import ChannelVector, build_channel
    from conftest import CU

    hc = build_channel(geom15, CU, ChannelModel.ACCURATE)
    hs = ChannelVector(
        geometry=hc.geometry, placement=hc.placement, model=hc.model,
        gains=0.5 * hc.gains,
    )
    ref = tau_rate_pair(hc, hs, sp, 0.0)
    for tau in (0.25, 0.5, 1.0):
        got = tau_rate_pair(hc, hs, sp, tau)
        assert got.cr == pytest.approx(ref.cr, rel=1e-12)
        assert got.sr == pytest.approx(ref.sr, rel=1e-12)


# --- high-SNR approximations -------------------------------------------------


def test_high_snr_frozen_values(default_pair, sp):
    hc, hs = default_pair
    assert high_snr_approx("cc_cr", hc, hs, sp) == pytest.approx(
        16.865565921891243, rel=1e-13
    )
    assert high_snr_approx("sc_cr", hc, hs, sp) == pytest.approx(
        8.436288600832857, rel=1e-13
    )
    assert high_snr_approx("sc_sr", hc, hs, sp) == pytest.approx(
        2.46061415200831, rel=1e-13
    )
    assert high_snr_approx("cc_sr", hc, hs, sp) == pytest.approx(
        0.35329482174371374, rel=1e-13
    )


def test_high_snr_approaches_exact_rate(default_pair):
    hc, hs = default_pair
    sp_hi = SystemParams(p=1e13)
    for sel, fn, attr in [
        ("cc_cr", cc_rates, "cr"),
        ("cc_sr", cc_rates, "sr"),
        ("sc_sr", sc_rates, "sr"),
        ("sc_cr", sc_rates, "cr"),
    ]:
        exact = getattr(fn(hc, hs, sp_hi), attr)
        approx = high_snr_approx(sel, hc, hs, sp_hi)
        assert approx == pytest.approx(exact, abs=5e-4), sel


def test_high_snr_rejects_unknown_selector(default_pair, sp):
    hc, hs = default_pair
    with pytest.raises(ValueError):
        high_snr_approx("cr_cc", hc, hs, sp)


# --- saturation limits -------------------------------------------------------


def test_asymptotic_limit_closed_forms(sp):
    zeta = AOR
    l = sp.l_frame
    assert asymptotic_limit("cc_cr", sp, zeta) == pytest.approx(
        math.log2(1.0 + sp.p * zeta / 3.0), rel=1e-15
    )
    assert asymptotic_limit("sc_sr", sp, zeta) == pytest.approx(
        math.log2(1.0 + sp.p * l * sp.alpha_s * zeta**2 / 9.0) / l, rel=1e-15
    )
    assert asymptotic_limit("cc_cr", sp, zeta, polarized=False) == pytest.approx(
        math.log2(1.0 + sp.p * zeta / 2.0), rel=1e-15
    )
    assert asymptotic_limit("sc_sr", sp, zeta, polarized=False) == pytest.approx(
        math.log2(1.0 + sp.p * l * sp.alpha_s * zeta**2 / 4.0) / l, rel=1e-15
    )
    c_rho = 3.5e-6
    assert asymptotic_limit("cc_sr", sp, zeta, c_rho=c_rho) == pytest.approx(
        math.log2(1.0 + c_rho * sp.p * l * sp.alpha_s * zeta**2 / 9.0) / l, rel=1e-15
    )
    assert asymptotic_limit("sc_cr", sp, zeta, c_rho=c_rho) == pytest.approx(
        math.log2(1.0 + c_rho * sp.p * zeta / 3.0), rel=1e-15
    )


def test_asymptotic_limit_requires_estimated_constant(sp):
    # the correlation constant must always be passed in explicitly
    with pytest.raises(ValueError):
        asymptotic_limit("cc_sr", sp, AOR)
    with pytest.raises(ValueError):
        asymptotic_limit("sc_cr", sp, AOR)


def test_rates_stay_below_limits_on_size_ladder(sp):
    zeta = AOR
    cap_cr = asymptotic_limit("cc_cr", sp, zeta)
    cap_sr = asymptotic_limit("sc_sr", sp, zeta)
    prev_cr = prev_sr = 0.0
    for n in (15, 31, 63, 127, 255, 501, 1001):
        hc, hs = make_pair(n)
        cr = cc_rates(hc, hs, sp).cr
        sr = sc_rates(hc, hs, sp).sr
        assert prev_cr < cr < cap_cr + 1e-6
        assert prev_sr < sr < cap_sr + 1e-6
        prev_cr, prev_sr = cr, sr


def test_correlation_factor_enters_cc_sr(default_pair, sp):
    # the comm-centric SR equals the sensing-centric SR degraded by rho
    hc, hs = default_pair
    rho = ccf(hc, hs)
    sc_sinr = 2.0 ** (sp.l_frame * sc_rates(hc, hs, sp).sr) - 1.0
    cc_sinr = 2.0 ** (sp.l_frame * cc_rates(hc, hs, sp).sr) - 1.0
    assert cc_sinr == pytest.approx(rho * sc_sinr, rel=1e-10)
