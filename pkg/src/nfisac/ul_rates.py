"""Uplink rates under the two successive-interference-cancellation orders.

The receiver gets the communication signal (power p_c over hc) and the
sensing echo (power p_s, two-way gain alpha_s*||hs||^2 through hs) at once.
Whichever signal is processed first sees the other as noise; the one
processed after cancellation sees a clean channel.  The comm-centric design
gives communication the clean slot — CR = log2(1 + p_c*||hc||^2) with the
sensing quadratic form deflated by the rank-one data covariance — and the
sensing-centric design mirrors it.  Worst-case (fully correlated, rho = 1)
lower bounds on the deflated rates and their large-array limits come in
closed form.
"""

from __future__ import annotations

import enum
import math

from .channels import ChannelVector, inner_product
from .channels import norm_sq as channel_norm_sq
from .dl_rates import RatePair, SystemParams, log2_1p


class UplinkDesign(enum.Enum):
    COMM_CENTRIC = "CommCentric"
    SENSING_CENTRIC = "SensingCentric"


def _norms(
    hc: ChannelVector, hs: ChannelVector, norm_source: str
) -> tuple[float, float, str]:
    if hc.geometry != hs.geometry or hc.model is not hs.model:
        raise ValueError("channel vectors must share geometry and model")
    nc, path_c = channel_norm_sq(hc, norm_source)
    ns, path_s = channel_norm_sq(hs, norm_source)
    assert path_c == path_s
    return nc, ns, path_c


def ul_cc_rates(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> RatePair:
    """Comm-centric order: data decoded interference-free, echo deflated.

    CR = log2(1 + p_c*||hc||^2)
    SR = (1/L)log2(1 + p_s*L*a_s*||hs||^2*(||hs||^2 - p_c|hs^H hc|^2/(1 + p_c||hc||^2)))

    The deflation term is hs^H (I + p_c hc hc^H)^{-1} hs by the rank-one
    inverse identity; the dense-inverse oracle checks exactly that.
    """
    nc, ns, path = _norms(hc, hs, norm_source)
    cross_sq = abs(inner_product(hs, hc)) ** 2
    deflated = ns - sp.p_c * cross_sq / (1.0 + sp.p_c * nc)
    l = sp.l_frame
    return RatePair(
        sr=log2_1p(sp.p_s * l * sp.alpha_s * ns * deflated) / l,
        cr=log2_1p(sp.p_c * nc),
        norm_source=path,
    )


def ul_sc_rates(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> RatePair:
    """Sensing-centric order: echo processed interference-free, data deflated.

    SR = (1/L)log2(1 + p_s*L*a_s*||hs||^4)
    CR = log2(1 + p_c*(||hc||^2 - p_s*a_s*||hs||^2*|hc^H hs|^2/(1 + p_s*a_s*||hs||^4)))
    """
    nc, ns, path = _norms(hc, hs, norm_source)
    cross_sq = abs(inner_product(hc, hs)) ** 2
    g = sp.p_s * sp.alpha_s * ns
    deflated = nc - g * cross_sq / (1.0 + g * ns)
    l = sp.l_frame
    return RatePair(
        sr=log2_1p(sp.p_s * l * sp.alpha_s * ns * ns) / l,
        cr=log2_1p(sp.p_c * deflated),
        norm_source=path,
    )


def ul_cc_sr_lower(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> float:
    """Worst-case (rho = 1) comm-centric SR:
    (1/L)log2(1 + p_s*L*a_s*||hs||^4/(1 + p_c*||hc||^2))."""
    nc, ns, _ = _norms(hc, hs, norm_source)
    l = sp.l_frame
    return log2_1p(sp.p_s * l * sp.alpha_s * ns * ns / (1.0 + sp.p_c * nc)) / l


def ul_sc_cr_lower(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> float:
    """Worst-case (rho = 1) sensing-centric CR:
    log2(1 + p_c*||hc||^2/(1 + p_s*a_s*||hs||^4))."""
    nc, ns, _ = _norms(hc, hs, norm_source)
    return log2_1p(sp.p_c * nc / (1.0 + sp.p_s * sp.alpha_s * ns * ns))


def ul_asymptotic_limit(
    selector: str, sp: SystemParams, aor: float, polarized: bool = True
) -> float:
    """Large-array limits of the worst-case uplink bounds.

    Channel energies saturate at zeta/3 (polarized) or zeta/2 (unpolarized):

        cc_sr_lower -> (1/L)log2(1 + p_s*L*a_s*zeta^2/(9 + 3*p_c*zeta))
                       [denominator 4 + 2*p_c*zeta unpolarized]
        sc_cr_lower -> log2(1 + 3*p_c*zeta/(9 + p_s*a_s*zeta^2))
                       [2*p_c*zeta/(4 + ...) unpolarized]
    """
    if not (0.0 < aor <= 1.0):
        raise ValueError(f"array occupation ratio must lie in (0, 1], got {aor}")
    energy = aor / 3.0 if polarized else aor / 2.0
    l = sp.l_frame
    if selector == "cc_sr_lower":
        x = sp.p_s * l * sp.alpha_s * energy * energy / (1.0 + sp.p_c * energy)
        return log2_1p(x) / l
    if selector == "sc_cr_lower":
        return log2_1p(sp.p_c * energy / (1.0 + sp.p_s * sp.alpha_s * energy * energy))
    raise ValueError(
        f"unknown uplink limit selector {selector!r}; "
        "expected 'cc_sr_lower' or 'sc_cr_lower'"
    )


def time_sharing(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, varrho: float,
    norm_source: str = "auto",
) -> RatePair:
    """Convex combination of the two SIC orders: fraction varrho of the time
    sensing-centric, the rest comm-centric."""
    if not 0.0 <= varrho <= 1.0:
        raise ValueError(f"varrho must lie in [0, 1], got {varrho}")
    cc = ul_cc_rates(hc, hs, sp, norm_source)
    sc = ul_sc_rates(hc, hs, sp, norm_source)
    return RatePair(
        sr=varrho * sc.sr + (1.0 - varrho) * cc.sr,
        cr=varrho * sc.cr + (1.0 - varrho) * cc.cr,
        norm_source=cc.norm_source,
    )


def ul_fdsac_rates(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> RatePair:
    """Uplink frequency-division baseline, bandwidth split kappa.

    SR = (kappa/L)log2(1 + p_s*L*a_s*||hs||^4/kappa)
    CR = (1-kappa)log2(1 + p_c*||hc||^2/(1-kappa))
    kappa in {0, 1} handled as vanishing-bandwidth limits (rate 0).
    """
    nc, ns, path = _norms(hc, hs, norm_source)
    k, l = sp.kappa, sp.l_frame
    sr = 0.0 if k == 0.0 else (k / l) * log2_1p(sp.p_s * l * sp.alpha_s * ns * ns / k)
    cr = 0.0 if k == 1.0 else (1.0 - k) * log2_1p(sp.p_c * nc / (1.0 - k))
    return RatePair(sr=sr, cr=cr, norm_source=path)
