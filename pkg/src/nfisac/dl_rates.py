"""Downlink sensing and communication rates for a dual-function transmitter.

One unit-norm beamformer w serves both functions.  With unit noise power the
communication rate is CR = log2(1 + p*|hc^T w|^2) and the sensing rate, for a
frame of L symbols against a target of strength alpha_s, is
SR = (1/L)*log2(1 + p*L*alpha_s*||hs||^2*|hs^T w|^2).

The two extreme designs have closed forms in the channel energies and the
correlation factor rho = |hc^H hs|^2 / (||hc||^2 ||hs||^2):

    comm-centric    w = hc*/||hc||:  CR = log2(1 + p||hc||^2)
                                     SR = (1/L)log2(1 + pLa_s rho ||hs||^4)
    sensing-centric w = hs*/||hs||:  SR = (1/L)log2(1 + pLa_s ||hs||^4)
                                     CR = log2(1 + p rho ||hc||^2)

Beamformers carry a conjugate because the rates are defined through h^T w:
only w proportional to conj(h) maximizes |h^T w|.

``norm_source`` selects how channel energies enter the closed forms:
"auto" prefers the corner-function closed form (models that have one),
"closed_form" requires it, "element_sum" uses the compensated element sum.
The correlation factor always comes from the explicit gain vectors.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .channels import ChannelModel, ChannelVector, ccf, inner_product
from .channels import norm_sq as channel_norm_sq
from .errors import ConfigError, DegenerateChannelError

_LN2 = math.log(2.0)


def log2_1p(x: float) -> float:
    """log2(1 + x) accurate for small x."""
    if x < 0.0:
        raise ValueError(f"rate argument must be nonnegative, got {x}")
    return math.log1p(x) / _LN2


@dataclass(frozen=True)
class SystemParams:
    """Link-level parameters shared by all rate formulas.

    Powers are linear (relative to unit noise).  ``p`` is the downlink
    transmit power, ``p_c``/``p_s`` the uplink communication/sensing powers,
    ``l_frame`` the sensing frame length L, ``alpha_s`` the target strength,
    and ``kappa``/``iota`` the frequency-division bandwidth/power splits.
    """

    p: float = 1e9
    p_c: float = 1e6
    p_s: float = 10**8.5
    l_frame: int = 4
    alpha_s: float = 1.0
    kappa: float = 0.5
    iota: float = 0.5

    def __post_init__(self) -> None:
        for name in ("p", "p_c", "p_s"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ConfigError(f"{name} must be a finite nonnegative power, got {v}")
        if not (isinstance(self.l_frame, int) and self.l_frame >= 1):
            raise ConfigError(f"l_frame must be a positive integer, got {self.l_frame!r}")
        if not (math.isfinite(self.alpha_s) and self.alpha_s > 0.0):
            raise ConfigError(f"alpha_s must be positive, got {self.alpha_s}")
        for name in ("kappa", "iota"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ConfigError(f"{name} must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class RatePair:
    """A sensing-rate/communication-rate point, in bits/s/Hz."""

    sr: float
    cr: float
    norm_source: str = field(default="element_sum", compare=False)

    def __post_init__(self) -> None:
        for name in ("sr", "cr"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"{name} must be finite and nonnegative, got {v}")


def _resolved_norms(
    hc: ChannelVector, hs: ChannelVector, norm_source: str
) -> tuple[float, float, str]:
    if hc.geometry != hs.geometry or hc.model is not hs.model:
        raise ValueError("channel vectors must share geometry and model")
    nc, path_c = channel_norm_sq(hc, norm_source)
    ns, path_s = channel_norm_sq(hs, norm_source)
    assert path_c == path_s
    return nc, ns, path_c


def _check_unit(w: np.ndarray) -> None:
    nrm = math.sqrt(float(_kernels.norm_sq_compensated(np.ascontiguousarray(w))))
    if abs(nrm - 1.0) > 1e-9:
        raise ValueError(f"beamformer must be unit-norm, got ||w|| = {nrm!r}")


def comm_beamformer(hc: ChannelVector) -> np.ndarray:
    """w = conj(hc)/||hc||, the communication-rate maximizer."""
    return np.conj(hc.gains) / math.sqrt(hc.norm_sq)


def sensing_beamformer(hs: ChannelVector) -> np.ndarray:
    """w = conj(hs)/||hs||, the sensing-rate maximizer."""
    return np.conj(hs.gains) / math.sqrt(hs.norm_sq)


def cr_given_w(hc: ChannelVector, w: np.ndarray, p: float) -> float:
    """CR = log2(1 + p*|hc^T w|^2) for an arbitrary unit beamformer."""
    _check_unit(w)
    proj = _kernels.vdot_compensated(np.conj(hc.gains), np.ascontiguousarray(w))
    return log2_1p(p * abs(proj) ** 2)


def sr_given_w(hs: ChannelVector, w: np.ndarray, sp: SystemParams) -> float:
    """SR = (1/L)*log2(1 + p*L*alpha_s*||hs||^2*|hs^T w|^2)."""
    _check_unit(w)
    proj = _kernels.vdot_compensated(np.conj(hs.gains), np.ascontiguousarray(w))
    l = sp.l_frame
    return log2_1p(sp.p * l * sp.alpha_s * hs.norm_sq * abs(proj) ** 2) / l


def cc_rates(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> RatePair:
    """Rates of the comm-centric design (beamformer matched to hc)."""
    nc, ns, path = _resolved_norms(hc, hs, norm_source)
    rho = ccf(hc, hs)
    l = sp.l_frame
    return RatePair(
        sr=log2_1p(sp.p * l * sp.alpha_s * rho * ns * ns) / l,
        cr=log2_1p(sp.p * nc),
        norm_source=path,
    )


def sc_rates(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> RatePair:
    """Rates of the sensing-centric design (beamformer matched to hs)."""
    nc, ns, path = _resolved_norms(hc, hs, norm_source)
    rho = ccf(hc, hs)
    l = sp.l_frame
    return RatePair(
        sr=log2_1p(sp.p * l * sp.alpha_s * ns * ns) / l,
        cr=log2_1p(sp.p * rho * nc),
        norm_source=path,
    )


def fdsac_rates(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "auto"
) -> RatePair:
    """Frequency-division baseline: bandwidth split kappa, power split iota.

    SR = (kappa/L)*log2(1 + (iota/kappa)*p*L*alpha_s*||hs||^4)
    CR = (1-kappa)*log2(1 + ((1-iota)/(1-kappa))*p*||hc||^2)
    kappa in {0, 1} is handled as the vanishing-bandwidth limit (rate 0).
    """
    nc, ns, path = _resolved_norms(hc, hs, norm_source)
    k, i, l = sp.kappa, sp.iota, sp.l_frame
    sr = 0.0 if k == 0.0 else (k / l) * log2_1p((i / k) * sp.p * l * sp.alpha_s * ns * ns)
    cr = 0.0 if k == 1.0 else (1.0 - k) * log2_1p(((1.0 - i) / (1.0 - k)) * sp.p * nc)
    return RatePair(sr=sr, cr=cr, norm_source=path)


_SELECTORS = ("cc_cr", "cc_sr", "sc_sr", "sc_cr")


def _check_selector(selector: str) -> str:
    s = selector.strip().lower()
    if s not in _SELECTORS:
        raise ValueError(f"unknown rate selector {selector!r}; expected one of {_SELECTORS}")
    return s


def high_snr_approx(
    selector: str,
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
    norm_source: str = "auto",
) -> float:
    """Large-p expansion slope*log2(p) + offset of the selected rate.

    Obtained from the closed forms by dropping the "+1": e.g. the
    comm-centric CR approximation is log2(p*||hc||^2).  A zero correlation
    factor makes the sensing-centric CR offset -inf; that value is returned
    with a warning rather than raised.
    """
    s = _check_selector(selector)
    nc, ns, _ = _resolved_norms(hc, hs, norm_source)
    rho = ccf(hc, hs)
    l = sp.l_frame
    if s == "cc_cr":
        return math.log2(sp.p * nc)
    if s == "sc_sr":
        return math.log2(sp.p * l * sp.alpha_s * ns * ns) / l
    if s == "cc_sr":
        if rho == 0.0:
            warnings.warn(
                "zero channel correlation: comm-centric SR offset is -inf",
                RuntimeWarning,
                stacklevel=2,
            )
            return -math.inf
        return math.log2(sp.p * l * sp.alpha_s * rho * ns * ns) / l
    if rho == 0.0:
        warnings.warn(
            "zero channel correlation: sensing-centric CR offset is -inf",
            RuntimeWarning,
            stacklevel=2,
        )
        return -math.inf
    return math.log2(sp.p * rho * nc)


def asymptotic_limit(
    selector: str,
    sp: SystemParams,
    aor: float,
    polarized: bool = True,
    c_rho: float | None = None,
) -> float:
    """Saturation rate as the element count grows without bound.

    The channel energy saturates at aor/3 (polarization retained) or aor/2
    (polarization dropped), which caps every rate.  The correlation factor
    converges to a geometry-distribution constant that must be supplied as
    ``c_rho`` (estimated, never hardcoded) for the two rates that need it:
    comm-centric SR and sensing-centric CR.

        cc_cr: log2(1 + p*zeta/3)                 [zeta/2 unpolarized]
        cc_sr: (1/L)log2(1 + c_rho*p*L*a_s*zeta^2/9)   [.../4]
        sc_sr: (1/L)log2(1 + p*L*a_s*zeta^2/9)         [.../4]
        sc_cr: log2(1 + c_rho*p*zeta/3)           [zeta/2 unpolarized]
    """
    s = _check_selector(selector)
    if not (0.0 < aor <= 1.0):
        raise ValueError(f"array occupation ratio must lie in (0, 1], got {aor}")
    energy = aor / 3.0 if polarized else aor / 2.0
    l = sp.l_frame
    if s == "cc_cr":
        return log2_1p(sp.p * energy)
    if s == "sc_sr":
        return log2_1p(sp.p * l * sp.alpha_s * energy * energy) / l
    if c_rho is None:
        raise ConfigError(
            f"selector {s!r} needs the correlation-factor limit c_rho "
            "(estimate it with oracles.ccf_limit_estimate)"
        )
    if not (0.0 <= c_rho <= 1.0):
        raise ValueError(f"c_rho must lie in [0, 1], got {c_rho}")
    if s == "cc_sr":
        return log2_1p(c_rho * sp.p * l * sp.alpha_s * energy * energy) / l
    return log2_1p(c_rho * sp.p * energy)


def cross_term(hc: ChannelVector, hs: ChannelVector) -> complex:
    """psi = hc^H hs, the complex cross term behind the correlation factor."""
    return inner_product(hc, hs)


def tau_beamformer(hc: ChannelVector, hs: ChannelVector, tau: float) -> np.ndarray:
    """Pareto-boundary beamformer family, tau in [0, 1].

    w_tau = conj(tau*hc + (1-tau)*hs*e^{-j*angle(psi)}) / norm, psi = hc^H hs.
    tau = 1 gives the comm beamformer, tau = 0 the sensing beamformer.  The
    phase alignment makes both projections real-positive, so the mixture
    norm can only vanish if both scaled channels do.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    psi = cross_term(hc, hs)
    phase = cmath.exp(-1j * cmath.phase(psi)) if psi != 0 else 1.0
    mix = tau * hc.gains + (1.0 - tau) * phase * hs.gains
    nrm_sq = float(_kernels.norm_sq_compensated(np.ascontiguousarray(mix)))
    if nrm_sq <= 0.0:
        raise DegenerateChannelError(
            f"degenerate beamformer mixture at tau = {tau}: zero norm"
        )
    return np.conj(mix) / math.sqrt(nrm_sq)


def tau_rate_pair(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, tau: float
) -> RatePair:
    """Rates achieved by the tau-parametrized boundary beamformer.

    Evaluated through the generic-beamformer path, so tau = 0 reproduces the
    sensing-centric pair and tau = 1 the comm-centric pair exactly (with
    element-sum norms).
    """
    w = tau_beamformer(hc, hs, tau)
    return RatePair(
        sr=sr_given_w(hs, w, sp), cr=cr_given_w(hc, w, sp.p), norm_source="element_sum"
    )


def tau_rate_pair_fraction(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, tau: float
) -> RatePair:
    """Explicit fraction form of the boundary rates; cross-check path.

    Writes the projections through norms and the correlation factor,
    sqrt(rho)*||hc||*||hs|| = |psi|:

        |hc^T w|^2 = (tau*||hc||^2 + (1-tau)*|psi|)^2 / m
        |hs^T w|^2 = (tau*|psi| + (1-tau)*||hs||^2)^2 / m
        m = tau^2*||hc||^2 + (1-tau)^2*||hs||^2 + 2*tau*(1-tau)*|psi|

    Must agree with tau_rate_pair to ~1e-10; an independent algebraic route
    to the same point.
    """
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    nc = hc.norm_sq
    ns = hs.norm_sq
    q = math.sqrt(ccf(hc, hs) * nc * ns)
    m = tau * tau * nc + (1.0 - tau) ** 2 * ns + 2.0 * tau * (1.0 - tau) * q
    if m <= 0.0:
        raise DegenerateChannelError(
            f"degenerate beamformer mixture at tau = {tau}: zero norm"
        )
    proj_c_sq = (tau * nc + (1.0 - tau) * q) ** 2 / m
    proj_s_sq = (tau * q + (1.0 - tau) * ns) ** 2 / m
    l = sp.l_frame
    return RatePair(
        sr=log2_1p(sp.p * l * sp.alpha_s * ns * proj_s_sq) / l,
        cr=log2_1p(sp.p * proj_c_sq),
        norm_source="element_sum",
    )
