"""Rate-profile solver for the downlink boundary.

Solves  max_R,w  R   s.t.  SR(w) >= sigma*R,  CR(w) >= (1-sigma)*R,  ||w|| = 1
for a split parameter sigma in [0, 1].  With a = 2^(sigma*L*R) - 1 and
b = 2^((1-sigma)*R) - 1 the two rate constraints become SINR constraints
p*xi^2*|hs^T w|^2 >= a and p*|hc^T w|^2 >= b, where xi = sqrt(L*alpha_s)*||hs||.

Outside a middle band of sigma one constraint stays slack and the optimum is
an extreme beamformer; inside, both constraints are active and R solves the
scalar equation

    a*||hc||^2 + b*xi^2*||hs||^2 - 2*sqrt(a*b)*xi*|psi|
        = p*xi^2*(||hc||^2*||hs||^2 - |psi|^2),      psi = hc^H hs,

whose left side rises from 0 at R = 0 and is unbounded, so a bracketed Brent
search always finds the root.  The optimal beamformer is a conjugated,
phase-aligned mixture of the two channels whose weights are the Lagrange
multipliers of the SINR constraints.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import _kernels
from .channels import ChannelVector, ccf
from .channels import norm_sq as channel_norm_sq
from .dl_rates import (
    RatePair,
    SystemParams,
    cc_rates,
    comm_beamformer,
    cr_given_w,
    cross_term,
    sc_rates,
    sensing_beamformer,
    sr_given_w,
)
from .errors import DegenerateChannelError, NumericalError

_LN2 = math.log(2.0)
_MAX_BRACKET_GROWTH = 200


class Regime(enum.Enum):
    CC_ENDPOINT = "CcEndpoint"
    INTERIOR = "Interior"
    SC_ENDPOINT = "ScEndpoint"


@dataclass(frozen=True)
class ParetoSolution:
    """Solution of the rate-profile problem at one sigma."""

    sigma: float
    w: np.ndarray = field(repr=False)
    r_star: float
    regime: Regime
    mu1: float | None
    mu2: float | None
    kkt_residual: float
    achieved: RatePair
    xi: float

    def __post_init__(self) -> None:
        nrm = math.sqrt(float(_kernels.norm_sq_compensated(self.w)))
        if abs(nrm - 1.0) > 1e-9:
            raise ValueError(f"solution beamformer is not unit-norm: {nrm!r}")


def sigma_thresholds(
    hc: ChannelVector, hs: ChannelVector, sp: SystemParams, norm_source: str = "element_sum"
) -> tuple[float, float]:
    """(sigma_lo, sigma_hi): the band edges of the three solution regimes.

    Below sigma_lo the comm beamformer already meets the sensing demand
    (sigma_lo = SR_cc / (CR_cc + SR_cc)); above sigma_hi the sensing
    beamformer meets the comm demand (sigma_hi = SR_sc / (CR_sc + SR_sc)).
    """
    cc = cc_rates(hc, hs, sp, norm_source)
    sc = sc_rates(hc, hs, sp, norm_source)
    if cc.cr + cc.sr <= 0.0 or sc.cr + sc.sr <= 0.0:
        raise DegenerateChannelError(
            "all rates are zero (zero power?); the rate-profile problem is trivial"
        )
    return cc.sr / (cc.cr + cc.sr), sc.sr / (sc.cr + sc.sr)


def _proj(h: ChannelVector, w: np.ndarray) -> complex:
    return _kernels.vdot_compensated(np.conj(h.gains), np.ascontiguousarray(w))


def _a_of(r: float, sigma: float, l: int) -> float:
    return math.expm1(sigma * l * r * _LN2)


def _b_of(r: float, sigma: float) -> float:
    return math.expm1((1.0 - sigma) * r * _LN2)


def _rel_gap(achieved: float, required: float) -> float:
    scale = max(abs(required), 1e-300)
    return abs(achieved - required) / scale


def solve_rate_profile(
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
    sigma: float,
    norm_source: str = "element_sum",
) -> ParetoSolution:
    """Optimal (R, w) for one sigma; see the module docstring.

    ``norm_source`` picks the channel-energy family used in the scalar
    equation and multipliers.  The default, element sums, makes the solution
    exactly self-consistent with the achieved rates computed from the gain
    vectors; the corner-function closed form introduces its own (small)
    approximation error into the constraint-activity identities.
    """
    if not 0.0 <= sigma <= 1.0:
        raise ValueError(f"sigma must lie in [0, 1], got {sigma}")
    rho = ccf(hc, hs)
    if rho >= 1.0 - 1e-6:
        raise DegenerateChannelError(
            f"channels nearly collinear (correlation factor {rho}); the "
            "boundary collapses to a single ray and the interior system is "
            "ill-conditioned"
        )
    l = sp.l_frame
    p = sp.p
    lo, hi = sigma_thresholds(hc, hs, sp, norm_source)
    nc, _ = channel_norm_sq(hc, norm_source)
    ns, _ = channel_norm_sq(hs, norm_source)
    xi = math.sqrt(l * sp.alpha_s * ns)

    if sigma <= lo:
        # comm beamformer; sensing demand slack, so R* fills the comm side
        w = comm_beamformer(hc)
        pair = RatePair(sr=sr_given_w(hs, w, sp), cr=cr_given_w(hc, w, p))
        r_star = pair.cr / (1.0 - sigma)
        resid = _rel_gap(p * abs(_proj(hc, w)) ** 2, _b_of(r_star, sigma))
        return ParetoSolution(
            sigma=sigma, w=w, r_star=r_star, regime=Regime.CC_ENDPOINT,
            mu1=None, mu2=None, kkt_residual=resid, achieved=pair, xi=xi,
        )
    if sigma >= hi:
        w = sensing_beamformer(hs)
        pair = RatePair(sr=sr_given_w(hs, w, sp), cr=cr_given_w(hc, w, p))
        r_star = pair.sr / sigma
        xi_act = math.sqrt(l * sp.alpha_s * hs.norm_sq)
        resid = _rel_gap(
            p * xi_act * xi_act * abs(_proj(hs, w)) ** 2, _a_of(r_star, sigma, l)
        )
        return ParetoSolution(
            sigma=sigma, w=w, r_star=r_star, regime=Regime.SC_ENDPOINT,
            mu1=None, mu2=None, kkt_residual=resid, achieved=pair, xi=xi,
        )

    psi = cross_term(hc, hs)
    q = abs(psi)
    rhs = p * xi * xi * (nc * ns - q * q)

    def gap(r: float) -> float:
        a = _a_of(r, sigma, l)
        b = _b_of(r, sigma)
        return a * nc + b * xi * xi * ns - 2.0 * math.sqrt(a * b) * xi * q - rhs

    r_lo = 1e-12
    r_hi = 1.0
    grow = 0
    while gap(r_hi) < 0.0:
        r_hi *= 2.0
        grow += 1
        if grow > _MAX_BRACKET_GROWTH:
            raise NumericalError(
                f"rate-profile bracket did not close after {grow} doublings "
                f"(sigma={sigma}, last R={r_hi}, gap={gap(r_hi)})"
            )
    try:
        r_star = float(brentq(gap, r_lo, r_hi, xtol=1e-12, rtol=8.9e-16, maxiter=200))
    except RuntimeError as exc:
        raise NumericalError(
            f"rate-profile root search failed at sigma={sigma}: {exc}"
        ) from exc

    a = _a_of(r_star, sigma, l)
    b = _b_of(r_star, sigma)
    chi = math.sqrt(a / b)
    n1 = xi * xi * ns - chi * xi * q      # multiplier numerator, comm side
    n2 = nc - (xi * q) / chi              # multiplier numerator, sensing side
    da = math.pow(2.0, sigma * l * r_star) * sigma * l * _LN2
    db = math.pow(2.0, (1.0 - sigma) * r_star) * (1.0 - sigma) * _LN2
    d = n1 * db + n2 * da
    mu1 = n1 / d
    mu2 = n2 / d

    phase = cmath.exp(-1j * cmath.phase(psi)) if psi != 0 else 1.0
    mix = mu1 * math.sqrt(b * p) * hc.gains + mu2 * math.sqrt(a * p) * xi * phase * hs.gains
    nrm = math.sqrt(float(_kernels.norm_sq_compensated(np.ascontiguousarray(mix))))
    if nrm <= 0.0:
        raise NumericalError(f"interior beamformer collapsed to zero at sigma={sigma}")
    w = np.conj(mix) / nrm

    pair = RatePair(sr=sr_given_w(hs, w, sp), cr=cr_given_w(hc, w, p))
    resid = _interior_residual(w, r_star, sigma, mu1, mu2, xi, hc, hs, sp)
    return ParetoSolution(
        sigma=sigma, w=w, r_star=r_star, regime=Regime.INTERIOR,
        mu1=mu1, mu2=mu2, kkt_residual=resid, achieved=pair, xi=xi,
    )


def _interior_residual(
    w: np.ndarray,
    r_star: float,
    sigma: float,
    mu1: float,
    mu2: float,
    xi: float,
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
) -> float:
    p = sp.p
    l = sp.l_frame
    proj_c = _proj(hc, w)
    proj_s = _proj(hs, w)
    grad = mu1 * p * proj_c * np.conj(hc.gains) + mu2 * p * xi * xi * proj_s * np.conj(hs.gains)
    lam = mu1 * p * abs(proj_c) ** 2 + mu2 * p * xi * xi * abs(proj_s) ** 2
    stationarity = float(np.linalg.norm(grad - lam * w)) / max(abs(lam), 1e-300)

    da = math.pow(2.0, sigma * l * r_star) * sigma * l * _LN2
    db = math.pow(2.0, (1.0 - sigma) * r_star) * (1.0 - sigma) * _LN2
    r_identity = abs(mu1 * db + mu2 * da - 1.0)

    act_c = _rel_gap(p * abs(proj_c) ** 2, _b_of(r_star, sigma))
    act_s = _rel_gap(p * xi * xi * abs(proj_s) ** 2, _a_of(r_star, sigma, l))
    return max(stationarity, r_identity, act_c, act_s)


def kkt_residuals(
    sol: ParetoSolution, hc: ChannelVector, hs: ChannelVector, sp: SystemParams
) -> float:
    """Max violation of the first-order optimality system at an interior point.

    Checks, all in relative terms:
      * stationarity: mu1*p*(hc^T w)*conj(hc) + mu2*p*xi^2*(hs^T w)*conj(hs)
        = lambda*w with lambda forced by ||w|| = 1;
      * the R-derivative identity mu1*db/dR + mu2*da/dR = 1;
      * activity of both SINR constraints at R*.
    """
    if sol.regime is not Regime.INTERIOR:
        raise ValueError(
            f"KKT residuals are defined for interior solutions, got {sol.regime.value}"
        )
    assert sol.mu1 is not None and sol.mu2 is not None
    return _interior_residual(
        sol.w, sol.r_star, sol.sigma, sol.mu1, sol.mu2, sol.xi, hc, hs, sp
    )


def sigma_sweep(
    hc: ChannelVector,
    hs: ChannelVector,
    sp: SystemParams,
    grid_size: int = 101,
    norm_source: str = "element_sum",
    spacing: str = "adaptive",
) -> list[ParetoSolution]:
    """Rate-profile solutions over a sigma grid of ``grid_size`` points.

    All sigma values outside the interior band collapse onto one of the two
    corner beamformers, so a uniform grid spends most of its points
    reproducing two fixed corner pairs.  The default "adaptive" spacing puts
    sigma = 0, sigma = 1, and ``grid_size - 2`` evenly spaced points across
    the interior band, resolving the part of the frontier that actually
    moves; "uniform" spaces all points evenly over [0, 1].
    """
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    if spacing == "uniform":
        sigmas = np.linspace(0.0, 1.0, grid_size)
    elif spacing == "adaptive":
        if grid_size < 4:
            sigmas = np.linspace(0.0, 1.0, grid_size)
        else:
            lo, hi = sigma_thresholds(hc, hs, sp, norm_source)
            sigmas = np.concatenate(([0.0], np.linspace(lo, hi, grid_size - 2), [1.0]))
    else:
        raise ValueError(f"spacing must be 'adaptive' or 'uniform', got {spacing!r}")
    return [solve_rate_profile(hc, hs, sp, float(s), norm_source) for s in sigmas]
