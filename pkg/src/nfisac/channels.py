"""Channel models and closed-form channel energies.

Five per-element gain models for a point source facing a uniform planar
array.  All share the spherical phase exp(-j*2*pi*r_e/lambda) on the exact
element distance r_e except the planar-wavefront model, which linearizes the
phase around the array center:

    accurate  amplitude^2 = area * u * (u^2 + dz^2) / (4*pi*r_e^5),
              u = r*psi, dz = m_z*d - r*omega  (free-space, effective
              aperture, and polarization losses all retained)
    nopolar   amplitude^2 = area * u / (4*pi*r_e^3)   (polarization dropped)
    upw       amplitude^2 = area / (4*pi*r^2), planar phase
    usw       amplitude^2 = area / (4*pi*r^2), spherical phase
    nusw      amplitude^2 = area / (4*pi*r_e^2), spherical phase

The channel energy ||h||^2 has a closed form for all models except nusw:
for the accurate model it is (zeta/4/pi) * sum of the corner function
``delta`` over the four corner offsets, for nopolar the same sum with the
arctan term alone, and for upw/usw exactly n_total * area / (4*pi*r^2).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import UnsupportedModelError
from .geometry import ArrayGeometry, Placement, check_pairing, direction_triple


class ChannelModel(enum.Enum):
    ACCURATE = "accurate"
    NOPOLAR = "nopolar"
    UPW = "upw"
    USW = "usw"
    NUSW = "nusw"

    @classmethod
    def from_string(cls, name: str) -> "ChannelModel":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise UnsupportedModelError(
                f"unknown channel model {name!r}; expected one of "
                f"{[m.value for m in cls]}"
            ) from None


@dataclass(frozen=True)
class ChannelVector:
    """Per-element gains of one placement under one model."""

    geometry: ArrayGeometry
    placement: Placement
    model: ChannelModel
    gains: np.ndarray = field(repr=False)

    @property
    def norm_sq(self) -> float:
        """Compensated element sum of |gain|^2."""
        return float(_kernels.norm_sq_compensated(self.gains))


def build_channel(g: ArrayGeometry, p: Placement, model: ChannelModel) -> ChannelVector:
    """Evaluate the per-element gain vector (flat order: z-major, y-minor)."""
    check_pairing(g, p)
    gains = _kernels.channel_gains(
        _kernels.MODEL_CODES[model.value],
        g.n_y, g.n_z, g.d, g.area, g.wavelength, p.r, p.theta, p.phi,
    )
    return ChannelVector(geometry=g, placement=p, model=model, gains=gains)


def delta(psi: float, y: float, z: float) -> float:
    """Corner function of the accurate-model energy integral.

    delta(psi, y, z) = (2/3) * atan(y*z / (psi*s)) + psi*y*z / (3*(psi^2+y^2)*s)
    with s = sqrt(psi^2 + y^2 + z^2).  It is psi times the integral of
    (psi^2 + v^2) / (u^2 + v^2 + psi^2)^{5/2} over the rectangle
    [0,y] x [0,z], odd in y and in z, and tends to pi/3 as y,z -> inf.
    """
    if psi <= 0.0:
        raise ValueError(f"psi must be positive, got {psi}")
    s = math.sqrt(psi * psi + y * y + z * z)
    return (2.0 / 3.0) * math.atan(y * z / (psi * s)) + psi * y * z / (
        3.0 * (psi * psi + y * y) * s
    )


def delta_nopolar(psi: float, y: float, z: float) -> float:
    """Corner function without the polarization term: atan(y*z/(psi*s)).

    Equals psi times the integral of (u^2 + v^2 + psi^2)^{-3/2} over
    [0,y] x [0,z]; tends to pi/2 as y,z -> inf.
    """
    if psi <= 0.0:
        raise ValueError(f"psi must be positive, got {psi}")
    s = math.sqrt(psi * psi + y * y + z * z)
    return math.atan(y * z / (psi * s))


def corner_offsets(g: ArrayGeometry, p: Placement) -> tuple[tuple[float, float], tuple[float, float]]:
    """The two y-offsets and two z-offsets feeding the corner-function sum.

    y in {n_y*eps/2 + phi_t, n_y*eps/2 - phi_t} and likewise for z with
    omega, eps = d/r.  Offsets can be negative when the direction cosine
    exceeds the half-aperture; the corner functions are odd, so those terms
    subtract, matching the integral over a rectangle not containing the
    projection point.
    """
    psi, phi_t, omega = direction_triple(p)
    eps = g.d / p.r
    ys = (g.n_y * eps / 2.0 + phi_t, g.n_y * eps / 2.0 - phi_t)
    zs = (g.n_z * eps / 2.0 + omega, g.n_z * eps / 2.0 - omega)
    return ys, zs


def delta_sum(g: ArrayGeometry, p: Placement) -> float:
    """Sum of delta over the four corner offsets (accurate model)."""
    psi, _, _ = direction_triple(p)
    ys, zs = corner_offsets(g, p)
    return math.fsum(delta(psi, y, z) for y in ys for z in zs)


def delta_sum_nopolar(g: ArrayGeometry, p: Placement) -> float:
    """Sum of the arctan corner function over the four corner offsets."""
    psi, _, _ = direction_triple(p)
    ys, zs = corner_offsets(g, p)
    return math.fsum(delta_nopolar(psi, y, z) for y in ys for z in zs)


def closed_form_norm_sq(g: ArrayGeometry, p: Placement, model: ChannelModel) -> float:
    """Closed-form channel energy ||h||^2 for models that have one.

    accurate: (zeta/4/pi) * delta_sum      -> saturates below zeta/3
    nopolar:  (zeta/4/pi) * arctan sum     -> saturates below zeta/2
    upw/usw:  n_total * area / (4*pi*r^2)  -> exact, grows linearly in N
    nusw has no closed form and raises UnsupportedModelError.
    """
    check_pairing(g, p)
    zeta = g.aor
    if model is ChannelModel.ACCURATE:
        return zeta / (4.0 * math.pi) * delta_sum(g, p)
    if model is ChannelModel.NOPOLAR:
        return zeta / (4.0 * math.pi) * delta_sum_nopolar(g, p)
    if model in (ChannelModel.UPW, ChannelModel.USW):
        return g.n_total * g.area / (4.0 * math.pi * p.r * p.r)
    raise UnsupportedModelError(
        f"model {model.value!r} has no closed-form channel energy"
    )


def norm_sq(vec: ChannelVector, source: str = "auto") -> tuple[float, str]:
    """Channel energy with provenance.

    source = "auto" uses the closed form when the model has one and the
    element sum otherwise; "closed_form" / "element_sum" force a path.
    Returns (value, path_used).
    """
    if source not in {"auto", "closed_form", "element_sum"}:
        raise ValueError(f"unknown norm source {source!r}")
    if source == "element_sum":
        return vec.norm_sq, "element_sum"
    if source == "auto" and vec.model is ChannelModel.NUSW:
        return vec.norm_sq, "element_sum"
    return (
        closed_form_norm_sq(vec.geometry, vec.placement, vec.model),
        "closed_form",
    )


def inner_product(a: ChannelVector, b: ChannelVector) -> complex:
    """Compensated a^H b; the two vectors must share a geometry."""
    if a.geometry != b.geometry:
        raise ValueError("channel vectors built on different geometries")
    return _kernels.vdot_compensated(a.gains, b.gains)


def ccf(hc: ChannelVector, hs: ChannelVector) -> float:
    """Channel correlation factor |hc^H hs|^2 / (||hc||^2 ||hs||^2) in [0, 1]."""
    nc = hc.norm_sq
    ns = hs.norm_sq
    if nc <= 0.0 or ns <= 0.0:
        raise ValueError("channel correlation undefined for a zero channel")
    value = abs(inner_product(hc, hs)) ** 2 / (nc * ns)
    if value > 1.0 + 1e-9:
        raise ArithmeticError(f"correlation factor {value} exceeds 1")
    return min(value, 1.0)
