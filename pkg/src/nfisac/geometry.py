"""Array geometry and placement primitives.

The transmit surface is a uniform planar array in the y-z plane, centered at
the origin, with odd element counts along each axis so a center element
exists.  Element (m_y, m_z) sits at [0, m_y*d, m_z*d] with signed indices
|m_y| <= (n_y-1)/2, |m_z| <= (n_z-1)/2.  A placement is a point in front of
the array given in spherical coordinates (r, theta, phi); its direction
cosines relative to the array axes are

    psi   = sin(theta) * cos(phi)   (x, boresight)
    phi_t = sin(theta) * sin(phi)   (y)
    omega = cos(theta)              (z)

and only the half-space psi > 0 in front of the array is admitted.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class ArrayGeometry:
    """Uniform planar array: element counts, spacing, element area, wavelength."""

    n_y: int
    n_z: int
    d: float
    area: float
    wavelength: float

    def __post_init__(self) -> None:
        if self.n_y < 1 or self.n_y % 2 == 0:
            raise ValueError(f"n_y must be odd and positive, got {self.n_y}")
        if self.n_z < 1 or self.n_z % 2 == 0:
            raise ValueError(f"n_z must be odd and positive, got {self.n_z}")
        if self.d <= 0.0:
            raise ValueError(f"element spacing must be positive, got {self.d}")
        if self.wavelength <= 0.0:
            raise ValueError(f"wavelength must be positive, got {self.wavelength}")
        if self.area <= 0.0:
            raise ValueError(f"element area must be positive, got {self.area}")
        if self.area > self.d * self.d * (1.0 + 1e-12):
            raise ValueError(
                f"element area {self.area} exceeds the lattice cell d^2 = "
                f"{self.d * self.d} (array occupation ratio must be <= 1)"
            )

    @property
    def n_total(self) -> int:
        return self.n_y * self.n_z

    @property
    def aor(self) -> float:
        """Array occupation ratio area/d^2, in (0, 1]."""
        return self.area / (self.d * self.d)

    @property
    def half_y(self) -> int:
        return (self.n_y - 1) // 2

    @property
    def half_z(self) -> int:
        return (self.n_z - 1) // 2


@dataclass(frozen=True)
class Placement:
    """A transceiver location in spherical coordinates (meters, radians)."""

    r: float
    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not (self.r > 0.0 and math.isfinite(self.r)):
            raise ValueError(f"r must be positive and finite, got {self.r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not -math.pi <= self.phi <= math.pi:
            raise ValueError(f"phi must lie in [-pi, pi], got {self.phi}")
        psi = math.sin(self.theta) * math.cos(self.phi)
        if psi <= 0.0:
            raise ValueError(
                f"placement is not in front of the array (psi = {psi:.3g} <= 0)"
            )


def direction_triple(p: Placement) -> tuple[float, float, float]:
    """Direction cosines (psi, phi_t, omega) of a placement; unit 2-norm."""
    st = math.sin(p.theta)
    return st * math.cos(p.phi), st * math.sin(p.phi), math.cos(p.theta)


def check_pairing(g: ArrayGeometry, p: Placement) -> None:
    """Validate that a placement is usable with a geometry.

    Hard error if the point is inside the length scale of a single element
    (r <= d or r <= sqrt(area)); warning when r < 10*d, where the per-element
    far-field amplitude expressions start to lose meaning.
    """
    if p.r <= g.d or p.r <= math.sqrt(g.area):
        raise ValueError(
            f"placement r = {p.r} is not beyond the element scale "
            f"(d = {g.d}, sqrt(area) = {math.sqrt(g.area):.3g})"
        )
    if p.r < 10.0 * g.d:
        warnings.warn(
            f"placement r = {p.r} is below 10*d = {10.0 * g.d}; element-level "
            "amplitude terms are marginal this close",
            stacklevel=2,
        )


def element_indices(g: ArrayGeometry) -> tuple[np.ndarray, np.ndarray]:
    """Signed (m_y, m_z) index arrays in flat order (z-major, y-minor)."""
    m_y = np.arange(g.n_y) - g.half_y
    m_z = np.arange(g.n_z) - g.half_z
    grid_z, grid_y = np.meshgrid(m_z, m_y, indexing="ij")
    return grid_y.ravel(), grid_z.ravel()


def element_positions(g: ArrayGeometry) -> np.ndarray:
    """Cartesian element centers, shape (n_total, 3), flat order as above."""
    m_y, m_z = element_indices(g)
    pos = np.zeros((g.n_total, 3))
    pos[:, 1] = m_y * g.d
    pos[:, 2] = m_z * g.d
    return pos


def placement_cartesian(p: Placement) -> np.ndarray:
    """Cartesian coordinates of a placement."""
    psi, phi_t, omega = direction_triple(p)
    return p.r * np.array([psi, phi_t, omega])


def element_distance(g: ArrayGeometry, p: Placement, m_y: int, m_z: int) -> float:
    """Distance from element (m_y, m_z) to the placement.

    Equals r * sqrt((m_y*eps - phi_t)^2 + (m_z*eps - omega)^2 + psi^2)
    with eps = d/r.
    """
    if abs(m_y) > g.half_y or abs(m_z) > g.half_z:
        raise ValueError(
            f"element index ({m_y}, {m_z}) outside array of {g.n_y} x {g.n_z}"
        )
    psi, phi_t, omega = direction_triple(p)
    eps = g.d / p.r
    return p.r * math.sqrt(
        (m_y * eps - phi_t) ** 2 + (m_z * eps - omega) ** 2 + psi * psi
    )


def element_distances(g: ArrayGeometry, p: Placement) -> np.ndarray:
    """Distances from every element to the placement (flat order)."""
    return _kernels.element_distances(g.n_y, g.n_z, g.d, p.r, p.theta, p.phi)
