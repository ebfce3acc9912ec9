"""Numpy fallback for the compiled kernels.

Same signatures and linearization (z-major, y-minor) as ``_core.pyx``.
Compensated reductions use extended-precision (long double) accumulation,
which meets the same accuracy contract as the compiled Kahan loops: within
1e-12 relative of an exactly rounded reference at N ~ 10^6.
"""

from __future__ import annotations

import numpy as np

MODEL_ACCURATE = 0
MODEL_NOPOLAR = 1
MODEL_UPW = 2
MODEL_USW = 3
MODEL_NUSW = 4

_FOUR_PI = 4.0 * np.pi


def _reduced_phase(cycles: np.ndarray) -> np.ndarray:
    # exp(-j*2*pi*k) == 1 for integer k: drop whole cycles before scaling.
    return 2.0 * np.pi * (cycles - np.rint(cycles))


def _offsets(n_y: int, n_z: int, d: float, r: float, theta: float, phi: float):
    psi = np.sin(theta) * np.cos(phi)
    phi_t = np.sin(theta) * np.sin(phi)
    omega = np.cos(theta)
    m_y = np.arange(n_y) - (n_y - 1) // 2
    m_z = np.arange(n_z) - (n_z - 1) // 2
    dy = m_y[None, :] * d - r * phi_t     # (1, n_y)
    dz = m_z[:, None] * d - r * omega     # (n_z, 1)
    return psi, phi_t, omega, m_y, m_z, dy, dz


def channel_gains(model: int, n_y: int, n_z: int, d: float, area: float,
                  wavelength: float, r: float, theta: float, phi: float) -> np.ndarray:
    """Element-gain vector for one placement, linearized z-major/y-minor."""
    psi, phi_t, omega, m_y, m_z, dy, dz = _offsets(n_y, n_z, d, r, theta, phi)
    u = r * psi
    far_amp = np.sqrt(area / (_FOUR_PI * r * r))

    if model == MODEL_UPW:
        cycles = (r - m_y[None, :] * d * phi_t - m_z[:, None] * d * omega) / wavelength
        ph = -_reduced_phase(cycles)
        return (far_amp * np.exp(1j * ph)).ravel()

    re2 = dy * dy + dz * dz + u * u       # (n_z, n_y)
    re = np.sqrt(re2)
    if model == MODEL_ACCURATE:
        amp = np.sqrt(area * u * (u * u + dz * dz) / (_FOUR_PI * re2 * re2 * re))
    elif model == MODEL_NOPOLAR:
        amp = np.sqrt(area * u / (_FOUR_PI * re2 * re))
    elif model == MODEL_USW:
        amp = np.full_like(re, far_amp)
    elif model == MODEL_NUSW:
        amp = np.sqrt(area / (_FOUR_PI * re2))
    else:
        raise ValueError(f"unknown model code {model}")
    ph = -_reduced_phase(re / wavelength)
    return (amp * np.exp(1j * ph)).ravel()


def element_distances(n_y: int, n_z: int, d: float, r: float,
                      theta: float, phi: float) -> np.ndarray:
    """All element-to-point distances, same linearization as channel_gains."""
    psi, _, _, _, _, dy, dz = _offsets(n_y, n_z, d, r, theta, phi)
    u = r * psi
    return np.sqrt(dy * dy + dz * dz + u * u).ravel()


def norm_sq_compensated(g: np.ndarray) -> float:
    abs2 = g.real.astype(np.longdouble) ** 2 + g.imag.astype(np.longdouble) ** 2
    return float(abs2.sum())


def norm_sq_naive(g: np.ndarray) -> float:
    # cumsum is a genuinely sequential float64 accumulation (np.sum pairwise-
    # compensates and would defeat the purpose of a naive reference).
    abs2 = g.real * g.real + g.imag * g.imag
    return float(np.cumsum(abs2)[-1])


def vdot_compensated(a: np.ndarray, b: np.ndarray) -> complex:
    if a.shape != b.shape:
        raise ValueError("vectors must have equal length")
    prod = np.conj(a).astype(np.clongdouble) * b.astype(np.clongdouble)
    return complex(prod.sum())
