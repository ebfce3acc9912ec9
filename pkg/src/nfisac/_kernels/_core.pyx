# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: per-element channel gains and compensated reductions.

The hot loops of the package live here: building the element-gain vector of a
uniform planar array for one of the five propagation models, and summing
|g_k|^2 / conj(a_k)*b_k with Kahan compensation so brute-force norms stay
trustworthy at N ~ 10^6 elements.  A numpy fallback with the same signatures
lives in ``_pyback.py``; ``nfisac._kernels`` picks one at import time.
"""

import numpy as np

from libc.math cimport atan, cos, rint, sin, sqrt

cdef double TWO_PI = 6.283185307179586
cdef double FOUR_PI = 12.566370614359172

# model codes shared with the python backend (keep in sync with __init__.py)
cdef int MODEL_ACCURATE = 0
cdef int MODEL_NOPOLAR = 1
cdef int MODEL_UPW = 2
cdef int MODEL_USW = 3
cdef int MODEL_NUSW = 4


cdef inline double _reduced_phase(double cycles) nogil:
    # exp(-j*2*pi*k) == 1 for integer k, so drop the nearest whole number of
    # cycles before scaling by 2*pi; keeps sub-cycle accuracy at large r/lambda.
    return TWO_PI * (cycles - rint(cycles))


def channel_gains(int model, int n_y, int n_z, double d, double area,
                  double wavelength, double r, double theta, double phi):
    """Element-gain vector for one placement, linearized z-major/y-minor.

    Element (i_y, i_z) with signed indices m_y = i_y - (n_y-1)/2,
    m_z = i_z - (n_z-1)/2 lands at flat index i_z * n_y + i_y.
    """
    out = np.empty(n_y * n_z, dtype=np.complex128)
    cdef double complex[::1] g = out

    cdef double psi = sin(theta) * cos(phi)
    cdef double phi_t = sin(theta) * sin(phi)
    cdef double omega = cos(theta)

    cdef Py_ssize_t iy, iz, k
    cdef long half_y = (n_y - 1) // 2
    cdef long half_z = (n_z - 1) // 2
    cdef double u = r * psi
    cdef double yc = r * phi_t
    cdef double zc = r * omega
    cdef double dy, dz, re2, re, amp, ph, cycles, amp2
    cdef double far_amp = sqrt(area / (FOUR_PI * r * r))
    cdef double inv_wl = 1.0 / wavelength

    with nogil:
        k = 0
        for iz in range(n_z):
            dz = (iz - half_z) * d - zc
            for iy in range(n_y):
                dy = (iy - half_y) * d - yc
                if model == MODEL_UPW:
                    cycles = (r - (iy - half_y) * d * phi_t
                              - (iz - half_z) * d * omega) * inv_wl
                    ph = -_reduced_phase(cycles)
                    g[k] = far_amp * cos(ph) + 1j * (far_amp * sin(ph))
                else:
                    re2 = dy * dy + dz * dz + u * u
                    re = sqrt(re2)
                    if model == MODEL_ACCURATE:
                        amp2 = area * u * (u * u + dz * dz) / (FOUR_PI * re2 * re2 * re)
                        amp = sqrt(amp2)
                    elif model == MODEL_NOPOLAR:
                        amp = sqrt(area * u / (FOUR_PI * re2 * re))
                    elif model == MODEL_USW:
                        amp = far_amp
                    else:  # MODEL_NUSW
                        amp = sqrt(area / (FOUR_PI * re2))
                    ph = -_reduced_phase(re * inv_wl)
                    g[k] = amp * cos(ph) + 1j * (amp * sin(ph))
                k += 1
    return out


def element_distances(int n_y, int n_z, double d, double r,
                      double theta, double phi):
    """All element-to-point distances, same linearization as channel_gains."""
    out = np.empty(n_y * n_z, dtype=np.float64)
    cdef double[::1] dist = out
    cdef double psi = sin(theta) * cos(phi)
    cdef double phi_t = sin(theta) * sin(phi)
    cdef double omega = cos(theta)
    cdef Py_ssize_t iy, iz, k
    cdef long half_y = (n_y - 1) // 2
    cdef long half_z = (n_z - 1) // 2
    cdef double u = r * psi
    cdef double yc = r * phi_t
    cdef double zc = r * omega
    cdef double dy, dz
    with nogil:
        k = 0
        for iz in range(n_z):
            dz = (iz - half_z) * d - zc
            for iy in range(n_y):
                dy = (iy - half_y) * d - yc
                dist[k] = sqrt(dy * dy + dz * dz + u * u)
                k += 1
    return out


def norm_sq_compensated(double complex[::1] g):
    """Kahan-compensated sum of |g_k|^2."""
    cdef double s = 0.0, comp = 0.0, y, t, a
    cdef Py_ssize_t k
    with nogil:
        for k in range(g.shape[0]):
            a = g[k].real * g[k].real + g[k].imag * g[k].imag
            y = a - comp
            t = s + y
            comp = (t - s) - y
            s = t
    return s


def norm_sq_naive(double complex[::1] g):
    """Sequential float64 sum of |g_k|^2 (uncompensated reference)."""
    cdef double s = 0.0
    cdef Py_ssize_t k
    with nogil:
        for k in range(g.shape[0]):
            s += g[k].real * g[k].real + g[k].imag * g[k].imag
    return s


def vdot_compensated(double complex[::1] a, double complex[::1] b):
    """Kahan-compensated sum of conj(a_k) * b_k."""
    if a.shape[0] != b.shape[0]:
        raise ValueError("vectors must have equal length")
    cdef double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0
    cdef double xr, xi, y, t
    cdef Py_ssize_t k
    with nogil:
        for k in range(a.shape[0]):
            xr = a[k].real * b[k].real + a[k].imag * b[k].imag
            xi = a[k].real * b[k].imag - a[k].imag * b[k].real
            y = xr - cr
            t = sr + y
            cr = (t - sr) - y
            sr = t
            y = xi - ci
            t = si + y
            ci = (t - si) - y
            si = t
    return complex(sr, si)
