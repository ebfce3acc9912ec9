"""Compiled and pure-Python kernel backends must agree bit-for-bit where
exact and to tight tolerances where summation order differs."""

import math

import numpy as np
import pytest

from nfisac._kernels import (
    BACKEND,
    MODEL_CODES,
    channel_gains,
    element_distances,
    get_backend,
    norm_sq_compensated,
    norm_sq_naive,
    vdot_compensated,
)

LAM = 0.125
D = 0.0625
A = LAM * LAM / (4.0 * math.pi)


def _both_backends():
    active = get_backend(BACKEND)
    python = get_backend("python")
    return active, python


def test_backend_selector_rejects_unknown():
    with pytest.raises(ValueError):
        get_backend("fortran")


def test_active_backend_exposes_kernel_surface():
    b = get_backend(BACKEND)
    for name in ("channel_gains", "element_distances", "norm_sq_compensated",
                 "norm_sq_naive", "vdot_compensated"):
        assert callable(getattr(b, name))


@pytest.mark.parametrize("model", sorted(MODEL_CODES))
def test_backends_agree_on_channel_gains(model):
    active, python = _both_backends()
    rng = np.random.default_rng(2024)
    for _ in range(5):
        n_y = 2 * int(rng.integers(1, 8)) + 1
        n_z = 2 * int(rng.integers(1, 8)) + 1
        r = float(rng.uniform(3.0, 40.0))
        theta = float(rng.uniform(math.pi / 4.0, 3.0 * math.pi / 4.0))
        phi = float(rng.uniform(-math.pi / 3.0, math.pi / 3.0))
        args = (MODEL_CODES[model], n_y, n_z, D, A, LAM, r, theta, phi)
        ga = np.asarray(active.channel_gains(*args))
        gp = np.asarray(python.channel_gains(*args))
        assert ga.shape == (n_y * n_z,)
        np.testing.assert_allclose(ga, gp, rtol=1e-14, atol=1e-300)


def test_backends_agree_on_element_distances():
    active, python = _both_backends()
    da = np.asarray(active.element_distances(15, 15, D, 5.0, math.pi / 4.0, -math.pi / 6.0))
    dp = np.asarray(python.element_distances(15, 15, D, 5.0, math.pi / 4.0, -math.pi / 6.0))
    np.testing.assert_allclose(da, dp, rtol=1e-15)
    assert da.min() > 0.0


def test_module_level_wrappers_match_active_backend():
    b = get_backend(BACKEND)
    args = (MODEL_CODES["accurate"], 9, 9, D, A, LAM, 5.0, math.pi / 4.0, math.pi / 6.0)
    np.testing.assert_array_equal(
        np.asarray(channel_gains(*args)), np.asarray(b.channel_gains(*args))
    )
    np.testing.assert_array_equal(
        np.asarray(element_distances(9, 9, D, 5.0, 1.0, 0.5)),
        np.asarray(b.element_distances(9, 9, D, 5.0, 1.0, 0.5)),
    )


def test_compensated_norm_matches_fsum():
    active, python = _both_backends()
    rng = np.random.default_rng(7)
    g = rng.standard_normal(4097) + 1j * rng.standard_normal(4097)
    g *= np.exp(rng.uniform(-12, 12, size=g.size))
    expect = math.fsum((abs(x)) ** 2 for x in g)
    assert abs(active.norm_sq_compensated(g) - expect) <= 1e-15 * expect
    assert abs(python.norm_sq_compensated(g) - expect) <= 1e-15 * expect


def test_compensated_beats_naive_on_large_arrays():
    # a 1001^2-element near-field channel: compensated summation must sit
    # within a few ulps of fsum while the naive sum drifts further
    args = (MODEL_CODES["accurate"], 1001, 1001, D, A, LAM, 10.0,
            math.pi / 4.0, math.pi / 6.0)
    g = np.asarray(channel_gains(*args))
    exact = math.fsum(float(v) for v in (g.real * g.real + g.imag * g.imag))
    comp_err = abs(norm_sq_compensated(g) - exact)
    naive_err = abs(norm_sq_naive(g) - exact)
    assert comp_err <= 4.0 * np.finfo(float).eps * exact
    assert comp_err <= naive_err


def test_compensated_vdot_matches_numpy_in_double_extended():
    rng = np.random.default_rng(11)
    a = rng.standard_normal(2001) + 1j * rng.standard_normal(2001)
    b = rng.standard_normal(2001) + 1j * rng.standard_normal(2001)
    got = vdot_compensated(a, b)
    re = math.fsum((a.real * b.real + a.imag * b.imag).tolist())
    im = math.fsum((a.real * b.imag - a.imag * b.real).tolist())
    assert abs(got.real - re) <= 1e-13 * max(1.0, abs(re))
    assert abs(got.imag - im) <= 1e-13 * max(1.0, abs(im))


def test_gain_layout_is_z_major_y_minor():
    # flat index k = (m_z + (n_z-1)/2) * n_y + (m_y + (n_y-1)/2)
    n_y, n_z = 5, 7
    b = get_backend("python")
    dist = np.asarray(b.element_distances(n_y, n_z, D, 5.0, math.pi / 3.0, 0.2))
    from nfisac.geometry import ArrayGeometry, Placement, element_distance

    g = ArrayGeometry(n_y=n_y, n_z=n_z, d=D, area=A, wavelength=LAM)
    p = Placement(5.0, math.pi / 3.0, 0.2)
    for m_z in (-3, 0, 2):
        for m_y in (-2, 0, 1):
            k = (m_z + (n_z - 1) // 2) * n_y + (m_y + (n_y - 1) // 2)
            assert dist[k] == pytest.approx(element_distance(g, p, m_y, m_z), rel=1e-15)
