"""Array geometry: element layout, distances, and direction cosines."""

import math

import numpy as np
import pytest

from nfisac import ArrayGeometry, Placement
from nfisac.geometry import (
    check_pairing,
    direction_triple,
    element_distance,
    element_distances,
    element_indices,
    element_positions,
    placement_cartesian,
)

from conftest import CU, TARGET, make_geometry


def test_geometry_requires_odd_counts():
    with pytest.raises(ValueError):
        ArrayGeometry(n_y=14, n_z=15, d=0.0625, area=1e-3, wavelength=0.125)
    with pytest.raises(ValueError):
        ArrayGeometry(n_y=15, n_z=0, d=0.0625, area=1e-3, wavelength=0.125)


def test_geometry_rejects_nonpositive_scalars():
    for bad in ({"d": 0.0}, {"area": -1.0}, {"wavelength": 0.0}):
        kwargs = dict(n_y=15, n_z=15, d=0.0625, area=1e-3, wavelength=0.125)
        kwargs.update(bad)
        with pytest.raises(ValueError):
            ArrayGeometry(**kwargs)


def test_aperture_ratio_must_not_exceed_cell():
    # element area larger than the d x d cell is unphysical
    with pytest.raises(ValueError):
        ArrayGeometry(n_y=15, n_z=15, d=0.0625, area=0.0625**2 * 1.5, wavelength=0.125)


def test_derived_quantities():
    g = make_geometry(15)
    assert g.n_total == 225
    assert g.aor == pytest.approx(1.0 / math.pi, rel=1e-15)
    assert g.half_y == 7 and g.half_z == 7


def test_element_positions_lie_in_yz_plane():
    g = make_geometry(5, 7)
    pos = element_positions(g)
    assert pos.shape == (35, 3)
    assert np.all(pos[:, 0] == 0.0)
    # centered: the mean offset is exactly zero
    assert np.allclose(pos.mean(axis=0), 0.0, atol=1e-15)
    ys = np.unique(pos[:, 1])
    zs = np.unique(pos[:, 2])
    assert ys.size == 5 and zs.size == 7
    assert np.allclose(np.diff(ys), g.d)


def test_flat_index_is_z_major_y_minor():
    g = make_geometry(5, 7)
    my, mz = element_indices(g)
    pos = element_positions(g)
    assert my[0] == -2 and mz[0] == -3
    assert my[1] == -1 and mz[1] == -3  # y advances fastest
    assert my[5] == -2 and mz[5] == -2
    np.testing.assert_allclose(pos[:, 1], my * g.d, atol=0)
    np.testing.assert_allclose(pos[:, 2], mz * g.d, atol=0)


def test_placement_validation():
    with pytest.raises(ValueError):
        Placement(-1.0, math.pi / 4.0, 0.0)
    with pytest.raises(ValueError):
        Placement(5.0, -0.1, 0.0)  # theta outside [0, pi]
    with pytest.raises(ValueError):
        Placement(5.0, math.pi / 4.0, 2.0)  # behind the array: psi < 0


def test_direction_triple_frozen_values():
    psi, phi_, omega = direction_triple(CU)
    assert psi == pytest.approx(0.612372, abs=5e-7)
    assert phi_ == pytest.approx(0.353553, abs=5e-7)
    assert omega == pytest.approx(0.707107, abs=5e-7)
    psi_t, phi_t, omega_t = direction_triple(TARGET)
    assert psi_t == psi and omega_t == omega
    assert phi_t == -phi_


def test_direction_triple_unit_norm():
    rng = np.random.default_rng(3)
    for _ in range(50):
        p = Placement(
            float(rng.uniform(1.0, 50.0)),
            float(rng.uniform(0.05, math.pi - 0.05)),
            float(rng.uniform(-math.pi / 2 + 0.05, math.pi / 2 - 0.05)),
        )
        psi, phi_, omega = direction_triple(p)
        assert psi > 0.0
        assert psi * psi + phi_ * phi_ + omega * omega == pytest.approx(1.0, rel=1e-14)


def test_placement_cartesian_matches_triple():
    v = placement_cartesian(CU)
    psi, phi_, omega = direction_triple(CU)
    np.testing.assert_allclose(v, [10.0 * psi, 10.0 * phi_, 10.0 * omega], rtol=1e-15)


def test_element_distance_frozen_values():
    g = make_geometry(15)
    assert element_distance(g, TARGET, 0, 0) == 5.0
    assert element_distance(g, TARGET, -7, -7) == pytest.approx(
        5.189374585038699, rel=1e-15
    )
    assert element_distance(g, CU, 7, 7) == pytest.approx(9.544738655244917, rel=1e-15)


def test_element_distance_cartesian_oracle():
    g = make_geometry(9, 11)
    rng = np.random.default_rng(17)
    for _ in range(20):
        p = Placement(
            float(rng.uniform(1.0, 40.0)),
            float(rng.uniform(0.3, math.pi - 0.3)),
            float(rng.uniform(-1.2, 1.2)),
        )
        target = placement_cartesian(p)
        m_y = int(rng.integers(-4, 5))
        m_z = int(rng.integers(-5, 6))
        direct = float(np.linalg.norm(target - np.array([0.0, m_y * g.d, m_z * g.d])))
        assert element_distance(g, p, m_y, m_z) == pytest.approx(direct, rel=1e-12)


def test_element_distances_grid_matches_scalar():
    g = make_geometry(7, 5)
    dist = element_distances(g, TARGET)
    my, mz = element_indices(g)
    for k in range(g.n_total):
        assert dist[k] == pytest.approx(
            element_distance(g, TARGET, int(my[k]), int(mz[k])), rel=1e-15
        )


def test_check_pairing_rejects_sub_element_distances():
    g = make_geometry(15)
    check_pairing(g, CU)  # fine
    with pytest.raises(ValueError):
        check_pairing(g, Placement(0.05, math.pi / 2.0, 0.0))  # r < d


def test_check_pairing_warns_near_element_scale():
    g = make_geometry(15)
    with pytest.warns(UserWarning):
        check_pairing(g, Placement(0.5, math.pi / 2.0, 0.0))  # r < 10*d
