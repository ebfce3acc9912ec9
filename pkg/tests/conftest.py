"""Shared fixtures: default geometry, placements, and channel pairs."""

import math

import pytest

from nfisac import (
    ArrayGeometry,
    ChannelModel,
    Placement,
    SystemParams,
    build_channel,
)

WAVELENGTH = 0.125
SPACING = 0.0625
AREA = WAVELENGTH * WAVELENGTH / (4.0 * math.pi)
AOR = AREA / (SPACING * SPACING)

CU = Placement(10.0, math.pi / 4.0, math.pi / 6.0)
TARGET = Placement(5.0, math.pi / 4.0, -math.pi / 6.0)


def make_geometry(n_y: int, n_z: int | None = None) -> ArrayGeometry:
    return ArrayGeometry(
        n_y=n_y,
        n_z=n_z if n_z is not None else n_y,
        d=SPACING,
        area=AREA,
        wavelength=WAVELENGTH,
    )


def make_pair(n: int, model: ChannelModel = ChannelModel.ACCURATE):
    g = make_geometry(n)
    return build_channel(g, CU, model), build_channel(g, TARGET, model)


@pytest.fixture(scope="session")
def geom15() -> ArrayGeometry:
    return make_geometry(15)


@pytest.fixture(scope="session")
def default_pair(geom15):
    return (
        build_channel(geom15, CU, ChannelModel.ACCURATE),
        build_channel(geom15, TARGET, ChannelModel.ACCURATE),
    )


@pytest.fixture(scope="session")
def sp() -> SystemParams:
    return SystemParams()
