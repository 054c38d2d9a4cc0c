"""Target-space defect measures and the second-derivative frame split."""

from __future__ import annotations

import dataclasses

import numpy as np
import pytest

from lagsurf.ambient import (C2, CH2, CP2, lagrangian_defect,
                             horizontality_defect, membership_defect,
                             second_form_split, space_by_model)
from lagsurf.atlas import build_grid
from lagsurf.catalog import SurfaceSpec, lift_at
from lagsurf.numerics import DegeneratePointError, Jet2

ALL_SPECS = [
    SurfaceSpec("whitney-c2"),
    SurfaceSpec("whitney-cp2", t=0.7),
    SurfaceSpec("whitney-ch2", t=0.7),
    SurfaceSpec("totally-geodesic-cp2"),
    SurfaceSpec("psi-ch2", s=0.3),
    SurfaceSpec("eta-ch2"),
    SurfaceSpec("clifford-torus"),
    SurfaceSpec("product-torus-c2", r1=1.0, r2=2.0),
]


def _grid_lift(spec, n=9):
    a1, a2 = build_grid(spec.default_chart, n, n)
    return lift_at(spec, a1, a2)


def test_space_constants():
    assert C2.c == 0.0 and not C2.is_lifted
    assert CP2.c == 4.0 and CP2.lift_norm == 1.0
    assert CH2.c == -4.0 and CH2.lift_norm == -1.0
    assert space_by_model("cp2") is CP2
    with pytest.raises(ValueError):
        space_by_model("cp3")


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_catalog_lifts_satisfy_all_constraints(spec):
    lift = _grid_lift(spec)
    space = spec.ambient
    assert membership_defect(lift, space) < 1e-12
    assert horizontality_defect(lift, space) < 1e-12
    assert lagrangian_defect(lift, space) < 1e-12


def test_non_lagrangian_control_map():
    # (x, y) -> (zeta, conj(zeta)^2 + zeta) in the flat target:
    # Im herm(d1, d2) = 4|zeta|^2 - 2, so it vanishes only on |zeta|^2 = 1/2
    x = np.array([0.0, 0.5, 1.0, 1.3])
    y = np.array([0.0, 0.5, 0.0, -0.2])
    j1, j2 = Jet2.variables(x, y)
    zeta = j1 + j2 * 1j
    lift = Jet2.stack([zeta, zeta.conj() * zeta.conj() + zeta])
    zsq = x * x + y * y
    expected = np.max(np.abs(4.0 * zsq - 2.0))
    assert lagrangian_defect(lift, C2) == pytest.approx(expected, rel=1e-12)
    on_circle = 1.0 / np.sqrt(2.0)
    k1, k2 = Jet2.variables(on_circle, 0.0)
    zc = k1 + k2 * 1j
    circle_lift = Jet2.stack([zc, zc.conj() * zc.conj() + zc])
    assert lagrangian_defect(circle_lift, C2) < 1e-15


def test_membership_detects_off_quadric_point():
    lift = _grid_lift(SurfaceSpec("clifford-torus"))
    scaled = dataclasses.replace(lift, v=lift.v * 1.01)
    assert membership_defect(scaled, CP2) > 1e-2


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.label())
def test_second_form_split_reconstructs(spec):
    lift = _grid_lift(spec)
    split = second_form_split(lift, spec.ambient)
    assert split.split_residual < 1e-10
    assert split.fiber_defect < 1e-10
    assert split.position_defect < 1e-10
    assert split.tangent.shape[-2:] == (3, 2)
    if spec.ambient.is_lifted:
        assert split.position is not None
    else:
        assert split.position is None


def test_position_coefficient_sign():
    # on the positively curved target the d11 position coefficient is -g11
    spec = SurfaceSpec("clifford-torus")
    lift = lift_at(spec, 0.3, 1.2)
    split = second_form_split(lift, spec.ambient)
    from lagsurf.numerics import SIG_S5, real_pair
    g11 = real_pair(lift.d1, lift.d1, SIG_S5)
    assert float(split.position[..., 0]) == pytest.approx(-float(g11),
                                                          abs=1e-12)


def test_normal_part_is_normal():
    from lagsurf.numerics import real_pair
    spec = SurfaceSpec("whitney-cp2", t=0.4)
    lift = _grid_lift(spec, n=5)
    split = second_form_split(lift, spec.ambient)
    sig = spec.ambient.sig
    for p in range(3):
        for du in (lift.d1, lift.d2):
            pair = real_pair(split.normal[..., p, :], du, sig)
            assert np.max(np.abs(pair)) < 1e-11


def test_rank_deficient_point_raises():
    lift = lift_at(SurfaceSpec("clifford-torus"), 0.3, 1.2)
    collapsed = dataclasses.replace(lift, d2=lift.d1)
    with pytest.raises(DegeneratePointError):
        second_form_split(collapsed, CP2)
