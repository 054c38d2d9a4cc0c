"""Grid scans, energy integrals, and the radius-pinching audit."""

from __future__ import annotations

import math

import numpy as np
import pytest

from lagsurf.catalog import SurfaceSpec
from lagsurf.scans import (PINCH_THRESHOLD, UnsupportedDomainError,
                           curvature_scan, pinching_hypothesis,
                           pinching_report, willmore)

SPHERE_CONFIGS = [
    SurfaceSpec("whitney-c2"),
    SurfaceSpec("whitney-cp2", t=0.8),
    SurfaceSpec("whitney-ch2", t=0.8),
    SurfaceSpec("totally-geodesic-cp2"),
]


@pytest.mark.parametrize("spec, lo, hi", [
    (SurfaceSpec("whitney-c2"), 0.0, 1.0),
    (SurfaceSpec("whitney-cp2", t=0.8), 1.0, 1.0 + 2.0 * math.sinh(0.8) ** 2),
    (SurfaceSpec("whitney-ch2", t=0.8), -1.0, -1.0 + 2.0 * math.cosh(0.8) ** 2),
], ids=lambda v: v.label() if isinstance(v, SurfaceSpec) else str(v))
def test_curvature_ranges(spec, lo, hi):
    scan = curvature_scan(spec, grid=(64, 64))
    width = hi - lo
    # contained in the closed-form range ...
    assert scan.k_min >= lo - 1e-9
    assert scan.k_max <= hi + 1e-9
    # ... and the grid actually approaches both ends
    assert scan.k_min <= lo + 0.02 * width
    assert scan.k_max >= hi - 0.02 * width


@pytest.mark.parametrize("spec", [
    SurfaceSpec("whitney-c2"),
    SurfaceSpec("whitney-cp2", t=0.8),
    SurfaceSpec("whitney-ch2", t=0.8),
], ids=lambda s: s.label())
def test_curvature_extrema_locations(spec):
    # curvature peaks over the double point (z = 0) and bottoms out at the
    # ends of the axis (z = +-1) for every sphere family member
    scan = curvature_scan(spec, grid=(64, 64))
    assert scan.argmax_z is not None and scan.argmin_z is not None
    assert abs(scan.argmax_z) < 0.1
    assert abs(scan.argmin_z) > 0.9


def test_flat_members_have_flat_scans():
    for spec in (SurfaceSpec("clifford-torus"),
                 SurfaceSpec("psi-ch2", s=0.0),
                 SurfaceSpec("product-torus-c2", r1=1.0, r2=2.0)):
        scan = curvature_scan(spec, grid=(32, 32))
        assert max(abs(scan.k_min), abs(scan.k_max)) < 1e-9, spec.label()


def test_scan_flags():
    clifford = curvature_scan(SurfaceSpec("clifford-torus"), grid=(32, 32))
    assert clifford.compact and clifford.circular and clifford.minimal
    assert clifford.argmin_z is None and clifford.argmax_z is None

    product = curvature_scan(SurfaceSpec("product-torus-c2", r1=1.0, r2=2.0),
                             grid=(32, 32))
    assert product.compact and not product.circular and not product.minimal

    psi = curvature_scan(SurfaceSpec("psi-ch2", s=0.0), grid=(32, 32))
    assert not psi.compact and psi.circular and not psi.minimal

    eta = curvature_scan(SurfaceSpec("eta-ch2"), grid=(32, 32))
    assert not eta.compact and eta.circular


def test_scan_radius_extrema():
    scan = curvature_scan(SurfaceSpec("clifford-torus"), grid=(32, 32))
    assert scan.r_min == pytest.approx(PINCH_THRESHOLD, abs=1e-12)
    assert scan.r_max == pytest.approx(PINCH_THRESHOLD, abs=1e-12)


# ---------------------------------------------------------------------------
# energy integrals


@pytest.mark.parametrize("spec", SPHERE_CONFIGS, ids=lambda s: s.label())
def test_willmore_spheres_hit_topological_bound(spec):
    rep = willmore(spec, orders=(64, 128))
    assert rep.chi == 2
    assert rep.w == pytest.approx(8.0 * math.pi, abs=1e-10)
    assert rep.defect < 1e-10


def test_willmore_product_torus_closed_form():
    rep = willmore(SurfaceSpec("product-torus-c2", r1=1.0, r2=2.0),
                   orders=(32, 64))
    assert rep.w == pytest.approx(math.pi ** 2 * 2.5, abs=1e-12)
    assert rep.area == pytest.approx(4.0 * math.pi ** 2 * 2.0, abs=1e-10)
    # square torus: the minimum of the closed form over radii, w = 2 pi^2
    sq = willmore(SurfaceSpec("product-torus-c2", r1=1.0, r2=1.0),
                  orders=(16, 16))
    assert sq.w == pytest.approx(2.0 * math.pi ** 2, abs=1e-12)


def test_willmore_order_refinement_converges():
    coarse = willmore(SurfaceSpec("whitney-cp2", t=0.5), orders=(8, 16))
    fine = willmore(SurfaceSpec("whitney-cp2", t=0.5), orders=(32, 64))
    assert fine.defect < coarse.defect
    assert fine.defect < 1e-12


def test_willmore_unsupported_domains():
    with pytest.raises(UnsupportedDomainError, match="more than once"):
        willmore(SurfaceSpec("clifford-torus"))
    with pytest.raises(UnsupportedDomainError, match="noncompact"):
        willmore(SurfaceSpec("psi-ch2", s=0.1))
    with pytest.raises(UnsupportedDomainError, match="noncompact"):
        willmore(SurfaceSpec("eta-ch2"))


# ---------------------------------------------------------------------------
# pinching audit


PINCH_MEMBERS = [
    SurfaceSpec("whitney-c2"),
    SurfaceSpec("whitney-cp2", t=0.5),
    SurfaceSpec("whitney-ch2", t=0.5),
    SurfaceSpec("totally-geodesic-cp2"),
    SurfaceSpec("psi-ch2", s=0.0),
    SurfaceSpec("psi-ch2", s=0.3),
    SurfaceSpec("eta-ch2"),
    SurfaceSpec("clifford-torus"),
    SurfaceSpec("product-torus-c2", r1=1.0, r2=1.0),
    SurfaceSpec("product-torus-c2", r1=1.0, r2=0.5),
]


def test_pinching_holds_only_for_minimal_flat_torus():
    holders = [spec.label() for spec in PINCH_MEMBERS
               if pinching_hypothesis(curvature_scan(spec, grid=(32, 32)))]
    assert holders == ["clifford-torus"]


def test_pinching_needs_compactness():
    # the flat family member carries R = 1/sqrt(2) everywhere, yet fails
    # the hypothesis purely for lack of compactness
    scan = curvature_scan(SurfaceSpec("psi-ch2", s=0.0), grid=(32, 32))
    assert scan.r_min >= PINCH_THRESHOLD - 1e-8
    assert scan.circular and not scan.compact
    assert not pinching_hypothesis(scan)


def test_pinching_report_is_consistent_across_catalog():
    for spec in PINCH_MEMBERS:
        text = pinching_report(curvature_scan(spec, grid=(24, 24)))
        assert "INCONSISTENT" not in text, spec.label()
    clifford = pinching_report(
        curvature_scan(SurfaceSpec("clifford-torus"), grid=(24, 24)))
    assert "holds" in clifford
    assert "flat minimal case" in clifford
