"""Pointwise and global invariants of Lagrangian surfaces via lift jets."""

from .ambient import C2, CH2, CP2, AmbientSpace, second_form_split
from .atlas import (ChartDomainError, PlanarChart, PolarAnnulusChart,
                    SphereChart, StereographicChart, TorusChart, build_grid,
                    random_points, sphere_quadrature, torus_quadrature)
from .catalog import KINDS, SurfaceSpec, evaluate_lift, lift_at, validate_params
from .geom import (EllipseSample, PointGeometry, circularity_defect,
                   ellipse_samples, frame_densities,
                   gauss_curvature_intrinsic, geometry_from_jet,
                   point_geometry, product_identity_check, radius,
                   rotate_frame, scaled_circularity)
from .numerics import DegeneratePointError, Jet2, apply_J, herm_pair, real_pair
from .scans import (ScanReport, UnsupportedDomainError, WillmoreReport,
                    curvature_scan, pinching_hypothesis, pinching_report,
                    willmore)

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "C2",
    "CH2",
    "CP2",
    "ChartDomainError",
    "DegeneratePointError",
    "EllipseSample",
    "Jet2",
    "KINDS",
    "PlanarChart",
    "PointGeometry",
    "PolarAnnulusChart",
    "ScanReport",
    "SphereChart",
    "StereographicChart",
    "SurfaceSpec",
    "TorusChart",
    "UnsupportedDomainError",
    "WillmoreReport",
    "apply_J",
    "build_grid",
    "circularity_defect",
    "curvature_scan",
    "ellipse_samples",
    "evaluate_lift",
    "frame_densities",
    "gauss_curvature_intrinsic",
    "geometry_from_jet",
    "herm_pair",
    "lift_at",
    "pinching_hypothesis",
    "pinching_report",
    "point_geometry",
    "product_identity_check",
    "radius",
    "random_points",
    "real_pair",
    "rotate_frame",
    "scaled_circularity",
    "second_form_split",
    "sphere_quadrature",
    "torus_quadrature",
    "validate_params",
    "__version__",
]
