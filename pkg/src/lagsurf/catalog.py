"""Catalog of built-in Lagrangian immersions, evaluated as lift jets.

Each entry maps domain coordinates (sphere points, a complex plane
coordinate, torus angles) to a second-order jet of the immersion into C^2,
or of its horizontal lift when the target is curved.  All formulas are
closed-form; derivatives come from jet arithmetic, not differencing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ambient import C2, CH2, CP2, AmbientSpace
from .atlas import (
    ChartDomainError,
    PlanarChart,
    PolarAnnulusChart,
    SphereChart,
    TorusChart,
)
from .numerics import Jet2, jet_cos, jet_sin

KINDS = (
    "whitney-c2",
    "whitney-cp2",
    "whitney-ch2",
    "totally-geodesic-cp2",
    "psi-ch2",
    "eta-ch2",
    "clifford-torus",
    "product-torus-c2",
)

SPHERE_KINDS = ("whitney-c2", "whitney-cp2", "whitney-ch2",
                "totally-geodesic-cp2")
TORUS_KINDS = ("clifford-torus", "product-torus-c2")

AMBIENT_BY_KIND = {
    "whitney-c2": C2,
    "whitney-cp2": CP2,
    "whitney-ch2": CH2,
    "totally-geodesic-cp2": CP2,
    "psi-ch2": CH2,
    "eta-ch2": CH2,
    "clifford-torus": CP2,
    "product-torus-c2": C2,
}

# parameters each family actually reads; the rest must stay at defaults
PARAM_NAMES = {
    "whitney-cp2": ("t",),
    "whitney-ch2": ("t",),
    "psi-ch2": ("s",),
    "product-torus-c2": ("r1", "r2"),
}

_DEFAULTS = {"t": 0.0, "s": 0.0, "r1": 1.0, "r2": 1.0}


@dataclass(frozen=True)
class SurfaceSpec:
    """One catalog surface: a kind tag plus its shape parameters."""

    kind: str
    t: float = 0.0
    s: float = 0.0
    r1: float = 1.0
    r2: float = 1.0

    @property
    def ambient(self) -> AmbientSpace:
        validate_params(self)
        return AMBIENT_BY_KIND[self.kind]

    @property
    def default_chart(self):
        validate_params(self)
        if self.kind in SPHERE_KINDS:
            return SphereChart()
        if self.kind == "psi-ch2":
            return PolarAnnulusChart()
        if self.kind == "eta-ch2":
            return PlanarChart()
        return TorusChart()

    def params(self) -> dict[str, float]:
        """The parameters this kind reads, for display and reports."""
        return {name: getattr(self, name)
                for name in PARAM_NAMES.get(self.kind, ())}

    def label(self) -> str:
        values = self.params()
        if not values:
            return self.kind
        return f"{self.kind}({','.join(f'{v:g}' for v in values.values())})"


def validate_params(spec: SurfaceSpec) -> None:
    """Reject unknown kinds, stray parameters, and out-of-range values."""
    if spec.kind not in KINDS:
        raise ValueError(f"unknown surface kind {spec.kind!r}; expected one "
                         f"of: {', '.join(KINDS)}")
    wanted = PARAM_NAMES.get(spec.kind, ())
    for name, default in _DEFAULTS.items():
        if name not in wanted and getattr(spec, name) != default:
            raise ValueError(f"{spec.kind} takes no parameter {name!r}")
    if spec.kind == "whitney-cp2" and spec.t < 0.0:
        raise ValueError("whitney-cp2 needs t >= 0")
    if spec.kind == "whitney-ch2" and spec.t <= 0.0:
        raise ValueError("whitney-ch2 needs t > 0; the family degenerates "
                         "at t = 0")
    if spec.kind == "psi-ch2" and not 0.0 <= spec.s < math.pi / 4.0:
        raise ValueError("psi-ch2 needs 0 <= s < pi/4; the denominator "
                         "loses positivity at s = pi/4")
    if spec.kind == "product-torus-c2" and min(spec.r1, spec.r2) <= 0.0:
        raise ValueError("product-torus-c2 needs positive radii r1, r2")


def _re(j: Jet2) -> Jet2:
    # real part as a jet; the imaginary cancellation is exact
    return (j + j.conj()) * 0.5


def _unit_circle(angle: Jet2) -> Jet2:
    return jet_cos(angle) + 1j * jet_sin(angle)


def _whitney_c2(spec, x, y, z):
    # normalized so the Gauss curvature spans exactly [0, 1]
    f = math.sqrt(2.0) * (1.0 + 1j * z) / (z * z + 1.0)
    return Jet2.stack([f * x, f * y])


def _whitney_cp2(spec, x, y, z):
    ct, st = math.cosh(spec.t), math.sinh(spec.t)
    den = (st * st) * (z * z) + ct * ct
    f = (ct + (1j * st) * z) / den
    third = (z + (1j * st * ct) * (z * z + 1.0)) / den
    return Jet2.stack([x * f, y * f, third])


def _whitney_ch2(spec, x, y, z):
    ct, st = math.cosh(spec.t), math.sinh(spec.t)
    den = (ct * ct) * (z * z) + st * st
    f = (st + (1j * ct) * z) / den
    third = (z - (1j * st * ct) * (z * z + 1.0)) / den
    return Jet2.stack([x * f, y * f, third])


def _totally_geodesic_cp2(spec, x, y, z):
    # the real slice of the sphere model, lifted as-is
    return Jet2.stack([x, y, z])


def _psi_ch2(spec, p, q):
    z = p + 1j * q
    if np.any(np.abs(np.asarray(z.v)) == 0.0):
        raise ChartDomainError("psi-ch2 is undefined at z = 0")
    c, s = math.cos(spec.s), math.sin(spec.s)
    zb = z.conj()
    w = c * z + s * zb
    inv = 1.0 / _re(w * w.conj())
    zsq = _re(z * zb)
    first = ((c * c) * (z * z) - (s * s) * (zb * zb)) * inv
    shared = w * inv * (1.0 / math.sqrt(2.0))
    return Jet2.stack([first, (zsq - 1.0) * shared, (zsq + 1.0) * shared])


def _eta_ch2(spec, x, y):
    x2, y2 = x * x, y * y
    inv = 1.0 / (4.0 * x2 + 1.0)
    e1 = (2.0 * y) * (1.0 + 2j * x) * inv
    e2 = ((2.0 * x - 4.0 * (x2 * x) - 4.0 * (x * y2))
          + 1j * (6.0 * x2 + 2.0 * y2)) * inv
    e3 = ((6.0 * x2 + 2.0 * y2 + 1.0)
          + 1j * (4.0 * (x2 * x) + 4.0 * (x * y2))) * inv
    return Jet2.stack([e1, e2, e3])


def _clifford_torus(spec, t1, t2):
    parts = [_unit_circle(t1), _unit_circle(t2),
             _unit_circle(t1 + t2).conj()]
    return Jet2.stack(parts) * (1.0 / math.sqrt(3.0))


def _product_torus_c2(spec, t1, t2):
    return Jet2.stack([_unit_circle(t1) * spec.r1,
                       _unit_circle(t2) * spec.r2])


_EVALUATORS = {
    "whitney-c2": (_whitney_c2, 3),
    "whitney-cp2": (_whitney_cp2, 3),
    "whitney-ch2": (_whitney_ch2, 3),
    "totally-geodesic-cp2": (_totally_geodesic_cp2, 3),
    "psi-ch2": (_psi_ch2, 2),
    "eta-ch2": (_eta_ch2, 2),
    "clifford-torus": (_clifford_torus, 2),
    "product-torus-c2": (_product_torus_c2, 2),
}


def evaluate_lift(spec: SurfaceSpec, coords) -> Jet2:
    """Jet of the (lifted) immersion from domain-coordinate jets."""
    validate_params(spec)
    fn, n = _EVALUATORS[spec.kind]
    if len(coords) != n:
        raise ValueError(f"{spec.kind} expects {n} domain coordinates, "
                         f"got {len(coords)}")
    return fn(spec, *coords)


def lift_at(spec: SurfaceSpec, a1, a2, chart=None) -> Jet2:
    """Evaluate the lift jet at chart parameters (default chart when None)."""
    if chart is None:
        chart = spec.default_chart
    return evaluate_lift(spec, chart.coords(a1, a2))
