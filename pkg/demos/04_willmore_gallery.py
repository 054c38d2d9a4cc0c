"""
Energy gallery
==============

For a compact surface the energy W = int |H|^2 dA + (c/2) Area is bounded
below by 8 pi on spheres, with equality exactly on the Whitney-type
examples — so every sphere in this catalog should integrate to 8 pi to
quadrature precision, for every parameter value and every target curvature.
The circle product (a torus) instead follows the closed form
pi^2 (r1/r2 + r2/r1), minimized by the square one.
"""

from __future__ import annotations

import math

from lagsurf import SurfaceSpec, UnsupportedDomainError, willmore

SPHERES = ([SurfaceSpec("whitney-c2"), SurfaceSpec("totally-geodesic-cp2")]
           + [SurfaceSpec("whitney-cp2", t=t) for t in (0.3, 0.8, 2.0)]
           + [SurfaceSpec("whitney-ch2", t=t) for t in (0.3, 0.8, 2.0)])

print(f"{'surface':<26} {'int |H|^2':>12} {'area':>12} {'W':>12} "
      f"{'|W - 8 pi|':>11}")
for spec in SPHERES:
    rep = willmore(spec, orders=(128, 256))
    print(f"{spec.label():<26} {rep.integral_h2:>12.6f} {rep.area:>12.6f} "
          f"{rep.w:>12.6f} {rep.defect:>11.2e}")

print()
print(f"{'torus radii':<26} {'W':>12} {'closed form':>12}")
for r1, r2 in ((1.0, 1.0), (1.0, 2.0), (1.0, 3.0)):
    rep = willmore(SurfaceSpec("product-torus-c2", r1=r1, r2=r2),
                   orders=(64, 64))
    closed = math.pi ** 2 * (r1 / r2 + r2 / r1)
    print(f"({r1:g}, {r2:g}){'':<18} {rep.w:>12.6f} {closed:>12.6f}")

print()
print("Members without a supported integral say why:")
for spec in (SurfaceSpec("clifford-torus"), SurfaceSpec("eta-ch2")):
    try:
        willmore(spec)
    except UnsupportedDomainError as exc:
        print(f"  {spec.label()}: {exc}")
