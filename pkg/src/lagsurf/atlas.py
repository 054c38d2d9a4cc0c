"""Chart parametrizations of the surface domains, grids, and quadrature.

Charts map two real parameters to the domain coordinates the immersion
formulas consume (sphere points, complex-plane coordinates, torus angles),
with exact second-order jets.  Grids are deterministic lattices that keep a
margin from excluded sets (sphere poles, the plane puncture).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import Jet2, jet_cos, jet_sin


class ChartDomainError(ValueError):
    """Evaluation at a point outside the chart's open domain."""


class SphereChart:
    """Colatitude/azimuth chart (phi, theta) -> (x, y, z) on the unit sphere.

    phi in (0, pi), theta in [0, 2pi).  The poles z = +-1 are excluded;
    stereographic charts cover them.
    """

    kind = "spherical"
    periodic = (False, True)
    bounds = ((0.0, np.pi), (0.0, 2.0 * np.pi))
    default_margins = (0.02, 0.0)

    def contains(self, phi, theta):
        phi = np.asarray(phi, dtype=float)
        return (phi > 0.0) & (phi < np.pi)

    def coords(self, phi, theta):
        if not np.all(self.contains(phi, theta)):
            raise ChartDomainError("spherical chart excludes the poles phi in {0, pi}")
        jp, jt = Jet2.variables(phi, theta)
        sp, cp = jet_sin(jp), jet_cos(jp)
        st, ct = jet_sin(jt), jet_cos(jt)
        return sp * ct, sp * st, cp


class StereographicChart:
    """Stereographic plane chart (u, v) -> (x, y, z).

    pole='north' projects from (0,0,1) and covers the sphere minus the north
    pole; pole='south' covers the sphere minus the south pole.
    """

    periodic = (False, False)
    bounds = ((-4.0, 4.0), (-4.0, 4.0))
    default_margins = (0.0, 0.0)

    def __init__(self, pole: str = "north"):
        if pole not in ("north", "south"):
            raise ValueError("pole must be 'north' or 'south'")
        self.pole = pole
        self.kind = f"stereographic-{pole}"

    def contains(self, u, v):
        return np.ones(np.broadcast(np.asarray(u), np.asarray(v)).shape,
                       dtype=bool)

    def coords(self, u, v):
        ju, jv = Jet2.variables(u, v)
        den = ju * ju + jv * jv + 1.0
        x = 2.0 * ju / den
        y = 2.0 * jv / den
        z = (ju * ju + jv * jv - 1.0) / den
        if self.pole == "south":
            z = -z
        return x, y, z

    def from_xyz(self, x, y, z):
        """Inverse chart; undefined at the projection pole."""
        z = np.asarray(z, dtype=float)
        if self.pole == "north":
            return x / (1.0 - z), y / (1.0 - z)
        return x / (1.0 + z), y / (1.0 + z)


class PlanarChart:
    """Identity chart (x, y) on the plane."""

    kind = "planar"
    periodic = (False, False)
    bounds = ((-3.0, 3.0), (-3.0, 3.0))
    default_margins = (0.0, 0.0)

    def contains(self, x, y):
        return np.ones(np.broadcast(np.asarray(x), np.asarray(y)).shape,
                       dtype=bool)

    def coords(self, x, y):
        return Jet2.variables(x, y)


class PolarAnnulusChart:
    """Polar chart (r, theta) -> (Re z, Im z) on the punctured plane.

    The puncture z = 0 is a chart boundary: r > 0 always, and grids keep
    r >= r_min (default 0.2) so conditioning stays healthy.
    """

    kind = "polar-annulus"
    periodic = (False, True)
    default_margins = (0.0, 0.0)

    def __init__(self, r_min: float = 0.2, r_max: float = 5.0):
        if not 0.0 < r_min < r_max:
            raise ValueError("need 0 < r_min < r_max")
        self.bounds = ((r_min, r_max), (0.0, 2.0 * np.pi))

    def contains(self, r, theta):
        return np.asarray(r, dtype=float) > 0.0

    def coords(self, r, theta):
        if not np.all(self.contains(r, theta)):
            raise ChartDomainError("polar chart requires r > 0")
        jr, jt = Jet2.variables(r, theta)
        return jr * jet_cos(jt), jr * jet_sin(jt)

    def grid_axis1(self, n1, lo, hi):
        # geometric spacing covers the annulus scales evenly
        return np.geomspace(lo, hi, n1)


class TorusChart:
    """Angle chart (theta1, theta2) on the flat square torus [0, 2pi)^2."""

    kind = "torus"
    periodic = (True, True)
    bounds = ((0.0, 2.0 * np.pi), (0.0, 2.0 * np.pi))
    default_margins = (0.0, 0.0)

    def contains(self, t1, t2):
        return np.ones(np.broadcast(np.asarray(t1), np.asarray(t2)).shape,
                       dtype=bool)

    def coords(self, t1, t2):
        return Jet2.variables(t1, t2)


def sphere_chart(phi, theta):
    """Jets of (x, y, z) = (sin phi cos theta, sin phi sin theta, cos phi)."""
    return SphereChart().coords(phi, theta)


def _axis(chart, i, n, margin):
    lo, hi = chart.bounds[i]
    if chart.periodic[i]:
        return np.linspace(lo, hi, n, endpoint=False)
    span = hi - lo
    lo, hi = lo + margin * span, hi - margin * span
    if hi <= lo:
        raise ValueError("empty grid axis after margins")
    if hasattr(chart, "grid_axis1") and i == 0:
        return chart.grid_axis1(n, lo, hi)
    return np.linspace(lo, hi, n)


def build_grid(chart, n1, n2, margins=None):
    """Deterministic n1 x n2 lattice of chart points, away from excluded sets.

    Returns two flat arrays of length n1*n2.  Margins are fractions of the
    non-periodic axis spans; periodic axes ignore them.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("grid needs n1, n2 >= 2")
    m1, m2 = chart.default_margins if margins is None else margins
    a1 = _axis(chart, 0, n1, m1)
    a2 = _axis(chart, 1, n2, m2)
    g1, g2 = np.meshgrid(a1, a2, indexing="ij")
    return g1.ravel(), g2.ravel()


def random_points(chart, n, rng, margins=None):
    """Seeded uniform sample of n interior chart points."""
    m1, m2 = chart.default_margins if margins is None else margins
    out = []
    for i, m in ((0, m1), (1, m2)):
        lo, hi = chart.bounds[i]
        if not chart.periodic[i]:
            span = hi - lo
            lo, hi = lo + m * span, hi - m * span
        out.append(rng.uniform(lo, hi, size=n))
    return out[0], out[1]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights integrating over the chart parameter measure.

    The weights integrate d(a1) d(a2); surface integrands must include the
    induced area element sqrt(det g).  Summation happens in node index order
    (numpy pairwise reduction), which is fixed for a given rule, so repeated
    runs are bitwise reproducible.
    """

    kind: str
    nodes1: np.ndarray
    nodes2: np.ndarray
    weights: np.ndarray
    orders: tuple[int, int]


def sphere_quadrature(n1: int, n2: int) -> QuadratureRule:
    """Gauss-Legendre in cos(phi) times trapezoid in theta.

    Spectrally accurate for smooth integrands on the sphere; all nodes are
    interior, so the pole chart boundary needs no special handling.
    """
    u, w = np.polynomial.legendre.leggauss(n1)
    phi = np.arccos(u)
    # d(phi) weight: Gauss-Legendre in u = cos(phi) carries du = -sin(phi) dphi
    w_phi = w / np.sin(phi)
    theta = np.linspace(0.0, 2.0 * np.pi, n2, endpoint=False)
    w_theta = np.full(n2, 2.0 * np.pi / n2)
    p, t = np.meshgrid(phi, theta, indexing="ij")
    wp, wt = np.meshgrid(w_phi, w_theta, indexing="ij")
    return QuadratureRule("sphere", p.ravel(), t.ravel(),
                          (wp * wt).ravel(), (n1, n2))


def torus_quadrature(n1: int, n2: int) -> QuadratureRule:
    """Periodic trapezoid rule on [0, 2pi)^2 (spectral for smooth periodic f)."""
    t1 = np.linspace(0.0, 2.0 * np.pi, n1, endpoint=False)
    t2 = np.linspace(0.0, 2.0 * np.pi, n2, endpoint=False)
    g1, g2 = np.meshgrid(t1, t2, indexing="ij")
    w = np.full(n1 * n2, (2.0 * np.pi / n1) * (2.0 * np.pi / n2))
    return QuadratureRule("torus", g1.ravel(), g2.ravel(), w, (n1, n2))


def integrate(f, rule: QuadratureRule) -> float:
    """Weighted sum of f over the rule nodes; f maps (a1, a2) -> values."""
    vals = np.asarray(f(rule.nodes1, rule.nodes2), dtype=float)
    if not np.all(np.isfinite(vals)):
        i = int(np.argmin(np.isfinite(vals)))
        raise ValueError(
            f"non-finite integrand at node {i}: "
            f"(a1, a2) = ({rule.nodes1[i]!r}, {rule.nodes2[i]!r})")
    return float(np.sum(rule.weights * vals))
