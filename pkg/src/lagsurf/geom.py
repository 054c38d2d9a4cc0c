"""Pointwise invariants of a Lagrangian surface from one lift jet.

The pipeline: induced metric -> orthonormal tangent frame -> second
fundamental form on that frame -> mean/Gauss curvature, the cubic
coefficient tensor, and the ellipse-of-curvature data (circularity defect,
frame densities, radius).  Every quantity is batched: evaluating a grid is
one call.  Cross-route consistency checks are never folded into each other;
each has its own defect number.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ambient as amb
from .ambient import AmbientSpace
from .catalog import SurfaceSpec, lift_at
from .numerics import DegeneratePointError, Jet2, apply_J, real_pair


@dataclass(frozen=True)
class PointGeometry:
    """All pointwise invariants plus the consistency defects that built them.

    Array fields share the evaluation batch shape; ambient vectors append
    the component axis.  ``C[..., i, j, k]`` is the cubic coefficient
    real_pair(sigma(e_i, e_j), J e_k); for a Lagrangian immersion it is
    fully symmetric, and ``c_symmetry_defect`` measures how true that is
    here.  ``K`` is the ambient-identity route (curvature constant, |H|^2
    and |sigma|^2); the independent intrinsic route lives in
    gauss_curvature_intrinsic.
    """

    space: AmbientSpace
    g: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    sigma11: np.ndarray
    sigma12: np.ndarray
    sigma22: np.ndarray
    C: np.ndarray
    H: np.ndarray
    H2: np.ndarray
    sigma_sq: np.ndarray
    K: np.ndarray
    D: np.ndarray
    F: np.ndarray
    Hc: np.ndarray
    R: np.ndarray
    membership: float
    horizontality: float
    lagrangian: float
    split_residual: float
    position_defect: float
    fiber_defect: float
    c_symmetry_defect: float


def _cubic_tensor(space, sigma, je):
    sig = space.sig
    C = np.empty(np.shape(sigma[0, 0])[:-1] + (2, 2, 2))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                C[..., i, j, k] = real_pair(sigma[i, j], je[k], sig)
    return C


def _assemble(space, g, e1, e2, s11, s12, s22, diag):
    sig = space.sig
    je = (apply_J(e1), apply_J(e2))
    sigma = {(0, 0): s11, (0, 1): s12, (1, 0): s12, (1, 1): s22}
    C = _cubic_tensor(space, sigma, je)
    # index symmetry in the first two slots is structural; the swap of the
    # second/third slot is the Lagrangian property and gets measured
    c_defect = float(max(np.max(np.abs(C[..., 0, 0, 1] - C[..., 0, 1, 0])),
                         np.max(np.abs(C[..., 1, 1, 0] - C[..., 1, 0, 1]))))

    H = 0.5 * (s11 + s22)
    H2 = real_pair(H, H, sig)
    sigma_sq = (real_pair(s11, s11, sig) + 2.0 * real_pair(s12, s12, sig)
                + real_pair(s22, s22, sig))
    K = space.c / 4.0 + 2.0 * H2 - 0.5 * sigma_sq

    diff = s11 - s22
    D = (0.25 * real_pair(diff, diff, sig) - real_pair(s12, s12, sig)
         + 1j * real_pair(diff, s12, sig))

    C111 = C[..., 0, 0, 0]
    C112 = C[..., 0, 0, 1]
    C122 = C[..., 0, 1, 1]
    C222 = C[..., 1, 1, 1]
    F = 0.5 * ((C111 - 3.0 * C122) + 1j * (C222 - 3.0 * C112))
    Hc = 0.5 * ((C111 + C122) + 1j * (C112 + C222))

    R = np.sqrt(np.clip(0.5 * (space.c / 4.0 + H2 - K), 0.0, None))

    for name, arr in (("g", g), ("K", K), ("D", D), ("F", F), ("Hc", Hc)):
        if not np.all(np.isfinite(np.asarray(arr))):
            raise ValueError(f"non-finite geometry field {name!r}")

    return PointGeometry(space=space, g=g, e1=e1, e2=e2,
                         sigma11=s11, sigma12=s12, sigma22=s22, C=C,
                         H=H, H2=H2, sigma_sq=sigma_sq, K=K,
                         D=D, F=F, Hc=Hc, R=R,
                         c_symmetry_defect=c_defect, **diag)


def geometry_from_jet(lift: Jet2, space: AmbientSpace) -> PointGeometry:
    """Invariants from a second-order jet of the (lifted) immersion.

    The jet can come from the catalog, from a rescaled catalog jet, or from
    any hand-built map; nothing here assumes more than an immersed surface
    with the stated lift constraints (and it measures those rather than
    assuming them).
    """
    sig = space.sig
    g11 = real_pair(lift.d1, lift.d1, sig)
    g12 = real_pair(lift.d1, lift.d2, sig)
    g22 = real_pair(lift.d2, lift.d2, sig)
    det = g11 * g22 - g12 * g12
    if np.any(g11 <= 0.0) or np.any(det <= 0.0):
        raise DegeneratePointError("induced metric is not positive definite")
    g = np.stack([np.stack([g11, g12], axis=-1),
                  np.stack([g12, g22], axis=-1)], axis=-2)

    # Gram-Schmidt in chart order fixes the frame orientation
    p = 1.0 / np.sqrt(g11)
    r = np.sqrt(g11 / det)
    q = -g12 / np.sqrt(g11 * det)
    e1 = p[..., None] * lift.d1
    e2 = q[..., None] * lift.d1 + r[..., None] * lift.d2

    split = amb.second_form_split(lift, space)
    sc11 = split.normal[..., 0, :]
    sc12 = split.normal[..., 1, :]
    sc22 = split.normal[..., 2, :]

    pp, qq, rr = p[..., None], q[..., None], r[..., None]
    s11 = pp * pp * sc11
    s12 = pp * (qq * sc11 + rr * sc12)
    s22 = qq * qq * sc11 + 2.0 * qq * rr * sc12 + rr * rr * sc22

    diag = {
        "membership": amb.membership_defect(lift, space),
        "horizontality": amb.horizontality_defect(lift, space),
        "lagrangian": amb.lagrangian_defect(lift, space),
        "split_residual": split.split_residual,
        "position_defect": split.position_defect,
        "fiber_defect": split.fiber_defect,
    }
    return _assemble(space, g, e1, e2, s11, s12, s22, diag)


def point_geometry(spec: SurfaceSpec, a1, a2, chart=None) -> PointGeometry:
    """Catalog convenience: lift jet at chart parameters, then invariants."""
    lift = lift_at(spec, a1, a2, chart=chart)
    return geometry_from_jet(lift, spec.ambient)


def rotate_frame(pg: PointGeometry, alpha: float) -> PointGeometry:
    """The same point re-expressed in the tangent frame rotated by alpha.

    Scalar invariants must not move; the complex quantities D and
    F*conj(Hc) pick up the phase exp(-4i*alpha).  Used by covariance tests
    and by anything that needs a frame-generic evaluation.
    """
    c, s = np.cos(alpha), np.sin(alpha)
    e1 = c * pg.e1 + s * pg.e2
    e2 = -s * pg.e1 + c * pg.e2
    s11 = c * c * pg.sigma11 + 2.0 * c * s * pg.sigma12 + s * s * pg.sigma22
    s12 = (-c * s * pg.sigma11 + (c * c - s * s) * pg.sigma12
           + c * s * pg.sigma22)
    s22 = s * s * pg.sigma11 - 2.0 * c * s * pg.sigma12 + c * c * pg.sigma22
    diag = {name: getattr(pg, name)
            for name in ("membership", "horizontality", "lagrangian",
                         "split_residual", "position_defect", "fiber_defect")}
    return _assemble(pg.space, pg.g, e1, e2, s11, s12, s22, diag)


def _sigma_scale(pg):
    # circularity is compared at the scale of |sigma|^2 squared, so the
    # tolerance follows the surface instead of its parametrization
    return (1.0 + pg.sigma_sq) ** 2


def scaled_circularity(pg: PointGeometry) -> np.ndarray:
    """Pointwise |D| relative to the sigma scale; the circularity measure."""
    return np.abs(pg.D) / _sigma_scale(pg)


def circularity_route_gap(pg: PointGeometry) -> float:
    """Largest (scale-aware) gap between the two circularity routes.

    Route one reads D off the sigma-vectors directly; route two expands it
    in the cubic coefficients:

        4*Re D = C111^2 - 2*C111*C122 - 3*C122^2
                 - 3*C112^2 - 2*C112*C222 + C222^2
        Im D   = C111*C112 - C122*C222

    Disagreement means a frame or symmetry bug, so callers treat this as a
    hard error, not a tolerance to tune.
    """
    C111 = pg.C[..., 0, 0, 0]
    C112 = pg.C[..., 0, 0, 1]
    C122 = pg.C[..., 0, 1, 1]
    C222 = pg.C[..., 1, 1, 1]
    re4 = (C111 ** 2 - 2.0 * C111 * C122 - 3.0 * C122 ** 2
           - 3.0 * C112 ** 2 - 2.0 * C112 * C222 + C222 ** 2)
    expanded = 0.25 * re4 + 1j * (C111 * C112 - C122 * C222)
    return float(np.max(np.abs(expanded - pg.D) / _sigma_scale(pg)))


def circularity_defect(pg: PointGeometry, route_tol: float = 1e-10):
    """The complex circularity defect D, after both routes agree.

    D = (|s11 - s22|^2 / 4 - |s12|^2) + i <s11 - s22, s12> vanishes exactly
    when the ellipse of curvature is a circle (a point counts).
    """
    gap = circularity_route_gap(pg)
    if gap > route_tol:
        raise RuntimeError(
            f"circularity routes disagree by {gap:.3e} (tol {route_tol:.0e})")
    return pg.D


def density_moduli_gap(pg: PointGeometry) -> float:
    """Worst relative defect of |Hc|^2 = |H|^2 and |F|^2 = c/2 + |H|^2 - 2K."""
    hc_gap = np.abs(np.abs(pg.Hc) ** 2 - pg.H2) / (1.0 + pg.H2)
    f_rhs = pg.space.c / 2.0 + pg.H2 - 2.0 * pg.K
    f_gap = np.abs(np.abs(pg.F) ** 2 - f_rhs) / (1.0 + np.abs(f_rhs))
    return float(max(np.max(hc_gap), np.max(f_gap)))


def frame_densities(pg: PointGeometry, tol: float = 1e-8):
    """The cubic density F and mean density Hc, with their moduli enforced.

    |Hc|^2 must equal |H|^2, and |F|^2 must equal c/2 + |H|^2 - 2K; both are
    checked relative to their own scale.  F == 0 characterizes the
    Whitney-type examples, Hc == 0 the minimal ones.
    """
    worst = density_moduli_gap(pg)
    if worst > tol:
        raise RuntimeError(
            f"density modulus identity violated by {worst:.3e} "
            f"(tol {tol:.0e})")
    return pg.F, pg.Hc


def product_identity_check(pg: PointGeometry) -> float:
    """Defect of the product identity F * conj(Hc) against D.

    The real parts must match and the imaginary parts must match up to the
    orientation convention, so the defect is
    max(|Re(F conj Hc) - Re D|, ||Im(F conj Hc)| - |Im D||, ||F conj Hc| - |D||),
    normalized by 1 + |D|.
    """
    prod = pg.F * np.conj(pg.Hc)
    scale = 1.0 + np.abs(pg.D)
    re_gap = np.abs(prod.real - pg.D.real) / scale
    im_gap = np.abs(np.abs(prod.imag) - np.abs(pg.D.imag)) / scale
    mod_gap = np.abs(np.abs(prod) - np.abs(pg.D)) / scale
    return float(max(np.max(re_gap), np.max(im_gap), np.max(mod_gap)))


def radius_route_gap(pg: PointGeometry) -> float:
    """Largest relative spread of the three radius routes.

    Routes: the curvature identity sqrt((c/4 + |H|^2 - K) / 2) stored in
    pg.R, the direct |sigma(e1, e2)|, and |sigma11 - sigma22| / 2.  They
    coincide exactly where the ellipse is circular.
    """
    sig = pg.space.sig
    r_b = np.sqrt(np.clip(real_pair(pg.sigma12, pg.sigma12, sig), 0.0, None))
    diff = pg.sigma11 - pg.sigma22
    r_c = 0.5 * np.sqrt(np.clip(real_pair(diff, diff, sig), 0.0, None))
    worst = max(np.max(np.abs(pg.R - r_b)), np.max(np.abs(pg.R - r_c)),
                np.max(np.abs(r_b - r_c)))
    return float(worst / (1.0 + np.max(pg.R)))


def radius(pg: PointGeometry, circ_tol: float = 1e-8,
           route_tol: float = 1e-8) -> np.ndarray:
    """Radius of the (circular) ellipse of curvature, three routes checked.

    Defined only where the ellipse is a circle; a non-circular point raises,
    carrying the scaled |D| that failed the gate.  The returned value is the
    curvature-identity route; the direct routes must agree with it.
    """
    circ = float(np.max(np.abs(pg.D) / _sigma_scale(pg)))
    if circ > circ_tol:
        raise ValueError(
            f"ellipse is not circular: scaled |D| = {circ:.3e} "
            f"(tol {circ_tol:.0e}); radius is undefined")
    worst = radius_route_gap(pg)
    if worst > route_tol:
        raise RuntimeError(
            f"radius routes disagree by {worst:.3e} (tol {route_tol:.0e})")
    return pg.R


@dataclass(frozen=True)
class EllipseSample:
    """One probe of the ellipse of curvature, in (J e1, J e2) coordinates.

    ``normal`` is sigma(v, v) for the unit tangent v at angle theta;
    ``center`` is the mean curvature vector.  Samples at theta and
    theta + pi coincide: the ellipse is traced twice per turn of v.
    """

    theta: float
    normal: np.ndarray
    center: np.ndarray


def ellipse_samples(pg: PointGeometry, n_angles: int):
    """Sample sigma(v, v) on a uniform angle grid; also the circle residual.

    Returns (samples, fit_residual) with fit_residual =
    max_theta | |sigma(v,v) - H| - R |; tiny exactly when the ellipse is the
    circle of radius pg.R.
    """
    if n_angles < 8:
        raise ValueError("need n_angles >= 8 to see the ellipse")
    sig = pg.space.sig
    je = (apply_J(pg.e1), apply_J(pg.e2))

    def coords2(vec):
        return np.stack([real_pair(vec, je[0], sig),
                         real_pair(vec, je[1], sig)], axis=-1)

    center = coords2(pg.H)
    half_diff = coords2(0.5 * (pg.sigma11 - pg.sigma22))
    cross = coords2(pg.sigma12)

    samples = []
    residual = 0.0
    for theta in np.linspace(0.0, 2.0 * np.pi, n_angles, endpoint=False):
        normal = (center + np.cos(2.0 * theta) * half_diff
                  + np.sin(2.0 * theta) * cross)
        dist = np.sqrt(np.sum((normal - center) ** 2, axis=-1))
        residual = max(residual, float(np.max(np.abs(dist - pg.R))))
        samples.append(EllipseSample(float(theta), normal, center))
    return samples, residual


def gauss_curvature_intrinsic(spec: SurfaceSpec, a1, a2, chart=None,
                              step: float = 1e-3,
                              refine: bool = True) -> np.ndarray:
    """Intrinsic Gauss curvature by finite differences of the metric alone.

    Central 3x3 stencil in the chart parameters feeds the classical
    determinant formula for K in terms of E, F, G and their first/second
    derivatives.  Completely independent of the second fundamental form,
    so it cross-checks the ambient-identity route.  ``refine`` adds one
    step-halving extrapolation, cancelling the leading O(step^2) error.
    """
    if chart is None:
        chart = spec.default_chart
    if refine:
        k1 = gauss_curvature_intrinsic(spec, a1, a2, chart, step, False)
        k2 = gauss_curvature_intrinsic(spec, a1, a2, chart, step / 2, False)
        return (4.0 * k2 - k1) / 3.0
    a1 = np.asarray(a1, dtype=float)
    a2 = np.asarray(a2, dtype=float)
    offsets = (-step, 0.0, step)
    p1 = np.stack([a1 + da for da in offsets for _ in offsets])
    p2 = np.stack([a2 + db for _ in offsets for db in offsets])
    if not np.all(chart.contains(p1, p2)):
        raise ValueError("finite-difference stencil leaves the chart domain")

    lift = lift_at(spec, p1, p2, chart=chart)
    sig = spec.ambient.sig
    shape = (3, 3) + a1.shape
    E = real_pair(lift.d1, lift.d1, sig).reshape(shape)
    F = real_pair(lift.d1, lift.d2, sig).reshape(shape)
    G = real_pair(lift.d2, lift.d2, sig).reshape(shape)

    h = step
    E0, F0, G0 = E[1, 1], F[1, 1], G[1, 1]
    E_u = (E[2, 1] - E[0, 1]) / (2 * h)
    E_v = (E[1, 2] - E[1, 0]) / (2 * h)
    G_u = (G[2, 1] - G[0, 1]) / (2 * h)
    G_v = (G[1, 2] - G[1, 0]) / (2 * h)
    F_u = (F[2, 1] - F[0, 1]) / (2 * h)
    F_v = (F[1, 2] - F[1, 0]) / (2 * h)
    E_vv = (E[1, 2] - 2 * E[1, 1] + E[1, 0]) / h ** 2
    G_uu = (G[2, 1] - 2 * G[1, 1] + G[0, 1]) / h ** 2
    F_uv = (F[2, 2] - F[2, 0] - F[0, 2] + F[0, 0]) / (4 * h ** 2)

    def det3(rows):
        m = np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)
        return np.linalg.det(m)

    zero = np.zeros_like(E0)
    m1 = det3([[-0.5 * E_vv + F_uv - 0.5 * G_uu, 0.5 * E_u, F_u - 0.5 * E_v],
               [F_v - 0.5 * G_u, E0, F0],
               [0.5 * G_v, F0, G0]])
    m2 = det3([[zero, 0.5 * E_v, 0.5 * G_u],
               [0.5 * E_v, E0, F0],
               [0.5 * G_u, F0, G0]])
    return (m1 - m2) / (E0 * G0 - F0 * F0) ** 2
