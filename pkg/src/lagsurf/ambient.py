"""Ambient model spaces and frame decompositions of the lift derivatives.

The flat space is handled directly; the curved targets are handled entirely
through their standard lifts (unit-norm for positive curvature, norm -1 in
the indefinite pairing for negative curvature).  Horizontal lifts carry all
of the surface geometry, so nothing here ever builds a chart downstairs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import (
    GRAM_COND_LIMIT,
    DegeneratePointError,
    Jet2,
    _gram,
    apply_J,
    herm_pair,
    real_pair,
)


@dataclass(frozen=True)
class AmbientSpace:
    """Target space data: holomorphic sectional curvature and lift model.

    ``lift_norm`` is the required Hermitian square of the lift (+1 on the
    sphere model, -1 on the anti-De-Sitter model, None when the target is
    flat and the immersion needs no lift at all).
    """

    model: str
    c: float
    signature: tuple[float, ...]
    lift_norm: float | None

    @property
    def sig(self) -> np.ndarray:
        return np.asarray(self.signature)

    @property
    def dim(self) -> int:
        return len(self.signature)

    @property
    def is_lifted(self) -> bool:
        return self.lift_norm is not None


C2 = AmbientSpace("c2", 0.0, (1.0, 1.0), None)
CP2 = AmbientSpace("cp2", 4.0, (1.0, 1.0, 1.0), 1.0)
CH2 = AmbientSpace("ch2", -4.0, (1.0, 1.0, -1.0), -1.0)

_BY_MODEL = {s.model: s for s in (C2, CP2, CH2)}


def space_by_model(model: str) -> AmbientSpace:
    try:
        return _BY_MODEL[model]
    except KeyError:
        raise ValueError(f"unknown ambient model {model!r}; "
                         f"expected one of {sorted(_BY_MODEL)}") from None


def membership_defect(lift: Jet2, space: AmbientSpace) -> float:
    """Max deviation of herm(psi, psi) from the required lift norm."""
    if not space.is_lifted:
        return 0.0
    dev = herm_pair(lift.v, lift.v, space.sig) - space.lift_norm
    return float(np.max(np.abs(dev)))


def horizontality_defect(lift: Jet2, space: AmbientSpace) -> float:
    """Max |herm(d_u psi, psi)| over both parameters (0 where no lift)."""
    if not space.is_lifted:
        return 0.0
    d = max(np.max(np.abs(herm_pair(du, lift.v, space.sig)))
            for du in (lift.d1, lift.d2))
    return float(d)


def lagrangian_defect(lift: Jet2, space: AmbientSpace) -> float:
    """Max |Im herm(d_u psi, d_v psi)|: vanishing makes the surface Lagrangian."""
    d = max(np.max(np.abs(herm_pair(du, dv, space.sig).imag))
            for du in (lift.d1, lift.d2) for dv in (lift.d1, lift.d2))
    return float(d)


@dataclass(frozen=True)
class FrameSplit:
    """Decomposition of the three second derivatives of the lift.

    The leading ``..., 3`` axis enumerates the parameter pairs (11, 12, 22).
    ``tangent`` holds the coefficients on (d1, d2); ``normal`` is the
    component in the span of (J d1, J d2) as an ambient vector; ``position``
    and ``fiber`` are the coefficients on the lift itself and on i*psi
    (None when the target is flat).
    """

    tangent: np.ndarray
    normal: np.ndarray
    position: np.ndarray | None
    fiber: np.ndarray | None
    split_residual: float
    position_defect: float
    fiber_defect: float


def second_form_split(lift: Jet2, space: AmbientSpace) -> FrameSplit:
    """Split d_uv psi over the adapted frame by an explicit Gram solve.

    Basis: (d1, d2, J d1, J d2) plus (psi, i psi) over a lifted target.  The
    Gram matrix uses the signature pairing and is solved as-is; no
    orthogonality is assumed.  Three consistency numbers come back with the
    split: the Euclidean residual of the reconstruction (the basis must
    actually span the second derivatives), the deviation of the position
    coefficient from -g_uv / nu, and the size of the fiber coefficient,
    which vanishes precisely when the lift is horizontal and Lagrangian.
    All three are relative, normalized by 1 + the local scale (second
    derivative magnitude, respectively |g_uv|), so they stay meaningful
    where the immersion stretches.
    """
    sig = space.sig
    basis = [lift.d1, lift.d2, apply_J(lift.d1), apply_J(lift.d2)]
    if space.is_lifted:
        basis += [lift.v, apply_J(lift.v)]
    gram, stacked = _gram(basis, sig)

    cond = np.linalg.cond(gram)
    if np.any(~np.isfinite(cond)) or np.any(cond > GRAM_COND_LIMIT):
        raise DegeneratePointError(
            f"frame Gram condition number {np.max(cond):.3e} exceeds "
            f"{GRAM_COND_LIMIT:.0e}; singular or non-immersed point")

    second = np.stack([lift.d11, lift.d12, lift.d22], axis=-2)  # (..., 3, m)
    rhs = np.einsum("...pm,...am->...pa",
                    second * sig, np.conj(stacked)).real
    # one solve per point, all three right-hand sides as matrix columns
    coeffs = np.swapaxes(np.linalg.solve(gram, np.swapaxes(rhs, -1, -2)),
                         -1, -2)

    recon = np.einsum("...pa,...am->...pm", coeffs.astype(complex), stacked)
    scale = 1.0 + np.sqrt(np.sum(np.abs(second) ** 2, axis=-1))
    residual = np.sqrt(np.sum(np.abs(second - recon) ** 2, axis=-1)) / scale

    normal = np.einsum("...pa,...am->...pm",
                       coeffs[..., 2:4].astype(complex), stacked[..., 2:4, :])
    tangent = coeffs[..., 0:2]

    if space.is_lifted:
        position = coeffs[..., 4]
        fiber = coeffs[..., 5]
        g = np.stack([real_pair(lift.d1, lift.d1, sig),
                      real_pair(lift.d1, lift.d2, sig),
                      real_pair(lift.d2, lift.d2, sig)], axis=-1)
        gscale = 1.0 + np.abs(g)
        position_defect = float(
            np.max(np.abs(position + g / space.lift_norm) / gscale))
        fiber_defect = float(np.max(np.abs(fiber) / gscale))
    else:
        position = fiber = None
        position_defect = fiber_defect = 0.0

    return FrameSplit(tangent=tangent, normal=normal, position=position,
                      fiber=fiber,
                      split_residual=float(np.max(residual)),
                      position_defect=position_defect,
                      fiber_defect=fiber_defect)
