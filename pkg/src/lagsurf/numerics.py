"""Signature-aware linear algebra on C^2/C^3 and second-order jet arithmetic.

Ambient points are complex numpy arrays of shape (..., m), m in {2, 3}.  The
flat real form interleaves real and imaginary parts, so six reals
(r1, ..., r6) pair into (r1 + i*r2, r3 + i*r4, r5 + i*r6).  Pairings carry a
per-component signature eps in {+1, -1}^m, which is what distinguishes the
round lift sphere (+,+,+) from the anti-De Sitter lift space (+,+,-).

Jets hold a value and all chart partials up to second order and propagate
them through arithmetic exactly (up to round-off), so no numerical
differentiation enters the geometry pipeline.  Complex conjugation is
real-linear and therefore jet-compatible; holomorphic differentiation is
deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SIG_C2 = np.array([1.0, 1.0])
SIG_S5 = np.array([1.0, 1.0, 1.0])
SIG_H51 = np.array([1.0, 1.0, -1.0])

# Gram systems with condition number above this mark a degenerate
# (non-immersed or numerically singular) point.
GRAM_COND_LIMIT = 1e8


class DegeneratePointError(ValueError):
    """Gram system too ill-conditioned to invert (singular point)."""


def complex_from_reals(flat):
    """Pair a flat real vector (..., 2m) into complex components (..., m).

    Convention: consecutive reals pair as (r1 + i*r2, r3 + i*r4, ...).
    """
    flat = np.asarray(flat, dtype=float)
    if flat.shape[-1] % 2:
        raise ValueError("flat real vector must have even length")
    return flat[..., 0::2] + 1j * flat[..., 1::2]


def reals_from_complex(z):
    """Flatten complex components (..., m) to interleaved reals (..., 2m)."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape[:-1] + (2 * z.shape[-1],))
    out[..., 0::2] = z.real
    out[..., 1::2] = z.imag
    return out


def herm_pair(a, b, sig):
    """Hermitian pairing sum_k eps_k * a_k * conj(b_k).

    Conjugate-symmetric: herm_pair(a, b) == conj(herm_pair(b, a)).  The
    second slot carries the conjugation.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    return np.sum(np.asarray(sig) * a * np.conj(b), axis=-1)


def real_pair(a, b, sig):
    """Real part of the Hermitian pairing: the (pseudo-)Riemannian metric."""
    return herm_pair(a, b, sig).real


def norm_sq(a, sig):
    """Signature-aware squared norm real_pair(a, a); may be negative."""
    return real_pair(a, a, sig)


def apply_J(a):
    """Multiply every complex component by i.  apply_J(apply_J(a)) == -a."""
    return 1j * np.asarray(a, dtype=complex)


def _gram(basis, sig):
    stacked = np.stack(basis, axis=-2)  # (..., k, m)
    prod = np.einsum("...am,...bm->...ab", stacked * np.asarray(sig),
                     np.conj(stacked))
    return prod.real, stacked


def span_coefficients(v, basis, sig):
    """Real coefficients x with v ~ sum_a x_a basis_a under real_pair.

    Solves the (possibly indefinite) Gram system explicitly; orthonormality
    of the basis is never assumed.  Raises DegeneratePointError when the
    Gram condition number exceeds GRAM_COND_LIMIT.
    """
    gram, stacked = _gram(basis, sig)
    cond = np.linalg.cond(gram)
    if np.any(~np.isfinite(cond)) or np.any(cond > GRAM_COND_LIMIT):
        raise DegeneratePointError(
            f"Gram condition number {np.max(cond):.3e} exceeds "
            f"{GRAM_COND_LIMIT:.0e}; singular or non-immersed point")
    rhs = np.einsum("...m,...am->...a",
                    np.asarray(v) * np.asarray(sig), np.conj(stacked)).real
    return np.linalg.solve(gram, rhs)


def project_onto_span(v, basis, sig):
    """Orthogonal projection of v onto the real span of basis under real_pair.

    Returns the unique w in span(basis) with real_pair(v - w, b) = 0 for all
    basis vectors b.  Idempotent.
    """
    coeffs = span_coefficients(v, basis, sig)
    stacked = np.stack(basis, axis=-2)
    return np.einsum("...a,...am->...m", coeffs.astype(complex), stacked)


@dataclass(frozen=True)
class Jet2:
    """Second-order jet of a map of two real chart parameters.

    All six fields share one array shape: scalar jets are shaped like the
    evaluation batch, stacked ambient jets append a trailing component axis.
    ``d12`` is the single stored mixed partial, so the symmetry of second
    derivatives is structural.  Arithmetic follows the Leibniz/chain rules
    exactly up to round-off.
    """

    v: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    d11: np.ndarray
    d12: np.ndarray
    d22: np.ndarray

    # keep numpy scalars/arrays from hijacking mixed arithmetic
    __array_ufunc__ = None

    @classmethod
    def variables(cls, a1, a2):
        """Seed jets of the two chart parameters themselves."""
        a1, a2 = np.broadcast_arrays(np.asarray(a1, dtype=float),
                                     np.asarray(a2, dtype=float))
        one = np.ones_like(a1)
        zero = np.zeros_like(a1)
        j1 = cls(a1.copy(), one, zero, zero, zero, zero)
        j2 = cls(a2.copy(), zero, one, zero, zero, zero)
        return j1, j2

    @classmethod
    def stack(cls, components):
        """Stack scalar jets into one vector-valued jet (trailing axis)."""
        fields = []
        for name in ("v", "d1", "d2", "d11", "d12", "d22"):
            fields.append(np.stack([np.asarray(getattr(j, name), dtype=complex)
                                    for j in components], axis=-1))
        return cls(*fields)

    def _binary(self, other, op):
        if isinstance(other, Jet2):
            return Jet2(*(op(a, b) for a, b in zip(self._fields(),
                                                   other._fields())))
        return NotImplemented

    def _fields(self):
        return (self.v, self.d1, self.d2, self.d11, self.d12, self.d22)

    def __add__(self, other):
        if isinstance(other, Jet2):
            return self._binary(other, lambda a, b: a + b)
        return Jet2(self.v + other, self.d1, self.d2,
                    self.d11, self.d12, self.d22)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(*(-f for f in self._fields()))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet2):
            return Jet2(*(f * other for f in self._fields()))
        a, b = self, other
        return Jet2(
            a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + a.v * b.d2,
            a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11,
            a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12,
            a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22,
        )

    __rmul__ = __mul__

    def reciprocal(self):
        """Jet of 1/f.  Errors when the value vanishes anywhere."""
        if np.any(self.v == 0):
            raise ZeroDivisionError("jet division by a zero-valued jet")
        inv = 1.0 / self.v
        inv2 = inv * inv
        inv3 = inv2 * inv
        return Jet2(
            inv,
            -self.d1 * inv2,
            -self.d2 * inv2,
            2.0 * self.d1 * self.d1 * inv3 - self.d11 * inv2,
            2.0 * self.d1 * self.d2 * inv3 - self.d12 * inv2,
            2.0 * self.d2 * self.d2 * inv3 - self.d22 * inv2,
        )

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            return self * other.reciprocal()
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def conj(self):
        """Componentwise complex conjugate (a real-linear map)."""
        return Jet2(*(np.conj(f) for f in self._fields()))

    def compose_scalar(self, f, df, d2f):
        """Chain rule through a scalar function given f, f', f''."""
        fv = f(self.v)
        d1f = df(self.v)
        d2fv = d2f(self.v)
        return Jet2(
            fv,
            d1f * self.d1,
            d1f * self.d2,
            d2fv * self.d1 * self.d1 + d1f * self.d11,
            d2fv * self.d1 * self.d2 + d1f * self.d12,
            d2fv * self.d2 * self.d2 + d1f * self.d22,
        )


def jet_sin(j: Jet2) -> Jet2:
    return j.compose_scalar(np.sin, np.cos, lambda x: -np.sin(x))


def jet_cos(j: Jet2) -> Jet2:
    return j.compose_scalar(np.cos, lambda x: -np.sin(x), lambda x: -np.cos(x))
