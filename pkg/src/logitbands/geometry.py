"""Reduce the covariance of the fitted coefficients to a single cone angle.

With ``B`` the symmetric square root of the coefficient covariance, the
vectors ``u = B (1, x)'`` for ``x`` in ``[a, b]`` sweep a planar cone.  Its
opening angle ``phi`` is all the coverage formulas need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, NotPSDError

PSD_TOL = 1e-12
MAX_CONDITION = 1e12


@dataclass(frozen=True, eq=False)
class ConeAngle:
    phi: float
    u_a: np.ndarray | None = None
    u_b: np.ndarray | None = None

    @property
    def unrestricted(self) -> bool:
        return self.u_a is None

    def to_dict(self) -> dict:
        return {
            "phi": self.phi,
            "u_a": None if self.u_a is None else self.u_a.tolist(),
            "u_b": None if self.u_b is None else self.u_b.tolist(),
        }


def _as_symmetric_2x2(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise GeometryError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise GeometryError("matrix has non-finite entries")
    scale = max(np.max(np.abs(m)), 1.0)
    if abs(m[0, 1] - m[1, 0]) > 1e-12 * scale:
        raise GeometryError(f"matrix is not symmetric: {m.tolist()}")
    off = 0.5 * (m[0, 1] + m[1, 0])
    return np.array([[m[0, 0], off], [off, m[1, 1]]])


def sqrt_psd_2x2(m) -> np.ndarray:
    """Unique symmetric positive semi-definite square root of a 2x2 matrix.

    Uses the closed form ``(M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M))``.
    A slightly negative determinant (rounding) is treated as zero.

    Raises
    ------
    NotPSDError
        If an eigenvalue is below ``-1e-12`` (relative to the matrix scale).
    """
    m = _as_symmetric_2x2(m)
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[0, 1]
    disc = math.sqrt(max((0.5 * (m[0, 0] - m[1, 1])) ** 2 + m[0, 1] ** 2, 0.0))
    lam_min = 0.5 * tr - disc
    scale = max(abs(tr), 1.0)
    if lam_min < -PSD_TOL * scale:
        raise NotPSDError(f"matrix is not positive semi-definite (min eigenvalue {lam_min:.3g})")
    s = math.sqrt(max(det, 0.0))
    denom = tr + 2.0 * s
    if denom <= 0.0:
        if tr == 0.0 and np.all(m == 0.0):
            return np.zeros((2, 2))
        raise NotPSDError("matrix has no positive semi-definite square root")
    return (m + s * np.eye(2)) / math.sqrt(denom)


def condition_number(m) -> float:
    m = _as_symmetric_2x2(m)
    ev = np.linalg.eigvalsh(m)
    if ev[0] <= 0:
        return math.inf
    with np.errstate(over="ignore"):
        return float(ev[1] / ev[0])


def cone_angle(b, a: float, b_end: float) -> ConeAngle:
    """Angle between ``B (1, a)'`` and ``B (1, b_end)'``.

    Computed as ``atan2(|u_a x u_b|, u_a . u_b)``, which equals the arccos of
    the normalized dot product but stays accurate when the angle is near 0
    or pi, and can never produce NaN.  The cross product uses the identity
    ``B p x B q = det(B) (p x q) = det(B) (b_end - a)``, which avoids the
    cancellation between nearly parallel vectors on short intervals.
    """
    if not (math.isfinite(a) and math.isfinite(b_end)):
        raise GeometryError(f"interval endpoints must be finite, got ({a}, {b_end})")
    if not a < b_end:
        raise GeometryError(f"interval must satisfy a < b, got ({a}, {b_end})")
    b = np.asarray(b, dtype=float)
    u_a = b @ np.array([1.0, a])
    u_b = b @ np.array([1.0, b_end])
    na, nb = np.linalg.norm(u_a), np.linalg.norm(u_b)
    if na == 0.0 or nb == 0.0:
        raise GeometryError("zero-length direction vector; the square-root matrix is degenerate")
    cross = abs((b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]) * (b_end - a))
    return ConeAngle(phi=math.atan2(cross, float(u_a @ u_b)), u_a=u_a, u_b=u_b)


def unrestricted_angle() -> ConeAngle:
    """The whole real line: the cone opens to a half-plane, ``phi = pi``."""
    return ConeAngle(phi=math.pi)


def interval_cone_angle(info_inv, a: float, b: float) -> ConeAngle:
    """Cone angle for a fitted covariance matrix over ``(a, b)``.

    Raises
    ------
    GeometryError
        When the covariance is numerically rank-1 (condition number > 1e12).
    """
    cond = condition_number(info_inv)
    if cond > MAX_CONDITION:
        raise GeometryError(f"covariance matrix is numerically singular (condition {cond:.3g})")
    return cone_angle(sqrt_psd_2x2(info_inv), a, b)
