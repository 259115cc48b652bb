"""Simultaneous coverage probabilities over a cone and their critical values.

For a standard bivariate normal ``z`` and a cone of directions with opening
angle ``phi``, the two-sided coverage is

    P( sup_u |u'z| / |u| < w )
      = (phi/pi) F2(w^2) + (2/pi) * int_0^{(pi-phi)/2} F2(w^2 / cos^2 psi) dpsi

and the upper one-sided coverage is

    P( sup_u u'z / |u| < w )
      = (phi/2pi) F2(w^2) + (pi-phi)/(2pi) + F1(w^2) / 2

where ``F1`` and ``F2`` are the chi-squared CDFs with 1 and 2 degrees of
freedom.  The one-sided quantity also has an integral form, used here as an
independent check of the closed form.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Literal

import numpy as np
from scipy import optimize, special

from .errors import SolverError
from .quadrature import integrate

Side = Literal["two_sided", "one_sided"]
Method = Literal["supremum", "region"]

QUAD_TOL = 1e-13
COVERAGE_TOL = 1e-10
_PI = math.pi


def chi2_cdf(df: int, x):
    """Chi-squared CDF for 1 or 2 degrees of freedom, in closed form."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("chi-squared argument must be nonnegative")
    if df == 2:
        out = -np.expm1(-0.5 * x)
    elif df == 1:
        out = special.erf(np.sqrt(0.5 * x))
    else:
        raise ValueError(f"only df in {{1, 2}} is supported, got {df}")
    return float(out) if out.ndim == 0 else out


def _f2(x):
    # Scalars go through libm so the half-plane case matches 1 - exp(-w^2/2) bit for bit.
    if np.ndim(x) == 0:
        return -math.expm1(-0.5 * float(x))
    return -np.expm1(-0.5 * x)


def _check_phi(phi: float) -> float:
    phi = float(phi)
    if not phi > 0.0 or math.isnan(phi):
        raise ValueError(f"cone angle must be in (0, pi], got {phi}")
    if phi > _PI:
        if phi > _PI + 1e-9:
            warnings.warn(f"cone angle {phi} exceeds pi; clamped to pi", RuntimeWarning, stacklevel=3)
        phi = _PI
    return phi


def _check_w(w: float) -> float:
    w = float(w)
    if not w > 0.0:
        raise ValueError(f"critical value must be positive, got {w}")
    return w


def _two_sided_supremum(w: float, phi: float) -> tuple[float, float]:
    w2 = w * w
    quad = integrate(lambda psi: _f2(w2 / np.cos(psi) ** 2), 0.0, 0.5 * (_PI - phi), QUAD_TOL)
    value = phi / _PI * _f2(w2) + 2.0 / _PI * quad.value
    return value, 2.0 / _PI * quad.error


def _two_sided_region(w: float, phi: float) -> tuple[float, float]:
    # Disc of radius w plus four wedge pieces between the disc and the strip edges.
    w2 = w * w
    disc = _f2(w2)
    wedge = integrate(
        lambda psi: np.exp(-0.5 * w2) - np.exp(-0.5 * w2 / np.cos(psi) ** 2),
        0.0,
        0.5 * (_PI - phi),
        QUAD_TOL,
    )
    return disc + 2.0 / _PI * wedge.value, 2.0 / _PI * wedge.error


def _one_sided_closed(w: float, phi: float) -> tuple[float, float]:
    w2 = w * w
    value = phi / (2 * _PI) * _f2(w2) + (_PI - phi) / (2 * _PI) + 0.5 * math.erf(w / math.sqrt(2.0))
    return value, 0.0


def _one_sided_quadrature(w: float, phi: float) -> tuple[float, float]:
    w2 = w * w
    quad = integrate(lambda t: _f2(w2 / np.cos(t) ** 2), 0.0, 0.5 * _PI, QUAD_TOL)
    value = phi / (2 * _PI) * _f2(w2) + (_PI - phi) / (2 * _PI) + quad.value / _PI
    return value, quad.error / _PI


_EVALUATORS = {
    ("two_sided", "supremum"): _two_sided_supremum,
    ("two_sided", "region"): _two_sided_region,
    ("one_sided", "supremum"): _one_sided_quadrature,
    ("one_sided", "region"): _one_sided_closed,
}

# One-sided "region" is the closed form; two-sided has no closed form.
DEFAULT_METHOD: dict[str, str] = {"two_sided": "supremum", "one_sided": "region"}


def coverage(w: float, phi: float, side: Side = "two_sided", method: Method | None = None) -> tuple[float, float]:
    """Coverage probability and its quadrature error bound."""
    method = method or DEFAULT_METHOD[side]
    try:
        fn = _EVALUATORS[(side, method)]
    except KeyError:
        raise ValueError(f"unknown side/method combination {side!r}/{method!r}") from None
    value, err = fn(_check_w(w), _check_phi(phi))
    return min(max(value, 0.0), 1.0), err


def coverage_two_sided(w: float, phi: float) -> float:
    return coverage(w, phi, "two_sided", "supremum")[0]


def coverage_two_sided_region(w: float, phi: float) -> float:
    """Same probability as :func:`coverage_two_sided`, summed as disc plus wedges."""
    return coverage(w, phi, "two_sided", "region")[0]


def coverage_one_sided_closed(w_u: float, phi: float) -> float:
    return coverage(w_u, phi, "one_sided", "region")[0]


def coverage_one_sided_quadrature(w_u: float, phi: float) -> float:
    return coverage(w_u, phi, "one_sided", "supremum")[0]


@dataclass(frozen=True)
class CriticalValue:
    w: float
    phi: float
    level: float
    side: str
    method: str
    achieved_coverage: float
    quadrature_error_bound: float
    iterations: int
    bracket: tuple[float, float]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["bracket"] = list(self.bracket)
        return d


def pointwise_quantile(level: float, side: Side = "two_sided") -> float:
    """Normal quantile giving ``level`` coverage at a single x."""
    alpha = 1.0 - level
    return float(special.ndtri(1.0 - alpha / 2.0 if side == "two_sided" else 1.0 - alpha))


def scheffe_value(level: float) -> float:
    """Unrestricted two-sided critical value ``sqrt(-2 ln alpha)``."""
    return math.sqrt(-2.0 * math.log(1.0 - level))


def solve_critical(
    phi: float,
    level: float = 0.95,
    side: Side = "two_sided",
    method: Method | None = None,
    tol: float = COVERAGE_TOL,
) -> CriticalValue:
    """Critical value ``w`` whose simultaneous coverage over the cone equals ``level``.

    Brent's method on ``[pointwise quantile, Scheffe value + 0.5]``.  The
    coverage is increasing in ``w`` and never exceeds the single-point
    coverage, so the lower end of the bracket is never above the root.

    Raises
    ------
    ValueError
        ``level`` outside (0.5, 0.9999) or ``phi`` outside (0, pi].
    SolverError
        The bracket does not straddle the root or the tolerance is not met.
    """
    if side not in DEFAULT_METHOD:
        raise ValueError(f"side must be 'two_sided' or 'one_sided', got {side!r}")
    if not 0.5 < level < 0.9999:
        raise ValueError(f"confidence level must be in (0.5, 0.9999), got {level}")
    phi = _check_phi(phi)
    method = method or DEFAULT_METHOD[side]

    lo = pointwise_quantile(level, side)
    hi = scheffe_value(level) + 0.5

    def g(w):
        return coverage(w, phi, side, method)[0] - level

    g_lo, g_hi = g(lo), g(hi)
    if abs(g_lo) <= tol:
        root, iterations = lo, 0
    elif g_lo > 0 or g_hi < 0:
        raise SolverError(
            f"bracket [{lo:.6g}, {hi:.6g}] does not contain the root "
            f"(coverage - level = {g_lo:.3g}, {g_hi:.3g}; phi={phi}, side={side})"
        )
    else:
        root, info = optimize.brentq(g, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps,
                                     maxiter=200, full_output=True, disp=False)
        if not info.converged:
            raise SolverError(f"root finding did not converge: {info.flag}")
        iterations = info.iterations
    achieved, err = coverage(root, phi, side, method)
    if abs(achieved - level) > tol:
        raise SolverError(
            f"achieved coverage {achieved!r} misses level {level} by {abs(achieved - level):.3g}"
        )
    return CriticalValue(
        w=float(root),
        phi=phi,
        level=level,
        side=side,
        method=method,
        achieved_coverage=float(achieved),
        quadrature_error_bound=float(err),
        iterations=int(iterations),
        bracket=(lo, hi),
    )
