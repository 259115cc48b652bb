"""Hyperbolic confidence bands on the linear predictor and the response probability."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .critical import CriticalValue, solve_critical
from .errors import GeometryError
from .geometry import ConeAngle, interval_cone_angle, unrestricted_angle
from .glm import Link, ModelFit

BandSide = Literal["two_sided", "upper", "lower"]
DEFAULT_GRID = 201


@dataclass(frozen=True)
class BandSpec:
    """What band to build.  ``interval=None`` means the whole real line."""

    interval: tuple[float, float] | None
    side: BandSide = "two_sided"
    level: float = 0.95

    def __post_init__(self):
        if self.side not in ("two_sided", "upper", "lower"):
            raise ValueError(f"side must be two_sided, upper or lower, got {self.side!r}")
        if not 0.5 < self.level < 0.9999:
            raise ValueError(f"level must be in (0.5, 0.9999), got {self.level}")
        if self.interval is not None:
            a, b = (float(v) for v in self.interval)
            if not (math.isfinite(a) and math.isfinite(b) and a < b):
                raise ValueError(f"interval must be finite with a < b, got {self.interval}")
            object.__setattr__(self, "interval", (a, b))

    @property
    def critical_side(self) -> str:
        return "two_sided" if self.side == "two_sided" else "one_sided"


@dataclass(frozen=True, eq=False)
class BandCurve:
    link: Link
    spec: BandSpec
    cone: ConeAngle
    critical: CriticalValue
    grid: np.ndarray
    center: np.ndarray
    se: np.ndarray
    half_width: np.ndarray
    lower_p: np.ndarray | None
    upper_p: np.ndarray | None

    @property
    def w(self) -> float:
        return self.critical.w

    @property
    def fitted_p(self) -> np.ndarray:
        return self.link.inverse(self.center)

    CSV_COLUMNS = ("x", "center_linear", "se", "lower_p", "upper_p")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.CSV_COLUMNS)
        for i, x in enumerate(self.grid):
            writer.writerow((
                repr(float(x)),
                repr(float(self.center[i])),
                repr(float(self.se[i])),
                "" if self.lower_p is None else repr(float(self.lower_p[i])),
                "" if self.upper_p is None else repr(float(self.upper_p[i])),
            ))
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "link": self.link.value,
            "side": self.spec.side,
            "level": self.spec.level,
            "interval": None if self.spec.interval is None else list(self.spec.interval),
            "w": self.critical.w,
            "phi": self.cone.phi,
            "achieved_coverage": self.critical.achieved_coverage,
            "x": self.grid.tolist(),
            "center_linear": self.center.tolist(),
            "se": self.se.tolist(),
            "lower_p": None if self.lower_p is None else self.lower_p.tolist(),
            "upper_p": None if self.upper_p is None else self.upper_p.tolist(),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def standard_error(fit: ModelFit | np.ndarray, x):
    """``sqrt((1, x) V (1, x)')`` with ``V`` the coefficient covariance.

    Accepts a :class:`ModelFit` or the covariance matrix itself.
    """
    v = fit.info_inv if isinstance(fit, ModelFit) else np.asarray(fit, dtype=float)
    x = np.asarray(x, dtype=float)
    q = v[0, 0] + 2.0 * v[0, 1] * x + v[1, 1] * x * x
    scale = np.abs(v[0, 0]) + 2 * np.abs(v[0, 1] * x) + np.abs(v[1, 1]) * x * x
    if np.any(q < -1e-14 * np.maximum(scale, 1.0)) or np.any(np.isnan(q)):
        raise GeometryError("negative variance for the linear predictor")
    se = np.sqrt(np.maximum(q, 0.0))
    return float(se) if se.ndim == 0 else se


def band_critical_value(fit: ModelFit, spec: BandSpec) -> tuple[ConeAngle, CriticalValue]:
    if spec.interval is None:
        cone = unrestricted_angle()
    else:
        cone = interval_cone_angle(fit.info_inv, *spec.interval)
    return cone, solve_critical(cone.phi, spec.level, spec.critical_side)


def build_band(
    fit: ModelFit,
    spec: BandSpec,
    grid_size: int = DEFAULT_GRID,
    x_range: tuple[float, float] | None = None,
) -> BandCurve:
    """Evaluate the band on ``grid_size`` equally spaced points.

    The grid spans ``spec.interval``; an unrestricted spec needs an explicit
    ``x_range`` for the export grid.  Upper bands carry only ``upper_p`` and
    lower bands only ``lower_p``; both one-sided variants use the same
    critical value.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    lo_hi = spec.interval if spec.interval is not None else x_range
    if lo_hi is None:
        raise ValueError("an unrestricted band needs x_range for its grid")

    cone, crit = band_critical_value(fit, spec)
    grid = np.linspace(lo_hi[0], lo_hi[1], grid_size)
    center = fit.beta_hat.linear_predictor(grid)
    se = standard_error(fit, grid)
    half = crit.w * se
    inv = fit.link.inverse
    lower = inv(center - half) if spec.side in ("two_sided", "lower") else None
    upper = inv(center + half) if spec.side in ("two_sided", "upper") else None
    return BandCurve(
        link=fit.link,
        spec=spec,
        cone=cone,
        critical=crit,
        grid=grid,
        center=center,
        se=se,
        half_width=half,
        lower_p=lower,
        upper_p=upper,
    )
