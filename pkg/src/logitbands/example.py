"""Worked example on the bundled mutagenicity data, checked against published values."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from . import published
from .critical import scheffe_value, solve_critical
from .data import bundled_lavelle_dataset
from .geometry import interval_cone_angle, unrestricted_angle
from .glm import Link, fit

# Published values are rounded to three decimals (u_b to mixed precision).
COEF_TOL = 1e-3
COV_TOL = 5e-4
GEOM_TOL = 5e-3
CRIT_TOL = 1e-2


@dataclass(frozen=True)
class ReportRow:
    quantity: str
    computed: float
    published: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return abs(self.computed - self.published) <= self.tolerance

    def to_dict(self) -> dict:
        return {**asdict(self), "passed": self.passed}


def _interval_label(interval) -> str:
    return "(-inf, inf)" if interval is None else f"({interval[0]:g}, {interval[1]:g})"


def lavelle_report(level: float = 0.95) -> list[ReportRow]:
    model = fit(Link.LOGIT, bundled_lavelle_dataset())
    rows = [
        ReportRow("beta0", model.beta_hat.beta0, published.BETA_HAT[0], COEF_TOL),
        ReportRow("beta1", model.beta_hat.beta1, published.BETA_HAT[1], COEF_TOL),
    ]
    for i, j in ((0, 0), (0, 1), (1, 1)):
        rows.append(ReportRow(f"cov[{i},{j}]", float(model.info_inv[i, j]),
                              published.COVARIANCE[i][j], COV_TOL))

    cone = interval_cone_angle(model.info_inv, -1.3, 0.8)
    for k in range(2):
        rows.append(ReportRow(f"u_a[{k}]", float(cone.u_a[k]), published.U_A[k], GEOM_TOL))
    for k in range(2):
        rows.append(ReportRow(f"u_b[{k}]", float(cone.u_b[k]), published.U_B[k], GEOM_TOL))
    rows.append(ReportRow("phi (-1.3, 0.8)", cone.phi, published.PHI, GEOM_TOL))

    for interval, value in published.TWO_SIDED_95.items():
        phi = unrestricted_angle().phi if interval is None else interval_cone_angle(model.info_inv, *interval).phi
        w = solve_critical(phi, level, "two_sided").w
        rows.append(ReportRow(f"two-sided w {_interval_label(interval)}", w, value, CRIT_TOL))
    rows.append(ReportRow("two-sided w (-inf, inf) vs sqrt(-2 ln alpha)",
                          solve_critical(math.pi, level).w, scheffe_value(level), 5e-4))
    for interval, value in published.ONE_SIDED_95.items():
        phi = interval_cone_angle(model.info_inv, *interval).phi
        w = solve_critical(phi, level, "one_sided").w
        rows.append(ReportRow(f"one-sided w {_interval_label(interval)}", w, value, CRIT_TOL))
    return rows


def format_report(rows: list[ReportRow]) -> str:
    width = max(len(r.quantity) for r in rows)
    lines = [f"{'quantity':<{width}}  {'computed':>10}  {'published':>10}  {'tol':>7}  result"]
    for r in rows:
        lines.append(
            f"{r.quantity:<{width}}  {r.computed:>10.4f}  {r.published:>10.4f}  "
            f"{r.tolerance:>7.0e}  {'PASS' if r.passed else 'FAIL'}"
        )
    return "\n".join(lines)
