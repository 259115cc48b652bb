"""Monte Carlo estimate of the simultaneous coverage error of fitted bands.

Each replication draws Bernoulli responses on a fixed design, refits the
model, rebuilds the band over the study interval, and records whether the
true linear predictor stays inside it everywhere on a dense check grid.

Replication ``i`` draws from its own stream seeded by ``(seed, i)``, so a
run split across worker processes is bit-identical to a serial one.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Literal, Sequence, Union

import numpy as np

from . import published
from .critical import solve_critical
from .errors import BandsError, GeometryError, SimulationError
from .geometry import interval_cone_angle
from .glm import Coefficients, FitConfig, Link, _fit_arrays, _information, _inverse_2x2, is_separated

Design = Literal["equal", "endpoint_concentrated", "center_concentrated"]
IntervalKind = Union[Literal["narrow", "wide", "unrestricted"], tuple]

INTERVAL_PROBS = {
    "narrow": (0.3, 0.7),
    "wide": (0.1, 0.9),
    "unrestricted": (1e-10, 1.0 - 1e-10),
}
CHECK_GRID = 1001


def interval_endpoints(beta, p_lo: float, p_hi: float, link: Link | str = Link.LOGIT) -> tuple[float, float]:
    """Predictor values where the true response probability equals ``p_lo`` and ``p_hi``.

    ``x = (g(p) - beta0) / beta1`` with ``g`` the link; the pair is
    returned in increasing order, so a decreasing curve swaps them.
    """
    beta = Coefficients.of(beta)
    if beta.beta1 == 0.0:
        raise ValueError("slope is zero: interval endpoints are undefined")
    if not 0.0 < p_lo < p_hi < 1.0:
        raise ValueError(f"need 0 < p_lo < p_hi < 1, got ({p_lo}, {p_hi})")
    g = Link(link)
    xa = (float(g(p_lo)) - beta.beta0) / beta.beta1
    xb = (float(g(p_hi)) - beta.beta0) / beta.beta1
    return (xa, xb) if xa < xb else (xb, xa)


def study_interval(beta, kind: IntervalKind, link: Link | str = Link.LOGIT) -> tuple[float, float]:
    if isinstance(kind, str):
        if kind not in INTERVAL_PROBS:
            raise ValueError(f"unknown interval kind {kind!r}")
        return interval_endpoints(beta, *INTERVAL_PROBS[kind], link=link)
    a, b = (float(v) for v in kind)
    if not a < b:
        raise ValueError(f"explicit interval needs a < b, got ({a}, {b})")
    return a, b


def generate_design(a: float, b: float, n: int, design: Design = "equal") -> np.ndarray:
    """``n`` predictor values in ``[a, b]``.

    ``equal`` spaces them evenly, endpoints included.
    ``endpoint_concentrated`` maps evenly spaced ``z`` in [0, 1] through
    ``z**6``, piling points up near ``a``.  ``center_concentrated`` maps
    evenly spaced ``z`` in [-1, 1] through ``z**5``, piling points up near
    the midpoint.
    """
    if not a < b:
        raise ValueError(f"need a < b, got ({a}, {b})")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if design == "equal":
        x = np.linspace(a, b, n)
    elif design == "endpoint_concentrated":
        x = (b - a) * np.linspace(0.0, 1.0, n) ** 6 + a
    elif design == "center_concentrated":
        x = 0.5 * (b - a) * np.linspace(-1.0, 1.0, n) ** 5 + 0.5 * (a + b)
    else:
        raise ValueError(f"unknown design {design!r}")
    return np.clip(x, a, b)


@dataclass(frozen=True)
class SimConfig:
    """One cell of a coverage study.

    ``generator="literal"`` draws responses with probability
    ``1 / (1 + exp(beta0 + beta1 x))``, i.e. the model with the sign of
    ``beta_true`` flipped; the true curve checked for coverage flips with it.
    ``side="one_sided"`` checks the upper band.
    """

    beta_true: Coefficients
    n: int
    replications: int
    alpha: float = 0.05
    link: Link = Link.LOGIT
    interval: IntervalKind = "wide"
    design: Design = "equal"
    side: Literal["two_sided", "one_sided"] = "two_sided"
    seed: int = 0
    generator: Literal["model", "literal"] = "model"
    check_grid: int = CHECK_GRID

    def __post_init__(self):
        object.__setattr__(self, "beta_true", Coefficients.of(self.beta_true))
        object.__setattr__(self, "link", Link(self.link))
        if not isinstance(self.interval, str):
            object.__setattr__(self, "interval", tuple(float(v) for v in self.interval))
        if self.n < 4:
            raise ValueError(f"n must be at least 4, got {self.n}")
        if self.replications < 1:
            raise ValueError("replications must be at least 1")
        if not 0.0 < self.alpha < 0.5:
            raise ValueError(f"alpha must be in (0, 0.5), got {self.alpha}")
        if self.side not in ("two_sided", "one_sided"):
            raise ValueError(f"unknown side {self.side!r}")
        if self.generator not in ("model", "literal"):
            raise ValueError(f"unknown generator {self.generator!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit nonnegative integer")
        if self.check_grid < 2:
            raise ValueError("check_grid must be at least 2")

    @property
    def endpoints(self) -> tuple[float, float]:
        return study_interval(self.beta_true, self.interval, self.link)

    @property
    def generating_beta(self) -> np.ndarray:
        b = self.beta_true.as_array()
        return -b if self.generator == "literal" else b

    def to_dict(self) -> dict:
        return {
            "beta_true": [self.beta_true.beta0, self.beta_true.beta1],
            "n": self.n,
            "replications": self.replications,
            "alpha": self.alpha,
            "link": self.link.value,
            "interval": self.interval if isinstance(self.interval, str) else list(self.interval),
            "endpoints": list(self.endpoints),
            "design": self.design,
            "side": self.side,
            "seed": self.seed,
            "generator": self.generator,
            "check_grid": self.check_grid,
        }


@dataclass(frozen=True)
class CoverageReport:
    estimated_error: float
    std_error: float
    replications_used: int
    fit_failures: int
    misses: int
    seed: int
    config: dict = field(default_factory=dict)

    CSV_COLUMNS = ("beta0", "beta1", "n", "interval", "a", "b", "design", "side", "alpha",
                   "error", "std_error", "replications_used", "fit_failures", "seed")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def csv_row(self) -> tuple:
        c = self.config
        return (
            repr(c["beta_true"][0]), repr(c["beta_true"][1]), c["n"],
            c["interval"] if isinstance(c["interval"], str) else "explicit",
            repr(c["endpoints"][0]), repr(c["endpoints"][1]), c["design"], c["side"],
            repr(c["alpha"]), repr(self.estimated_error), repr(self.std_error),
            self.replications_used, self.fit_failures, self.seed,
        )


def reports_to_csv(reports: Sequence[CoverageReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CoverageReport.CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


# --------------------------------------------------------------------------- #
# Containment checks
# --------------------------------------------------------------------------- #


def band_contains(center, half_width, truth, side: str = "two_sided") -> bool:
    """Whether ``truth`` lies inside the band at every grid point."""
    if side == "two_sided":
        return bool(np.all((center - half_width < truth) & (truth < center + half_width)))
    return bool(np.all(truth < center + half_width))


def grid_sup_statistic(delta, cov, grid, side: str = "two_sided") -> float:
    """``max_x (c'delta) / se(x)`` over the grid (absolute value if two-sided).

    ``delta`` is ``beta_hat - beta_true``; one-sided uses ``-c'delta`` so
    that exceeding ``w`` means the truth is above the upper band.
    """
    lin = delta[0] + delta[1] * grid
    se = np.sqrt(cov[0, 0] + 2 * cov[0, 1] * grid + cov[1, 1] * grid * grid)
    t = lin / se
    return float(np.max(np.abs(t)) if side == "two_sided" else np.max(-t))


def exact_sup_statistic(delta, cov, a: float, b: float, side: str = "two_sided") -> float:
    """Supremum of the same ratio over the continuous interval ``[a, b]``.

    The ratio of an affine function to ``se(x)`` has at most one interior
    stationary point, at ``x* = (d1 V00 - d0 V01) / (d0 V11 - d1 V01)``.
    """
    d0, d1 = float(delta[0]), float(delta[1])
    if side != "two_sided":
        d0, d1 = -d0, -d1
    cands = [a, b]
    den = d0 * cov[1, 1] - d1 * cov[0, 1]
    if den != 0.0:
        xs = (d1 * cov[0, 0] - d0 * cov[0, 1]) / den
        if a < xs < b:
            cands.append(xs)
    xs = np.array(cands)
    t = (d0 + d1 * xs) / np.sqrt(cov[0, 0] + 2 * cov[0, 1] * xs + cov[1, 1] * xs * xs)
    return float(np.max(np.abs(t)) if side == "two_sided" else np.max(t))


# --------------------------------------------------------------------------- #
# Replications
# --------------------------------------------------------------------------- #


@dataclass(frozen=True, eq=False)
class ReplicationOutcome:
    """``status`` is ``"covered"``, ``"missed"`` or ``"failed"``."""

    index: int
    status: str
    beta_hat: np.ndarray | None = None
    cov: np.ndarray | None = None
    phi: float | None = None
    w: float | None = None
    sup_statistic: float | None = None


@dataclass(frozen=True, eq=False)
class _Context:
    config: SimConfig
    a: float
    b: float
    x: np.ndarray
    p_true: np.ndarray
    trials: np.ndarray
    grid: np.ndarray
    truth: np.ndarray


def _context(config: SimConfig) -> _Context:
    a, b = config.endpoints
    x = generate_design(a, b, config.n, config.design)
    gb = config.generating_beta
    p_true = config.link.inverse(gb[0] + gb[1] * x)
    grid = np.linspace(a, b, config.check_grid)
    return _Context(config, a, b, x, p_true, np.ones_like(x), grid, gb[0] + gb[1] * grid)


def replication_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


_FIT_CONFIG = FitConfig()


def _replicate(ctx: _Context, index: int) -> ReplicationOutcome:
    cfg = ctx.config
    u = replication_rng(cfg.seed, index).random(cfg.n)
    y = (u < ctx.p_true).astype(float)
    if is_separated(ctx.x, y, ctx.trials):
        return ReplicationOutcome(index, "failed")
    try:
        beta, _, _, converged, _ = _fit_arrays(cfg.link, ctx.x, y, ctx.trials, _FIT_CONFIG)
        if not converged or np.linalg.norm(beta) > 1e4:
            return ReplicationOutcome(index, "failed")
        cov = _inverse_2x2(_information(cfg.link, beta, ctx.x, ctx.trials))
        cone = interval_cone_angle(cov, ctx.a, ctx.b)
        w = solve_critical(cone.phi, 1.0 - cfg.alpha, cfg.side).w
    except (BandsError, GeometryError):
        return ReplicationOutcome(index, "failed")
    center = beta[0] + beta[1] * ctx.grid
    se = np.sqrt(cov[0, 0] + 2 * cov[0, 1] * ctx.grid + cov[1, 1] * ctx.grid ** 2)
    covered = band_contains(center, w * se, ctx.truth, cfg.side)
    sup = grid_sup_statistic(beta - cfg.generating_beta, cov, ctx.grid, cfg.side)
    return ReplicationOutcome(
        index, "covered" if covered else "missed", beta, cov, cone.phi, w, sup
    )


def replicate(config: SimConfig, index: int) -> ReplicationOutcome:
    """Run replication ``index`` of ``config`` on its own."""
    return _replicate(_context(config), index)


def _run_chunk(args) -> tuple[int, int, int]:
    config, start, stop = args
    ctx = _context(config)
    covered = missed = failed = 0
    for i in range(start, stop):
        status = _replicate(ctx, i).status
        if status == "covered":
            covered += 1
        elif status == "missed":
            missed += 1
        else:
            failed += 1
    return covered, missed, failed


def simulate_coverage(config: SimConfig, workers: int = 1) -> CoverageReport:
    """Estimate ``1 - coverage`` for the configured study cell.

    Replications whose fit fails (separation, non-convergence, singular
    information) are excluded from the estimate and counted in
    ``fit_failures``.  ``workers > 1`` fans replications out to processes
    without changing the result.

    Raises
    ------
    SimulationError
        If every replication fails.
    """
    n_rep = config.replications
    if workers <= 1 or n_rep < 2 * workers:
        covered, missed, failed = _run_chunk((config, 0, n_rep))
    else:
        bounds = np.linspace(0, n_rep, workers + 1).astype(int)
        chunks = [(config, int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, chunks))
        covered, missed, failed = (sum(p[k] for p in parts) for k in range(3))
    used = covered + missed
    if used == 0:
        raise SimulationError(f"all {n_rep} replications failed to produce a fit")
    err = missed / used
    return CoverageReport(
        estimated_error=err,
        std_error=math.sqrt(err * (1.0 - err) / used),
        replications_used=used,
        fit_failures=failed,
        misses=missed,
        seed=config.seed,
        config=config.to_dict(),
    )


def sweep_configs(
    design: Design = "equal",
    replications: int = 5000,
    seed: int = 0,
    betas=published.SIM_BETAS,
    sizes=published.SIM_SIZES,
    kinds=published.INTERVAL_KINDS,
    alphas=None,
) -> list[SimConfig]:
    """Every cell of the logistic coverage study for one design.

    The equal design is run at all three alphas; concentrated designs at
    alpha = 0.05 only.  Cell ``k`` uses seed ``seed + k``.
    """
    if alphas is None:
        alphas = published.SIM_ALPHAS if design == "equal" else (0.05,)
    out = []
    for beta in betas:
        for n in sizes:
            for kind in kinds:
                for alpha in alphas:
                    out.append(SimConfig(beta_true=beta, n=n, replications=replications,
                                         alpha=alpha, interval=kind, design=design,
                                         seed=seed + len(out)))
    return out


def published_error(config: SimConfig) -> float | None:
    key = ((config.beta_true.beta0, config.beta_true.beta1), config.n)
    if config.design == "equal":
        row = published.EQUAL_DESIGN_ERRORS.get(key, {})
        return row.get((config.interval, round(config.alpha, 2)))
    row = published.CONCENTRATED_DESIGN_ERRORS.get(key, {})
    return row.get((config.interval, config.design)) if config.alpha == 0.05 else None
