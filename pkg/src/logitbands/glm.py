"""Two-parameter logistic and probit regression: likelihood, information, ML fit.

The linear predictor is ``eta = beta0 + beta1 * x`` and the response
probability is ``expit(eta)`` (logit link) or ``Phi(eta)`` (probit link).
Fitting is Fisher scoring with step-halving, which for the canonical logit
link coincides with Newton-Raphson.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from .data import Dataset
from .errors import DegenerateInformationError, NonConvergenceError, SeparationError

_TINY = np.finfo(float).tiny
_EPS = np.finfo(float).eps
_SEPARATION_NORM = 1e4


class Link(str, enum.Enum):
    LOGIT = "logit"
    PROBIT = "probit"

    def inverse(self, eta):
        """Map linear predictor values to probabilities (no clamping)."""
        if self is Link.LOGIT:
            return special.expit(eta)
        return special.ndtr(eta)

    def __call__(self, p):
        """Map probabilities to the linear-predictor scale."""
        if self is Link.LOGIT:
            return special.logit(p)
        return special.ndtri(p)


@dataclass(frozen=True)
class Coefficients:
    beta0: float
    beta1: float

    def __post_init__(self):
        if not (math.isfinite(self.beta0) and math.isfinite(self.beta1)):
            raise ValueError(f"coefficients must be finite, got ({self.beta0}, {self.beta1})")

    @classmethod
    def of(cls, beta) -> "Coefficients":
        if isinstance(beta, Coefficients):
            return beta
        b0, b1 = beta
        return cls(float(b0), float(b1))

    def as_array(self) -> np.ndarray:
        return np.array([self.beta0, self.beta1])

    def linear_predictor(self, x):
        return self.beta0 + self.beta1 * np.asarray(x, dtype=float)


@dataclass(frozen=True)
class FitConfig:
    tol: float = 1e-10
    step_tol: float = 1e-12
    max_iter: int = 100
    allow_separation: bool = False


@dataclass(frozen=True, eq=False)
class ModelFit:
    """Result of :func:`fit`.

    ``info`` is the expected Fisher information at ``beta_hat`` and
    ``info_inv`` its inverse, the asymptotic covariance of ``beta_hat``.
    ``boundary_rows`` lists rows whose fitted probability is within 1e-12
    of 0 or 1; they carry essentially no information.
    """

    link: Link
    beta_hat: Coefficients
    info: np.ndarray
    info_inv: np.ndarray
    log_lik: float
    iterations: int
    converged: bool
    separation_flag: bool
    max_abs_score: float
    n_obs: int = 0
    total_trials: int = 0
    boundary_rows: tuple[int, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "link": self.link.value,
            "beta0": self.beta_hat.beta0,
            "beta1": self.beta_hat.beta1,
            "info": self.info.tolist(),
            "info_inv": self.info_inv.tolist(),
            "log_lik": self.log_lik,
            "iterations": self.iterations,
            "converged": self.converged,
            "separation_flag": self.separation_flag,
            "max_abs_score": self.max_abs_score,
            "n_obs": self.n_obs,
            "total_trials": self.total_trials,
            "boundary_rows": list(self.boundary_rows),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def response_prob(link: Link, beta, x):
    """P(Y = 1 | x), kept strictly inside (0, 1) for downstream logarithms."""
    eta = Coefficients.of(beta).linear_predictor(x)
    p = Link(link).inverse(eta)
    p = np.clip(p, _TINY, 1.0 - _EPS / 2)
    return float(p) if np.ndim(p) == 0 else p


# --------------------------------------------------------------------------- #
# Array kernels shared by fit() and the Monte Carlo loop
# --------------------------------------------------------------------------- #


def _log_probs(link: Link, eta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """log p and log(1 - p), accurate in both tails."""
    if link is Link.LOGIT:
        return special.log_expit(eta), special.log_expit(-eta)
    return special.log_ndtr(eta), special.log_ndtr(-eta)


def _log_likelihood(link, beta, x, s, t) -> float:
    eta = beta[0] + beta[1] * x
    lp, lq = _log_probs(link, eta)
    # 0 * log(0) terms are zero; mask them so -inf never leaks in.
    ll = np.where(s > 0, s * lp, 0.0) + np.where(t - s > 0, (t - s) * lq, 0.0)
    return float(ll.sum())


def _weights_and_residual_factor(link, eta):
    """Return (w, r) with information weight ``w`` and score factor ``r``.

    The score is ``sum_i c_i * r_i * (s_i - t_i p_i)`` and the expected
    information ``sum_i t_i w_i c_i c_i'``.
    """
    if link is Link.LOGIT:
        p = special.expit(eta)
        w = p * special.expit(-eta)
        return w, np.ones_like(eta), p
    p = special.ndtr(eta)
    q = special.ndtr(-eta)
    dens = np.exp(-0.5 * eta * eta) / math.sqrt(2.0 * math.pi)
    pq = p * q
    safe = pq > 0
    w = np.where(safe, dens * dens / np.where(safe, pq, 1.0), 0.0)
    r = np.where(safe, dens / np.where(safe, pq, 1.0), 0.0)
    return w, r, p


def _score(link, beta, x, s, t) -> np.ndarray:
    eta = beta[0] + beta[1] * x
    _, r, p = _weights_and_residual_factor(link, eta)
    resid = r * (s - t * p)
    return np.array([resid.sum(), (resid * x).sum()])


def _information(link, beta, x, t) -> np.ndarray:
    eta = beta[0] + beta[1] * x
    w, _, _ = _weights_and_residual_factor(link, eta)
    tw = t * w
    s0, s1, s2 = tw.sum(), (tw * x).sum(), (tw * x * x).sum()
    return np.array([[s0, s1], [s1, s2]])


def _inverse_2x2(m: np.ndarray) -> np.ndarray:
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    scale = max(abs(m[0, 0] * m[1, 1]), abs(m[0, 1] * m[1, 0]), _TINY)
    if not math.isfinite(det) or det <= 1e-14 * scale:
        raise DegenerateInformationError(
            f"information matrix is singular (det={det:.3g})"
        )
    inv = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det
    # One refinement step: inv <- inv (2I - m inv).  Brings inv*m to ~1e-16.
    return inv @ (2.0 * np.eye(2) - m @ inv)


def is_separated(x, s, t) -> bool:
    """True when no finite MLE exists for a one-predictor binary model.

    With an intercept and one predictor that happens exactly when all
    responses are successes (or failures), or when every failure lies on
    one side of every success, ties at the boundary included.
    """
    x = np.asarray(x, dtype=float)
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    has_succ = s > 0
    has_fail = (t - s) > 0
    if not has_succ.any() or not has_fail.any():
        return True
    xs, xf = x[has_succ], x[has_fail]
    return bool(xf.max() <= xs.min() or xs.max() <= xf.min())


def _fit_arrays(link: Link, x, s, t, config: FitConfig):
    """Fisher scoring with step-halving; returns (beta, ll, iterations, converged, score)."""
    ybar = s.sum() / t.sum()
    ybar = min(max(ybar, 1e-6), 1 - 1e-6)
    beta = np.array([float(link(ybar)), 0.0])
    ll = _log_likelihood(link, beta, x, s, t)
    converged = False
    g = _score(link, beta, x, s, t)
    it = 0
    for it in range(1, config.max_iter + 1):
        if np.max(np.abs(g)) < config.tol:
            converged = True
            it -= 1
            break
        info = _information(link, beta, x, t)
        step = _inverse_2x2(info) @ g
        halvings = 0
        while True:
            cand = beta + step
            ll_new = _log_likelihood(link, cand, x, s, t)
            if ll_new >= ll - 1e-12 * abs(ll) or halvings >= 50:
                break
            step = step / 2
            halvings += 1
        beta, ll = cand, ll_new
        g = _score(link, beta, x, s, t)
        if np.linalg.norm(beta) > _SEPARATION_NORM:
            break
        if np.max(np.abs(step)) < config.step_tol:
            converged = True
            break
    if np.max(np.abs(g)) < config.tol:
        converged = True
    return beta, ll, it, converged, g


def fit(link: Link | str, data: Dataset, config: FitConfig | None = None) -> ModelFit:
    """Maximum-likelihood fit of a logistic or probit model.

    Convergence is declared when the largest absolute score component drops
    below ``config.tol`` or a full Newton step is shorter than
    ``config.step_tol``.

    Raises
    ------
    SeparationError
        The data are separated (no finite MLE), unless
        ``config.allow_separation`` is set, in which case a fit with
        ``separation_flag=True`` is returned.
    NonConvergenceError
        ``max_iter`` exhausted; the exception carries the last iterate.
    """
    link = Link(link)
    config = config or FitConfig()
    x, s, t = data.x, data.successes, data.trials

    separated = is_separated(x, s, t)
    if separated and not config.allow_separation:
        raise SeparationError("data are separated; the maximum-likelihood estimate does not exist")

    beta, ll, iters, converged, g = _fit_arrays(link, x, s, t, config)
    if np.linalg.norm(beta) > _SEPARATION_NORM:
        separated = True
    eta = beta[0] + beta[1] * x
    p = link.inverse(eta)
    boundary = tuple(int(i) for i in np.flatnonzero((p < 1e-12) | (p > 1 - 1e-12)))
    if separated and not config.allow_separation:
        raise SeparationError(f"coefficient norm diverged to {np.linalg.norm(beta):.3g}")
    if not converged and not separated:
        raise NonConvergenceError(
            f"no convergence after {iters} iterations (max |score| = {np.max(np.abs(g)):.3g})",
            last_iterate=Coefficients.of(beta),
            iterations=iters,
        )

    info = _information(link, beta, x, t)
    try:
        info_inv = _inverse_2x2(info)
    except DegenerateInformationError:
        if not separated:
            raise
        info_inv = np.full((2, 2), np.nan)
    return ModelFit(
        link=link,
        beta_hat=Coefficients.of(beta),
        info=_frozen(info),
        info_inv=_frozen(info_inv),
        log_lik=ll,
        iterations=iters,
        converged=bool(converged),
        separation_flag=bool(separated),
        max_abs_score=float(np.max(np.abs(g))),
        n_obs=len(data),
        total_trials=data.total_trials,
        boundary_rows=boundary,
    )


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


def log_likelihood(link: Link | str, beta, data: Dataset) -> float:
    """Binomial log-likelihood kernel (binomial coefficients omitted)."""
    return _log_likelihood(Link(link), Coefficients.of(beta).as_array(), data.x, data.successes, data.trials)


def score(link: Link | str, beta, data: Dataset) -> np.ndarray:
    return _score(Link(link), Coefficients.of(beta).as_array(), data.x, data.successes, data.trials)


def fisher_information(link: Link | str, beta, data: Dataset) -> np.ndarray:
    """Expected Fisher information ``sum_i n_i w_i c_i c_i'`` with ``c_i = (1, x_i)``.

    ``w = p(1-p)`` for the logit link and ``w = phi(eta)^2 / (p(1-p))`` for
    the probit link.

    Raises
    ------
    DegenerateInformationError
        If the matrix is numerically singular.
    """
    m = _information(Link(link), Coefficients.of(beta).as_array(), data.x, data.trials)
    _inverse_2x2(m)
    return m
