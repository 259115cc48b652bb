"""Independent numerical oracles used by several test modules."""

import numpy as np

from logitbands.glm import Link, _log_likelihood


def numerical_neg_hessian(link, beta, x, s, t):
    """Central second differences of the log-likelihood, step 1e-5 * (1 + |beta_j|)."""
    b = np.asarray(beta, dtype=float)
    h = 1e-5 * (1.0 + np.abs(b))

    def f(v):
        return _log_likelihood(Link(link), v, np.asarray(x, float), np.asarray(s, float), np.asarray(t, float))

    out = np.empty((2, 2))
    for i in range(2):
        for j in range(2):
            ei = np.eye(2)[i] * h[i]
            ej = np.eye(2)[j] * h[j]
            out[i, j] = (f(b + ei + ej) - f(b + ei - ej) - f(b - ei + ej) + f(b - ei - ej)) / (4 * h[i] * h[j])
    return -out


def expected_information_oracle(link, beta, x, t):
    """Negative Hessian with successes replaced by their expectation t * p(beta).

    The Hessian of the binomial log-likelihood is affine in the responses, so
    this equals the expected information exactly (up to differencing error).
    """
    link = Link(link)
    b = np.asarray(beta, dtype=float)
    x = np.asarray(x, float)
    t = np.asarray(t, float)
    p = link.inverse(b[0] + b[1] * x)
    return numerical_neg_hessian(link, b, x, t * p, t)
