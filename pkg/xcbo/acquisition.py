from dataclasses import dataclass

import numpy as np
from scipy.stats import norm


@dataclass(frozen=True)
class Incumbent:
    f_min: float
    feasible_exists: bool

    @classmethod
    def from_data(cls, obj, con):
        """Best observed objective among rows with all constraints <= 0."""
        obj = np.asarray(obj, dtype=float)
        con = as_constraint_matrix(con)
        feasible = np.all(con <= 0, axis=1)
        if not np.any(feasible):
            return cls(f_min=np.inf, feasible_exists=False)
        return cls(f_min=float(np.min(obj[feasible])), feasible_exists=True)


def as_constraint_matrix(con):
    """(n, m) constraint values; a 1-D vector holds a single constraint."""
    con = np.asarray(con, dtype=float)
    return con[:, np.newaxis] if con.ndim == 1 else con


def _as_output(value, *inputs):
    if all(np.ndim(ii) == 0 for ii in inputs):
        return float(value)
    return value


def expected_improvement(mu, sigma, f_min):
    """Closed-form E[max(0, f_min - Y)] for Y ~ N(mu, sigma^2).

    Broadcasts over array inputs; sigma = 0 gives max(f_min - mu, 0).
    """
    mu = np.asarray(mu, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    diff = f_min - mu
    positive = sigma > 0
    safe_sigma = np.where(positive, sigma, 1.)
    zz = diff / safe_sigma
    ei = np.where(positive,
                  diff * norm.cdf(zz) + safe_sigma * norm.pdf(zz),
                  np.maximum(diff, 0))
    # rounding in the closed form can dip just below zero far in the tail
    return _as_output(np.maximum(ei, 0), mu, sigma, f_min)


def prob_feasible(mu_c, sigma_c):
    """Product over constraints of P(c_k(x) <= 0) under independent normals.

    The last axis indexes constraints; an empty constraint set gives 1.
    """
    mu_c = np.asarray(mu_c, dtype=float)
    sigma_c = np.asarray(sigma_c, dtype=float)
    if mu_c.shape != sigma_c.shape:
        raise ValueError('mu_c and sigma_c must have the same shape')
    positive = sigma_c > 0
    factors = np.where(positive,
                       norm.cdf(-mu_c / np.where(positive, sigma_c, 1.)),
                       (mu_c <= 0).astype(float))
    out = np.prod(factors, axis=-1) if mu_c.ndim > 0 else factors
    return _as_output(out, np.zeros(mu_c.shape[:-1]) if mu_c.ndim > 0 else 0.)


def efi(mu, sigma, incumbent, mu_c, sigma_c):
    """Expected feasible improvement.

    Before any feasible point is known only the probability of feasibility
    is returned.
    """
    pf = prob_feasible(mu_c, sigma_c)
    if not incumbent.feasible_exists:
        return pf
    return expected_improvement(mu, sigma, incumbent.f_min) * pf
