import logging
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import cho_solve, cholesky, solve_triangular
from scipy.optimize import minimize
from scipy.spatial.distance import cdist

from .exceptions import DegenerateResponse, NonPositiveDefinite
from .yaml import load_config

log = logging.getLogger(__name__)

_LOG_2PI = np.log(2 * np.pi)


@dataclass(frozen=True)
class PredictiveMoments:
    mu: object
    sigma: object


@dataclass(frozen=True)
class GPModel:
    """Fitted constant-mean GP with anisotropic squared-exponential kernel.

    ``chol`` is the lower Cholesky factor of
    K = tau2 * (Corr(X, X) + jitter * I), built on inputs mapped to the unit
    box through ``offset`` and ``scale``; ``alpha`` = K^-1 y_scaled.
    """
    X_train: np.ndarray
    y_train: np.ndarray
    theta: np.ndarray
    tau2: float
    jitter: float
    chol: np.ndarray
    alpha: np.ndarray
    y_mean: float
    y_sd: float
    y_scaled: np.ndarray
    offset: np.ndarray
    scale: np.ndarray
    degenerate: bool = False
    fit_info: dict = field(default_factory=dict, compare=False)

    @property
    def n(self):
        return self.X_train.shape[0]

    @property
    def dim(self):
        return self.X_train.shape[1]

    def to_unit(self, X):
        return (np.asarray(X, dtype=float) - self.offset) / self.scale


def correlation(x, z, theta):
    x = np.atleast_1d(np.asarray(x, dtype=float))
    z = np.atleast_1d(np.asarray(z, dtype=float))
    theta = np.broadcast_to(np.asarray(theta, dtype=float), x.shape)
    if x.shape != z.shape:
        raise ValueError(f'Dimension mismatch: {x.shape} vs {z.shape}')
    return float(np.exp(-np.sum((x - z)**2 / theta)))


def _scaled_sqdist(U, V, theta):
    root = np.sqrt(theta)
    return cdist(U / root, V / root, 'sqeuclidean')


def _factorize(C, jitter, max_jitter):
    """Cholesky of C + jitter*I, escalating jitter x10 up to max_jitter."""
    eye = np.eye(C.shape[0])
    while True:
        try:
            return cholesky(C + jitter * eye, lower=True), jitter
        except np.linalg.LinAlgError:
            if jitter * 10 > max_jitter * (1 + 1e-9):
                raise NonPositiveDefinite(
                    f'Covariance not positive definite with jitter {jitter:g}')
            jitter *= 10
            log.debug(f'Cholesky failed, jitter raised to {jitter:g}')


def concentrated_log_likelihood(U, y_scaled, theta, jitter, max_jitter=None):
    """Log marginal likelihood with tau2 profiled out.

    ``U`` are inputs already in unit-box coordinates.
    """
    if max_jitter is None:
        max_jitter = jitter
    n = len(y_scaled)
    L, _ = _factorize(np.exp(-_scaled_sqdist(U, U, theta)), jitter, max_jitter)
    a = cho_solve((L, True), y_scaled)
    tau2 = max(float(y_scaled @ a) / n, np.finfo(float).tiny)
    return -0.5 * (n * np.log(tau2) + 2 * np.sum(np.log(np.diag(L)))
                   + n + n * _LOG_2PI)


def _estimate_theta(U, y_scaled, jitter, gp_config, initial_theta=None,
                    multistart=True):
    d = U.shape[1]
    lo, hi = np.log(gp_config['theta_bounds'])
    max_jitter = gp_config['max_jitter']

    def nll(log_theta):
        try:
            return -concentrated_log_likelihood(
                U, y_scaled, np.exp(log_theta), jitter, max_jitter)
        except NonPositiveDefinite:
            return 1e25

    if multistart or initial_theta is None:
        n_starts = gp_config['n_starts']
        starts = [np.full(d, vv)
                  for vv in np.linspace(lo, hi, n_starts + 2)[1:-1]]
        maxfev = gp_config['maxfev']
    else:
        starts, maxfev = [], gp_config['refit_maxfev']
    if initial_theta is not None:
        starts.append(np.clip(np.log(initial_theta), lo, hi))

    best_x, best_f = None, np.inf
    start_log_likelihoods = []
    for x0 in starts:
        f0 = nll(x0)
        start_log_likelihoods.append(-f0)
        res = minimize(nll, x0, method='Nelder-Mead',
                       bounds=[(lo, hi)] * d,
                       options={'maxfev': maxfev,
                                'xatol': 1e-4, 'fatol': 1e-8})
        for xx, ff in ((x0, f0), (res.x, res.fun)):
            if ff < best_f:
                best_x, best_f = np.clip(xx, lo, hi), ff

    return np.exp(best_x), {'start_log_likelihoods': start_log_likelihoods,
                            'best_log_likelihood': -best_f}


def fit(X_train, y_train, jitter=None, domain=None, theta=None, tau2=None,
        normalize=True, initial_theta=None, multistart=True, config=None):
    """Fit a GP surrogate.

    Parameters
    ----------
    X_train : array (n, d)
    y_train : array (n,)
    jitter : float
        Initial nugget (default from config, 1e-8); escalated x10 up to
        ``gp.max_jitter`` if the factorization fails.
    domain : BoxDomain or None
        If given, inputs are rescaled to the unit box before the kernel is
        evaluated; otherwise raw inputs are used.
    theta, tau2 : fixed hyperparameters. Lengthscales are estimated by
        maximum concentrated likelihood when ``theta`` is None; ``tau2`` is
        profiled out when None.
    normalize : bool
        Standardize the response to zero mean and unit variance.
    initial_theta : extra start point for the likelihood search (warm start).
    multistart : if False and ``initial_theta`` is given, only the warm start
        is searched, with ``gp.refit_maxfev`` evaluations.

    Returns
    -------
    GPModel
    """
    cfg = load_config(config)['gp']
    if jitter is None:
        jitter = cfg['jitter']
    if jitter <= 0:
        raise ValueError('jitter must be positive')

    X = np.atleast_2d(np.asarray(X_train, dtype=float))
    y = np.asarray(y_train, dtype=float).ravel()
    n, d = X.shape
    if len(y) != n:
        raise ValueError(f'{n} input rows but {len(y)} responses')
    if n < 1 or not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
        raise ValueError('Training data must be nonempty and finite')
    if n < 2 and theta is None:
        raise ValueError('At least two points are needed to estimate theta')

    if domain is not None:
        offset = np.array(domain.lower, dtype=float)
        scale = np.array(domain.upper, dtype=float) - offset
    else:
        offset, scale = np.zeros(d), np.ones(d)
    U = (X - offset) / scale

    if normalize:
        y_mean = float(np.mean(y))
        y_sd = float(np.std(y, ddof=1)) if n > 1 else 0.
        if y_sd == 0 or np.ptp(y) == 0:
            warnings.warn('Constant response, the surrogate is degenerate',
                          DegenerateResponse)
            return GPModel(
                X_train=X, y_train=y,
                theta=(np.ones(d) if theta is None
                       else np.broadcast_to(np.asarray(theta, dtype=float), (d,)).copy()),
                tau2=1., jitter=jitter, chol=None, alpha=np.zeros(n),
                y_mean=y_mean, y_sd=0., y_scaled=np.zeros(n),
                offset=offset, scale=scale, degenerate=True)
    else:
        y_mean, y_sd = 0., 1.
    y_scaled = (y - y_mean) / y_sd

    fit_info = {}
    if theta is None:
        theta, fit_info = _estimate_theta(U, y_scaled, jitter, cfg,
                                          initial_theta=initial_theta,
                                          multistart=multistart)
    else:
        theta = np.broadcast_to(np.asarray(theta, dtype=float), (d,)).copy()
    if np.any(theta <= 0):
        raise ValueError('Lengthscales must be positive')

    L, jitter_used = _factorize(np.exp(-_scaled_sqdist(U, U, theta)),
                                jitter, cfg['max_jitter'])
    if jitter_used > jitter:
        log.warning(f'Jitter escalated to {jitter_used:g}')
    a = cho_solve((L, True), y_scaled)
    if tau2 is None:
        tau2 = max(float(y_scaled @ a) / n, np.finfo(float).tiny)
    elif tau2 <= 0:
        raise ValueError('tau2 must be positive')

    model = GPModel(
        X_train=X, y_train=y, theta=theta, tau2=float(tau2),
        jitter=jitter_used, chol=np.sqrt(tau2) * L, alpha=a / tau2,
        y_mean=y_mean, y_sd=y_sd, y_scaled=y_scaled,
        offset=offset, scale=scale, fit_info=fit_info)

    log.debug(f'GP fitted on {n} points, theta={theta}, tau2={tau2:.4g}')
    return model


def _cross_correlation(model, U):
    sq = _scaled_sqdist(U, model.to_unit(model.X_train), model.theta)
    corr = np.exp(-sq)
    # the nugget belongs to the kernel at zero distance
    corr[sq == 0] += model.jitter
    return corr


def predict(model, x):
    """Predictive mean and standard deviation at ``x`` ((d,) or (k, d))."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    X = np.atleast_2d(x)
    if X.shape[1] != model.dim:
        raise ValueError(f'Expected inputs of dimension {model.dim}, '
                         f'got {X.shape[1]}')

    if model.degenerate:
        mu = np.full(len(X), model.y_mean)
        sigma = np.zeros(len(X))
    else:
        k = model.tau2 * _cross_correlation(model, model.to_unit(X))
        mu = model.y_mean + model.y_sd * (k @ model.alpha)
        v = solve_triangular(model.chol, k.T, lower=True)
        var = model.tau2 * (1 + model.jitter) - np.sum(v**2, axis=0)
        sigma = model.y_sd * np.sqrt(np.maximum(var, 0))

    if single:
        return PredictiveMoments(mu=float(mu[0]), sigma=float(sigma[0]))
    return PredictiveMoments(mu=mu, sigma=sigma)


def mean_gradient(model, x):
    """Analytic gradient of the predictive mean away from training points."""
    x = np.asarray(x, dtype=float)
    if model.degenerate:
        return np.zeros(model.dim)
    u = model.to_unit(x)
    U = model.to_unit(model.X_train)
    corr = np.exp(-_scaled_sqdist(u[np.newaxis, :], U, model.theta))[0]
    weights = model.tau2 * model.alpha * corr
    dmu_du = -2 * np.sum(weights[:, np.newaxis] * (u - U), axis=0) / model.theta
    return model.y_sd * dmu_du / model.scale


def log_likelihood(model):
    """-1/2 (y'K^-1 y + log det K + n log 2 pi) on the standardized response."""
    if model.degenerate:
        raise ValueError('Log-likelihood is undefined for a degenerate model')
    return float(-0.5 * (model.y_scaled @ model.alpha
                         + 2 * np.sum(np.log(np.diag(model.chol)))
                         + model.n * _LOG_2PI))
