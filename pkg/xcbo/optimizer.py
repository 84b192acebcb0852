import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from scipy.stats import qmc

from . import gp
from .acquisition import Incumbent, as_constraint_matrix, efi
from .exceptions import ExhaustedCandidates, NonPositiveDefinite
from .testfuns import get_spec
from .yaml import load_config

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceRow:
    iteration: int
    x: np.ndarray
    evaluation: object
    feasible: bool
    best_feasible_so_far: object


@dataclass
class Trace:
    spec: object
    seed: int
    budget: tuple
    rows: list = field(default_factory=list)
    # iterations where a failed fit fell back to the previous surrogates
    fallback_iterations: list = field(default_factory=list)

    def append(self, x, evaluation):
        feasible = evaluation.feasible
        best = self.rows[-1].best_feasible_so_far if self.rows else None
        if feasible and (best is None or evaluation.obj < best):
            best = evaluation.obj
        self.rows.append(TraceRow(
            iteration=len(self.rows) + 1, x=np.array(x, dtype=float),
            evaluation=evaluation, feasible=feasible,
            best_feasible_so_far=best))

    @property
    def n_evaluations(self):
        return len(self.rows)

    @property
    def X(self):
        return np.array([rr.x for rr in self.rows]).reshape(-1, self.spec.dim)

    @property
    def obj(self):
        return np.array([rr.evaluation.obj for rr in self.rows])

    @property
    def con(self):
        return np.array([rr.evaluation.con for rr in self.rows]).reshape(
            len(self.rows), self.spec.n_constraints)

    @property
    def feasible(self):
        return np.array([rr.feasible for rr in self.rows], dtype=bool)

    def to_frame(self):
        df = pd.DataFrame({'iter': [rr.iteration for rr in self.rows]})
        X = self.X
        for jj in range(self.spec.dim):
            df[f'x{jj + 1}'] = X[:, jj]
        df['obj'] = self.obj
        con = self.con
        for jj in range(self.spec.n_constraints):
            df[f'con{jj + 1}'] = con[:, jj]
        df['feasible'] = self.feasible
        df['best_feasible'] = [np.nan if rr.best_feasible_so_far is None
                               else rr.best_feasible_so_far for rr in self.rows]
        return df

    def to_csv(self, path_or_buf):
        return self.to_frame().to_csv(path_or_buf, index=False,
                                      float_format='%.17g', na_rep='')


@dataclass(frozen=True)
class BestFeasible:
    x_best: object
    obj_best: float
    found: bool


@dataclass(frozen=True)
class Surrogates:
    objective: gp.GPModel
    constraints: tuple


def lhs_design(n, domain, seed=None):
    """Latin hypercube of ``n`` points in ``domain``, one per stratum and axis.

    ``seed`` may be an int or a ``numpy.random.Generator`` (which is then
    advanced).
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    rng = np.random.default_rng(seed)
    sampler = qmc.LatinHypercube(d=domain.dim, seed=rng)
    return domain.from_unit(sampler.random(n))


def needs_full_refit(n_design, n_since_full, config=None):
    """Whether the likelihood search should use all starts again."""
    ocfg = load_config(config)['optimizer']
    return (n_design <= ocfg['full_refit_until']
            or n_since_full >= ocfg['full_refit_every'])


def fit_surrogates(X, obj, con, domain, config=None, previous=None,
                   multistart=True):
    """One GP for the objective and one per constraint column.

    With ``multistart=False`` the lengthscales of ``previous`` are only
    refined locally.
    """
    cfg = load_config(config)

    def _fit(y, prev):
        return gp.fit(X, y, domain=domain, config=cfg,
                      initial_theta=None if (prev is None or prev.degenerate)
                      else prev.theta,
                      multistart=multistart)

    objective = _fit(obj, None if previous is None else previous.objective)
    constraints = tuple(
        _fit(con[:, kk],
             None if previous is None else previous.constraints[kk])
        for kk in range(con.shape[1]))
    return Surrogates(objective=objective, constraints=constraints)


def acquisition_values(Z, surrogates, incumbent):
    pred = gp.predict(surrogates.objective, Z)
    mu_c = np.zeros((len(Z), len(surrogates.constraints)))
    sigma_c = np.zeros_like(mu_c)
    for kk, model in enumerate(surrogates.constraints):
        pc = gp.predict(model, Z)
        mu_c[:, kk], sigma_c[:, kk] = pc.mu, pc.sigma
    return np.asarray(efi(pred.mu, pred.sigma, incumbent, mu_c, sigma_c))


def _polish(x0, f0, acq_fn, domain, n_evals, initial_step):
    """Coordinate search on the acquisition with a shrinking step."""
    u = domain.to_unit(x0)
    best = f0
    step = initial_step
    evals = 0
    while evals < n_evals and step > 1e-12:
        improved = False
        for jj in range(len(u)):
            for sign in (1, -1):
                if evals >= n_evals:
                    break
                trial = u.copy()
                trial[jj] = np.clip(trial[jj] + sign * step, 0, 1)
                if trial[jj] == u[jj]:
                    continue
                val = acq_fn(domain.from_unit(trial)[np.newaxis, :])[0]
                evals += 1
                if val > best:
                    u, best, improved = trial, val, True
                    break
            if improved:
                break
        if not improved:
            step /= 2
    return domain.from_unit(u), best


def _min_unit_distance(U, U_design):
    diff = U[:, np.newaxis, :] - U_design[np.newaxis, :, :]
    return np.sqrt(np.min(np.sum(diff**2, axis=-1), axis=1))


def propose_next(X, obj, con, surrogates, domain, seed=None, config=None):
    """Next input to evaluate, maximizing EFI over an LHS candidate set.

    The best candidate is refined by a coordinate search. Points closer
    than ``optimizer.duplicate_tol`` (unit-box distance) to the design are
    never returned. If the acquisition vanishes on every candidate, the
    candidate with the largest objective predictive sigma is taken.
    """
    cfg = load_config(config)
    ocfg = cfg['optimizer']
    rng = np.random.default_rng(seed)
    X = np.atleast_2d(np.asarray(X, dtype=float))
    con = as_constraint_matrix(con)
    incumbent = Incumbent.from_data(obj, con)

    candidates = lhs_design(ocfg['candidates_per_dim'] * domain.dim,
                            domain, rng)
    U_design = domain.to_unit(X)
    tol = ocfg['duplicate_tol']

    def is_new(Z):
        return _min_unit_distance(domain.to_unit(Z), U_design) > tol

    fresh = is_new(candidates)
    if not np.any(fresh):
        raise ExhaustedCandidates('All candidates duplicate design points')

    def acq_fn(Z):
        return acquisition_values(Z, surrogates, incumbent)

    acq = acq_fn(candidates)

    if not np.any(acq[fresh] > 0):
        sigma = gp.predict(surrogates.objective, candidates).sigma
        sigma = np.where(fresh, sigma, -np.inf)
        log.debug('Acquisition is zero on all candidates, exploring')
        return candidates[int(np.argmax(sigma))]

    order = [ii for ii in np.argsort(-acq, kind='stable') if fresh[ii]]
    best = candidates[order[0]]

    polished, val = _polish(best, acq[order[0]], acq_fn, domain,
                            ocfg['polish_evaluations'],
                            ocfg['polish_initial_step'])
    if val > acq[order[0]] and is_new(polished[np.newaxis, :])[0]:
        return polished
    return best


def run(name, start=10, end=300, seed=None, config=None):
    """Sequential EFI optimization of a catalog function.

    Evaluates a ``start``-point LHS design, then refits the surrogates and
    evaluates one proposal per iteration until ``end`` evaluations. Past
    ``optimizer.full_refit_until`` points, the lengthscales are re-searched
    from all starts only every ``optimizer.full_refit_every`` iterations and
    refined from the previous ones otherwise.
    """
    spec = get_spec(name)
    if start < 2:
        raise ValueError('start must be at least 2')
    if end <= start:
        raise ValueError('end must be larger than start')
    cfg = load_config(config)
    rng = np.random.default_rng(seed)

    trace = Trace(spec=spec, seed=seed, budget=(start, end))
    for x in lhs_design(start, spec.domain, rng):
        trace.append(x, spec.evaluate(x))

    surrogates = None
    n_since_full = 0
    for iteration in range(start + 1, end + 1):
        multistart = needs_full_refit(trace.n_evaluations, n_since_full, cfg)
        n_since_full = 0 if multistart else n_since_full + 1
        try:
            surrogates = fit_surrogates(trace.X, trace.obj, trace.con,
                                        spec.domain, config=cfg,
                                        previous=surrogates,
                                        multistart=multistart)
        except NonPositiveDefinite:
            if surrogates is None:
                raise
            log.warning(f'{name}: fit failed at iteration {iteration}, '
                        'keeping previous surrogates')
            trace.fallback_iterations.append(iteration)

        x = propose_next(trace.X, trace.obj, trace.con, surrogates,
                         spec.domain, seed=rng, config=cfg)
        trace.append(x, spec.evaluate(x))
        log.debug(f'{name} [{iteration}/{end}] x={x} '
                  f'best={trace.rows[-1].best_feasible_so_far}')

    log.info(f'{name}: {end} evaluations done, seed {seed}')
    return trace


def best_feasible(trace):
    feasible = trace.feasible
    if not np.any(feasible):
        return BestFeasible(x_best=None, obj_best=np.nan, found=False)
    obj = np.where(feasible, trace.obj, np.inf)
    ibest = int(np.argmin(obj))
    return BestFeasible(x_best=trace.rows[ibest].x,
                        obj_best=float(obj[ibest]), found=True)
