import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np
import pandas as pd

from .exceptions import XcboError
from .optimizer import BestFeasible, best_feasible, run
from .testfuns import get_spec, tension
from .yaml import load_config

log = logging.getLogger(__name__)

INFEASIBLE_START_POLICY = 'maximize_probability_of_feasibility'


@dataclass(frozen=True)
class BenchSummary:
    min: float
    q1: float
    median: float
    mean: float
    q3: float
    max: float
    n_reps: int
    n_failed: int = 0

    def to_dict(self):
        return {kk: float(getattr(self, kk))
                for kk in ('min', 'q1', 'median', 'mean', 'q3', 'max')}

    def to_text(self, digits=4):
        """Two-line table in the layout of R's ``summary()``."""
        header = ['Min.', '1st Qu.', 'Median', 'Mean', '3rd Qu.', 'Max.']
        values = [f'{vv:.{digits}g}' for vv in self.to_dict().values()]
        width = max(len(ss) for ss in header + values)
        return ('\n'.join(' '.join(ss.rjust(width) for ss in row)
                          for row in (header, values)))


@dataclass(frozen=True)
class LiteratureRecord:
    source: str
    x: tuple
    reported_best: float


# Best published tension spring designs
LITERATURE = (
    LiteratureRecord('Coello (2000)', (0.051480, 0.351661, 11.632201), 0.012704),
    LiteratureRecord('He and Wang (2007)', (0.051728, 0.357644, 11.244543), 0.012675),
    LiteratureRecord('Gandomi et al. (2013)', (0.051690, 0.356730, 11.288500), 0.012670),
    LiteratureRecord('Mirjalili et al. (2014)', (0.051690, 0.356737, 11.288850), 0.012666),
    LiteratureRecord('Lee and Geem (2005)', (0.051154, 0.349871, 12.076432), 0.012671),
    LiteratureRecord('Askarzadeh (2016)', (0.051689, 0.356717, 11.289012), 0.012665),
    LiteratureRecord('Mirjalili et al. (2017)', (0.051207, 0.345215, 12.004032), 0.012676),
    LiteratureRecord('Li et al. (2019)', (0.051618, 0.355004, 11.390144), 0.012665),
    )

LITERATURE_BEST = min(rec.reported_best for rec in LITERATURE)


def _single_rep(args):
    name, start, end, seed, config = args
    try:
        return best_feasible(run(name, start=start, end=end, seed=seed,
                                 config=config))
    except (XcboError, np.linalg.LinAlgError) as err:
        log.warning(f'{name}: run with seed {seed} failed: {err!r}')
        return BestFeasible(x_best=None, obj_best=np.nan, found=False)


def run_reps(name, start, end, n_reps, base_seed=0, config=None,
             n_workers=None):
    """Independent optimization runs with seeds base_seed + 0..n_reps-1.

    Returns the list of BestFeasible in rep order, whatever the number of
    workers. A rep whose run fails counts as a rep without a feasible
    point.
    """
    if n_reps < 1:
        raise ValueError('n_reps must be at least 1')
    get_spec(name)
    cfg = load_config(config)
    if n_workers is None:
        n_workers = cfg['bench']['n_workers']

    jobs = [(name, start, end, base_seed + rep, cfg) for rep in range(n_reps)]
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(_single_rep, jobs))
    else:
        results = [_single_rep(jj) for jj in jobs]

    for rep, res in enumerate(results):
        if not res.found:
            log.warning(f'{name}: rep {rep} (seed {base_seed + rep}) found '
                        'no feasible point')
    return results


def summarize(values):
    """Min, quartiles (linear interpolation, R type 7), mean and max."""
    values = np.asarray(values, dtype=float).ravel()
    if len(values) == 0:
        raise ValueError('Cannot summarize an empty vector')
    q1, median, q3 = np.quantile(values, [0.25, 0.5, 0.75])
    return BenchSummary(min=float(np.min(values)), q1=float(q1),
                        median=float(median),
                        mean=float(np.clip(np.mean(values), np.min(values),
                                           np.max(values))),
                        q3=float(q3), max=float(np.max(values)),
                        n_reps=len(values))


def summarize_reps(results):
    """Summary over reps that found a feasible point, failures counted."""
    values = [rr.obj_best for rr in results if rr.found]
    n_failed = len(results) - len(values)
    if not values:
        return None
    return replace(summarize(values), n_reps=len(results), n_failed=n_failed)


def compare_literature(summary):
    """Set the achieved tension spring weights against published designs."""
    records = []
    for rec in LITERATURE:
        ev = tension(*rec.x)
        records.append({
            'source': rec.source,
            'x': list(rec.x),
            'reported_best': rec.reported_best,
            'evaluated_obj': ev.obj,
            'max_con': float(np.max(ev.con)),
            })
    return {
        'literature_best': LITERATURE_BEST,
        'achieved_min': summary.min,
        'achieved_median': summary.median,
        'undercuts_literature_best': bool(summary.min < LITERATURE_BEST),
        'records': records,
        }


def make_report(name, start, end, n_reps, base_seed, results):
    summary = summarize_reps(results)
    if summary is not None and name == 'tension':
        literature = compare_literature(summary)
    else:
        literature = None
    return {
        'function': name,
        'start': start,
        'end': end,
        'n_reps': n_reps,
        'base_seed': base_seed,
        'summary': None if summary is None else summary.to_dict(),
        'n_failed': n_reps if summary is None else summary.n_failed,
        'infeasible_start_policy': INFEASIBLE_START_POLICY,
        'literature': [] if literature is None else literature['records'],
        'undercuts_literature_best': (None if literature is None
                                      else literature['undercuts_literature_best']),
        }


def reps_frame(results, base_seed, dim):
    rows = []
    for rep, res in enumerate(results):
        row = {'rep': rep, 'seed': base_seed + rep,
               'obj_best': res.obj_best if res.found else np.nan}
        for jj in range(dim):
            row[f'x{jj + 1}'] = res.x_best[jj] if res.found else np.nan
        rows.append(row)
    return pd.DataFrame(rows)


def write_report(report, reps, out):
    """Write ``<out>.json`` and ``<out>_reps.csv``."""
    out = Path(out)
    json_path = out.with_name(out.name + '.json')
    csv_path = out.with_name(out.name + '_reps.csv')
    with open(json_path, 'w') as fid:
        json.dump(report, fid, indent=2)
        fid.write('\n')
    reps.to_csv(csv_path, index=False, float_format='%.17g', na_rep='')
    return json_path, csv_path
