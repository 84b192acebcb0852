import json

import numpy as np
import pandas as pd
import pytest

import xcbo
from xcbo import bench, optimizer
from xcbo.exceptions import NonPositiveDefinite, UnknownFunction

from _complementary_oracles import fast_config, type7_quantile


def test_summarize_examples():
    ss = bench.summarize([1, 2, 3, 4, 5])
    assert (ss.min, ss.q1, ss.median, ss.mean, ss.q3, ss.max) == (1, 2, 3, 3, 4, 5)
    assert ss.n_reps == 5

    ss = bench.summarize([5, 1, 4, 2])
    assert (ss.q1, ss.median, ss.q3) == (1.75, 3, 4.25)

    ss = bench.summarize([7.5])
    assert ss.min == ss.q1 == ss.median == ss.mean == ss.q3 == ss.max == 7.5

    with pytest.raises(ValueError):
        bench.summarize([])


def test_summarize_against_quantile_oracle():
    rng = np.random.default_rng(9)
    for _ in range(1000):
        values = rng.normal(size=rng.integers(1, 40)) * 10**rng.uniform(-3, 3)
        ss = bench.summarize(values)
        for pp, got in zip([0.25, 0.5, 0.75], [ss.q1, ss.median, ss.q3]):
            want = type7_quantile(values, pp)
            assert abs(got - want) <= 1e-12 * max(1, abs(want))
        assert ss.min <= ss.q1 <= ss.median <= ss.q3 <= ss.max
        assert ss.min <= ss.mean <= ss.max

        ss_perm = bench.summarize(rng.permutation(values))
        assert (ss_perm.min, ss_perm.q1, ss_perm.median, ss_perm.q3, ss_perm.max) \
            == (ss.min, ss.q1, ss.median, ss.q3, ss.max)
        assert np.isclose(ss_perm.mean, ss.mean, atol=0, rtol=1e-12)


def test_summary_text():
    text = bench.summarize([0.01081, 0.01255, 0.01302, 0.02]).to_text()
    header, values = text.splitlines()
    assert header.split() == ['Min.', '1st', 'Qu.', 'Median', 'Mean', '3rd',
                              'Qu.', 'Max.']
    assert values.split()[0] == '0.01081'
    assert len(header) == len(values)


def test_literature_records():
    for rec in bench.LITERATURE:
        ev = xcbo.testfuns.tension(*rec.x)
        assert np.all(ev.con <= 1e-3), rec.source
        rel_err = abs(ev.obj - rec.reported_best) / rec.reported_best
        if rec.source == 'Lee and Geem (2005)':
            # the published design and objective of this row do not match
            assert rel_err < 2e-2
        else:
            assert rel_err < 5e-3, rec.source

    assert bench.LITERATURE_BEST == 0.012665


def test_compare_literature():
    summary = bench.summarize([0.0112, 0.0125, 0.0130])
    cmp = bench.compare_literature(summary)
    assert cmp['undercuts_literature_best']
    assert cmp['achieved_min'] == 0.0112
    assert len(cmp['records']) == 8

    summary = bench.summarize([0.0128, 0.0130])
    assert not bench.compare_literature(summary)['undercuts_literature_best']


def test_run_reps_deterministic():
    results = bench.run_reps('bbox6', start=5, end=7, n_reps=3, base_seed=10,
                             config=fast_config)
    again = bench.run_reps('bbox6', start=5, end=7, n_reps=3, base_seed=10,
                           config=fast_config)
    assert [rr.obj_best for rr in results] == [rr.obj_best for rr in again]

    direct = optimizer.best_feasible(
        optimizer.run('bbox6', start=5, end=7, seed=11, config=fast_config))
    assert results[1].found == direct.found
    if direct.found:
        assert results[1].obj_best == direct.obj_best
        assert np.array_equal(results[1].x_best, direct.x_best)

    with pytest.raises(ValueError):
        bench.run_reps('bbox6', start=5, end=7, n_reps=0)


def test_run_reps_workers_match_sequential():
    kwargs = dict(start=5, end=7, n_reps=4, base_seed=0, config=fast_config)
    sequential = bench.run_reps('gram', n_workers=1, **kwargs)
    parallel = bench.run_reps('gram', n_workers=2, **kwargs)
    for ss, pp in zip(sequential, parallel):
        assert ss.found == pp.found
        if ss.found:
            assert ss.obj_best == pp.obj_best
            assert np.array_equal(ss.x_best, pp.x_best)


def test_failed_rep_is_recorded(monkeypatch, caplog):
    calls = []
    fit_surrogates = optimizer.fit_surrogates

    def failing_first_fit(*args, **kwargs):
        calls.append(1)
        if len(calls) == 1:
            raise NonPositiveDefinite('forced failure')
        return fit_surrogates(*args, **kwargs)

    monkeypatch.setattr(optimizer, 'fit_surrogates', failing_first_fit)
    results = bench.run_reps('bbox6', start=4, end=5, n_reps=2, base_seed=0,
                             config=fast_config)
    assert len(results) == 2
    assert not results[0].found
    assert 'seed 0 failed' in caplog.text

    monkeypatch.undo()
    direct = optimizer.best_feasible(
        optimizer.run('bbox6', start=4, end=5, seed=1, config=fast_config))
    assert results[1].found == direct.found
    if direct.found:
        assert results[1].obj_best == direct.obj_best

        assert bench.summarize_reps(results).n_failed == 1

    with pytest.raises(UnknownFunction):
        bench.run_reps('nosuch', start=4, end=5, n_reps=2)


def test_tension_reduced_benchmark():
    results = bench.run_reps('tension', start=10, end=80, n_reps=3,
                             base_seed=0, config=fast_config)
    found = [rr for rr in results if rr.found]
    assert found
    for rr in found:
        ev = xcbo.testfuns.tension(*rr.x_best)
        assert ev.feasible
        assert ev.obj == rr.obj_best
        # no feasible design is lighter than the best published ones
        assert rr.obj_best >= bench.LITERATURE_BEST * (1 - 1e-3)


def test_summarize_reps_counts_failures():
    results = [
        optimizer.BestFeasible(x_best=np.array([0.]), obj_best=2., found=True),
        optimizer.BestFeasible(x_best=None, obj_best=np.nan, found=False),
        optimizer.BestFeasible(x_best=np.array([1.]), obj_best=4., found=True),
        ]
    summary = bench.summarize_reps(results)
    assert summary.n_reps == 3
    assert summary.n_failed == 1
    assert summary.median == 3.

    assert bench.summarize_reps(results[1:2]) is None

    report = bench.make_report('bbox6', 5, 7, 1, 0, results[1:2])
    assert report['summary'] is None
    assert report['n_failed'] == 1


def test_report_files(tmp_path):
    results = bench.run_reps('tension', start=4, end=6, n_reps=2, base_seed=0,
                             config=fast_config)
    report = bench.make_report('tension', 4, 6, 2, 0, results)
    assert report['infeasible_start_policy'] == bench.INFEASIBLE_START_POLICY
    assert report['n_reps'] == 2
    if report['summary'] is not None:
        assert len(report['literature']) == 8
        assert isinstance(report['undercuts_literature_best'], bool)

    reps = bench.reps_frame(results, 0, 3)
    json_path, csv_path = bench.write_report(report, reps, tmp_path / 'tension')
    assert json_path.name == 'tension.json'
    assert csv_path.name == 'tension_reps.csv'

    with open(json_path) as fid:
        assert json.load(fid) == json.loads(json.dumps(report))

    df = pd.read_csv(csv_path)
    assert list(df.columns) == ['rep', 'seed', 'obj_best', 'x1', 'x2', 'x3']
    assert list(df['seed']) == [0, 1]

    again = bench.make_report(
        'tension', 4, 6, 2, 0,
        bench.run_reps('tension', start=4, end=6, n_reps=2, base_seed=0,
                       config=fast_config))
    assert json.dumps(again) == json.dumps(report)
