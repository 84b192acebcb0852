from pathlib import Path

import pytest

import xcbo.yaml

from _complementary_oracles import fast_config, fast_config_yaml_str

test_data_dir = Path(__file__).parent.parent / 'test_data'


def test_defaults():
    cfg = xcbo.yaml.load_config()
    assert cfg['gp']['jitter'] == 1e-8
    assert isinstance(cfg['gp']['jitter'], float)
    assert cfg['gp']['max_jitter'] == 1e-4
    assert cfg['gp']['n_starts'] == 5
    assert cfg['gp']['theta_bounds'] == [1e-3, 10.]
    assert cfg['optimizer']['candidates_per_dim'] == 200
    assert cfg['optimizer']['duplicate_tol'] == 1e-9
    assert cfg['gp']['refit_maxfev'] == 50
    assert cfg['optimizer']['full_refit_until'] == 50
    assert cfg['optimizer']['full_refit_every'] == 20
    assert cfg['bench']['n_workers'] == 1

    # callers get a fresh copy
    cfg['gp']['n_starts'] = 1
    assert xcbo.yaml.load_config()['gp']['n_starts'] == 5


def test_overrides():
    assert fast_config['gp']['n_starts'] == 2
    assert fast_config['gp']['jitter'] == 1e-8
    assert fast_config['optimizer']['polish_evaluations'] == 10

    from_file = xcbo.yaml.load_config(test_data_dir / 'fast_config.yaml')
    assert from_file == fast_config
    assert xcbo.yaml.load(fast_config_yaml_str)['gp']['maxfev'] == 60


def test_unknown_keys(tmp_path):
    with pytest.raises(ValueError):
        xcbo.yaml.load_config({'gp': {'nugget': 1e-6}})
    with pytest.raises(ValueError):
        xcbo.yaml.load_config({'surrogate': {}})

    path = tmp_path / 'empty.yaml'
    path.write_text('')
    assert xcbo.yaml.load_config(path) == xcbo.yaml.load_config()
