import copy
import re
from functools import lru_cache
from pathlib import Path

import yaml

# By default yaml interprets 1e-8 as string and not as float
# This is a workaround to force yaml to interpret it as float
# See https://github.com/yaml/pyyaml/issues/173

loader = yaml.SafeLoader
loader.add_implicit_resolver(
    u'tag:yaml.org,2002:float',
    re.compile(u'''^(?:
     [-+]?(?:[0-9][0-9_]*)\\.[0-9_]*(?:[eE][-+]?[0-9]+)?
    |[-+]?(?:[0-9][0-9_]*)(?:[eE][-+]?[0-9]+)
    |\\.[0-9_]+(?:[eE][-+][0-9]+)?
    |[-+]?[0-9][0-9_]*(?::[0-5]?[0-9])+\\.[0-9_]*
    |[-+]?\\.(?:inf|Inf|INF)
    |\\.(?:nan|NaN|NAN))$''', re.X),
    list(u'-+0123456789.'))

default_config_file = Path(__file__).parent / 'default_config.yaml'


def load(data):
    return yaml.safe_load(data)


@lru_cache(maxsize=None)
def _default_config_text():
    with open(default_config_file, 'r') as fid:
        return fid.read()


def load_config(config=None):
    """Return the numerical settings, defaults overridden by ``config``.

    Parameters
    ----------
    config : dict, str, pathlib.Path or None
        Overrides, either as a nested dict or as the path of a YAML file
        with the same sections as ``default_config.yaml``.

    Returns
    -------
    dict
        A fresh copy; callers may mutate it.
    """
    out = load(_default_config_text())

    if config is None:
        return out

    if isinstance(config, (str, Path)):
        with open(config, 'r') as fid:
            config = load(fid.read()) or {}

    for section, values in config.items():
        if section not in out:
            raise ValueError(f'Unknown configuration section `{section}`')
        for kk, vv in values.items():
            if kk not in out[section]:
                raise ValueError(f'Unknown configuration key `{section}.{kk}`')
            out[section][kk] = copy.deepcopy(vv)

    return out
