from types import MappingProxyType

from ..exceptions import UnknownFunction
from .blackbox import (BBOX1, BBOX2, BBOX3, BBOX4, BBOX5, BBOX6, BBOX7,
                       SPRINKLER)
from .engineering import PRESSURE, TENSION
from .known import GRAM, MTP

REGISTRY = MappingProxyType({spec.name: spec for spec in [
    BBOX1, BBOX2, BBOX3, BBOX4, BBOX5, BBOX6, BBOX7,
    GRAM, MTP, PRESSURE, SPRINKLER, TENSION]})

# functions whose formulas replace hidden originals
STANDIN_NAMES = frozenset([
    'bbox1', 'bbox2', 'bbox3', 'bbox4', 'bbox5', 'bbox6', 'bbox7',
    'mtp', 'sprinkler'])


def list_functions():
    return list(REGISTRY.values())


def get_spec(name):
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownFunction(name) from None


def evaluate(name, x):
    return get_spec(name).evaluate(x)


def evaluate_standin(name, x):
    if name not in STANDIN_NAMES:
        raise UnknownFunction(name)
    return REGISTRY[name].evaluate(x)
