from .base import BoxDomain, Evaluation, FunctionSpec, validate_input
from .registry import REGISTRY, STANDIN_NAMES
from .registry import list_functions, get_spec, evaluate, evaluate_standin
from .engineering import tension, pressure
from .known import gram, mtp
from .blackbox import bbox1, bbox2, bbox3, bbox4, bbox5, bbox6, bbox7
from .blackbox import sprinkler
