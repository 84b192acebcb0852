from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..exceptions import InvalidInput, OutOfDomain


@dataclass(frozen=True)
class BoxDomain:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        lower = tuple(float(vv) for vv in self.lower)
        upper = tuple(float(vv) for vv in self.upper)
        if len(lower) != len(upper):
            raise ValueError('lower and upper bounds must have the same length')
        if not all(ll < uu for ll, uu in zip(lower, upper)):
            raise ValueError('lower bounds must be strictly below upper bounds')
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @property
    def dim(self):
        return len(self.lower)

    @property
    def bounds(self):
        """(d, 2) array of [lower, upper] rows."""
        return np.array([self.lower, self.upper]).T

    @property
    def midpoint(self):
        return 0.5 * (np.array(self.lower) + np.array(self.upper))

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= np.array(self.lower))
                    and np.all(x <= np.array(self.upper)))

    def to_unit(self, x):
        lower, upper = np.array(self.lower), np.array(self.upper)
        return (np.asarray(x, dtype=float) - lower) / (upper - lower)

    def from_unit(self, u):
        lower, upper = np.array(self.lower), np.array(self.upper)
        # rounding may otherwise step one ulp past the bounds
        return np.clip(lower + np.asarray(u, dtype=float) * (upper - lower),
                       lower, upper)


@dataclass(frozen=True)
class Evaluation:
    obj: float
    con: np.ndarray

    @property
    def feasible(self):
        # empty constraint vector: always feasible
        return bool(np.all(self.con <= 0))

    @property
    def status(self):
        return 'Met' if self.feasible else 'Not Met'

    def to_dict(self):
        return {'obj': float(self.obj), 'con': [float(cc) for cc in self.con]}


@dataclass(frozen=True)
class FunctionSpec:
    """Catalog entry of a computer model.

    ``formula`` maps an (..., d) array to ``(obj, con)`` with shapes (...)
    and (..., m); it never validates its input.
    """
    name: str
    dim: int
    domain: BoxDomain
    n_constraints: int
    description: str
    formula: Callable = field(repr=False, compare=False)
    domain_source: str = 'chosen'

    @property
    def constrained(self):
        return self.n_constraints > 0

    @property
    def optimization_type(self):
        return 'Constrained' if self.constrained else 'Unconstrained'

    def evaluate(self, x):
        x = validate_input(self, x)
        obj, con = self.formula(x)
        return Evaluation(obj=float(obj),
                          con=np.asarray(con, dtype=float).reshape(self.n_constraints))

    def evaluate_many(self, X):
        """Vectorized evaluation of an (n, d) array of in-domain points."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != self.dim:
            raise InvalidInput()
        if not (np.all(X >= np.array(self.domain.lower))
                and np.all(X <= np.array(self.domain.upper))):
            raise OutOfDomain()
        obj, con = self.formula(X)
        return (np.asarray(obj, dtype=float).reshape(len(X)),
                np.asarray(con, dtype=float).reshape(len(X), self.n_constraints))


def validate_input(spec, x):
    """Check ``x`` against ``spec`` and return it as a float array.

    Raises InvalidInput for a wrong length or non-finite/non-numeric
    entries, OutOfDomain when a coordinate leaves the box. Boundary points
    are accepted.
    """
    try:
        arr = np.asarray(x, dtype=float)
    except (TypeError, ValueError):
        raise InvalidInput()

    if arr.ndim != 1 or arr.shape[0] != spec.dim or not np.all(np.isfinite(arr)):
        raise InvalidInput()

    if not spec.domain.contains(arr):
        raise OutOfDomain()

    return arr


def no_constraints(x):
    return np.zeros(np.shape(x)[:-1] + (0,))
