"""Stand-in formulas for the black-box models.

The internals of the original black-box models are deliberately hidden;
what is reproduced here is their interface (input dimension, printed
domains, constraint count). The formulas themselves are documented
replacements, their optima certified by grid search (see ``xcbo.grid``).
"""
import numpy as np

from .base import BoxDomain, FunctionSpec, no_constraints

_HARTMANN3_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
_HARTMANN3_A = np.array([
    [3.0, 10, 30],
    [0.1, 10, 35],
    [3.0, 10, 30],
    [0.1, 10, 35]])
_HARTMANN3_P = 1e-4 * np.array([
    [3689, 1170, 2673],
    [4699, 4387, 7470],
    [1091, 8732, 5547],
    [381, 5743, 8828]])


def _bbox1_formula(x):
    x1, x2 = x[..., 0], x[..., 1]
    obj = np.sin(x1 + x2) + (x1 - x2)**2 - 1.5 * x1 + 2.5 * x2 + 1
    # x1*x2 + 0.5 <= 0 only in the second and fourth quadrant lobes
    con = np.stack([1.5 - x1**2 - x2**2, x1 * x2 + 0.5], axis=-1)
    return obj, con


def _bbox2_formula(x):
    # six-hump camel
    x1, x2 = x[..., 0], x[..., 1]
    obj = ((4 - 2.1 * x1**2 + x1**4 / 3) * x1**2 + x1 * x2
           + (-4 + 4 * x2**2) * x2**2)
    return obj, no_constraints(x)


def _bbox3_formula(x):
    x1, x2 = x[..., 0], x[..., 1]
    obj = (x1**2 + x2 - 11)**2 + (x1 + x2**2 - 7)**2
    return obj, no_constraints(x)


def _bbox4_formula(x):
    # Branin with a disk constraint
    x1, x2 = x[..., 0], x[..., 1]
    obj = ((x2 - 5.1 * x1**2 / (4 * np.pi**2) + 5 * x1 / np.pi - 6)**2
           + 10 * (1 - 1 / (8 * np.pi)) * np.cos(x1) + 10)
    con = ((x1 - 2.5)**2 + (x2 - 7.5)**2 - 50)[..., np.newaxis]
    return obj, con


def _bbox5_formula(x):
    # Hartmann-3
    dist = np.sum(_HARTMANN3_A * (x[..., np.newaxis, :] - _HARTMANN3_P)**2,
                  axis=-1)
    obj = -np.sum(_HARTMANN3_ALPHA * np.exp(-dist), axis=-1)
    return obj, no_constraints(x)


def _bbox6_formula(x):
    xx = x[..., 0]
    obj = np.sin(10 * np.pi * xx) / (2 * xx) + (xx - 1)**4
    con = np.stack([np.cos(3 * np.pi * xx), 0.7 - xx], axis=-1)
    return obj, con


def _bbox7_formula(x):
    ii = np.arange(1, x.shape[-1] + 1)
    obj = (np.sum(ii * x**2, axis=-1)
           - np.prod(np.cos(x / np.sqrt(ii)), axis=-1))
    con = np.stack([
        np.sum(x, axis=-1) - 2,
        0.5 - np.sum(x**2, axis=-1),
        ], axis=-1)
    return obj, con


def _sprinkler_formula(x):
    ii = np.arange(1, x.shape[-1] + 1)
    obj = (np.sum((x / (ii + 1))**2, axis=-1)
           - 2 * np.prod(np.cos(np.pi * x / (ii + 1)), axis=-1))
    return obj, no_constraints(x)


BBOX1 = FunctionSpec(
    name='bbox1', dim=2,
    domain=BoxDomain(lower=(-1.5, -3), upper=(2.5, 3)),
    n_constraints=2,
    description=('Smooth objective whose feasible set consists of two '
                 'disconnected lobes outside a disk.'),
    formula=_bbox1_formula,
    domain_source='published',
    )

BBOX2 = FunctionSpec(
    name='bbox2', dim=2,
    domain=BoxDomain(lower=(-3, -2), upper=(3, 2)),
    n_constraints=0,
    description='Six local minima, two of them global.',
    formula=_bbox2_formula,
    )

BBOX3 = FunctionSpec(
    name='bbox3', dim=2,
    domain=BoxDomain(lower=(-5, -5), upper=(5, 5)),
    n_constraints=0,
    description='Four global minima of value zero.',
    formula=_bbox3_formula,
    )

BBOX4 = FunctionSpec(
    name='bbox4', dim=2,
    domain=BoxDomain(lower=(-5, 0), upper=(10, 15)),
    n_constraints=1,
    description='Three-minimum landscape restricted to a disk.',
    formula=_bbox4_formula,
    )

BBOX5 = FunctionSpec(
    name='bbox5', dim=3,
    domain=BoxDomain(lower=(0, 0, 0), upper=(1, 1, 1)),
    n_constraints=0,
    description='Sum of four Gaussian wells in the unit cube.',
    formula=_bbox5_formula,
    )

BBOX6 = FunctionSpec(
    name='bbox6', dim=1,
    domain=BoxDomain(lower=(0.5,), upper=(2.5,)),
    n_constraints=2,
    description=('Oscillating one-dimensional objective; the feasible set is '
                 'a union of three intervals.'),
    formula=_bbox6_formula,
    )

BBOX7 = FunctionSpec(
    name='bbox7', dim=8,
    domain=BoxDomain(lower=(-1,) * 8, upper=(1,) * 8),
    n_constraints=2,
    description=('Weighted quadratic with a cosine product, kept away from '
                 'the origin by a spherical shell constraint.'),
    formula=_bbox7_formula,
    )

SPRINKLER = FunctionSpec(
    name='sprinkler', dim=8,
    domain=BoxDomain(lower=(0,) * 8, upper=(1,) * 8),
    n_constraints=0,
    description=('Scalar stand-in for the garden sprinkler model; its optimum '
                 'is not comparable to the physics-based original.'),
    formula=_sprinkler_formula,
    )


def bbox1(x1, x2):
    return BBOX1.evaluate((x1, x2))


def bbox2(x1, x2):
    return BBOX2.evaluate((x1, x2))


def bbox3(x1, x2):
    return BBOX3.evaluate((x1, x2))


def bbox4(x1, x2):
    return BBOX4.evaluate((x1, x2))


def bbox5(x1, x2, x3):
    return BBOX5.evaluate((x1, x2, x3))


def bbox6(x1):
    return BBOX6.evaluate((x1,))


def bbox7(x1, x2, x3, x4, x5, x6, x7, x8):
    return BBOX7.evaluate((x1, x2, x3, x4, x5, x6, x7, x8))


def sprinkler(x1, x2, x3, x4, x5, x6, x7, x8):
    return SPRINKLER.evaluate((x1, x2, x3, x4, x5, x6, x7, x8))
