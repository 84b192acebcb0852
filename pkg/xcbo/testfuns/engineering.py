import numpy as np

from .base import BoxDomain, FunctionSpec


def _tension_formula(x):
    x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]

    obj = (x3 + 2) * x2 * x1**2

    # con3 denominator is 12566*x2*x1^3 - x1^4; it stays positive on the box
    # since x2 >= 0.25 and x1 <= 2
    con = np.stack([
        1 - (x2**3 * x3) / (71785 * x1**4),
        1 - (140.45 * x1) / (x2**2 * x3),
        (4 * x2**2 - x1 * x2) / (12566 * x2 * x1**3 - x1**4)
            + 1 / (5108 * x1**2) - 1,
        (x1 + x2) / 1.5 - 1,
        ], axis=-1)

    return obj, con


def _pressure_formula(x):
    x1, x2, x3, x4 = x[..., 0], x[..., 1], x[..., 2], x[..., 3]

    obj = (0.6224 * x1 * x3 * x4 + 1.7781 * x2 * x3**2
           + 3.1661 * x1**2 * x4 + 19.84 * x1**2 * x3)

    con = np.stack([
        -x1 + 0.0193 * x3,
        -x2 + 0.00954 * x3,
        -np.pi * x3**2 * x4 - (4 / 3) * np.pi * x3**3 + 1296000,
        x4 - 240,
        ], axis=-1)

    return obj, con


TENSION = FunctionSpec(
    name='tension',
    dim=3,
    domain=BoxDomain(lower=(0.05, 0.25, 2), upper=(2, 1.3, 15)),
    n_constraints=4,
    description=(
        'Weight of a tension spring to be minimized under shear stress, '
        'surge frequency and deflection constraints. Inputs: wire diameter '
        '(x1), mean coil diameter (x2), number of active coils (x3).'),
    formula=_tension_formula,
    domain_source='published',
    )

PRESSURE = FunctionSpec(
    name='pressure',
    dim=4,
    domain=BoxDomain(lower=(0.0625, 0.0625, 10, 10),
                     upper=(6.1875, 6.1875, 200, 200)),
    n_constraints=4,
    description=(
        'Cost of constructing a cylindrical pressure vessel with '
        'hemispherical heads. Inputs: shell thickness (x1), head thickness '
        '(x2), inner radius (x3), length of the cylindrical section (x4). '
        'Thicknesses are continuous.'),
    formula=_pressure_formula,
    )


def tension(x1, x2, x3):
    return TENSION.evaluate((x1, x2, x3))


def pressure(x1, x2, x3, x4):
    return PRESSURE.evaluate((x1, x2, x3, x4))
