import numpy as np

from .base import BoxDomain, FunctionSpec


def _gram_formula(x):
    x1, x2 = x[..., 0], x[..., 1]
    obj = x1 + x2
    con = np.stack([
        1.5 - x1 - 2 * x2 - 0.5 * np.sin(2 * np.pi * (x1**2 - 2 * x2)),
        x1**2 + x2**2 - 1.5,
        ], axis=-1)
    return obj, con


def _mtp_formula(x):
    x1, x2 = x[..., 0], x[..., 1]
    obj = -np.cos((x1 - 0.1) * x2)**2 - x1 * np.sin(3 * x1 + x2)

    tt = np.arctan2(x1, x2)
    radius = (2 * np.cos(tt) - 0.5 * np.cos(2 * tt)
              - 0.25 * np.cos(3 * tt) - 0.125 * np.cos(4 * tt))
    con = np.stack([
        x1**2 + x2**2 - radius**2 - (2 * np.sin(tt))**2,
        x1**2 + x2**2 - 4,
        ], axis=-1)
    return obj, con


GRAM = FunctionSpec(
    name='gram',
    dim=2,
    domain=BoxDomain(lower=(0, 0), upper=(1, 1)),
    n_constraints=2,
    description=(
        'Linear objective with a sinusoidal and a disk constraint; the '
        'feasible set is small and disconnected.'),
    formula=_gram_formula,
    )

MTP = FunctionSpec(
    name='mtp',
    dim=2,
    domain=BoxDomain(lower=(-2.25, -2.5), upper=(2.5, 1.75)),
    n_constraints=2,
    description=(
        'Multimodal trigonometric objective restricted to a heart-shaped '
        'region intersected with a disk of radius 2.'),
    formula=_mtp_formula,
    )


def gram(x1, x2):
    return GRAM.evaluate((x1, x2))


def mtp(x1, x2):
    return MTP.evaluate((x1, x2))
