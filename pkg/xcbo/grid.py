from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .exceptions import GridError
from .optimizer import BestFeasible
from .testfuns import get_spec


@dataclass(frozen=True)
class GridRequest:
    """Regular grid over one or two free axes, other coordinates pinned.

    ``fixed`` maps 0-based coordinate indices to pinned values.
    """
    name: str
    resolution: int
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        spec = get_spec(self.name)
        if self.resolution < 2:
            raise GridError('resolution must be at least 2')
        for jj, vv in self.fixed.items():
            if not 0 <= jj < spec.dim:
                raise GridError(f'Cannot pin coordinate x{jj + 1} of '
                                f'{self.name} (dimension {spec.dim})')
            if not spec.domain.lower[jj] <= vv <= spec.domain.upper[jj]:
                raise GridError(f'Pinned x{jj + 1}={vv} is outside of the domain')
        n_free = spec.dim - len(self.fixed)
        if n_free not in (1, 2):
            raise GridError(f'{n_free} free axes, a grid needs 1 or 2')

    @property
    def spec(self):
        return get_spec(self.name)

    @property
    def free_axes(self):
        return [jj for jj in range(self.spec.dim) if jj not in self.fixed]

    def axis_values(self):
        domain = self.spec.domain
        return [np.linspace(domain.lower[jj], domain.upper[jj], self.resolution)
                for jj in self.free_axes]

    def points(self, chunk=None):
        """(n, d) grid points, first free axis fastest.

        With ``chunk``, only the rows for that index of the slowest free axis.
        """
        axes = self.axis_values()
        if len(axes) == 2 and chunk is not None:
            axes = [axes[0], axes[1][chunk:chunk + 1]]
        mesh = np.meshgrid(*axes, indexing='xy')
        X = np.empty((mesh[0].size, self.spec.dim))
        for jj, vv in self.fixed.items():
            X[:, jj] = vv
        for jj, mm in zip(self.free_axes, mesh):
            X[:, jj] = mm.ravel()
        return X


def make_grid(name, resolution, fixed=None):
    """Objective and constraints on a grid, one row per point.

    Columns are the free coordinates (``x<i>``), ``obj`` and
    ``con1..conm``.
    """
    request = GridRequest(name=name, resolution=resolution, fixed=fixed or {})
    spec = request.spec
    X = request.points()
    obj, con = spec.evaluate_many(X)
    df = pd.DataFrame({f'x{jj + 1}': X[:, jj] for jj in request.free_axes})
    df['obj'] = obj
    for kk in range(spec.n_constraints):
        df[f'con{kk + 1}'] = con[:, kk]
    return df


def grid_oracle(name, resolution, fixed=None):
    """Brute-force feasible minimum over the grid, evaluated in slices."""
    request = GridRequest(name=name, resolution=resolution, fixed=fixed or {})
    spec = request.spec
    chunks = range(resolution) if len(request.free_axes) == 2 else [None]

    best = BestFeasible(x_best=None, obj_best=np.nan, found=False)
    for chunk in chunks:
        X = request.points(chunk=chunk)
        obj, con = spec.evaluate_many(X)
        feasible = np.all(con <= 0, axis=1)
        if not np.any(feasible):
            continue
        obj = np.where(feasible, obj, np.inf)
        ii = int(np.argmin(obj))
        if not best.found or obj[ii] < best.obj_best:
            best = BestFeasible(x_best=X[ii], obj_best=float(obj[ii]),
                                found=True)
    return best
