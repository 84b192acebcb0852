from ._version import __version__
from .testfuns import list_functions, get_spec, evaluate, evaluate_standin
from .testfuns import validate_input
from .gp import fit, predict, log_likelihood
from .acquisition import expected_improvement, prob_feasible, efi
from .optimizer import lhs_design, propose_next, run, best_feasible
from .bench import run_reps, summarize, compare_literature
from .grid import make_grid, grid_oracle
from . import yaml
