"""
Radial solutions of the resonant exponential problem on the unit disk by
homotopy continuation from a comparison equation.
"""

from .continuation import (ContinuationConfig, run_continuation,  # flake8: noqa
                           scan_threshold)
from .eigen import first_eigenpair, morse_index, radial_gap
from .forcing import ForcingSpec, build_forcing, mass
from .grid import make_grid, inner, integrate_disk
from .laplacian import assemble_laplacian
from .nonlinear import ProblemData, newton_solve
