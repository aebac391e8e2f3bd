"""
Discrete eigenpairs of the radial Laplacian.
"""

import logging
import math

import numpy as np

from .errors import DegenerateLinearizationError, NumericalFailure
from .grid import inner, norm
from .laplacian import apply, count_below, solve_shifted
from .specfun import bessel_j0, bessel_j1, j0_zero

log = logging.getLogger(__name__)

EIGEN_TOL = 1e-12
MAX_ITERATIONS = 500

# Residuals below this may have reached the round-off floor of apply().
FLOOR_TOL = 1e-6

# Half-width of the window around zero that counts as degenerate.
DEGENERACY_TOL = 1e-10


class EigenPair(object):
    """
    First Dirichlet eigenpair of a discrete radial Laplacian.

    phi1 is positive inside the disk, vanishes on the boundary and has unit
    disk L2 norm.  lambda1_ref is the closed-form value j_{0,1}^2.
    """

    def __init__(self, grid, lambda1, phi1, iterations=0):
        phi1.flags.writeable = False
        self.grid = grid
        self.lambda1 = lambda1
        self.phi1 = phi1
        self.iterations = iterations
        self.lambda1_ref = j0_zero(1) ** 2
        self.phi1_deriv_boundary = (phi1[-1] - phi1[-2]) / grid.h

    @property
    def relative_error(self):
        return abs(self.lambda1 - self.lambda1_ref) / self.lambda1_ref

    def __repr__(self):
        return "<EigenPair: lambda1=%.12g, n=%d>" % (self.lambda1,
                                                     self.grid.n)


def first_eigenpair(A):
    "Compute the first eigenpair by inverse iteration with shift 0."

    g = A.grid
    phi = g.dirichlet(1.0)

    lam, phi, count = _inverse_iteration(A, phi, deflate=None)

    if np.sum(phi) < 0:
        phi = -phi

    phi = phi / norm(g, phi)
    phi[-1] = 0.0

    log.debug("lambda1 = %.15g after %d iterations", lam, count)
    return EigenPair(g, lam, phi, count)


def radial_gap(A, eig=None):
    """
    Return lambda2 - lambda1 for the radial spectrum of A.

    The second eigenvalue comes from inverse iteration with the first
    eigenvector deflated after every solve.
    """

    if eig is None:
        eig = first_eigenpair(A)

    g = A.grid
    start = g.dirichlet(np.cos(1.5 * math.pi * g.nodes))
    lam2, _, count = _inverse_iteration(A, start, deflate=eig.phi1)

    log.debug("lambda2 = %.15g after %d iterations", lam2, count)
    return lam2 - eig.lambda1


def morse_index(A, potential):
    """
    Number of negative eigenvalues of u -> A u - potential*u.

    Raises DegenerateLinearizationError when an eigenvalue lies within
    DEGENERACY_TOL of zero.
    """

    op = A.shifted(A.grid.field(potential))
    below = count_below(op, -DEGENERACY_TOL)
    above = count_below(op, DEGENERACY_TOL)

    if below != above:
        raise DegenerateLinearizationError(
            "%d eigenvalue(s) within %g of zero" % (above - below,
                                                    DEGENERACY_TOL))

    return below


def reference_phi1(g):
    "Closed-form first eigenfunction J0(j r)/(sqrt(pi) J1(j)) on a grid."

    j = j0_zero(1)
    phi = bessel_j0(j * g.nodes) / (math.sqrt(math.pi) * bessel_j1(j))
    phi[-1] = 0.0
    return phi


def _inverse_iteration(A, v, deflate):
    g = A.grid
    previous = np.inf

    for count in range(1, MAX_ITERATIONS + 1):
        v = solve_shifted(A, 0.0, v)
        if deflate is not None:
            v = v - inner(g, v, deflate) * deflate

        v = v / norm(g, v)
        Av = apply(A, v)
        lam = inner(g, Av, v)
        res = norm(g, Av - lam * v)

        if res <= EIGEN_TOL:
            return lam, v, count

        if res <= FLOOR_TOL and res > 0.5 * previous:
            log.debug("eigen residual at round-off floor: %.3g", res)
            return lam, v, count

        previous = res

    raise NumericalFailure("inverse iteration did not converge in %d "
                           "iterations (residual %.3g)"
                           % (MAX_ITERATIONS, res))
