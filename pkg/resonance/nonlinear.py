"""
The homotopy residual, its Jacobian and a damped Newton corrector.

At homotopy parameter t the discrete problem is F_t(u) = 0 with

    F_t(u) = A u - lambda1 u - t (e^u + f) - (1 - t) g(u)

where g is the truncated sine of the comparison equation.
"""

import logging
import math

import numpy as np

from .eigen import first_eigenpair, radial_gap
from .errors import ConfigError, OverflowBlowup, SingularSystemError
from .grid import make_grid, norm
from .laplacian import apply, assemble_laplacian, solve_shifted
from .utils import SortedDict

log = logging.getLogger(__name__)

# Largest state value allowed into the exponential.
OVERFLOW_GUARD = 700.0

NEWTON_TOL = 1e-10
MAX_NEWTON = 50
MAX_HALVINGS = 30

# Relative Newton step size below which the iteration has stalled.
STALL_TOL = 1e-13


class ProblemData(object):
    """
    The discrete problem: grid, operator, eigenpair, forcing and the
    scaling epsilon_g of the comparison nonlinearity.

    epsilon_g must lie in (0, lambda2 - lambda1) so that the comparison
    equation keeps zero as its only, non-degenerate, solution.
    """

    def __init__(self, grid, A, eig, f=None, epsilon_g=1.0, gap=None,
                 guard=OVERFLOW_GUARD):
        self.grid = grid
        self.A = A
        self.eig = eig
        self.f = grid.zeros() if f is None else grid.field(f).copy()
        self.f.flags.writeable = False
        self.guard = guard

        self.gap = radial_gap(A, eig) if gap is None else gap
        if not 0.0 < epsilon_g < self.gap:
            raise ConfigError("epsilon_g must lie in (0, %.6g), the radial "
                              "spectral gap; got %g" % (self.gap, epsilon_g))

        self.epsilon_g = float(epsilon_g)

    @staticmethod
    def setup(n, f=None, epsilon_g=1.0):
        "Assemble grid, operator and eigenpair for n interior nodes."

        grid = make_grid(n)
        A = assemble_laplacian(grid)
        eig = first_eigenpair(A)
        return ProblemData(grid, A, eig, f=f, epsilon_g=epsilon_g)

    def with_forcing(self, f):
        "Same discretization, another forcing."

        return ProblemData(self.grid, self.A, self.eig, f=f,
                           epsilon_g=self.epsilon_g, gap=self.gap,
                           guard=self.guard)

    @property
    def lambda1(self):
        return self.eig.lambda1

    @property
    def phi1(self):
        return self.eig.phi1

    def __repr__(self):
        return "<ProblemData: n=%d, epsilon_g=%g>" % (self.grid.n,
                                                       self.epsilon_g)


class NewtonReport(SortedDict):
    """
    Outcome of a Newton solve.
    """

    def __init__(self, **kw):
        super(NewtonReport, self).__init__()

        self["converged"] = kw.get("converged", False)
        self["floor"] = kw.get("floor", False)
        self["iterations"] = kw.get("iterations", 0)
        self["final_residual_norm"] = kw.get("final_residual_norm", np.inf)
        self["step_norms"] = list(kw.get("step_norms", []))
        self["reason"] = kw.get("reason", "")
        self["blowup"] = kw.get("blowup", False)

    @property
    def converged(self):
        return self["converged"]

    @property
    def floor(self):
        return self["floor"]

    @property
    def accepted(self):
        "Converged, or stalled at the round-off floor when that was allowed."
        return self["converged"] or self["floor"]

    @property
    def iterations(self):
        return self["iterations"]

    @property
    def final_residual_norm(self):
        return self["final_residual_norm"]

    @property
    def step_norms(self):
        return self["step_norms"]

    @property
    def reason(self):
        return self["reason"]

    @property
    def blowup(self):
        return self["blowup"]

    def __repr__(self):
        if self.converged:
            state = "converged"
        elif self.floor:
            state = "at round-off floor"
        else:
            state = "failed: " + self.reason
        return "<NewtonReport: %s, %d iterations, residual %.3g>" % (
            state, self.iterations, self.final_residual_norm)


def g_comparison(s, epsilon_g=1.0):
    "Truncated sine: epsilon_g*sin(s) on [-pi, pi], zero outside."

    if np.ndim(s):
        s = np.asarray(s, dtype=float)
        return np.where(np.abs(s) <= math.pi, epsilon_g * np.sin(s), 0.0)

    return epsilon_g * math.sin(s) if abs(s) <= math.pi else 0.0


def g_prime(s, epsilon_g=1.0):
    """
    Derivative of g_comparison, taking the inside value cos(+-pi) = -1 at
    the truncation points.
    """

    if np.ndim(s):
        s = np.asarray(s, dtype=float)
        return np.where(np.abs(s) <= math.pi, epsilon_g * np.cos(s), 0.0)

    return epsilon_g * math.cos(s) if abs(s) <= math.pi else 0.0


def residual(p, t, u):
    "Homotopy residual F_t(u); zero at the boundary node."

    u = p.grid.field(u)
    expu = _guarded_exp(p, u)

    F = (apply(p.A, u) - p.lambda1 * u - t * (expu + p.f) -
         (1.0 - t) * g_comparison(u, p.epsilon_g))
    F[-1] = 0.0
    return F


def jacobian(p, t, u):
    "Jacobian of F_t at u, as a tridiagonal operator."

    u = p.grid.field(u)
    expu = _guarded_exp(p, u)

    potential = (p.lambda1 + t * expu +
                 (1.0 - t) * g_prime(u, p.epsilon_g))
    return p.A.shifted(potential)


def newton_solve(p, t, u0, tol=NEWTON_TOL, max_iterations=MAX_NEWTON,
                 max_halvings=MAX_HALVINGS, floor=False):
    """
    Damped Newton iteration for F_t(u) = 0 from u0.

    Each step is halved until the disk L2 residual norm decreases.  A trial
    point beyond the exponent guard counts as no decrease.  The report is
    converged only when the residual is at most tol.  With floor set, an
    iterate that no representable step improves is marked floor instead,
    provided its residual is within the round-off floor of the operator,
    the larger of tol and eps * scale(A) * |u|.  Returns the last iterate
    and a NewtonReport; failures are reported, never raised.
    """

    g = p.grid
    u = g.dirichlet(u0)

    try:
        F = residual(p, t, u)
    except OverflowBlowup as e:
        return u, NewtonReport(reason=str(e), blowup=True)

    r = norm(g, F)
    steps = []
    reason = ""
    iterations = 0
    overflowed = False
    stalled = False

    while r > tol:
        if iterations == max_iterations:
            reason = "no convergence in %d iterations" % max_iterations
            break

        try:
            delta = solve_shifted(jacobian(p, t, u), 0.0, -F)
        except SingularSystemError as e:
            reason = "singular Jacobian: %s" % e
            break

        size = norm(g, delta)
        if size <= STALL_TOL * (1.0 + norm(g, u)):
            stalled = True
            reason = "step %.3g below resolution" % size
            break

        alpha = 1.0
        for _ in range(max_halvings + 1):
            trial = u + alpha * delta
            try:
                Ftrial = residual(p, t, trial)
                rtrial = norm(g, Ftrial)
            except OverflowBlowup:
                rtrial = np.inf
                overflowed = True

            if rtrial < r:
                break

            alpha *= 0.5
        else:
            stalled = True
            reason = "line search failed after %d halvings" % max_halvings
            break

        steps.append(alpha * size)
        u, F, r = trial, Ftrial, rtrial
        iterations += 1
        log.debug("t=%.6g newton %d: residual %.3g, damping %g",
                  t, iterations, r, alpha)

    converged = r <= tol
    at_floor = (floor and not converged and stalled and
                r <= roundoff_floor(p, u, tol))
    if at_floor:
        log.debug("t=%.6g: residual %.3g accepted at round-off floor (%s)",
                  t, r, reason)

    accepted = converged or at_floor
    report = NewtonReport(converged=converged, floor=at_floor,
                          iterations=iterations, final_residual_norm=r,
                          step_norms=steps,
                          reason="" if converged else reason,
                          blowup=not accepted and overflowed)
    return u, report


def roundoff_floor(p, u, tol=NEWTON_TOL):
    "Smallest residual norm the operator can resolve at u."

    eps = np.finfo(float).eps
    return max(tol, eps * p.A.scale * norm(p.grid, u))


def _guarded_exp(p, u):
    top = float(np.max(u))
    if top > p.guard:
        raise OverflowBlowup(top, p.guard)

    return np.exp(u)
