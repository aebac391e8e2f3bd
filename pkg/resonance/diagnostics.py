"""
Measurements of homotopy states, and the uniqueness probe of the
comparison equation.

All integrals use the discrete eigenpair and the grid inner product, so
the solvability identity holds to Newton tolerance.
"""

import logging
import math

import numpy as np

from .grid import inner, integrate_disk, norm
from .nonlinear import g_comparison, newton_solve
from .utils import SortedDict

log = logging.getLogger(__name__)

# Sup norm below which a root counts as the zero solution.
ZERO_ROOT = 1e-9

TRACE_COLUMNS = ("t", "step", "newton_iters", "residual_norm", "T",
                 "omega_norm", "sup_norm", "exp_mass", "identity_residual",
                 "peak_radius")

PROBE_COLUMNS = ("start", "converged", "iterations", "sup_norm", "nonzero")


class Measurement(SortedDict):
    "Ordered record with attribute access to its entries."

    def __getattr__(self, attr):
        try:
            return self[attr]
        except KeyError:
            raise AttributeError(attr)


class HomotopyState(Measurement):
    """
    An accepted point (t, u_t) of the homotopy with its diagnostics.

    u = T*phi1 + omega with omega orthogonal to phi1; exp_mass is
    t*<e^u, phi1>, total_exp_mass is t*int(e^u), identity_residual the
    defect of the solvability identity and peak_radius the node where |u|
    peaks.
    """

    def __repr__(self):
        return "<HomotopyState: t=%.6g, sup=%.6g>" % (self.t, self.sup_norm)


class ProbeResult(Measurement):
    def __repr__(self):
        return "<ProbeResult %d: %s>" % (
            self.start, "nonzero" if self.nonzero else "ok")


def decompose(p, u):
    "Split u into T*phi1 + omega; returns (T, omega)."

    T = inner(p.grid, u, p.phi1)
    return T, u - T * p.phi1


def exp_mass(p, t, u):
    return t * inner(p.grid, np.exp(u), p.phi1)


def total_exp_mass(p, t, u):
    return t * integrate_disk(p.grid, np.exp(u))


def identity_residual(p, t, u):
    """
    Defect of t<e^u, phi1> + t<f, phi1> + (1-t)<g(u), phi1> = 0, the
    equation paired with phi1.
    """

    g = p.grid
    phi = p.phi1
    value = (t * inner(g, np.exp(u), phi) + t * inner(g, p.f, phi) +
             (1.0 - t) * inner(g, g_comparison(u, p.epsilon_g), phi))
    return abs(value)


def peak_radius(grid, u):
    "Radius of the node where |u| is largest (boundary excluded)."

    return float(grid.nodes[int(np.argmax(np.abs(u[:-1])))])


def sign_changes(u, tol=1e-12):
    "Number of sign changes of u, ignoring values below tol."

    signs = np.sign(u[np.abs(u) > tol])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def measure(p, t, u, residual_norm=0.0, step=0.0, newton_iters=0):
    "Build the HomotopyState of an accepted point."

    g = p.grid
    T, omega = decompose(p, u)

    state = HomotopyState()
    state["t"] = t
    state["step"] = step
    state["newton_iters"] = newton_iters
    state["residual_norm"] = residual_norm
    state["T"] = T
    state["omega_norm"] = norm(g, omega)
    state["sup_norm"] = float(np.max(np.abs(u)))
    state["exp_mass"] = exp_mass(p, t, u)
    state["identity_residual"] = identity_residual(p, t, u)
    state["peak_radius"] = peak_radius(g, u)
    state["total_exp_mass"] = total_exp_mass(p, t, u)
    state["sign_changes"] = sign_changes(u)
    state["u"] = u
    return state


def probe_starts(grid, count, amplitude, seed):
    """
    Seeded smooth radial Dirichlet starts sum(a_k cos((k - 1/2) pi r)),
    k = 1..4, each rescaled to a sup norm drawn from (0, amplitude].
    """

    rng = np.random.default_rng(seed)
    r = grid.nodes
    modes = np.array([np.cos((k - 0.5) * math.pi * r) for k in range(1, 5)])

    starts = []
    for _ in range(count):
        coef = rng.normal(size=4)
        sup = amplitude * (1.0 - rng.random())
        profile = grid.dirichlet(coef.dot(modes))
        starts.append(profile * (sup / np.max(np.abs(profile))))

    return starts


def comparison_probe(p, count=20, amplitude=3.0, seed=0, tol=1e-12):
    """
    Newton at t = 0 from random starts.

    The comparison equation has zero as its only solution, so every start
    must either fail or converge to zero.  A nonzero root is flagged and
    reported with <g(u), phi1> (which vanishes for any root) and its sign
    changes.
    """

    results = []
    for num, u0 in enumerate(probe_starts(p.grid, count, amplitude, seed)):
        u, report = newton_solve(p, 0.0, u0, tol=tol)
        sup = float(np.max(np.abs(u)))

        res = ProbeResult()
        res["start"] = num
        res["converged"] = report.converged
        res["iterations"] = report.iterations
        res["sup_norm"] = sup
        res["nonzero"] = report.converged and sup > ZERO_ROOT
        res["g_moment"] = inner(p.grid, g_comparison(u, p.epsilon_g), p.phi1)
        res["sign_changes"] = sign_changes(u)
        results.append(res)

        if res.nonzero:
            log.warning("start %d converged to a nonzero root (sup %.6g)",
                        num, sup)
        else:
            log.debug("start %d: %s after %d iterations", num,
                      "zero root" if report.converged else report.reason,
                      report.iterations)

    return results
