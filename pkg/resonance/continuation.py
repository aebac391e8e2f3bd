"""
Natural continuation in the homotopy parameter.

The homotopy starts at t = 0 from the zero solution of the comparison
equation and marches to the target problem at t = 1 with a secant
predictor, a Newton corrector and adaptive steps.  Every accepted state
carries its diagnostics; every failure mode ends the trace with a verdict.
"""

import csv
import logging

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .diagnostics import TRACE_COLUMNS, Measurement, measure
from .errors import ConfigError, ResonanceError
from .forcing import FOUR_PI, admit, build_forcing, mass
from .grid import norm
from .nonlinear import NEWTON_TOL, newton_solve, residual
from .utils import SortedDict, fmt

log = logging.getLogger(__name__)

REACHED = "reached_t1"
BLOW_UP = "blow_up"
STEP_COLLAPSE = "step_collapse"
ERROR = "error"

SCAN_COLUMNS = ("mass", "verdict", "sup_norm", "exp_mass", "peak_radius",
                "steps")


class ContinuationConfig(SortedDict):
    """
    Step control of a continuation run.

    Requires 0 < min_step <= initial_step <= max_step <= 1.
    """

    def __init__(self, **kw):
        super(ContinuationConfig, self).__init__()

        self["initial_step"] = kw.get("initial_step", 0.05)
        self["min_step"] = kw.get("min_step", 1e-6)
        self["max_step"] = kw.get("max_step", 0.1)
        self["newton_tol"] = kw.get("newton_tol", NEWTON_TOL)
        self["blowup_cap"] = kw.get("blowup_cap", 1e4)
        self["growth"] = kw.get("growth", 2.0)
        self["shrink"] = kw.get("shrink", 0.5)

        if not (0.0 < self.min_step <= self.initial_step <= self.max_step
                <= 1.0):
            raise ConfigError("steps must satisfy 0 < min_step <= "
                              "initial_step <= max_step <= 1")

        if not (self.growth >= 1.0 and 0.0 < self.shrink < 1.0):
            raise ConfigError("need growth >= 1 and 0 < shrink < 1")

    @property
    def initial_step(self):
        return self["initial_step"]

    @property
    def min_step(self):
        return self["min_step"]

    @property
    def max_step(self):
        return self["max_step"]

    @property
    def newton_tol(self):
        return self["newton_tol"]

    @property
    def blowup_cap(self):
        return self["blowup_cap"]

    @property
    def growth(self):
        return self["growth"]

    @property
    def shrink(self):
        return self["shrink"]


class ContinuationTrace(object):
    """
    Accepted states of a run, in increasing t, and its verdict.
    """

    def __init__(self, mass):
        self.mass = mass
        self.states = []
        self.verdict = None
        self.rejections = 0
        self.newton_iterations = 0

    @property
    def final(self):
        return self.states[-1]

    @property
    def reached(self):
        return self.verdict == REACHED

    @property
    def trivial(self):
        "Whether the run ended on the zero solution."
        return self.reached and self.final.sup_norm <= 1e-9

    @property
    def solution(self):
        return self.final.u

    def write(self, fp):
        "Write the trace as CSV."

        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(TRACE_COLUMNS)
        for state in self.states:
            writer.writerow([fmt(state[col]) for col in TRACE_COLUMNS])

    def __len__(self):
        return len(self.states)

    def __repr__(self):
        return "<ContinuationTrace: %s, %d states>" % (self.verdict,
                                                       len(self.states))


def run_continuation(p, cfg):
    """
    Follow the homotopy from t = 0 to t = 1.

    Refuses forcings with non-positive mass (ConfigError); everything else
    ends in one of the verdicts reached_t1, blow_up or step_collapse.
    """

    trace = ContinuationTrace(admit(mass(p.f, p.eig, p.grid)))

    u = p.grid.zeros()
    start = norm(p.grid, residual(p, 0.0, u))
    trace.states.append(measure(p, 0.0, u, residual_norm=start))

    t, step = 0.0, cfg.initial_step
    previous = None
    overflow = False
    warned = False

    while True:
        if step < cfg.min_step:
            trace.verdict = BLOW_UP if overflow else STEP_COLLAPSE
            log.warning("step collapsed below %g at t=%.9g (%s)",
                        cfg.min_step, t, trace.verdict)
            break

        tnew = min(1.0, t + step)
        if previous is None:
            guess = u
        else:
            tprev, uprev = previous
            guess = u + ((tnew - t) / (t - tprev)) * (u - uprev)

        unew, report = newton_solve(p, tnew, guess, tol=cfg.newton_tol,
                                     floor=True)
        trace.newton_iterations += report.iterations

        if not report.accepted:
            trace.rejections += 1
            overflow = report.blowup
            step *= cfg.shrink
            log.debug("rejected t=%.9g: %s", tnew, report.reason)
            continue

        state = measure(p, tnew, unew, report.final_residual_norm,
                        tnew - t, report.iterations)

        if state.sup_norm > cfg.blowup_cap:
            trace.verdict = BLOW_UP
            log.warning("sup norm %.6g above cap %g at t=%.9g",
                        state.sup_norm, cfg.blowup_cap, tnew)
            break

        trace.states.append(state)
        log.debug("accepted t=%.9g: sup %.6g, exp mass %.6g", tnew,
                  state.sup_norm, state.exp_mass)

        if state.total_exp_mass >= FOUR_PI and not warned:
            warned = True
            log.warning("total exponential mass %.6g >= 4 pi at t=%.9g",
                        state.total_exp_mass, tnew)

        previous = (t, u)
        t, u = tnew, unew
        overflow = False

        if t >= 1.0:
            trace.verdict = REACHED
            break

        step = min(step * cfg.growth, cfg.max_step)

    log.info("continuation %s after %d steps, %d rejections, %d Newton "
             "iterations", trace.verdict, len(trace) - 1, trace.rejections,
             trace.newton_iterations)
    return trace


def scan_threshold(base, masses, template, cfg, workers=1):
    """
    Run the continuation for each forcing mass in turn.

    Each row rescales the base forcing to its mass and is independent of
    the others; failures are recorded in the row.  With workers > 1 the
    rows run in separate processes.
    """

    jobs = [(base.with_mass(m), template, cfg) for m in masses]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_scan_row, jobs))

    return [_scan_row(job) for job in jobs]


def write_scan(fp, rows):
    "Write scan rows as CSV."

    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for row in rows:
        writer.writerow([fmt(row[col]) if col != "verdict" else row[col]
                         for col in SCAN_COLUMNS])


def _scan_row(job):
    spec, template, cfg = job

    row = Measurement()
    row["mass"] = spec.target_mass
    row["verdict"] = ERROR
    row["sup_norm"] = np.nan
    row["exp_mass"] = np.nan
    row["peak_radius"] = np.nan
    row["steps"] = 0
    row["error"] = ""

    try:
        f = build_forcing(spec, template.eig, template.grid)
        trace = run_continuation(template.with_forcing(f), cfg)
    except ResonanceError as e:
        row["error"] = str(e)
        log.warning("scan row at mass %g failed: %s", spec.target_mass, e)
        return row

    final = trace.final
    row["verdict"] = trace.verdict
    row["sup_norm"] = final.sup_norm
    row["exp_mass"] = final.exp_mass
    row["peak_radius"] = final.peak_radius
    row["steps"] = len(trace) - 1
    return row
