import io
import math

import numpy as np
import pytest

from resonance import continuation as cont
from resonance.continuation import (ContinuationConfig, run_continuation,
                                    scan_threshold, write_scan)
from resonance.diagnostics import TRACE_COLUMNS
from resonance.errors import ConfigError
from resonance.forcing import ForcingSpec, build_forcing
from resonance.grid import inner, norm
from resonance.nonlinear import NewtonReport, newton_solve, residual


@pytest.fixture(scope="module")
def trace(problem, eig):
    return run_continuation(problem.with_forcing(-4.0 * eig.phi1),
                            ContinuationConfig())


def test_reaches_target(trace):
    assert trace.verdict == cont.REACHED
    assert trace.reached
    assert not trace.trivial
    assert trace.mass == pytest.approx(4.0, rel=1e-12)

    final = trace.final
    assert final.t == 1.0
    assert final.identity_residual <= 1e-8
    assert final.exp_mass == pytest.approx(4.0, abs=1e-8)
    assert final.sup_norm > 1e-3
    assert trace.newton_iterations <= 5000


def test_start_state(trace):
    start = trace.states[0]
    assert start.t == 0.0
    assert start.T == 0.0
    assert start.omega_norm == 0.0
    assert start.exp_mass == 0.0
    assert start.residual_norm == 0.0


def test_states(trace, problem, eig):
    ts = [state.t for state in trace.states]
    assert np.all(np.diff(ts) > 0)

    for state in trace.states:
        assert state.identity_residual <= 1e-9
        T, omega = state.T, state.u - state.T * eig.phi1
        bound = 1e-12 * (1 + abs(T))
        assert abs(inner(problem.grid, omega, eig.phi1)) <= bound
        assert state.omega_norm == pytest.approx(norm(problem.grid, omega))


def test_final_solves_target(trace, problem, eig):
    p = problem.with_forcing(-4.0 * eig.phi1)
    u = trace.solution
    assert norm(p.grid, residual(p, 1.0, u)) <= 1e-9
    assert u[-1] == 0.0

    again, report = newton_solve(p, 1.0, u, floor=True)
    assert report.accepted
    assert np.max(np.abs(again - u)) <= 1e-8


def test_write(trace):
    fp = io.StringIO()
    trace.write(fp)
    lines = fp.getvalue().splitlines()
    assert lines[0] == ",".join(TRACE_COLUMNS)
    assert len(lines) == len(trace) + 1
    assert lines[1].startswith("0,0,0,0,0,0,0,0,0,")


def test_refuses_non_positive_mass(problem, eig, grid):
    cfg = ContinuationConfig()
    with pytest.raises(ConfigError):
        run_continuation(problem.with_forcing(grid.zeros()), cfg)
    with pytest.raises(ConfigError):
        run_continuation(problem.with_forcing(eig.phi1), cfg)


def test_trivial_solution(problem, grid):
    trace = run_continuation(problem.with_forcing(grid.field(-1.0)),
                             ContinuationConfig())
    assert trace.verdict == cont.REACHED
    assert trace.trivial
    assert np.max(np.abs(trace.solution)) <= 1e-9


@pytest.mark.parametrize("kw", [
    dict(min_step=0.0),
    dict(min_step=0.2),
    dict(initial_step=0.5, max_step=0.1),
    dict(max_step=2.0),
    dict(shrink=1.0),
    dict(growth=0.5),
])
def test_bad_config(kw):
    with pytest.raises(ConfigError):
        ContinuationConfig(**kw)


def test_config_defaults():
    cfg = ContinuationConfig()
    assert cfg.initial_step == 0.05
    assert cfg.min_step == 1e-6
    assert cfg.max_step == 0.1
    assert cfg.newton_tol == 1e-10
    assert cfg.blowup_cap == 1e4


def failing_newton(blowup):
    def solve(p, t, u0, tol, floor=False):
        return u0, NewtonReport(reason="forced failure", blowup=blowup)
    return solve


def test_step_collapse(monkeypatch, problem, eig):
    monkeypatch.setattr(cont, "newton_solve", failing_newton(False))
    cfg = ContinuationConfig(initial_step=0.05, min_step=0.01)
    trace = run_continuation(problem.with_forcing(-4.0 * eig.phi1), cfg)
    assert trace.verdict == cont.STEP_COLLAPSE
    assert len(trace) == 1
    assert trace.rejections == 3


def test_overflow_collapse(monkeypatch, problem, eig):
    monkeypatch.setattr(cont, "newton_solve", failing_newton(True))
    cfg = ContinuationConfig(initial_step=0.05, min_step=0.01)
    trace = run_continuation(problem.with_forcing(-4.0 * eig.phi1), cfg)
    assert trace.verdict == cont.BLOW_UP


def test_blowup_cap(problem, eig):
    cfg = ContinuationConfig(blowup_cap=1e-3)
    trace = run_continuation(problem.with_forcing(-4.0 * eig.phi1), cfg)
    assert trace.verdict == cont.BLOW_UP
    assert trace.final.t < 1.0


def test_scan(problem):
    spec = ForcingSpec(family="eigenfunction")
    rows = scan_threshold(spec, [1.0, 4.0, 8.0, 12.0], problem,
                          ContinuationConfig())
    assert [row.mass for row in rows] == [1.0, 4.0, 8.0, 12.0]
    assert all(row.verdict == cont.REACHED for row in rows)
    assert all(row.mass < 4 * math.pi for row in rows)

    sups = [row.sup_norm for row in rows]
    assert sups[-1] == max(sups)

    fp = io.StringIO()
    write_scan(fp, rows)
    lines = fp.getvalue().splitlines()
    assert lines[0] == ",".join(cont.SCAN_COLUMNS)
    assert lines[1].startswith("1,reached_t1,")


def test_scan_records_errors(problem):
    spec = ForcingSpec(family="polynomial", coefficients=[0.0])
    rows = scan_threshold(spec, [2.0], problem, ContinuationConfig())
    assert rows[0].verdict == cont.ERROR
    assert "phi1" in rows[0].error


def test_scan_records_missing_file(problem, tmp_path):
    spec = ForcingSpec(family="from-file", file=str(tmp_path / "none.csv"))
    rows = scan_threshold(spec, [2.0, 4.0], problem, ContinuationConfig())
    assert [row.verdict for row in rows] == [cont.ERROR, cont.ERROR]
    assert "forcing file" in rows[0].error


def test_scan_workers(problem):
    spec = ForcingSpec(family="bessel")
    serial = scan_threshold(spec, [2.0, 6.0], problem, ContinuationConfig())
    parallel = scan_threshold(spec, [2.0, 6.0], problem, ContinuationConfig(),
                              workers=2)
    for a, b in zip(serial, parallel):
        assert a.verdict == b.verdict
        assert a.sup_norm == b.sup_norm


def test_peak_moves_inward(problem):
    spec = ForcingSpec(family="eigenfunction")
    rows = scan_threshold(spec, [11.0, 12.0, 12.4], problem,
                          ContinuationConfig())
    assert all(row.verdict == cont.REACHED for row in rows)
    rows.sort(key=lambda row: row.sup_norm)
    peaks = [row.peak_radius for row in rows]
    assert peaks == sorted(peaks, reverse=True)


@pytest.mark.slow
@pytest.mark.parametrize("mu", [1.0, 4.0, 8.0, 12.0])
def test_full_resolution(fine, mu):
    trace = run_continuation(fine.with_forcing(-mu * fine.phi1),
                             ContinuationConfig())
    assert trace.verdict == cont.REACHED
    final = trace.final
    assert final.residual_norm <= 1e-10
    assert final.sup_norm > 1e-3
    assert final.identity_residual <= 1e-8
    assert abs(final.exp_mass - mu) <= 1e-8
    assert trace.newton_iterations <= 5000


def test_forcing_built_for_scan(problem, eig):
    spec = ForcingSpec(family="gaussian-bump").with_mass(3.0)
    f = build_forcing(spec, eig, problem.grid)
    trace = run_continuation(problem.with_forcing(f), ContinuationConfig())
    assert trace.reached
    assert trace.final.exp_mass == pytest.approx(3.0, abs=1e-8)


@pytest.mark.slow
def test_peak_full_resolution(fine):
    spec = ForcingSpec(family="eigenfunction")
    rows = scan_threshold(spec, [11.0, 12.0, 12.4], fine,
                          ContinuationConfig())
    assert all(row.verdict == cont.REACHED for row in rows)

    sups = [row.sup_norm for row in rows]
    assert sups == sorted(sups)
    peaks = [row.peak_radius for row in rows]
    assert peaks == sorted(peaks, reverse=True)
    # phi1 forcing concentrates the solution at the origin.
    assert peaks[-1] == 0.0
