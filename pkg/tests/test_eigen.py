import numpy as np
import pytest

from resonance.eigen import (first_eigenpair, morse_index, radial_gap,
                             reference_phi1)
from resonance.errors import DegenerateLinearizationError
from resonance.grid import inner, make_grid, norm
from resonance.laplacian import apply, assemble_laplacian


LAMBDA1 = 5.783185962946784
LAMBDA2 = 30.471262343662087


def test_first_eigenvalue(fine):
    assert fine.eig.relative_error <= 1e-3
    assert abs(fine.lambda1 - LAMBDA1) / LAMBDA1 <= 1e-3
    assert fine.eig.lambda1_ref == pytest.approx(LAMBDA1, rel=1e-12)


def test_eigenfunction_shape(fine):
    phi = fine.phi1
    assert phi[0] == pytest.approx(1.0868, abs=5e-3)
    assert phi[-1] == 0.0
    assert np.all(phi[:-1] > 0)
    assert np.all(np.diff(phi) < 0)
    assert fine.eig.phi1_deriv_boundary == pytest.approx(-1.3568, abs=1e-2)


def test_against_bessel(fine):
    assert np.max(np.abs(fine.phi1 - reference_phi1(fine.grid))) <= 1e-3


def test_eigen_residual(grid, laplacian, eig):
    phi = eig.phi1
    assert abs(norm(grid, phi) - 1.0) <= 1e-14
    res = apply(laplacian, phi) - eig.lambda1 * phi
    assert norm(grid, res) <= 1e-10 * eig.lambda1

    rng = np.random.default_rng(9)
    for _ in range(5):
        v = grid.dirichlet(rng.random(grid.size))
        lhs = inner(grid, apply(laplacian, phi), v)
        assert abs(lhs - eig.lambda1 * inner(grid, phi, v)) <= 1e-10


def test_second_order_convergence():
    errors = []
    for n in (63, 127, 255):
        eig = first_eigenpair(assemble_laplacian(make_grid(n)))
        errors.append(abs(eig.lambda1 - LAMBDA1))

    assert 3.0 < errors[0] / errors[1] < 5.0
    assert 3.0 < errors[1] / errors[2] < 5.0


def test_radial_gap(fine):
    assert fine.gap == pytest.approx(LAMBDA2 - LAMBDA1, abs=1e-2)
    assert fine.gap > 1.0


def test_gap_scales(laplacian, eig):
    gap = radial_gap(laplacian, eig)
    scaled = radial_gap(laplacian.scaled(3.0))
    assert scaled == pytest.approx(3.0 * gap, rel=1e-8)


def test_morse_index(grid, laplacian, eig):
    lam = eig.lambda1
    assert morse_index(laplacian, 0.0) == 0
    assert morse_index(laplacian, lam - 0.5) == 0
    assert morse_index(laplacian, lam + 1.0) == 1
    assert (-1) ** morse_index(laplacian, lam + 1.0) == -1

    # A potential between the first two radial eigenvalues, as a field.
    assert morse_index(laplacian, grid.field(lam + 10.0)) == 1
    assert morse_index(laplacian, grid.field(40.0)) == 2


def test_degenerate(laplacian, eig):
    with pytest.raises(DegenerateLinearizationError):
        morse_index(laplacian, eig.lambda1)
