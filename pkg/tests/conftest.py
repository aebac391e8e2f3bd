import pytest

from resonance.eigen import first_eigenpair
from resonance.grid import make_grid
from resonance.laplacian import assemble_laplacian
from resonance.nonlinear import ProblemData


@pytest.fixture(scope="session")
def grid():
    return make_grid(128)


@pytest.fixture(scope="session")
def laplacian(grid):
    return assemble_laplacian(grid)


@pytest.fixture(scope="session")
def eig(laplacian):
    return first_eigenpair(laplacian)


@pytest.fixture(scope="session")
def problem(grid, laplacian, eig):
    return ProblemData(grid, laplacian, eig, epsilon_g=1.0)


@pytest.fixture(scope="session")
def fine():
    "Full-resolution problem, n = 512."
    return ProblemData.setup(512)
