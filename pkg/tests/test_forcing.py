import logging
import math

import numpy as np
import pytest

from scipy import integrate, special

from resonance.errors import ConfigError, UnscalableForcingError
from resonance.forcing import FOUR_PI, ForcingSpec, admit, build_forcing, mass
from resonance.grid import make_grid, write_field


@pytest.mark.parametrize("mu", [0.5, 4.0, 12.0])
def test_eigenfunction_mass(eig, grid, mu):
    f = build_forcing(ForcingSpec(amplitude=mu), eig, grid)
    assert abs(mass(f, eig, grid) - mu) <= 1e-12 * mu


def test_mass_of_phi1(eig, grid):
    assert mass(eig.phi1, eig, grid) == pytest.approx(-1.0, abs=1e-14)
    with pytest.raises(ConfigError):
        admit(mass(eig.phi1, eig, grid))


def test_mass_linear(eig, grid):
    rng = np.random.default_rng(12)
    f1, f2 = rng.normal(size=(2, grid.size))
    combined = mass(2.0 * f1 - 3.0 * f2, eig, grid)
    separate = 2.0 * mass(f1, eig, grid) - 3.0 * mass(f2, eig, grid)
    assert combined == pytest.approx(separate, rel=1e-12, abs=1e-12)


def test_gaussian_bump(eig, grid):
    spec = ForcingSpec(family="gaussian-bump", amplitude=1.0, center=0.0,
                       width=0.5)
    f = build_forcing(spec, eig, grid)
    assert np.all(f < 0)

    j = special.jn_zeros(0, 1)[0]
    c = 1.0 / (math.sqrt(math.pi) * special.j1(j))

    def integrand(r):
        return math.exp(-(r / 0.5) ** 2) * c * special.j0(j * r) * r

    expected = 2 * math.pi * integrate.quad(integrand, 0.0, 1.0,
                                            epsabs=1e-13)[0]
    assert mass(f, eig, grid) == pytest.approx(expected, rel=1e-3)


def test_polynomial(eig, grid):
    spec = ForcingSpec(family="polynomial", coefficients=[-1.0])
    f = build_forcing(spec, eig, grid)
    assert np.all(f == -1.0)
    # int phi1 = 2 sqrt(pi) / j
    assert mass(f, eig, grid) == pytest.approx(2 * math.sqrt(math.pi) /
                                               2.404825557695773, rel=1e-3)

    spec = ForcingSpec(family="polynomial", coefficients=[1.0, 0.0, -1.0],
                       amplitude=2.0)
    f = build_forcing(spec, eig, grid)
    assert np.allclose(f, 2.0 * (1.0 - grid.nodes ** 2))


def test_bessel(eig, grid):
    f = build_forcing(ForcingSpec(family="bessel", amplitude=3.0), eig, grid)
    assert mass(f, eig, grid) == pytest.approx(3.0, rel=1e-3)


@pytest.mark.parametrize("family", ["gaussian-bump", "polynomial", "bessel"])
def test_target_mass(eig, grid, family):
    spec = ForcingSpec(family=family, coefficients=[1.0, 0.0, -3.0],
                       target_mass=7.5)
    f = build_forcing(spec, eig, grid)
    assert abs(mass(f, eig, grid) - 7.5) <= 1e-12 * 8.5

    again = build_forcing(spec.with_mass(2.0), eig, grid)
    assert mass(again, eig, grid) == pytest.approx(2.0, rel=1e-12)


def test_unscalable(eig, grid):
    spec = ForcingSpec(family="polynomial", coefficients=[0.0],
                       target_mass=1.0)
    with pytest.raises(UnscalableForcingError):
        build_forcing(spec, eig, grid)


def test_from_file(tmp_path, eig, grid):
    path = str(tmp_path / "forcing.csv")
    with open(path, "w") as fp:
        write_field(fp, grid, -2.0 * eig.phi1)

    spec = ForcingSpec(family="from-file", file=path)
    f = build_forcing(spec, eig, grid)
    assert mass(f, eig, grid) == pytest.approx(2.0, rel=1e-12)

    with pytest.raises(ConfigError) as info:
        build_forcing(spec, eig, make_grid(64))
    assert "forcing file" in str(info.value)

    missing = ForcingSpec(family="from-file", file=str(tmp_path / "none.csv"))
    with pytest.raises(ConfigError):
        build_forcing(missing, eig, grid)


@pytest.mark.parametrize("family, amplitude", [
    ("eigenfunction", 4.0),
    ("bessel", 4.0),
    ("gaussian-bump", 4.0),
    ("polynomial", 1.0),
    ("from-file", 1.0),
])
def test_default_amplitude(family, amplitude):
    assert ForcingSpec(family=family).amplitude == amplitude
    assert ForcingSpec(family=family, amplitude=2.0).amplitude == 2.0


def test_unknown_family(eig, grid):
    with pytest.raises(ConfigError):
        build_forcing(ForcingSpec(family="sawtooth"), eig, grid)


def test_admit(caplog):
    assert admit(3.0) == 3.0

    with pytest.raises(ConfigError):
        admit(0.0)
    with pytest.raises(ConfigError):
        admit(-1.0)

    with caplog.at_level(logging.WARNING, logger="resonance.forcing"):
        assert admit(FOUR_PI + 1.0) == FOUR_PI + 1.0
    assert "4 pi" in caplog.text
