"""
Radial forcing terms and their first-mode mass.

The mass of a forcing f is m(f) = -<f, phi1>.  Pairing the equation with
phi1 gives <e^u, phi1> = m(f), so m(f) > 0 is necessary for a solution;
existence is guaranteed for m(f) < 4 pi.
"""

import logging
import math

import numpy as np

from .eigen import reference_phi1
from .errors import ConfigError, ShapeError, UnscalableForcingError
from .grid import inner, norm, read_field
from .utils import SortedDict

log = logging.getLogger(__name__)

FOUR_PI = 4.0 * math.pi

FAMILIES = ("eigenfunction", "gaussian-bump", "polynomial", "from-file",
            "bessel")

# Shaped families default to amplitude 4; profiles are used as given.
PROFILES = ("polynomial", "from-file")
DEFAULT_AMPLITUDE = 4.0


class ForcingSpec(SortedDict):
    """
    Description of a forcing profile.

    Families:
        eigenfunction: f = -a*phi1 (discrete eigenfunction).
        bessel: f = -a*J0(j r)/(sqrt(pi) J1(j)) (closed-form eigenfunction).
        gaussian-bump: f = -a*exp(-(r - center)^2/width^2).
        polynomial: f = a*sum(c_k r^k).
        from-file: f = a*(CSV profile r,value on the grid nodes).

    The amplitude a defaults to 1 for the polynomial and from-file
    profiles and to 4 for the other families.  If target_mass is set the
    amplitude is rescaled so that m(f) equals it.
    """

    def __init__(self, **kw):
        super(ForcingSpec, self).__init__()

        self["family"] = kw.get("family", "eigenfunction")
        self["amplitude"] = kw.get("amplitude",
                                   default_amplitude(self.family))
        self["center"] = kw.get("center", 0.0)
        self["width"] = kw.get("width", 0.5)
        self["coefficients"] = list(kw.get("coefficients", []))
        self["file"] = kw.get("file", "")
        self["target_mass"] = kw.get("target_mass", None)

    def with_mass(self, target):
        "Copy of this spec rescaled to another mass."

        spec = ForcingSpec(**self)
        spec["target_mass"] = target
        return spec

    @property
    def family(self):
        return self["family"]

    @property
    def amplitude(self):
        return self["amplitude"]

    @property
    def center(self):
        return self["center"]

    @property
    def width(self):
        return self["width"]

    @property
    def coefficients(self):
        return self["coefficients"]

    @property
    def file(self):
        return self["file"]

    @property
    def target_mass(self):
        return self["target_mass"]

    def __repr__(self):
        return "<ForcingSpec: %s>" % self.family


def build_forcing(spec, eig, grid):
    "Build the forcing field described by spec."

    r = grid.nodes
    a = spec.amplitude
    family = spec.family

    if family == "eigenfunction":
        f = -a * eig.phi1
    elif family == "bessel":
        f = -a * reference_phi1(grid)
    elif family == "gaussian-bump":
        f = -a * np.exp(-((r - spec.center) / spec.width) ** 2)
    elif family == "polynomial":
        f = a * np.polynomial.polynomial.polyval(r, spec.coefficients)
    elif family == "from-file":
        try:
            f = a * read_field(spec.file, grid)
        except (ShapeError, OSError) as e:
            raise ConfigError("forcing file: %s" % e)
    else:
        raise ConfigError("unknown forcing family '%s'" % family)

    f = grid.field(f)

    if spec.target_mass is not None:
        current = mass(f, eig, grid)
        if abs(current) <= 1e-12 * norm(grid, f):
            raise UnscalableForcingError(
                "%s profile has no phi1 component; cannot reach mass %g"
                % (family, spec.target_mass))

        f = f * (spec.target_mass / current)

    return f


def mass(f, eig, grid):
    "First-mode mass m(f) = -<f, phi1>."

    return -inner(grid, f, eig.phi1)


def admit(m):
    """
    Apply the admission rule to a forcing mass.

    Refuses m <= 0, which violates the necessary condition
    <e^u, phi1> = m(f) > 0.  Masses at or above 4 pi run with a warning.
    """

    if not m > 0.0:
        raise ConfigError("forcing mass %.6g <= 0 violates the necessary "
                          "condition -int f phi1 > 0" % m)

    if m >= FOUR_PI:
        log.warning("forcing mass %.6g >= 4 pi: outside the existence "
                    "guarantee", m)

    return m


def default_amplitude(family):
    "Amplitude used when a spec does not set one."

    return 1.0 if family in PROFILES else DEFAULT_AMPLITUDE
