"""
Radial discretization of the unit disk.

A radial field is a one-dimensional float array holding the nodal values
u(r_i) at every node of its grid, centre and boundary included.
"""

import csv
import math

import numpy as np

from .errors import ConfigError, ShapeError
from .utils import fmt

MIN_NODES = 8


class RadialGrid(object):
    """
    Uniform mesh r_i = i*h (i = 0..n+1) on [0, 1] with disk quadrature.

    Each weight is the area of the node's control cell: the central disk
    of radius h/2, the annuli between half-nodes, and the half annulus at
    the boundary.  The weights therefore sum to pi exactly.
    """

    def __init__(self, n):
        self.n = n
        self.h = 1.0 / (n + 1)
        self.size = n + 2

        r = np.arange(self.size) * self.h
        r[-1] = 1.0

        w = 2.0 * math.pi * r * self.h
        w[0] = math.pi * (0.5 * self.h) ** 2
        w[-1] = math.pi * (self.h - 0.25 * self.h * self.h)

        r.flags.writeable = False
        w.flags.writeable = False
        self.nodes = r
        self.weights = w

    def zeros(self):
        return np.zeros(self.size)

    def field(self, values):
        "Return values as a field on this grid."

        v = np.asarray(values, dtype=float)
        if v.ndim == 0:
            v = np.full(self.size, float(v))

        if v.shape != (self.size,):
            raise ShapeError("field has shape %s, grid needs (%d,)"
                             % (v.shape, self.size))

        return v

    def dirichlet(self, values):
        "Return a copy of values with the boundary value set to zero."

        v = self.field(values).copy()
        v[-1] = 0.0
        return v

    def __eq__(self, other):
        return isinstance(other, RadialGrid) and other.n == self.n

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.n)

    def __repr__(self):
        return "<RadialGrid: n=%d>" % self.n


def make_grid(n):
    "Build the radial grid with n interior nodes."

    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise ConfigError("grid size must be an integer, got %r" % (n,))

    if n < MIN_NODES:
        raise ConfigError("grid size must be >= %d, got %d" % (MIN_NODES, n))

    return RadialGrid(int(n))


def integrate_disk(g, v):
    "Disk integral of a field."

    v = _checked(g, v)
    return float(np.dot(g.weights, v))


def inner(g, u, v):
    "Disk L2 inner product of two fields."

    return integrate_disk(g, _checked(g, u) * _checked(g, v))


def norm(g, v):
    "Disk L2 norm of a field."

    return math.sqrt(max(inner(g, v, v), 0.0))


def write_field(fp, g, v, header=("r", "value")):
    "Write a field as CSV rows r,value."

    v = _checked(g, v)
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(header)
    for r, value in zip(g.nodes, v):
        writer.writerow([fmt(r), fmt(value)])


def read_field(path, g):
    """
    Read a field from CSV rows r,value.

    The rows must match the grid nodes exactly and the values must be
    finite.
    """

    with open(path) as fp:
        rows = [row for row in csv.reader(fp) if row]

    if rows and not _numeric(rows[0][0]):
        rows = rows[1:]

    if len(rows) != g.size:
        raise ShapeError("%s: %d rows, grid has %d nodes"
                         % (path, len(rows), g.size))

    try:
        data = np.array([[float(r), float(val)] for r, val in rows])
    except ValueError as e:
        raise ShapeError("%s: %s" % (path, e))

    if np.max(np.abs(data[:, 0] - g.nodes)) > 1e-12:
        raise ShapeError("%s: radii do not match the grid nodes" % path)

    if not np.all(np.isfinite(data[:, 1])):
        raise ShapeError("%s: non-finite values" % path)

    return data[:, 1].copy()


def _checked(g, v):
    v = np.asarray(v, dtype=float)
    if v.shape != (g.size,):
        raise ShapeError("field has shape %s, grid needs (%d,)"
                         % (v.shape, g.size))

    return v


def _numeric(text):
    try:
        float(text)
        return True
    except ValueError:
        return False
