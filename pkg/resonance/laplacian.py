"""
The radial Dirichlet Laplacian of the unit disk.

The operator u -> -(1/r)(r u')' is assembled in flux form on the nodes
0..n (centre included, the boundary value eliminated by u(1) = 0).  Each
row is the flux balance of a control cell divided by the cell area, so the
operator is self-adjoint in the disk inner product of the grid.
"""

import numpy as np

from .errors import ShapeError, SingularSystemError

# Relative size below which a pivot counts as zero.
PIVOT_TOL = 1e-14


class RadialLaplacian(object):
    """
    Tridiagonal operator over the unknowns r_0..r_n of a grid.

    Rows are kept in difference form,

        (A u)_i = sub[i]*(u[i-1] - u[i]) + sup[i]*(u[i+1] - u[i])
                  + center[i]*u[i]

    so the diagonal is center - sub - sup.  The flux part annihilates
    constants exactly and center holds the zeroth order term (zero for the
    bare Laplacian, minus the potential after shifted()).  The last entry
    of sup couples the outermost unknown to the boundary node; it only acts
    in apply(), where the boundary value is part of the field.
    """

    def __init__(self, grid, sub, sup, center=None):
        self.grid = grid
        self.sub = _frozen(sub)
        self.sup = _frozen(sup)
        self.center = _frozen(np.zeros(len(self.sub)) if center is None
                              else center)

    @property
    def size(self):
        return len(self.center)

    @property
    def diag(self):
        return self.center - self.sub - self.sup

    @property
    def scale(self):
        "Largest absolute row sum."
        return float(np.max(np.abs(self.sub) + np.abs(self.diag) +
                            np.abs(self.sup)))

    def shifted(self, potential):
        "Return the operator u -> A u - potential*u."

        pot = np.asarray(potential, dtype=float)
        if pot.ndim:
            pot = pot[:self.size]

        return RadialLaplacian(self.grid, self.sub, self.sup,
                               self.center - pot)

    def scaled(self, c):
        return RadialLaplacian(self.grid, c * self.sub, c * self.sup,
                               c * self.center)

    def dense(self):
        "Dense matrix over the unknowns (for inspection)."

        m = self.size
        mat = np.diag(self.diag)
        mat[np.arange(1, m), np.arange(m - 1)] = self.sub[1:]
        mat[np.arange(m - 1), np.arange(1, m)] = self.sup[:-1]
        return mat

    def __repr__(self):
        return "<RadialLaplacian: n=%d>" % self.grid.n


def assemble_laplacian(g):
    "Assemble the flux-form radial Laplacian on a grid."

    h2 = g.h * g.h
    m = g.n + 1
    r = g.nodes[:m]

    sub = np.zeros(m)
    sup = np.empty(m)

    # Central cell: flux through r = h/2 over area pi h^2/4.
    sup[0] = -4.0 / h2

    ri = r[1:]
    sub[1:] = -(ri - 0.5 * g.h) / (ri * h2)
    sup[1:] = -(ri + 0.5 * g.h) / (ri * h2)

    return RadialLaplacian(g, sub, sup)


def apply(A, u):
    "Apply the operator to a field; the result vanishes at the boundary."

    g = A.grid
    u = np.asarray(u, dtype=float)
    if u.shape != (g.size,):
        raise ShapeError("field has shape %s, operator needs (%d,)"
                         % (u.shape, g.size))

    m = A.size
    du = np.diff(u)

    out = np.zeros(g.size)
    out[:m] = A.sup * du + A.center * u[:m]
    out[1:m] -= A.sub[1:] * du[:m - 1]
    return out


def solve_shifted(A, shift, rhs):
    """
    Solve (A - shift) u = rhs by tridiagonal elimination.

    The boundary entry of rhs is ignored and the returned field vanishes
    there.  A pivot below PIVOT_TOL times the operator scale, or a solution
    whose size betrays such a pivot after round-off, raises
    SingularSystemError.
    """

    g = A.grid
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape != (g.size,):
        raise ShapeError("rhs has shape %s, operator needs (%d,)"
                         % (rhs.shape, g.size))

    m = A.size
    shifted = A.diag - shift
    sub = A.sub.tolist()
    diag = shifted.tolist()
    sup = A.sup.tolist()
    b = rhs[:m].tolist()

    scale = float(np.max(np.abs(A.sub) + np.abs(shifted) + np.abs(A.sup)))
    tiny = PIVOT_TOL * scale

    c = [0.0] * m
    d = [0.0] * m
    cprev = dprev = 0.0
    for i in range(m):
        piv = diag[i] - sub[i] * cprev
        if abs(piv) < tiny:
            raise SingularSystemError(shift, "pivot %.3g at row %d" % (piv, i))

        cprev = c[i] = (sup[i] / piv) if i < m - 1 else 0.0
        dprev = d[i] = (b[i] - sub[i] * dprev) / piv

    x = np.zeros(g.size)
    x[m - 1] = d[m - 1]
    for i in range(m - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]

    bmax = float(np.max(np.abs(b)))
    xmax = float(np.max(np.abs(x)))
    if not np.isfinite(xmax) or xmax * tiny > bmax > 0.0:
        raise SingularSystemError(shift, "solution growth %.3g" %
                                  (xmax / bmax if bmax else np.inf))

    return x


def count_below(A, sigma):
    """
    Number of eigenvalues of A below sigma, by Sturm sign counting.

    A is similar to a symmetric tridiagonal matrix with off-diagonal
    squares sup[i]*sub[i+1]; the signs of the pivots of its LDL^T
    factorization at sigma count the eigenvalues below sigma.
    """

    m = A.size
    diag = (A.diag - sigma).tolist()
    off2 = (A.sup[:m - 1] * A.sub[1:]).tolist()
    tiny = np.finfo(float).eps * max(A.scale, 1.0)

    count = 0
    piv = diag[0]
    for i in range(m):
        if i:
            piv = diag[i] - off2[i - 1] / piv

        if piv == 0.0:
            piv = -tiny

        if piv < 0.0:
            count += 1

    return count


def _frozen(a):
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a
