"""
Bessel functions of the first kind of orders 0 and 1, and zeros of J0.

These serve as closed-form oracles for the discrete eigenpair of the disk
and for reference forcing profiles.
"""

import math

from functools import lru_cache

import numpy as np

from scipy.optimize import bisect

from .errors import DomainError

# Switch from the power series to the asymptotic expansion.
SERIES_LIMIT = 20.0


def bessel_j0(x):
    "Return J0(x); arrays are evaluated element by element."

    if np.ndim(x):
        return _j0_vec(x)

    x = _checked(x)
    if abs(x) <= SERIES_LIMIT:
        return _series(abs(x), 0)

    return _hankel(abs(x), 0)


def bessel_j1(x):
    "Return J1(x); arrays are evaluated element by element."

    if np.ndim(x):
        return _j1_vec(x)

    x = _checked(x)
    sign = -1.0 if x < 0 else 1.0
    if abs(x) <= SERIES_LIMIT:
        return sign * _series(abs(x), 1)

    return sign * _hankel(abs(x), 1)


@lru_cache(maxsize=None)
def j0_zero(k):
    """
    Return the k-th positive zero of J0 (k = 1, 2, ...).

    The bracket is centred on McMahon's estimate (k - 1/4)pi; consecutive
    zeros are about pi apart, so a bracket of half-width 1 holds exactly
    one of them.
    """

    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise DomainError("zero index must be an integer, got %r" % (k,))

    if k < 1:
        raise DomainError("zero index must be >= 1, got %d" % k)

    guess = (k - 0.25) * math.pi
    return bisect(bessel_j0, guess - 1.0, guess + 1.0, xtol=1e-13)


def _checked(x):
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise DomainError("not a real number: %r" % (x,))

    if not math.isfinite(x):
        raise DomainError("non-finite argument: %r" % x)

    return x


def _series(x, order):
    """
    Power series of J_order at x >= 0, summed exactly.

    With x = p/q (q a power of two) the partial sums are kept as a single
    integer fraction a/b, so the alternating terms cancel without
    round-off and the result is rounded once by the final division.
    """

    if x == 0.0:
        return 1.0 if order == 0 else 0.0

    p, q = x.as_integer_ratio()
    num = p * p
    den = 4 * q * q

    # Enough terms to pass the peak and fall below double precision.
    half = 0.5 * x
    k, size = 0, 1.0
    while k < half or size > 1e-25:
        k += 1
        size *= half * half / (k * (k + order))

    a, b, power = 1, 1, 1
    for j in range(1, k + 1):
        power *= -num
        scale = den * j * (j + order)
        a = a * scale + power
        b *= scale

    if order == 1:
        a *= p
        b *= 2 * q

    return a / b


def _hankel(x, order):
    "Large-argument expansion, truncated at its smallest term."

    mu = 4.0 * order * order
    p, q = 1.0, 0.0
    term = 1.0

    for k in range(1, 200):
        new = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        if abs(new) >= abs(term) or new == 0.0:
            break

        term = new
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q += sign * term
        else:
            p += sign * term

        if abs(term) < 1e-17:
            break

    chi = x - (0.5 * order + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) -
                                             q * math.sin(chi))


_j0_vec = np.vectorize(bessel_j0, otypes=[float])
_j1_vec = np.vectorize(bessel_j1, otypes=[float])
