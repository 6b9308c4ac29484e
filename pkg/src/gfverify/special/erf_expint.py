"""Error functions and exponential-type integrals."""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError, NonConvergenceError
from ..numerics import check_finite
from .gammafn import gamma_upper, nearest_nonpositive_int

__all__ = ["erf", "erfc", "erfi", "expint_e", "ei", "li", "si", "ci", "shi", "chi"]

_SQRT_PI = 1.7724538509055160273
_EULER_GAMMA = 0.5772156649015328606


def erf(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        return complex(0.0)
    if abs(z) <= 2.8 or abs(z.imag) >= abs(z.real):
        if abs(z) > 9.0:
            raise DomainError("erf series cancellation too severe for |z| > 9")
        return _erf_series(z)
    if z.real < 0:
        return -erf(-z)
    return 1.0 - _erfc_cf(z)


def _erf_series(z: complex) -> complex:
    z2 = z * z
    term = complex(1.0)
    total = complex(1.0)
    for n in range(1, 300):
        term *= -z2 / n
        d = term / (2 * n + 1)
        total += d
        if abs(d) <= 1e-18 * abs(total) + 1e-300:
            break
    else:
        raise NonConvergenceError("erf series stalled", partial=total)
    return 2.0 * z / _SQRT_PI * total


def _erfc_cf(z: complex) -> complex:
    # Lentz on erfc(z) = e^(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    tiny = 1e-300
    f = z if abs(z) > tiny else complex(tiny)
    c = f
    d = complex(0.0)
    for k in range(1, 400):
        ak = k / 2.0
        d = z + ak * d
        if abs(d) < tiny:
            d = complex(tiny)
        c = z + ak / c
        if abs(c) < tiny:
            c = complex(tiny)
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            return cmath.exp(-z * z) / _SQRT_PI / f
    raise NonConvergenceError("erfc continued fraction stalled", partial=f)


def erfc(z: complex) -> complex:
    z = complex(z)
    if z.real > 2.8 and abs(z.imag) < z.real:
        return _erfc_cf(z)
    return 1.0 - erf(z)


def erfi(z: complex) -> complex:
    return complex(-1j * erf(1j * complex(z)))


def expint_e(n: complex, z: complex) -> complex:
    """Generalized exponential integral E_n(z) = z^(n-1) Gamma(1-n, z)."""
    n = complex(n)
    z = complex(z)
    if z == 0:
        if n.real <= 1:
            raise DomainError("E_n(0) diverges for Re n <= 1")
        return 1.0 / (n - 1.0)
    return cmath.exp((n - 1.0) * cmath.log(z)) * gamma_upper(1.0 - n, z)


def ei(z: complex) -> complex:
    """Exponential integral Ei; principal-value convention on the real axis."""
    z = complex(z)
    if z == 0:
        raise DomainError("Ei(0) diverges")
    if abs(z) > 40:
        raise DomainError("Ei series domain is |z| <= 40")
    term = complex(1.0)
    total = complex(0.0)
    for k in range(1, 500):
        term *= z / k
        d = term / k
        total += d
        if abs(d) <= 1e-18 * abs(total) + 1e-300:
            break
    else:
        raise NonConvergenceError("Ei series stalled", partial=total)
    # principal log off the negative axis; classical principal-value (real)
    # convention on it
    if z.imag == 0.0 and z.real < 0.0:
        logpart = complex(math.log(-z.real))
    else:
        logpart = cmath.log(z)
    return check_finite(_EULER_GAMMA + logpart + total, "ei")


def li(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        return complex(0.0)
    if z == 1:
        raise DomainError("li(1) diverges")
    return ei(cmath.log(z))


def si(z: complex) -> complex:
    z = complex(z)
    z2 = -z * z
    term = complex(1.0)
    total = complex(1.0)
    for k in range(1, 200):
        term *= z2 / ((2 * k) * (2 * k + 1))
        d = term / (2 * k + 1)
        total += d
        if abs(d) <= 1e-18 * abs(total) + 1e-300:
            break
    return z * total


def ci(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("Ci(0) diverges")
    z2 = -z * z
    term = complex(1.0)
    total = complex(0.0)
    for k in range(1, 200):
        term *= z2 / ((2 * k - 1) * (2 * k))
        d = term / (2 * k)
        total += d
        if abs(d) <= 1e-18 * abs(total) + 1e-300:
            break
    return _EULER_GAMMA + cmath.log(z) + total


def shi(z: complex) -> complex:
    return complex(-1j * si(1j * complex(z)))


def chi(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("Chi(0) diverges")
    z2 = z * z
    term = complex(1.0)
    total = complex(0.0)
    for k in range(1, 200):
        term *= z2 / ((2 * k - 1) * (2 * k))
        d = term / (2 * k)
        total += d
        if abs(d) <= 1e-18 * abs(total) + 1e-300:
            break
    return _EULER_GAMMA + cmath.log(z) + total
