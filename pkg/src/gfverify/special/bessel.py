"""Bessel-family functions by ascending series, |z| <= 20.

K and Y come from the connection formulas; at (near-)integer order the order
is perturbed by +-1e-5 and the two evaluations averaged, which cancels the
O(eps) term of the analytic continuation in the order.
"""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError, NonConvergenceError
from ..numerics import NeumaierAccumulator, check_finite
from .gammafn import rgamma

__all__ = ["besselj", "besseli", "besselk", "bessely", "spherical_j", "struve_l"]

_Z_LIMIT = 20.0
_ORDER_EPS = 1e-5


def _bessel_series(nu: complex, z: complex, signed: bool) -> complex:
    """sum_k (+-1)^k (z/2)^(2k+nu) / (k! Gamma(nu+k+1))."""
    if abs(z) > _Z_LIMIT:
        raise DomainError(f"bessel series limited to |z| <= {_Z_LIMIT}")
    if z == 0:
        if nu == 0:
            return complex(1.0)
        if nu.real > 0:
            return complex(0.0)
        raise DomainError("bessel at z=0 with Re nu < 0")
    half = z / 2.0
    lead = cmath.exp(nu * cmath.log(half))
    h2 = half * half
    if signed:
        h2 = -h2
    acc = NeumaierAccumulator()
    term = complex(1.0)
    k = 0
    while k < 500:
        acc.add(term * rgamma(nu + k + 1.0))
        k += 1
        term *= h2 / k
        if abs(term) <= 1e-18 * max(1.0, abs(acc.value)) and k > 4:
            acc.add(term * rgamma(nu + k + 1.0))
            break
    else:
        raise NonConvergenceError("bessel series stalled", partial=acc.value)
    return check_finite(lead * acc.value, "bessel series")


def besselj(nu: complex, z: complex) -> complex:
    return _bessel_series(complex(nu), complex(z), signed=True)


def besseli(nu: complex, z: complex) -> complex:
    return _bessel_series(complex(nu), complex(z), signed=False)


def _near_int(nu: complex) -> bool:
    return abs(nu.imag) < 1e-8 and abs(nu.real - round(nu.real)) < 1e-8


def bessely(nu: complex, z: complex) -> complex:
    nu = complex(nu)
    z = complex(z)
    if _near_int(nu):
        return 0.5 * (_bessely_raw(nu + _ORDER_EPS, z) + _bessely_raw(nu - _ORDER_EPS, z))
    return _bessely_raw(nu, z)


def _bessely_raw(nu: complex, z: complex) -> complex:
    s = cmath.sin(cmath.pi * nu)
    return (besselj(nu, z) * cmath.cos(cmath.pi * nu) - besselj(-nu, z)) / s


def besselk(nu: complex, z: complex) -> complex:
    nu = complex(nu)
    z = complex(z)
    if _near_int(nu):
        return 0.5 * (_besselk_raw(nu + _ORDER_EPS, z) + _besselk_raw(nu - _ORDER_EPS, z))
    return _besselk_raw(nu, z)


def _besselk_raw(nu: complex, z: complex) -> complex:
    s = cmath.sin(cmath.pi * nu)
    return cmath.pi / 2.0 * (besseli(-nu, z) - besseli(nu, z)) / s


def spherical_j(n: complex, z: complex) -> complex:
    n = complex(n)
    z = complex(z)
    if z == 0:
        return complex(1.0) if n == 0 else complex(0.0)
    return cmath.sqrt(cmath.pi / (2.0 * z)) * besselj(n + 0.5, z)


def struve_l(nu: complex, z: complex) -> complex:
    """Modified Struve function L_nu by its defining power series."""
    nu = complex(nu)
    z = complex(z)
    if abs(z) > _Z_LIMIT:
        raise DomainError(f"struve_l series limited to |z| <= {_Z_LIMIT}")
    if z == 0:
        return complex(0.0)
    half = z / 2.0
    lead = cmath.exp((nu + 1.0) * cmath.log(half))
    h2 = half * half
    acc = NeumaierAccumulator()
    term = complex(1.0)
    for k in range(0, 400):
        acc.add(term * rgamma(k + 1.5) * rgamma(nu + k + 1.5))
        term *= h2
        if abs(term) * abs(rgamma(k + 2.5)) * abs(rgamma(nu + k + 2.5)) \
                <= 1e-18 * max(1e-300, abs(acc.value)) and k > 3:
            break
    return check_finite(lead * acc.value, "struve_l")
