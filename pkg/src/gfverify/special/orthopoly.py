"""Orthogonal and classical polynomial families by three-term recurrence.

Every family takes complex degree-independent parameters and a complex
argument; degrees are capped at 500 (recurrence error growth beyond that).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import DomainError
from .lerch_zeta import _BERN

__all__ = ["hermite", "gegenbauer", "laguerre", "jacobi_p", "legendre_p",
           "chebyshev_t", "bernoulli_poly", "euler_poly", "fibonacci_poly",
           "ortho_poly"]

_MAX_DEGREE = 500


def _check_degree(n) -> int:
    n = int(n)
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    if n > _MAX_DEGREE:
        raise DomainError(f"degree {n} exceeds the recurrence cap {_MAX_DEGREE}")
    return n


def hermite(n, x: complex) -> complex:
    n = _check_degree(n)
    x = complex(x)
    if n == 0:
        return complex(1.0)
    hm, h = complex(1.0), 2.0 * x
    for k in range(1, n):
        hm, h = h, 2.0 * x * h - 2.0 * k * hm
    return h


def gegenbauer(n, lam: complex, x: complex) -> complex:
    n = _check_degree(n)
    lam = complex(lam)
    x = complex(x)
    if n == 0:
        return complex(1.0)
    if lam == 0:
        raise DomainError("Gegenbauer recurrence degenerate at lambda = 0")
    cm, c = complex(1.0), 2.0 * lam * x
    for k in range(2, n + 1):
        cm, c = c, (2.0 * x * (k + lam - 1.0) * c - (k + 2.0 * lam - 2.0) * cm) / k
    return c


def laguerre(n, alpha: complex, x: complex) -> complex:
    n = _check_degree(n)
    alpha = complex(alpha)
    x = complex(x)
    if n == 0:
        return complex(1.0)
    lm, l = complex(1.0), 1.0 + alpha - x
    for k in range(1, n):
        lm, l = l, ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0)
    return l


def jacobi_p(n, alpha: complex, beta: complex, x: complex) -> complex:
    n = _check_degree(n)
    alpha = complex(alpha)
    beta = complex(beta)
    x = complex(x)
    if n == 0:
        return complex(1.0)
    pm = complex(1.0)
    p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        ab = alpha + beta
        c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
        if c1 == 0:
            raise DomainError("Jacobi recurrence degenerate for these parameters")
        c2 = (2.0 * k + ab - 1.0) * ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x
                                     + alpha * alpha - beta * beta)
        c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab)
        pm, p = p, (c2 * p - c3 * pm) / c1
    return p


def legendre_p(n, x: complex) -> complex:
    n = _check_degree(n)
    x = complex(x)
    if n == 0:
        return complex(1.0)
    pm, p = complex(1.0), x
    for k in range(1, n):
        pm, p = p, ((2.0 * k + 1.0) * x * p - k * pm) / (k + 1.0)
    return p


def chebyshev_t(n, x: complex) -> complex:
    n = _check_degree(n)
    x = complex(x)
    if n == 0:
        return complex(1.0)
    tm, t = complex(1.0), x
    for _ in range(1, n):
        tm, t = t, 2.0 * x * t - tm
    return t


def bernoulli_poly(n, x: complex) -> complex:
    n = _check_degree(n)
    if n >= len(_BERN):
        raise DomainError("Bernoulli polynomial degree beyond number cache")
    x = complex(x)
    # Horner in x; coefficient of x^j is comb(n,j) B_{n-j}
    out = complex(0.0)
    for j in range(n, -1, -1):
        out = out * x + math.comb(n, j) * _BERN[n - j]
    return out


def _euler_numbers(count: int):
    e = [Fraction(0)] * count
    e[0] = Fraction(1)
    for n in range(2, count, 2):
        acc = Fraction(0)
        for k in range(0, n, 2):
            acc += Fraction(math.comb(n, k)) * e[k]
        e[n] = -acc
    return [float(x) for x in e]


_EULER_NUMS = _euler_numbers(62)


def euler_poly(n, x: complex) -> complex:
    n = _check_degree(n)
    if n >= len(_EULER_NUMS):
        raise DomainError("Euler polynomial degree beyond number cache")
    x = complex(x)
    h = x - 0.5
    out = complex(0.0)
    for k in range(0, n + 1):
        out += math.comb(n, k) * (_EULER_NUMS[k] / 2.0 ** k) * h ** (n - k)
    return out


def fibonacci_poly(n, x: complex) -> complex:
    n = _check_degree(n)
    x = complex(x)
    if n == 0:
        return complex(0.0)
    fm, f = complex(0.0), complex(1.0)
    for _ in range(1, n):
        fm, f = f, x * f + fm
    return f


_FAMILIES = {
    "hermite": (hermite, 0),
    "gegenbauer": (gegenbauer, 1),
    "laguerre": (laguerre, 1),
    "jacobi": (jacobi_p, 2),
    "legendre": (legendre_p, 0),
    "chebyshev_t": (chebyshev_t, 0),
    "bernoulli": (bernoulli_poly, 0),
    "euler": (euler_poly, 0),
    "fibonacci": (fibonacci_poly, 0),
}


def ortho_poly(family: str, degree, parameters, x: complex) -> complex:
    """Dispatch by family name; parameters is the family's parameter list."""
    try:
        fn, arity = _FAMILIES[family]
    except KeyError:
        raise DomainError(f"unknown polynomial family {family!r}") from None
    if len(parameters) != arity:
        raise DomainError(f"{family} takes {arity} parameters, got {len(parameters)}")
    return fn(degree, *parameters, x)
