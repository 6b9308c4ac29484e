"""Combinatorial kinds: Stirling numbers, Bell numbers, harmonic numbers,
q-Pochhammer and Gaussian binomials."""

from __future__ import annotations

import math
from functools import lru_cache

from ..errors import DomainError
from .lerch_zeta import digamma

__all__ = ["stirling2", "stirling1_signed", "bell", "harmonic",
           "q_pochhammer", "q_binomial"]

_EULER_GAMMA = 0.5772156649015328606


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (prev[k - 1] if k - 1 <= n - 1 else 0) + \
                 (k * prev[k] if k <= n - 1 else 0)
    return tuple(row)


def stirling2(n, k) -> complex:
    n, k = int(n), int(k)
    if n < 0 or k < 0:
        raise DomainError("Stirling indices must be >= 0")
    if k > n:
        return complex(0.0)
    return complex(_stirling2_row(n)[k])


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple:
    # signed Stirling numbers of the first kind: s(n+1,k) = s(n,k-1) - n s(n,k)
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k in range(0, n + 1):
        a = prev[k - 1] if 1 <= k <= n else 0
        b = prev[k] if k <= n - 1 else 0
        row[k] = a - (n - 1) * b
    return tuple(row)


def stirling1_signed(n, k) -> complex:
    n, k = int(n), int(k)
    if n < 0 or k < 0:
        raise DomainError("Stirling indices must be >= 0")
    if k > n:
        return complex(0.0)
    return complex(_stirling1_row(n)[k])


def bell(n) -> complex:
    n = int(n)
    if n < 0:
        raise DomainError("Bell index must be >= 0")
    return complex(sum(_stirling2_row(n)))


def harmonic(x) -> complex:
    """Harmonic number H_x = euler_gamma + psi(x+1), exact for small integers."""
    if isinstance(x, (int, float)) and float(x).is_integer() and 0 <= x <= 60:
        return complex(math.fsum(1.0 / k for k in range(1, int(x) + 1)))
    return _EULER_GAMMA + digamma(complex(x) + 1.0)


def q_pochhammer(a: complex, q: complex, n) -> complex:
    """(a; q)_n = prod_{i<n} (1 - a q^i) for integer n >= 0."""
    n = int(n)
    if n < 0:
        raise DomainError("q_pochhammer needs n >= 0")
    a, q = complex(a), complex(q)
    out = complex(1.0)
    qi = complex(1.0)
    for _ in range(n):
        out *= 1.0 - a * qi
        qi *= q
    return out


def q_binomial(p, j, q: complex) -> complex:
    """Gaussian binomial [p choose j]_q by the product formula."""
    p, j = int(p), int(j)
    q = complex(q)
    if j < 0 or j > p:
        return complex(0.0)
    out = complex(1.0)
    for i in range(1, j + 1):
        num = 1.0 - q ** (p - j + i)
        den = 1.0 - q ** i
        if den == 0:
            raise DomainError("q_binomial at a root of unity denominator")
        out *= num / den
    return out
