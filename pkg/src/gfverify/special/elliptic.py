"""Complete elliptic integrals via the arithmetic-geometric mean, and the
incomplete first kind through its Appell-F1 representation.

Argument convention is the parameter m (so K(m), E(m)), matching the closed
forms K(k^2), E(k^2) appearing in the source catalog.
"""

from __future__ import annotations

import cmath

from ..errors import DomainError
from ..numerics import check_finite

__all__ = ["elliptic_k", "elliptic_e", "elliptic_f"]


def _agm_sequence(m: complex):
    """AGM iteration for a0=1, b0=sqrt(1-m).

    Returns (agm, [c_1, c_2, ...]) with c_n = (a_{n-1} - b_{n-1})/2; the
    E-series term for n=0 uses c_0^2 = m and is supplied by the caller.
    """
    a = complex(1.0)
    b = cmath.sqrt(1.0 - m)
    cs = []
    for _ in range(60):
        an = (a + b) / 2.0
        bn = cmath.sqrt(a * b)
        # branch choice keeping the iteration contractive
        if abs(an - bn) > abs(an + bn):
            bn = -bn
        cs.append((a - b) / 2.0)
        a, b = an, bn
        if abs(a - b) <= 1e-17 * abs(a):
            break
    return a, cs


def elliptic_k(m: complex) -> complex:
    m = complex(m)
    if m.imag == 0.0 and m.real >= 1.0:
        raise DomainError("K(m) singular on m in [1, inf)")
    if abs(m - 1.0) < 1e-12:
        raise DomainError("K(m) logarithmic singularity at m=1")
    agm, _ = _agm_sequence(m)
    return check_finite(cmath.pi / (2.0 * agm), "elliptic_k")


def elliptic_e(m: complex) -> complex:
    m = complex(m)
    if m == 0:
        return complex(cmath.pi / 2.0)
    if m.imag == 0.0 and m.real > 1.0:
        raise DomainError("E(m) cut on m in (1, inf)")
    if abs(m - 1.0) < 1e-14:
        return complex(1.0)
    agm, cs = _agm_sequence(m)
    k2sum = m / 2.0  # 2^(-1) c_0^2 with c_0^2 = m
    p = 1.0  # 2^(n-1) for n = 1
    for c in cs:
        k2sum += p * c * c
        p *= 2.0
    kk = cmath.pi / (2.0 * agm)
    return check_finite(kk * (1.0 - k2sum), "elliptic_e")


def elliptic_f(phi: complex, m: complex) -> complex:
    """Incomplete elliptic integral of the first kind F(phi | m)."""
    from .hyper import appell_f1

    phi = complex(phi)
    m = complex(m)
    s = cmath.sin(phi)
    s2 = s * s
    if abs(s2 * m - 1.0) < 1e-13:
        raise DomainError("F(phi|m) singular at m sin^2 phi = 1")
    return s * appell_f1(0.5, 0.5, 0.5, 1.5, s2, m * s2)
