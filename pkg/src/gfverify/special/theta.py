"""Nome-argument Jacobi theta values theta3(q), theta4(q)."""

from __future__ import annotations

from ..errors import DomainError
from ..numerics import check_finite

__all__ = ["theta3", "theta4"]


def _theta_sum(q: complex, alternating: bool) -> complex:
    q = complex(q)
    if abs(q) >= 1.0:
        raise DomainError("theta nome needs |q| < 1")
    total = complex(1.0)
    qn = complex(1.0)
    sign = 1.0
    for n in range(1, 200):
        qn = q ** (n * n)
        if alternating:
            sign = -1.0 if n % 2 else 1.0
        total += 2.0 * sign * qn
        if abs(qn) <= 1e-18 * abs(total):
            break
    return check_finite(total, "theta series")


def theta3(q: complex) -> complex:
    return _theta_sum(q, alternating=False)


def theta4(q: complex) -> complex:
    return _theta_sum(q, alternating=True)
