"""Complex arithmetic utilities: compensated summation, convergence tests,
and Wynn epsilon acceleration.

All values are plain Python ``complex`` (binary64 components).  Routines are
pure; a NaN appearing anywhere raises ``DomainError`` instead of propagating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergenceError

__all__ = [
    "ToleranceSpec",
    "ValueWithError",
    "check_finite",
    "compensated_sum",
    "NeumaierAccumulator",
    "converged",
    "wynn_epsilon",
]


@dataclass(frozen=True)
class ToleranceSpec:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_terms: int = 10000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_terms < 8:
            raise ValueError("max_terms must be >= 8")

    def bound(self, value: complex) -> float:
        return self.abs_tol + self.rel_tol * abs(value)


@dataclass
class ValueWithError:
    value: complex
    err_estimate: float
    terms_used: int
    converged: bool

    def __post_init__(self):
        if self.err_estimate < 0:
            raise ValueError("err_estimate must be >= 0")


def check_finite(z: complex, context: str = "value") -> complex:
    """Raise DomainError if z has a NaN or infinite component."""
    z = complex(z)
    if math.isnan(z.real) or math.isnan(z.imag):
        raise DomainError(f"NaN produced in {context}")
    if math.isinf(z.real) or math.isinf(z.imag):
        raise DomainError(f"infinite value produced in {context}")
    return z


class NeumaierAccumulator:
    """Streaming Neumaier-compensated sum over complex values."""

    __slots__ = ("sre", "sim", "cre", "cim", "count")

    def __init__(self):
        self.sre = 0.0
        self.sim = 0.0
        self.cre = 0.0
        self.cim = 0.0
        self.count = 0

    def add(self, z: complex) -> None:
        zre = z.real
        zim = z.imag
        if math.isnan(zre) or math.isnan(zim):
            raise DomainError("NaN term fed to compensated sum")
        t = self.sre + zre
        if abs(self.sre) >= abs(zre):
            self.cre += (self.sre - t) + zre
        else:
            self.cre += (zre - t) + self.sre
        self.sre = t
        t = self.sim + zim
        if abs(self.sim) >= abs(zim):
            self.cim += (self.sim - t) + zim
        else:
            self.cim += (zim - t) + self.sim
        self.sim = t
        self.count += 1

    @property
    def value(self) -> complex:
        return complex(self.sre + self.cre, self.sim + self.cim)


def compensated_sum(terms) -> complex:
    """Neumaier-compensated sum of an iterable of complex values.

    Empty input sums to 0.  Each component is accurate to within a couple of
    ulp of the exactly rounded sum for mildly ill-conditioned inputs.
    """
    acc = NeumaierAccumulator()
    for t in terms:
        acc.add(t)
    return acc.value


def converged(prev: ValueWithError, next_: ValueWithError, tol: ToleranceSpec) -> bool:
    """Single convergence check: |next - prev| within tol of |next|.

    The two-consecutive-passes discipline is the caller's job.
    """
    delta = abs(next_.value - prev.value)
    return delta <= tol.abs_tol + tol.rel_tol * abs(next_.value)


def wynn_epsilon(partial_sums, tol: ToleranceSpec | None = None) -> ValueWithError:
    """Wynn epsilon-table extrapolation of a sequence of partial sums.

    Returns the deepest stable even-column extrapolant.  err_estimate is the
    magnitude of the difference between the last two extrapolants.  Division
    by a near-zero difference stops the table; the last stable column is
    returned with converged=False when the estimate misses the tolerance.
    """
    if tol is None:
        tol = ToleranceSpec()
    s = [complex(x) for x in partial_sums]
    n = len(s)
    if n < 3:
        raise ValueError("wynn_epsilon needs at least 3 partial sums")
    # Constant sequences short-circuit: the table would divide by zero.
    if all(x == s[0] for x in s):
        return ValueWithError(s[0], 0.0, n, True)

    scale = max(abs(x) for x in s) or 1.0
    tiny = 1e-30 * scale
    prev_col = [complex(0.0)] * (n + 1)  # epsilon_{-1}
    cur_col = list(s)                    # epsilon_0
    estimates = [cur_col[-1]]
    k = 0
    while len(cur_col) >= 2:
        nxt = []
        bad = False
        for j in range(len(cur_col) - 1):
            d = cur_col[j + 1] - cur_col[j]
            if abs(d) < tiny:
                bad = True
                break
            nxt.append(prev_col[j + 1] + 1.0 / d)
        if bad:
            break
        prev_col, cur_col = cur_col, nxt
        k += 1
        if k % 2 == 0 and cur_col:
            estimates.append(cur_col[-1])
        if len(cur_col) < 2:
            break

    best = estimates[-1]
    if len(estimates) >= 2:
        err = abs(estimates[-1] - estimates[-2])
    else:
        err = abs(s[-1] - s[-2])
    check_finite(best, "wynn epsilon extrapolant")
    ok = err <= tol.bound(best)
    return ValueWithError(best, err, n, ok)


def geometric_tail(last_term: complex, ratio: float) -> float:
    """Crude tail bound |t|*r/(1-r) for a ratio-r decaying series."""
    r = min(max(ratio, 0.0), 0.99)
    return abs(last_term) * r / (1.0 - r)


def raise_nonconvergence(what: str, value: complex, err: float):
    raise NonConvergenceError(f"{what} failed to converge", partial=value, err_estimate=err)
