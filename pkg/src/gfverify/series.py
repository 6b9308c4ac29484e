"""Series engine: single, double (anti-diagonal), bilateral and finite sums,
plus truncated infinite products.

Terms are closures over integer indices returning complex; errors propagate
as exceptions, never NaN.  Convergence needs two consecutive in-tolerance
deltas; a term-ratio stall switches on Wynn extrapolation when the policy
allows it.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .errors import DomainError, NonConvergenceError
from .numerics import (
    NeumaierAccumulator,
    ToleranceSpec,
    ValueWithError,
    check_finite,
    geometric_tail,
    wynn_epsilon,
)

__all__ = ["SumSpec", "sum_single", "sum_double", "sum_bilateral",
           "sum_finite", "product_truncated", "evaluate_sum"]

_MIN_TERMS = 8
_STALL_RATIO = 0.99
_STALL_RUN = 50


@dataclass
class SumSpec:
    kind: str                    # single | double_diagonal | bilateral | finite | product
    term: object                 # callable: index (or index pair) -> complex
    start: int = 0
    end: object = None           # int for finite/product upper bound, None = infinity
    policy: ToleranceSpec = field(default_factory=ToleranceSpec)
    acceleration: str = "auto"   # none | wynn | auto

    def __post_init__(self):
        if self.kind not in ("single", "double_diagonal", "bilateral",
                             "finite", "product"):
            raise ValueError(f"unknown sum kind {self.kind!r}")
        if self.kind == "finite" and (self.end is None or self.end < self.start):
            raise ValueError("finite sum needs end >= start")
        if self.acceleration not in ("none", "wynn", "auto"):
            raise ValueError("bad acceleration mode")


def sum_single(spec: SumSpec) -> ValueWithError:
    if spec.kind != "single":
        raise ValueError("sum_single needs kind='single'")
    return _sum_stream(spec.term, spec.start, spec.policy, spec.acceleration)


def _sum_stream(term, start: int, policy: ToleranceSpec, acceleration: str) -> ValueWithError:
    acc = NeumaierAccumulator()
    partials: list[complex] = []
    small_streak = 0
    stall_run = 0
    prev_mag = None
    ratio = 0.0
    n = start
    count = 0
    saw_nonzero = False
    while count < policy.max_terms:
        t = complex(term(n))
        if cmath.isnan(t) or cmath.isinf(t):
            raise DomainError(f"summand not finite at index {n}")
        acc.add(t)
        count += 1
        mag = abs(t)
        if mag > 0:
            saw_nonzero = True
        partials.append(acc.value)
        if len(partials) > 72:
            partials.pop(0)
        if prev_mag is not None and prev_mag > 0 and mag > 0:
            ratio = mag / prev_mag
            if ratio > _STALL_RATIO:
                stall_run += 1
            else:
                stall_run = 0
        prev_mag = mag if mag > 0 else prev_mag
        if mag <= policy.bound(acc.value):
            small_streak += 1
            if small_streak >= 2 and count >= _MIN_TERMS and saw_nonzero:
                err = mag + geometric_tail(t, min(ratio, 0.9))
                return ValueWithError(check_finite(acc.value, "sum"), err, count, True)
            if small_streak >= 2 and count >= _MIN_TERMS and not saw_nonzero:
                return ValueWithError(complex(0.0), 0.0, count, True)
        else:
            small_streak = 0
        if stall_run >= _STALL_RUN and acceleration in ("wynn", "auto") \
                and len(partials) >= 16:
            est = wynn_epsilon(partials, policy)
            if est.converged:
                est.terms_used = count
                return est
            stall_run = 0
        n += 1
    if acceleration in ("wynn", "auto") and len(partials) >= 8:
        est = wynn_epsilon(partials, policy)
        if est.converged:
            est.terms_used = count
            return est
    raise NonConvergenceError("single sum exhausted max_terms",
                              partial=acc.value, err_estimate=abs(t))


def sum_double(spec: SumSpec) -> ValueWithError:
    """Anti-diagonal (Cauchy) order over (n, j) with n + j = d."""
    if spec.kind != "double_diagonal":
        raise ValueError("sum_double needs kind='double_diagonal'")
    policy = spec.policy
    acc = NeumaierAccumulator()
    small_streak = 0
    prev_mag = None
    ratio = 0.0
    d = 0
    evals = 0
    saw_nonzero = False
    while evals < policy.max_terms:
        diag = NeumaierAccumulator()
        for j in range(d + 1):
            t = complex(spec.term(d - j, j))
            if cmath.isnan(t) or cmath.isinf(t):
                raise DomainError(f"summand not finite at (n,j)=({d - j},{j})")
            diag.add(t)
            evals += 1
        dv = diag.value
        acc.add(dv)
        mag = abs(dv)
        if mag > 0:
            saw_nonzero = True
        if prev_mag is not None and prev_mag > 0 and mag > 0:
            ratio = mag / prev_mag
        prev_mag = mag if mag > 0 else prev_mag
        if mag <= policy.bound(acc.value):
            small_streak += 1
            if small_streak >= 2 and d >= 4:
                if not saw_nonzero:
                    return ValueWithError(complex(0.0), 0.0, evals, True)
                err = mag + geometric_tail(dv, min(ratio, 0.9))
                return ValueWithError(check_finite(acc.value, "double sum"), err,
                                      evals, True)
        else:
            small_streak = 0
        d += 1
    raise NonConvergenceError("double sum exhausted max_terms",
                              partial=acc.value, err_estimate=abs(dv))


def sum_bilateral(spec: SumSpec) -> ValueWithError:
    """Two independent single sums over n >= 0 and n <= -1."""
    if spec.kind != "bilateral":
        raise ValueError("sum_bilateral needs kind='bilateral'")
    try:
        plus = _sum_stream(spec.term, 0, spec.policy, spec.acceleration)
    except NonConvergenceError as exc:
        raise NonConvergenceError("bilateral sum: n >= 0 tail nonconvergent",
                                  partial=exc.partial) from exc
    try:
        minus = _sum_stream(lambda k: spec.term(-1 - k), 0, spec.policy,
                            spec.acceleration)
    except NonConvergenceError as exc:
        raise NonConvergenceError("bilateral sum: n <= -1 tail nonconvergent",
                                  partial=exc.partial) from exc
    return ValueWithError(plus.value + minus.value,
                          plus.err_estimate + minus.err_estimate,
                          plus.terms_used + minus.terms_used,
                          plus.converged and minus.converged)


def sum_finite(spec: SumSpec) -> complex:
    if spec.kind != "finite":
        raise ValueError("sum_finite needs kind='finite'")
    acc = NeumaierAccumulator()
    for n in range(spec.start, int(spec.end) + 1):
        t = complex(spec.term(n))
        if cmath.isnan(t) or cmath.isinf(t):
            raise DomainError(f"summand not finite at index {n}")
        acc.add(t)
    return check_finite(acc.value, "finite sum")


def product_truncated(spec: SumSpec) -> ValueWithError:
    """Product of factors, evaluated as exp(sum of principal logs).

    Per-factor branch choices cannot change exp(sum), so the unwinding
    counter is diagnostic only.  A zero factor short-circuits to exact 0.
    Infinite products truncate once |factor - 1| passes tolerance twice;
    the tail estimate is a geometric bound on the remaining log mass.
    """
    if spec.kind != "product":
        raise ValueError("product_truncated needs kind='product'")
    policy = spec.policy
    log_acc = NeumaierAccumulator()
    unwind = 0
    arg_run = 0.0
    small_streak = 0
    prev_dev = None
    ratio = 0.0
    count = 0
    n = spec.start
    end = spec.end
    while True:
        if end is not None and n > int(end):
            break
        if count >= policy.max_terms:
            if end is None:
                raise NonConvergenceError("product exhausted max_terms",
                                          partial=cmath.exp(log_acc.value))
            break
        f = complex(spec.term(n))
        if cmath.isnan(f) or cmath.isinf(f):
            raise DomainError(f"product factor not finite at index {n}")
        if f == 0:
            return ValueWithError(complex(0.0), 0.0, count + 1, True)
        lg = cmath.log(f)
        arg_run += lg.imag
        if abs(arg_run) > cmath.pi:
            unwind += 1 if arg_run > 0 else -1
            arg_run -= 2.0 * cmath.pi * (1 if arg_run > 0 else -1)
        log_acc.add(lg)
        count += 1
        dev = abs(f - 1.0)
        if prev_dev is not None and prev_dev > 0 and dev > 0:
            ratio = dev / prev_dev
        prev_dev = dev if dev > 0 else prev_dev
        if end is None:
            if dev <= policy.bound(complex(1.0)):
                small_streak += 1
                if small_streak >= 2 and count >= _MIN_TERMS:
                    break
            else:
                small_streak = 0
        n += 1
    value = cmath.exp(log_acc.value)
    tail = geometric_tail(complex(prev_dev or 0.0), min(ratio, 0.9)) if end is None else 0.0
    err = abs(value) * (tail + 1e-15 * count)
    return ValueWithError(check_finite(value, "product"), err, count, True)


def evaluate_sum(spec: SumSpec):
    """Dispatch on spec.kind; finite sums are wrapped as exact ValueWithError."""
    if spec.kind == "single":
        return sum_single(spec)
    if spec.kind == "double_diagonal":
        return sum_double(spec)
    if spec.kind == "bilateral":
        return sum_bilateral(spec)
    if spec.kind == "finite":
        v = sum_finite(spec)
        return ValueWithError(v, 1e-16 * abs(v), int(spec.end) - spec.start + 1, True)
    return product_truncated(spec)
