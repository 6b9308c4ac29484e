"""Hypergeometric kernel: 2F1 with analytic continuation, generalized pFq,
and the two-variable Appell F1.

2F1 strategy: terminating series summed exactly; |z| small enough goes to the
direct series; otherwise the argument is pulled into the unit disc with the
best of the six classical fractional-linear transformations.  Degenerate
connection coefficients (integer c-a-b or a-b) are handled by perturbing the
offending parameter by eps*(1+i) and Richardson-extrapolating two evaluations.
Principal branch, cut along [1, inf); real z > 1 is evaluated as approached
from above and flagged.
"""

from __future__ import annotations

import cmath

from ..errors import DomainError, NonConvergenceError, PoleError
from ..numerics import NeumaierAccumulator
from .gammafn import gamma_ratio, nearest_nonpositive_int, rgamma

__all__ = ["hyp2f1", "hyp2f1_ex", "pfq", "appell_f1"]

_SERIES_RADIUS = 0.72
_MAX_TERMS = 12000
_EPS_PERTURB = 1e-7


def _cpow(base: complex, expo: complex) -> complex:
    """Principal-branch power with exact handling of a zero base."""
    base = complex(base)
    expo = complex(expo)
    if base == 0:
        if expo == 0:
            return complex(1.0)
        if expo.real > 0:
            return complex(0.0)
        raise DomainError("0 raised to a power with nonpositive real part")
    if expo.imag == 0 and expo.real == int(expo.real) and abs(expo.real) <= 512:
        n = int(expo.real)
        out = complex(1.0)
        b = base
        k = abs(n)
        while k:
            if k & 1:
                out *= b
            b *= b
            k >>= 1
        return out if n >= 0 else 1.0 / out
    return cmath.exp(expo * cmath.log(base))


def _terminating_index(params) -> int | None:
    """Smallest n such that some parameter is the nonpositive integer -n."""
    best = None
    for a in params:
        k = nearest_nonpositive_int(a)
        if k is not None:
            n = -k
            if best is None or n < best:
                best = n
    return best


def _pfq_series(num, den, z: complex, max_terms: int = _MAX_TERMS,
                stop_at: int | None = None) -> complex:
    """Direct pFq series with compensated summation.

    stop_at: inclusive last index of a terminating series (summed exactly).
    """
    acc = NeumaierAccumulator()
    term = complex(1.0)
    acc.add(term)
    small_streak = 0
    k = 0
    limit = stop_at if stop_at is not None else max_terms
    while k < limit:
        ratio = complex(1.0)
        for a in num:
            ratio *= a + k
        for b in den:
            bk = b + k
            if bk == 0 or (stop_at is None and nearest_nonpositive_int(b) is not None):
                raise PoleError(f"pFq denominator parameter {b} hits a pole")
            ratio /= bk
        ratio *= z / (k + 1)
        term *= ratio
        acc.add(term)
        k += 1
        if stop_at is None:
            mag = abs(term)
            if mag <= 1e-17 * abs(acc.value) + 1e-300:
                small_streak += 1
                if small_streak >= 2:
                    return acc.value
            else:
                small_streak = 0
    if stop_at is not None:
        return acc.value
    raise NonConvergenceError("pFq series exhausted max_terms", partial=acc.value)


def pfq(num, den, z: complex, max_terms: int = _MAX_TERMS) -> complex:
    """Generalized hypergeometric pFq(num; den; z) by direct series.

    Accepts terminating series for any z; otherwise requires p <= q (entire)
    or p == q+1 with |z| < 1.  No analytic continuation for general pFq.
    """
    num = [complex(a) for a in num]
    den = [complex(b) for b in den]
    if len(num) > 4 or len(den) > 3:
        raise DomainError("pFq supports p <= 4, q <= 3")
    z = complex(z)
    stop = _terminating_index(num)
    if stop is not None:
        return _pfq_series(num, den, z, max_terms, stop_at=stop)
    if z == 0:
        return complex(1.0)
    p, q = len(num), len(den)
    if p > q + 1:
        raise DomainError(f"{p}F{q} series diverges for z != 0")
    if p == q + 1 and abs(z) >= 1.0:
        raise DomainError(f"{p}F{q} outside |z| < 1 and nonterminating")
    return _pfq_series(num, den, z, max_terms)


# ---------------------------------------------------------------------------
# 2F1 with continuation


def hyp2f1(a: complex, b: complex, c: complex, z: complex) -> complex:
    return hyp2f1_ex(a, b, c, z)[0]


def hyp2f1_ex(a: complex, b: complex, c: complex, z: complex):
    """2F1 returning (value, flags); flags is a set of strings.

    Flags: 'on-cut' for real z > 1 (approached from above), 'perturbed' when a
    degenerate connection formula needed the eps shift.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    z = complex(z)
    flags: set[str] = set()

    na, nb = nearest_nonpositive_int(a), nearest_nonpositive_int(b)
    nc = nearest_nonpositive_int(c)
    stop = _terminating_index([a, b])
    if nc is not None and (stop is None or -nc < stop):
        raise PoleError("2F1 with nonpositive-integer c and no earlier termination")
    if stop is not None:
        return _pfq_series([a, b], [c], z, stop_at=stop), flags
    if z == 0:
        return complex(1.0), flags
    if b == c:
        return _cpow(1.0 - z, -a), flags
    if a == c:
        return _cpow(1.0 - z, -b), flags
    if z.imag == 0.0 and z.real > 1.0:
        z = complex(z.real, 1e-250)
        flags.add("on-cut")
    val = _hyp2f1_dispatch(a, b, c, z, flags)
    return val, flags


def _hyp2f1_dispatch(a, b, c, z, flags) -> complex:
    candidates = {
        "z": abs(z),
        "pfaff": abs(z / (z - 1.0)) if z != 1.0 else float("inf"),
        "1-z": abs(1.0 - z),
        "1/z": 1.0 / abs(z),
        "1/(1-z)": 1.0 / abs(1.0 - z) if z != 1.0 else 0.0,
        "1-1/z": abs(1.0 - 1.0 / z),
    }
    order = sorted(candidates, key=candidates.get)
    best = order[0]
    if candidates["z"] <= _SERIES_RADIUS:
        best = "z"
    elif candidates["pfaff"] <= _SERIES_RADIUS:
        best = "pfaff"
    if candidates[best] > 0.95:
        raise DomainError(f"2F1 argument {z} too close to exp(+-i pi/3) singular ring")

    if best == "z":
        return _pfq_series([a, b], [c], z)
    if best == "pfaff":
        return _cpow(1.0 - z, -a) * _pfq_series([a, c - b], [c], z / (z - 1.0))
    if best == "1-z":
        return _connect_1mz(a, b, c, z, flags)
    if best == "1/z":
        return _connect_inv(a, b, c, z, flags)
    if best == "1/(1-z)":
        return _connect_inv1mz(a, b, c, z, flags)
    return _connect_1m1z(a, b, c, z, flags)


def _is_int(w: complex) -> bool:
    return abs(w.imag) < 1e-9 and abs(w.real - round(w.real)) < 1e-9


def _richardson_c(fn, a, b, c, z):
    """Perturb c by eps(1+i) and extrapolate: 2 f(eps/2) - f(eps)."""
    eps = _EPS_PERTURB * complex(1.0, 1.0)
    f1 = fn(a, b, c + eps, z)
    f2 = fn(a, b, c + eps / 2, z)
    return 2.0 * f2 - f1


def _richardson_a(fn, a, b, c, z):
    eps = _EPS_PERTURB * complex(1.0, 1.0)
    f1 = fn(a + eps, b, c, z)
    f2 = fn(a + eps / 2, b, c, z)
    return 2.0 * f2 - f1


def _connect_1mz(a, b, c, z, flags) -> complex:
    if _is_int(c - a - b):
        flags.add("perturbed")
        return _richardson_c(lambda *t: _connect_1mz(*t, flags), a, b, c, z)
    w = 1.0 - z
    t1 = gamma_ratio([c, c - a - b], [c - a, c - b]) * _pfq_series(
        [a, b], [a + b - c + 1.0], w)
    t2 = _cpow(w, c - a - b) * gamma_ratio([c, a + b - c], [a, b]) * _pfq_series(
        [c - a, c - b], [c - a - b + 1.0], w)
    return t1 + t2


def _connect_inv(a, b, c, z, flags) -> complex:
    if _is_int(a - b):
        flags.add("perturbed")
        return _richardson_a(lambda *t: _connect_inv(*t, flags), a, b, c, z)
    w = 1.0 / z
    t1 = gamma_ratio([c, b - a], [b, c - a]) * _cpow(-z, -a) * _pfq_series(
        [a, a - c + 1.0], [a - b + 1.0], w)
    t2 = gamma_ratio([c, a - b], [a, c - b]) * _cpow(-z, -b) * _pfq_series(
        [b, b - c + 1.0], [b - a + 1.0], w)
    return t1 + t2


def _connect_inv1mz(a, b, c, z, flags) -> complex:
    if _is_int(a - b):
        flags.add("perturbed")
        return _richardson_a(lambda *t: _connect_inv1mz(*t, flags), a, b, c, z)
    w = 1.0 / (1.0 - z)
    t1 = _cpow(1.0 - z, -a) * gamma_ratio([c, b - a], [b, c - a]) * _pfq_series(
        [a, c - b], [a - b + 1.0], w)
    t2 = _cpow(1.0 - z, -b) * gamma_ratio([c, a - b], [a, c - b]) * _pfq_series(
        [b, c - a], [b - a + 1.0], w)
    return t1 + t2


def _connect_1m1z(a, b, c, z, flags) -> complex:
    if _is_int(c - a - b):
        flags.add("perturbed")
        return _richardson_c(lambda *t: _connect_1m1z(*t, flags), a, b, c, z)
    w = 1.0 - 1.0 / z
    t1 = gamma_ratio([c, c - a - b], [c - a, c - b]) * _cpow(z, -a) * _pfq_series(
        [a, a - c + 1.0], [a + b - c + 1.0], w)
    t2 = gamma_ratio([c, a + b - c], [a, b]) * _cpow(z, a - c) * _cpow(
        1.0 - z, c - a - b) * _pfq_series([c - a, 1.0 - a], [c - a - b + 1.0], w)
    return t1 + t2


# ---------------------------------------------------------------------------
# Appell F1


def appell_f1(a, b1, b2, c, x, y, tol: float = 1e-12) -> complex:
    """Appell F1(a; b1, b2; c; x, y).

    Double series in anti-diagonal order for |x|,|y| <= 0.7; otherwise the
    Picard integral along [0,1] (needs Re a > 0 and Re(c-a) > 0).
    """
    a, b1, b2, c = complex(a), complex(b1), complex(b2), complex(c)
    x, y = complex(x), complex(y)
    if x == 0 and y == 0:
        return complex(1.0)
    if b2 == 0 or y == 0:
        return hyp2f1(a, b1, c, x)
    if b1 == 0 or x == 0:
        return hyp2f1(a, b2, c, y)
    if x == y:
        return hyp2f1(a, b1 + b2, c, x)
    if abs(x) <= 0.7 and abs(y) <= 0.7:
        return _appell_series(a, b1, b2, c, x, y, tol)
    if a.real > 0 and (c - a).real > 0:
        return _appell_picard(a, b1, b2, c, x, y)
    raise DomainError("Appell F1: outside series domain and Picard conditions fail")


def _appell_series(a, b1, b2, c, x, y, tol) -> complex:
    acc = NeumaierAccumulator()
    poch_a = complex(1.0)   # (a)_d
    poch_c = complex(1.0)   # (c)_d
    fact_d = 1.0
    # (b1)_m and (b2)_n tables grow with the diagonal
    pb1 = [complex(1.0)]
    pb2 = [complex(1.0)]
    facts = [1.0]
    small_streak = 0
    for d in range(0, 2 * _MAX_TERMS):
        if d > 0:
            poch_a *= a + (d - 1)
            poch_c *= c + (d - 1)
            if poch_c == 0:
                raise PoleError("Appell F1 denominator parameter pole")
            fact_d *= d
            pb1.append(pb1[-1] * (b1 + (d - 1)))
            pb2.append(pb2[-1] * (b2 + (d - 1)))
            facts.append(fact_d)
        diag = complex(0.0)
        # m + n = d ; term = (a)_d (b1)_m (b2)_n / ((c)_d m! n!) x^m y^n
        xm = complex(1.0)
        for m in range(0, d + 1):
            n = d - m
            diag += pb1[m] * pb2[n] * xm * _cpow(y, n) / (facts[m] * facts[n])
            xm *= x
        diag *= poch_a / poch_c
        acc.add(diag)
        if d >= 2:
            if abs(diag) <= tol * abs(acc.value) * 1e-3 + 1e-300:
                small_streak += 1
                if small_streak >= 2:
                    return acc.value
            else:
                small_streak = 0
        if d > 4000:
            raise NonConvergenceError("Appell F1 double series stalled", partial=acc.value)
    raise NonConvergenceError("Appell F1 double series stalled", partial=acc.value)


def _appell_picard(a, b1, b2, c, x, y) -> complex:
    from ..quadrature import IntegralSpec, integrate
    from ..numerics import ToleranceSpec

    pref = gamma_ratio([c], [a, c - a])

    def integrand(t: float) -> complex:
        return (_cpow(t, a - 1.0) * _cpow(1.0 - t, c - a - 1.0)
                * _cpow(1.0 - x * t, -b1) * _cpow(1.0 - y * t, -b2))

    spec = IntegralSpec(integrand=integrand, interval=("finite", 0.0, 1.0),
                        endpoint_singularity="both",
                        policy=ToleranceSpec(rel_tol=1e-11, abs_tol=1e-13))
    res = integrate(spec)
    return pref * res.value
