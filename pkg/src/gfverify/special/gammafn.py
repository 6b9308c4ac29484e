"""Gamma-family kernel: gamma, log-gamma, reciprocal gamma, incomplete gamma,
Pochhammer symbols, binomial coefficients, and pole-safe gamma ratios.

Lanczos approximation (g=7, 9 terms) for the right half plane, reflection /
recurrence elsewhere.  log_gamma is the analytically continued principal
branch (cut along the negative real axis), obtained from the downward
recurrence log Gamma(z) = log Gamma(z+1) - Log z, which is an identity of
functions analytic on the cut plane.
"""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError, NonConvergenceError, PoleError, RangeOverflowError
from ..numerics import check_finite

__all__ = [
    "gamma",
    "log_gamma",
    "rgamma",
    "gamma_ratio",
    "gamma_upper",
    "gamma_generalized",
    "pochhammer",
    "binomial_c",
    "factorial",
    "double_factorial",
    "nearest_nonpositive_int",
]

_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_2PI = 2.5066282746310002
_LOG_SQRT_2PI = 0.9189385332046727

# Factorials 0..170 stay inside binary64; cached exactly.
_FACT = [1.0]
for _k in range(1, 171):
    _FACT.append(_FACT[-1] * _k)

_INT_EPS = 1e-12


def nearest_nonpositive_int(z: complex, eps: float = _INT_EPS):
    """Return n<=0 if z is within eps of the nonpositive integer n, else None."""
    z = complex(z)
    if abs(z.imag) > eps:
        return None
    n = round(z.real)
    if n > 0:
        return None
    if abs(z.real - n) <= eps * max(1.0, abs(z.real)):
        return int(n)
    return None


def _lanczos_sum(z: complex) -> complex:
    # z has Re >= 0.5 here
    s = _LANCZOS_C[0]
    for k in range(1, 9):
        s += _LANCZOS_C[k] / (z + (k - 1))
    return s


def gamma(z: complex) -> complex:
    """Gamma function on the complex plane, poles excluded."""
    z = complex(z)
    if nearest_nonpositive_int(z) is not None:
        raise PoleError(f"gamma pole at z={z}")
    if z.imag == 0.0 and z.real > 0 and z.real == int(z.real) and z.real <= 170:
        return complex(_FACT[int(z.real) - 1])
    if z.real < 0.5:
        # Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        s = cmath.sin(cmath.pi * z)
        if s == 0:
            raise PoleError(f"gamma pole at z={z}")
        return cmath.pi / (s * gamma(1.0 - z))
    t = z + _LANCZOS_G - 0.5
    out = _SQRT_2PI * t ** (z - 0.5) * cmath.exp(-t) * _lanczos_sum(z)
    if cmath.isinf(out):
        raise RangeOverflowError(f"gamma overflow at z={z}")
    return check_finite(out, "gamma")


def log_gamma(z: complex) -> complex:
    """Principal-branch log-gamma, continuous on the plane cut along (-inf, 0]."""
    z = complex(z)
    if nearest_nonpositive_int(z) is not None:
        raise PoleError(f"log_gamma pole at z={z}")
    if z.imag == 0.0 and z.real <= 0.0:
        raise DomainError(f"log_gamma on the cut at z={z}")
    shift = complex(0.0)
    while z.real < 0.5:
        shift += cmath.log(z)
        z = z + 1.0
    t = z + _LANCZOS_G - 0.5
    out = (z - 0.5) * cmath.log(t) - t + _LOG_SQRT_2PI + cmath.log(_lanczos_sum(z))
    return check_finite(out - shift, "log_gamma")


def rgamma(z: complex) -> complex:
    """Reciprocal gamma; entire, exactly 0 at the poles of gamma."""
    z = complex(z)
    if nearest_nonpositive_int(z) is not None:
        return complex(0.0)
    if z.imag == 0.0 and z.real <= 0.0:
        # On the negative real axis between poles: 1/gamma via reflection.
        return cmath.sin(cmath.pi * z) * gamma(1.0 - z) / cmath.pi
    out = cmath.exp(-log_gamma(z))
    return check_finite(out, "rgamma")


def gamma_ratio(num, den) -> complex:
    """Gamma(num[0])...Gamma(num[-1]) / (Gamma(den[0])...), poles cancelled.

    Evaluated as a single object: a pole in a denominator argument zeroes the
    ratio; matched numerator/denominator poles take the finite limit
    lim Gamma(-p+eps)/Gamma(-q+eps) = (-1)^(q-p) q!/p!.  A surviving
    numerator pole is a genuine infinity and raises.
    """
    if isinstance(num, (int, float, complex)):
        num = [num]
    if isinstance(den, (int, float, complex)):
        den = [den]
    num_poles = [nearest_nonpositive_int(a) for a in num]
    den_poles = [nearest_nonpositive_int(b) for b in den]
    live_num = [complex(a) for a, p in zip(num, num_poles) if p is None]
    live_den = [complex(b) for b, p in zip(den, den_poles) if p is None]
    np_list = [-p for p in num_poles if p is not None]
    dp_list = [-p for p in den_poles if p is not None]
    if len(np_list) > len(dp_list):
        raise PoleError("gamma_ratio has an uncancelled numerator pole")
    factor = complex(1.0)
    while np_list:
        p = np_list.pop()
        q = dp_list.pop()
        # lim_{e->0} Gamma(-p+e)/Gamma(-q+e) = (-1)^(q-p) q!/p!
        sign = -1.0 if (q - p) % 2 else 1.0
        factor *= sign * math.exp(math.lgamma(q + 1) - math.lgamma(p + 1))
    if not dp_list and not live_num and not live_den:
        return factor
    if dp_list and not live_num and not live_den and factor != 0:
        return complex(0.0)
    acc = complex(0.0)
    for a in live_num:
        acc += _log_gamma_signed(a)[0]
    for b in live_den:
        acc -= _log_gamma_signed(b)[0]
    sign = complex(1.0)
    for a in live_num:
        sign *= _log_gamma_signed(a)[1]
    for b in live_den:
        sign /= _log_gamma_signed(b)[1]
    if dp_list:
        return complex(0.0)
    out = factor * sign * cmath.exp(acc)
    return check_finite(out, "gamma_ratio")


def _log_gamma_signed(z: complex):
    """(log|Gamma| + i*pure-phase-free part, sign) splitting valid off poles.

    For z off the negative real axis this is (log_gamma(z), 1).  On the
    negative real axis between poles Gamma is real with alternating sign.
    """
    z = complex(z)
    if z.imag == 0.0 and z.real < 0.0:
        x = z.real
        n = math.floor(x)
        g = gamma(z)
        sign = 1.0 if g.real >= 0 else -1.0
        return complex(math.log(abs(g))), complex(sign)
    return log_gamma(z), complex(1.0)


def factorial(n) -> complex:
    """Factorial via gamma; exact for integer 0..170."""
    if isinstance(n, (int, float)) and float(n).is_integer():
        n = int(n)
        if n < 0:
            raise DomainError("factorial of a negative integer")
        if n <= 170:
            return complex(_FACT[n])
        raise RangeOverflowError(f"factorial({n}) overflows binary64")
    return gamma(complex(n) + 1.0)


def double_factorial(n: int) -> complex:
    """n!! for integer n >= -1."""
    n = int(n)
    if n < -1:
        raise DomainError("double_factorial needs n >= -1")
    out = 1.0
    k = n
    while k > 1:
        out *= k
        k -= 2
    if math.isinf(out):
        raise RangeOverflowError("double_factorial overflow")
    return complex(out)


def pochhammer(a: complex, n) -> complex:
    """Rising factorial (a)_n.

    Integer n uses the exact product (negative n via (a)_{-n} = 1/(a-n)_n);
    non-integer n falls back to the gamma ratio with pole handling.
    """
    a = complex(a)
    if isinstance(n, complex) and n.imag == 0:
        n = n.real
    if isinstance(n, float) and n.is_integer():
        n = int(n)
    if isinstance(n, int):
        if n == 0:
            return complex(1.0)
        if n < 0:
            denom = pochhammer(a + n, -n)
            if denom == 0:
                raise PoleError(f"pochhammer({a},{n}) hits a pole")
            return 1.0 / denom
        if n <= 300:
            out = complex(1.0)
            for k in range(n):
                out *= a + k
            if cmath.isinf(out):
                raise RangeOverflowError("pochhammer overflow")
            return out
    return gamma_ratio([a + n], [a])


def binomial_c(a: complex, b: complex) -> complex:
    """Generalized binomial coefficient Gamma(a+1)/(Gamma(b+1) Gamma(a-b+1)).

    Pole/pole situations are resolved by the gamma_ratio limit rule, so e.g.
    binom(n, k) vanishes for integer 0 <= n < k and binom(-1/2, 3) is finite.
    """
    a = complex(a)
    b = complex(b)
    ia = _as_int(a)
    ib = _as_int(b)
    if ia is not None and ib is not None:
        n, k = ia, ib
        if k < 0:
            return complex(0.0)
        if n >= 0:
            if k > n:
                return complex(0.0)
            if n <= 170:
                return complex(_FACT[n] / (_FACT[k] * _FACT[n - k]))
        # negative integer n: binom(n,k) = (-1)^k binom(k-n-1, k)
        sign = -1.0 if k % 2 else 1.0
        m = k - n - 1
        if m <= 170 and k <= 170 and m - k <= 170:
            return complex(sign * _FACT[m] / (_FACT[k] * _FACT[m - k]))
    return gamma_ratio([a + 1.0], [b + 1.0, a - b + 1.0])


def _as_int(z: complex):
    if abs(z.imag) > _INT_EPS:
        return None
    n = round(z.real)
    if abs(z.real - n) <= _INT_EPS * max(1.0, abs(z.real)):
        return int(n)
    return None


# ---------------------------------------------------------------------------
# Incomplete gamma


def gamma_upper(a: complex, z: complex, max_terms: int = 10000) -> complex:
    """Upper incomplete gamma Gamma(a, z), principal branch in z.

    Kummer-series route for small |z|, Lentz continued fraction otherwise.
    Gamma(a, 0) = Gamma(a) requires Re a > 0.
    """
    a = complex(a)
    z = complex(z)
    if z == 0:
        if a.real <= 0:
            raise DomainError("Gamma(a,0) needs Re a > 0")
        return gamma(a)
    if abs(z) <= max(1.0, abs(a)):
        return _gamma_upper_series(a, z, max_terms)
    return _gamma_upper_cf(a, z, max_terms)


def _lower_series(a: complex, z: complex, max_terms: int) -> complex:
    # gamma_lower(a,z) = z^a e^{-z} sum_{k>=0} z^k / (a)_{k+1}
    term = complex(1.0) / a
    total = term
    k = 0
    while k < max_terms:
        k += 1
        term *= z / (a + k)
        total += term
        if abs(term) <= 1e-17 * abs(total) + 1e-300:
            break
    else:
        raise NonConvergenceError("incomplete gamma series stalled", partial=total)
    return cmath.exp(a * cmath.log(z) - z) * total


def _gamma_upper_series(a: complex, z: complex, max_terms: int) -> complex:
    pole = nearest_nonpositive_int(a)
    if pole is None:
        return gamma(a) - _lower_series(a, z, max_terms)
    # Nonpositive integer a: start from Gamma(0,z) = E1(z) and recurse down
    # with Gamma(a-1, z) = (Gamma(a, z) - z^(a-1) e^(-z)) / (a-1).
    n = -pole
    top = _e1_small(z, max_terms)
    aa = 0.0
    for _ in range(n):
        aa -= 1.0
        top = (top - cmath.exp(aa * cmath.log(z) - z)) / aa
    return check_finite(top, "gamma_upper recurrence")


def _e1_small(z: complex, max_terms: int) -> complex:
    # E1(z) = -euler_gamma - log z + sum (-1)^(k+1) z^k / (k k!), |z| modest
    euler_gamma = 0.5772156649015329
    term = complex(1.0)
    total = complex(0.0)
    for k in range(1, max_terms):
        term *= -z / k
        delta = -term / k
        total += delta
        if abs(delta) <= 1e-17 * abs(total) + 1e-300:
            break
    else:
        raise NonConvergenceError("E1 series stalled", partial=total)
    return -euler_gamma - cmath.log(z) + total


def _gamma_upper_cf(a: complex, z: complex, max_terms: int) -> complex:
    # Lentz on Gamma(a,z) = e^{-z} z^a / (z+1-a- 1(1-a)/(z+3-a- 2(2-a)/(...)))
    tiny = 1e-300
    b0 = z + 1.0 - a
    f = b0 if abs(b0) > tiny else complex(tiny)
    c = f
    d = complex(0.0)
    for k in range(1, max_terms):
        ak = k * (a - k)
        bk = z + 2.0 * k + 1.0 - a
        d = bk + ak * d
        if abs(d) < tiny:
            d = complex(tiny)
        c = bk + ak / c
        if abs(c) < tiny:
            c = complex(tiny)
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            return cmath.exp(a * cmath.log(z) - z) / f
    raise NonConvergenceError("incomplete gamma continued fraction stalled", partial=f)


def gamma_generalized(a: complex, z0: complex, z1: complex) -> complex:
    """Generalized incomplete gamma Gamma(a, z0, z1) = Gamma(a,z0) - Gamma(a,z1)."""
    if complex(z0) == 0:
        # Gamma(a,0,z1) = gamma_lower(a,z1); valid for Re a > 0 like Gamma(a,0).
        a = complex(a)
        if a.real <= 0:
            raise DomainError("Gamma(a,0,z) needs Re a > 0")
        return _lower_series(a, complex(z1), 10000)
    return gamma_upper(a, z0) - gamma_upper(a, z1)
