"""Lerch transcendent, Hurwitz/Riemann zeta, polygamma, and q-digamma.

lerch_phi branch map:
  * s a nonpositive integer: closed rational form (a + z d/dz)^k [1/(1-z)],
    valid for every z != 1.
  * |z| <= 0.9: defining series with compensated summation.
  * 0.9 < |z| <= 1 (z != 1): Euler-Maclaurin tail: prefix sum to N, a
    steepest-descent-rotated tail integral, and B_{2k} derivative corrections.
  * |z| > 1 off the cut [1, inf): Mellin-type integral (needs Re s > 0).

Hurwitz zeta uses Euler-Maclaurin with the index shifted until |a+N| clears
|s|.  polygamma(n>=1) rides on Hurwitz zeta; digamma has its own asymptotic
series.  q_digamma follows the defining series for |q| < 1 and the
reciprocal-modulus transformation for |q| > 1.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from ..errors import DomainError, NonConvergenceError, PoleError
from ..numerics import NeumaierAccumulator, ToleranceSpec, check_finite
from .gammafn import gamma, nearest_nonpositive_int, rgamma

__all__ = [
    "bernoulli_number",
    "hurwitz_zeta",
    "riemann_zeta",
    "polygamma",
    "digamma",
    "q_digamma",
    "lerch_phi",
    "lerch_phi_ds",
]

_MAX_TERMS = 100000


def _bernoulli_floats(count: int):
    """B_0 .. B_{count-1} computed exactly, then rounded to float."""
    b = [Fraction(0)] * count
    b[0] = Fraction(1)
    for m in range(1, count):
        acc = Fraction(0)
        for j in range(m):
            acc += Fraction(math.comb(m + 1, j)) * b[j]
        b[m] = -acc / (m + 1)
    return [float(x) for x in b]


_BERN = _bernoulli_floats(62)


def bernoulli_number(n: int) -> float:
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    if n >= len(_BERN):
        raise DomainError(f"Bernoulli cache covers n < {len(_BERN)}")
    return _BERN[n]


# ---------------------------------------------------------------------------
# Hurwitz zeta


def hurwitz_zeta(s: complex, a: complex) -> complex:
    """Hurwitz zeta zeta(s, a) by Euler-Maclaurin; s != 1, a off the
    nonpositive integers."""
    s = complex(s)
    a = complex(a)
    if abs(s - 1.0) < 1e-13:
        raise PoleError("hurwitz_zeta pole at s=1")
    if nearest_nonpositive_int(a) is not None:
        raise DomainError("hurwitz_zeta needs a off the nonpositive integers")
    # Shift so |a+N| clears |s|; keep the shift modest when Re s < 0 because
    # the prefix terms grow like x^|Re s| and cancel against the tail.
    x_target = max(12.0, 1.05 * abs(s))
    n_shift = int(max(0.0, math.ceil(x_target - a.real)))
    acc = NeumaierAccumulator()
    for n in range(n_shift):
        an = a + n
        if an == 0:
            raise DomainError("hurwitz_zeta hit a+n = 0 while shifting")
        acc.add(_cpow_neg(an, s))
    x = a + n_shift
    # integral + half-term
    acc.add(_cpow_neg(x, s - 1.0) / (s - 1.0))
    acc.add(0.5 * _cpow_neg(x, s))
    # B_{2k}/(2k)! * (s)_{2k-1} * x^(-s-2k+1)
    poch = s  # (s)_1
    fact = 1.0
    xpow = _cpow_neg(x, s + 1.0)
    x2 = x * x
    prev_mag = math.inf
    for k in range(1, 29):
        fact *= (2 * k) * (2 * k - 1)
        term = _BERN[2 * k] / fact * poch * xpow
        mag = abs(term)
        acc.add(term)
        if mag <= 1e-18 * abs(acc.value) + 1e-300:
            break
        if mag > prev_mag:
            break  # asymptotic tail turned; stop at the smallest term
        prev_mag = mag
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        xpow /= x2
    return check_finite(acc.value, "hurwitz_zeta")


def _cpow_neg(base: complex, expo: complex) -> complex:
    """base^(-expo), principal branch."""
    return cmath.exp(-expo * cmath.log(base))


def riemann_zeta(s: complex) -> complex:
    return hurwitz_zeta(s, 1.0)


def digamma(z: complex) -> complex:
    z = complex(z)
    if nearest_nonpositive_int(z) is not None:
        raise PoleError(f"digamma pole at z={z}")
    shift = complex(0.0)
    while z.real < 10.0 + 0.5 * abs(z.imag):
        shift -= 1.0 / z
        z = z + 1.0
    out = cmath.log(z) - 0.5 / z
    z2 = z * z
    zp = z2
    for k in range(1, 12):
        out -= _BERN[2 * k] / (2 * k) / zp
        zp *= z2
    return check_finite(out + shift, "digamma")


def polygamma(n: int, z: complex) -> complex:
    """psi^(n)(z); n=0 is digamma, n>=1 via (-1)^(n+1) n! zeta(n+1, z)."""
    n = int(n)
    if n < 0:
        raise DomainError("polygamma order must be >= 0")
    if n == 0:
        return digamma(z)
    sign = 1.0 if n % 2 == 1 else -1.0
    return sign * gamma(n + 1.0) * hurwitz_zeta(n + 1.0, z)


def q_digamma(q: complex, z: complex) -> complex:
    """q-digamma psi_q(z).

    |q| < 1: -log(1-q) + log(q) * sum_{n>=0} q^(n+z)/(1-q^(n+z)).
    |q| > 1: psi_q(z) = psi_{1/q}(z) + (z - 3/2) log q.
    """
    q = complex(q)
    z = complex(z)
    if abs(q) == 1.0:
        raise DomainError("q_digamma needs |q| != 1")
    if abs(q) > 1.0:
        return q_digamma(1.0 / q, z) + (z - 1.5) * cmath.log(q)
    logq = cmath.log(q)
    acc = NeumaierAccumulator()
    qz = cmath.exp(z * logq)
    qn = qz
    for n in range(_MAX_TERMS):
        t = qn / (1.0 - qn)
        acc.add(t)
        if abs(t) <= 1e-18 * abs(acc.value) + 1e-300:
            break
        qn *= q
    else:
        raise NonConvergenceError("q_digamma series stalled", partial=acc.value)
    return check_finite(-cmath.log(1.0 - q) + logq * acc.value, "q_digamma")


# ---------------------------------------------------------------------------
# Lerch transcendent


def lerch_phi(z: complex, s: complex, a: complex,
              tol: ToleranceSpec | None = None) -> complex:
    z = complex(z)
    s = complex(s)
    a = complex(a)
    if tol is None:
        tol = ToleranceSpec(rel_tol=1e-12, abs_tol=1e-15)
    if nearest_nonpositive_int(a) is not None:
        raise DomainError("lerch_phi needs a off the nonpositive integers")
    k = nearest_nonpositive_int(s) if abs(s.imag) < 1e-12 else None
    if k is not None or (abs(s.imag) < 1e-12 and abs(s.real) < 1e-12):
        kk = -(k or 0)
        if z == 1.0:
            raise DomainError("lerch_phi rational form has a pole at z=1")
        return _lerch_rational(z, kk, a)
    if z == 1.0:
        if s.real > 1.0:
            return hurwitz_zeta(s, a)
        raise DomainError("lerch_phi on the cut [1, inf)")
    if z.imag == 0.0 and z.real > 1.0:
        raise DomainError("lerch_phi on the cut [1, inf)")
    r = abs(z)
    if r <= 0.9:
        return _lerch_series(z, s, a, tol)
    if r <= 1.0:
        return _lerch_euler_maclaurin(z, s, a, tol)
    if s.real > 0:
        return _lerch_mellin(z, s, a, tol)
    raise DomainError("lerch_phi with |z| > 1 needs Re s > 0 or integer s <= 0")


def _lerch_rational(z: complex, k: int, a: complex) -> complex:
    """Phi(z, -k, a) = (a + z d/dz)^k 1/(1-z) as a polynomial in u = 1/(1-z).

    z d/dz u^j = j (u^(j+1) - u^j); coefficients stay exact integers times
    powers of a, so the form is stable for every z != 1 (including |z| > 1).
    """
    # coeffs[j] multiplies u^(j+1), starting from [1] for 1/(1-z)
    coeffs = [complex(1.0)]
    for _ in range(k):
        nxt = [complex(0.0)] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            jj = j + 1  # power of u
            nxt[j] += a * c - jj * c
            nxt[j + 1] += jj * c
        coeffs = nxt
    u = 1.0 / (1.0 - z)
    out = complex(0.0)
    up = u
    for c in coeffs:
        out += c * up
        up *= u
    return check_finite(out, "lerch_phi rational form")


def _lerch_series(z: complex, s: complex, a: complex, tol: ToleranceSpec) -> complex:
    acc = NeumaierAccumulator()
    zn = complex(1.0)
    small = 0
    for n in range(tol.max_terms * 10):
        an = a + n
        if an == 0:
            raise DomainError("lerch_phi series hit n + a = 0")
        t = zn * _cpow_neg(an, s)
        acc.add(t)
        if abs(t) <= 1e-17 * abs(acc.value) + 1e-300:
            small += 1
            if small >= 2 and n > 3:
                return check_finite(acc.value, "lerch_phi series")
        else:
            small = 0
        zn *= z
    raise NonConvergenceError("lerch_phi series stalled", partial=acc.value)


def _lerch_tail_integral(z: complex, s: complex, a: complex, n0: int) -> complex:
    """integral_{n0}^{inf} z^t (a+t)^(-s) dt, rotated to steepest descent."""
    from ..quadrature import IntegralSpec, integrate

    big_l = cmath.log(z)
    mod_l = abs(big_l)
    phi = math.pi - cmath.phase(big_l)  # e^(i phi) L = -|L|
    rot = cmath.exp(1j * phi)
    base = a + n0

    def f(v: float) -> complex:
        return cmath.exp(-v) * _cpow_neg(base + v * rot / mod_l, s)

    spec = IntegralSpec(integrand=f, interval=("semi_infinite", 0.0),
                        policy=ToleranceSpec(rel_tol=1e-13, abs_tol=1e-16))
    res = integrate(spec)
    return _cpow(z, n0) * rot / mod_l * res.value


def _cpow(base: complex, expo) -> complex:
    if base == 0:
        return complex(0.0)
    return cmath.exp(complex(expo) * cmath.log(base))


def _lerch_euler_maclaurin(z: complex, s: complex, a: complex,
                           tol: ToleranceSpec) -> complex:
    n0 = 24 + int(max(0.0, -a.real))
    acc = NeumaierAccumulator()
    zn = complex(1.0)
    for n in range(n0):
        acc.add(zn * _cpow_neg(a + n, s))
        zn *= z
    acc.add(_lerch_tail_integral(z, s, a, n0))
    big_l = cmath.log(z)
    # f(t) = e^(tL) (a+t)^(-s): f^(j)(n0) = e^(n0 L) (a+n0)^(-s) Q_j(w),
    # w = 1/(a+n0), with Q_{j+1} = L Q_j - s w Q_j - w^2 Q_j'.
    w = 1.0 / (a + n0)
    f0 = _cpow(z, n0) * _cpow_neg(a + n0, s)
    acc.add(0.5 * f0)
    q = [complex(1.0)]  # Q_0 in powers of w
    fact = 1.0
    prev_mag = math.inf
    order = 0
    for k in range(1, 26):
        while order < 2 * k - 1:
            nq = [complex(0.0)] * (len(q) + 1)
            for j, c in enumerate(q):
                nq[j] += big_l * c
                nq[j + 1] -= (s + j) * c
            q = nq
            order += 1
        val = complex(0.0)
        wp = complex(1.0)
        for c in q:
            val += c * wp
            wp *= w
        deriv = f0 * val
        fact *= (2 * k) * (2 * k - 1)
        term = -_BERN[2 * k] / fact * deriv
        mag = abs(term)
        acc.add(term)
        if mag <= 1e-17 * abs(acc.value) + 1e-300:
            break
        if mag > prev_mag:
            break
        prev_mag = mag
    return check_finite(acc.value, "lerch_phi euler-maclaurin")


def _lerch_mellin(z: complex, s: complex, a: complex, tol: ToleranceSpec) -> complex:
    """Phi(z,s,a) = 1/Gamma(s) * int_0^inf t^(s-1) e^(-at) / (1 - z e^(-t)) dt."""
    from ..quadrature import IntegralSpec, integrate

    if a.real <= 0:
        # shift a into the right half plane first
        shift = int(math.ceil(1.0 - a.real))
        out = complex(0.0)
        zn = complex(1.0)
        for n in range(shift):
            out += zn * _cpow_neg(a + n, s)
            zn *= z
        return out + zn * _lerch_mellin(z, s, a + shift, tol)

    def f(t: float) -> complex:
        if t == 0.0:
            return complex(0.0)
        return _cpow(t, s - 1.0) * cmath.exp(-a * t) / (1.0 - z * math.exp(-t))

    pol = ToleranceSpec(rel_tol=1e-12, abs_tol=1e-16)
    head = integrate(IntegralSpec(integrand=f, interval=("finite", 0.0, 1.0),
                                  endpoint_singularity="algebraic_log_left",
                                  policy=pol))
    tail = integrate(IntegralSpec(integrand=f, interval=("semi_infinite", 1.0),
                                  policy=pol))
    return rgamma(s) * (head.value + tail.value)


def lerch_phi_ds(z: complex, s: complex, a: complex) -> complex:
    """d/ds Phi(z, s, a) by central differences with Richardson refinement."""
    h = 1e-5

    def d(hh: float) -> complex:
        return (lerch_phi(z, s + hh, a) - lerch_phi(z, s - hh, a)) / (2.0 * hh)

    d1 = d(h)
    d2 = d(h / 2.0)
    return (4.0 * d2 - d1) / 3.0
