"""Truncated power-series arithmetic and the two coefficient-extraction
formulas used for the generating-function cross-checks.

PowerSeries holds coefficients about 0 up to a truncation order.  Series are
immutable; arithmetic truncates to the shorter operand.  Coefficients are
complex in the production path; the exact path uses Fractions (Python
rationals), which trades the fixed-width-integer overflow check for exact
arithmetic at any size.

Coefficient formulas, with y = x/phi(x):
  form 1: c_n = [x^(n-1)](f' phi^n) / n          (n >= 1)
  form 2: c_n = [x^n](f phi^n)
so that f(x) = f(0) + sum c_n y^n (form 1) and
f(x)/(1 - y phi'(x)) = sum c_n y^n (form 2).
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import DomainError, OrderError

__all__ = ["PowerSeries", "ps_x", "ps_const", "lagrange_coeff_form1",
           "lagrange_coeff_form2"]

DEFAULT_ORDER = 24


def _is_zero(c) -> bool:
    return c == 0


class PowerSeries:
    """Immutable truncated power series sum_k c_k x^k, k = 0..order."""

    __slots__ = ("coeffs", "order", "exact")

    def __init__(self, coeffs, order=None, exact=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if exact is None:
            exact = all(isinstance(c, (int, Fraction)) for c in coeffs)
        if exact:
            coeffs = [Fraction(c) for c in coeffs]
            zero = Fraction(0)
        else:
            coeffs = [complex(c) for c in coeffs]
            zero = complex(0.0)
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.exact = exact

    # -- basics ----------------------------------------------------------
    def _zero(self):
        return Fraction(0) if self.exact else complex(0.0)

    def _one(self):
        return Fraction(1) if self.exact else complex(1.0)

    def coeff(self, k: int):
        if k > self.order:
            raise OrderError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def to_inexact(self) -> "PowerSeries":
        if not self.exact:
            return self
        return PowerSeries([complex(c) for c in self.coeffs], self.order, exact=False)

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"

    def __eq__(self, other):
        return (isinstance(other, PowerSeries) and self.order == other.order
                and self.coeffs == other.coeffs)

    # -- ring operations --------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            if self.exact != other.exact:
                return self.to_inexact(), other.to_inexact()
            return self, other
        if isinstance(other, (int, Fraction)) and self.exact:
            return self, PowerSeries([Fraction(other)], self.order, exact=True)
        s = self.to_inexact()
        return s, PowerSeries([complex(other)], s.order, exact=False)

    def __add__(self, other):
        a, b = self._coerce(other)
        n = min(a.order, b.order)
        return PowerSeries([a.coeffs[k] + b.coeffs[k] for k in range(n + 1)],
                           n, exact=a.exact)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order, exact=self.exact)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.order,
                               exact=self.exact and isinstance(other, (int, Fraction)))
        a, b = self._coerce(other)
        n = min(a.order, b.order)
        out = [a._zero() for _ in range(n + 1)]
        for i, ai in enumerate(a.coeffs[: n + 1]):
            if _is_zero(ai):
                continue
            for j in range(0, n + 1 - i):
                bj = b.coeffs[j]
                if not _is_zero(bj):
                    out[i + j] += ai * bj
        return PowerSeries(out, n, exact=a.exact)

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        if _is_zero(self.coeffs[0]):
            raise DomainError("series reciprocal needs a nonzero constant term")
        inv0 = (Fraction(1) if self.exact else 1.0) / self.coeffs[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            s = self._zero()
            for j in range(1, k + 1):
                s += self.coeffs[j] * out[k - j]
            out.append(-inv0 * s)
        return PowerSeries(out, self.order, exact=self.exact)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * ((Fraction(1) if self.exact and
                        isinstance(other, (int, Fraction)) else 1.0) / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # -- calculus ---------------------------------------------------------
    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([self._zero()], 0, exact=self.exact)
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)],
                           self.order - 1, exact=self.exact)

    # -- transcendental ---------------------------------------------------
    def exp(self) -> "PowerSeries":
        c0 = self.coeffs[0]
        if self.exact and not _is_zero(c0):
            raise DomainError("exact-mode exp needs zero constant term")
        lead = self._one() if _is_zero(c0) else cmath.exp(complex(c0))
        u = list(self.coeffs)
        u[0] = self._zero()
        out = [self._one()]
        for k in range(1, self.order + 1):
            s = self._zero()
            for j in range(1, k + 1):
                s += j * u[j] * out[k - j]
            out.append(s / k)
        return PowerSeries([lead * c for c in out], self.order,
                           exact=self.exact and _is_zero(c0))

    def log(self) -> "PowerSeries":
        c0 = self.coeffs[0]
        if _is_zero(c0):
            raise DomainError("series log needs a nonzero constant term")
        if self.exact and c0 != 1:
            raise DomainError("exact-mode log needs constant term 1")
        g = self / c0
        lead = self._zero() if c0 == 1 else cmath.log(complex(c0))
        out = [self._zero()]
        for k in range(1, self.order + 1):
            s = k * g.coeffs[k]
            for j in range(1, k):
                s -= j * out[j] * g.coeffs[k - j]
            out.append(s / k)
        ps = PowerSeries(out, self.order, exact=self.exact and c0 == 1)
        if _is_zero(lead):
            return ps
        return ps + PowerSeries([lead], self.order, exact=False)

    def pow(self, alpha) -> "PowerSeries":
        """self**alpha; integer alpha by squaring (valuation allowed),
        otherwise exp(alpha*log) which needs a nonzero constant term."""
        if isinstance(alpha, Fraction) and alpha.denominator == 1:
            alpha = int(alpha)
        if isinstance(alpha, complex) and alpha.imag == 0:
            alpha = alpha.real
        if isinstance(alpha, float) and alpha.is_integer():
            alpha = int(alpha)
        if isinstance(alpha, int):
            if alpha == 0:
                return PowerSeries([self._one()], self.order, exact=self.exact)
            base = self if alpha > 0 else self.reciprocal()
            k = abs(alpha)
            out = None
            b = base
            while k:
                if k & 1:
                    out = b if out is None else out * b
                k >>= 1
                if k:
                    b = b * b
            return out
        return (self.log() * alpha).exp()

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        if not _is_zero(inner.coeffs[0]):
            raise DomainError("composition needs zero inner constant term")
        a, g = self._coerce(inner)
        n = min(a.order, g.order)
        out = PowerSeries([a.coeffs[n]], n, exact=a.exact)
        for k in range(n - 1, -1, -1):
            out = out * g + PowerSeries([a.coeffs[k]], n, exact=a.exact)
        return out

    def sinh(self) -> "PowerSeries":
        e = self.exp()
        return (e - e.reciprocal()) / 2

    def cosh(self) -> "PowerSeries":
        e = self.exp()
        return (e + e.reciprocal()) / 2

    def sqrt(self) -> "PowerSeries":
        return self.pow(Fraction(1, 2) if self.exact else 0.5)

    def arcsinh(self) -> "PowerSeries":
        if not _is_zero(self.coeffs[0]):
            raise DomainError("series arcsinh implemented about 0 only")
        return ((self * self + 1).sqrt() + self).log()


def ps_x(order: int = DEFAULT_ORDER, exact: bool = False) -> PowerSeries:
    one = Fraction(1) if exact else 1.0
    zero = Fraction(0) if exact else 0.0
    return PowerSeries([zero, one] + [zero] * (order - 1), order, exact=exact)


def ps_const(value, order: int = DEFAULT_ORDER, exact: bool = False) -> PowerSeries:
    return PowerSeries([value], order, exact=exact)


def lagrange_coeff_form1(f: PowerSeries, phi: PowerSeries, n: int):
    """Coefficient of y^n in the form-1 expansion, n >= 1."""
    if n < 1:
        raise DomainError("form 1 defines coefficients for n >= 1")
    if n > f.order or n > phi.order:
        raise OrderError(f"n={n} exceeds series order")
    g = f.derivative() * phi.pow(n)
    return g.coeff(n - 1) / n


def lagrange_coeff_form2(f: PowerSeries, phi: PowerSeries, n: int):
    """Coefficient of y^n in the form-2 expansion, n >= 0."""
    if n < 0:
        raise DomainError("form 2 defines coefficients for n >= 0")
    if n > f.order or n > phi.order:
        raise OrderError(f"n={n} exceeds series order")
    return (f * phi.pow(n)).coeff(n)
