"""Registered function table: maps DSL names to kernel callables.

Each entry is (callable, argument kinds) where kind 'c' is complex and 'i'
is an integer (coerced from a near-integer complex value by the evaluator).
"""

from __future__ import annotations

import cmath
import math

from ..errors import DomainError
from . import bessel, combinat, elliptic, erf_expint, gammafn, hyper, lerch_zeta
from . import orthopoly, theta


def _csc(z):
    return 1.0 / cmath.sin(z)


def _sec(z):
    return 1.0 / cmath.cos(z)


def _cot(z):
    return cmath.cos(z) / cmath.sin(z)


def _csch(z):
    return 1.0 / cmath.sinh(z)


def _sech(z):
    return 1.0 / cmath.cosh(z)


def _coth(z):
    return cmath.cosh(z) / cmath.sinh(z)


def _floor(z):
    if abs(z.imag) > 1e-9:
        raise DomainError("floor of a non-real value")
    return complex(math.floor(z.real + 1e-12))


def _ceil(z):
    if abs(z.imag) > 1e-9:
        raise DomainError("ceil of a non-real value")
    return complex(math.ceil(z.real - 1e-12))


def _re(z):
    return complex(z.real)


def _im(z):
    return complex(z.imag)


def _conj(z):
    return z.conjugate()


def _abs(z):
    return complex(abs(z))


def _arcsinh(z):
    return cmath.asinh(z)


def _arctanh(z):
    return cmath.atanh(z)


def _sph_j(n, z):
    return bessel.spherical_j(complex(n), z)


def _pfq(ns, ds):
    def fn(*args):
        num = list(args[:ns])
        den = list(args[ns:ns + ds])
        return hyper.pfq(num, den, args[-1])
    return fn


FUNCTION_TABLE: dict = {
    # elementary
    "exp": (cmath.exp, "c"),
    "log": (cmath.log, "c"),
    "sqrt": (cmath.sqrt, "c"),
    "sin": (cmath.sin, "c"),
    "cos": (cmath.cos, "c"),
    "tan": (cmath.tan, "c"),
    "sinh": (cmath.sinh, "c"),
    "cosh": (cmath.cosh, "c"),
    "tanh": (cmath.tanh, "c"),
    "csc": (_csc, "c"),
    "sec": (_sec, "c"),
    "cot": (_cot, "c"),
    "csch": (_csch, "c"),
    "sech": (_sech, "c"),
    "coth": (_coth, "c"),
    "arcsin": (cmath.asin, "c"),
    "arccos": (cmath.acos, "c"),
    "arctan": (cmath.atan, "c"),
    "arcsinh": (_arcsinh, "c"),
    "arctanh": (_arctanh, "c"),
    "floor": (_floor, "c"),
    "ceil": (_ceil, "c"),
    "re": (_re, "c"),
    "im": (_im, "c"),
    "conj": (_conj, "c"),
    "abs": (_abs, "c"),
    # gamma family
    "gamma": (gammafn.gamma, "c"),
    "log_gamma": (gammafn.log_gamma, "c"),
    "rgamma": (gammafn.rgamma, "c"),
    "gamma_ratio": (lambda a, b: gammafn.gamma_ratio([a], [b]), "cc"),
    "gamma_upper": (gammafn.gamma_upper, "cc"),
    "gamma_inc2": (gammafn.gamma_generalized, "ccc"),
    "poch": (gammafn.pochhammer, "cc"),
    "binom": (gammafn.binomial_c, "cc"),
    "fact": (gammafn.factorial, "c"),
    "fact2": (gammafn.double_factorial, "i"),
    # hypergeometric
    "hyp1f1": (_pfq(1, 1), "ccc"),
    "hyp1f2": (_pfq(1, 2), "cccc"),
    "hyp2f1": (hyper.hyp2f1, "cccc"),
    "hyp2f2": (_pfq(2, 2), "ccccc"),
    "hyp2f3": (_pfq(2, 3), "cccccc"),
    "hyp3f2": (_pfq(3, 2), "cccccc"),
    "hyp3f3": (_pfq(3, 3), "ccccccc"),
    "hyp4f3": (_pfq(4, 3), "cccccccc"),
    "appell_f1": (hyper.appell_f1, "cccccc"),
    # lerch / zeta
    "lerch_phi": (lerch_zeta.lerch_phi, "ccc"),
    "lerch_phi_ds": (lerch_zeta.lerch_phi_ds, "ccc"),
    "hzeta": (lerch_zeta.hurwitz_zeta, "cc"),
    "zeta": (lerch_zeta.riemann_zeta, "c"),
    "polygamma": (lerch_zeta.polygamma, "ic"),
    "q_digamma": (lerch_zeta.q_digamma, "cc"),
    # erf / exponential integrals
    "erf": (erf_expint.erf, "c"),
    "erfc": (erf_expint.erfc, "c"),
    "erfi": (erf_expint.erfi, "c"),
    "expint_e": (erf_expint.expint_e, "cc"),
    "ei": (erf_expint.ei, "c"),
    "li": (erf_expint.li, "c"),
    "si": (erf_expint.si, "c"),
    "ci": (erf_expint.ci, "c"),
    "shi": (erf_expint.shi, "c"),
    "chi": (erf_expint.chi, "c"),
    # bessel family
    "besselj": (bessel.besselj, "cc"),
    "besseli": (bessel.besseli, "cc"),
    "besselk": (bessel.besselk, "cc"),
    "bessely": (bessel.bessely, "cc"),
    "sph_j": (_sph_j, "cc"),
    "struve_l": (bessel.struve_l, "cc"),
    # elliptic
    "elliptic_k": (elliptic.elliptic_k, "c"),
    "elliptic_e": (elliptic.elliptic_e, "c"),
    "elliptic_f": (elliptic.elliptic_f, "cc"),
    # polynomials
    "hermite": (orthopoly.hermite, "ic"),
    "gegenbauer": (orthopoly.gegenbauer, "icc"),
    "laguerre": (orthopoly.laguerre, "icc"),
    "jacobi_p": (orthopoly.jacobi_p, "iccc"),
    "legendre_p": (orthopoly.legendre_p, "ic"),
    "chebyshev_t": (orthopoly.chebyshev_t, "ic"),
    "bernoulli_b": (orthopoly.bernoulli_poly, "ic"),
    "euler_e": (orthopoly.euler_poly, "ic"),
    "fibonacci_f": (orthopoly.fibonacci_poly, "ic"),
    # combinatorial
    "stirling2": (combinat.stirling2, "ii"),
    "stirling1": (combinat.stirling1_signed, "ii"),
    "bell": (combinat.bell, "i"),
    "harmonic": (combinat.harmonic, "c"),
    "q_poch": (combinat.q_pochhammer, "cci"),
    "q_binom": (combinat.q_binomial, "iic"),
    # theta
    "theta3": (theta.theta3, "c"),
    "theta4": (theta.theta4, "c"),
}
