"""Adaptive one-dimensional quadrature of complex-valued integrands over real
paths.

Two engines:
  * 15-point Gauss-Kronrod with adaptive bisection for smooth finite panels;
    the per-panel error is the Kronrod-Gauss delta.
  * tanh-sinh (double-exponential) for integrable endpoint singularities.

Semi-infinite intervals map through t = a + u/(1-u) and are treated as finite
with a right-endpoint singularity.  The Kronrod extension of the 7-point
Legendre rule is generated at import time by Laurie's algorithm; tests pin it
against exact polynomial integrals and the embedded Gauss nodes.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, EvaluationError, GfvError, NonConvergenceError
from .numerics import NeumaierAccumulator, ToleranceSpec, ValueWithError, check_finite

__all__ = ["IntegralSpec", "integrate", "integrate_indefinite_to",
           "KRONROD_NODES", "KRONROD_WEIGHTS", "GAUSS_NODES", "GAUSS_WEIGHTS"]

_PANEL_BUDGET = 2000
_TS_CLIP = 1e-15
_TS_MAX_LEVEL = 11


def _r_jacobi_legendre(n: int) -> np.ndarray:
    """First n recurrence coefficients (alpha_k, beta_k) for Legendre weight on [-1,1]."""
    ab = np.zeros((n, 2))
    ab[0, 1] = 2.0
    for k in range(1, n):
        ab[k, 1] = 1.0 / (4.0 - k ** -2)
    return ab


def _r_kronrod(n: int, ab0: np.ndarray) -> np.ndarray:
    """Jacobi matrix coefficients of the (2n+1)-point Kronrod extension (Laurie 1997)."""
    a = np.zeros(2 * n + 1)
    b = np.zeros(2 * n + 1)
    k = 3 * n // 2 + 1
    a[:k] = ab0[:k, 0]
    k = (3 * n + 1) // 2 + 1
    b[:k] = ab0[:k, 1]
    s = np.zeros(n // 2 + 2)
    t = np.zeros(n // 2 + 2)
    t[1] = b[n + 1]
    for m in range(0, n - 1):
        u = 0.0
        for kk in range((m + 1) // 2, -1, -1):
            ll = m - kk
            u += (a[kk + n + 1] - a[ll]) * t[kk + 1] + b[kk + n + 1] * s[kk] - b[ll] * s[kk + 1]
            s[kk + 1] = u
        s, t = t, s
    for j in range(n // 2, -1, -1):
        s[j + 1] = s[j]
    for m in range(n - 1, 2 * n - 2):
        u = 0.0
        j = 0
        for kk in range(m + 1 - n, (m - 1) // 2 + 1):
            ll = m - kk
            j = n - 1 - ll
            u += -(a[kk + n + 1] - a[ll]) * t[j + 1] - b[kk + n + 1] * s[j + 1] + b[ll] * s[j + 2]
            s[j + 1] = u
        kk = (m + 1) // 2
        if m % 2 == 0:
            a[kk + n + 1] = a[kk] + (s[j + 1] - b[kk + n + 1] * s[j + 2]) / t[j + 2]
        else:
            b[kk + n + 1] = s[j + 1] / s[j + 2]
        s, t = t, s
    a[2 * n] = a[n - 1] - b[2 * n] * s[1] / t[1]
    return np.column_stack([a, b])


def _golub_welsch(ab: np.ndarray):
    n = ab.shape[0]
    d = ab[:, 0]
    e = np.sqrt(ab[1:, 1])
    jac = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    vals, vecs = np.linalg.eigh(jac)
    weights = ab[0, 1] * vecs[0, :] ** 2
    return vals, weights


def _build_gk15():
    ab = _r_jacobi_legendre(12)
    abk = _r_kronrod(7, ab)
    xk, wk = _golub_welsch(abk)
    xg, wg = np.polynomial.legendre.leggauss(7)
    return (tuple(xk.tolist()), tuple(wk.tolist()),
            tuple(xg.tolist()), tuple(wg.tolist()))


KRONROD_NODES, KRONROD_WEIGHTS, GAUSS_NODES, GAUSS_WEIGHTS = _build_gk15()


@dataclass
class IntegralSpec:
    integrand: object            # callable real t -> complex
    interval: tuple              # ("finite", a, b) | ("semi_infinite", a) | ("unit",)
    endpoint_singularity: str = "none"
    policy: ToleranceSpec = field(default_factory=ToleranceSpec)

    def __post_init__(self):
        kind = self.interval[0]
        if kind == "unit":
            self.interval = ("finite", 0.0, 1.0)
            kind = "finite"
        if kind == "finite":
            a, b = self.interval[1], self.interval[2]
            if not (a < b):
                raise ValueError("finite interval needs a < b")
        elif kind != "semi_infinite":
            raise ValueError(f"unknown interval kind {kind!r}")
        if self.endpoint_singularity not in (
                "none", "algebraic_log_left", "algebraic_log_right", "both"):
            raise ValueError("bad endpoint_singularity")


def _eval_panel(f, mid: float, half: float):
    """One GK15 panel: returns (kronrod, gauss, err)."""
    fk = []
    for xi in KRONROD_NODES:
        t = mid + half * xi
        try:
            fk.append(complex(f(t)))
        except GfvError as exc:
            raise EvaluationError(f"integrand failed at t={t}: {exc}") from exc
    k = complex(0.0)
    for v, w in zip(fk, KRONROD_WEIGHTS):
        k += w * v
    g = complex(0.0)
    # Gauss-7 nodes sit at the odd-index Kronrod abscissas (sorted order).
    for j, w in enumerate(GAUSS_WEIGHTS):
        g += w * fk[2 * j + 1]
    k *= half
    g *= half
    return k, g, abs(k - g)


def _adaptive_gk(f, a: float, b: float, policy: ToleranceSpec) -> ValueWithError:
    counter = 0
    k, g, err = _eval_panel(f, (a + b) / 2, (b - a) / 2)
    heap = [(-err, counter, a, b, k)]
    total = k
    total_err = err
    panels = 1
    while panels < _PANEL_BUDGET:
        bound = policy.abs_tol + policy.rel_tol * abs(total)
        if total_err <= bound * 0.5:
            break
        neg_err, _, pa, pb, pk = heapq.heappop(heap)
        pm = (pa + pb) / 2
        k1, g1, e1 = _eval_panel(f, (pa + pm) / 2, (pm - pa) / 2)
        k2, g2, e2 = _eval_panel(f, (pm + pb) / 2, (pb - pm) / 2)
        total = total - pk + k1 + k2
        total_err = total_err + neg_err + e1 + e2
        counter += 1
        heapq.heappush(heap, (-e1, counter, pa, pm, k1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, pm, pb, k2))
        panels += 1
    else:
        raise NonConvergenceError("panel budget exhausted", partial=total,
                                  err_estimate=total_err)
    check_finite(total, "adaptive quadrature")
    return ValueWithError(total, total_err, panels * 15, True)


def _ts_clip(endpoint: float, span: float) -> float:
    # A zero endpoint has no cancellation in endpoint+delta, so the rule may
    # descend to the underflow floor; elsewhere binary64 abscissas saturate
    # around 1e-15 of the endpoint scale.
    if endpoint == 0.0:
        return 5e-300
    return _TS_CLIP * max(abs(endpoint), span)


def _tanh_sinh(f, a: float, b: float, policy: ToleranceSpec,
               singularity: str = "both") -> ValueWithError:
    span = b - a
    sing_left = singularity in ("algebraic_log_left", "both")
    sing_right = singularity in ("algebraic_log_right", "both")
    clip_a = _ts_clip(a, span)
    clip_b = _ts_clip(b, span)
    # deepest two samples per side, for the clipped-tail correction
    deep = {"a": [], "b": []}

    def feval(t: float) -> complex:
        try:
            return complex(f(t))
        except GfvError as exc:
            raise EvaluationError(f"integrand failed at t={t}: {exc}") from exc

    def point_pair(u: float) -> complex:
        # abscissas as exact distances from each endpoint
        s = math.pi / 2 * math.sinh(u)
        try:
            e2s = math.exp(2 * s)
        except OverflowError:
            return complex(0.0)
        delta = span / (1.0 + e2s)
        ems = 1.0 / e2s
        w = math.pi / 2 * math.cosh(u) * 4.0 * ems / (1.0 + ems) ** 2
        if w == 0.0 or delta == 0.0:
            return complex(0.0)
        out = complex(0.0)
        if delta > clip_b:
            tb = b - delta
            fb = feval(tb)
            out += w * fb
            if sing_right and 1e2 * clip_b < delta < 1e8 * clip_b:
                deep["b"].append((b - tb, fb))  # exact representable distance
        if delta > clip_a:
            ta = a + delta
            fa = feval(ta)
            out += w * fa
            if sing_left and 1e2 * clip_a < delta < 1e8 * clip_a:
                deep["a"].append((ta - a, fa))
        return out

    def tail_correction(h: float) -> complex:
        """Mass lost to clipping: the clipped grid points re-summed with a
        local power-law model f ~ amp * delta^alpha fitted per singular side."""
        out = complex(0.0)
        for side, clip in (("a", clip_a), ("b", clip_b)):
            pts = sorted(deep[side], key=lambda p: p[0])[:2]
            if len(pts) < 2:
                continue
            (d1, f1), (d2, f2) = pts
            if f1 == 0 or f2 == 0 or d1 == d2:
                continue
            alpha = math.log(abs(f1) / abs(f2)) / math.log(d1 / d2)
            if alpha <= -0.99 or alpha > 0.5:
                continue
            amp = f1 / d1 ** alpha
            # sum h*w(u)*amp*delta(u)^alpha over grid points with delta <= clip
            s_clip = 0.5 * math.log(span / clip - 1.0)
            u_clip = math.asinh(2.0 * s_clip / math.pi)
            k = int(math.ceil(u_clip / h))
            log_amp = math.log(abs(amp)) if amp != 0 else -800.0
            phase = amp / abs(amp)
            while True:
                u = k * h
                s = math.pi / 2 * math.sinh(u)
                if 2 * s > 700:
                    delta_log = math.log(span) - 2 * s
                else:
                    delta_log = math.log(span) - math.log1p(math.exp(2 * s))
                if delta_log <= math.log(clip):
                    w_log = math.log(math.pi / 2 * math.cosh(u) * 4.0) - 2 * s
                    term_log = math.log(h) + w_log + log_amp + alpha * delta_log
                    if term_log < -745.0:
                        break
                    out += phase * math.exp(term_log) * (span / 2)
                k += 1
                if k * h > 40.0:
                    break
        return out

    umax = 6.56
    acc = NeumaierAccumulator()
    acc.add(math.pi / 2 * feval((a + b) / 2))
    h = 1.0
    k = 1
    evals = 1
    while k * h <= umax:
        acc.add(point_pair(k * h))
        evals += 2
        k += 1
    prev = acc.value * h * (span / 2) + tail_correction(h)
    prev_delta = None
    for _level in range(1, _TS_MAX_LEVEL + 1):
        h /= 2
        k = 1
        while k * h <= umax:
            acc.add(point_pair(k * h))
            evals += 2
            k += 2  # only the new (odd) abscissas of this level
        corr = tail_correction(h)
        cur = acc.value * h * (span / 2) + corr
        delta = abs(cur - prev)
        bound = policy.abs_tol + policy.rel_tol * abs(cur)
        if delta <= bound and prev_delta is not None and prev_delta <= bound * 8:
            check_finite(cur, "tanh-sinh quadrature")
            err = max(delta, 1e-16 * abs(cur)) + 0.1 * abs(corr)
            return ValueWithError(cur, err, evals, True)
        prev, prev_delta = cur, delta
    check_finite(prev, "tanh-sinh quadrature")
    raise NonConvergenceError("tanh-sinh level budget exhausted", partial=prev,
                              err_estimate=prev_delta)


def integrate(spec: IntegralSpec) -> ValueWithError:
    """Integrate spec.integrand over spec.interval."""
    kind = spec.interval[0]
    if kind == "semi_infinite":
        a = float(spec.interval[1])
        f = spec.integrand

        def mapped(u: float) -> complex:
            d = 1.0 - u
            return f(a + u / d) / (d * d)

        inner = IntegralSpec(integrand=mapped, interval=("finite", 0.0, 1.0),
                             endpoint_singularity="algebraic_log_right",
                             policy=spec.policy)
        return _tanh_sinh(mapped, 0.0, 1.0, inner.policy)
    a, b = float(spec.interval[1]), float(spec.interval[2])
    if spec.endpoint_singularity == "none":
        return _adaptive_gk(spec.integrand, a, b, spec.policy)
    return _tanh_sinh(spec.integrand, a, b, spec.policy,
                      singularity=spec.endpoint_singularity)


def integrate_indefinite_to(spec: IntegralSpec, upper) -> ValueWithError:
    """Integrate spec.integrand over the real segment [0, upper]."""
    u = complex(upper)
    if abs(u.imag) > 1e-12 * max(1.0, abs(u.real)):
        raise DomainError("indefinite upper limit must lie on the real path")
    x = u.real
    if x == 0.0:
        return ValueWithError(complex(0.0), 0.0, 0, True)
    f = spec.integrand
    if x > 0:
        inner = IntegralSpec(integrand=f, interval=("finite", 0.0, x),
                             endpoint_singularity=spec.endpoint_singularity,
                             policy=spec.policy)
        return integrate(inner)
    inner = IntegralSpec(integrand=f, interval=("finite", x, 0.0),
                         endpoint_singularity=spec.endpoint_singularity,
                         policy=spec.policy)
    res = integrate(inner)
    return ValueWithError(-res.value, res.err_estimate, res.terms_used, res.converged)
