"""Scalar numeric kernels shared by the trajectory, determinant and assembly code.

Everything here works on a stacked derivative table ``dv``: row ``n`` holds the
coefficients of the n-th derivative of the potential in ascending powers of x,
zero padded to a common width.  Polynomials are the only potential family the
package supports, so Taylor expansions written in terms of the rows of ``dv``
are exact, not approximate.

The central change of variables: a turning point ``xt`` of a Euclidean path is
a square-root zero of the speed ``v(x) = sqrt((2/M)(V(x) - V(xt)))``.  With
``x = xt + sigma * s**2`` (``sigma`` pointing from the turning point toward the
far endpoint) every integrand used here becomes analytic in ``s``:

    time      dx / v          ->  sqrt(2 M / g(s)) ds
    arc       M v dx          ->  2 s^2 sqrt(2 M g(s)) ds

where ``g(s) = [V(xt + sigma s^2) - V(xt)] / s^2`` is evaluated through the
exact Taylor sum ``sigma * sum_k V^(k)(xt) h^(k-1) / k!`` (``h = sigma s^2``),
which is free of subtractive cancellation near ``s = 0``.

The derivative of the time integral with respect to the turning point is also
computed in this substituted form (boundary term plus differentiation under
the integral sign); it feeds the fluctuation determinants directly.

Hot functions are compiled with numba when available.  Setting the environment
variable ``THERMOPATH_NO_NUMBA=1`` selects the pure-Python/numpy fallback with
identical semantics (see benchmarks/bench_kernels.py for the speed gap).
"""

import math
import os

import numpy as np

NUMBA_DISABLED = os.environ.get("THERMOPATH_NO_NUMBA", "0") == "1"

if not NUMBA_DISABLED:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False
else:
    NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def jit(func):
        return njit(cache=True)(func)
else:
    def jit(func):
        return func

# 24-point Gauss-Legendre rule used for every panel.
_GL_X, _GL_W = np.polynomial.legendre.leggauss(24)

# status codes returned by the adaptive integrator
OK = 0
FAIL = 1


@jit
def polyval(c, x):
    """Evaluate a polynomial with ascending coefficients ``c`` at ``x``."""
    acc = 0.0
    for i in range(c.shape[0] - 1, -1, -1):
        acc = acc * x + c[i]
    return acc


@jit
def pot_eval(dv, n, x):
    """n-th derivative of the potential at x (exact closed form)."""
    return polyval(dv[n], x)


@jit
def level_gap(dv, xt, sigma, s):
    """g(s) = [V(xt + sigma s^2) - V(xt)] / s^2 via the exact Taylor sum."""
    h = sigma * s * s
    tot = 0.0
    hk = 1.0
    fact = 1.0
    for k in range(1, dv.shape[0]):
        fact *= k
        tot += polyval(dv[k], xt) * hk / fact
        hk *= h
    return sigma * tot


@jit
def level_gap_dxt(dv, xt, sigma, s):
    """Partial derivative of ``level_gap`` with respect to the turning point."""
    h = sigma * s * s
    tot = 0.0
    hk = 1.0
    fact = 1.0
    for k in range(1, dv.shape[0] - 1):
        fact *= k
        tot += polyval(dv[k + 1], xt) * hk / fact
        hk *= h
    return sigma * tot


@jit
def _panel(dv, M, xt, sigma, a, b, which):
    """One 24-point Gauss-Legendre panel of the selected integrand.

    which = 0: time        sqrt(2M/g)
    which = 1: d(time)/dxt -0.5 sqrt(2M) g^(-3/2) dg/dxt   (integral part)
    which = 2: arc         2 s^2 sqrt(2M g)
    """
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    tot = 0.0
    for i in range(_GL_X.shape[0]):
        s = mid + half * _GL_X[i]
        g = level_gap(dv, xt, sigma, s)
        if g <= 0.0:
            return np.nan
        if which == 0:
            f = math.sqrt(2.0 * M / g)
        elif which == 1:
            gx = level_gap_dxt(dv, xt, sigma, s)
            f = -0.5 * math.sqrt(2.0 * M) * gx / (g * math.sqrt(g))
        else:
            f = 2.0 * s * s * math.sqrt(2.0 * M * g)
        tot += _GL_W[i] * f
    return tot * half


@jit
def _adaptive(dv, M, xt, sigma, lo, hi, tol, which):
    """Adaptive bisection quadrature over s in [lo, hi].

    Returns (value, error_estimate, status).  The error of a panel is taken as
    the defect between its single-panel value and the sum of its two halves;
    the tolerance budget is distributed proportionally to panel width.
    """
    cap = 2048
    st_a = np.empty(cap)
    st_b = np.empty(cap)
    st_v = np.empty(cap)
    whole = _panel(dv, M, xt, sigma, lo, hi, which)
    if np.isnan(whole):
        return 0.0, 0.0, FAIL
    st_a[0] = lo
    st_b[0] = hi
    st_v[0] = whole
    n = 1
    total = 0.0
    err = 0.0
    width0 = hi - lo
    budget = tol * max(1.0, abs(whole))
    iters = 0
    while n > 0:
        iters += 1
        if iters > 20000 or n >= cap - 2:
            return total, err + abs(whole), FAIL
        n -= 1
        a = st_a[n]
        b = st_b[n]
        v = st_v[n]
        m = 0.5 * (a + b)
        v1 = _panel(dv, M, xt, sigma, a, m, which)
        v2 = _panel(dv, M, xt, sigma, m, b, which)
        if np.isnan(v1) or np.isnan(v2):
            return total, err, FAIL
        d = abs(v1 + v2 - v)
        if d <= budget * (b - a) / width0 or (b - a) < 4e-16 * width0:
            total += v1 + v2
            err += d
        else:
            st_a[n] = a
            st_b[n] = m
            st_v[n] = v1
            n += 1
            st_a[n] = m
            st_b[n] = b
            st_v[n] = v2
            n += 1
    return total, err, OK


@jit
def seg_time(dv, M, xt, y, tol):
    """One-way travel time from the turning point ``xt`` to ``y``.

    The level is V(xt); the endpoint square-root singularity at ``xt`` is
    removed exactly by the s^2 substitution.
    """
    if y == xt:
        return 0.0, 0.0, OK
    sigma = 1.0 if y > xt else -1.0
    S = math.sqrt(abs(y - xt))
    return _adaptive(dv, M, xt, sigma, 0.0, S, tol, 0)


@jit
def seg_time_dxt(dv, M, xt, y, tol):
    """Derivative of ``seg_time`` with respect to the turning point.

    Computed analytically: boundary term -sigma/v(y) plus differentiation
    under the substituted integral (no finite differences).
    """
    sigma = 1.0 if y > xt else -1.0
    S = math.sqrt(abs(y - xt))
    gap = polyval(dv[0], y) - polyval(dv[0], xt)
    if gap <= 0.0:
        return 0.0, 0.0, FAIL
    v_y = math.sqrt(2.0 * gap / M)
    val, err, status = _adaptive(dv, M, xt, sigma, 0.0, S, tol, 1)
    return -sigma / v_y + val, err, status


@jit
def seg_arc(dv, M, xt, y, tol):
    """Integral of M v dx along the path from ``xt`` to ``y`` (one way)."""
    if y == xt:
        return 0.0, 0.0, OK
    sigma = 1.0 if y > xt else -1.0
    S = math.sqrt(abs(y - xt))
    return _adaptive(dv, M, xt, sigma, 0.0, S, tol, 2)


@jit
def level_cross(dv, lo, hi, level, tol):
    """Bisect V(x) = level on a bracket [lo, hi] with a sign change."""
    flo = polyval(dv[0], lo) - level
    a = lo
    b = hi
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = polyval(dv[0], mid) - level
        if fm == 0.0 or abs(b - a) < tol * (1.0 + abs(mid)):
            return mid
        if (fm > 0.0) == (flo > 0.0):
            a = mid
            flo = fm
        else:
            b = mid
    return 0.5 * (a + b)


def py_func(func):
    """Uncompiled version of a kernel (identical object when numba is off)."""
    return getattr(func, "py_func", func)
