"""Jacobi elliptic functions and the complete integral K, self contained.

Conventions: the modulus k (not the parameter m = k^2) is passed everywhere.
K(k) uses the arithmetic-geometric mean; cn/sn/dn use the descending
Gauss/Landen transformation of DLMF 22.20(ii), which is derivative free and
uniformly accurate for 0 <= k < 1.  The degenerate moduli are exact:
k = 0 gives circular functions, k = 1 hyperbolic ones.
"""

import math

import numpy as np

from ._kernels import jit
from .errors import ModulusOutOfRange

_ITER_CAP = 32
_CONVERGENCE = 1e-15


@jit
def _agm(a: float, b: float) -> float:
    for _ in range(_ITER_CAP):
        an = 0.5 * (a + b)
        bn = math.sqrt(a * b)
        if abs(an - bn) < _CONVERGENCE * an:
            return an
        a, b = an, bn
    return 0.5 * (a + b)


@jit
def _cn_sn_dn(u: float, k: float):
    # descending Landen / AGM ladder, DLMF 22.20(ii)
    a_arr = np.empty(_ITER_CAP + 1)
    c_arr = np.empty(_ITER_CAP + 1)
    a = 1.0
    b = math.sqrt(1.0 - k * k)
    c = k
    a_arr[0] = a
    c_arr[0] = c
    n = 0
    for i in range(1, _ITER_CAP + 1):
        an = 0.5 * (a + b)
        bn = math.sqrt(a * b)
        cn_ = 0.5 * (a - b)
        a, b, c = an, bn, cn_
        a_arr[i] = a
        c_arr[i] = c
        n = i
        if abs(c) < _CONVERGENCE * a:
            break
    phi = (2.0**n) * a_arr[n] * u
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, c_arr[i] / a_arr[i] * math.sin(phi)))))
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = math.sqrt(max(1.0 - k * k * sn * sn, 0.0))
    return cn, sn, dn


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus convention."""
    if not 0.0 <= k < 1.0:
        raise ModulusOutOfRange(f"K(k) requires 0 <= k < 1, got {k}")
    return math.pi / (2.0 * _agm(1.0, math.sqrt(1.0 - k * k)))


def jacobi_cn_sn_dn(u: float, k: float):
    """(cn, sn, dn) at argument u and modulus k, each to ~1e-13 absolute."""
    if not 0.0 <= k <= 1.0:
        raise ModulusOutOfRange(f"modulus must lie in [0, 1], got {k}")
    if k == 0.0:
        return math.cos(u), math.sin(u), 1.0
    if k == 1.0:
        sech = 1.0 / math.cosh(u)
        return sech, math.tanh(u), sech
    cn, sn, dn = _cn_sn_dn(float(u), float(k))
    return cn, sn, dn
