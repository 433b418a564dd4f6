"""Potentials, physical constants and the (x0, beta) control point.

All supported potentials are polynomials, so every derivative is stored as an
exact coefficient table at construction time (row n of ``derivative_table`` is
the n-th derivative in ascending powers).

Well convention used throughout the package: a "well" is a well of the
inverted potential -V, i.e. a stationary point x_m with V'(x_m) = 0 and
V''(x_m) < 0, inside which bounded Euclidean motion exists.  Its curvature
frequency is omega_m = sqrt(-V''(x_m)/M).  For the symmetric double well
V = lam (x^2 - a^2)^2 this is the single point x_m = 0 with
omega_m = sqrt(4 lam a^2 / M); the minima of V at +-a are not wells in this
sense (they are hilltops of -V).
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import NegativeDiscriminant, UnsupportedDerivativeOrder

KINDS = ("harmonic", "quartic_single", "quartic_double", "polynomial")


@dataclass(frozen=True)
class PotentialSpec:
    """Immutable potential definition with mass and hbar."""

    kind: str
    mass: float
    hbar: float
    coefficients: tuple  # V(x) in ascending powers of x
    omega: float = 0.0
    lam: float = 0.0
    a: float = 0.0
    derivative_table: np.ndarray = field(init=False, repr=False, compare=False)
    max_order: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown potential kind {self.kind!r}")
        if self.mass <= 0.0:
            raise ValueError("mass must be positive")
        if self.hbar <= 0.0:
            raise ValueError("hbar must be positive")
        coeffs = np.asarray(self.coefficients, dtype=np.float64)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coefficients must be a non-empty 1-D sequence")
        degree = max(int(np.max(np.nonzero(coeffs)[0])) if coeffs.any() else 0, 0)
        rows = [coeffs]
        cur = coeffs
        for _ in range(degree + 1):
            cur = np.polynomial.polynomial.polyder(cur)
            if cur.size == 0:
                cur = np.zeros(1)
            rows.append(cur)
        width = max(r.size for r in rows)
        table = np.zeros((len(rows), width))
        for i, r in enumerate(rows):
            table[i, : r.size] = r
        object.__setattr__(self, "derivative_table", table)
        if self.kind == "polynomial":
            object.__setattr__(self, "max_order", degree)
        else:
            object.__setattr__(self, "max_order", 4)

    @property
    def degree(self) -> int:
        return self.derivative_table.shape[0] - 2


@dataclass(frozen=True)
class ControlPoint:
    """Start/end position x0 and inverse temperature beta."""

    x0: float
    beta: float

    def __post_init__(self):
        if self.beta <= 0.0:
            raise ValueError("beta must be positive")


@dataclass(frozen=True)
class WellInfo:
    """A well of -V: stationary point with V'' < 0 and its frequency."""

    x_m: float
    omega_m: float


def harmonic(omega: float, mass: float = 1.0, hbar: float = 1.0) -> PotentialSpec:
    """V(x) = (1/2) M omega^2 x^2."""
    if omega <= 0.0:
        raise ValueError("omega must be positive")
    return PotentialSpec(
        kind="harmonic",
        mass=mass,
        hbar=hbar,
        coefficients=(0.0, 0.0, 0.5 * mass * omega**2),
        omega=omega,
    )


def quartic_single(
    omega: float, lam: float, mass: float = 1.0, hbar: float = 1.0
) -> PotentialSpec:
    """V(x) = (1/2) M omega^2 x^2 + (lam/4) x^4 (single well anharmonic)."""
    if omega <= 0.0:
        raise ValueError("omega must be positive")
    if lam <= 0.0:
        raise ValueError("lam must be positive")
    return PotentialSpec(
        kind="quartic_single",
        mass=mass,
        hbar=hbar,
        coefficients=(0.0, 0.0, 0.5 * mass * omega**2, 0.0, 0.25 * lam),
        omega=omega,
        lam=lam,
    )


def quartic_double(
    lam: float, a: float, mass: float = 1.0, hbar: float = 1.0
) -> PotentialSpec:
    """V(x) = lam (x^2 - a^2)^2 (symmetric double well)."""
    if lam <= 0.0:
        raise ValueError("lam must be positive")
    if a <= 0.0:
        raise ValueError("a must be positive")
    return PotentialSpec(
        kind="quartic_double",
        mass=mass,
        hbar=hbar,
        coefficients=(lam * a**4, 0.0, -2.0 * lam * a**2, 0.0, lam),
        lam=lam,
        a=a,
    )


def polynomial(coefficients, mass: float = 1.0, hbar: float = 1.0) -> PotentialSpec:
    """V(x) = sum_k c_k x^k from ascending coefficients."""
    return PotentialSpec(
        kind="polynomial",
        mass=mass,
        hbar=hbar,
        coefficients=tuple(float(c) for c in coefficients),
    )


def eval_derivative(p: PotentialSpec, n: int, x: float) -> float:
    """d^n V / dx^n at x, exact closed form."""
    if n < 0 or n > p.max_order:
        raise UnsupportedDerivativeOrder(
            f"derivative order {n} not available for kind {p.kind!r}"
        )
    if n >= p.derivative_table.shape[0]:
        return 0.0
    return float(_kernels.pot_eval(p.derivative_table, n, float(x)))


def velocity(p: PotentialSpec, x: float, y: float) -> float:
    """Euclidean speed v(x, y) = sqrt((2/M) [V(x) - V(y)])."""
    gap = eval_derivative(p, 0, x) - eval_derivative(p, 0, y)
    scale = 1.0 + abs(eval_derivative(p, 0, x)) + abs(eval_derivative(p, 0, y))
    if gap < -1e-12 * scale:
        raise NegativeDiscriminant(f"V({x}) < V({y}); no real speed")
    return float(np.sqrt(max(2.0 * gap / p.mass, 0.0)))


def find_wells(p: PotentialSpec, search_interval, scan_points: int = 2048):
    """Wells of -V inside the interval: V'(x_m) = 0 with V''(x_m) < 0.

    Sign changes of V' are bracketed on a uniform scan and refined by
    bisection to 1e-12 relative accuracy.
    """
    lo, hi = float(search_interval[0]), float(search_interval[1])
    if not (np.isfinite(lo) and np.isfinite(hi)) or hi <= lo:
        raise ValueError("search interval must be finite with lo < hi")
    xs = np.linspace(lo, hi, scan_points)
    d1 = np.array([eval_derivative(p, 1, x) for x in xs])
    wells = []
    for i in range(len(xs) - 1):
        a, b = xs[i], xs[i + 1]
        fa, fb = d1[i], d1[i + 1]
        if fa == 0.0 and a != lo:
            root = a
        elif fa * fb < 0.0:
            root = _bisect_derivative(p, a, b)
        else:
            continue
        curvature = eval_derivative(p, 2, root)
        if curvature < 0.0:
            wells.append(WellInfo(x_m=root, omega_m=float(np.sqrt(-curvature / p.mass))))
    # endpoints: a stationary point exactly at the right edge
    if d1[-1] == 0.0 and eval_derivative(p, 2, hi) < 0.0:
        wells.append(WellInfo(x_m=hi, omega_m=float(np.sqrt(-eval_derivative(p, 2, hi) / p.mass))))
    return wells


def _bisect_derivative(p: PotentialSpec, a: float, b: float) -> float:
    fa = eval_derivative(p, 1, a)
    for _ in range(200):
        mid = 0.5 * (a + b)
        fm = eval_derivative(p, 1, mid)
        if fm == 0.0 or (b - a) < 1e-12 * (1.0 + abs(mid)):
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def stationary_points(p: PotentialSpec) -> np.ndarray:
    """All real roots of V', ascending (exact polynomial roots, polished)."""
    d1 = p.derivative_table[1]
    deg = int(np.max(np.nonzero(d1)[0])) if d1.any() else 0
    if deg == 0:
        return np.empty(0)
    roots = np.roots(d1[: deg + 1][::-1])
    real = np.sort(roots[np.abs(roots.imag) < 1e-9].real)
    # polish by Newton on V'
    out = []
    for r in real:
        x = float(r)
        for _ in range(6):
            f = eval_derivative(p, 1, x)
            fp = eval_derivative(p, 2, x)
            if fp == 0.0:
                break
            x -= f / fp
        out.append(x)
    # drop duplicates from multiple roots
    dedup = []
    for x in sorted(out):
        if not dedup or abs(x - dedup[-1]) > 1e-10 * (1.0 + abs(x)):
            dedup.append(x)
    return np.array(dedup)


def is_confining(p: PotentialSpec) -> bool:
    """True when V -> +inf on both sides (even degree, positive leading)."""
    coeffs = p.derivative_table[0]
    deg = int(np.max(np.nonzero(coeffs)[0])) if coeffs.any() else 0
    return deg >= 2 and deg % 2 == 0 and coeffs[deg] > 0.0
