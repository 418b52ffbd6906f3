"""Reference principal values by excision and extrapolation.

Deliberately shares nothing numerical with the Chebyshev path: the integrand
is integrated over [a, s - delta] and [s + delta, b] with adaptive
Gauss-Kronrod quadrature for a geometric sequence of deltas, and the results
are extrapolated to delta -> 0.

For f = g/(x - s) with smooth g the symmetric excision error is
2 g'(s) delta + O(delta^2), so the extrapolation error model starts at O(delta).
"""

from __future__ import annotations

import heapq
import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from chebpv.errors import ArgumentError, NonFiniteSample, ToleranceNotMet
from chebpv.pv_core import Integrand, validate

MAX_DEPTH = 50

# 15-point Kronrod extension of the 7-point Gauss-Legendre rule (QUADPACK qk15).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
# Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7)
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_ABSCISSAE = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])

_EPS = sys.float_info.epsilon


def gk15(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, float, float]:
    """One Gauss-Kronrod panel: ``(integral, error estimate, integral of |f|)``.

    The raw Kronrod/Gauss difference overestimates the Kronrod error badly,
    so it is rescaled the way QUADPACK's qk15 does.
    """
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fx = np.empty(15)
    for k, t in enumerate(_ABSCISSAE):
        x = center + half * t
        v = float(f(x))
        if not math.isfinite(v):
            raise NonFiniteSample(x, v)
        fx[k] = v
    kron = float(_KRONROD @ fx)
    gauss = float(_GAUSS @ fx)
    resabs = float(_KRONROD @ np.abs(fx))
    resasc = float(_KRONROD @ np.abs(fx - 0.5 * kron))
    err = abs(kron - gauss)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    err = max(err, 50.0 * _EPS * resabs)
    scale = abs(half)
    return half * kron, scale * err, scale * resabs


def adaptive_quad(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12) -> float:
    """Integrate ``f`` over ``[lo, hi]`` to absolute accuracy ``tol``.

    Globally adaptive: the panel with the largest error estimate is bisected
    until the summed estimate drops below ``tol``. Bisecting a panel that is
    already ``MAX_DEPTH`` halvings deep raises :class:`ToleranceNotMet`.
    """
    if tol <= 0:
        raise ArgumentError(f"tolerance must be positive, got {tol}")
    if lo > hi:
        raise ArgumentError(f"need lo <= hi, got [{lo}, {hi}]")
    if lo == hi:
        return 0.0

    value, err, _ = gk15(f, lo, hi)
    # heap entries: (-error, insertion counter, lo, hi, value, depth)
    heap = [(-err, 0, lo, hi, value, 0)]
    counter = 1
    total_err = err
    while total_err > tol:
        neg_err, _, a, b, v, depth = heapq.heappop(heap)
        if depth >= MAX_DEPTH:
            raise ToleranceNotMet(
                f"bisection depth {MAX_DEPTH} reached on [{a!r}, {b!r}] "
                f"(total error estimate {total_err:.3g}, tolerance {tol:.3g})")
        mid = 0.5 * (a + b)
        v1, e1, _ = gk15(f, a, mid)
        v2, e2, _ = gk15(f, mid, b)
        total_err += e1 + e2 + neg_err
        for sub in ((e1, a, mid, v1), (e2, mid, b, v2)):
            heapq.heappush(heap, (-sub[0], counter, sub[1], sub[2], sub[3], depth + 1))
            counter += 1
        # refresh the running sum now and then to shed accumulated rounding
        if counter % 64 == 1:
            total_err = sum(-e[0] for e in heap)
    # sum panels left to right for a deterministic result
    return math.fsum(e[4] for e in sorted(heap, key=lambda e: e[2]))


def richardson_table(values: Sequence[float], order: int) -> np.ndarray:
    """Richardson tableau for step ratio 2 and error model c1 h + c2 h^2 + ...

    Column j has the first j powers eliminated; entries above the diagonal
    are NaN.
    """
    v = np.asarray(values, dtype=float)
    if v.size < 2:
        raise ArgumentError("extrapolation needs at least 2 values")
    if order < 1:
        raise ArgumentError(f"extrapolation order must be >= 1, got {order}")
    q = min(order, v.size - 1)
    table = np.full((v.size, q + 1), np.nan)
    table[:, 0] = v
    for j in range(1, q + 1):
        factor = 2.0**j - 1.0
        for m in range(j, v.size):
            table[m, j] = table[m, j - 1] + (table[m, j - 1] - table[m - 1, j - 1]) / factor
    return table


def richardson(values: Sequence[float], order: int = 2) -> float:
    """Extrapolate a step-halving sequence to zero step; returns the last top-order entry."""
    table = richardson_table(values, order)
    return float(table[-1, -1])


@dataclass(frozen=True)
class ExcisionSpec:
    delta0: float | None = None  # None: 0.1 * min(s - a, b - s)
    levels: int = 12
    quad_tolerance: float = 1e-12
    extrapolation_order: int = 2

    def deltas(self, g: Integrand) -> np.ndarray:
        reach = min(g.s - g.a, g.b - g.s)
        d0 = 0.1 * reach if self.delta0 is None else self.delta0
        if not 0 < d0 < reach:
            raise ArgumentError(f"delta0 must lie in (0, {reach!r}), got {d0!r}")
        if self.levels < 2:
            raise ArgumentError(f"levels must be >= 2, got {self.levels}")
        if self.quad_tolerance <= 0:
            raise ArgumentError(f"quad_tolerance must be positive, got {self.quad_tolerance}")
        return d0 * 0.5 ** np.arange(self.levels)


def excised_integral(g: Integrand, delta: float, tol: float = 1e-12) -> float:
    """Integral of ``g.f`` over ``[a, b]`` minus the open ball ``(s - delta, s + delta)``."""
    left = adaptive_quad(g.f, g.a, g.s - delta, tol)
    right = adaptive_quad(g.f, g.s + delta, g.b, tol)
    return left + right


def excision_sequence(g: Integrand, spec: ExcisionSpec | None = None) -> tuple[np.ndarray, np.ndarray]:
    spec = spec or ExcisionSpec()
    validate(g)
    deltas = spec.deltas(g)
    values = np.array([excised_integral(g, float(d), spec.quad_tolerance) for d in deltas])
    return deltas, values


def pv_excision(g: Integrand, spec: ExcisionSpec | None = None) -> tuple[float, float]:
    """Principal value of ``g`` and an error estimate.

    The estimate is the difference between the last two top-order
    extrapolants.
    """
    spec = spec or ExcisionSpec()
    _, values = excision_sequence(g, spec)
    table = richardson_table(values, spec.extrapolation_order)
    last = table[-1, -1]
    prev = table[-2, -1]
    if math.isnan(prev):
        prev = table[-2, -2]
    return float(last), float(abs(last - prev))
