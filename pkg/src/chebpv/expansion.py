"""Projection of an integrand onto the U_j basis and integration of the series.

The coefficient of U_i is the weighted inner product

    a_i = (2/pi) * int_{-1}^{1} f(x) U_i(x) sqrt(1 - x^2) dx

discretized with the M-point Gauss rule for that weight. With x_k = cos(theta_k)
and U_i(x_k) = sin((i+1) theta_k) / sin(theta_k) this becomes

    a_i = 2/(M+1) * sum_k sin(theta_k) sin((i+1) theta_k) f(x_k).

M is required to be even so that x = 0 is never a node: integrands handed to
``project`` may be singular exactly there, and the symmetric node pairs
(x_k, -x_k) realize the principal-value cancellation discretely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from chebpv.chebyshev import _check_x, gauss_u_rule, u_moments
from chebpv.errors import ArgumentError, NonFiniteSample


def default_node_count(n: int) -> int:
    m = 2 * n + 16
    return m + (m % 2)


def tail_window(n: int) -> int:
    return max(3, n // 8)


def _tail_ratio(coefficients: np.ndarray) -> float:
    mags = np.abs(coefficients)
    peak = mags.max() if mags.size else 0.0
    if peak == 0.0:
        return 0.0
    w = min(tail_window(len(coefficients) - 1), len(coefficients))
    return float(mags[-w:].max() / peak)


@dataclass(frozen=True)
class ChebyshevSeries:
    """Truncated expansion ``sum_{i=0}^{n} a_i U_i``.

    ``tail_ratio`` is the largest ``|a_i|`` over the last ``max(3, n // 8)``
    coefficients divided by the largest ``|a_i|`` overall.
    """

    degree: int
    coefficients: np.ndarray
    node_count: int | None
    tail_ratio: float

    @classmethod
    def from_coefficients(cls, coefficients, node_count=None) -> "ChebyshevSeries":
        a = np.array(coefficients, dtype=float)
        if a.ndim != 1 or a.size == 0:
            raise ArgumentError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(a)):
            raise ArgumentError("coefficients must be finite")
        a.flags.writeable = False
        return cls(a.size - 1, a, node_count, _tail_ratio(a))

    @property
    def even_tail_ratio(self) -> float:
        """Tail ratio restricted to even-index coefficients.

        Only even degrees have non-zero moments, so this tracks truncation of
        the integral itself; for g(x)/x integrands the odd coefficients of the
        1/x part never decay and dominate ``tail_ratio``.
        """
        return _tail_ratio(self.coefficients[::2])

    def __call__(self, x: float) -> float:
        return series_eval(self, x)


SeriesLike = Union[ChebyshevSeries, Sequence[float], np.ndarray]


def _as_series(s: SeriesLike) -> ChebyshevSeries:
    if isinstance(s, ChebyshevSeries):
        return s
    return ChebyshevSeries.from_coefficients(s)


def sample(f: Callable[[float], float], nodes: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` once per node, in node order, rejecting non-finite output."""
    values = np.empty(len(nodes))
    for k, x in enumerate(nodes):
        fx = float(f(float(x)))
        if not math.isfinite(fx):
            raise NonFiniteSample(float(x), fx)
        values[k] = fx
    return values


def project(f: Callable[[float], float], n: int, m: int | None = None) -> ChebyshevSeries:
    """Project ``f`` onto U_0..U_n using ``m`` Gauss nodes (``m`` even, ``m >= n+1``)."""
    if n < 0:
        raise ArgumentError(f"degree must be non-negative, got {n}")
    if m is None:
        m = default_node_count(n)
    if m < 1 or m % 2:
        raise ArgumentError(f"node count must be even and positive, got {m}")
    if m < n + 1:
        raise ArgumentError(f"node count {m} is below degree + 1 = {n + 1}")

    rule = gauss_u_rule(m)
    fx = sample(f, rule.abscissae)

    # Fold node k with its mirror M+1-k: sin((i+1)(pi - t)) = (-1)^i sin((i+1) t).
    half = m // 2
    theta = rule.angles[:half]
    plus = fx[:half]
    minus = fx[::-1][:half]
    even_part = plus + minus
    odd_part = plus - minus
    i = np.arange(n + 1)
    basis = np.sin(np.outer(i + 1, theta)) * rule.sines[:half]
    a = np.where(i % 2 == 0, basis @ even_part, basis @ odd_part)
    a *= 2.0 / (m + 1)
    return ChebyshevSeries.from_coefficients(a, node_count=m)


def series_eval(s: SeriesLike, x: float) -> float:
    """Evaluate the series at ``x`` with Clenshaw's backward recurrence."""
    a = _as_series(s).coefficients
    x = _check_x(x)
    two_x = 2.0 * x
    b1 = b2 = 0.0
    for coef in a[::-1]:
        b1, b2 = coef + two_x * b1 - b2, b1
    # U_{-1} = 0, so the sum is just b_0
    return float(b1)


def integrate_series(s: SeriesLike) -> float:
    """``sum_i a_i * int_{-1}^{1} U_i``; odd-degree terms drop out."""
    a = _as_series(s).coefficients
    return float(np.dot(a[::2], u_moments(len(a) - 1)[::2]))


def tail_decay(s: SeriesLike) -> float:
    return _as_series(s).tail_ratio
