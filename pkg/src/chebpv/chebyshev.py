"""Chebyshev polynomials of the second kind and the matching Gauss rule.

U_j is evaluated with the three-term recurrence

    U_0 = 1,  U_1 = 2x,  U_{j+1} = 2x U_j - U_{j-1}

rather than sin((j+1) acos x) / sin(acos x), which is 0/0 at x = +-1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from chebpv.errors import ArgumentError, DomainError


def _check_x(x: float) -> float:
    x = float(x)
    if not abs(x) <= 1.0:
        raise DomainError(f"x={x!r} is outside [-1, 1]")
    return x


def u_eval(j: int, x: float) -> float:
    """Return U_j(x) for ``|x| <= 1``.

    At ``x = +-1`` the recurrence produces the limit ``(j+1) * sign(x)**j``
    exactly, since every intermediate value is a small integer.
    """
    if j < 0:
        raise ArgumentError(f"degree must be non-negative, got {j}")
    x = _check_x(x)
    prev, cur = 0.0, 1.0
    two_x = 2.0 * x
    for _ in range(j):
        prev, cur = cur, two_x * cur - prev
    return cur


def u_eval_all(n: int, x: float) -> np.ndarray:
    """Return ``[U_0(x), ..., U_n(x)]`` from one forward recurrence."""
    if n < 0:
        raise ArgumentError(f"degree must be non-negative, got {n}")
    x = _check_x(x)
    out = np.empty(n + 1)
    prev, cur = 0.0, 1.0
    two_x = 2.0 * x
    out[0] = cur
    for j in range(1, n + 1):
        prev, cur = cur, two_x * cur - prev
        out[j] = cur
    return out


def u_moment(i: int) -> float:
    """Exact integral of U_i over [-1, 1]: ``2/(i+1)`` for even i, else 0."""
    if i < 0:
        raise ArgumentError(f"degree must be non-negative, got {i}")
    if i % 2:
        return 0.0
    return 2.0 / (i + 1)


def u_moments(n: int) -> np.ndarray:
    return np.array([u_moment(i) for i in range(n + 1)])


@dataclass(frozen=True)
class QuadratureRule:
    """M-point Gauss rule for the weight sqrt(1 - x^2) on [-1, 1].

    Nodes are ``x_k = cos(theta_k)`` with ``theta_k = k pi / (M+1)``,
    ``k = 1..M``; weights are ``pi/(M+1) * sin(theta_k)**2``. The second
    half of the node set is stored as the exact negation of the first, so
    odd integrands cancel without rounding residue.
    """

    node_count: int
    angles: np.ndarray
    abscissae: np.ndarray
    weights: np.ndarray
    sines: np.ndarray

    def integrate(self, values) -> float:
        """Weighted sum ``sum_k w_k * values_k``."""
        return float(np.dot(self.weights, values))


def gauss_u_rule(m: int) -> QuadratureRule:
    if m < 1:
        raise ArgumentError(f"node count must be >= 1, got {m}")
    k = np.arange(1, m + 1)
    angles = k * np.pi / (m + 1)
    x = np.cos(angles)
    sines = np.sin(angles)
    # mirror the first half so that x_k == -x_{M+1-k} bit for bit
    half = m // 2
    x[m - half:] = -x[:half][::-1]
    sines[m - half:] = sines[:half][::-1]
    if m % 2:
        x[half] = 0.0
        sines[half] = 1.0
    weights = (np.pi / (m + 1)) * sines**2
    for arr in (angles, x, weights, sines):
        arr.flags.writeable = False
    return QuadratureRule(m, angles, x, weights, sines)
