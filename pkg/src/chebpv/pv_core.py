"""Principal-value integration on an arbitrary interval.

The integrand is split into a window [s - r, s + r] centred on the
singularity, with r = min(s - a, b - s), plus at most one regular remainder.
Each piece is mapped affinely onto [-1, 1] and integrated by projecting onto
the U_j basis and summing the closed-form moments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from chebpv.errors import (
    ArgumentError,
    EndpointSingularity,
    HypersingularUnsupported,
    InvalidInterval,
)
from chebpv.expansion import ChebyshevSeries, default_node_count, integrate_series, project


@dataclass(frozen=True)
class Integrand:
    """``f`` on ``[a, b]`` with a singularity of declared order ``p`` at ``s``.

    ``p`` is metadata supplied by the caller; it is never inferred from ``f``.
    """

    f: Callable[[float], float]
    a: float = -1.0
    b: float = 1.0
    s: float = 0.0
    p: float = 1.0


@dataclass(frozen=True)
class PVConfig:
    degree: int = 64
    node_count: int | None = None  # None: 2*degree + 16
    tail_tolerance: float = 1e-8

    def __post_init__(self):
        if self.degree < 0:
            raise ArgumentError(f"degree must be non-negative, got {self.degree}")
        if self.node_count is not None:
            if self.node_count < 1 or self.node_count % 2:
                raise ArgumentError(f"node count must be even and positive, got {self.node_count}")
            if self.node_count < self.degree + 1:
                raise ArgumentError(
                    f"node count {self.node_count} is below degree + 1 = {self.degree + 1}")

    @property
    def nodes(self) -> int:
        if self.node_count is None:
            return default_node_count(self.degree)
        return self.node_count


@dataclass(frozen=True)
class Piece:
    """One subinterval, mapped onto [-1, 1].

    ``func`` already carries the Jacobian (the half-width of ``interval``).
    """

    interval: tuple[float, float]
    func: Callable[[float], float]
    singular: bool


@dataclass(frozen=True)
class PieceResult:
    interval: tuple[float, float]
    singular: bool
    value: float
    series: ChebyshevSeries

    @property
    def tail_ratio(self) -> float:
        return self.series.tail_ratio


@dataclass(frozen=True)
class PVResult:
    value: float
    pieces: list[PieceResult] = field(default_factory=list)
    converged: bool = True

    @property
    def tail_ratios(self) -> list[float]:
        return [p.tail_ratio for p in self.pieces]


def validate(g: Integrand) -> None:
    """Raise a :class:`~chebpv.errors.ValidationError` subclass if ``g`` is unusable."""
    if not g.a < g.b:
        raise InvalidInterval(f"need a < b, got a={g.a!r}, b={g.b!r}")
    if not g.a < g.s < g.b:
        raise EndpointSingularity(
            f"singularity s={g.s!r} must lie strictly inside ({g.a!r}, {g.b!r})")
    if not g.p > 0:
        raise ArgumentError(f"order p must be positive, got {g.p!r}")
    if g.p > 1:
        raise HypersingularUnsupported(
            f"order p={g.p!r} > 1 is hypersingular; finite-part integrals are not supported")


def _affine(f, center, half_width):
    def mapped(t):
        return half_width * f(center + half_width * t)
    return mapped


def normalize(g: Integrand) -> list[Piece]:
    """Split ``g`` into a symmetric singular window and an optional regular remainder.

    The singular piece always comes first and maps ``s`` onto ``t = 0``
    exactly (``x = s + r t``).
    """
    validate(g)
    a, b, s = g.a, g.b, g.s
    r = min(s - a, b - s)
    pieces = [Piece((s - r, s + r), _affine(g.f, s, r), True)]
    if s - a > r:
        lo, hi = a, s - r
    elif b - s > r:
        lo, hi = s + r, b
    else:
        return pieces
    if hi > lo:
        pieces.append(Piece((lo, hi), _affine(g.f, 0.5 * (lo + hi), 0.5 * (hi - lo)), False))
    return pieces


def pv_integrate(g: Integrand, cfg: PVConfig | None = None) -> PVResult:
    cfg = cfg or PVConfig()
    results = []
    for piece in normalize(g):
        series = project(piece.func, cfg.degree, cfg.nodes)
        results.append(PieceResult(piece.interval, piece.singular, integrate_series(series), series))
    value = 0.0
    for r in results:
        value += r.value
    converged = all(r.tail_ratio <= cfg.tail_tolerance for r in results)
    return PVResult(value, results, converged)
