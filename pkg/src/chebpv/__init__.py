"""Cauchy principal values of 1-d singular integrals via Chebyshev U_j expansions."""

from chebpv.chebyshev import QuadratureRule, gauss_u_rule, u_eval, u_eval_all, u_moment
from chebpv.errors import (
    ArgumentError,
    DomainError,
    EndpointSingularity,
    HypersingularUnsupported,
    InvalidInterval,
    NonFiniteSample,
    PVError,
    ToleranceNotMet,
    ValidationError,
)
from chebpv.expansion import ChebyshevSeries, integrate_series, project, series_eval, tail_decay
from chebpv.oracle import ExcisionSpec, adaptive_quad, pv_excision, richardson
from chebpv.pv_core import Integrand, PVConfig, PVResult, normalize, pv_integrate, validate

__all__ = [
    "ArgumentError", "ChebyshevSeries", "DomainError", "EndpointSingularity", "ExcisionSpec",
    "HypersingularUnsupported", "Integrand", "InvalidInterval", "NonFiniteSample", "PVConfig",
    "PVError", "PVResult", "QuadratureRule", "ToleranceNotMet", "ValidationError",
    "adaptive_quad", "gauss_u_rule", "integrate_series", "normalize", "project", "pv_excision",
    "pv_integrate", "richardson", "series_eval", "tail_decay", "u_eval", "u_eval_all",
    "u_moment", "validate",
]
