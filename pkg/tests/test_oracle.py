import math

import numpy as np
import pytest

from analytic import LN_ONE_THIRD, RECIPROCAL_SHIFT, TWO_SHI_ONE
from chebpv.errors import ArgumentError, HypersingularUnsupported, NonFiniteSample, ToleranceNotMet
from chebpv.oracle import (
    ExcisionSpec,
    adaptive_quad,
    excised_integral,
    excision_sequence,
    gk15,
    pv_excision,
    richardson,
)
from chebpv.pv_core import Integrand


@pytest.mark.parametrize("d", range(0, 24))
def test_gk15_kronrod_exact_to_degree_22(d):
    value, err, _ = gk15(lambda x: x**d, -1.0, 1.0)
    exact = 0.0 if d % 2 else 2.0 / (d + 1)
    if d <= 22:
        assert value == pytest.approx(exact, abs=1e-14)
    if d <= 13:
        # the embedded Gauss rule is exact too, so only the rounding floor remains
        assert err <= 1e-13


@pytest.mark.parametrize("f, lo, hi, exact", [
    (lambda x: 1.0, 0.0, 1.0, 1.0),
    (lambda x: x * x, -1.0, 1.0, 2 / 3),
    (math.exp, 0.0, 1.0, math.e - 1),
    (lambda x: math.sqrt(x), 0.0, 1.0, 2 / 3),
    (lambda x: 1 / x, 1e-6, 1.0, -math.log(1e-6)),
    (math.sin, 0.0, 100.0, 1 - math.cos(100.0)),
])
def test_adaptive_quad(f, lo, hi, exact):
    assert adaptive_quad(f, lo, hi, 1e-12) == pytest.approx(exact, abs=1e-12 * max(1, abs(exact)))


def test_adaptive_quad_edge_cases():
    assert adaptive_quad(math.exp, 0.5, 0.5) == 0.0
    with pytest.raises(ArgumentError):
        adaptive_quad(math.exp, 1.0, 0.0)
    with pytest.raises(ArgumentError):
        adaptive_quad(math.exp, 0.0, 1.0, 0.0)
    with pytest.raises(NonFiniteSample):
        adaptive_quad(lambda x: math.inf, 0.0, 1.0)


def test_adaptive_quad_depth_cap():
    # a jump at an irrational point is never resolved to 1e-20
    with pytest.raises(ToleranceNotMet):
        adaptive_quad(lambda x: 1.0 if x > 1 / math.pi else 0.0, 0.0, 1.0, 1e-20)


def test_richardson_examples():
    assert richardson([3.5, 3.5, 3.5]) == 3.5
    d0, L = 0.1, 1.25
    first = [L + d0 * 2.0**-m for m in range(6)]
    assert richardson(first, 1) == pytest.approx(L, abs=1e-12)
    second = [L + 0.7 * d - 2.0 * d * d for d in (d0 * 2.0**-m for m in range(6))]
    assert richardson(second, 2) == pytest.approx(L, abs=1e-10)


def test_richardson_needs_two_values():
    with pytest.raises(ArgumentError):
        richardson([1.0])


def test_richardson_order_clamped_to_length():
    assert richardson([2.0, 1.5], 3) == pytest.approx(1.0)


def test_excision_spec_validation():
    g = Integrand(lambda x: 1 / x)
    with pytest.raises(ArgumentError):
        ExcisionSpec(delta0=1.0).deltas(g)
    with pytest.raises(ArgumentError):
        ExcisionSpec(levels=1).deltas(g)
    with pytest.raises(ArgumentError):
        ExcisionSpec(quad_tolerance=0).deltas(g)
    d = ExcisionSpec().deltas(Integrand(lambda x: 1 / x, -1, 3, 0.5))
    assert d[0] == pytest.approx(0.15) and len(d) == 12
    assert np.allclose(d[1:] / d[:-1], 0.5)


def test_pv_excision_validates():
    with pytest.raises(HypersingularUnsupported):
        pv_excision(Integrand(lambda x: 1 / x**2, p=2))


def test_pv_excision_one_over_x():
    value, _ = pv_excision(Integrand(lambda x: 1 / x))
    assert abs(value) <= 1e-12


def test_pv_excision_off_center():
    value, _ = pv_excision(Integrand(lambda x: 1 / (x - 0.5), -1, 1, 0.5))
    assert value == pytest.approx(LN_ONE_THIRD, abs=1e-9)


def test_pv_excision_exp_over_x():
    value, err = pv_excision(Integrand(lambda x: math.exp(x) / x))
    assert value == pytest.approx(TWO_SHI_ONE, abs=1e-9)
    assert err < 1e-9


@pytest.mark.parametrize("f", [lambda x: 1 / x, lambda x: math.cos(x) / x, lambda x: x - 2 / x + math.sin(x) / (x * x)])
def test_symmetric_exactness(f):
    _, values = excision_sequence(Integrand(f))
    assert np.max(np.abs(values)) <= 1e-12


@pytest.mark.parametrize("g, limit", [
    (Integrand(lambda x: math.exp(x) / x), TWO_SHI_ONE),
    (Integrand(lambda x: 1 / (x * (2 + x))), RECIPROCAL_SHIFT),
    (Integrand(lambda x: (1 + x) / x), 0.0 + 2.0),
])
def test_monotone_refinement(g, limit):
    _, values = excision_sequence(g)
    errs = np.abs(values - limit)
    assert np.all(errs[2:] < errs[1:-1])


def test_excised_integral_matches_antiderivative():
    # int over [-1, -d] U [d, 1] of e^x / x for d = 0.1 via Ei differences is awkward;
    # use 1/(x - 0.5): ln(d / 1.5) + ln(0.5 / d) = ln(1/3) for every d.
    g = Integrand(lambda x: 1 / (x - 0.5), -1, 1, 0.5)
    for d in (0.3, 0.01, 1e-5):
        assert excised_integral(g, d) == pytest.approx(LN_ONE_THIRD, abs=1e-11)
