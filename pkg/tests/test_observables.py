import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rtdiff import (
    Polynomial,
    Step,
    Tabulated,
    circle_autocorrelation,
    cyclic_samples,
    fourier_coefficient,
    identity,
    indicator,
    integrate,
    integrate_squared,
    is_identity,
    sup_distance,
)
from rtdiff.dynamics import AtomicOrbit


def test_step_validation():
    with pytest.raises(ValueError):
        Step([0.0, 0.5], [1.0, 2.0])  # length mismatch
    with pytest.raises(ValueError):
        Step([0.1, 1.0], [1.0])  # must start at 0
    with pytest.raises(ValueError):
        Step([0.0, 0.5, 0.5, 1.0], [1.0, 2.0, 3.0])  # not increasing
    with pytest.raises(ValueError):
        Step([0.0, 1.0], [-0.5])  # negative value


def test_step_right_continuity_and_vectorization():
    f = Step([0.0, 0.25, 0.75, 1.0], [1.0, 2.0, 0.5])
    assert f.value(0.25) == 2.0  # right limit at the break
    assert f.value(0.75) == 0.5
    xs = np.array([0.0, 0.2, 0.25, 0.5, 0.75, 0.99])
    assert np.array_equal(f.np_values(xs), [f.value(x) for x in xs])


def test_step_integral_exact_fractions():
    f = Step([0, Fraction(1, 3), 1], [Fraction(3), Fraction(1, 2)])
    assert f.integral(0, 1) == Fraction(3, 3) + Fraction(1, 2) * Fraction(2, 3)
    assert integrate(f) == f.integral(0, 1)
    assert f.squared().value(Fraction(1, 2)) == Fraction(1, 4)


def test_indicator_and_constant():
    g = indicator(0.2, 0.7)
    assert g.value(0.2) == 1 and g.value(0.7) == 0
    assert integrate(g) == pytest.approx(0.5)
    assert integrate_squared(g) == integrate(g)  # 0/1-valued


def test_identity_polynomial():
    f = identity()
    assert is_identity(f)
    assert not is_identity(indicator(0.0, 0.5))
    assert f.value(0.3) == pytest.approx(0.3)
    assert integrate(f) == pytest.approx(0.5)
    assert integrate_squared(f) == pytest.approx(1.0 / 3.0)


def test_polynomial_value_and_negativity_check(quad):
    p = Polynomial([0.25, -0.5, 1.0])  # (x - 0.25)^2 + 3/16 >= 0 on [0,1]
    xs = np.linspace(0.0, 1.0, 11)
    assert np.allclose(p.np_values(xs), 0.25 - 0.5 * xs + xs**2)
    assert integrate(p) == pytest.approx(quad(p.np_values), abs=1e-9)
    with pytest.raises(ValueError):
        Polynomial([-0.6, 1.0])  # dips below zero on [0, 0.6)


def test_tabulated(quad):
    samples = [0.2, 0.9, 0.4, 0.4]
    f = Tabulated(samples)
    assert f.value(0.1) == 0.2 and f.value(0.6) == 0.4
    assert integrate(f) == pytest.approx(np.mean(samples))


def test_circle_autocorrelation_identity_closed_form():
    f = identity()
    # A(t) = 1/3 - t/2 + t^2/2 for the sawtooth
    for t in (0.0, 0.1, math.pi / 20, 0.5, 0.93):
        assert circle_autocorrelation(f, t) == pytest.approx(
            1.0 / 3.0 - t / 2.0 + t * t / 2.0, abs=1e-14
        )
    assert circle_autocorrelation(f, math.pi / 20) == pytest.approx(
        0.2671305224949502, abs=1e-15
    )


def test_circle_autocorrelation_indicator_tent():
    f = indicator(0.0, 0.3)
    for t in (0.0, 0.1, 0.25, 0.3, 0.5, 0.85):
        d = min(t, 1.0 - t)
        assert circle_autocorrelation(f, t) == pytest.approx(max(0.3 - d, 0.0), abs=1e-14)


def test_circle_autocorrelation_exact_fractions():
    f = indicator(Fraction(0), Fraction(2, 5))
    v = circle_autocorrelation(f, Fraction(1, 5))
    assert v == Fraction(1, 5)
    assert isinstance(v, Fraction)


def test_circle_autocorrelation_even(quad):
    f = Step([0.0, 0.2, 0.55, 1.0], [0.3, 1.7, 0.9])
    for t in (0.13, 0.31, 0.48):
        assert circle_autocorrelation(f, t) == pytest.approx(
            circle_autocorrelation(f, 1.0 - t), abs=1e-14
        )
        # quadrature oracle
        shifted = lambda xs: f.np_values(np.mod(xs - t, 1.0)) * f.np_values(xs)
        assert circle_autocorrelation(f, t) == pytest.approx(quad(shifted), abs=2e-4)


def test_circle_autocorrelation_polynomial_vs_quadrature(quad):
    p = Polynomial([0.1, 0.2, 0.3])
    for t in (0.0, 0.2, 0.77):
        shifted = lambda xs: p.np_values(np.mod(xs - t, 1.0)) * p.np_values(xs)
        # the wrapped product jumps at x = t, so the midpoint error is O(h)
        assert circle_autocorrelation(p, t) == pytest.approx(quad(shifted), abs=2e-5)


def test_fourier_coefficients_identity():
    f = identity()
    assert fourier_coefficient(f, 0) == pytest.approx(0.5)
    for m in (1, 2, -3, 17):
        c = fourier_coefficient(f, m)
        assert abs(c) ** 2 == pytest.approx(1.0 / (4 * math.pi**2 * m * m), rel=1e-12)
    # mirror pair lands on identical mass bits
    assert abs(fourier_coefficient(f, 5)) ** 2 == abs(fourier_coefficient(f, -5)) ** 2


def test_fourier_coefficient_vs_quadrature(quad):
    f = Step([0.0, 0.35, 0.8, 1.0], [1.0, 0.2, 0.6])
    p = Polynomial([0.0, 0.0, 1.0])
    for g, tol in ((f, 2e-4), (p, 1e-6)):  # midpoint rule is first order at jumps
        for m in (1, 4):
            re = quad(lambda xs: g.np_values(xs) * np.cos(-2 * math.pi * m * xs))
            im = quad(lambda xs: g.np_values(xs) * np.sin(-2 * math.pi * m * xs))
            assert fourier_coefficient(g, m) == pytest.approx(complex(re, im), abs=tol)


def test_cyclic_samples_exact():
    # orbit positions are exact Fractions for int/Fraction starting points;
    # identity evaluates through polyval, so its samples come back as floats
    f = identity()
    s = cyclic_samples(f, 4, Fraction(1, 8))
    assert s == [Fraction(1, 8), Fraction(3, 8), Fraction(5, 8), Fraction(7, 8)]
    s2 = cyclic_samples(f, 5, 0, p=2)  # p = 2 visits the orbit in stride order
    assert s2 == [0.0, 0.4, 0.8, 0.2, 0.6]
    # a Step with exact values keeps the whole pipeline in Fractions
    g = indicator(Fraction(0), Fraction(1, 2))
    assert cyclic_samples(g, 5, 0, p=2) == [1, 1, 0, 1, 0]


def test_sup_distance():
    f = Step([0.0, 1.0], [1.0])
    g = Step([0.0, 0.5, 1.0], [1.0, 1.25])
    assert sup_distance(f, g) == pytest.approx(0.25)
    assert sup_distance(f, f) == 0.0


@given(
    st.lists(st.floats(min_value=0.0, max_value=3.0), min_size=1, max_size=8),
    st.floats(min_value=0.0, max_value=1.0, exclude_max=True),
)
def test_autocorrelation_cauchy_schwarz(samples, t):
    f = Tabulated(samples)
    a0 = circle_autocorrelation(f, 0.0)
    at = circle_autocorrelation(f, t)
    assert at <= a0 + 1e-12
    assert at >= -1e-12  # non-negative f makes A non-negative


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=0, max_value=29))
def test_cyclic_samples_partition(q, shift):
    # the q cyclic samples of the orbit starting anywhere tile the orbit set
    y = Fraction(shift % q, q * 2 + 1)
    s = cyclic_samples(identity(), q, y)
    assert len(set(s)) == q
    assert all(0 <= v < 1 for v in s)
