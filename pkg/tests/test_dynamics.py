import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rtdiff import (
    LEBESGUE,
    AtomicOrbit,
    Branch,
    LinearMod,
    PiecewiseMonotone,
    RigidRotation,
    TransferStationary,
    frac,
    iterate,
    orbit,
    preimage_intervals,
    random_orbit,
    rotation_rational,
    sample,
)


def test_frac_basics():
    assert frac(0.25) == 0.25
    assert frac(1.0) == 0.0
    assert frac(-0.25) == 0.75
    assert frac(Fraction(7, 3)) == Fraction(1, 3)
    assert isinstance(frac(Fraction(7, 3)), Fraction)


def test_rotation_rational_reduces_and_validates():
    m = rotation_rational(2, 4)
    assert m.rational == (1, 2)
    with pytest.raises(ValueError):
        rotation_rational(1, 0)


def test_rational_rotation_iterate_is_exact():
    # rotations accumulate n*alpha in exact rationals and round once at the end
    m = rotation_rational(1, 3)
    pts = [iterate(m, 0, n) for n in range(7)]
    assert pts[:3] == [0.0, float(Fraction(1, 3)), float(Fraction(2, 3))]
    assert pts[3] == 0.0  # period 3 exactly, no drift
    assert pts[3:6] == pts[:3]
    assert iterate(m, 0, -1) == float(Fraction(2, 3))
    assert iterate(m, 0, 3 * 10**9) == 0.0  # huge n stays exact


def test_invertible_orbit_two_sided_indexing():
    m = RigidRotation(alpha=math.sqrt(2) - 1)
    y = 0.3
    n = 50
    pts = orbit(m, y, 2 * n + 1, start=-n)
    assert len(pts) == 2 * n + 1
    for z in (-n, -3, 0, 5, n):
        assert pts[z + n] == pytest.approx(frac(y + z * m.alpha), abs=5e-13)


def test_rotation_orbit_group_identity_far_out():
    # split-arithmetic points must respect T^(m+n) = T^m T^n out to large n
    alpha = math.sqrt(2) - 1
    m = RigidRotation(alpha=alpha)
    pts = orbit(m, 0.125, 10**6 + 1)
    a, b = pts[10**6], frac(frac(0.125 + 500000 * alpha) + 500000 * alpha)
    d = abs(a - b)
    assert min(d, 1 - d) < 1e-9


def test_linear_mod_pinned_orbit():
    pts = orbit(LinearMod(2), 0.25, 4)
    assert list(pts) == [0.25, 0.5, 0.0, 0.0]


def test_linear_mod_fraction_orbit_exact():
    m = LinearMod(3)
    y = Fraction(1, 10)
    assert iterate(m, y, 4) == frac(Fraction(81, 10))


def test_random_orbit_avoids_binary_collapse():
    # a float x2 orbit hits the fixed point 0 within ~53 steps; the digit
    # stream realization must not
    rng = np.random.default_rng(5)
    pts = random_orbit(LinearMod(2), 5000, rng)
    assert (pts[100:] == 0.0).sum() == 0
    assert abs(pts.mean() - 0.5) < 0.02
    assert pts.min() >= 0.0 and pts.max() < 1.0


def test_random_orbit_rejects_negative_start():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        random_orbit(LinearMod(2), 10, rng, start=-2)


def test_preimage_intervals_linear():
    ivs = preimage_intervals(LinearMod(2), 0.2, 0.3)
    assert ivs == [(0.1, 0.15), (0.6, 0.65)]
    total = sum(b - a for a, b in preimage_intervals(LinearMod(2), 0.2, 0.3, depth=3))
    assert total == pytest.approx(0.1, abs=1e-15)


def test_piecewise_branches_match_linear_mod():
    pm = PiecewiseMonotone(
        (
            Branch(0.0, 0.5, lambda x: 2 * x, lambda x: 2.0, (2.0, 0.0)),
            Branch(0.5, 1.0, lambda x: 2 * x - 1, lambda x: 2.0, (2.0, -1.0)),
        )
    )
    for x in (0.1, 0.49, 0.5, 0.77):
        assert iterate(pm, x, 1) == pytest.approx(frac(2 * x), abs=1e-15)
    ivs = preimage_intervals(pm, 0.2, 0.3)
    assert [(round(a, 12), round(b, 12)) for a, b in ivs] == [(0.1, 0.15), (0.6, 0.65)]


def test_atomic_orbit_atoms():
    atoms = AtomicOrbit(4, 0.1).atoms()
    assert atoms == pytest.approx([0.1, 0.35, 0.6, 0.85])
    exact = AtomicOrbit(3, Fraction(1, 6)).atoms()
    assert exact == [Fraction(1, 6), Fraction(1, 2), Fraction(5, 6)]


def test_sample_determinism_and_supports():
    a = sample(LEBESGUE, 100, 7)
    b = sample(LEBESGUE, 100, 7)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, sample(LEBESGUE, 100, 8))

    orb = sample(AtomicOrbit(5, 0.2), 200, 3)
    allowed = AtomicOrbit(5, 0.2).atoms()
    assert all(min(abs(x - p) for p in allowed) < 1e-12 for x in orb)

    ts = TransferStationary(np.ones(64))
    xs = sample(ts, 500, 11)
    assert xs.min() >= 0.0 and xs.max() < 1.0


@given(st.floats(min_value=-100, max_value=100, allow_nan=False))
def test_frac_range(x):
    v = frac(x)
    assert 0.0 <= v < 1.0
