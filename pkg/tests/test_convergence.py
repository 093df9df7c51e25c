import math
from fractions import Fraction

import numpy as np
import pytest

from rtdiff import (
    RotationItem,
    RotationSequenceSpec,
    diffraction_drift,
    identity,
    indicator,
    midpoint_indicator_discrepancy,
    rational_engine_equality,
    rotation_diffraction_irrational,
    sqrt2_convergents,
    xi_convergence_run,
)

SQRT2M1 = math.sqrt(2) - 1


def test_sqrt2_convergents_first_eight():
    assert sqrt2_convergents(8) == [
        (1, 2), (2, 5), (5, 12), (12, 29), (29, 70), (70, 169), (169, 408), (408, 985),
    ]
    with pytest.raises(ValueError):
        sqrt2_convergents(0)


def test_convergents_alternate_around_target():
    for p, q in sqrt2_convergents(10):
        assert abs(p / q - SQRT2M1) < 1.0 / q**2  # best-approximation bound


def test_sequence_spec_validation():
    f = identity()
    with pytest.raises(ValueError):
        RotationSequenceSpec(alpha=0.5, f=f, items=(
            RotationItem(alpha=0.5, rational=(1, 2), y=0.0, f=f),
        ))  # item equals the target
    with pytest.raises(ValueError):
        RotationSequenceSpec(alpha=SQRT2M1, f=f, items=(
            RotationItem(alpha=0.5, rational=(2, 4), y=0.0, f=f),
        ))  # not reduced


def test_convergence_run_decreases():
    f = identity()
    items = tuple(
        RotationItem(alpha=p / q, rational=(p, q), y=0.0, f=f)
        for p, q in sqrt2_convergents(5)
    )
    spec = RotationSequenceSpec(alpha=SQRT2M1, f=f, items=items)
    rows = xi_convergence_run(spec, 16)
    assert [r[0] for r in rows] == [1, 2, 3, 4, 5]
    assert [r[2] for r in rows] == [2, 5, 12, 29, 70]
    dists = [r[3] for r in rows]
    assert all(d > 0 for d in dists)
    assert all(a > b for a, b in zip(dists, dists[1:]))
    assert all(r[4] == 0.0 for r in rows)  # same observable everywhere


def test_convergence_run_irrational_items():
    f = identity()
    items = (
        RotationItem(alpha=SQRT2M1 + 0.01, rational=None, y=0.0, f=f),
        RotationItem(alpha=SQRT2M1 + 0.0001, rational=None, y=0.0, f=f),
    )
    spec = RotationSequenceSpec(alpha=SQRT2M1, f=f, items=items)
    rows = xi_convergence_run(spec, 8)
    assert rows[0][2] == 0 and rows[1][2] == 0  # q column is 0 for irrational items
    assert rows[1][3] < rows[0][3]


def test_convergence_report_file(tmp_path):
    f = identity()
    items = tuple(
        RotationItem(alpha=p / q, rational=(p, q), y=0.0, f=f)
        for p, q in sqrt2_convergents(3)
    )
    spec = RotationSequenceSpec(alpha=SQRT2M1, f=f, items=items)
    out = tmp_path / "converge.csv"
    xi_convergence_run(spec, 8, report=out)
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# rtdiff v1 command=converge")
    assert lines[1] == "i,alpha_i,q_i_or_0,sup_dist,f_dist"
    assert len(lines) == 5


def test_rational_engine_equality_exact():
    for r, q, p in ((2, 5, 1), (3, 7, 2), (1, 1, 0), (12, 12, 5)):
        ok, rows = rational_engine_equality(r, q, p)
        assert ok, (r, q, p)
        assert len(rows) == q
        for m, a, b in rows:
            assert a == b
    with pytest.raises(ValueError):
        rational_engine_equality(0, 5, 1)
    with pytest.raises(ValueError):
        rational_engine_equality(2, 6, 3)  # gcd(3, 6) != 1


def test_midpoint_discrepancy_pinned():
    rep = midpoint_indicator_discrepancy(1, 3)
    # brute-force oracle values, not anybody's printed numbers: the indicator
    # of [0, 1/2) against rotation by 1/3 gives 1/2 vs 2/3 at lag 0
    assert rep["continuous_at_0"] == Fraction(1, 2)
    assert rep["discrete_at_0"] == Fraction(2, 3)
    assert rep["differ"]
    assert rep["tent_max_error"] < 1e-4


def test_midpoint_discrepancy_all_small_q():
    for q in range(3, 13):
        for p in range(1, q):
            if math.gcd(p, q) != 1 or 2 * p >= q:
                continue
            rep = midpoint_indicator_discrepancy(p, q)
            assert rep["continuous_at_0"] == Fraction(2 * p + 1, 2 * q)
            assert rep["discrete_at_0"] == Fraction(p + 1, q)
            assert rep["differ"]
    with pytest.raises(ValueError):
        midpoint_indicator_discrepancy(2, 3)  # p/q >= 1/2


def test_diffraction_drift_rows():
    rows = diffraction_drift(math.pi / 20, 103 * math.pi / 2000, identity(), 50)
    assert len(rows) == 50
    assert rows[0] == (0, 0.0, 0.0, pytest.approx(0.25))
    spec2 = rotation_diffraction_irrational(103 * math.pi / 2000, identity(), 100)
    by_mode = {a.mode: a for a in spec2.atoms}
    for mode, pos1, pos2, mass in rows:
        assert pos1 == pytest.approx((mode * math.pi / 20) % 1.0)
        assert pos2 == by_mode[mode].position
        assert mass == pytest.approx(by_mode[mode].mass, abs=1e-15)


def test_drift_distance_scales_with_mode():
    a1, a2 = math.pi / 20, 103 * math.pi / 2000
    rows = diffraction_drift(a1, a2, identity(), 50)
    for mode, pos1, pos2, _ in rows:
        d = abs(pos2 - pos1)
        d = min(d, 1.0 - d)
        assert d <= abs(mode) * abs(a2 - a1) + 1e-12
