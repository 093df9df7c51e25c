"""Rotation-number convergence experiments and the exact indicator cross-checks.

The target autocorrelation is always the Lebesgue one, whatever the items
declare: the point of the experiment is that orbit measures along a sequence
alpha_i -> alpha reproduce the Lebesgue autocorrelation in the limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .autocorrelation import (
    rational_xi_cycle,
    xi_distance,
    xi_rotation_irrational,
    xi_rotation_rational,
)
from .diffraction import rotation_diffraction_irrational, top_atoms
from .dynamics import frac
from .observables import circle_autocorrelation, indicator, integrate_squared, sup_distance

__all__ = [
    "RotationItem",
    "RotationSequenceSpec",
    "xi_convergence_run",
    "rational_engine_equality",
    "midpoint_indicator_discrepancy",
    "diffraction_drift",
    "sqrt2_convergents",
]


@dataclass(frozen=True)
class RotationItem:
    """One sequence member: alpha_i with declared rationality, start point, observable."""

    alpha: float
    rational: tuple | None  # (p_i, q_i) reduced, or None for declared-irrational
    y: float
    f: object


@dataclass(frozen=True)
class RotationSequenceSpec:
    """Target rotation number + observable, and the approximating items."""

    alpha: float
    f: object
    items: tuple
    rational: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        for n, it in enumerate(self.items):
            if it.rational is not None:
                p, q = it.rational
                if q < 1 or math.gcd(p, q) != 1:
                    raise ValueError(f"item {n}: rational declaration needs gcd(p, q) = 1")
            if float(it.alpha) == float(self.alpha):
                raise ValueError(f"item {n}: alpha_i must differ from the target alpha")


def xi_convergence_run(spec, half_window, report=None):
    """Rows (i, alpha_i, q_i_or_0, sup_dist, f_dist), i starting at 1.

    sup_dist compares each item's engine (rational orbit engine at w = y_i, or
    the irrational circle engine) against the target Lebesgue autocorrelation
    over |z| <= Z; f_dist is the grid sup distance of f_i from the target f.
    ``report`` may name a CSV path to also write the table.
    """
    if half_window < 1:
        raise ValueError("half_window must be >= 1")
    target = xi_rotation_irrational(spec.alpha, spec.f, half_window)
    rows = []
    for n, it in enumerate(spec.items, start=1):
        if it.rational is not None:
            p, q = it.rational
            xi_i = xi_rotation_rational(p, q, it.y, it.f, half_window)
        else:
            q = 0
            xi_i = xi_rotation_irrational(it.alpha, it.f, half_window)
        d = xi_distance(xi_i, target, half_window)
        fd = sup_distance(it.f, spec.f)
        rows.append((n, float(it.alpha), q, d, fd))
    if report is not None:
        from ._report import write_table

        write_table(
            report,
            "# rtdiff v1 command=converge params=library",
            ("i", "alpha_i", "q_i_or_0", "sup_dist", "f_dist"),
            rows,
        )
    return rows


def sqrt2_convergents(count):
    """The first ``count`` continued-fraction convergents p/q of sqrt(2) - 1.

    sqrt(2) - 1 = [0; 2, 2, 2, ...]; the trivial 0th convergent 0/1 is skipped,
    so the list starts at 1/2, 2/5, 5/12, ...
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    p0, q0 = 1, 0  # p_{-1}/q_{-1} scaled so the recurrence below starts at 0/1
    p1, q1 = 0, 1
    for _ in range(count):
        p0, q0, p1, q1 = p1, q1, 2 * p1 + p0, 2 * q1 + q0
        out.append((p1, q1))
    return out


def rational_engine_equality(r, q, p):
    """For f the indicator of [0, r/q) and the rotation by p/q: does the exact
    orbit-cycle autocorrelation at w = 0 equal the circle autocorrelation
    sampled at t = {m p/q}, for every m? Returns (all_equal, witness rows
    (m, orbit_value, circle_value)) in exact rational arithmetic."""
    if not 1 <= r <= q:
        raise ValueError("need 1 <= r <= q")
    if math.gcd(p, q) != 1:
        raise ValueError("need gcd(p, q) = 1")
    f = indicator(Fraction(0), Fraction(r, q))
    cycle = rational_xi_cycle(p, q, 0, f)
    rows = []
    all_equal = True
    for m in range(q):
        circle = circle_autocorrelation(f, frac(Fraction(m * p, q)))
        all_equal = all_equal and (cycle[m] == circle)
        rows.append((m, cycle[m], circle))
    return all_equal, rows


def midpoint_indicator_discrepancy(p, q):
    """Indicator of [0, (2p+1)/(2q)) against the rotation by p/q, w = 0.

    The breakpoint falls halfway between orbit points, so the circle (Lebesgue)
    autocorrelation and the orbit-cycle autocorrelation disagree at lag 0:
    (2p+1)/(2q) vs (p+1)/q, exactly. The z != 0 values follow the shifted
    overlap formula max(L - d, 0); that closed form is cross-checked here
    against a midpoint-rule quadrature oracle. Returns a report dict."""
    if math.gcd(p, q) != 1:
        raise ValueError("need gcd(p, q) = 1")
    if not 0 < Fraction(p, q) < Fraction(1, 2):
        raise ValueError("need 0 < p/q < 1/2")
    width = Fraction(2 * p + 1, 2 * q)
    f = indicator(Fraction(0), width)
    continuous = integrate_squared(f)  # exact: equals the width
    cycle = rational_xi_cycle(p, q, 0, f)
    discrete = cycle[0]
    panels = 1 << 16
    xs = (np.arange(panels) + 0.5) / panels
    fx = f.np_values(xs)
    tent_max_error = 0.0
    for z in range(1, q):
        t = frac(Fraction(z * p, q))
        d = min(t, 1 - t)
        tent = max(width - d, 0)
        shifted = xs - float(t)
        shifted -= np.floor(shifted)
        quad = float(np.mean(f.np_values(shifted) * fx))
        tent_max_error = max(tent_max_error, abs(float(tent) - quad))
    return {
        "continuous_at_0": continuous,
        "discrete_at_0": discrete,
        "differ": continuous != discrete,
        "tent_max_error": tent_max_error,
    }


def diffraction_drift(alpha1, alpha2, f, count):
    """Top-``count`` atoms of the two pure-point spectra matched by mode.

    Masses are alpha-independent (they depend on f alone), so each row is
    (mode m, position under alpha1, position under alpha2, mass).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    cutoff = 2 * count
    spec1 = rotation_diffraction_irrational(alpha1, f, cutoff)
    spec2 = rotation_diffraction_irrational(alpha2, f, cutoff)
    lead, _ = top_atoms(spec1, count)
    by_mode = {a.mode: a for a in spec2.atoms}
    rows = []
    for a in lead:
        b = by_mode[a.mode]
        rows.append((a.mode, a.position, b.position, a.mass))
    return rows
