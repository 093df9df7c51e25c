"""Weight observables f on [0, 1): evaluation, integrals, circle autocorrelation.

The Step geometry (evaluation, interval integrals, arc overlaps, cyclic samples)
is duck-typed so fractions.Fraction inputs yield exact rational results; the
float engines go through the same code paths.
"""

from __future__ import annotations

import bisect
import cmath
import math
from fractions import Fraction

import numpy as np
from numpy.polynomial import polynomial as npoly

from .dynamics import LEBESGUE, AtomicOrbit, Lebesgue, TransferStationary, frac

__all__ = [
    "Step",
    "Polynomial",
    "Tabulated",
    "identity",
    "indicator",
    "is_identity",
    "integrate",
    "integrate_squared",
    "circle_autocorrelation",
    "fourier_coefficient",
    "cyclic_samples",
    "sup_distance",
]

_QUAD_PANELS = 1 << 16


class Step:
    """Right-continuous step function: values[i] on [breaks[i], breaks[i+1]).

    Evaluation at a breakpoint takes the right-limit value. Breakpoints must
    start at 0 and end at 1; Fractions are preserved exactly.
    """

    variant = "step"

    def __init__(self, breaks, values, declared_bounded_variation=None):
        breaks = list(breaks)
        values = list(values)
        if len(breaks) != len(values) + 1:
            raise ValueError("need len(breaks) == len(values) + 1")
        if breaks[0] != 0 or breaks[-1] != 1:
            raise ValueError("breakpoints must start at 0 and end at 1")
        for a, b in zip(breaks, breaks[1:]):
            if not a < b:
                raise ValueError("breakpoints must be strictly increasing")
        for v in values:
            if not (v >= 0 and _finite(v)):
                raise ValueError("observable values must be non-negative and finite")
        self.breaks = breaks
        self.values = values
        self.declared_bounded_variation = declared_bounded_variation
        cum = [0]
        for a, b, v in zip(breaks, breaks[1:], values):
            cum.append(cum[-1] + v * (b - a))
        self._cum = cum
        self._np_breaks = np.array([float(b) for b in breaks])
        self._np_values = np.array([float(v) for v in values])
        self._np_cum = np.array([float(c) for c in cum])

    def value(self, x):
        idx = bisect.bisect_right(self.breaks, x) - 1
        if idx >= len(self.values):
            idx = len(self.values) - 1
        if idx < 0:
            idx = 0
        return self.values[idx]

    def np_values(self, xs):
        idx = np.searchsorted(self._np_breaks, xs, side="right") - 1
        idx = np.clip(idx, 0, len(self.values) - 1)
        return self._np_values[idx]

    def cumulative(self, x):
        """Integral of f over [0, x]; duck-typed."""
        idx = bisect.bisect_right(self.breaks, x) - 1
        if idx >= len(self.values):
            idx = len(self.values) - 1
        if idx < 0:
            idx = 0
        return self._cum[idx] + self.values[idx] * (x - self.breaks[idx])

    def np_cumulative(self, xs):
        idx = np.searchsorted(self._np_breaks, xs, side="right") - 1
        idx = np.clip(idx, 0, len(self.values) - 1)
        return self._np_cum[idx] + self._np_values[idx] * (xs - self._np_breaks[idx])

    def integral(self, a, b):
        return self.cumulative(b) - self.cumulative(a)

    def squared(self):
        return Step(self.breaks, [v * v for v in self.values])

    def pieces(self):
        """(start, length, value) triples, duck-typed."""
        return [
            (a, b - a, v)
            for a, b, v in zip(self.breaks, self.breaks[1:], self.values)
        ]

    def __repr__(self):
        return f"Step(breaks={self.breaks!r}, values={self.values!r})"


class Tabulated(Step):
    """Samples held constant on the uniform grid cells [i/n, (i+1)/n)."""

    variant = "tabulated"

    def __init__(self, samples, declared_bounded_variation=None):
        samples = [float(v) for v in samples]
        if not samples:
            raise ValueError("need at least one sample")
        n = len(samples)
        breaks = [i / n for i in range(n)] + [1.0]
        super().__init__(breaks, samples, declared_bounded_variation)

    def squared(self):
        return Tabulated([v * v for v in self.values])

    def __repr__(self):
        return f"Tabulated(n={len(self.values)})"


class Polynomial:
    """Polynomial observable with ascending float coefficients."""

    variant = "poly"

    def __init__(self, coeffs, declared_bounded_variation=None):
        coeffs = tuple(float(c) for c in coeffs)
        if not coeffs:
            coeffs = (0.0,)
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite")
        self.coeffs = coeffs
        self.declared_bounded_variation = declared_bounded_variation
        xs = (np.arange(2049) + 0.5) / 2049
        if npoly.polyval(xs, coeffs).min() < -1e-12:
            raise ValueError("observable must be non-negative on [0, 1)")
        anti = [0.0] + [c / (i + 1) for i, c in enumerate(coeffs)]
        self._anti = np.array(anti)

    def value(self, x):
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def np_values(self, xs):
        return npoly.polyval(xs, self.coeffs)

    def cumulative(self, x):
        return float(npoly.polyval(x, self._anti))

    def np_cumulative(self, xs):
        return npoly.polyval(xs, self._anti)

    def integral(self, a, b):
        return self.cumulative(b) - self.cumulative(a)

    def squared(self):
        return Polynomial(npoly.polymul(self.coeffs, self.coeffs))

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"


def _finite(v):
    try:
        return math.isfinite(float(v))
    except (TypeError, OverflowError):
        return False


def identity():
    """The observable f(x) = x."""
    return Polynomial((0.0, 1.0))


def is_identity(f):
    return isinstance(f, Polynomial) and f.coeffs == (0.0, 1.0)


def indicator(a, b):
    """The indicator of [a, b); exact when a, b are Fractions."""
    if not (0 <= a < b <= 1):
        raise ValueError("need 0 <= a < b <= 1")
    breaks, values = [0], []
    if a > 0:
        breaks.append(a)
        values.append(0)
    values.append(1)
    if b < 1:
        breaks.append(b)
        values.append(0)
    breaks.append(1)
    return Step(breaks, values)


def integrate(f, measure=LEBESGUE):
    """Integral of f against the measure; exact for Step/Polynomial + Lebesgue."""
    if isinstance(measure, Lebesgue):
        return f.integral(0, 1)
    if isinstance(measure, AtomicOrbit):
        s = sum(f.value(x) for x in measure.atoms())
        if isinstance(s, Fraction):
            return s / measure.q
        return s / measure.q
    if isinstance(measure, TransferStationary):
        h = measure.h
        n = len(h)
        edges = np.arange(n + 1) / n
        cell = np.diff(f.np_cumulative(edges))
        return float(np.dot(h, cell))
    raise ValueError(f"unknown measure: {measure!r}")


def integrate_squared(f, measure=LEBESGUE):
    """Integral of f^2 against the measure."""
    return integrate(f.squared(), measure)


def _arc_overlap(a1, l1, a2, l2):
    """Length of the intersection of circle arcs [a1, a1+l1) and [a2, a2+l2).

    Requires 0 < l1, l2 <= 1. Duck-typed: works for floats and Fractions.
    """
    s = frac(a2 - a1)
    first = min(l1, s + l2) - s
    out = first if first > 0 else 0
    wrap = s + l2 - 1
    if wrap > 0:
        w = min(l1, wrap)
        out = out + w
    return out


def circle_autocorrelation(f, t):
    """A(t) = integral of f({x - t}) f(x) over the circle; even, 1-periodic."""
    t = frac(t)
    if isinstance(f, Step):
        out = 0
        pieces = [p for p in f.pieces() if p[2] != 0]
        for aj, lj, vj in pieces:
            for ai, li, vi in pieces:
                # shifted copy of piece i against piece j
                ov = _arc_overlap(aj, lj, ai + t, li)
                if ov > 0:
                    out = out + vi * vj * ov
        return out
    if isinstance(f, Polynomial):
        return _poly_autocorrelation(f.coeffs, float(t))
    return _quad_autocorrelation(f, float(t))


def _poly_shift(c, s):
    """Coefficients of p(x + s)."""
    out = np.zeros(1)
    for coef in reversed(c):
        out = npoly.polymul(out, (s, 1.0))
        out[0] += coef
    return out


def _poly_defint(c, a, b):
    anti = npoly.polyint(c)
    return float(npoly.polyval(b, anti) - npoly.polyval(a, anti))


def _poly_autocorrelation(c, t):
    # f({x-t}) is p(x-t) on [t,1) and p(x-t+1) on [0,t)
    low = npoly.polymul(_poly_shift(c, 1.0 - t), c)
    high = npoly.polymul(_poly_shift(c, -t), c)
    return _poly_defint(low, 0.0, t) + _poly_defint(high, t, 1.0)


def _quad_autocorrelation(f, t):
    xs = (np.arange(_QUAD_PANELS) + 0.5) / _QUAD_PANELS
    shifted = xs - t
    shifted -= np.floor(shifted)
    return float(np.mean(f.np_values(shifted) * f.np_values(xs)))


def fourier_coefficient(f, m):
    """f_hat(m) = integral of f(x) e^{-2 pi i m x} dx; conjugate-symmetric in m."""
    if m == 0:
        return complex(float(f.integral(0, 1)))
    if isinstance(f, Step):
        out = 0j
        for a, l, v in f.pieces():
            if v == 0:
                continue
            a = float(a)
            b = a + float(l)
            ea = cmath.exp(complex(0.0, -2.0 * math.pi * m * a))
            eb = cmath.exp(complex(0.0, -2.0 * math.pi * m * b))
            out += float(v) * (ea - eb)
        return out / complex(0.0, 2.0 * math.pi * m)
    if isinstance(f, Polynomial):
        # I_n = int x^n e^{-2 pi i m x} dx satisfies
        # I_n = -1/(2 pi i m) + n/(2 pi i m) I_{n-1}, I_0 = 0
        w = complex(0.0, 2.0 * math.pi * m)
        out = 0j
        i_n = 0j
        for n, c in enumerate(f.coeffs):
            if n > 0:
                i_n = (-1.0 + n * i_n) / w
            out += c * i_n
        return out
    xs = (np.arange(_QUAD_PANELS) + 0.5) / _QUAD_PANELS
    ker = np.exp(-2j * np.pi * m * xs)
    return complex(np.mean(f.np_values(xs) * ker))


def cyclic_samples(f, q, y, p=1):
    """f along the q-periodic orbit: entry k is f({y + k p/q}).

    Exact (Fraction-valued positions) when y is an int or Fraction.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if isinstance(y, (int, Fraction)):
        step = Fraction(p, q)
    else:
        step = p / q
    return [f.value(frac(y + k * step)) for k in range(q)]


def sup_distance(f, g, panels=4096):
    """Sup-norm proxy max |f - g| over a midpoint grid."""
    xs = (np.arange(panels) + 0.5) / panels
    return float(np.max(np.abs(f.np_values(xs) - g.np_values(xs))))
