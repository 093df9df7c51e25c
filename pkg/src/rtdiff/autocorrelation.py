"""Autocorrelation engines for interval dynamics.

Conventions, fixed once for every consumer downstream:
  - non-invertible maps:  Xi(z) = (1/2) * integral of (f o T^{|z|}) * f d(eta)
  - invertible rotations: Xi(z) =         integral of (f o T^{-z}) * f d(eta)
The z = 0 values differ accordingly (halved mean square vs mean square).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dynamics import frac, orbit, random_orbit
from .observables import circle_autocorrelation, cyclic_samples
from .transfer import analyze

__all__ = [
    "XiSequence",
    "xi_empirical",
    "xi_rotation_rational",
    "xi_rotation_irrational",
    "xi_mixing",
    "xi_linear_identity",
    "xi_distance",
    "rational_xi_cycle",
]

# Birkhoff horizon guard: truncation edge effects stay below tolerance
_MIN_HORIZON_FACTOR = 100


@dataclass(frozen=True, eq=False)
class XiSequence:
    """Autocorrelation values on the symmetric window [-Z, Z]."""

    half_window: int
    values: object
    engine: str  # empirical | rational | irrational | mixing | analytic

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (2 * self.half_window + 1,):
            raise ValueError("values must have length 2*half_window + 1")
        object.__setattr__(self, "values", v)

    def value(self, z):
        if abs(z) > self.half_window:
            raise ValueError(f"lag {z} outside window [-{self.half_window}, {self.half_window}]")
        return float(self.values[z + self.half_window])

    def lags(self):
        return np.arange(-self.half_window, self.half_window + 1)


def _mirror(head):
    """Full window values from the z >= 0 half."""
    head = np.asarray(head, dtype=float)
    return np.concatenate([head[:0:-1], head])


def xi_empirical(map_, measure, f, y, half_window, horizon, *, rng=None):
    """Finite Birkhoff estimate of Xi over [-Z, Z] from one orbit of length ~N.

    ``measure`` documents which invariant measure the estimate targets; the
    orbit itself starts at ``y`` (which should lie in its support). Passing
    ``rng`` with ``y=None`` draws a Lebesgue-random start; for x -> {kx} that
    route generates the orbit from a base-k digit stream, which float
    iteration cannot do faithfully (see dynamics.random_orbit).
    """
    del measure  # records intent only; the estimate is orbitwise
    if half_window < 0:
        raise ValueError("half_window must be >= 0")
    if half_window >= horizon:
        raise ValueError("window must be smaller than the horizon")
    if horizon < _MIN_HORIZON_FACTOR * half_window:
        raise ValueError(
            f"horizon {horizon} too short for window {half_window}; "
            f"need horizon >= {_MIN_HORIZON_FACTOR}*window"
        )
    z_count = half_window + 1
    if map_.invertible:
        if y is None:
            if rng is None:
                raise ValueError("provide a reference point y or an rng")
            y = rng.random()
        n_tot = horizon + half_window
        pts = orbit(map_, y, 2 * n_tot + 1, start=-n_tot)
        w = np.asarray(f.np_values(pts), dtype=float)
        mid = n_tot  # index of n = 0
        core = w[mid - horizon : mid + horizon + 1]
        head = np.empty(z_count)
        for z in range(z_count):
            fwd = core @ w[mid - horizon - z : mid + horizon + 1 - z]
            bwd = core @ w[mid - horizon + z : mid + horizon + 1 + z]
            head[z] = 0.5 * (fwd + bwd) / (2 * horizon + 1)
    else:
        length = horizon + half_window
        if y is None:
            if rng is None:
                raise ValueError("provide a reference point y or an rng")
            w_pts = random_orbit(map_, length, rng)
        else:
            w_pts = orbit(map_, y, length)
        w = np.asarray(f.np_values(w_pts), dtype=float)
        head = np.empty(z_count)
        for z in range(z_count):
            head[z] = (w[:horizon] @ w[z : z + horizon]) / (2 * horizon)
    return XiSequence(half_window=half_window, values=_mirror(head), engine="empirical")


def rational_xi_cycle(p, q, w, f):
    """One period of Xi for the rotation by p/q over the orbit measure at w.

    Entry z is (1/q) * sum_l f_orbit(l) f_orbit(l-z). Exact rationals when w
    and the observable admit them (int/Fraction inputs).
    """
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError("need q >= 1 and gcd(p, q) = 1")
    s = cyclic_samples(f, q, w, p)
    out = []
    for z in range(q):
        tot = sum(s[l] * s[l - z] for l in range(q))
        out.append(Fraction(tot, q) if isinstance(tot, (int, Fraction)) else tot / q)
    return out


def xi_rotation_rational(p, q, w, f, half_window):
    """Xi for the rotation by p/q against the q-point orbit measure at w."""
    cycle = rational_xi_cycle(p, q, w, f)
    zs = np.arange(-half_window, half_window + 1)
    # cycle[z % q] == cycle[(q - z) % q] exactly, but float summation order
    # differs; index by |z| so the stored sequence is even to the bit
    values = np.array([float(cycle[abs(int(z)) % q]) for z in zs])
    return XiSequence(half_window=half_window, values=values, engine="rational")


def xi_rotation_irrational(alpha, f, half_window):
    """Xi for the rotation by (declared-irrational) alpha against Lebesgue.

    Xi(z) is the circle autocorrelation of f at t = {z*alpha}.
    """
    head = [float(circle_autocorrelation(f, frac(z * alpha))) for z in range(half_window + 1)]
    return XiSequence(half_window=half_window, values=_mirror(head), engine="irrational")


def xi_mixing(map_, f, half_window, n_bins):
    """Xi for a mixing map through the transfer operator: ((mean)^2 + c_z)/2."""
    data = analyze(map_, f, half_window, n_bins)
    values = 0.5 * (data.mean_f**2 + data.c.values)
    return XiSequence(half_window=half_window, values=values, engine="mixing")


def xi_linear_identity(k, half_window):
    """Closed-form Xi for x -> {kx} with f(x) = x: (1/8)(1 + k^{-|z|}/3)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    zs = np.abs(np.arange(-half_window, half_window + 1))
    values = 0.125 * (1.0 + float(k) ** (-zs) / 3.0)
    return XiSequence(half_window=half_window, values=values, engine="analytic")


def xi_distance(a, b, half_window):
    """Sup distance max_{|z| <= Z} |a(z) - b(z)|."""
    if a.half_window < half_window or b.half_window < half_window:
        raise ValueError("both sequences must cover the comparison window")
    ca = a.values[a.half_window - half_window : a.half_window + half_window + 1]
    cb = b.values[b.half_window - half_window : b.half_window + half_window + 1]
    return float(np.max(np.abs(ca - cb)))
