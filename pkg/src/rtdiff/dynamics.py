"""Interval maps, their invariant measures, and orbit generation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "RigidRotation",
    "LinearMod",
    "Branch",
    "PiecewiseMonotone",
    "Lebesgue",
    "LEBESGUE",
    "AtomicOrbit",
    "TransferStationary",
    "rotation_rational",
    "frac",
    "iterate",
    "orbit",
    "random_orbit",
    "sample",
    "preimage_intervals",
]


def frac(x):
    """Fractional part x - floor(x) in [0, 1); works for floats and Fractions.

    For a float just below an integer the subtraction can round up to 1.0,
    which is outside the range; clamp to the largest double below 1. Exact
    (Fraction) inputs never hit the clamp.
    """
    v = x - math.floor(x)
    if isinstance(v, float) and v >= 1.0:
        return math.nextafter(1.0, 0.0)
    return v


@dataclass(frozen=True)
class RigidRotation:
    """The circle rotation x -> {x + alpha}.

    ``rational`` declares alpha = p/q exactly; rationality is never inferred
    from the double (detection from floating point is ill-posed).
    """

    alpha: float
    rational: tuple[int, int] | None = None

    def __post_init__(self):
        if self.rational is not None:
            p, q = self.rational
            if q < 1 or math.gcd(p, q) != 1:
                raise ValueError("rational rotation requires q >= 1 and gcd(p, q) = 1")

    @property
    def invertible(self):
        return True


def rotation_rational(p, q):
    """Rotation by p/q, declared rational (p/q is reduced first)."""
    if q < 1:
        raise ValueError("rational rotation requires q >= 1")
    p_mod = p % q
    g = math.gcd(p_mod, q)
    return RigidRotation(alpha=p / q, rational=(p_mod // g, q // g))


@dataclass(frozen=True)
class LinearMod:
    """The expanding map x -> {k x} for an integer k >= 2."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("LinearMod requires k >= 2")

    @property
    def invertible(self):
        return False


@dataclass(frozen=True)
class Branch:
    """One monotone branch of a piecewise map on [lo, hi).

    ``linear=(slope, intercept)`` marks an affine branch so interval preimages
    can be taken in closed form; otherwise the (strictly monotone) ``fn`` is
    inverted by bisection.
    """

    lo: float
    hi: float
    fn: object
    deriv: object
    linear: tuple[float, float] | None = None


@dataclass(frozen=True)
class PiecewiseMonotone:
    """A finite partition of [0,1) into strictly monotone branches."""

    branches: tuple

    def __post_init__(self):
        bs = sorted(self.branches, key=lambda b: b.lo)
        if not bs or bs[0].lo != 0.0 or bs[-1].hi != 1.0:
            raise ValueError("branches must cover [0, 1)")
        for a, b in zip(bs, bs[1:]):
            if a.hi != b.lo:
                raise ValueError("branch intervals must tile [0, 1) without gaps")
        object.__setattr__(self, "branches", tuple(bs))

    @property
    def invertible(self):
        return False


class Lebesgue:
    """Lebesgue measure on [0, 1)."""

    def __repr__(self):
        return "Lebesgue()"


LEBESGUE = Lebesgue()


@dataclass(frozen=True)
class AtomicOrbit:
    """The uniform atomic measure on the q-periodic orbit {w + k/q}."""

    q: int
    w: float

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("AtomicOrbit requires q >= 1")

    def atoms(self):
        from fractions import Fraction

        if isinstance(self.w, (Fraction, int)):
            return [frac(self.w + Fraction(k, self.q)) for k in range(self.q)]
        return [frac(self.w + k / self.q) for k in range(self.q)]


@dataclass(frozen=True, eq=False)
class TransferStationary:
    """A stationary density given as cell values on the uniform partition."""

    h: object  # array of n_b non-negative density samples, mean 1

    def __post_init__(self):
        object.__setattr__(self, "h", np.asarray(self.h, dtype=float))


# A rotation orbit point is {y + n*alpha}. Splitting alpha into a 26-bit head
# and a tail keeps n*alpha exact up to the final additions for |n| <= 2^26, so
# the group identity T^{m+n} = T^m T^n holds to a few ulp even at n ~ 10^6.
_VELTKAMP = 134217729.0  # 2**27 + 1


def _split(a):
    c = a * _VELTKAMP
    hi = c - (c - a)
    return hi, a - hi


def _rotation_points(alpha, y, start, count):
    n = np.arange(start, start + count, dtype=float)
    hi, lo = _split(float(alpha))
    t = n * hi
    t -= np.floor(t)
    x = t + (n * lo + float(y))
    x -= np.floor(x)
    # guard against x == 1.0 after rounding
    x[x >= 1.0] -= 1.0
    return x


def iterate(map_, y, n):
    """Return T^n(y) in [0, 1); n < 0 only for invertible maps."""
    if isinstance(map_, RigidRotation):
        from fractions import Fraction

        # exact n*alpha via rationals (the declared p/q when there is one),
        # rounded once at the end; the rounding may land on 1.0, which is
        # outside [0, 1), so clamp to the largest double below 1
        a = Fraction(*map_.rational) if map_.rational is not None else Fraction(map_.alpha)
        x = Fraction(y) + n * a
        out = float(x - math.floor(x))
        return out if out < 1.0 else math.nextafter(1.0, 0.0)
    if n < 0:
        raise ValueError("negative iterates require an invertible map")
    x = y
    if isinstance(map_, LinearMod):
        for _ in range(n):
            x = frac(map_.k * x)
        return x
    for _ in range(n):
        x = _apply_piecewise(map_, x)
    return x


def _apply_piecewise(map_, x):
    for b in map_.branches:
        if b.lo <= x < b.hi:
            y = b.fn(x)
            return y - math.floor(y) if (y >= 1.0 or y < 0.0) else y
    # x == 1.0 - eps edge; clamp into the last branch
    b = map_.branches[-1]
    y = b.fn(x)
    return y - math.floor(y) if (y >= 1.0 or y < 0.0) else y


def orbit(map_, y, count, start=0):
    """Orbit points T^n(y) for n = start, ..., start+count-1.

    Rotations are evaluated directly as {y + n alpha} (no error accumulation);
    non-invertible maps are iterated in double precision, so start must be >= 0.
    Note the documented artifact: ``frac(2x)`` is exact in binary, so a float
    ×2-orbit reaches the fixed point 0 within 53 steps. Use :func:`random_orbit`
    for statistically faithful seeded orbits.
    """
    if isinstance(map_, RigidRotation):
        return _rotation_points(map_.alpha, y, start, count)
    if start < 0:
        raise ValueError("negative iterates require an invertible map")
    out = np.empty(count, dtype=float)
    x = float(y)
    for _ in range(start):
        x = iterate(map_, x, 1)
    if isinstance(map_, LinearMod):
        k = map_.k
        for i in range(count):
            out[i] = x
            x = k * x
            x -= math.floor(x)
        return out
    for i in range(count):
        out[i] = x
        x = _apply_piecewise(map_, x)
    return out


def random_orbit(map_, count, rng, start=0):
    """Orbit of a Lebesgue-random point, exact in distribution.

    For LinearMod the point is realized through its base-k digit stream
    x_n = sum_i d_{n+i} k^{-i}, which sidesteps the binary-collapse artifact of
    float iteration (every double ×2-orbit hits 0 within 53 steps). Rotations
    draw y = rng.random() and use the direct formula.
    """
    if isinstance(map_, RigidRotation):
        return _rotation_points(map_.alpha, rng.random(), start, count)
    if start != 0:
        raise ValueError("non-invertible orbits start at n = 0")
    if isinstance(map_, LinearMod):
        k = map_.k
        depth = int(math.ceil(53.0 / math.log2(k))) + 3
        digits = rng.integers(0, k, size=count + depth).astype(float)
        powers = float(k) ** -(np.arange(1, depth + 1, dtype=float))
        pts = np.correlate(digits, powers, mode="valid")[:count]
        # rounding can only undershoot 1, but clip defensively
        return np.minimum(pts, np.nextafter(1.0, 0.0))
    return orbit(map_, rng.random(), count)


def sample(measure, count, seed):
    """i.i.d. draws from the measure with a seeded deterministic generator."""
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    if isinstance(measure, Lebesgue):
        return rng.random(count)
    if isinstance(measure, AtomicOrbit):
        ks = rng.integers(0, measure.q, size=count)
        x = float(measure.w) + ks / measure.q
        return x - np.floor(x)
    if isinstance(measure, TransferStationary):
        h = measure.h
        p = h / h.sum()
        cells = rng.choice(len(h), size=count, p=p)
        return (cells + rng.random(count)) / len(h)
    raise ValueError(f"unknown measure: {measure!r}")


def _branch_inverse(branch, t):
    """Preimage of value t under one strictly monotone branch (t in its image)."""
    if branch.linear is not None:
        a, b = branch.linear
        return (t - b) / a
    lo, hi = branch.lo, branch.hi
    increasing = branch.fn(lo) <= branch.fn(hi - 1e-12)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if (branch.fn(mid) < t) == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def preimage_intervals(map_, a, b, depth=1):
    """Intervals whose T^depth-image is [a, b); exact for linear branches."""
    ivs = [(a, b)]
    for _ in range(depth):
        nxt = []
        for lo_t, hi_t in ivs:
            nxt.extend(_preimage_once(map_, lo_t, hi_t))
        ivs = nxt
    return ivs


def _preimage_once(map_, a, b):
    if isinstance(map_, LinearMod):
        k = map_.k
        return [((a + m) / k, (b + m) / k) for m in range(k)]
    out = []
    for br in map_.branches:
        flo, fhi = br.fn(br.lo), br.fn(br.hi - 1e-15)
        img_lo, img_hi = (flo, fhi) if flo <= fhi else (fhi, flo)
        lo_t, hi_t = max(a, img_lo), min(b, img_hi)
        if hi_t <= lo_t:
            continue
        u = _branch_inverse(br, lo_t)
        v = _branch_inverse(br, hi_t)
        if u > v:
            u, v = v, u
        u, v = max(u, br.lo), min(v, br.hi)
        if v > u:
            out.append((u, v))
    return out
