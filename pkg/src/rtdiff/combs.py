"""Weighted return time combs, their finite autocorrelations and periodograms.

A comb stores the weights f(T^z y) on a contiguous window of integers. For
non-invertible maps the weights vanish for z < 0, so only z >= 0 is stored.
All window normalizations use the symmetric count 2n+1.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .dynamics import orbit

__all__ = [
    "WeightedComb",
    "CoefficientSeq",
    "build_comb",
    "finite_autocorrelation",
    "periodogram",
    "write_comb_csv",
    "read_comb_csv",
]

COMB_HEADER = "# rtdiff-comb v1"


@dataclass(frozen=True, eq=False)
class WeightedComb:
    """Non-negative weights at z = origin_index, ..., origin_index+len-1."""

    origin_index: int
    weights: object
    invertible_mode: bool

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a non-empty 1-d sequence")
        if not np.isfinite(w).all() or w.min() < 0:
            raise ValueError("weights must be non-negative and finite")
        if not self.invertible_mode and self.origin_index < 0:
            raise ValueError("non-invertible combs are supported on z >= 0")
        object.__setattr__(self, "weights", w)

    @property
    def max_index(self):
        return self.origin_index + len(self.weights) - 1

    def window(self, n):
        """Weights w(z) for z in [-n, n], implicit zeros filled in.

        Raises if the comb does not cover the window it is supposed to (all of
        [-n, n] in invertible mode, [0, n] otherwise).
        """
        need_lo = -n if self.invertible_mode else 0
        if self.origin_index > need_lo or self.max_index < n:
            raise ValueError(
                f"comb supported on [{self.origin_index}, {self.max_index}] "
                f"does not cover the window for n={n}"
            )
        zs = np.arange(-n, n + 1)
        w = np.zeros(2 * n + 1)
        mask = (zs >= self.origin_index) & (zs <= self.max_index)
        w[mask] = self.weights[zs[mask] - self.origin_index]
        return w


@dataclass(frozen=True, eq=False)
class CoefficientSeq:
    """Real coefficients indexed by z in [-Z, Z]."""

    half_window: int
    values: object

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


def build_comb(map_, f, y, horizon):
    """Comb of weights f(T^z y): z in [-N, N] if invertible, [0, N] otherwise."""
    if not (0 <= y < 1):
        raise ValueError("reference point must lie in [0, 1)")
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if map_.invertible:
        pts = orbit(map_, y, 2 * horizon + 1, start=-horizon)
        origin = -horizon
    else:
        pts = orbit(map_, y, horizon + 1, start=0)
        origin = 0
    w = np.asarray(f.np_values(pts), dtype=float)
    if not np.isfinite(w).all():
        raise ArithmeticError("observable produced a non-finite weight")
    return WeightedComb(origin_index=origin, weights=w, invertible_mode=map_.invertible)


def finite_autocorrelation(comb, n):
    """Normalized self-correlation (1/(2n+1)) sum_m w(m) w(m+z), |z| <= 2n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    w = comb.window(n)
    vals = np.correlate(w, w, mode="full") / (2 * n + 1)
    return CoefficientSeq(half_window=2 * n, values=vals)


def _fourier_grid_size(grid):
    """G if grid is exactly (0, 1/G, ..., (G-1)/G), else None."""
    g = np.asarray(grid, dtype=float)
    size = g.size
    if size and np.array_equal(g, np.arange(size) / size):
        return size
    return None


def periodogram(comb, n, grid):
    """P_n(theta) = |sum_m w(m) e^{-2 pi i theta m}|^2 / (2n+1) over the grid.

    Grids of exact Fourier frequencies j/G are folded through an FFT; any
    other grid is evaluated directly. Both routes agree to ~1e-12.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    w = comb.window(n)
    ms = np.arange(-n, n + 1)
    grid = np.asarray(grid, dtype=float)
    size = _fourier_grid_size(grid)
    if size is not None:
        folded = np.zeros(size)
        np.add.at(folded, ms % size, w)
        s = np.fft.fft(folded)
    else:
        s = np.empty(grid.size, dtype=complex)
        for j, theta in enumerate(grid):
            s[j] = np.exp(-2j * np.pi * theta * ms) @ w
    out = (s.real**2 + s.imag**2) / (2 * n + 1)
    return np.maximum(out, 0.0)


def write_comb_csv(path, comb):
    with open(path, "w", newline="") as fh:
        fh.write(COMB_HEADER + "\n")
        writer = csv.writer(fh)
        writer.writerow(["z", "weight"])
        for off, w in enumerate(comb.weights):
            writer.writerow([comb.origin_index + off, format(w, ".17g")])


def read_comb_csv(path):
    with open(path, newline="") as fh:
        first = fh.readline().rstrip("\n")
        if first != COMB_HEADER:
            raise ValueError(f"not a comb file (header {first!r})")
        rows = [r for r in csv.reader(fh) if r]
    if rows and rows[0][0] == "z":
        rows = rows[1:]
    zs = [int(r[0]) for r in rows]
    ws = [float(r[1]) for r in rows]
    if not zs:
        raise ValueError("comb file has no rows")
    if zs != list(range(zs[0], zs[0] + len(zs))):
        raise ValueError("comb rows must cover a contiguous z-range")
    return WeightedComb(origin_index=zs[0], weights=ws, invertible_mode=zs[0] < 0)
