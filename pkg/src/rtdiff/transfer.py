"""Transfer-operator machinery: Ulam matrices, stationary densities, decay coefficients.

The discretized operator pushes cell masses forward. Correlation coefficients
come from pairing the pushforward of f*h against f and subtracting the squared
mean; the rank-one invariant part cancels in that subtraction, so no explicit
deflation is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .combs import CoefficientSeq
from .dynamics import LinearMod, PiecewiseMonotone, TransferStationary, preimage_intervals
from .observables import integrate, integrate_squared

__all__ = [
    "UlamOperator",
    "SpectralData",
    "build_ulam",
    "stationary_density",
    "correlation_coefficients",
    "analyze",
    "linear_identity_coefficients",
]

# n_bins * k^depth fine cells for the exact pushforward below; keep it bounded
_MAX_FINE_CELLS = 1 << 21
_WARM_DEPTH = 3


@dataclass(frozen=True, eq=False)
class UlamOperator:
    """Row-stochastic cell-to-cell transition matrix of an interval map."""

    bins: int
    matrix: object  # scipy.sparse CSR, rows sum to 1
    source_map: object


@dataclass(frozen=True, eq=False)
class SpectralData:
    """Stationary density, mean of f, and correlation coefficients c_z."""

    h: object
    mean_f: float
    c: CoefficientSeq


def build_ulam(map_, n_bins):
    """Ulam matrix: entry (i, j) is the fraction of cell i landing in cell j.

    LinearMod rows are exact (each cell spreads uniformly over k images);
    piecewise-monotone maps go through branchwise interval preimages, exact
    for affine branches and bisection-accurate otherwise.
    """
    if n_bins < 2:
        raise ValueError("n_bins must be >= 2")
    if isinstance(map_, LinearMod):
        k = map_.k
        cols = (k * np.arange(n_bins)[:, None] + np.arange(k)[None, :]).ravel() % n_bins
        indptr = np.arange(n_bins + 1) * k
        data = np.full(n_bins * k, 1.0 / k)
        mat = sparse.csr_matrix((data, cols, indptr), shape=(n_bins, n_bins))
        mat.sum_duplicates()
        return UlamOperator(bins=n_bins, matrix=mat, source_map=map_)
    if not isinstance(map_, PiecewiseMonotone):
        raise ValueError("Ulam discretization needs a LinearMod or PiecewiseMonotone map")
    for br in map_.branches:
        mid = 0.5 * (br.lo + br.hi)
        if min(abs(br.deriv(br.lo)), abs(br.deriv(mid))) < 1e-12:
            raise ZeroDivisionError(f"branch on [{br.lo}, {br.hi}) has vanishing derivative")
    rows, cols, vals = [], [], []
    edges = np.arange(n_bins + 1) / n_bins
    for j in range(n_bins):
        for u, v in preimage_intervals(map_, edges[j], edges[j + 1]):
            i0 = max(0, int(math.floor(u * n_bins)))
            i1 = min(n_bins - 1, int(math.floor(v * n_bins)))
            for i in range(i0, i1 + 1):
                lo = max(u, edges[i])
                hi = min(v, edges[i + 1])
                if hi > lo:
                    rows.append(i)
                    cols.append(j)
                    vals.append((hi - lo) * n_bins)
    mat = sparse.csr_matrix((vals, (rows, cols)), shape=(n_bins, n_bins))
    row_sums = np.asarray(mat.sum(axis=1)).ravel()
    if row_sums.min() <= 0:
        raise ZeroDivisionError("a partition cell has no image mass; branches do not cover [0,1)")
    mat = sparse.diags(1.0 / row_sums) @ mat
    return UlamOperator(bins=n_bins, matrix=mat.tocsr(), source_map=map_)


def stationary_density(op, tol=1e-12, max_iter=20000):
    """Stationary density h (cell values, integral 1) by left power iteration."""
    n = op.bins
    pt = op.matrix.T.tocsr()
    s = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        nxt = pt @ s
        nxt /= nxt.sum()
        done = np.abs(nxt - s).sum() < tol
        s = nxt
        if done:
            break
    else:
        raise RuntimeError("stationary density iteration did not converge")
    s = np.maximum(s, 0.0)
    s /= s.sum()
    return s * n


def _project_fh(n, h, f):
    """Cell masses of the measure f*h dx."""
    edges = np.arange(n + 1) / n
    return h * np.diff(f.np_cumulative(edges))


def _linear_pushforward(k, n, h, f, depth):
    """Exact cell masses of the depth-step pushforward of f*h under x -> {kx}.

    Fine cell c of the k^depth-refined grid maps onto coarse cell c mod n, so
    the pushforward is a reshape-and-sum of exact fine-cell integrals. This
    sidesteps the projection resonance of the plain Ulam iteration (for k=2
    the naive start loses (gcd(n, 2^z)/n)^2 of relative accuracy).
    """
    m = k**depth
    fine = np.arange(n * m + 1) / (n * m)
    fh = np.repeat(h, m) * np.diff(f.np_cumulative(fine))
    return fh.reshape(m, n).sum(axis=0)


def _warm_depth(map_, n_bins, Z):
    if not isinstance(map_, LinearMod):
        return 0
    depth = 0
    while (
        depth < _WARM_DEPTH
        and depth < Z
        and n_bins * map_.k ** (depth + 1) <= _MAX_FINE_CELLS
    ):
        depth += 1
    return depth


def correlation_coefficients(op, h, f, half_window):
    """c_z = (pushforward of f*h for z steps, paired with f) minus the squared mean.

    c_0 uses the exact moment formula; z >= 1 starts from an exact multi-step
    pushforward where the map allows it and continues through the matrix.
    Symmetric extension to negative z.
    """
    if half_window < 0:
        raise ValueError("half_window must be >= 0")
    n = op.bins
    eta = TransferStationary(h)
    mean = float(integrate(f, eta))
    c = np.empty(half_window + 1)
    c[0] = float(integrate_squared(f, eta)) - mean * mean
    if half_window >= 1:
        edges = np.arange(n + 1) / n
        favg = np.diff(f.np_cumulative(edges)) * n
        pt = op.matrix.T.tocsr()
        warm = _warm_depth(op.source_map, n, half_window)
        v = None
        for z in range(1, half_window + 1):
            if z <= warm:
                v = _linear_pushforward(op.source_map.k, n, h, f, z)
            elif v is None:
                v = pt @ _project_fh(n, h, f)
            else:
                v = pt @ v
            c[z] = float(v @ favg) - mean * mean
    values = np.concatenate([c[:0:-1], c])
    return CoefficientSeq(half_window=half_window, values=values)


def analyze(map_, f, half_window, n_bins):
    """Stationary density + correlation coefficients in one pass."""
    op = build_ulam(map_, n_bins)
    h = stationary_density(op)
    c = correlation_coefficients(op, h, f, half_window)
    mean = float(integrate(f, TransferStationary(h)))
    return SpectralData(h=h, mean_f=mean, c=c)


def linear_identity_coefficients(k, half_window):
    """Closed-form c_z = k^{-|z|}/12 for x -> {kx} with f(x) = x."""
    if k < 2:
        raise ValueError("k must be >= 2")
    zs = np.abs(np.arange(-half_window, half_window + 1))
    return CoefficientSeq(half_window=half_window, values=(1.0 / 12.0) * float(k) ** (-zs))
