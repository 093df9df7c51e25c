"""Diffraction spectra: pure point for rotations, atom plus density for mixing maps.

Positions live on the additive circle [0, 1); the trivial character sits at 0.
Atom positions closer than EPS_POS (circularly) merge and their masses add.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .combs import WeightedComb, periodogram
from .dynamics import frac, orbit, random_orbit
from .observables import cyclic_samples, fourier_coefficient, integrate_squared
from .transfer import analyze

__all__ = [
    "EPS_POS",
    "Atom",
    "DiffractionSpectrum",
    "rotation_diffraction_rational",
    "rotation_diffraction_irrational",
    "mixing_diffraction",
    "estimate_spectrum",
    "top_atoms",
    "linear_identity_density",
    "linear_identity_series_density",
]

EPS_POS = 1e-9


@dataclass(frozen=True)
class Atom:
    position: float  # circle coordinate in [0, 1)
    mass: float
    mode: int | None = None  # Fourier mode index when the engine knows it


@dataclass(frozen=True, eq=False)
class DiffractionSpectrum:
    """Atoms plus an optional absolutely continuous density sampled on a grid."""

    kind: str  # pure_point | atom_plus_ac | estimated
    atoms: tuple
    density_grid: object = None
    density: object = None
    deficit: float | None = None  # Xi(0) minus accounted mass, when tracked
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for a in self.atoms:
            if not (0 <= a.position < 1) or a.mass < 0:
                raise ValueError("atoms need positions in [0,1) and masses >= 0")

    def atom_mass(self):
        return float(sum(a.mass for a in self.atoms))


def _merge_atoms(atoms):
    """Merge atoms whose circle distance is below EPS_POS; masses add.

    The merged atom keeps the heaviest constituent's position and mode
    (smaller |mode| on mass ties) so the result is deterministic.
    """
    live = [a for a in atoms if a.mass > 0 or a.mode is not None]
    if not live:
        return tuple(atoms)
    live.sort(key=lambda a: a.position)
    groups = [[live[0]]]
    for a in live[1:]:
        if a.position - groups[-1][-1].position <= EPS_POS:
            groups[-1].append(a)
        else:
            groups.append([a])
    # circular wrap: last group may touch the first across 1.0
    if len(groups) > 1 and (groups[0][0].position + 1.0 - groups[-1][-1].position) <= EPS_POS:
        groups[0] = groups.pop() + groups[0]
    out = []
    for g in groups:
        rep = min(g, key=lambda a: (-a.mass, abs(a.mode) if a.mode is not None else math.inf))
        out.append(Atom(rep.position, float(sum(a.mass for a in g)), rep.mode))
    out.sort(key=lambda a: a.position)
    return tuple(out)


def rotation_diffraction_rational(p, q, w, f):
    """Pure-point spectrum of the rotation by p/q over the orbit measure at w.

    The mass at position j/q is the squared modulus of the spatial DFT of the
    orbit samples at index j*p^{-1}; equivalently, mode m of the spatial DFT
    sits at position {m p/q}. (Ordering the DFT along the orbit and then
    placing index m at {m p/q} double-counts the permutation and is wrong for
    p != 1; the two views here agree and match the brute-force transform.)
    """
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError("need q >= 1 and gcd(p, q) = 1")
    s = cyclic_samples(f, q, w)  # spatial order: f({w + l/q})
    g = np.array([float(v) for v in s])
    fhat = np.fft.fft(g) / q
    masses = fhat.real**2 + fhat.imag**2
    atoms = []
    for m in range(q):
        mode = m if m <= q // 2 else m - q
        atoms.append(Atom(position=((m * p) % q) / q, mass=float(masses[m]), mode=mode))
    atoms = _merge_atoms(atoms)
    xi0 = float(np.dot(g, g) / q)
    return DiffractionSpectrum(
        kind="pure_point",
        atoms=atoms,
        deficit=xi0 - float(masses.sum()),
        meta={"p": p, "q": q, "w": float(w), "xi0": xi0},
    )


def rotation_diffraction_irrational(alpha, f, mode_cutoff):
    """Pure-point spectrum of the rotation by (declared-irrational) alpha.

    Atom for mode m sits at {m alpha} with mass |fhat(m)|^2, |m| <= M; the
    truncation deficit Xi(0) - sum(masses) is reported.
    """
    if mode_cutoff < 0:
        raise ValueError("mode cutoff must be >= 0")
    atoms = []
    for m in range(-mode_cutoff, mode_cutoff + 1):
        c = fourier_coefficient(f, m)
        atoms.append(Atom(position=frac(m * alpha), mass=abs(c) ** 2, mode=m))
    atoms = _merge_atoms(atoms)
    xi0 = float(integrate_squared(f))
    total = float(sum(a.mass for a in atoms))
    return DiffractionSpectrum(
        kind="pure_point",
        atoms=atoms,
        deficit=xi0 - total,
        meta={"alpha": float(alpha), "mode_cutoff": int(mode_cutoff), "xi0": xi0},
    )


def _cos_series(coeffs, grid):
    """g(theta) = c_0/2 + sum_{z>=1} c_z cos(2 pi theta z) from a symmetric seq."""
    half = coeffs.values[coeffs.half_window :]  # c_0 .. c_Z
    grid = np.asarray(grid, dtype=float)
    g = np.full(grid.shape, 0.5 * half[0])
    if len(half) > 1:
        zs = np.arange(1, len(half))
        g = g + np.cos(2.0 * np.pi * np.outer(grid, zs)) @ half[1:]
    return g


def mixing_diffraction(map_, f, n_bins, half_window, grid):
    """Atom at 0 of mass (1/2)(mean f)^2 plus the cosine-series density from c_z."""
    grid = np.asarray(grid, dtype=float)
    data = analyze(map_, f, half_window, n_bins)
    g = _cos_series(data.c, grid)
    if g.min() < -1e-8:
        raise RuntimeError(
            f"density sample {g.min():.3e} < -1e-8: coefficient window {half_window} too small"
        )
    atom = Atom(position=0.0, mass=0.5 * data.mean_f**2, mode=0)
    return DiffractionSpectrum(
        kind="atom_plus_ac",
        atoms=(atom,),
        density_grid=grid,
        density=g,
        meta={"n_bins": int(n_bins), "half_window": int(half_window), "mean_f": data.mean_f},
    )


def linear_identity_density(k, grid):
    """Closed-form density for x -> {kx}, f(x) = x:
    g_k(theta) = (1/24) (k - 1/k) / (k + 1/k - 2 cos(2 pi theta))."""
    if k < 2:
        raise ValueError("k must be >= 2")
    grid = np.asarray(grid, dtype=float)
    kk = float(k)
    return (kk - 1.0 / kk) / (kk + 1.0 / kk - 2.0 * np.cos(2.0 * np.pi * grid)) / 24.0


def linear_identity_series_density(k, half_window, grid):
    """The same density as a truncated cosine series with c_z = k^{-|z|}/12."""
    from .transfer import linear_identity_coefficients

    return _cos_series(linear_identity_coefficients(k, half_window), grid)


def _scan_scales(w, invertible, horizon, grid):
    """(P_n / span) rows at n = N/4, N/2, N read off prefixes of one weight array."""
    scales = [max(1, horizon // 4), max(1, horizon // 2), horizon]
    rows = []
    for n in scales:
        if invertible:
            mid = horizon
            comb = WeightedComb(-n, w[mid - n : mid + n + 1], True)
            span = 2 * n + 1
        else:
            comb = WeightedComb(0, w[: n + 1], False)
            span = n
        rows.append(periodogram(comb, n, grid) / span)
    return scales, np.vstack(rows)


def estimate_spectrum(map_, f, y, horizon, grid, segments, *, rng=None):
    """Atoms and density estimated from one orbit, kind "estimated".

    Atoms: grid points whose normalized periodogram P_n/span exceeds 5x the
    grid median at n = N/4, N/2 and N, and whose value is stable across the
    two doublings (absolutely continuous energy at a fixed frequency decays
    like 1/n under that normalization and so keeps halving; atom values
    converge).  Stability means each doubling moves the value by at most 15%.
    Density: segment-averaged periodogram (rectangular windows), halved to the
    stored Xi convention, reported on the full segment frequency grid with
    NaN at the bins within 1.5/L of a detected atom.
    """
    if horizon < 4096:
        raise ValueError("horizon must be >= 4096")
    if segments < 1:
        raise ValueError("segments must be >= 1")
    sample_count = 2 * horizon if map_.invertible else horizon
    if sample_count % segments != 0:
        raise ValueError(f"segments={segments} must divide the sample count {sample_count}")
    grid = np.asarray(grid, dtype=float)
    if map_.invertible:
        if y is None:
            if rng is None:
                raise ValueError("provide a reference point y or an rng")
            y = rng.random()
        pts = orbit(map_, y, 2 * horizon + 1, start=-horizon)
    else:
        if y is None:
            if rng is None:
                raise ValueError("provide a reference point y or an rng")
            pts = random_orbit(map_, horizon + 1, rng)
        else:
            pts = orbit(map_, y, horizon + 1)
    w = np.asarray(f.np_values(pts), dtype=float)

    scales, dens = _scan_scales(w, map_.invertible, horizon, grid)
    meds = np.median(dens, axis=1)
    passing = np.all(dens > np.maximum(5.0 * meds, 1e-300)[:, None], axis=0)
    for a, b in zip(dens, dens[1:]):
        passing &= np.abs(b - a) <= 0.15 * np.maximum(np.abs(a), np.abs(b))
    idx = np.flatnonzero(passing)
    # collapse runs of adjacent grid bins (leakage around an off-grid atom)
    atoms = []
    if idx.size:
        run = [idx[0]]
        for i in idx[1:]:
            if i == run[-1] + 1:
                run.append(i)
            else:
                atoms.append(run)
                run = [i]
        atoms.append(run)
    final = dens[-1]
    atom_list = tuple(
        Atom(position=float(grid[max(r, key=lambda j: final[j])]),
             mass=float(final[max(r, key=lambda j: final[j])]),
             mode=None)
        for r in atoms
    )

    seg_src = w[:sample_count]
    seg_len = sample_count // segments
    segs = seg_src.reshape(segments, seg_len)
    spec = np.fft.fft(segs, axis=1)
    power = (spec.real**2 + spec.imag**2) / seg_len
    ghat = power.mean(axis=0) / 2.0
    gse = power.std(axis=0, ddof=1) / 2.0 / math.sqrt(segments) if segments > 1 else np.zeros(seg_len)
    freqs = np.arange(seg_len) / seg_len
    keep = np.ones(seg_len, dtype=bool)
    for a in atom_list:
        d = np.abs(freqs - a.position)
        keep &= np.minimum(d, 1.0 - d) > 1.5 / seg_len
    tracks = {float(grid[max(r, key=lambda j: final[j])]): dens[:, max(r, key=lambda j: final[j])].tolist() for r in atoms}
    ghat = np.where(keep, ghat, np.nan)
    gse = np.where(keep, gse, np.nan)
    return DiffractionSpectrum(
        kind="estimated",
        atoms=atom_list,
        density_grid=freqs,
        density=ghat,
        meta={
            "scales": scales,
            "atom_tracks": tracks,
            "mask": ~keep,
            "density_se": gse,
            "segments": int(segments),
            "segment_length": int(seg_len),
        },
    )


def top_atoms(spectrum, count):
    """The count heaviest atoms: mass descending, ties by smaller |mode| with
    positive modes first (position ascending when modes are unknown).
    Returns (atoms, truncated) where truncated flags count > available."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if not spectrum.atoms:
        raise ValueError("spectrum has no atoms")

    def key(a):
        if a.mode is None:
            return (-a.mass, a.position, 0)
        return (-a.mass, abs(a.mode), 0 if a.mode >= 0 else 1)

    ordered = sorted(spectrum.atoms, key=key)
    return ordered[:count], count > len(ordered)
