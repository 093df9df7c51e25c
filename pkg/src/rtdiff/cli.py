"""Command-line front end: one JSON config in, deterministic CSV/JSON/PNG out.

Exit codes: 0 success, 2 configuration error, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._report import fnum, header_line, save_figure, write_json, write_table
from .autocorrelation import (
    xi_distance,
    xi_empirical,
    xi_linear_identity,
    xi_mixing,
    xi_rotation_irrational,
    xi_rotation_rational,
)
from .combs import build_comb, periodogram, write_comb_csv
from .convergence import (
    RotationItem,
    RotationSequenceSpec,
    diffraction_drift,
    midpoint_indicator_discrepancy,
    rational_engine_equality,
    sqrt2_convergents,
    xi_convergence_run,
)
from .diffraction import (
    estimate_spectrum,
    linear_identity_density,
    mixing_diffraction,
    rotation_diffraction_irrational,
    rotation_diffraction_rational,
)
from .dynamics import LEBESGUE, AtomicOrbit, LinearMod, RigidRotation, rotation_rational
from .observables import Polynomial, Step, Tabulated, identity, indicator, is_identity

__all__ = ["main", "RunConfig", "ConfigError"]

COMMANDS = ("xi", "diffract", "periodogram", "converge", "fig1", "fig2")


class ConfigError(ValueError):
    """Configuration problem; the CLI exits with status 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    options: dict
    out_dir: Path
    seed: int


def _expect(cond, path, msg):
    if not cond:
        raise ConfigError(f"{path}: {msg}")


def _as_int(value, path, lo=None, hi=None):
    _expect(isinstance(value, int) and not isinstance(value, bool), path, "must be an integer")
    if lo is not None:
        _expect(value >= lo, path, f"must be >= {lo}")
    if hi is not None:
        _expect(value <= hi, path, f"must be <= {hi}")
    return value


def _as_num(value, path, lo=None, hi=None):
    _expect(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        path,
        "must be a number",
    )
    value = float(value)
    _expect(math.isfinite(value), path, "must be finite")
    if lo is not None:
        _expect(value >= lo, path, f"must be >= {lo}")
    if hi is not None:
        _expect(value <= hi, path, f"must be <= {hi}")
    return value


def _parse_map(cfg):
    d = cfg.get("map")
    _expect(isinstance(d, dict), "map", "must be an object")
    t = d.get("type")
    if t == "rotation":
        _expect("alpha" in d, "map.alpha", "is required")
        return RigidRotation(alpha=_as_num(d["alpha"], "map.alpha")), None
    if t == "rotation_rational":
        _expect("p" in d and "q" in d, "map", "needs integer fields p and q")
        p = _as_int(d["p"], "map.p")
        q = _as_int(d["q"], "map.q", lo=1)
        try:
            m = rotation_rational(p, q)
        except ValueError as exc:
            raise ConfigError(f"map: {exc}") from exc
        w = _as_num(d.get("w", 0.0), "map.w", lo=0.0)
        _expect(w < 1.0, "map.w", "must be in [0, 1)")
        return m, w
    if t == "linear_mod":
        _expect("k" in d, "map.k", "is required")
        return LinearMod(_as_int(d["k"], "map.k", lo=2)), None
    raise ConfigError("map.type: must be one of rotation | rotation_rational | linear_mod")


def _parse_observable(cfg, key="observable"):
    d = cfg.get(key)
    _expect(isinstance(d, dict), key, "must be an object")
    t = d.get("type")
    try:
        if t == "identity":
            return identity()
        if t == "indicator":
            a = _as_num(d.get("a", 0.0), f"{key}.a", lo=0.0)
            _expect("b" in d, f"{key}.b", "is required")
            b = _as_num(d["b"], f"{key}.b")
            return indicator(a, b)
        if t == "step":
            breaks = d.get("breaks")
            values = d.get("values")
            _expect(isinstance(breaks, list), f"{key}.breaks", "must be a list of numbers")
            _expect(isinstance(values, list), f"{key}.values", "must be a list of numbers")
            return Step([_as_num(x, f"{key}.breaks[]") for x in breaks],
                        [_as_num(x, f"{key}.values[]") for x in values])
        if t == "poly":
            coeffs = d.get("coeffs")
            _expect(isinstance(coeffs, list) and coeffs, f"{key}.coeffs", "must be a non-empty list")
            return Polynomial([_as_num(x, f"{key}.coeffs[]") for x in coeffs])
        if t == "tabulated":
            samples = d.get("samples")
            _expect(isinstance(samples, list) and samples, f"{key}.samples", "must be a non-empty list")
            return Tabulated([_as_num(x, f"{key}.samples[]") for x in samples])
        if t == "constant":
            c = _as_num(d.get("value", 1.0), f"{key}.value", lo=0.0)
            return Step([0.0, 1.0], [c])
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from exc
    raise ConfigError(
        f"{key}.type: must be one of identity | indicator | step | poly | tabulated | constant"
    )


def _default_engines(map_):
    if isinstance(map_, LinearMod):
        return ["mixing"]
    if isinstance(map_, RigidRotation) and map_.rational is not None:
        return ["rational"]
    return ["irrational"]


def _xi_by_engine(engine, rc, map_, w, f, block, rng):
    z = _as_int(block.get("Z", 16), "xi.Z", lo=1)
    if engine == "rational":
        _expect(
            isinstance(map_, RigidRotation) and map_.rational is not None,
            "xi.engines",
            "engine 'rational' needs a rotation_rational map",
        )
        p, q = map_.rational
        return xi_rotation_rational(p, q, w, f, z)
    if engine == "irrational":
        _expect(isinstance(map_, RigidRotation), "xi.engines",
                "engine 'irrational' needs a rotation map")
        return xi_rotation_irrational(map_.alpha, f, z)
    if engine == "mixing":
        _expect(isinstance(map_, LinearMod), "xi.engines",
                "engine 'mixing' needs a linear_mod map")
        n_bins = _as_int(block.get("n_bins", 4096), "xi.n_bins", lo=2)
        return xi_mixing(map_, f, z, n_bins)
    if engine == "analytic":
        _expect(isinstance(map_, LinearMod), "xi.engines",
                "engine 'analytic' needs a linear_mod map")
        _expect(is_identity(f), "xi.engines",
                "engine 'analytic' covers only the identity observable")
        return xi_linear_identity(map_.k, z)
    if engine == "empirical":
        horizon = _as_int(block.get("N", 200000), "xi.N", lo=1)
        y = block.get("y")
        if y is not None:
            y = _as_num(y, "xi.y", lo=0.0)
            _expect(y < 1.0, "xi.y", "must be in [0, 1)")
        elif isinstance(map_, RigidRotation) and map_.rational is not None:
            y = w
        measure = AtomicOrbit(map_.rational[1], w) if (
            isinstance(map_, RigidRotation) and map_.rational is not None
        ) else LEBESGUE
        return xi_empirical(map_, measure, f, y, z, horizon, rng=rng)
    raise ConfigError(
        "xi.engines: must be among rational | irrational | mixing | analytic | empirical"
    )


def cmd_xi(rc):
    cfg = rc.options
    map_, w = _parse_map(cfg)
    f = _parse_observable(cfg)
    block = cfg.get("xi", {})
    _expect(isinstance(block, dict), "xi", "must be an object")
    engines = block.get("engines", _default_engines(map_))
    _expect(isinstance(engines, list) and engines, "xi.engines", "must be a non-empty list")
    rng = np.random.default_rng(rc.seed)
    head = header_line("xi", {"config": cfg, "seed": rc.seed})
    results = {}
    for engine in engines:
        _expect(isinstance(engine, str), "xi.engines", "entries must be strings")
        _expect(engine not in results, "xi.engines", f"duplicate engine {engine!r}")
        results[engine] = _xi_by_engine(engine, rc, map_, w, f, block, rng)
    files = []
    for engine, seq in results.items():
        path = rc.out_dir / f"xi_{engine}.csv"
        write_table(path, head, ("z", "xi", "engine"),
                    [(int(z), seq.value(z), engine) for z in seq.lags()])
        files.append(path)
    pairs = []
    names = list(results)
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = results[names[i]], results[names[j]]
            zmin = min(a.half_window, b.half_window)
            pairs.append((names[i], names[j], xi_distance(a, b, zmin)))
    cmp_path = rc.out_dir / "comparison.csv"
    write_table(cmp_path, head, ("engine_a", "engine_b", "sup_distance"), pairs)
    files.append(cmp_path)

    def draw(fig):
        ax = fig.subplots()
        for engine, seq in results.items():
            ax.plot(seq.lags(), seq.values, marker="o", markersize=3, label=engine)
        ax.set_xlabel("z")
        ax.set_ylabel("Xi(z)")
        ax.legend()
        ax.set_title("autocorrelation by engine")

    fig_path = rc.out_dir / "xi.png"
    save_figure(fig_path, draw)
    files.append(fig_path)
    return files


def _spectrum_rows(spec):
    rows = []
    for a in spec.atoms:
        rows.append((a.position, a.mass, "" if a.mode is None else int(a.mode)))
    return rows


def cmd_diffract(rc):
    cfg = rc.options
    map_, w = _parse_map(cfg)
    f = _parse_observable(cfg)
    block = cfg.get("diffract", {})
    _expect(isinstance(block, dict), "diffract", "must be an object")
    head = header_line("diffract", {"config": cfg, "seed": rc.seed})
    rng = np.random.default_rng(rc.seed)
    files = []
    envelope = {"command": "diffract", "seed": rc.seed}

    if isinstance(map_, RigidRotation) and map_.rational is not None:
        p, q = map_.rational
        spec = rotation_diffraction_rational(p, q, w, f)
        envelope["engine"] = "rotation_rational"
        envelope.update(p=p, q=q, w=w)
    elif isinstance(map_, RigidRotation):
        cutoff = _as_int(block.get("M", 50), "diffract.M", lo=0)
        spec = rotation_diffraction_irrational(map_.alpha, f, cutoff)
        envelope["engine"] = "rotation_irrational"
        envelope["mode_cutoff"] = cutoff
    else:
        n_bins = _as_int(block.get("n_bins", 4096), "diffract.n_bins", lo=2)
        z = _as_int(block.get("Z", 64), "diffract.Z", lo=0)
        grid_size = _as_int(block.get("grid", 1024), "diffract.grid", lo=2)
        grid = np.arange(grid_size) / grid_size
        spec = mixing_diffraction(map_, f, n_bins, z, grid)
        envelope["engine"] = "mixing"
        envelope.update(n_bins=n_bins, Z=z, grid=grid_size)

    atoms_path = rc.out_dir / "atoms.csv"
    write_table(atoms_path, head, ("position", "mass", "mode_index"), _spectrum_rows(spec))
    files.append(atoms_path)
    if spec.density is not None:
        dens_path = rc.out_dir / "density.csv"
        write_table(dens_path, head, ("theta", "g"),
                    list(zip(spec.density_grid, spec.density)))
        files.append(dens_path)
    envelope["kind"] = spec.kind
    envelope["atom_mass"] = spec.atom_mass()
    if spec.deficit is not None:
        envelope["parseval_deficit"] = spec.deficit
    if spec.density is not None:
        envelope["density_mean"] = float(np.mean(spec.density))

    est = None
    if block.get("estimate", False):
        horizon = _as_int(block.get("N", 65536), "diffract.N", lo=4096)
        segments = _as_int(block.get("segments", 128), "diffract.segments", lo=1)
        grid_size = _as_int(block.get("grid", 1024), "diffract.grid", lo=2)
        grid = np.arange(grid_size) / grid_size
        y = block.get("y")
        if y is not None:
            y = _as_num(y, "diffract.y", lo=0.0)
            _expect(y < 1.0, "diffract.y", "must be in [0, 1)")
        est = estimate_spectrum(map_, f, y, horizon, grid, segments, rng=rng)
        est_atoms = rc.out_dir / "estimated_atoms.csv"
        write_table(est_atoms, head, ("position", "mass", "mode_index"), _spectrum_rows(est))
        files.append(est_atoms)
        est_dens = rc.out_dir / "estimated_density.csv"
        write_table(est_dens, head, ("theta", "g"),
                    list(zip(est.density_grid, est.density)))
        files.append(est_dens)
        envelope["estimated_atoms"] = [
            {"position": a.position, "mass": a.mass} for a in est.atoms
        ]

    env_path = rc.out_dir / "envelope.json"
    write_json(env_path, envelope)
    files.append(env_path)

    def draw(fig):
        ax = fig.subplots()
        if spec.atoms:
            xs = [a.position for a in spec.atoms]
            ys = [a.mass for a in spec.atoms]
            ax.vlines(xs, 0.0, ys, color="C0", label="atoms")
            ax.plot(xs, ys, "C0.", markersize=4)
        if spec.density is not None:
            ax.plot(spec.density_grid, spec.density, "C1-", label="density")
        if est is not None:
            ax.plot(est.density_grid, est.density, "C2.", markersize=2, label="estimated density")
        ax.set_xlabel("theta")
        ax.set_ylabel("mass / density")
        ax.legend()
        ax.set_title("diffraction")

    fig_path = rc.out_dir / "spectrum.png"
    save_figure(fig_path, draw)
    files.append(fig_path)
    return files


def cmd_periodogram(rc):
    cfg = rc.options
    map_, w = _parse_map(cfg)
    f = _parse_observable(cfg)
    block = cfg.get("periodogram", {})
    _expect(isinstance(block, dict), "periodogram", "must be an object")
    horizon = _as_int(block.get("N", 4096), "periodogram.N", lo=1)
    grid_size = _as_int(block.get("grid", 512), "periodogram.grid", lo=2)
    y = block.get("y")
    if y is not None:
        y = _as_num(y, "periodogram.y", lo=0.0)
        _expect(y < 1.0, "periodogram.y", "must be in [0, 1)")
    elif w is not None:
        y = w
    rng = np.random.default_rng(rc.seed)
    head = header_line("periodogram", {"config": cfg, "seed": rc.seed})
    if y is None:
        if isinstance(map_, LinearMod):
            from .combs import WeightedComb
            from .dynamics import random_orbit

            pts = random_orbit(map_, horizon + 1, rng)
            comb = WeightedComb(0, np.asarray(f.np_values(pts), dtype=float), False)
        else:
            comb = build_comb(map_, f, rng.random(), horizon)
    else:
        comb = build_comb(map_, f, y, horizon)
    grid = np.arange(grid_size) / grid_size
    power = periodogram(comb, horizon, grid)
    files = []
    comb_path = rc.out_dir / "comb.csv"
    write_comb_csv(comb_path, comb)
    files.append(comb_path)
    per_path = rc.out_dir / "periodogram.csv"
    write_table(per_path, head, ("theta", "power"), list(zip(grid, power)))
    files.append(per_path)

    def draw(fig):
        ax = fig.subplots()
        ax.plot(grid, power, "C0-", linewidth=0.8)
        ax.set_xlabel("theta")
        ax.set_ylabel("P_n(theta)")
        ax.set_title(f"periodogram, n={horizon}")

    fig_path = rc.out_dir / "periodogram.png"
    save_figure(fig_path, draw)
    files.append(fig_path)
    return files


def cmd_converge(rc):
    cfg = rc.options
    f = _parse_observable(cfg)
    block = cfg.get("converge", {})
    _expect(isinstance(block, dict), "converge", "must be an object")
    _expect("alpha" in block, "converge.alpha", "is required")
    alpha = _as_num(block["alpha"], "converge.alpha")
    z = _as_int(block.get("Z", 32), "converge.Z", lo=1)
    raw_items = block.get("items")
    items = []
    if isinstance(raw_items, dict) and "sqrt2_convergents" in raw_items:
        count = _as_int(raw_items["sqrt2_convergents"], "converge.items.sqrt2_convergents", lo=1)
        for p, q in sqrt2_convergents(count):
            items.append(RotationItem(alpha=p / q, rational=(p, q), y=0.0, f=f))
    else:
        _expect(isinstance(raw_items, list) and raw_items, "converge.items",
                "must be a non-empty list (or {\"sqrt2_convergents\": n})")
        for n, d in enumerate(raw_items):
            path = f"converge.items[{n}]"
            _expect(isinstance(d, dict), path, "must be an object")
            fi = _parse_observable(d, f"{path}.observable") if "observable" in d else f
            y = _as_num(d.get("y", 0.0), f"{path}.y", lo=0.0)
            _expect(y < 1.0, f"{path}.y", "must be in [0, 1)")
            if "p" in d or "q" in d:
                p = _as_int(d.get("p"), f"{path}.p")
                q = _as_int(d.get("q"), f"{path}.q", lo=1)
                _expect(math.gcd(p, q) == 1, path, "p/q must be reduced")
                items.append(RotationItem(alpha=p / q, rational=(p, q), y=y, f=fi))
            else:
                _expect("alpha" in d, path, "needs alpha or p,q")
                items.append(RotationItem(alpha=_as_num(d["alpha"], f"{path}.alpha"),
                                          rational=None, y=y, f=fi))
    try:
        spec = RotationSequenceSpec(alpha=alpha, f=f, items=tuple(items))
    except ValueError as exc:
        raise ConfigError(f"converge.items: {exc}") from exc
    rows = xi_convergence_run(spec, z)
    head = header_line("converge", {"config": cfg, "seed": rc.seed})
    files = []
    table_path = rc.out_dir / "converge.csv"
    write_table(table_path, head, ("i", "alpha_i", "q_i_or_0", "sup_dist", "f_dist"), rows)
    files.append(table_path)
    summary = {
        "command": "converge",
        "alpha": alpha,
        "Z": z,
        "items": len(rows),
        "first_sup_dist": rows[0][3],
        "last_sup_dist": rows[-1][3],
        "monotone_decreasing": all(a[3] > b[3] for a, b in zip(rows, rows[1:])),
    }
    if "equality_check" in block:
        d = block["equality_check"]
        _expect(isinstance(d, dict), "converge.equality_check", "must be an object")
        r = _as_int(d.get("r"), "converge.equality_check.r", lo=1)
        q = _as_int(d.get("q"), "converge.equality_check.q", lo=1)
        p = _as_int(d.get("p", 1), "converge.equality_check.p")
        ok, witness = rational_engine_equality(r, q, p)
        summary["equality_check"] = {
            "r": r, "q": q, "p": p, "equal": ok,
            "values": [[m, float(a), float(b)] for m, a, b in witness],
        }
    if "discrepancy_check" in block:
        d = block["discrepancy_check"]
        _expect(isinstance(d, dict), "converge.discrepancy_check", "must be an object")
        p = _as_int(d.get("p"), "converge.discrepancy_check.p", lo=1)
        q = _as_int(d.get("q"), "converge.discrepancy_check.q", lo=3)
        rep = midpoint_indicator_discrepancy(p, q)
        summary["discrepancy_check"] = {
            "p": p, "q": q,
            "continuous_at_0": float(rep["continuous_at_0"]),
            "discrete_at_0": float(rep["discrete_at_0"]),
            "differ": bool(rep["differ"]),
            "tent_max_error": rep["tent_max_error"],
        }
    sum_path = rc.out_dir / "summary.json"
    write_json(sum_path, summary)
    files.append(sum_path)

    def draw(fig):
        ax = fig.subplots()
        ax.semilogy([r[0] for r in rows], [max(r[3], 1e-300) for r in rows], "C0o-")
        ax.set_xlabel("i")
        ax.set_ylabel("sup distance to the Lebesgue autocorrelation")
        ax.set_title("convergence of orbit autocorrelations")

    fig_path = rc.out_dir / "convergence.png"
    save_figure(fig_path, draw)
    files.append(fig_path)
    return files


def cmd_fig1(rc):
    cfg = rc.options
    block = cfg.get("fig1", {})
    _expect(isinstance(block, dict), "fig1", "must be an object")
    ks = block.get("ks", [3, 5, 10, 30])
    _expect(isinstance(ks, list) and ks, "fig1.ks", "must be a non-empty list")
    ks = [_as_int(k, "fig1.ks[]", lo=2) for k in ks]
    grid_size = _as_int(block.get("grid", 1024), "fig1.grid", lo=2)
    grid = np.arange(grid_size) / grid_size
    cols = {k: linear_identity_density(k, grid) for k in ks}
    head = header_line("fig1", {"config": cfg, "seed": rc.seed})
    names = ["theta"] + [f"g_{k}" for k in ks]
    rows = [tuple([grid[i]] + [cols[k][i] for k in ks]) for i in range(grid_size)]
    files = []
    csv_path = rc.out_dir / "fig1.csv"
    write_table(csv_path, head, names, rows)
    files.append(csv_path)

    def draw(fig):
        ax = fig.subplots()
        for k in ks:
            ax.plot(grid, cols[k], label=f"k={k}")
        ax.axhline(1.0 / 24.0, color="k", linewidth=0.7, linestyle="--", label="1/24")
        ax.set_xlabel("theta")
        ax.set_ylabel("g_k(theta)")
        ax.legend()
        ax.set_title("densities of the expanding family")

    fig_path = rc.out_dir / "fig1.png"
    save_figure(fig_path, draw)
    files.append(fig_path)
    return files


def cmd_fig2(rc):
    cfg = rc.options
    block = cfg.get("fig2", {})
    _expect(isinstance(block, dict), "fig2", "must be an object")
    alpha1 = _as_num(block.get("alpha1", math.pi / 20.0), "fig2.alpha1")
    alpha2 = _as_num(block.get("alpha2", 103.0 * math.pi / 2000.0), "fig2.alpha2")
    count = _as_int(block.get("count", 50), "fig2.count", lo=1)
    f = _parse_observable(cfg) if "observable" in cfg else identity()
    rows = diffraction_drift(alpha1, alpha2, f, count)
    head = header_line("fig2", {"config": cfg, "seed": rc.seed})
    files = []
    csv_path = rc.out_dir / "fig2.csv"
    write_table(csv_path, head, ("mode", "position_alpha1", "position_alpha2", "mass"), rows)
    files.append(csv_path)

    def draw(fig):
        ax = fig.subplots()
        ax.semilogy([r[1] for r in rows], [r[3] for r in rows], "C0o",
                    markersize=4, label=f"alpha = {fnum(alpha1)}")
        ax.semilogy([r[2] for r in rows], [r[3] for r in rows], "C1^",
                    markersize=4, label=f"alpha = {fnum(alpha2)}")
        ax.set_xlabel("atom position")
        ax.set_ylabel("mass")
        ax.legend()
        ax.set_title("largest atoms under two nearby rotation numbers")

    fig_path = rc.out_dir / "fig2.png"
    save_figure(fig_path, draw)
    files.append(fig_path)
    return files


_DISPATCH = {
    "xi": cmd_xi,
    "diffract": cmd_diffract,
    "periodogram": cmd_periodogram,
    "converge": cmd_converge,
    "fig1": cmd_fig1,
    "fig2": cmd_fig2,
}


def _load_config(path):
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        cfg = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    _expect(isinstance(cfg, dict), "config", "top level must be an object")
    return cfg


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="rtdiff",
        description="Autocorrelation and diffraction of weighted return time combs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True, help="JSON configuration file")
        sp.add_argument("--out", default=".", help="output directory (created if missing)")
        sp.add_argument("--seed", type=int, default=None, help="overrides the config seed")
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
        seed = args.seed if args.seed is not None else cfg.get("seed", 0)
        _expect(isinstance(seed, int) and not isinstance(seed, bool), "seed", "must be an integer")
        _expect(0 <= seed < 2**64, "seed", "must fit in an unsigned 64-bit integer")
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        rc = RunConfig(command=args.command, options=cfg, out_dir=out_dir, seed=seed)
        _DISPATCH[args.command](rc)
    except ConfigError as exc:
        print(f"rtdiff: config error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # numerical or engine failure
        print(f"rtdiff: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
