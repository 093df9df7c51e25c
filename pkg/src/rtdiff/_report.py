"""Deterministic CSV / JSON / PNG emission for the command-line front end.

Floats are serialized with 17 significant digits (round-trip exact for
doubles); identical inputs therefore produce byte-identical files. Figures
strip the renderer's Software tag for the same reason.
"""

from __future__ import annotations

import hashlib
import json

__all__ = [
    "fnum",
    "param_hash",
    "header_line",
    "write_table",
    "write_json",
    "save_figure",
]


def fnum(x):
    return format(float(x), ".17g")


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    try:
        return fnum(value)
    except (TypeError, ValueError):
        return str(value)


def param_hash(params):
    blob = json.dumps(params, sort_keys=True, separators=(",", ":"), default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def header_line(command, params):
    return f"# rtdiff v1 command={command} params={param_hash(params)}"


def write_table(path, header, columns, rows):
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_cell(c) for c in row) + "\n")


def write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, default=str)
        fh.write("\n")


def save_figure(path, draw):
    """Render a figure to PNG deterministically; draw(fig) does the plotting."""
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(7.0, 4.5), dpi=144)
    try:
        draw(fig)
        fig.savefig(path, format="png", metadata={"Software": None})
    finally:
        plt.close(fig)
