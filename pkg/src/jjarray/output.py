"""Deterministic machine-readable emission of sweep tables and branch reports.

Numbers are written as Python's shortest round-trip decimal (``repr``), so
identical inputs always produce byte-identical files, and the CSV and JSON
encodings of one sweep carry exactly the same values.
"""

from __future__ import annotations

import json
from typing import IO

from .landscape import LandscapeBranch, SweepTable


def format_number(value: float) -> str:
    """Shortest round-trip decimal; normalises negative zero."""
    return repr(float(value) + 0.0)


def format_config(config: tuple[int, ...]) -> str:
    """Semicolon-joined vortex numbers, e.g. ``1;0;0;0``."""
    return ";".join(str(v) for v in config)


def write_sweep_csv(table: SweepTable, stream: IO[str]) -> None:
    """Rows ``f,config,energy,is_ground`` (flag 1/0), flux-major order."""
    stream.write("f,config,energy,is_ground\n")
    for f, config, energy, is_ground in table.rows():
        stream.write(
            f"{format_number(f)},{format_config(config)},"
            f"{format_number(energy)},{1 if is_ground else 0}\n"
        )


def write_sweep_json(table: SweepTable, stream: IO[str], meta: dict | None = None) -> None:
    """One JSON object: metadata plus the same rows as the CSV encoding."""
    payload: dict = dict(meta or {})
    payload["rows"] = [
        {
            "f": f + 0.0,
            "config": list(config),
            "energy": energy + 0.0,
            "is_ground": is_ground,
        }
        for f, config, energy, is_ground in table.rows()
    ]
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def write_sweep_plot_data(table: SweepTable, stream: IO[str]) -> None:
    """Gnuplot-style blocks: one block per configuration, columns f and energy."""
    first = True
    for k, config in enumerate(table.configs):
        if not first:
            stream.write("\n")
        first = False
        stream.write(f"# config {format_config(config)}\n")
        for j, f in enumerate(table.flux):
            stream.write(
                f"{format_number(f)} {format_number(float(table.energies[k, j]))}\n"
            )


def branch_record(branch: LandscapeBranch) -> dict:
    return {
        "config": list(branch.config),
        "quad": [v + 0.0 for v in branch.quad],
        "vertex_f": branch.vertex_f + 0.0,
        "ground_intervals": [[lo + 0.0, hi + 0.0] for lo, hi in branch.ground_intervals],
        "multiplicity": branch.multiplicity,
    }


def write_branches_json(
    branches: list[LandscapeBranch], stream: IO[str], meta: dict | None = None
) -> None:
    """Branch report: config, quad coefficients, vertex, intervals, multiplicity."""
    payload: dict = dict(meta or {})
    payload["branches"] = [branch_record(b) for b in branches]
    json.dump(payload, stream, indent=2)
    stream.write("\n")
