"""Command-line interface: a thin client of the library modules.

Exit codes: 0 success, 1 validation (bad arguments or model invariants),
2 I/O failure, 3 numerical failure (singular coupling matrix).  Every error
prints one line ``error[<code>]: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import physical
from .coupling import assemble, energy, solve_currents
from .errors import JJArrayError, ParameterError, SingularityError, ValidationError
from .landscape import EnumerationWindow, ground_branches, parabola, sweep
from .output import (
    format_number,
    write_branches_json,
    write_sweep_csv,
    write_sweep_json,
    write_sweep_plot_data,
)
from .topology import BUILTIN_NAMES, ArrayTopology, builtin_topology, parse_topology

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_NUMERICAL = 3


class _CliParser(argparse.ArgumentParser):
    """argparse normally exits with status 2 on usage errors; route them to 1."""

    def error(self, message: str) -> None:  # noqa: A003 - argparse API
        raise ValidationError(message)


def _add_topology_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--topology", help="built-in topology name")
    group.add_argument("--topology-file", help="path to a topology document")


def _add_kappa_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--kappa", type=float, default=None, help="energy prefactor in (0, 1]; default 1.0"
    )
    group.add_argument(
        "--physical",
        metavar="D,a,m[,jc]",
        default=None,
        help="compute kappa from geometry: leg length, half width, legs, jc scale",
    )


def _add_window_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--window",
        default="-1:1",
        metavar="MIN:MAX",
        help="per-plaquette vortex-number bounds (default -1:1)",
    )


def _parse_window(text: str) -> EnumerationWindow:
    try:
        lo_text, hi_text = text.split(":")
        return EnumerationWindow(int(lo_text), int(hi_text))
    except ValueError as exc:
        raise ValidationError(f"window must look like MIN:MAX, got {text!r}") from exc


def _parse_config(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"vortex configuration must be comma-joined integers, got {text!r}") from exc


def _resolve_topology(args: argparse.Namespace) -> ArrayTopology:
    if args.topology is not None:
        return builtin_topology(args.topology)
    with open(args.topology_file, encoding="utf-8") as handle:
        return parse_topology(handle.read())


def _resolve_kappa(args: argparse.Namespace) -> float:
    if getattr(args, "kappa", None) is not None and getattr(args, "physical", None) is not None:
        raise ValidationError("--kappa and --physical are mutually exclusive")
    if getattr(args, "physical", None) is not None:
        parts = args.physical.split(",")
        if len(parts) not in (3, 4):
            raise ValidationError("--physical needs D,a,m or D,a,m,jc")
        try:
            leg_length, half_width = float(parts[0]), float(parts[1])
            legs = int(parts[2])
            jc = float(parts[3]) if len(parts) == 4 else 1500.0
        except ValueError as exc:
            raise ValidationError(f"bad --physical value: {args.physical!r}") from exc
        params = physical.PhysicalParams(leg_length, half_width, legs, jc)
        return physical.energy_prefactor(
            physical.leg_self_inductance(params), physical.critical_current(params)
        )
    if getattr(args, "kappa", None) is not None:
        kappa = float(args.kappa)
        if not 0.0 < kappa <= 1.0:
            raise ParameterError(f"kappa must lie in (0, 1], got {kappa}")
        return kappa
    return 1.0


@contextmanager
def _open_output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(
        prog="jjarray",
        description=(
            "Circulating supercurrents, total energies and flux-dependent energy "
            "landscapes of coupled Josephson-junction plaquette arrays."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-topologies", help="print the built-in topology names")

    p = sub.add_parser("currents", help="circulating currents of one configuration")
    _add_topology_arguments(p)
    p.add_argument("--n", required=True, help="vortex numbers, comma-joined (e.g. 1,0,0,0)")
    p.add_argument("--f", type=float, required=True, help="flux per plaquette in flux quanta")

    p = sub.add_parser("energy", help="total energy of one configuration (E_J units)")
    _add_topology_arguments(p)
    p.add_argument("--n", required=True)
    p.add_argument("--f", type=float, required=True)
    _add_kappa_arguments(p)

    p = sub.add_parser("vertex", help="flux at which a configuration's energy is minimal")
    _add_topology_arguments(p)
    p.add_argument("--n", required=True)

    p = sub.add_parser("sweep", help="tabulate all configuration energies over a flux grid")
    _add_topology_arguments(p)
    p.add_argument("--f-min", type=float, default=0.0)
    p.add_argument("--f-max", type=float, default=1.0)
    p.add_argument("--f-step", type=float, default=0.01)
    _add_window_argument(p)
    _add_kappa_arguments(p)
    p.add_argument("--format", choices=("csv", "json", "plot-data"), default="csv")
    p.add_argument("--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("branches", help="exact ground intervals of every configuration")
    _add_topology_arguments(p)
    p.add_argument("--f-min", type=float, default=0.0)
    p.add_argument("--f-max", type=float, default=1.0)
    _add_window_argument(p)
    _add_kappa_arguments(p)
    p.add_argument("--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("inductance", help="plaquette self-inductance in henries")
    p.add_argument("-D", "--leg-length", type=float, default=45e-6, help="leg length, metres")
    p.add_argument("-a", "--half-width", type=float, default=7.5e-6, help="leg half-width, metres")
    p.add_argument("-m", "--legs", type=int, default=3, help="legs per plaquette")

    p = sub.add_parser("params", help="inductance, critical current, E_J and kappa")
    p.add_argument("-D", "--leg-length", type=float, default=45e-6)
    p.add_argument("-a", "--half-width", type=float, default=7.5e-6)
    p.add_argument("-m", "--legs", type=int, default=3)
    p.add_argument("--jc-scale", type=float, default=1500.0, help="critical-current scale, A/m^2")

    return parser


def _cmd_list_topologies(_args: argparse.Namespace) -> int:
    for name in BUILTIN_NAMES:
        print(name)
    return EXIT_OK


def _cmd_currents(args: argparse.Namespace) -> int:
    system = assemble(_resolve_topology(args))
    currents = solve_currents(system, _parse_config(args.n), args.f)
    print(", ".join(f"{value + 0.0:.12f}" for value in currents))
    return EXIT_OK


def _cmd_energy(args: argparse.Namespace) -> int:
    system = assemble(_resolve_topology(args))
    value = energy(system, _parse_config(args.n), args.f, _resolve_kappa(args))
    print(f"{value + 0.0:.12f}")
    return EXIT_OK


def _cmd_vertex(args: argparse.Namespace) -> int:
    system = assemble(_resolve_topology(args))
    branch = parabola(system, _parse_config(args.n))
    print(f"{branch.vertex_f + 0.0:.12g}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    topology = _resolve_topology(args)
    if not args.f_min < args.f_max:
        raise ValidationError(f"need f-min < f-max, got {args.f_min} and {args.f_max}")
    kappa = _resolve_kappa(args)
    table = sweep(
        assemble(topology),
        _parse_window(args.window),
        (args.f_min, args.f_max, args.f_step),
        kappa,
    )
    with _open_output(args.output) as stream:
        if args.format == "csv":
            write_sweep_csv(table, stream)
        elif args.format == "json":
            window = _parse_window(args.window)
            write_sweep_json(
                table,
                stream,
                {
                    "topology": topology.name,
                    "kappa": kappa + 0.0,
                    "window": [window.n_min, window.n_max],
                    "f_grid": {
                        "min": args.f_min + 0.0,
                        "max": args.f_max + 0.0,
                        "step": args.f_step + 0.0,
                    },
                },
            )
        else:
            write_sweep_plot_data(table, stream)
    return EXIT_OK


def _cmd_branches(args: argparse.Namespace) -> int:
    topology = _resolve_topology(args)
    if not args.f_min < args.f_max:
        raise ValidationError(f"need f-min < f-max, got {args.f_min} and {args.f_max}")
    kappa = _resolve_kappa(args)
    window = _parse_window(args.window)
    branches = ground_branches(
        assemble(topology), window, (args.f_min, args.f_max), kappa
    )
    with _open_output(args.output) as stream:
        write_branches_json(
            branches,
            stream,
            {
                "topology": topology.name,
                "kappa": kappa + 0.0,
                "window": [window.n_min, window.n_max],
                "f_range": [args.f_min + 0.0, args.f_max + 0.0],
            },
        )
    return EXIT_OK


def _cmd_inductance(args: argparse.Namespace) -> int:
    value = physical.polygon_self_inductance(args.leg_length, args.half_width, args.legs)
    print(f"L={format_number(value)}")
    return EXIT_OK


def _cmd_params(args: argparse.Namespace) -> int:
    inductance = physical.polygon_self_inductance(args.leg_length, args.half_width, args.legs)
    if not args.jc_scale > 0:
        raise ParameterError(f"jc scale must be positive, got {args.jc_scale}")
    current = args.jc_scale * args.half_width * args.leg_length
    print(f"L={format_number(inductance)}")
    print(f"I_c={format_number(current)}")
    print(f"E_J={format_number(physical.josephson_energy(current))}")
    print(f"kappa={format_number(physical.energy_prefactor(inductance, current))}")
    return EXIT_OK


_HANDLERS = {
    "list-topologies": _cmd_list_topologies,
    "currents": _cmd_currents,
    "energy": _cmd_energy,
    "vertex": _cmd_vertex,
    "sweep": _cmd_sweep,
    "branches": _cmd_branches,
    "inductance": _cmd_inductance,
    "params": _cmd_params,
}


def _fail(code: str, message: str, status: int) -> int:
    text = " ".join(str(message).split()) or "unknown error"
    print(f"error[{code}]: {text}", file=sys.stderr)
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except SingularityError as exc:
        return _fail(exc.code, str(exc), EXIT_NUMERICAL)
    except JJArrayError as exc:
        return _fail(exc.code, str(exc), EXIT_VALIDATION)
    except OSError as exc:
        return _fail("io", str(exc), EXIT_IO)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
