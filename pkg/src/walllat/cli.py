"""Command-line interface: every check as a subcommand.

Exit codes: 0 when all checked bounds hold, 1 when some checked bound fails
(details on stdout), 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from walllat import catalog as catalog_mod
from walllat import fusion as fusion_mod
from walllat import kac as kac_mod
from walllat import wall as wall_mod
from walllat.config import Caps, default_caps
from walllat.errors import CapacityError, ParseError, SchemaError, ValidationError
from walllat.groups import maximal_overgroups
from walllat.specio import (
    BuiltGroup,
    build_group,
    lattice_payload,
    parse_character_table,
    parse_cocycle_file,
    parse_group_spec,
    write_report,
)

EXIT_OK = 0
EXIT_FAILED_BOUND = 1
EXIT_USAGE = 2


def _caps_from_args(args: argparse.Namespace) -> Caps:
    caps = default_caps()
    changes = {}
    for field in ("order_cap", "interval_cap", "rado_cap", "seed"):
        value = getattr(args, field, None)
        if value is not None:
            changes[field] = value
    return dataclasses.replace(caps, **changes) if changes else caps


def _load_built(path: str, caps: Caps) -> BuiltGroup:
    text = Path(path).read_text(encoding="utf-8")
    spec = parse_group_spec(text)
    built = build_group(spec, caps=caps)
    if not built.group.name:
        built.group.name = Path(path).stem
    return built


def _emit(args: argparse.Namespace, report, text_lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(write_report(report))
    else:
        for line in text_lines:
            print(line)


def _cmd_wall(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    built = _load_built(args.groupspec, caps)
    report = wall_mod.check_wall(built.group, caps=caps)
    _emit(args, report, [
        f"group {report.group or args.groupspec}: order {report.group_order}",
        f"maximal subgroups: {report.maximal_count}  bound: {report.bound}  "
        f"holds: {report.holds}",
    ])
    return EXIT_OK if report.holds else EXIT_FAILED_BOUND


def _cmd_relative_wall(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    built = _load_built(args.groupspec, caps)
    if args.subgroup not in built.subgroups:
        raise ValidationError(
            f"no subgroup {args.subgroup!r} in the spec "
            f"(available: {sorted(built.subgroups)})"
        )
    report = wall_mod.check_relative_wall(built.group, built.subgroups[args.subgroup], caps=caps)
    _emit(args, report, [
        f"group {report.group}: order {report.group_order}, "
        f"subgroup {args.subgroup} of order {report.subgroup[0]}",
        f"maximal overgroups: {report.maximal_count}  double cosets: {report.bound}  "
        f"holds: {report.holds}  solvable: {report.solvable}",
    ])
    return EXIT_OK if report.holds else EXIT_FAILED_BOUND


def _cmd_mod2(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    built = _load_built(args.groupspec, caps)
    g = built.group
    if args.subgroups == "all-maximal":
        ks = maximal_overgroups(g, g.trivial_subgroup(), caps=caps)
    else:
        names = [n.strip() for n in args.subgroups.split(",") if n.strip()]
        missing = [n for n in names if n not in built.subgroups]
        if missing:
            raise ValidationError(f"unknown subgroup names {missing}")
        ks = [built.subgroups[n] for n in names]
    report = wall_mod.check_mod2(g, ks, caps=caps)
    _emit(args, report, [
        f"group {report.group}: family of {len(report.family_orders)} maximal subgroups,"
        f" module dimension {report.module_dim}",
        f"holds: {report.holds}"
        + ("" if report.holds else f"  failed subset: {report.failed_subset}")
        + ("" if report.solvable else "  (group not solvable: no guarantee)"),
    ])
    return EXIT_OK if report.holds else EXIT_FAILED_BOUND


def _cmd_tensor(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    x = _load_built(args.groupspec_x, caps).group
    y = _load_built(args.groupspec_y, caps).group
    report = wall_mod.check_tensor_bound(x, y, caps=caps)
    _emit(args, report, [
        f"product {report.x_name} x {report.y_name}: orders {report.x_order}, {report.y_order}",
        f"maximal subgroups containing neither factor: {report.count}  "
        f"bound: {report.bound}  holds: {report.holds}  equality: {report.equality}",
    ])
    return EXIT_OK if report.holds else EXIT_FAILED_BOUND


def _cmd_kac(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    path = args.input or args.input_pos
    if not path or (args.input and args.input_pos):
        raise ValidationError("give the cocycle file once, positionally or via --input")
    text = Path(path).read_text(encoding="utf-8")
    system = parse_cocycle_file(text, caps=caps, name=Path(path).stem)
    if args.kac_command == "validate":
        report = kac_mod.validate_cocycle_system(system, pentagon_mode=args.pentagon)
        _emit(args, report, [
            f"system {system.name}: modulus {system.modulus}, dim {system.dim}",
            f"valid: {report.valid}  violations: {len(report.violations)}  "
            f"conventions: {', '.join(report.conventions)}",
        ])
        return EXIT_OK if report.valid else EXIT_FAILED_BOUND
    algebra = kac_mod.KacAlgebra(system)
    lattice = kac_mod.enumerate_coideals(algebra, side=args.side, caps=caps)
    if args.kac_command == "coideals":
        payload = lattice_payload(lattice)
        _emit(args, payload, [
            f"system {system.name}: {len(lattice.nodes)} coideals, dims {sorted(lattice.dims)}",
            f"maximal: {len(lattice.maximal)}  minimal: {len(lattice.minimal)}",
        ])
        return EXIT_OK
    if args.kac_command == "wall":
        report = kac_mod.check_kac_wall(algebra, lattice=lattice, caps=caps)
        _emit(args, report, [
            f"system {system.name}: dim {report.dim}",
            f"maximal: {report.max_count}  minimal: {report.min_count}  "
            f"holds: {report.holds_max and report.holds_min}",
        ])
        return EXIT_OK if report.holds_max and report.holds_min else EXIT_FAILED_BOUND
    if args.kac_command == "relative":
        if args.triple is None or not (0 <= args.triple < len(lattice.nodes)):
            raise ValidationError(
                f"--triple must be a lattice node id in 0..{len(lattice.nodes) - 1}"
            )
        triple = lattice.nodes[args.triple]
        report = kac_mod.check_relative_kac_wall(algebra, triple, lattice=lattice, caps=caps)
        _emit(args, report, [
            f"system {system.name}, coideal node {args.triple} "
            f"(dim {lattice.dims[args.triple]})",
            f"maximal contained: {report.max_count}  minimal contained: {report.min_count}  "
            f"second-commutant dim: {report.bound}  "
            f"holds: {report.holds_max and report.holds_min}",
        ])
        return EXIT_OK if report.holds_max and report.holds_min else EXIT_FAILED_BOUND
    raise AssertionError(f"unhandled kac subcommand {args.kac_command}")


def _cmd_fusion(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    if args.fusion_command == "group":
        built = _load_built(args.path, caps)
        ring = fusion_mod.from_group(built.group)
    else:
        text = Path(args.path).read_text(encoding="utf-8")
        table = parse_character_table(text, name=Path(args.path).stem)
        ring = fusion_mod.from_character_table(table)
    report = fusion_mod.maximal_fusion_subalgebras(ring, caps=caps)
    _emit(args, report, [
        f"fusion ring {report.name}: {report.n} simple objects",
        f"maximal fusion subalgebras: {report.count}  holds: {report.holds}",
    ])
    return EXIT_OK if report.holds else EXIT_FAILED_BOUND


def _cmd_catalog(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    payload = catalog_mod.sweep(family=args.family, caps=caps)
    lines = [
        f"{e['check']:15s} {e['name']:20s} {'ok' if e['holds'] else 'FAILED'}"
        for e in payload["entries"]
    ]
    lines.append(f"all hold: {payload['all_hold']}")
    _emit(args, payload, lines)
    return EXIT_OK if payload["all_hold"] else EXIT_FAILED_BOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walllat",
        description="Exact checks of maximal-element counting bounds on finite lattices.",
    )
    parser.add_argument("--order-cap", type=int, dest="order_cap")
    parser.add_argument("--interval-cap", type=int, dest="interval_cap")
    parser.add_argument("--rado-cap", type=int, dest="rado_cap")
    parser.add_argument("--seed", type=int, dest="seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wall", help="maximal subgroup count versus group order")
    p.add_argument("groupspec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_wall)

    p = sub.add_parser("relative-wall", help="maximal overgroups versus double cosets")
    p.add_argument("groupspec")
    p.add_argument("--subgroup", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_relative_wall)

    p = sub.add_parser("mod2", help="independent invariant vectors for maximal subgroups")
    p.add_argument("groupspec")
    p.add_argument("--subgroups", default="all-maximal",
                   help="'all-maximal' or a comma-separated list of named subgroups")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mod2)

    p = sub.add_parser("tensor", help="maximal subgroups of a product avoiding both factors")
    p.add_argument("groupspec_x")
    p.add_argument("groupspec_y")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("kac", help="cocycle systems and coideal lattices")
    p.add_argument("kac_command", choices=("validate", "coideals", "wall", "relative"))
    p.add_argument("input_pos", nargs="?", metavar="cocyclefile")
    p.add_argument("--input")
    p.add_argument("--triple", type=int)
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--pentagon", choices=("closure", "printed"), default="closure")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_kac)

    p = sub.add_parser("fusion", help="maximal fusion subalgebras of a fusion ring")
    p.add_argument("fusion_command", choices=("group", "chartable"))
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fusion)

    p = sub.add_parser("catalog", help="run the bundled fixture sweep")
    p.add_argument("catalog_command", choices=("sweep",))
    p.add_argument("--family", choices=("all", "solvable"), default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, SchemaError, ValidationError, CapacityError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
