"""The built-in fixture catalog: group specs, cocycle systems, character tables.

Fixture files ship with the package so that every check and the acceptance
suite run offline.  Catalog predicates (solvable family, order cutoffs) are
defined here and referenced by the sweep and the tests.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

from walllat import fusion as fusion_mod
from walllat import kac as kac_mod
from walllat import wall as wall_mod
from walllat.config import Caps, default_caps
from walllat.groups import Group, Subgroup, interval_subgroups, is_solvable
from walllat.specio import (
    BuiltGroup,
    build_group,
    parse_character_table,
    parse_cocycle_file,
    parse_group_spec,
)

GROUP_FIXTURES = (
    "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c12",
    "c15", "c16", "c20", "c24", "c30", "c48", "c60", "c100", "c128", "c200",
    "dih4", "dih5", "dih6", "dih8", "dih10", "dih12", "dih25", "dih50", "dih100",
    "s3", "s4", "s5", "a4", "a5",
    "c2x2", "c2x2x2", "c3x3",
    "q8", "s3xs3",
    "c3byc4", "c7byc3", "c5byc4",
)

TENSOR_PAIRS = (
    ("c2", "c2"),
    ("c2", "c3"),
    ("c3", "c3"),
    ("c2x2", "c2x2"),
    ("c2x2", "c2"),
    ("s3", "s3"),
    ("s3", "c4"),
    ("q8", "c2"),
    ("a4", "c3"),
    ("dih4", "dih4"),
    ("s4", "c2"),
    ("c5", "c5"),
)

KAC_FIXTURES = (
    "c3c2_trivial",
    "c4c2_trivial",
    "c2sq_c2_eta_m2",
    "c2_c2sq_xi_m2",
    "c2sq_c2_etaxi_m2",
)

CHARTABLE_FIXTURES = ("c2", "c3", "c4", "c2x2", "s3", "q8", "a4")

# Minimal normal subgroup counts are checked against these tables' rep rings.
CHARTABLE_GROUP_OF = {
    "c2": "c2",
    "c3": "c3",
    "c4": "c4",
    "c2x2": "c2x2",
    "s3": "s3",
    "q8": "q8",
    "a4": "a4",
}


def fixture_text(filename: str) -> str:
    return (resources.files("walllat.fixtures") / filename).read_text(encoding="utf-8")


@functools.lru_cache(maxsize=None)
def _load_group_cached(name: str) -> BuiltGroup:
    spec = parse_group_spec(fixture_text(f"{name}.grp"))
    return build_group(spec)


def load_group(name: str, *, caps: Caps | None = None) -> BuiltGroup:
    if name not in GROUP_FIXTURES:
        raise KeyError(f"{name!r} is not a catalog group")
    return _load_group_cached(name)


def load_kac(name: str, *, caps: Caps | None = None) -> kac_mod.CocycleSystem:
    if name not in KAC_FIXTURES:
        raise KeyError(f"{name!r} is not a catalog cocycle system")
    return parse_cocycle_file(fixture_text(f"{name}.kac"), caps=caps, name=name)


def load_chartable(name: str) -> fusion_mod.CharacterTable:
    if name not in CHARTABLE_FIXTURES:
        raise KeyError(f"{name!r} is not a catalog character table")
    return parse_character_table(fixture_text(f"chartable_{name}.json"), name=name)


@dataclass(frozen=True)
class CatalogGroup:
    name: str
    built: BuiltGroup

    @property
    def group(self) -> Group:
        return self.built.group


def catalog_groups(
    *, family: str = "all", max_order: int | None = None, caps: Caps | None = None
) -> list[CatalogGroup]:
    """Catalog groups filtered by family ("all" or "solvable") and order."""
    if family not in ("all", "solvable"):
        raise ValueError("family must be 'all' or 'solvable'")
    out = []
    for name in GROUP_FIXTURES:
        built = load_group(name, caps=caps)
        if max_order is not None and built.group.order > max_order:
            continue
        if family == "solvable" and not is_solvable(built.group):
            continue
        out.append(CatalogGroup(name, built))
    return out


def all_subgroups(g: Group, *, caps: Caps | None = None) -> list[Subgroup]:
    return interval_subgroups(g, g.trivial_subgroup(), caps=caps)


def sweep(*, family: str = "all", caps: Caps | None = None) -> dict:
    """The offline catalog sweep behind ``walllat catalog sweep``.

    Runs the absolute bound on every catalog group, the relative bound on all
    named fixture subgroups, the product bound on the fixture pairs, group
    fusion rings up to the enumeration cap, and the cocycle fixtures.
    """
    caps = caps or default_caps()
    entries: list[dict] = []
    all_hold = True

    def note(kind: str, name: str, holds: bool, detail: dict) -> None:
        nonlocal all_hold
        all_hold = all_hold and holds
        entries.append({"check": kind, "name": name, "holds": bool(holds), **detail})

    for cat in catalog_groups(family=family, caps=caps):
        report = wall_mod.check_wall(cat.group, caps=caps)
        note("wall", cat.name, report.holds,
             {"maximal_count": report.maximal_count, "bound": report.bound})
        for sub_name, sub in sorted(cat.built.subgroups.items()):
            if sub.order == cat.group.order:
                continue
            rel = wall_mod.check_relative_wall(cat.group, sub, caps=caps)
            note("relative-wall", f"{cat.name}/{sub_name}", rel.holds,
                 {"maximal_count": rel.maximal_count, "bound": rel.bound})

    names = {c.name for c in catalog_groups(family=family, caps=caps)}
    for x_name, y_name in TENSOR_PAIRS:
        if x_name not in names or y_name not in names:
            continue
        report = wall_mod.check_tensor_bound(
            load_group(x_name).group, load_group(y_name).group, caps=caps
        )
        note("tensor", f"{x_name}x{y_name}", report.holds,
             {"count": report.count, "bound": report.bound, "equality": report.equality})

    for cat in catalog_groups(family=family, max_order=caps.fusion_cap, caps=caps):
        report = fusion_mod.maximal_fusion_subalgebras(
            fusion_mod.from_group(cat.group), caps=caps
        )
        note("fusion-group", cat.name, report.holds,
             {"count": report.count, "n": report.n})

    for name in KAC_FIXTURES:
        sys = load_kac(name, caps=caps)
        validation = kac_mod.validate_cocycle_system(sys)
        note("kac-validate", name, validation.valid,
             {"violations": len(validation.violations)})
        if not validation.valid:
            continue
        algebra = kac_mod.KacAlgebra(sys, validated=True)
        report = kac_mod.check_kac_wall(algebra, caps=caps)
        note("kac-wall", name, report.holds_max and report.holds_min,
             {"max_count": report.max_count, "min_count": report.min_count,
              "dim": report.dim})

    return {"kind": "catalog-sweep", "family": family, "all_hold": all_hold,
            "entries": entries}
