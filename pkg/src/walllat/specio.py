"""Parsers and writers for the external formats.

Three input formats and one output format:

* group specs: a small line-oriented sectioned text format (``[group]``,
  optional ``[action]`` for semidirect products, named ``[subgroup ...]``
  blocks), with permutations in 1-based cycle notation;
* cocycle systems and character tables: JSON documents;
* reports: deterministic JSON (sorted keys), with ``parse_report`` inverting
  ``write_report`` for every report type.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

import numpy as np

from walllat import kac as kac_mod
from walllat import wall as wall_mod
from walllat.config import Caps, default_caps
from walllat.cyclotomic import Cyc
from walllat.errors import ParseError, SchemaError, ValidationError
from walllat.fusion import CharacterTable, FusionReport
from walllat.groups import (
    Group,
    GroupAction,
    Perm,
    Subgroup,
    from_generators,
    perm_to_cycles,
    semidirect_product,
    subgroup_closure,
)

FORMAT_VERSION = 1


# -- permutations ------------------------------------------------------------------


def parse_permutation(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation into a permutation tuple on 0..degree-1.

    Grammar: perm := cycle* | "()"; cycle := "(" int (ws int)+ ")".  Cycles
    must be disjoint; unmentioned points are fixed.
    """
    if degree <= 0:
        raise ValueError("degree must be positive")
    mapping: dict[int, int] = {}
    pos = 0
    n = len(text)
    saw_cycle = False

    def last_content_offset() -> int:
        stripped = text.rstrip()
        return max(len(stripped) - 1, 0)

    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", text, pos)
        cycle_start = pos
        pos += 1
        points: list[int] = []
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            if pos >= n:
                raise ParseError("unterminated cycle", text, last_content_offset())
            if text[pos] == ")":
                pos += 1
                break
            digit_start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos == digit_start:
                raise ParseError(f"expected a point number, found {text[pos]!r}", text, pos)
            point = int(text[digit_start:pos])
            if point < 1 or point > degree:
                raise ParseError(f"point {point} outside 1..{degree}", text, digit_start)
            points.append(point)
        if not points:
            if saw_cycle or mapping:
                raise ParseError("empty cycle", text, cycle_start)
            # a lone "()" denotes the identity; nothing more may follow
            rest = text[pos:]
            if rest.strip():
                raise ParseError("unexpected input after identity", text, pos)
            saw_cycle = True
            continue
        if len(points) == 1:
            raise ParseError("cycle needs at least two points", text, cycle_start)
        for p in points:
            if p - 1 in mapping:
                raise ParseError(f"point {p} repeated", text, cycle_start)
        for i, p in enumerate(points):
            mapping[p - 1] = points[(i + 1) % len(points)] - 1
        saw_cycle = True
    perm = list(range(degree))
    for src, dst in mapping.items():
        perm[src] = dst
    return tuple(perm)


# -- group specs -------------------------------------------------------------------


@dataclass(frozen=True)
class ActionSpec:
    degree: int
    generators: tuple[str, ...]
    maps: tuple[tuple[int, int, str], ...]  # (acting gen index, base gen index, image)


@dataclass(frozen=True)
class GroupSpec:
    name: str
    degree: int
    generators: tuple[str, ...]
    subgroups: tuple[tuple[str, tuple[str, ...]], ...] = ()
    action: ActionSpec | None = None


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the sectioned group-spec format; see the module docstring."""
    name = ""
    degree: int | None = None
    gens: list[str] = []
    subgroups: list[tuple[str, list[str]]] = []
    act_degree: int | None = None
    act_gens: list[str] = []
    act_maps: list[tuple[int, int, str]] = []
    section: str | None = None
    current_sub: list[str] | None = None

    offset = 0
    for raw_line in text.split("\n"):
        line = raw_line.split("#", 1)[0].strip()
        line_offset = offset + raw_line.index(raw_line.strip()[:1]) if raw_line.strip() else offset
        offset += len(raw_line) + 1
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated section header", text, line_offset)
            header = line[1:-1].strip()
            if header == "group":
                section = "group"
            elif header == "action":
                section = "action"
            elif header.startswith("subgroup"):
                sub_name = header[len("subgroup"):].strip()
                if not sub_name:
                    raise ParseError("subgroup section needs a name", text, line_offset)
                current_sub = []
                subgroups.append((sub_name, current_sub))
                section = "subgroup"
            else:
                raise ParseError(f"unknown section [{header}]", text, line_offset)
            continue
        if section is None:
            raise ParseError("content before any section header", text, line_offset)
        if "=" not in line:
            raise ParseError("expected 'key = value'", text, line_offset)
        key, value = (part.strip() for part in line.split("=", 1))
        if section == "group":
            if key == "name":
                name = value
            elif key == "degree":
                degree = _parse_int(value, text, line_offset)
            elif key == "gen":
                gens.append(value)
            else:
                raise ParseError(f"unknown key {key!r} in [group]", text, line_offset)
        elif section == "action":
            if key == "degree":
                act_degree = _parse_int(value, text, line_offset)
            elif key == "gen":
                act_gens.append(value)
            elif key.startswith("map"):
                parts = key.split()
                if len(parts) != 3:
                    raise ParseError("map lines look like 'map I J = perm'", text, line_offset)
                act_maps.append(
                    (
                        _parse_int(parts[1], text, line_offset),
                        _parse_int(parts[2], text, line_offset),
                        value,
                    )
                )
            else:
                raise ParseError(f"unknown key {key!r} in [action]", text, line_offset)
        else:
            if key == "gen":
                current_sub.append(value)  # type: ignore[union-attr]
            else:
                raise ParseError(f"unknown key {key!r} in [subgroup]", text, line_offset)

    if degree is None:
        raise ParseError("missing 'degree' in [group] section", text, max(len(text) - 1, 0))
    action = None
    if act_degree is not None or act_gens or act_maps:
        if act_degree is None:
            raise ParseError("[action] section needs a degree", text, max(len(text) - 1, 0))
        action = ActionSpec(act_degree, tuple(act_gens), tuple(act_maps))
    return GroupSpec(
        name=name,
        degree=degree,
        generators=tuple(gens),
        subgroups=tuple((n, tuple(g)) for n, g in subgroups),
        action=action,
    )


def _parse_int(value: str, text: str, offset: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"expected an integer, found {value!r}", text, offset) from None


def write_group_spec(spec: GroupSpec) -> str:
    lines = ["[group]"]
    if spec.name:
        lines.append(f"name = {spec.name}")
    lines.append(f"degree = {spec.degree}")
    lines.extend(f"gen = {g}" for g in spec.generators)
    if spec.action is not None:
        lines.append("")
        lines.append("[action]")
        lines.append(f"degree = {spec.action.degree}")
        lines.extend(f"gen = {g}" for g in spec.action.generators)
        lines.extend(f"map {i} {j} = {img}" for i, j, img in spec.action.maps)
    for sub_name, sub_gens in spec.subgroups:
        lines.append("")
        lines.append(f"[subgroup {sub_name}]")
        lines.extend(f"gen = {g}" for g in sub_gens)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BuiltGroup:
    group: Group
    subgroups: dict[str, Subgroup]


def build_group(spec: GroupSpec, *, caps: Caps | None = None) -> BuiltGroup:
    """Materialize a GroupSpec: closure of its generators, plus named subgroups.

    With an [action] block the result is the semidirect product of the base
    group by the acting group; subgroup generators then use the bar syntax
    ``base-perm | acting-perm``.
    """
    caps = caps or default_caps()
    base_perms = [parse_permutation(g, spec.degree) for g in spec.generators]
    base = from_generators(spec.degree, base_perms, name=spec.name, caps=caps)
    if spec.action is None:
        lookup = {base.labels[i]: i for i in range(base.order)}
        named = {
            sub_name: subgroup_closure(
                base, [_element_id(base, lookup, g, spec.degree) for g in sub_gens]
            )
            for sub_name, sub_gens in spec.subgroups
        }
        return BuiltGroup(base, named)

    act_spec = spec.action
    acting_perms = [parse_permutation(g, act_spec.degree) for g in act_spec.generators]
    acting = from_generators(act_spec.degree, acting_perms, name=f"{spec.name}-acting", caps=caps)
    base_lookup = {base.labels[i]: i for i in range(base.order)}
    images_by_gen: dict[int, dict[int, int]] = {}
    for gen_i, gen_j, image_str in act_spec.maps:
        if not (1 <= gen_i <= len(act_spec.generators)):
            raise ValidationError(f"map refers to acting generator {gen_i} which does not exist")
        if not (1 <= gen_j <= len(spec.generators)):
            raise ValidationError(f"map refers to base generator {gen_j} which does not exist")
        image_perm = parse_permutation(image_str, spec.degree)
        image_id = base_lookup.get(perm_to_cycles(image_perm))
        if image_id is None:
            raise ValidationError(f"image {image_str!r} is not an element of the base group")
        base_gen_id = base_lookup[perm_to_cycles(base_perms[gen_j - 1])]
        images_by_gen.setdefault(gen_i, {})[base_gen_id] = image_id
    gen_images: dict[int, np.ndarray] = {}
    for gen_i, mapping in images_by_gen.items():
        acting_id = acting.labels.index(perm_to_cycles(acting_perms[gen_i - 1]))
        gen_images[acting_id] = _extend_automorphism(base, mapping)
    action = GroupAction.from_generator_images(acting, base, gen_images)
    product = semidirect_product(base, acting, action, name=spec.name, caps=caps)
    named = {}
    for sub_name, sub_gens in spec.subgroups:
        seeds = []
        for g in sub_gens:
            if "|" not in g:
                raise ValidationError(
                    "subgroups of a semidirect product use 'base-perm | acting-perm'"
                )
            left, right = (part.strip() for part in g.split("|", 1))
            n_id = _element_id(base, base_lookup, left, spec.degree)
            h_id = acting.labels.index(perm_to_cycles(parse_permutation(right, act_spec.degree)))
            seeds.append(n_id * acting.order + h_id)
        named[sub_name] = subgroup_closure(product, seeds)
    return BuiltGroup(product, named)


def _element_id(group: Group, lookup: dict[str, int], perm_text: str, degree: int) -> int:
    canonical = perm_to_cycles(parse_permutation(perm_text, degree))
    if canonical not in lookup:
        raise ValidationError(f"{perm_text!r} is not an element of the group")
    return lookup[canonical]


def _extend_automorphism(base: Group, gen_images: dict[int, int]) -> np.ndarray:
    """Extend an automorphism given on generator ids to all element ids."""
    n = base.order
    alpha = np.full(n, -1, dtype=np.int32)
    alpha[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in gen_images.items():
                y = base.mul(x, g)
                val = base.mul(int(alpha[x]), img)
                if alpha[y] >= 0:
                    if alpha[y] != val:
                        raise ValidationError("generator images do not define an automorphism")
                    continue
                alpha[y] = val
                nxt.append(y)
        frontier = nxt
    if (alpha < 0).any():
        raise ValidationError("generator images do not cover the base group")
    if sorted(int(v) for v in alpha) != list(range(n)):
        raise ValidationError("generator images do not define a bijection")
    return alpha


# -- cocycle files ------------------------------------------------------------------


def _require(payload: dict, key: str, path: str):
    if key not in payload:
        raise SchemaError(f"missing required field {key!r}", f"{path}.{key}" if path else key)
    return payload[key]


def _json_group(payload, path: str, *, caps: Caps, name: str) -> Group:
    if not isinstance(payload, dict):
        raise SchemaError("group spec must be an object", path)
    degree = _require(payload, "degree", path)
    gens = _require(payload, "gens", path)
    if not isinstance(degree, int) or degree <= 0:
        raise SchemaError("degree must be a positive integer", f"{path}.degree")
    if not isinstance(gens, list):
        raise SchemaError("gens must be a list of cycle strings", f"{path}.gens")
    perms = []
    for i, g in enumerate(gens):
        try:
            perms.append(parse_permutation(g, degree))
        except ParseError as exc:
            raise SchemaError(str(exc), f"{path}.gens[{i}]") from exc
    return from_generators(degree, perms, name=payload.get("name", name), caps=caps)


def parse_cocycle_file(text: str, *, caps: Caps | None = None, name: str = "") -> kac_mod.CocycleSystem:
    """Parse the JSON cocycle-system format into a CocycleSystem.

    Schema: {"modulus": m, "N": group spec, "H": group spec, "action": table or
    "trivial", "eta": [[h,n1,n2,exp],...], "xi": [[n,h1,h2,exp],...]}; omitted
    eta/xi entries default to exponent zero.
    """
    caps = caps or default_caps()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}", "$") from exc
    if not isinstance(payload, dict):
        raise SchemaError("top level must be an object", "$")
    modulus = _require(payload, "modulus", "")
    if not isinstance(modulus, int) or modulus <= 0:
        raise SchemaError("modulus must be a positive integer", "modulus")
    n_group = _json_group(_require(payload, "N", ""), "N", caps=caps, name="N")
    h_group = _json_group(_require(payload, "H", ""), "H", caps=caps, name="H")
    action_payload = _require(payload, "action", "")
    if action_payload == "trivial":
        action = GroupAction.trivial(h_group, n_group)
    else:
        if not isinstance(action_payload, list) or len(action_payload) != h_group.order:
            raise SchemaError(f"action table must have {h_group.order} rows", "action")
        for i, row in enumerate(action_payload):
            if not isinstance(row, list) or len(row) != n_group.order:
                raise SchemaError(f"row must have {n_group.order} entries", f"action[{i}]")
        try:
            action = GroupAction(h_group, n_group, np.asarray(action_payload, dtype=np.int32))
        except ValidationError as exc:
            raise SchemaError(str(exc), "action") from exc
    eta = np.zeros((h_group.order, n_group.order, n_group.order), dtype=np.int32)
    for i, entry in enumerate(payload.get("eta", [])):
        h, n1, n2, exp = _cocycle_entry(entry, f"eta[{i}]", h_group.order, n_group.order, n_group.order)
        eta[h, n1, n2] = exp % modulus
    xi = np.zeros((n_group.order, h_group.order, h_group.order), dtype=np.int32)
    for i, entry in enumerate(payload.get("xi", [])):
        n, h1, h2, exp = _cocycle_entry(entry, f"xi[{i}]", n_group.order, h_group.order, h_group.order)
        xi[n, h1, h2] = exp % modulus
    return kac_mod.CocycleSystem(
        n_group, h_group, action, modulus, eta, xi, name=payload.get("name", name)
    )


def _cocycle_entry(entry, path: str, bound0: int, bound1: int, bound2: int):
    if not isinstance(entry, list) or len(entry) != 4 or not all(isinstance(v, int) for v in entry):
        raise SchemaError("entries are [i, j, k, exponent] integer quadruples", path)
    for value, bound, slot in zip(entry[:3], (bound0, bound1, bound2), range(3)):
        if not (0 <= value < bound):
            raise SchemaError(f"index {value} out of range 0..{bound - 1}", f"{path}[{slot}]")
    return entry


def write_cocycle_file(sys: kac_mod.CocycleSystem) -> str:
    payload = {
        "format": FORMAT_VERSION,
        "name": sys.name,
        "modulus": sys.modulus,
        "N": _group_payload(sys.n_group),
        "H": _group_payload(sys.h_group),
        "action": [[int(v) for v in row] for row in sys.action.table],
        "eta": [
            [h, n1, n2, int(sys.eta[h, n1, n2])]
            for h in range(sys.h_group.order)
            for n1 in range(sys.n_group.order)
            for n2 in range(sys.n_group.order)
            if sys.eta[h, n1, n2]
        ],
        "xi": [
            [n, h1, h2, int(sys.xi[n, h1, h2])]
            for n in range(sys.n_group.order)
            for h1 in range(sys.h_group.order)
            for h2 in range(sys.h_group.order)
            if sys.xi[n, h1, h2]
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _group_payload(g: Group) -> dict:
    gens = []
    for gen_id in g.generator_ids():
        gens.append(g.label(gen_id))
    degree = _degree_from_labels(g)
    return {"degree": degree, "gens": gens, "name": g.name}


def _degree_from_labels(g: Group) -> int:
    degree = 1
    for label in g.labels or ():
        for token in label.replace("(", " ").replace(")", " ").split():
            degree = max(degree, int(token))
    return degree


# -- character tables -----------------------------------------------------------------


def parse_character_table(text: str, *, name: str = "") -> CharacterTable:
    """Parse {"conductor": c, "class_sizes": [...], "characters": [[entry,...],...]}.

    Entries are integers or length-c integer coefficient vectors over the
    powers of the primitive c-th root of unity.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}", "$") from exc
    if not isinstance(payload, dict):
        raise SchemaError("top level must be an object", "$")
    conductor = _require(payload, "conductor", "")
    if not isinstance(conductor, int) or conductor <= 0:
        raise SchemaError("conductor must be a positive integer", "conductor")
    sizes = _require(payload, "class_sizes", "")
    if not isinstance(sizes, list) or not all(isinstance(s, int) and s > 0 for s in sizes):
        raise SchemaError("class_sizes must be positive integers", "class_sizes")
    chars = _require(payload, "characters", "")
    if not isinstance(chars, list) or not chars:
        raise SchemaError("characters must be a nonempty list of rows", "characters")
    rows = []
    for i, row in enumerate(chars):
        if not isinstance(row, list) or len(row) != len(sizes):
            raise SchemaError(f"row must have {len(sizes)} entries", f"characters[{i}]")
        entries = []
        for j, entry in enumerate(row):
            if isinstance(entry, int):
                entries.append(Cyc.from_int(entry, conductor))
            elif isinstance(entry, list) and all(isinstance(v, int) for v in entry):
                if len(entry) != conductor:
                    raise SchemaError(
                        f"coefficient vector must have length {conductor}",
                        f"characters[{i}][{j}]",
                    )
                entries.append(Cyc.from_vector(entry, conductor))
            else:
                raise SchemaError(
                    "entries are integers or integer coefficient vectors",
                    f"characters[{i}][{j}]",
                )
        rows.append(tuple(entries))
    return CharacterTable(
        name=payload.get("name", name),
        conductor=conductor,
        class_sizes=tuple(sizes),
        entries=tuple(rows),
    )


# -- reports ----------------------------------------------------------------------------


_REPORT_KINDS: dict[str, type] = {
    "wall": wall_mod.WallReport,
    "relative-wall": wall_mod.WallReport,
    "mod2": wall_mod.Mod2Report,
    "tensor": wall_mod.TensorReport,
    "kac-validate": kac_mod.CocycleValidationReport,
    "kac-wall": kac_mod.KacWallReport,
    "kac-relative": kac_mod.RelativeKacWallReport,
    "fusion": FusionReport,
    "character-bound": kac_mod.CharacterBoundReport,
}

_KIND_OF_TYPE = {
    wall_mod.Mod2Report: "mod2",
    wall_mod.TensorReport: "tensor",
    kac_mod.CocycleValidationReport: "kac-validate",
    kac_mod.KacWallReport: "kac-wall",
    kac_mod.RelativeKacWallReport: "kac-relative",
    FusionReport: "fusion",
    kac_mod.CharacterBoundReport: "character-bound",
}


def report_kind(report) -> str:
    if isinstance(report, wall_mod.WallReport):
        return report.kind
    if isinstance(report, dict):
        return report.get("kind", "generic")
    return _KIND_OF_TYPE[type(report)]


def write_report(report) -> str:
    """Serialize a report deterministically (sorted keys, stable ordering)."""
    if isinstance(report, dict):
        payload = dict(report)
        payload.setdefault("kind", "generic")
    else:
        payload = dataclasses.asdict(report)
        payload["kind"] = report_kind(report)
    payload["schema"] = FORMAT_VERSION
    return json.dumps(_plain(payload), sort_keys=True, indent=2) + "\n"


def parse_report(text: str):
    """Invert write_report: reconstruct the typed report from its JSON."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}", "$") from exc
    if not isinstance(payload, dict) or "kind" not in payload:
        raise SchemaError("missing required field 'kind'", "kind")
    kind = payload.pop("kind")
    payload.pop("schema", None)
    if kind == "generic":
        return payload
    cls = _REPORT_KINDS.get(kind)
    if cls is None:
        raise SchemaError(f"unknown report kind {kind!r}", "kind")
    fields = {f.name: f for f in dataclasses.fields(cls)}
    unknown = set(payload) - set(fields)
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)}", "$")
    coerced = {key: _coerce_tuples(value) for key, value in payload.items()}
    if cls is wall_mod.WallReport:
        coerced["kind"] = kind
    return cls(**coerced)


def _plain(value):
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _coerce_tuples(value):
    if isinstance(value, list):
        return tuple(_coerce_tuples(v) for v in value)
    if isinstance(value, dict):
        return {k: _coerce_tuples(v) for k, v in value.items()}
    return value


def lattice_payload(lattice: kac_mod.CoidealLattice) -> dict:
    """JSON content for a coideal lattice: nodes, cover edges, markers."""
    return {
        "kind": "kac-lattice",
        "name": lattice.sys.name,
        "side": lattice.side,
        "node_count": len(lattice.nodes),
        "dims": [int(d) for d in lattice.dims],
        "nodes": [t.descriptor() for t in lattice.nodes],
        "edges": [[int(i), int(j)] for i, j in lattice.edges],
        "top": int(lattice.top),
        "bottom": int(lattice.bottom),
        "maximal": [int(i) for i in lattice.maximal],
        "minimal": [int(i) for i in lattice.minimal],
    }
