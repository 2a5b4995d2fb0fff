"""Regenerate the fixture corpus under src/walllat/fixtures.

Every file is emitted through the canonical writers in walllat.specio, so the
round-trip tests (parse -> write is byte-identical) hold by construction.
Run from the repository root:  python tools/make_fixtures.py
"""

from __future__ import annotations

import json
import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from walllat.groups import GroupAction, from_generators  # noqa: E402
from walllat.kac import CocycleSystem, validate_cocycle_system  # noqa: E402
from walllat.specio import (  # noqa: E402
    ActionSpec,
    GroupSpec,
    build_group,
    parse_group_spec,
    write_cocycle_file,
    write_group_spec,
)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "walllat" / "fixtures"


def cycle(*points: int) -> str:
    return "(" + " ".join(str(p) for p in points) + ")"


def n_cycle(n: int, offset: int = 0) -> str:
    return cycle(*range(1 + offset, n + 1 + offset))


def reflection(n: int) -> str:
    pairs = [(i + 1, n - i) for i in range(n // 2) if i + 1 < n - i]
    return "".join(cycle(a, b) for a, b in pairs)


def cyclic_spec(n: int, *, subgroups=()) -> GroupSpec:
    return GroupSpec(name=f"c{n}", degree=n, generators=(n_cycle(n),), subgroups=subgroups)


def spec_of(name, degree, gens, subgroups=(), action=None) -> GroupSpec:
    return GroupSpec(name=name, degree=degree, generators=tuple(gens),
                     subgroups=tuple(subgroups), action=action)


def q8_generators() -> tuple[int, list[str]]:
    """Q8 by right translation on itself: elements 1,-1,i,-i,j,-j,k,-k."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    mul_table = {}
    basic = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            out = b
        elif b == "1":
            out = a
        else:
            out = basic[(a, b)]
        if out.startswith("-"):
            sign, out = -sign, out[1:]
        return out if sign > 0 else f"-{out}"

    for a in units:
        for b in units:
            mul_table[(a, b)] = mul(a, b)
    idx = {u: i for i, u in enumerate(units)}
    gens = []
    for g in ("i", "j"):
        perm = [0] * 8
        for a in units:
            perm[idx[a]] = idx[mul_table[(a, g)]]
        gens.append("".join(
            s for s in _perm_cycles(perm)
        ))
    return 8, gens


def _perm_cycles(perm: list[int]) -> list[str]:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append(cycle(*[p + 1 for p in cyc]))
    return parts or ["()"]


def group_specs() -> list[GroupSpec]:
    specs = []
    for n in (2, 3, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24, 30, 48, 60, 100, 128, 200):
        specs.append(cyclic_spec(n))
    specs.append(cyclic_spec(4, subgroups=(("c2", (cycle(1, 3) + cycle(2, 4),)),)))
    for n in (4, 5, 6, 8, 10, 12, 25, 50, 100):
        specs.append(spec_of(f"dih{n}", n, [n_cycle(n), reflection(n)]))
    specs.append(spec_of("s3", 3, [cycle(1, 2), n_cycle(3)]))
    specs.append(spec_of(
        "s4", 4, [cycle(1, 2), n_cycle(4)],
        subgroups=(
            ("a4", (cycle(1, 2, 3), cycle(2, 3, 4))),
            ("c4", (n_cycle(4),)),
            ("d4", (n_cycle(4), cycle(1, 3))),
            ("s3", (cycle(1, 2), cycle(1, 2, 3))),
            ("v4", (cycle(1, 2) + cycle(3, 4), cycle(1, 3) + cycle(2, 4))),
        ),
    ))
    specs.append(spec_of("s5", 5, [cycle(1, 2), n_cycle(5)]))
    specs.append(spec_of("a4", 4, [cycle(1, 2) + cycle(3, 4), cycle(1, 2, 3)]))
    specs.append(spec_of("a5", 5, [cycle(1, 2) + cycle(3, 4), cycle(1, 2, 3, 4, 5)]))
    specs.append(spec_of("c2x2", 4, [cycle(1, 2), cycle(3, 4)]))
    specs.append(spec_of("c2x2x2", 6, [cycle(1, 2), cycle(3, 4), cycle(5, 6)]))
    specs.append(spec_of("c3x3", 6, [n_cycle(3), n_cycle(3, offset=3)]))
    degree, q8_gens = q8_generators()
    specs.append(spec_of("q8", degree, q8_gens))
    specs.append(spec_of(
        "s3xs3", 6,
        [cycle(1, 2), n_cycle(3), cycle(4, 5), n_cycle(3, offset=3)],
        subgroups=(
            ("diag", (cycle(1, 2) + cycle(4, 5), cycle(1, 2, 3) + cycle(4, 5, 6))),
            ("left", (cycle(1, 2), cycle(1, 2, 3))),
        ),
    ))
    specs.append(spec_of(
        "c3byc4", 3, [n_cycle(3)],
        action=ActionSpec(degree=4, generators=(n_cycle(4),),
                          maps=((1, 1, cycle(1, 3, 2)),)),
    ))
    specs.append(spec_of(
        "c7byc3", 7, [n_cycle(7)],
        action=ActionSpec(degree=3, generators=(n_cycle(3),),
                          maps=((1, 1, cycle(1, 3, 5, 7, 2, 4, 6)),)),
    ))
    specs.append(spec_of(
        "c5byc4", 5, [n_cycle(5)],
        action=ActionSpec(degree=4, generators=(n_cycle(4),),
                          maps=((1, 1, cycle(1, 3, 5, 2, 4)),)),
    ))
    return specs


def kac_systems() -> list[CocycleSystem]:
    systems = []
    c3 = from_generators(3, [(1, 2, 0)], name="c3")
    c2 = from_generators(2, [(1, 0)], name="c2")
    inv3 = np.array([c3.invert(n) for n in range(3)], dtype=np.int32)
    act32 = GroupAction.from_generator_images(c2, c3, {1: inv3})
    systems.append(CocycleSystem.trivial(c3, c2, act32, modulus=1, name="c3c2_trivial"))

    c4 = from_generators(4, [(1, 2, 3, 0)], name="c4")
    inv4 = np.array([c4.invert(n) for n in range(4)], dtype=np.int32)
    act42 = GroupAction.from_generator_images(c2, c4, {1: inv4})
    systems.append(CocycleSystem.trivial(c4, c2, act42, modulus=1, name="c4c2_trivial"))

    v4 = from_generators(4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="c2x2")
    coords = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}
    eta = np.zeros((2, 4, 4), dtype=np.int32)
    for n1 in range(4):
        for n2 in range(4):
            eta[1][n1][n2] = coords[n1][0] * coords[n2][1] % 2
    xi0 = np.zeros((4, 2, 2), dtype=np.int32)
    systems.append(CocycleSystem(v4, c2, GroupAction.trivial(c2, v4), 2, eta, xi0,
                                 name="c2sq_c2_eta_m2"))

    h4 = from_generators(4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="c2x2")
    c2n = from_generators(2, [(1, 0)], name="c2")
    xi = np.zeros((2, 4, 4), dtype=np.int32)
    for n in range(2):
        for h1 in range(4):
            for h2 in range(4):
                xi[n][h1][h2] = n * coords[h1][0] * coords[h2][1] % 2
    eta0 = np.zeros((4, 2, 2), dtype=np.int32)
    systems.append(CocycleSystem(c2n, h4, GroupAction.trivial(h4, c2n), 2, eta0, xi,
                                 name="c2_c2sq_xi_m2"))

    # combined: the eta bicharacter plus xi_n(s, s) = first-coordinate character
    xi_comb = np.zeros((4, 2, 2), dtype=np.int32)
    for n in range(4):
        xi_comb[n][1][1] = coords[n][0]
    systems.append(CocycleSystem(v4, c2, GroupAction.trivial(c2, v4), 2, eta, xi_comb,
                                 name="c2sq_c2_etaxi_m2"))
    return systems


def chartables() -> dict[str, dict]:
    def entry(*coeffs):
        return list(coeffs)

    w, w2 = entry(0, 1, 0), entry(0, 0, 1)
    i, mi = entry(0, 1, 0, 0), entry(0, 0, 0, 1)
    return {
        "c2": {"conductor": 1, "class_sizes": [1, 1],
               "characters": [[1, 1], [1, -1]]},
        "c3": {"conductor": 3, "class_sizes": [1, 1, 1],
               "characters": [[1, 1, 1], [1, w, w2], [1, w2, w]]},
        "c4": {"conductor": 4, "class_sizes": [1, 1, 1, 1],
               "characters": [[1, 1, 1, 1], [1, i, -1, mi],
                              [1, -1, 1, -1], [1, mi, -1, i]]},
        "c2x2": {"conductor": 1, "class_sizes": [1, 1, 1, 1],
                 "characters": [[1, 1, 1, 1], [1, 1, -1, -1],
                                [1, -1, 1, -1], [1, -1, -1, 1]]},
        "s3": {"conductor": 1, "class_sizes": [1, 3, 2],
               "characters": [[1, 1, 1], [1, -1, 1], [2, 0, -1]]},
        "q8": {"conductor": 1, "class_sizes": [1, 1, 2, 2, 2],
               "characters": [[1, 1, 1, 1, 1], [1, 1, 1, -1, -1],
                              [1, 1, -1, 1, -1], [1, 1, -1, -1, 1],
                              [2, -2, 0, 0, 0]]},
        "a4": {"conductor": 3, "class_sizes": [1, 3, 4, 4],
               "characters": [[1, 1, 1, 1], [1, 1, w, w2],
                              [1, 1, w2, w], [3, -1, 0, 0]]},
    }


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for spec in group_specs():
        text = write_group_spec(spec)
        parsed = parse_group_spec(text)
        assert parsed == spec, spec.name
        built = build_group(parsed)
        (OUT / f"{spec.name}.grp").write_text(text, encoding="utf-8")
        print(f"{spec.name}.grp: order {built.group.order}")
    for system in kac_systems():
        report = validate_cocycle_system(system)
        assert report.valid, (system.name, report.violations[:3])
        (OUT / f"{system.name}.kac").write_text(write_cocycle_file(system), encoding="utf-8")
        print(f"{system.name}.kac: dim {system.dim}")
    for name, payload in chartables().items():
        payload = {"format": 1, "name": name, **payload}
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
        (OUT / f"chartable_{name}.json").write_text(text, encoding="utf-8")
        print(f"chartable_{name}.json")


if __name__ == "__main__":
    main()
