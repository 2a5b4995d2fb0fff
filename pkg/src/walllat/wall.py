"""Maximal-subgroup counting bounds and exact independence certificates.

Covers four checks on a finite group G:

* the absolute bound: #maximal subgroups < |G|;
* the relative bound: #maximal subgroups over H < #(H,H)-double cosets;
* existence of linearly independent weight-zero invariant vectors, one per
  maximal subgroup in a family, certified by exact integer ranks;
* the product bound: maximal subgroups of X x Y containing neither factor
  number at most (|X|-1)(|Y|-1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from walllat.config import Caps, default_caps
from walllat.errors import CapacityError, ValidationError
from walllat.groups import (
    Group,
    Subgroup,
    direct_product,
    double_coset_count,
    interval_subgroups,
    is_solvable,
    maximal_overgroups,
    subgroup_intersection,
)
from walllat.linalg import ExactMatrix, ExactVector, RationalMatrix, stack_rank


class PermModule:
    """The module of functions on left cosets G/H, with G acting by left translation.

    Points are cosets xH ordered by their minimal element; point 0 is H itself.
    """

    __slots__ = ("group", "point_stab", "cosets", "action", "point_of")

    def __init__(self, group: Group, point_stab: Subgroup):
        if point_stab.parent is not group:
            raise ValidationError("stabilizer does not belong to the group")
        self.group = group
        self.point_stab = point_stab
        h_ids = point_stab.ids_array()
        reps_seen: dict[int, int] = {}
        cosets: list[tuple[int, ...]] = []
        point_of = np.full(group.order, -1, dtype=np.int32)
        for x in range(group.order):
            if point_of[x] >= 0:
                continue
            members = np.unique(group.mult[x, h_ids])
            idx = len(cosets)
            cosets.append(tuple(int(v) for v in members))
            point_of[members] = idx
            reps_seen[int(members[0])] = idx
        self.cosets = tuple(cosets)
        self.point_of = point_of
        reps = np.asarray([c[0] for c in cosets], dtype=np.int32)
        # action[g][i] = index of g * (coset i)
        self.action = point_of[group.mult[:, reps]]

    @property
    def npoints(self) -> int:
        return len(self.cosets)

    def orbits_of(self, k: Subgroup) -> list[tuple[int, ...]]:
        """k-orbits on the points, ordered by minimal point index."""
        gen_perms = [self.action[x] for x in k.generator_ids()]
        seen = [False] * self.npoints
        orbits: list[tuple[int, ...]] = []
        for start in range(self.npoints):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            orbit = [start]
            while stack:
                p = stack.pop()
                for perm in gen_perms:
                    q = int(perm[p])
                    if not seen[q]:
                        seen[q] = True
                        orbit.append(q)
                        stack.append(q)
            orbits.append(tuple(sorted(orbit)))
        return orbits

    def averaging_matrix(self, x: Subgroup) -> RationalMatrix:
        """The projector (1/|X|) sum over X of the translation action, exactly."""
        npts = self.npoints
        num = np.zeros((npts, npts), dtype=np.int64)
        cols = np.arange(npts)
        for g in x.ids:
            num[self.action[g], cols] += 1
        return RationalMatrix.of(num, x.order)


def fixed_space_basis(module: PermModule, k: Subgroup, weight_zero: bool) -> ExactMatrix:
    """An integer basis of the k-fixed subspace of the module (or its weight-zero part).

    The plain fixed space is spanned by orbit indicator vectors.  In the
    weight-zero case row j is |orbit_j| * ones - npoints * indicator_j, with the
    last orbit dropped (the rows sum to zero); the dimension is #orbits - 1.
    """
    orbits = module.orbits_of(k)
    npts = module.npoints
    if not weight_zero:
        rows = []
        for orbit in orbits:
            row = [0] * npts
            for p in orbit:
                row[p] = 1
            rows.append(row)
        return ExactMatrix(rows)
    rows = []
    for orbit in orbits[:-1]:
        size = len(orbit)
        row = [size] * npts
        for p in orbit:
            row[p] -= npts
        rows.append(row)
    return ExactMatrix(rows)


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class WallReport:
    kind: str  # "wall" or "relative-wall"
    group: str
    group_order: int
    maximal_count: int
    bound: int
    holds: bool
    subgroup: tuple | None = None  # (order, member ids) of H for the relative check
    solvable: bool | None = None
    witnesses: tuple | None = None  # descriptors of the maximal subgroups counted


@dataclass(frozen=True)
class Mod2Report:
    group: str
    group_order: int
    family_orders: tuple[int, ...]
    intersection_order: int
    module_dim: int
    holds: bool
    solvable: bool
    witnesses: tuple[ExactVector, ...]
    failed_subset: tuple[int, ...] | None


@dataclass(frozen=True)
class TensorReport:
    x_name: str
    y_name: str
    x_order: int
    y_order: int
    count: int
    bound: int
    holds: bool
    equality: bool
    x_elementary_abelian_2: bool
    y_elementary_abelian_2: bool


# -- checks ----------------------------------------------------------------------


def check_wall(g: Group, *, caps: Caps | None = None) -> WallReport:
    """#maximal subgroups of g versus |g|."""
    if g.order < 2:
        raise ValidationError("the trivial group has no maximal subgroups to count")
    maximals = maximal_overgroups(g, g.trivial_subgroup(), caps=caps)
    count = len(maximals)
    return WallReport(
        kind="wall",
        group=g.name,
        group_order=g.order,
        maximal_count=count,
        bound=g.order,
        holds=count < g.order,
        witnesses=tuple(tuple(s.ids) for s in maximals),
    )


def check_relative_wall(g: Group, h: Subgroup, *, caps: Caps | None = None) -> WallReport:
    """#maximal subgroups of g containing h versus the (h,h)-double-coset count."""
    if h.order == g.order:
        raise ValidationError("h must be a proper subgroup")
    maximals = maximal_overgroups(g, h, caps=caps)
    count = len(maximals)
    bound = double_coset_count(g, h, h)
    return WallReport(
        kind="relative-wall",
        group=g.name,
        group_order=g.order,
        maximal_count=count,
        bound=bound,
        holds=count < bound,
        subgroup=(h.order, tuple(h.ids)),
        solvable=is_solvable(g),
        witnesses=tuple(tuple(s.ids) for s in maximals),
    )


def is_maximal_subgroup(g: Group, k: Subgroup, *, caps: Caps | None = None) -> bool:
    if k.order == g.order:
        return False
    return len(interval_subgroups(g, k, caps=caps)) == 2


_WITNESS_SEARCH_LIMIT = 1_000_000


def check_mod2(g: Group, ks: list[Subgroup], *, caps: Caps | None = None) -> Mod2Report:
    """Independent weight-zero invariant vectors for a family of maximal subgroups.

    Feasibility is decided by the subset-rank condition: for every nonempty
    subfamily S the stacked fixed-space bases must have rank >= |S|.  When it
    holds, witnesses are found by scanning basis rows in canonical order with
    backtracking, then re-verified (invariance, weight zero, exact rank).
    """
    caps = caps or default_caps()
    if not ks:
        raise ValidationError("the family of maximal subgroups must be nonempty")
    if len(ks) > caps.rado_cap:
        raise CapacityError(f"family size {len(ks)} exceeds subset-sweep cap {caps.rado_cap}")
    for k in ks:
        if not is_maximal_subgroup(g, k, caps=caps):
            raise ValidationError("every member of the family must be maximal in g")
    h = g.full_subgroup()
    for k in ks:
        h = subgroup_intersection(h, k)
    module = PermModule(g, h)
    bases = [fixed_space_basis(module, k, weight_zero=True) for k in ks]
    n = len(ks)
    solvable = is_solvable(g)

    def report(holds: bool, witnesses=(), failed=None) -> Mod2Report:
        return Mod2Report(
            group=g.name,
            group_order=g.order,
            family_orders=tuple(k.order for k in ks),
            intersection_order=h.order,
            module_dim=module.npoints,
            holds=holds,
            solvable=solvable,
            witnesses=tuple(witnesses),
            failed_subset=failed,
        )

    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if stack_rank(bases[i] for i in subset) < size:
                return report(False, failed=subset)

    witnesses = _find_witnesses(bases)
    if witnesses is None:
        # cannot happen when the subset condition holds; guard for the search cap
        return report(False, failed=None)
    for i, (k, w) in enumerate(zip(ks, witnesses)):
        if not _is_invariant(module, k, w):
            raise AssertionError(f"witness {i} is not invariant under its subgroup")
        if sum(w) != 0:
            raise AssertionError(f"witness {i} is not weight zero")
    if stack_rank([witnesses]) != n:
        raise AssertionError("witnesses are not linearly independent")
    return report(True, witnesses=witnesses)


def _find_witnesses(bases: list[ExactMatrix]) -> tuple[ExactVector, ...] | None:
    n = len(bases)
    chosen: list[ExactVector] = []
    calls = 0

    def search(i: int) -> bool:
        nonlocal calls
        if i == n:
            return True
        for row in bases[i].rows:
            calls += 1
            if calls > _WITNESS_SEARCH_LIMIT:
                raise CapacityError("witness search exceeded its step limit")
            if stack_rank([chosen + [row]]) == len(chosen) + 1:
                chosen.append(row)
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if search(0) else None


def _is_invariant(module: PermModule, k: Subgroup, vec: ExactVector) -> bool:
    arr = np.asarray(vec, dtype=object)
    for x in k.generator_ids():
        if not np.array_equal(arr[module.action[x]], arr):
            return False
    return True


def check_projector_identity(
    g: Group, n_sub: Subgroup, k_sub: Subgroup, h_sub: Subgroup
) -> bool:
    """Whether averaging over N then over K equals averaging over G on l(H).

    Exact rational matrices; the caller asserts truth exactly when N*K = G as
    element sets (N normal, H <= K required).
    """
    if not h_sub.is_subset_of(k_sub):
        raise ValidationError("h must be contained in k")
    if not n_sub.is_normal():
        raise ValidationError("n must be normal in g")
    module = PermModule(g, h_sub)
    e_n = module.averaging_matrix(n_sub)
    e_k = module.averaging_matrix(k_sub)
    e_g = module.averaging_matrix(g.full_subgroup())
    return (e_n @ e_k).equals(e_g)


def check_tensor_bound(x: Group, y: Group, *, caps: Caps | None = None) -> TensorReport:
    """Maximal subgroups of X x Y containing neither factor, against (|X|-1)(|Y|-1)."""
    if x.order < 2 or y.order < 2:
        raise ValidationError("both factors must be nontrivial")
    g = direct_product(x, y, name=f"{x.name}x{y.name}", caps=caps)
    ny = y.order
    x_mask = 0
    for a in range(x.order):
        x_mask |= 1 << (a * ny)
    y_mask = (1 << ny) - 1
    count = 0
    for m in maximal_overgroups(g, g.trivial_subgroup(), caps=caps):
        contains_x = x_mask & ~m.mask == 0
        contains_y = y_mask & ~m.mask == 0
        if not contains_x and not contains_y:
            count += 1
    bound = (x.order - 1) * (y.order - 1)
    return TensorReport(
        x_name=x.name,
        y_name=y.name,
        x_order=x.order,
        y_order=y.order,
        count=count,
        bound=bound,
        holds=count <= bound,
        equality=count == bound,
        x_elementary_abelian_2=x.is_elementary_abelian_2(),
        y_elementary_abelian_2=y.is_elementary_abelian_2(),
    )
