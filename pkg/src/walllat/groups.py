"""Exact finite groups: Cayley tables, subgroups, intervals, cosets, solvability.

Conventions used throughout the package:

* elements are ids ``0..order-1`` and id ``0`` is the identity;
* permutations are tuples ``p`` with ``p[i]`` the 0-based image of point ``i``,
  and products compose right-to-left: ``(a*b)[i] = a[b[i]]``;
* subgroups are bitmasks over element ids, tied to their parent group.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

import numpy as np

from walllat import kernels
from walllat.config import Caps, default_caps
from walllat.errors import CapacityError, ValidationError

Perm = tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    """Right-to-left composition: apply b, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, image in enumerate(a):
        out[image] = i
    return tuple(out)


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


class Group:
    """A finite group materialized as a Cayley table.

    Immutable after construction.  ``mult`` and ``inv`` are int32 arrays;
    ``labels`` are optional display strings per element.
    """

    __slots__ = ("order", "mult", "inv", "labels", "name", "_gens", "_orders")

    identity = 0

    def __init__(
        self,
        mult: np.ndarray,
        *,
        name: str = "",
        labels: tuple[str, ...] | None = None,
        caps: Caps | None = None,
        validate: bool = True,
    ):
        caps = caps or default_caps()
        mult = np.ascontiguousarray(mult, dtype=np.int32)
        if mult.ndim != 2 or mult.shape[0] != mult.shape[1]:
            raise ValidationError("multiplication table must be square")
        n = int(mult.shape[0])
        if n == 0:
            raise ValidationError("group must contain an identity element")
        if n > caps.order_cap:
            raise CapacityError(f"group order {n} exceeds order cap {caps.order_cap}")
        self.order = n
        self.mult = mult
        self.mult.setflags(write=False)
        if labels is not None and len(labels) != n:
            raise ValidationError("labels length does not match group order")
        self.labels = labels
        self.name = name
        self._gens: tuple[int, ...] | None = None
        self._orders: np.ndarray | None = None
        if validate:
            self._validate(caps)
        inv = np.full(n, -1, dtype=np.int32)
        rows, cols = np.nonzero(mult == 0)
        inv[rows] = cols
        if (inv < 0).any():
            raise ValidationError("some element has no inverse")
        self.inv = inv
        self.inv.setflags(write=False)

    def _validate(self, caps: Caps) -> None:
        n = self.order
        m = self.mult
        if m.min() < 0 or m.max() >= n:
            raise ValidationError("table entries out of range")
        ids = np.arange(n, dtype=np.int32)
        if not (np.array_equal(m[0], ids) and np.array_equal(m[:, 0], ids)):
            raise ValidationError("element 0 is not a two-sided identity")
        if not (np.array_equal(np.sort(m, axis=0), ids[:, None].repeat(n, 1))
                and np.array_equal(np.sort(m, axis=1), ids[None, :].repeat(n, 0))):
            raise ValidationError("multiplication table is not a Latin square")
        if n <= caps.assoc_cap:
            bad = kernels.assoc_violation(m)
            if bad >= 0:
                a, rest = divmod(bad, n * n)
                b, c = divmod(rest, n)
                raise ValidationError(f"associativity fails on triple ({a}, {b}, {c})")
        else:
            rng = random.Random(caps.seed)
            for _ in range(caps.assoc_samples):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if m[m[a, b], c] != m[a, m[b, c]]:
                    raise ValidationError(f"associativity fails on triple ({a}, {b}, {c})")

    # -- element-level helpers -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def invert(self, a: int) -> int:
        return int(self.inv[a])

    def conj(self, a: int, x: int) -> int:
        """x * a * x^-1."""
        return int(self.mult[self.mult[x, a], self.inv[x]])

    def element_order(self, a: int) -> int:
        if self._orders is None:
            orders = np.ones(self.order, dtype=np.int64)
            for x in range(self.order):
                y, k = x, 1
                while y != 0:
                    y = int(self.mult[y, x])
                    k += 1
                orders[x] = k
            self._orders = orders
        return int(self._orders[a])

    def exponent(self) -> int:
        out = 1
        for x in range(self.order):
            o = self.element_order(x)
            out = out * o // gcd(out, o)
        return out

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def is_elementary_abelian_2(self) -> bool:
        return self.is_abelian() and all(self.element_order(x) <= 2 for x in range(self.order))

    def generator_ids(self) -> tuple[int, ...]:
        """A small (greedy) generating set of element ids."""
        if self._gens is None:
            self._gens = _greedy_generators(self.mult, range(self.order))
        return self._gens

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, 1)

    def full_subgroup(self) -> Subgroup:
        return Subgroup(self, (1 << self.order) - 1)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        tag = self.name or "group"
        return f"Group({tag}, order={self.order})"


class Subgroup:
    """A subgroup of a parent :class:`Group`, stored as a bitmask of element ids."""

    __slots__ = ("parent", "mask", "ids", "_gens")

    def __init__(self, parent: Group, mask: int, *, validate: bool = False):
        self.parent = parent
        self.mask = mask
        self.ids = _mask_to_ids(mask)
        self._gens: tuple[int, ...] | None = None
        if not mask & 1:
            raise ValidationError("subgroup must contain the identity")
        if validate:
            mult = parent.mult
            for a in self.ids:
                row = mult[a, self.ids]
                for value in row:
                    if not (mask >> int(value)) & 1:
                        raise ValidationError("set is not closed under multiplication")
        if parent.order % len(self.ids) != 0:
            raise ValidationError("subgroup size does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.ids)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def contains(self, element: int) -> bool:
        return bool((self.mask >> element) & 1)

    def ids_array(self) -> np.ndarray:
        return np.asarray(self.ids, dtype=np.int32)

    def generator_ids(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _greedy_generators(self.parent.mult, self.ids)
        return self._gens

    def is_subset_of(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def is_normal(self) -> bool:
        g = self.parent
        for x in g.generator_ids():
            conj_mask = 0
            for a in self.ids:
                conj_mask |= 1 << g.conj(a, x)
            if conj_mask != self.mask:
                return False
        return True

    def exponent(self) -> int:
        out = 1
        for a in self.ids:
            o = self.parent.element_order(a)
            out = out * o // gcd(out, o)
        return out

    def descriptor(self) -> dict:
        """JSON-friendly canonical description."""
        out = {"order": self.order, "member_ids": list(self.ids)}
        if self.parent.labels is not None:
            out["members"] = [self.parent.labels[i] for i in self.ids]
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r})"


@dataclass(frozen=True)
class GroupAction:
    """An action of ``acting`` on ``target`` by automorphisms.

    ``table[h][n]`` is the image of target element ``n`` under the automorphism
    attached to acting element ``h``; for the semidirect-product conjugation
    action this is ``h * n * h^-1``.
    """

    acting: Group
    target: Group
    table: np.ndarray

    def __post_init__(self) -> None:
        table = np.ascontiguousarray(self.table, dtype=np.int32)
        object.__setattr__(self, "table", table)
        h, n = self.acting.order, self.target.order
        if table.shape != (h, n):
            raise ValidationError("action table has wrong shape")
        ids = np.arange(n, dtype=np.int32)
        if not np.array_equal(table[0], ids):
            raise ValidationError("identity must act as the identity automorphism")
        mult_n = self.target.mult
        for x in range(h):
            row = table[x]
            if not np.array_equal(np.sort(row), ids):
                raise ValidationError(f"action of element {x} is not a bijection")
            if not np.array_equal(row[mult_n], mult_n[np.ix_(row, row)]):
                raise ValidationError(f"action of element {x} is not an automorphism")
        mult_h = self.acting.mult
        for x in range(h):
            for y in range(h):
                if not np.array_equal(table[mult_h[x, y]], table[x][table[y]]):
                    raise ValidationError("action table is not a homomorphism")

    @staticmethod
    def trivial(acting: Group, target: Group) -> GroupAction:
        table = np.tile(np.arange(target.order, dtype=np.int32), (acting.order, 1))
        return GroupAction(acting, target, table)

    @staticmethod
    def from_generator_images(
        acting: Group, target: Group, images: dict[int, np.ndarray]
    ) -> GroupAction:
        """Extend automorphisms given on generators of ``acting`` to the whole group.

        ``images[h]`` must be a full permutation of the target's element ids for
        each h in a generating set of ``acting``.
        """
        n = target.order
        table = np.full((acting.order, n), -1, dtype=np.int32)
        table[0] = np.arange(n, dtype=np.int32)
        filled = np.zeros(acting.order, dtype=bool)
        filled[0] = True
        gens = {int(h): np.asarray(p, dtype=np.int32) for h, p in images.items()}
        frontier = [0]
        while frontier:
            nxt: list[int] = []
            for x in frontier:
                for h, perm in gens.items():
                    y = acting.mul(x, h)
                    composed = table[x][perm]  # alpha(x*h) = alpha(x) o alpha(h)
                    if filled[y]:
                        if not np.array_equal(table[y], composed):
                            raise ValidationError("generator images are inconsistent")
                        continue
                    table[y] = composed
                    filled[y] = True
                    nxt.append(y)
            frontier = nxt
        if not filled.all():
            raise ValidationError("generator images do not generate the acting group")
        return GroupAction(acting, target, table)


# -- constructors ---------------------------------------------------------------


def from_generators(
    degree: int,
    gens: list[Perm],
    *,
    name: str = "",
    caps: Caps | None = None,
) -> Group:
    """Closure of permutation generators on {1..degree} (0-based internally).

    Element 0 is the identity; ids follow breadth-first generation order, with
    generators applied on the right in input order.
    """
    caps = caps or default_caps()
    if degree <= 0:
        raise ValidationError("degree must be positive")
    for p in gens:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise ValidationError(f"{p!r} is not a permutation on {degree} points")
    ident = identity_perm(degree)
    elements: list[Perm] = [ident]
    index: dict[Perm, int] = {ident: 0}
    queue = [ident]
    while queue:
        nxt: list[Perm] = []
        for x in queue:
            for g in gens:
                y = compose(x, g)
                if y not in index:
                    if len(elements) >= caps.order_cap:
                        raise CapacityError(
                            f"generated group exceeds order cap {caps.order_cap}"
                        )
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        queue = nxt
    n = len(elements)
    mult = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mult[i, j] = index[compose(a, b)]
    labels = tuple(perm_to_cycles(p) for p in elements)
    group = Group(mult, name=name, labels=labels, caps=caps)
    # remember the construction generators verbatim: regenerating from them
    # reproduces identical element ids, which id-indexed files rely on
    group._gens = tuple(index[g] for g in gens)
    return group


def semidirect_product(
    n: Group, h: Group, act: GroupAction, *, name: str = "", caps: Caps | None = None
) -> Group:
    """Semidirect product on pairs (a, x) with (a,x)(b,y) = (a * act[x](b), x*y).

    Element ids are lexicographic in (a, x); the trivial action gives the
    direct product.
    """
    caps = caps or default_caps()
    if act.acting is not h or act.target is not n:
        raise ValidationError("action must map the given h onto the given n")
    order = n.order * h.order
    if order > caps.order_cap:
        raise CapacityError(f"product order {order} exceeds order cap {caps.order_cap}")
    nh = h.order
    table = act.table
    b_idx, y_idx = np.divmod(np.arange(order), nh)
    mult = np.empty((order, order), dtype=np.int32)
    # (a, x) * (b, y) = (a * act[x](b), x * y)
    for left in range(order):
        a, x = divmod(left, nh)
        acted_b = table[x][b_idx]
        mult[left] = n.mult[a, acted_b] * nh + h.mult[x, y_idx]
    labels = None
    if n.labels is not None and h.labels is not None:
        labels = tuple(
            f"({n.labels[a]}|{h.labels[x]})" for a in range(n.order) for x in range(nh)
        )
    return Group(mult, name=name, labels=labels, caps=caps)


def direct_product(x: Group, y: Group, *, name: str = "", caps: Caps | None = None) -> Group:
    """Direct product X x Y: the semidirect product along the trivial action.

    Element ids are lexicographic in (x, y); the factors embed as (x, e), (e, y).
    """
    return semidirect_product(x, y, GroupAction.trivial(y, x), name=name, caps=caps)


# -- subgroup machinery -----------------------------------------------------------


def subgroup_closure(g: Group, seed) -> Subgroup:
    """Smallest subgroup of g containing ``seed`` (a set of element ids)."""
    seed_ids = sorted(set(int(s) for s in seed))
    for s in seed_ids:
        if not 0 <= s < g.order:
            raise ValidationError(f"seed element {s} out of range")
    flags = kernels.closure_flags(g.mult, seed_ids)
    return Subgroup(g, _flags_to_mask(flags))


def interval_subgroups(g: Group, h: Subgroup, *, caps: Caps | None = None) -> list[Subgroup]:
    """All subgroups K with h <= K <= g, in canonical order.

    Canonical order is ascending subgroup order with ties broken by the sorted
    id tuple.  Upward breadth-first closure with bitmask memoization.
    """
    caps = caps or default_caps()
    if h.parent is not g:
        raise ValidationError("subgroup does not belong to the given group")
    if g.order > caps.interval_cap:
        raise CapacityError(
            f"interval enumeration needs order <= {caps.interval_cap}, got {g.order}"
        )
    mult = g.mult
    base = subgroup_closure(g, h.ids).mask
    seen = {base}
    queue = [base]
    while queue:
        mask = queue.pop()
        members = _mask_to_ids(mask)
        member_arr = np.asarray(members, dtype=np.int32)
        outside = [x for x in range(g.order) if not (mask >> x) & 1]
        for x in outside:
            # restrict to coset-minimal representatives: x = min(x*K)
            if int(mult[x, member_arr].min()) < x:
                continue
            bigger = kernels.closure_flags(mult, members + (x,))
            bmask = _flags_to_mask(bigger)
            if bmask not in seen:
                seen.add(bmask)
                queue.append(bmask)
    subs = [Subgroup(g, mask) for mask in seen]
    subs.sort(key=lambda s: (s.order, s.ids))
    return subs


def maximal_overgroups(g: Group, h: Subgroup, *, caps: Caps | None = None) -> list[Subgroup]:
    """Maximal subgroups of g that contain h (and are proper)."""
    if h.order == g.order:
        raise ValidationError("h must be a proper subgroup")
    interval = interval_subgroups(g, h, caps=caps)
    return maximal_members([s for s in interval if s.order < g.order])


def minimal_overgroups(g: Group, h: Subgroup, *, caps: Caps | None = None) -> list[Subgroup]:
    """Minimal elements of the interval strictly above h.

    Computed directly as minimal members among the closures <h, x> for x not
    in h; no full interval enumeration is needed.
    """
    if h.order == g.order:
        raise ValidationError("h must be a proper subgroup")
    candidates: dict[int, Subgroup] = {}
    for x in range(g.order):
        if h.contains(x):
            continue
        sub = subgroup_closure(g, h.ids + (x,))
        candidates[sub.mask] = sub
    return minimal_members(list(candidates.values()))


def maximal_members(subs: list[Subgroup]) -> list[Subgroup]:
    out = [
        s
        for s in subs
        if not any(o is not s and s.mask & ~o.mask == 0 for o in subs)
    ]
    out.sort(key=lambda s: (s.order, s.ids))
    return out


def minimal_members(subs: list[Subgroup]) -> list[Subgroup]:
    out = [
        s
        for s in subs
        if not any(o is not s and o.mask & ~s.mask == 0 for o in subs)
    ]
    out.sort(key=lambda s: (s.order, s.ids))
    return out


def double_cosets(g: Group, a: Subgroup, b: Subgroup) -> list[tuple[int, ...]]:
    """The partition of g into double cosets a*x*b, ordered by minimal element."""
    labels = kernels.double_coset_labels(g.mult, a.ids_array(), b.ids_array())
    buckets: dict[int, list[int]] = {}
    for x in range(g.order):
        buckets.setdefault(int(labels[x]), []).append(x)
    return [tuple(buckets[k]) for k in sorted(buckets)]


def double_coset_count(g: Group, a: Subgroup, b: Subgroup) -> int:
    labels = kernels.double_coset_labels(g.mult, a.ids_array(), b.ids_array())
    return int(np.unique(labels).size)


def commutator_subgroup(g: Group, k: Subgroup) -> Subgroup:
    """The subgroup generated by commutators of elements of k."""
    ids = k.ids_array()
    mult, inv = g.mult, g.inv
    a_grid, b_grid = np.meshgrid(ids, ids, indexing="ij")
    a_flat, b_flat = a_grid.ravel(), b_grid.ravel()
    comms = mult[mult[inv[a_flat], inv[b_flat]], mult[a_flat, b_flat]]
    return subgroup_closure(g, np.unique(comms))


def is_solvable(g: Group) -> bool:
    """True iff the derived series reaches the trivial subgroup."""
    current = g.full_subgroup()
    while current.order > 1:
        derived = commutator_subgroup(g, current)
        if derived.order == current.order:
            return False
        current = derived
    return True


def core_of(g: Group, k: Subgroup) -> Subgroup:
    """Largest normal subgroup of g contained in k (intersection of conjugates)."""
    mask = k.mask
    ids = k.ids_array()
    mult, inv = g.mult, g.inv
    for x in range(g.order):
        conj = mult[mult[x, ids], inv[x]]
        conj_mask = 0
        for value in conj:
            conj_mask |= 1 << int(value)
        mask &= conj_mask
        if mask == 1:
            break
    return Subgroup(g, _core_close(g, mask))


def _core_close(g: Group, mask: int) -> int:
    # An intersection of subgroups is a subgroup; closure is a cheap sanity net.
    return subgroup_closure(g, _mask_to_ids(mask)).mask


def normal_subgroups(g: Group, *, caps: Caps | None = None) -> list[Subgroup]:
    """All normal subgroups, from the full subgroup list."""
    return [s for s in interval_subgroups(g, g.trivial_subgroup(), caps=caps) if s.is_normal()]


def conjugacy_classes(g: Group) -> list[tuple[int, ...]]:
    """Conjugacy classes ordered by minimal member; the identity class is first."""
    mult, inv = g.mult, g.inv
    all_ids = np.arange(g.order, dtype=np.int32)
    seen = np.zeros(g.order, dtype=bool)
    classes: list[tuple[int, ...]] = []
    for x in range(g.order):
        if seen[x]:
            continue
        cls = np.unique(mult[mult[all_ids, x], inv[all_ids]])
        seen[cls] = True
        classes.append(tuple(int(v) for v in cls))
    return classes


def subgroup_intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.parent is not b.parent:
        raise ValidationError("subgroups belong to different groups")
    return Subgroup(a.parent, a.mask & b.mask)


def subgroup_product_is_group(g: Group, a: Subgroup, b: Subgroup) -> bool:
    """True iff the product set a*b equals g (used for projector-identity oracles)."""
    return product_set_size(g, a, b) == g.order


def product_set_size(g: Group, a: Subgroup, b: Subgroup) -> int:
    prods = np.unique(g.mult[np.ix_(a.ids_array(), b.ids_array())])
    return int(prods.size)


def materialize_subgroup(g: Group, h: Subgroup, *, name: str = "") -> tuple[Group, dict[int, int]]:
    """Reindex a subgroup as a standalone Group; returns it plus old->new id map."""
    ids = list(h.ids)
    pos = {old: new for new, old in enumerate(ids)}
    n = len(ids)
    mult = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(ids):
        for j, b in enumerate(ids):
            mult[i, j] = pos[g.mul(a, b)]
    labels = tuple(g.label(a) for a in ids) if g.labels is not None else None
    return Group(mult, name=name or f"{g.name}-sub{h.order}", labels=labels), pos


# -- small helpers -----------------------------------------------------------------


def _mask_to_ids(mask: int) -> tuple[int, ...]:
    out = []
    x = mask
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def _flags_to_mask(flags: np.ndarray) -> int:
    mask = 0
    for i in np.flatnonzero(flags):
        mask |= 1 << int(i)
    return mask


def _greedy_generators(mult: np.ndarray, members) -> tuple[int, ...]:
    member_list = [int(m) for m in members]
    target = set(member_list)
    gens: list[int] = []
    have = {0}
    for x in member_list:
        if x in have:
            continue
        gens.append(x)
        flags = kernels.closure_flags(mult, gens)
        have = set(int(i) for i in np.flatnonzero(flags))
        if have == target:
            break
    return tuple(gens)


def perm_to_cycles(p: Perm) -> str:
    """Cycle-notation string with 1-based points; identity renders as "()"."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(parts) if parts else "()"
