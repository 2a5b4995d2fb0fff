"""Fusion rings and enumeration of their maximal fusion subalgebras.

A fusion ring is given by nonnegative-integer structure constants over a
finite basis of simple objects with a unit and a dual involution.  The
counting check enumerates subsets of simple objects that contain the unit and
are closed under duals and fusion support, and compares the number of maximal
proper ones against the number of simple objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from walllat.config import Caps, default_caps
from walllat.cyclotomic import Cyc
from walllat.errors import CapacityError, ValidationError
from walllat.groups import Group


@dataclass(frozen=True)
class CharacterTable:
    """An exact character table: entries are cyclotomic numbers of one conductor."""

    name: str
    conductor: int
    class_sizes: tuple[int, ...]
    entries: tuple[tuple[Cyc, ...], ...]

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    @property
    def nrows(self) -> int:
        return len(self.entries)


class FusionRing:
    """Nonnegative-integer structure constants over simple objects 0..n-1."""

    __slots__ = ("n", "unit", "dual", "constants", "name")

    def __init__(self, constants: np.ndarray, unit: int, dual, *, name: str = ""):
        constants = np.ascontiguousarray(constants, dtype=np.int64)
        n = constants.shape[0]
        if constants.shape != (n, n, n):
            raise ValidationError("structure constants must form an n x n x n table")
        if (constants < 0).any():
            raise ValidationError("structure constants must be nonnegative")
        dual = tuple(int(d) for d in dual)
        if sorted(dual) != list(range(n)) or any(dual[dual[i]] != i for i in range(n)):
            raise ValidationError("dual must be an involution on object indices")
        if not (0 <= unit < n):
            raise ValidationError("unit index out of range")
        self.n = n
        self.unit = unit
        self.dual = dual
        self.constants = constants
        self.name = name
        self._validate()

    def _validate(self) -> None:
        n, unit, c = self.n, self.unit, self.constants
        eye = np.eye(n, dtype=np.int64)
        if not np.array_equal(c[unit], eye) or not np.array_equal(c[:, unit, :], eye):
            raise ValidationError("the unit must fuse as the identity")
        for i in range(n):
            expected = np.zeros(n, dtype=np.int64)
            expected[self.dual[i]] = 1
            if not np.array_equal(c[i, :, unit], expected):
                raise ValidationError("duals must pair to the unit with multiplicity one")
        # associativity: sum_t N[i,j,t] N[t,k,l] == sum_t N[j,k,t] N[i,t,l]
        left = np.einsum("ijt,tkl->ijkl", c, c)
        right = np.einsum("jkt,itl->ijkl", c, c)
        if not np.array_equal(left, right):
            raise ValidationError("structure constants are not associative")

    def support(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(int(k) for k in np.nonzero(self.constants[i, j])[0])

    def __repr__(self) -> str:
        return f"FusionRing({self.name or 'ring'}, n={self.n})"


def from_group(g: Group) -> FusionRing:
    """The group ring: objects are elements, fusion is multiplication, duals inverses."""
    n = g.order
    constants = np.zeros((n, n, n), dtype=np.int64)
    rows = np.repeat(np.arange(n), n)
    cols = np.tile(np.arange(n), n)
    constants[rows, cols, g.mult[rows, cols]] = 1
    return FusionRing(constants, unit=0, dual=[g.invert(x) for x in range(n)], name=g.name)


def from_character_table(table: CharacterTable) -> FusionRing:
    """The representation ring: multiplicities from exact character inner products.

    Rejects tables whose rows are not orthonormal under the class-size inner
    product, and tables producing non-integer or negative multiplicities.
    """
    r = table.nrows
    if any(len(row) != len(table.class_sizes) for row in table.entries):
        raise ValidationError("table rows must match the number of classes")
    if r != len(table.class_sizes):
        raise ValidationError("a full character table must be square")
    order = table.group_order

    def inner(u: tuple[Cyc, ...], v: tuple[Cyc, ...]) -> Fraction:
        acc = Cyc.zero(table.conductor)
        for size, a, b in zip(table.class_sizes, u, v):
            acc = acc + (a * b.conjugate()).scale(size)
        return acc.as_fraction() / order

    for i in range(r):
        for j in range(r):
            try:
                value = inner(table.entries[i], table.entries[j])
            except ArithmeticError as exc:
                raise ValidationError(f"row inner product ({i},{j}) is irrational") from exc
            if value != (1 if i == j else 0):
                raise ValidationError(f"rows {i} and {j} are not orthonormal")

    unit = None
    one = Cyc.from_int(1, table.conductor)
    for i, row in enumerate(table.entries):
        if all(entry.equals(one) for entry in row):
            unit = i
            break
    if unit is None:
        raise ValidationError("no trivial character row found")

    dual = []
    for i, row in enumerate(table.entries):
        conj_row = tuple(entry.conjugate() for entry in row)
        match = None
        for j, other in enumerate(table.entries):
            if all(a.equals(b) for a, b in zip(conj_row, other)):
                match = j
                break
        if match is None:
            raise ValidationError(f"conjugate of row {i} is not in the table")
        dual.append(match)

    constants = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        for j in range(r):
            product = tuple(a * b for a, b in zip(table.entries[i], table.entries[j]))
            for k in range(r):
                try:
                    mult = inner(product, table.entries[k])
                except ArithmeticError as exc:
                    raise ValidationError(
                        f"multiplicity ({i},{j},{k}) is irrational"
                    ) from exc
                if mult.denominator != 1 or mult < 0:
                    raise ValidationError(
                        f"multiplicity ({i},{j},{k}) = {mult} is not a nonnegative integer"
                    )
                constants[i, j, k] = int(mult)
    return FusionRing(constants, unit=unit, dual=dual, name=table.name)


@dataclass(frozen=True)
class FusionReport:
    name: str
    n: int
    count: int
    holds: bool
    subsets: tuple[tuple[int, ...], ...]


def fusion_closure(ring: FusionRing, seed) -> tuple[int, ...]:
    """Smallest subset containing the seed and unit, closed under duals and fusion support."""
    members = set(int(s) for s in seed)
    members.add(ring.unit)
    changed = True
    while changed:
        changed = False
        for i in list(members):
            d = ring.dual[i]
            if d not in members:
                members.add(d)
                changed = True
        for i in list(members):
            for j in list(members):
                for k in ring.support(i, j):
                    if k not in members:
                        members.add(k)
                        changed = True
    return tuple(sorted(members))


def maximal_fusion_subalgebras(ring: FusionRing, *, caps: Caps | None = None) -> FusionReport:
    """Count the maximal proper fusion subalgebras generated by simple objects."""
    caps = caps or default_caps()
    if ring.n > caps.fusion_cap:
        raise CapacityError(f"{ring.n} objects exceed the enumeration cap {caps.fusion_cap}")
    base = fusion_closure(ring, [])
    seen = {base}
    queue = [base]
    while queue:
        current = queue.pop()
        outside = [x for x in range(ring.n) if x not in current]
        for x in outside:
            bigger = fusion_closure(ring, current + (x,))
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    full = tuple(range(ring.n))
    proper = [s for s in seen if s != full]
    maximal = [
        s
        for s in proper
        if not any(o != s and set(s) < set(o) for o in proper)
    ]
    maximal.sort()
    return FusionReport(
        name=ring.name,
        n=ring.n,
        count=len(maximal),
        holds=len(maximal) < ring.n,
        subsets=tuple(maximal),
    )
