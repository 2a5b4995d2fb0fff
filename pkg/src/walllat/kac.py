"""Crossed-product Kac algebras L(N) x H with exact phase cocycles.

The algebra is described by a semidirect product G = N x| H together with two
root-of-unity cocycle tables eta_h(n1, n2) and xi_n(h1, h2) (exponents mod a
declared modulus).  Right coideal subalgebras are classified by triples
(N1, H1, lambda): a subgroup of N, a subgroup of H normalizing it, and a phase
table on N1 x H1 satisfying two multiplicative relations.  This module
enumerates the coideal lattice, materializes the eigenvector spaces behind
each coideal, and checks the counting bounds against the dimension of the
second commutant.

Conventions (recorded in every validation report):

* ``n^h`` means ``h^-1 n h``; the action table stores ``h n h^-1``.
* the second lambda relation reads lambda(n, h1*h2) =
  lambda(n, h1) + lambda(n^h1, h2) + xi_n(h1, h2)   ["lambdaeq-h2"].
* the pentagon constraint is eta_h1(n, m) + eta_h2(n^h1, m^h1)
  - eta_{h1h2}(n, m) = xi_{nm}(h1, h2) - xi_n(h1, h2) - xi_m(h1, h2)
  ["pentagon-closure"]; the variant with second argument conjugated by h2 and
  denominator eta_h1 is available as mode="printed".
* operators: (L_{n,h} f)(m) = f(nm) * w^eta_h(n, m) and
  (R_{n,h} f)(m) = f(mn) * w^eta_h(m, n); with these, composition satisfies
  L_{n1} L_{n2} = w^eta_h(n2, n1) L_{n2 n1},
  R_{n1} R_{n2} = w^eta_h(n1, n2) R_{n1 n2}, and L and R commute.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from walllat.config import Caps, default_caps
from walllat.errors import CapacityError, ValidationError
from walllat.groups import (
    Group,
    GroupAction,
    Subgroup,
    double_coset_count,
    interval_subgroups,
    is_solvable,
    materialize_subgroup,
)
from walllat.phases import Phase, lift_exponent

CONVENTIONS = ("lambdaeq-h2", "pentagon-closure")

_LAMBDA_CANDIDATE_CAP = 1_000_000


# -- cocycle systems ---------------------------------------------------------------


class CocycleSystem:
    """Cocycle data (eta, xi) over G = N x| H, with exponents mod ``modulus``."""

    __slots__ = ("n_group", "h_group", "action", "modulus", "eta", "xi", "conj", "name")

    def __init__(
        self,
        n_group: Group,
        h_group: Group,
        action: GroupAction,
        modulus: int,
        eta: np.ndarray,
        xi: np.ndarray,
        *,
        name: str = "",
    ):
        if modulus <= 0:
            raise ValidationError("modulus must be positive")
        if action.acting is not h_group or action.target is not n_group:
            raise ValidationError("action must be an action of H on N")
        nn, nh = n_group.order, h_group.order
        eta = np.ascontiguousarray(eta, dtype=np.int32) % modulus
        xi = np.ascontiguousarray(xi, dtype=np.int32) % modulus
        if eta.shape != (nh, nn, nn):
            raise ValidationError("eta table must have shape (|H|, |N|, |N|)")
        if xi.shape != (nn, nh, nh):
            raise ValidationError("xi table must have shape (|N|, |H|, |H|)")
        self.n_group = n_group
        self.h_group = h_group
        self.action = action
        self.modulus = modulus
        self.eta = eta
        self.xi = xi
        self.name = name
        # conj[h][n] = h^-1 n h, the inverse permutation of the action table row
        conj = np.empty((nh, nn), dtype=np.int32)
        for h in range(nh):
            conj[h] = action.table[h_group.invert(h)]
        self.conj = conj

    @property
    def dim(self) -> int:
        return self.n_group.order * self.h_group.order

    def lift(self, exponent: int, target_modulus: int) -> int:
        return lift_exponent(int(exponent), self.modulus, target_modulus)

    @staticmethod
    def trivial(
        n_group: Group, h_group: Group, action: GroupAction | None = None, *, modulus: int = 1,
        name: str = "",
    ) -> "CocycleSystem":
        action = action or GroupAction.trivial(h_group, n_group)
        eta = np.zeros((h_group.order, n_group.order, n_group.order), dtype=np.int32)
        xi = np.zeros((n_group.order, h_group.order, h_group.order), dtype=np.int32)
        return CocycleSystem(n_group, h_group, action, modulus, eta, xi, name=name)


@dataclass(frozen=True)
class CocycleValidationReport:
    valid: bool
    violations: tuple[tuple, ...]  # (family, indices...) per violated instance
    conventions: tuple[str, ...]
    pentagon_mode: str

    def family_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for v in self.violations:
            out[v[0]] = out.get(v[0], 0) + 1
        return out


def validate_cocycle_system(sys: CocycleSystem, *, pentagon_mode: str = "closure") -> CocycleValidationReport:
    """Exhaustively check the cocycle identities, the pentagon constraint,
    and the normalizations; every violated instance is listed."""
    if pentagon_mode not in ("closure", "printed"):
        raise ValidationError("pentagon_mode must be 'closure' or 'printed'")
    m = sys.modulus
    mult_n = sys.n_group.mult
    mult_h = sys.h_group.mult
    eta, xi, conj = sys.eta, sys.xi, sys.conj
    violations: list[tuple] = []

    for h in range(sys.h_group.order):
        e = eta[h].astype(np.int64)
        lhs = e[:, :, None] + e[mult_n, :]
        rhs = e[:, mult_n] + e[None, :, :]
        bad = np.argwhere((lhs - rhs) % m != 0)
        for n1, n2, n3 in bad:
            violations.append(("eta-cocycle", h, int(n1), int(n2), int(n3)))

    for n in range(sys.n_group.order):
        x = xi[n].astype(np.int64)
        lhs = x[mult_h, :] + x[:, :, None]
        rhs = x[:, mult_h] + x[None, :, :]
        bad = np.argwhere((lhs - rhs) % m != 0)
        for h1, h2, h3 in bad:
            violations.append(("xi-cocycle", int(n), int(h1), int(h2), int(h3)))

    for h1 in range(sys.h_group.order):
        for h2 in range(sys.h_group.order):
            c1 = conj[h1]
            if pentagon_mode == "closure":
                lhs = (
                    eta[h1].astype(np.int64)
                    + eta[h2][np.ix_(c1, c1)]
                    - eta[mult_h[h1, h2]]
                )
            else:
                lhs = eta[h2][np.ix_(c1, conj[h2])].astype(np.int64)
            col = xi[:, h1, h2].astype(np.int64)
            rhs = col[mult_n] - col[:, None] - col[None, :]
            bad = np.argwhere((lhs - rhs) % m != 0)
            for n, mm in bad:
                violations.append(("pentagon", h1, h2, int(n), int(mm)))

    if np.any(eta[:, 0, :] % m) or np.any(eta[:, :, 0] % m) or np.any(eta[0] % m):
        bad = np.argwhere(eta % m != 0)
        for h, n1, n2 in bad:
            if h == 0 or n1 == 0 or n2 == 0:
                violations.append(("eta-normalization", int(h), int(n1), int(n2)))
    if np.any(xi[:, 0, :] % m) or np.any(xi[:, :, 0] % m):
        bad = np.argwhere(xi % m != 0)
        for n, h1, h2 in bad:
            if h1 == 0 or h2 == 0:
                violations.append(("xi-normalization", int(n), int(h1), int(h2)))

    return CocycleValidationReport(
        valid=not violations,
        violations=tuple(violations),
        conventions=CONVENTIONS,
        pentagon_mode=pentagon_mode,
    )


class KacAlgebra:
    """A validated cocycle system, ready for coideal enumeration."""

    __slots__ = ("sys",)

    def __init__(self, sys: CocycleSystem, *, validated: bool = False):
        if not validated:
            report = validate_cocycle_system(sys)
            if not report.valid:
                raise ValidationError(
                    f"cocycle system is invalid: {len(report.violations)} violations, "
                    f"first {report.violations[0]}"
                )
        self.sys = sys

    @property
    def dim(self) -> int:
        return self.sys.dim


# -- phased permutation operators ----------------------------------------------------


@dataclass(frozen=True)
class PhasedPermOp:
    """The operator (O f)(m) = f(perm[m]) * w^{phase[m]} with w = exp(2 pi i / modulus)."""

    perm: tuple[int, ...]
    phase: tuple[int, ...]
    modulus: int

    def __matmul__(self, other: "PhasedPermOp") -> "PhasedPermOp":
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        perm = tuple(other.perm[p] for p in self.perm)
        phase = tuple(
            (other.phase[p] + ph) % self.modulus for p, ph in zip(self.perm, self.phase)
        )
        return PhasedPermOp(perm, phase, self.modulus)

    def scaled(self, exponent: int) -> "PhasedPermOp":
        return PhasedPermOp(
            self.perm, tuple((p + exponent) % self.modulus for p in self.phase), self.modulus
        )


def left_right_operators(sys: CocycleSystem, h: int) -> tuple[list[PhasedPermOp], list[PhasedPermOp]]:
    """The families (L_{n, eta_h})_n and (R_{n, eta_h})_n as phased permutations."""
    mult = sys.n_group.mult
    m = sys.modulus
    eta_h = sys.eta[h]
    nn = sys.n_group.order
    left = [
        PhasedPermOp(
            tuple(int(v) for v in mult[n]),
            tuple(int(v) for v in eta_h[n]),
            m,
        )
        for n in range(nn)
    ]
    right = [
        PhasedPermOp(
            tuple(int(v) for v in mult[:, n]),
            tuple(int(v) for v in eta_h[:, n]),
            m,
        )
        for n in range(nn)
    ]
    return left, right


# -- coideal triples -----------------------------------------------------------------


@dataclass(frozen=True)
class CoidealTriple:
    """(N1, H1, lambda): lam[i][j] is the exponent at (n1_ids[i], h1_ids[j]) mod modulus."""

    n1_ids: tuple[int, ...]
    h1_ids: tuple[int, ...]
    lam: tuple[tuple[int, ...], ...]
    modulus: int

    def lam_at(self, n: int, h: int) -> int:
        return self.lam[self.n1_ids.index(n)][self.h1_ids.index(h)]

    def phase_at(self, n: int, h: int) -> Phase:
        return Phase.of(self.lam_at(n, h), self.modulus)

    @property
    def n1_order(self) -> int:
        return len(self.n1_ids)

    @property
    def h1_order(self) -> int:
        return len(self.h1_ids)

    def dim(self, sys: CocycleSystem) -> int:
        return self.h1_order * (sys.n_group.order // self.n1_order)

    def sort_key(self) -> tuple:
        flat = tuple(Phase.of(v, self.modulus).as_fraction() for row in self.lam for v in row)
        return (-self.n1_order, self.h1_order, self.n1_ids, self.h1_ids, flat)

    def descriptor(self) -> dict:
        return {
            "n1": tuple(self.n1_ids),
            "h1": tuple(self.h1_ids),
            "lambda": tuple(
                (n, h, int(self.lam[i][j]), self.modulus)
                for i, n in enumerate(self.n1_ids)
                for j, h in enumerate(self.h1_ids)
                if self.lam[i][j]
            ),
            "modulus": self.modulus,
        }


def triple_leq(t1: CoidealTriple, t2: CoidealTriple) -> bool:
    """Coideal containment B1 <= B2: N1 >= N2, H1 <= H2, lambdas agree on N2 x H1."""
    if not set(t2.n1_ids) <= set(t1.n1_ids):
        return False
    if not set(t1.h1_ids) <= set(t2.h1_ids):
        return False
    for n in t2.n1_ids:
        for h in t1.h1_ids:
            if t1.phase_at(n, h) != t2.phase_at(n, h):
                return False
    return True


def validate_triple(sys: CocycleSystem, t: CoidealTriple) -> bool:
    """Check the subgroup, normalization, and both lambda relations exhaustively."""
    n_set = set(t.n1_ids)
    h_set = set(t.h1_ids)
    if 0 not in n_set or 0 not in h_set:
        return False
    for h in t.h1_ids:
        if {int(sys.action.table[h][n]) for n in t.n1_ids} != n_set:
            return False
    m, big = sys.modulus, t.modulus
    if big % m != 0:
        return False
    mult_n, mult_h = sys.n_group.mult, sys.h_group.mult
    for n1 in t.n1_ids:
        for n2 in t.n1_ids:
            prod = int(mult_n[n1, n2])
            if prod not in n_set:
                return False
            for h in t.h1_ids:
                lhs = (t.lam_at(n1, h) + t.lam_at(n2, h)) % big
                rhs = (t.lam_at(prod, h) + sys.lift(sys.eta[h][n1, n2], big)) % big
                if lhs != rhs:
                    return False
    for n in t.n1_ids:
        for h1 in t.h1_ids:
            for h2 in t.h1_ids:
                prod_h = int(mult_h[h1, h2])
                if prod_h not in h_set:
                    return False
                conj_n = int(sys.conj[h1][n])
                lhs = t.lam_at(n, prod_h)
                rhs = (
                    t.lam_at(n, h1)
                    + t.lam_at(conj_n, h2)
                    + sys.lift(sys.xi[n][h1, h2], big)
                ) % big
                if lhs != rhs:
                    return False
    return True


# -- lambda enumeration ----------------------------------------------------------------


def _bfs_order(mult: np.ndarray, member_ids: tuple[int, ...], gens: tuple[int, ...]):
    """Spanning steps (new, prev, gen) covering the subgroup by right multiplication."""
    steps: list[tuple[int, int, int]] = []
    seen = {0}
    queue = [0]
    while queue:
        nxt: list[int] = []
        for x in queue:
            for g in gens:
                y = int(mult[x, g])
                if y not in seen:
                    seen.add(y)
                    steps.append((y, x, g))
                    nxt.append(y)
        queue = nxt
    if seen != set(member_ids):
        raise AssertionError("generators do not span the subgroup")
    return steps


def enumerate_lambdas(sys: CocycleSystem, n1: Subgroup, h1: Subgroup) -> list[CoidealTriple]:
    """All valid lambda tables on (N1, H1), by free generator values plus propagation.

    The search modulus is ``modulus * exp(N1)``: iterating the first relation
    along powers of n forces ord(n) * lambda(n, h) into the base phase group,
    so every solution lives there.
    """
    n_ids = n1.ids
    h_ids = h1.ids
    big = sys.modulus * n1.exponent()
    gens_n = n1.generator_ids()
    gens_h = h1.generator_ids()
    mult_n, mult_h = sys.n_group.mult, sys.h_group.mult
    eta, xi, conj = sys.eta, sys.xi, sys.conj
    n_pos = {n: i for i, n in enumerate(n_ids)}
    h_pos = {h: j for j, h in enumerate(h_ids)}
    steps_n = _bfs_order(mult_n, n_ids, gens_n)
    steps_h = _bfs_order(mult_h, h_ids, gens_h)

    results: list[CoidealTriple] = []
    seen: set[tuple] = set()
    free_cells = [(g, s) for s in gens_h for g in gens_n]
    if big ** len(free_cells) > _LAMBDA_CANDIDATE_CAP:
        raise CapacityError(
            f"{big}^{len(free_cells)} lambda candidates on a subgroup pair "
            f"exceed the cap {_LAMBDA_CANDIDATE_CAP}"
        )

    for values in itertools.product(range(big), repeat=len(free_cells)):
        table = np.full((len(n_ids), len(h_ids)), -1, dtype=np.int64)
        table[n_pos[0], :] = 0  # lambda(e, h) = 0 is forced
        table[:, h_pos[0]] = 0  # lambda(n, e) = 0 is forced
        ok = True
        for (g, s), v in zip(free_cells, values):
            i, j = n_pos[g], h_pos[s]
            if table[i, j] >= 0 and table[i, j] != v:
                ok = False
                break
            table[i, j] = v
        if not ok:
            continue
        # fill each generator column over N1 using the first relation
        for s in gens_h:
            j = h_pos[s]
            for y, x, g in steps_n:
                val = (
                    table[n_pos[x], j]
                    + table[n_pos[g], j]
                    - sys.lift(eta[s][x, g], big)
                ) % big
                iy = n_pos[y]
                if table[iy, j] >= 0 and table[iy, j] != val:
                    ok = False
                    break
                table[iy, j] = val
            if not ok:
                break
        if not ok:
            continue
        # extend across H1 using the second relation
        for y, x, s in steps_h:
            jy, jx, js = h_pos[y], h_pos[x], h_pos[s]
            for n in n_ids:
                i = n_pos[n]
                val = (
                    table[i, jx]
                    + table[n_pos[int(conj[x][n])], js]
                    + sys.lift(xi[n][x, s], big)
                ) % big
                if table[i, jy] >= 0 and table[i, jy] != val:
                    ok = False
                    break
                table[i, jy] = val
            if not ok:
                break
        if not ok or (table < 0).any():
            continue
        lam = tuple(tuple(int(v) for v in row) for row in table)
        if lam in seen:
            continue
        triple = CoidealTriple(n_ids, h_ids, lam, big)
        if validate_triple(sys, triple):
            seen.add(lam)
            results.append(triple)
    results.sort(key=CoidealTriple.sort_key)
    return results


# -- the coideal lattice ----------------------------------------------------------------


@dataclass(frozen=True)
class CoidealLattice:
    sys: CocycleSystem
    side: str
    nodes: tuple[CoidealTriple, ...]
    dims: tuple[int, ...]
    leq: np.ndarray  # leq[i, j] iff node i is contained in node j
    top: int
    bottom: int
    maximal: tuple[int, ...]  # maximal proper coideals (maximal below top)
    minimal: tuple[int, ...]  # minimal nontrivial coideals (minimal above bottom)
    edges: tuple[tuple[int, int], ...] = field(default=())  # Hasse covers (lower, upper)

    def node_index(self, t: CoidealTriple) -> int:
        for i, node in enumerate(self.nodes):
            if node == t:
                return i
        raise KeyError("triple is not a lattice node")

    def below(self, i: int) -> list[int]:
        return [j for j in range(len(self.nodes)) if self.leq[j, i]]


def enumerate_coideals(
    a: KacAlgebra, *, side: str = "right", caps: Caps | None = None
) -> CoidealLattice:
    """Enumerate every coideal triple and assemble the inclusion lattice.

    Pairs (N1, H1) range over subgroup pairs with H1 normalizing N1; for each
    pair all lambda tables are enumerated.  Right and left coideals share the
    same triples; the side only changes which operator family defines the
    eigenspaces (see ``triple_component_dims``).
    """
    caps = caps or default_caps()
    if side not in ("right", "left"):
        raise ValidationError("side must be 'right' or 'left'")
    sys = a.sys
    subs_n = interval_subgroups(sys.n_group, sys.n_group.trivial_subgroup(), caps=caps)
    subs_h = interval_subgroups(sys.h_group, sys.h_group.trivial_subgroup(), caps=caps)
    pairs = []
    for n1 in subs_n:
        for h1 in subs_h:
            if all(
                {int(sys.action.table[h][n]) for n in n1.ids} == set(n1.ids)
                for h in h1.generator_ids()
            ):
                pairs.append((n1, h1))
    if len(pairs) > caps.pair_cap:
        raise CapacityError(f"{len(pairs)} subgroup pairs exceed the cap {caps.pair_cap}")

    nodes: list[CoidealTriple] = []
    for n1, h1 in pairs:
        nodes.extend(enumerate_lambdas(sys, n1, h1))
    nodes.sort(key=CoidealTriple.sort_key)

    count = len(nodes)
    leq = np.zeros((count, count), dtype=bool)
    for i, t1 in enumerate(nodes):
        for j, t2 in enumerate(nodes):
            leq[i, j] = triple_leq(t1, t2)
    dims = tuple(t.dim(sys) for t in nodes)

    tops = [i for i in range(count) if leq[:, i].all()]
    bottoms = [i for i in range(count) if leq[i, :].all()]
    if len(tops) != 1 or len(bottoms) != 1:
        raise ValidationError("coideal inclusion order has no unique top/bottom")
    top, bottom = tops[0], bottoms[0]
    maximal = tuple(
        i
        for i in range(count)
        if i != top and not any(leq[i, j] and j != i and j != top for j in range(count))
    )
    minimal = tuple(
        i
        for i in range(count)
        if i != bottom
        and not any(leq[j, i] and j != i and j != bottom for j in range(count))
    )
    edges = []
    for i in range(count):
        for j in range(count):
            if i == j or not leq[i, j]:
                continue
            if not any(k != i and k != j and leq[i, k] and leq[k, j] for k in range(count)):
                edges.append((i, j))
    return CoidealLattice(
        sys=sys,
        side=side,
        nodes=tuple(nodes),
        dims=dims,
        leq=leq,
        top=top,
        bottom=bottom,
        maximal=maximal,
        minimal=minimal,
        edges=tuple(edges),
    )


# -- eigenspace materialization and closure -----------------------------------------------


def _component_functions(
    sys: CocycleSystem, t: CoidealTriple, h: int, *, use_left: bool, use_right: bool
) -> list[dict[int, int]]:
    """Basis functions of the subspace cut out by the chosen eigen-constraints.

    Each function is supported on one constraint-graph component and given by
    exponents (mod t.modulus) on its support; inconsistent components give no
    function.
    """
    big = t.modulus
    mult = sys.n_group.mult
    eta = sys.eta
    nn = sys.n_group.order
    assigned: dict[int, int] = {}
    out: list[dict[int, int]] = []
    for start in range(nn):
        if start in assigned:
            continue
        comp: dict[int, int] = {start: 0}
        stack = [start]
        consistent = True
        while stack:
            x = stack.pop()
            px = comp[x]
            for n in t.n1_ids:
                targets = []
                if use_left:
                    targets.append((int(mult[n, x]), t.lam_at(n, h) - sys.lift(eta[h][n, x], big)))
                if use_right:
                    targets.append((int(mult[x, n]), t.lam_at(n, h) - sys.lift(eta[h][x, n], big)))
                for y, delta in targets:
                    val = (px + delta) % big
                    if y in comp:
                        if comp[y] != val:
                            consistent = False
                    else:
                        comp[y] = val
                        stack.append(y)
        assigned.update(comp)
        if consistent:
            out.append(comp)
    return out


def triple_component_dims(a: KacAlgebra, t: CoidealTriple, *, side: str = "right") -> list[int]:
    """dim C(h) for each h in H1, from the eigenspace materialization."""
    use_left = side == "right"  # right coideals are cut out by the L family
    return [
        len(
            _component_functions(
                a.sys, t, h, use_left=use_left, use_right=not use_left
            )
        )
        for h in t.h1_ids
    ]


def validate_triple_closure(a: KacAlgebra, t: CoidealTriple, *, side: str = "right") -> bool:
    """Directly verify that the materialized eigenspaces close under the product.

    For every h1, h2 in H1 and basis functions f1, f2, the product
    g(x) = f1(x) f2(x^{h1}) w^{xi_x(h1,h2)} must satisfy the eigen-constraints
    of C(h1 h2); this is an independent cross-check of the triple conditions.
    """
    sys = a.sys
    big = t.modulus
    use_left = side == "right"
    mult_h = sys.h_group.mult
    conj = sys.conj
    bases = {
        h: _component_functions(sys, t, h, use_left=use_left, use_right=not use_left)
        for h in t.h1_ids
    }
    for h1 in t.h1_ids:
        for h2 in t.h1_ids:
            h12 = int(mult_h[h1, h2])
            if h12 not in bases:
                return False
            for f1 in bases[h1]:
                for f2 in bases[h2]:
                    g: dict[int, int] = {}
                    for x, e1 in f1.items():
                        xc = int(conj[h1][x])
                        if xc in f2:
                            g[x] = (e1 + f2[xc] + sys.lift(sys.xi[x][h1, h2], big)) % big
                    if not _satisfies_constraints(sys, t, h12, g, use_left=use_left):
                        return False
    return True


def _satisfies_constraints(
    sys: CocycleSystem, t: CoidealTriple, h: int, func: dict[int, int], *, use_left: bool
) -> bool:
    big = t.modulus
    mult = sys.n_group.mult
    eta = sys.eta
    for n in t.n1_ids:
        lam = t.lam_at(n, h)
        for x in range(sys.n_group.order):
            if use_left:
                y, shift = int(mult[n, x]), sys.lift(eta[h][n, x], big)
            else:
                y, shift = int(mult[x, n]), sys.lift(eta[h][x, n], big)
            left_val = func.get(y)
            right_val = func.get(x)
            if (left_val is None) != (right_val is None):
                return False
            if left_val is not None and (left_val + shift) % big != (lam + right_val) % big:
                return False
    return True


def second_commutant_dim(a: KacAlgebra, t: CoidealTriple) -> int:
    """Sum over h in H1 of dim(C_R(h) meet C_L(h)), via the phase constraint graph.

    Components are the (N1, N1)-double cosets; a component contributes one
    dimension exactly when every cycle carries net phase zero.
    """
    return sum(second_commutant_dims_by_h(a, t))


def second_commutant_dims_by_h(a: KacAlgebra, t: CoidealTriple) -> list[int]:
    return [
        len(_component_functions(a.sys, t, h, use_left=True, use_right=True))
        for h in t.h1_ids
    ]


# -- counting reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class KacWallReport:
    name: str
    dim: int
    max_count: int
    min_count: int
    holds_max: bool
    holds_min: bool
    n_solvable: bool
    h_solvable: bool
    node_count: int


@dataclass(frozen=True)
class RelativeKacWallReport:
    name: str
    triple: dict
    bound: int  # the second-commutant dimension of the chosen coideal
    max_count: int  # maximal proper coideals of the algebra contained in it
    min_count: int  # minimal nontrivial coideals contained in it
    holds_max: bool
    holds_min: bool


def check_kac_wall(a: KacAlgebra, *, lattice: CoidealLattice | None = None, caps: Caps | None = None) -> KacWallReport:
    """Count maximal and minimal proper nontrivial coideals against dim(A)."""
    lattice = lattice or enumerate_coideals(a, caps=caps)
    dim = a.dim
    max_count = len(lattice.maximal)
    min_count = len(lattice.minimal)
    return KacWallReport(
        name=a.sys.name,
        dim=dim,
        max_count=max_count,
        min_count=min_count,
        holds_max=max_count < dim,
        holds_min=min_count < dim,
        n_solvable=is_solvable(a.sys.n_group),
        h_solvable=is_solvable(a.sys.h_group),
        node_count=len(lattice.nodes),
    )


def check_relative_kac_wall(
    a: KacAlgebra,
    t: CoidealTriple,
    *,
    lattice: CoidealLattice | None = None,
    caps: Caps | None = None,
) -> RelativeKacWallReport:
    """Counting bounds for the coideals contained in a fixed coideal B.

    Counts the globally maximal (resp. minimal nontrivial) coideals of the
    algebra that are contained in B, against the second-commutant dimension of
    B.  With H trivial and trivial cocycles the minimal count reproduces the
    relative maximal-subgroup bound for N.
    """
    lattice = lattice or enumerate_coideals(a, caps=caps)
    idx = lattice.node_index(t)
    below = set(lattice.below(idx))
    max_count = len(below.intersection(lattice.maximal))
    min_count = len(below.intersection(lattice.minimal))
    bound = second_commutant_dim(a, t)
    return RelativeKacWallReport(
        name=a.sys.name,
        triple=t.descriptor(),
        bound=bound,
        max_count=max_count,
        min_count=min_count,
        holds_max=max_count < bound,
        holds_min=min_count < bound,
    )


# -- characters and crossed homomorphisms ---------------------------------------------------


def characters_of(parent: Group, sub: Subgroup, modulus: int | None = None) -> list[tuple[int, ...]]:
    """All homomorphisms from the subgroup into roots of unity of its exponent.

    Each character is a tuple of exponents aligned with ``sub.ids``; the value
    modulus is ``modulus`` (defaults to the subgroup exponent).
    """
    e = modulus or sub.exponent()
    ids = sub.ids
    pos = {n: i for i, n in enumerate(ids)}
    gens = sub.generator_ids()
    steps = _bfs_order(parent.mult, ids, gens)
    out: list[tuple[int, ...]] = []

    def assign(values: dict[int, int]) -> tuple[int, ...] | None:
        table = [-1] * len(ids)
        table[pos[0]] = 0
        for g, v in values.items():
            i = pos[g]
            if table[i] >= 0 and table[i] != v:
                return None
            table[i] = v
        for y, x, g in steps:
            val = (table[pos[x]] + table[pos[g]]) % e
            iy = pos[y]
            if table[iy] >= 0 and table[iy] != val:
                return None
            table[iy] = val
        # verify the homomorphism property on all generator edges
        for x in ids:
            for g in gens:
                y = int(parent.mult[x, g])
                if (table[pos[x]] + table[pos[g]]) % e != table[pos[y]]:
                    return None
        return tuple(table)

    if not gens:
        return [(0,) * len(ids)]
    ranges = []
    for g in gens:
        order_g = parent.element_order(g)
        ranges.append([v for v in range(e) if (order_g * v) % e == 0])
    for combo in itertools.product(*ranges):
        table = assign(dict(zip(gens, combo)))
        if table is not None and table not in out:
            out.append(table)
    out.sort()
    return out


@dataclass(frozen=True)
class CrossedHom:
    """A map mu: H1 -> dual(N1) with mu(h1) * mu(h2)^{h1} = mu(h1 h2)."""

    h1_ids: tuple[int, ...]
    n1_ids: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]  # values[j] = character exponents at h1_ids[j]
    modulus: int
    is_coboundary: bool


def cocycle_set(h1: Subgroup, n1: Subgroup, act: GroupAction, *, caps: Caps | None = None) -> list[CrossedHom]:
    """All crossed homomorphisms from H1 into the character group of N1.

    The action on characters is (chi^h)(n) = chi(n^h); a coboundary is
    mu(h) = -nu + nu^h for some character nu.
    """
    h_parent = act.acting
    n_parent = act.target
    if h1.parent is not h_parent or n1.parent is not n_parent:
        raise ValidationError("subgroups must belong to the action's groups")
    for h in h1.generator_ids():
        if {int(act.table[h][n]) for n in n1.ids} != set(n1.ids):
            raise ValidationError("H1 must normalize N1")
    e = n1.exponent()
    chars = characters_of(n_parent, n1, e)
    n_pos = {n: i for i, n in enumerate(n1.ids)}
    conj = {h: act.table[h_parent.invert(h)] for h in h1.ids}

    def act_on_char(chi: tuple[int, ...], h: int) -> tuple[int, ...]:
        return tuple(chi[n_pos[int(conj[h][n])]] for n in n1.ids)

    def add_chars(c1, c2):
        return tuple((a + b) % e for a, b in zip(c1, c2))

    h_ids = h1.ids
    h_pos = {h: j for j, h in enumerate(h_ids)}
    gens_h = h1.generator_ids()
    steps = _bfs_order(h_parent.mult, h_ids, gens_h)
    trivial_char = (0,) * len(n1.ids)

    solutions: list[tuple[tuple[int, ...], ...]] = []
    candidates = itertools.product(chars, repeat=len(gens_h)) if gens_h else [()]
    for combo in candidates:
        values: list = [None] * len(h_ids)
        values[h_pos[0]] = trivial_char
        ok = True
        for g, chi in zip(gens_h, combo):
            j = h_pos[g]
            if values[j] is not None and values[j] != chi:
                ok = False
                break
            values[j] = chi
        if not ok:
            continue
        for y, x, g in steps:
            val = add_chars(values[h_pos[x]], act_on_char(values[h_pos[g]], x))
            jy = h_pos[y]
            if values[jy] is not None and values[jy] != val:
                ok = False
                break
            values[jy] = val
        if not ok or any(v is None for v in values):
            continue
        # full verification of the crossed relation
        for x in h_ids:
            for y in h_ids:
                xy = int(h_parent.mult[x, y])
                if add_chars(values[h_pos[x]], act_on_char(values[h_pos[y]], x)) != values[h_pos[xy]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            tup = tuple(values)
            if tup not in solutions:
                solutions.append(tup)

    coboundaries = set()
    for nu in chars:
        cb = tuple(
            tuple((nu[n_pos[int(conj[h][n])]] - nu[n_pos[n]]) % e for n in n1.ids)
            for h in h_ids
        )
        coboundaries.add(cb)
    solutions.sort()
    return [
        CrossedHom(
            h1_ids=h_ids,
            n1_ids=n1.ids,
            values=sol,
            modulus=e,
            is_coboundary=sol in coboundaries,
        )
        for sol in solutions
    ]


@dataclass(frozen=True)
class CharacterBoundReport:
    n1_order: int
    n2_order: int
    character_count: int
    double_coset_count: int
    holds: bool


def check_character_count_bound(n1: Subgroup, n2: Subgroup) -> CharacterBoundReport:
    """#characters of N2 trivial on N1 versus #(N1,N1)-double cosets in N2."""
    if not n1.is_subset_of(n2):
        raise ValidationError("n1 must be contained in n2")
    group2, id_map = materialize_subgroup(n1.parent, n2)
    inner_ids = [id_map[x] for x in n1.ids]
    chars = characters_of(group2, group2.full_subgroup(), group2.exponent())
    count = sum(1 for chi in chars if all(chi[i] == 0 for i in inner_ids))
    inner_mask = 0
    for i in inner_ids:
        inner_mask |= 1 << i
    inner = Subgroup(group2, inner_mask)
    dc = double_coset_count(group2, inner, inner)
    return CharacterBoundReport(
        n1_order=n1.order,
        n2_order=n2.order,
        character_count=count,
        double_coset_count=dc,
        holds=count <= dc,
    )


# -- the extension lower bound --------------------------------------------------------------


def extension_lower_bound(a: KacAlgebra, lattice: CoidealLattice, t: CoidealTriple) -> int:
    """1 + sum(k_i - 1) over a greedy family of lambda-extending overgroups of N1.

    Candidates are lattice nodes with the same H1 whose N-part strictly
    contains N1 and whose lambda restricts to t's; they are added greedily in
    canonical order subject to pairwise intersections equal to N1.
    """
    sys = a.sys
    n1_set = set(t.n1_ids)
    chosen: list[CoidealTriple] = []
    for node in lattice.nodes:
        if node.h1_ids != t.h1_ids:
            continue
        if not (set(node.n1_ids) > n1_set):
            continue
        if not triple_leq(node, t):
            continue
        if all(set(node.n1_ids) & set(other.n1_ids) == n1_set for other in chosen):
            chosen.append(node)
    bound = 1
    for node in chosen:
        sub_big, id_map = materialize_subgroup(
            sys.n_group, _subgroup_from_ids(sys.n_group, node.n1_ids)
        )
        inner_mask = 0
        for x in t.n1_ids:
            inner_mask |= 1 << id_map[x]
        inner = Subgroup(sub_big, inner_mask)
        bound += double_coset_count(sub_big, inner, inner) - 1
    return bound


def _subgroup_from_ids(g: Group, ids) -> Subgroup:
    mask = 0
    for x in ids:
        mask |= 1 << int(x)
    return Subgroup(g, mask)


def subgroup_of(g: Group, ids) -> Subgroup:
    """Public helper: the subgroup of g with exactly these element ids."""
    return _subgroup_from_ids(g, ids)
