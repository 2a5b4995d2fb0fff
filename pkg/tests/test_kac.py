"""Cocycle systems, coideal lattices, and the associated counting bounds."""

import itertools

import numpy as np
import pytest

from walllat.catalog import KAC_FIXTURES, load_group, load_kac
from walllat.groups import (
    GroupAction,
    from_generators,
    interval_subgroups,
    is_solvable,
)
from walllat.kac import (
    CocycleSystem,
    CoidealTriple,
    KacAlgebra,
    characters_of,
    check_character_count_bound,
    check_kac_wall,
    check_relative_kac_wall,
    cocycle_set,
    enumerate_coideals,
    extension_lower_bound,
    left_right_operators,
    second_commutant_dim,
    second_commutant_dims_by_h,
    subgroup_of,
    triple_component_dims,
    validate_cocycle_system,
    validate_triple,
    validate_triple_closure,
)
from walllat.phases import Phase, lift_exponent
from walllat.wall import check_relative_wall


class TestPhases:
    def test_cross_modulus_equality(self):
        assert Phase.of(1, 2) == Phase.of(2, 4) == Phase.of(3, 6)
        assert Phase.of(0, 5) == Phase.of(0, 1)

    def test_arithmetic(self):
        assert Phase.of(1, 3) + Phase.of(1, 6) == Phase.of(1, 2)
        assert -Phase.of(1, 4) == Phase.of(3, 4)
        assert (Phase.of(2, 3) - Phase.of(2, 3)).is_one

    def test_lift(self):
        assert lift_exponent(1, 2, 6) == 3
        with pytest.raises(ValueError):
            lift_exponent(1, 4, 6)


@pytest.fixture(scope="module")
def c3c2():
    return KacAlgebra(load_kac("c3c2_trivial"))


@pytest.fixture(scope="module")
def c3c2_lattice(c3c2):
    return enumerate_coideals(c3c2)


def algebra(name: str) -> KacAlgebra:
    return KacAlgebra(load_kac(name))


def brute_force_triples(a: KacAlgebra) -> list[CoidealTriple]:
    """Oracle: every lambda table at the search modulus, filtered by the triple
    conditions AND the independent algebra-closure check."""
    sys = a.sys
    out = []
    subs_n = interval_subgroups(sys.n_group, sys.n_group.trivial_subgroup())
    subs_h = interval_subgroups(sys.h_group, sys.h_group.trivial_subgroup())
    for n1 in subs_n:
        for h1 in subs_h:
            if not all(
                {int(sys.action.table[h][n]) for n in n1.ids} == set(n1.ids)
                for h in h1.ids
            ):
                continue
            modulus = sys.modulus * n1.exponent()
            cells = [(i, j) for i in range(n1.order) for j in range(h1.order)]
            for values in itertools.product(range(modulus), repeat=len(cells)):
                lam = [[0] * h1.order for _ in range(n1.order)]
                for (i, j), v in zip(cells, values):
                    lam[i][j] = v
                t = CoidealTriple(n1.ids, h1.ids, tuple(tuple(r) for r in lam), modulus)
                if validate_triple(sys, t) and validate_triple_closure(a, t):
                    out.append(t)
    return out


class TestCocycleValidation:
    def test_trivial_system_valid(self):
        report = validate_cocycle_system(load_kac("c3c2_trivial"))
        assert report.valid
        assert report.conventions == ("lambdaeq-h2", "pentagon-closure")

    def test_single_perturbation_is_located(self):
        sys = load_kac("c3c2_trivial")
        eta = np.array(sys.eta)
        eta[1, 1, 2] = 1
        broken = CocycleSystem(
            sys.n_group, sys.h_group, sys.action, 2, eta, np.array(sys.xi) % 2
        )
        report = validate_cocycle_system(broken)
        assert not report.valid
        families = report.family_counts()
        assert "eta-cocycle" in families
        # the perturbed slot appears among the listed instances
        assert any(v[0] == "eta-cocycle" and v[1] == 1 for v in report.violations)

    def test_constant_eta_needs_ad_invariance(self):
        # eta = nontrivial bicharacter of C2xC2 in the nonidentity slot, xi = 0:
        # valid with the trivial action, invalid with the swap action
        v4 = from_generators(4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="c2x2")
        c2 = from_generators(2, [(1, 0)], name="c2")
        coords = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}
        eta = np.zeros((2, 4, 4), dtype=np.int32)
        for n1 in range(4):
            for n2 in range(4):
                eta[1][n1][n2] = coords[n1][0] * coords[n2][1] % 2
        xi = np.zeros((4, 2, 2), dtype=np.int32)
        trivial_act = GroupAction.trivial(c2, v4)
        assert validate_cocycle_system(
            CocycleSystem(v4, c2, trivial_act, 2, eta, xi)
        ).valid
        swap = np.array([0, 2, 1, 3], dtype=np.int32)  # exchanges the coordinates
        swap_act = GroupAction.from_generator_images(c2, v4, {1: swap})
        report = validate_cocycle_system(CocycleSystem(v4, c2, swap_act, 2, eta, xi))
        assert not report.valid
        assert set(report.family_counts()) == {"pentagon"}

    def test_printed_pentagon_mode_runs(self):
        report = validate_cocycle_system(load_kac("c3c2_trivial"), pentagon_mode="printed")
        assert report.pentagon_mode == "printed"
        assert report.valid  # all phases are trivial here


class TestOperators:
    @pytest.mark.parametrize("name", KAC_FIXTURES)
    def test_composition_relations_exhaustive(self, name):
        sys = load_kac(name)
        mult = sys.n_group.mult
        for h in range(sys.h_group.order):
            left, right = left_right_operators(sys, h)
            for n1 in range(sys.n_group.order):
                for n2 in range(sys.n_group.order):
                    assert (left[n1] @ left[n2]) == left[int(mult[n2, n1])].scaled(
                        int(sys.eta[h][n2, n1])
                    )
                    assert (right[n1] @ right[n2]) == right[int(mult[n1, n2])].scaled(
                        int(sys.eta[h][n1, n2])
                    )
                    assert (left[n1] @ right[n2]) == (right[n2] @ left[n1])

    def test_trivial_phases_are_translations(self):
        sys = load_kac("c3c2_trivial")
        left, _ = left_right_operators(sys, 0)
        for n in range(3):
            assert left[n].perm == tuple(int(v) for v in sys.n_group.mult[n])
            assert all(p == 0 for p in left[n].phase)


class TestCoidealLattice:
    def test_c3c2_nodes_and_dims(self, c3c2, c3c2_lattice):
        # oracle-derived: one coideal per subgroup of the 6-element symmetric
        # group formed by the characters of C3 with the inverting involution
        assert len(c3c2_lattice.nodes) == 6
        assert sorted(c3c2_lattice.dims) == [1, 2, 2, 2, 3, 6]
        assert all(validate_triple_closure(c3c2, t) for t in c3c2_lattice.nodes)

    def test_brute_force_completeness_c3c2(self, c3c2, c3c2_lattice):
        oracle = brute_force_triples(c3c2)
        assert sorted(t.sort_key() for t in oracle) == sorted(
            t.sort_key() for t in c3c2_lattice.nodes
        )

    def test_n_trivial_gives_subgroup_lattice_of_h(self):
        c1 = from_generators(1, [], name="c1")
        s3 = from_generators(3, [(1, 0, 2), (1, 2, 0)], name="s3")
        a = KacAlgebra(CocycleSystem.trivial(c1, s3, name="n-trivial"))
        lattice = enumerate_coideals(a)
        subgroup_masks = {
            frozenset(s.ids) for s in interval_subgroups(s3, s3.trivial_subgroup())
        }
        assert {frozenset(t.h1_ids) for t in lattice.nodes} == subgroup_masks
        assert len(lattice.nodes) == 6
        report = check_kac_wall(a, lattice=lattice)
        assert (report.max_count, report.dim) == (4, 6)
        assert report.holds_max and report.holds_min

    def test_h_trivial_gives_subgroup_lattice_of_n(self, c3c2):
        c4 = from_generators(4, [(1, 2, 3, 0)], name="c4")
        c1 = from_generators(1, [], name="c1")
        a = KacAlgebra(CocycleSystem.trivial(c4, c1, name="h-trivial"))
        lattice = enumerate_coideals(a)
        assert {frozenset(t.n1_ids) for t in lattice.nodes} == {
            frozenset(s.ids) for s in interval_subgroups(c4, c4.trivial_subgroup())
        }
        report = check_kac_wall(a, lattice=lattice)
        assert (report.max_count, report.dim) == (1, 4)

    def test_inclusion_implies_strictly_smaller_dimension(self, c3c2, c3c2_lattice):
        lattice = c3c2_lattice
        n = len(lattice.nodes)
        for i in range(n):
            for j in range(n):
                if i != j and lattice.leq[i, j]:
                    assert lattice.dims[i] < lattice.dims[j]
                    dims_i = triple_component_dims(c3c2, lattice.nodes[i])
                    assert all(
                        d == 3 // lattice.nodes[i].n1_order for d in dims_i
                    )

    def test_left_side_enumeration_matches(self, c3c2):
        right = enumerate_coideals(c3c2, side="right")
        left = enumerate_coideals(c3c2, side="left")
        assert [t.sort_key() for t in right.nodes] == [t.sort_key() for t in left.nodes]
        assert all(validate_triple_closure(c3c2, t, side="left") for t in left.nodes)

    @pytest.mark.parametrize("name", ["c4c2_trivial", "c2sq_c2_eta_m2", "c2_c2sq_xi_m2",
                                      "c2sq_c2_etaxi_m2"])
    def test_brute_force_completeness_small_fixtures(self, name):
        a = algebra(name)
        assert a.dim <= 12
        lattice = enumerate_coideals(a)
        oracle = brute_force_triples(a)
        assert sorted(t.sort_key() for t in oracle) == sorted(
            t.sort_key() for t in lattice.nodes
        ), name
        assert all(validate_triple_closure(a, t) for t in lattice.nodes)


class TestTripleClosure:
    def test_perturbed_lambda_fails_closure(self, c3c2):
        # a nontrivial character in the identity slot satisfies the first
        # relation but breaks the crossed relation; closure must reject it
        sys = c3c2.sys
        n1 = sys.n_group.full_subgroup()
        h1 = sys.h_group.full_subgroup()
        modulus = sys.modulus * n1.exponent()
        lam = ((0, 0), (1, 0), (2, 0))  # lambda(n, e) = chi(n), lambda(n, s) = 1
        bad = CoidealTriple(n1.ids, h1.ids, lam, modulus)
        assert not validate_triple(sys, bad)
        assert not validate_triple_closure(c3c2, bad)

    def test_bottom_triple_closes(self, c3c2, c3c2_lattice):
        bottom = c3c2_lattice.nodes[c3c2_lattice.bottom]
        assert bottom.n1_order == 3 and bottom.h1_order == 1
        assert validate_triple_closure(c3c2, bottom)


class TestSecondCommutant:
    @pytest.mark.parametrize("name", KAC_FIXTURES)
    def test_top_and_bottom_dimensions(self, name):
        a = algebra(name)
        lattice = enumerate_coideals(a)
        assert second_commutant_dim(a, lattice.nodes[lattice.top]) == a.dim
        assert second_commutant_dim(a, lattice.nodes[lattice.bottom]) == 1

    @pytest.mark.parametrize("name", KAC_FIXTURES)
    def test_extension_lower_bound_never_violated(self, name):
        a = algebra(name)
        lattice = enumerate_coideals(a)
        for t in lattice.nodes:
            bound = extension_lower_bound(a, lattice, t)
            for dim in second_commutant_dims_by_h(a, t):
                assert dim >= bound, (name, t.descriptor())


class TestKacWall:
    def test_c3c2_counts(self, c3c2, c3c2_lattice):
        report = check_kac_wall(c3c2, lattice=c3c2_lattice)
        assert (report.max_count, report.min_count, report.dim) == (4, 4, 6)
        assert report.holds_max and report.holds_min

    @pytest.mark.parametrize("name", KAC_FIXTURES)
    def test_holds_on_all_fixture_systems(self, name):
        a = algebra(name)
        report = check_kac_wall(a)
        assert is_solvable(a.sys.n_group) and is_solvable(a.sys.h_group)
        assert report.holds_max and report.holds_min, name


class TestRelativeKacWall:
    def test_top_reduces_to_absolute_counts(self, c3c2, c3c2_lattice):
        top = c3c2_lattice.nodes[c3c2_lattice.top]
        report = check_relative_kac_wall(c3c2, top, lattice=c3c2_lattice)
        absolute = check_kac_wall(c3c2, lattice=c3c2_lattice)
        assert report.bound == c3c2.dim
        assert report.max_count == absolute.max_count
        assert report.min_count == absolute.min_count

    def test_dim_two_coideal(self, c3c2, c3c2_lattice):
        target = next(
            t
            for t in c3c2_lattice.nodes
            if t.n1_order == 3
            and t.h1_order == 2
            and all(v == 0 for row in t.lam for v in row)
        )
        report = check_relative_kac_wall(c3c2, target, lattice=c3c2_lattice)
        assert (report.max_count, report.min_count, report.bound) == (1, 1, 2)
        assert report.holds_max and report.holds_min

    @pytest.mark.parametrize("name", KAC_FIXTURES)
    def test_holds_on_every_node(self, name):
        a = algebra(name)
        lattice = enumerate_coideals(a)
        for t in lattice.nodes:
            report = check_relative_kac_wall(a, t, lattice=lattice)
            assert report.holds_max and report.holds_min, (name, t.descriptor())

    @pytest.mark.parametrize("name", ["s3", "c4", "a4", "dih4"])
    def test_h_trivial_recovers_relative_subgroup_bound(self, name):
        g = load_group(name).group
        c1 = from_generators(1, [], name="c1")
        a = KacAlgebra(CocycleSystem.trivial(g, c1, name=f"{name}-h-trivial"))
        lattice = enumerate_coideals(a)
        for t in lattice.nodes:
            n1 = subgroup_of(g, t.n1_ids)
            if n1.order == g.order:
                continue
            kac_report = check_relative_kac_wall(a, t, lattice=lattice)
            group_report = check_relative_wall(g, n1)
            assert kac_report.min_count == group_report.maximal_count
            assert kac_report.bound == group_report.bound
            assert kac_report.holds_min == group_report.holds


class TestCocycleSet:
    def test_c2_on_dual_c3(self, c3c2):
        sys = c3c2.sys
        out = cocycle_set(
            sys.h_group.full_subgroup(), sys.n_group.full_subgroup(), sys.action
        )
        assert len(out) == 3
        assert all(c.is_coboundary for c in out)

    def test_trivial_h1(self, c3c2):
        sys = c3c2.sys
        out = cocycle_set(
            sys.h_group.trivial_subgroup(), sys.n_group.full_subgroup(), sys.action
        )
        assert len(out) == 1

    @pytest.mark.parametrize("name", KAC_FIXTURES)
    def test_count_matches_lambda_count(self, name):
        # for fixed (N1, H1) with at least one valid lambda, the number of
        # valid lambdas equals the number of crossed homomorphisms
        a = algebra(name)
        sys = a.sys
        lattice = enumerate_coideals(a)
        by_pair: dict[tuple, int] = {}
        for t in lattice.nodes:
            by_pair[(t.n1_ids, t.h1_ids)] = by_pair.get((t.n1_ids, t.h1_ids), 0) + 1
        for (n1_ids, h1_ids), count in by_pair.items():
            out = cocycle_set(
                subgroup_of(sys.h_group, h1_ids),
                subgroup_of(sys.n_group, n1_ids),
                sys.action,
            )
            assert count == len(out), (name, n1_ids, h1_ids)

    def test_solvable_irreducible_bound(self, c3c2):
        # the inverting C2 acts irreducibly on the dual of C3: the crossed
        # homomorphism count may not exceed (|N1| - 1) * |H1|
        sys = c3c2.sys
        n1 = sys.n_group.full_subgroup()
        h1 = sys.h_group.full_subgroup()
        out = cocycle_set(h1, n1, sys.action)
        chars = characters_of(sys.n_group, n1)
        assert len(out) == len(chars) == 3
        assert len(out) <= (n1.order - 1) * h1.order


class TestCharacterBound:
    def test_trivial_inside_c4(self):
        c4 = load_group("c4")
        report = check_character_count_bound(
            c4.group.trivial_subgroup(), c4.group.full_subgroup()
        )
        assert (report.character_count, report.double_coset_count) == (4, 4)
        assert report.holds

    def test_c2_inside_c4(self):
        built = load_group("c4")
        report = check_character_count_bound(
            built.subgroups["c2"], built.group.full_subgroup()
        )
        assert (report.character_count, report.double_coset_count) == (2, 2)

    def test_a3_inside_s3(self, s3):
        from conftest import subgroup_by_labels

        a3 = subgroup_by_labels(s3, ["(1 2 3)"])
        report = check_character_count_bound(a3, s3.full_subgroup())
        assert (report.character_count, report.double_coset_count) == (2, 2)

    def test_sweep_over_subgroup_chains(self, s4):
        subs = interval_subgroups(s4, s4.trivial_subgroup())
        for small in subs[:8]:
            for big in subs:
                if small.is_subset_of(big):
                    assert check_character_count_bound(small, big).holds
