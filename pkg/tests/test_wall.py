"""Counting bounds: absolute, relative, product; averaging projectors."""

import itertools

import pytest

from walllat.errors import ValidationError
from walllat.catalog import all_subgroups, catalog_groups, load_group
from walllat.groups import (
    from_generators,
    is_solvable,
    maximal_overgroups,
    normal_subgroups,
    product_set_size,
    subgroup_closure,
)
from walllat.wall import (
    PermModule,
    check_projector_identity,
    check_relative_wall,
    check_tensor_bound,
    check_wall,
    fixed_space_basis,
)

from conftest import subgroup_by_labels


class TestWall:
    def test_s3(self, s3):
        report = check_wall(s3)
        assert (report.maximal_count, report.bound, report.holds) == (4, 6, True)

    def test_s4(self, s4):
        report = check_wall(s4)
        assert (report.maximal_count, report.bound, report.holds) == (8, 24, True)

    def test_c2(self, c2):
        report = check_wall(c2)
        assert (report.maximal_count, report.bound, report.holds) == (1, 2, True)

    def test_trivial_group_rejected(self):
        with pytest.raises(ValidationError):
            check_wall(from_generators(1, []))


class TestRelativeWall:
    def test_s3xs3_diagonal(self):
        built = load_group("s3xs3")
        report = check_relative_wall(built.group, built.subgroups["diag"])
        assert (report.maximal_count, report.bound, report.holds) == (1, 3, True)
        assert report.solvable is True
        # the one maximal overgroup corresponds to the unique maximal normal
        # subgroup of the diagonal factor
        assert len(report.witnesses) == 1

    def test_trivial_subgroup_case(self, s3):
        report = check_relative_wall(s3, s3.trivial_subgroup())
        assert (report.maximal_count, report.bound) == (4, 6)

    def test_c4_over_c2(self, c4):
        c2sub = subgroup_closure(c4, [2])
        report = check_relative_wall(c4, c2sub)
        assert (report.maximal_count, report.bound, report.holds) == (1, 2, True)

    def test_equal_subgroup_rejected(self, s3):
        with pytest.raises(ValidationError):
            check_relative_wall(s3, s3.full_subgroup())

    def test_holds_on_solvable_groups_all_subgroups(self):
        # solvable-case sweep at unit-test scale; acceptance covers the full catalog
        for name in ("s4", "a4", "dih6", "q8", "c3x3"):
            g = load_group(name).group
            assert is_solvable(g)
            for h in all_subgroups(g):
                if h.order == g.order:
                    continue
                report = check_relative_wall(g, h)
                assert report.holds, (name, h.ids)

    def test_product_of_nonconjugate_maximals_is_group(self):
        # for solvable groups, non-conjugate maximal subgroups multiply to G
        for name in ("s4", "a4", "dih6", "c12", "q8"):
            g = load_group(name).group
            maxes = maximal_overgroups(g, g.trivial_subgroup())
            for a, b in itertools.combinations(maxes, 2):
                conjugate = any(
                    {g.conj(x, t) for x in a.ids} == set(b.ids) for t in range(g.order)
                )
                if not conjugate:
                    assert product_set_size(g, a, b) == g.order, (name, a.ids, b.ids)


class TestFixedSpace:
    def test_a3_weight_zero_dimension(self, s3):
        module = PermModule(s3, s3.trivial_subgroup())
        a3 = subgroup_by_labels(s3, ["(1 2 3)"])
        assert fixed_space_basis(module, a3, weight_zero=True).nrows == 1

    def test_full_group_weight_zero_dimension(self, s3):
        module = PermModule(s3, s3.trivial_subgroup())
        assert fixed_space_basis(module, s3.full_subgroup(), weight_zero=True).nrows == 0

    def test_trivial_subgroup_full_module(self, s3):
        module = PermModule(s3, s3.trivial_subgroup())
        basis = fixed_space_basis(module, s3.trivial_subgroup(), weight_zero=False)
        assert basis.nrows == 6

    def test_dimension_matches_projector_trace(self, s4):
        module = PermModule(s4, s4.trivial_subgroup())
        for k in all_subgroups(s4)[:12]:
            orbit_count = len(module.orbits_of(k))
            basis = fixed_space_basis(module, k, weight_zero=True)
            assert basis.nrows == orbit_count - 1
            assert basis.rank() == basis.nrows
            num, den = module.averaging_matrix(k).trace_fraction()
            assert (num, den) == (orbit_count, 1)

    def test_rows_are_invariant_and_weight_zero(self, s4):
        module = PermModule(s4, s4.trivial_subgroup())
        k = subgroup_by_labels(s4, ["(1 2 3 4)"])
        basis = fixed_space_basis(module, k, weight_zero=True)
        for row in basis.rows:
            assert sum(row) == 0
            for x in k.generator_ids():
                perm = module.action[x]
                assert tuple(row[perm[i]] for i in range(module.npoints)) == row


class TestProjectorIdentity:
    def test_s3_normal_times_complement(self, s3):
        a3 = subgroup_by_labels(s3, ["(1 2 3)"])
        t = subgroup_by_labels(s3, ["(1 2)"])
        assert check_projector_identity(s3, a3, t, s3.trivial_subgroup())

    def test_k_equals_g_trivially_true(self, s3):
        a3 = subgroup_by_labels(s3, ["(1 2 3)"])
        assert check_projector_identity(s3, a3, s3.full_subgroup(), s3.trivial_subgroup())

    def test_c4_failure_when_product_is_proper(self, c4):
        c2sub = subgroup_closure(c4, [2])
        assert not check_projector_identity(c4, c2sub, c2sub, c4.trivial_subgroup())

    def test_iff_product_covers_group(self, s4):
        # identity holds exactly when N * K = G, across a sample of shapes
        normals = [n for n in normal_subgroups(s4)]
        subs = all_subgroups(s4)
        checked_true = checked_false = 0
        for n in normals:
            for k in subs[::3]:
                covers = product_set_size(s4, n, k) == s4.order
                result = check_projector_identity(s4, n, k, k)
                assert result == covers
                checked_true += covers
                checked_false += not covers
        assert checked_true and checked_false


class TestTensorBound:
    def test_c2_c2(self, c2):
        report = check_tensor_bound(c2, c2)
        assert (report.count, report.bound, report.equality) == (1, 1, True)

    def test_v4_v4(self, v4):
        report = check_tensor_bound(v4, v4)
        assert (report.count, report.bound, report.equality) == (9, 9, True)

    def test_s3_s3(self, s3):
        report = check_tensor_bound(s3, s3)
        assert (report.count, report.bound, report.equality) == (1, 25, False)

    def test_trivial_factor_rejected(self, s3):
        with pytest.raises(ValidationError):
            check_tensor_bound(s3, from_generators(1, []))

    def test_equality_iff_elementary_abelian_two(self, c2, v4, s3, c4):
        cases = [(c2, c2), (c2, v4), (v4, v4), (s3, c2), (c4, c4), (s3, s3), (c4, c2)]
        for x, y in cases:
            report = check_tensor_bound(x, y)
            assert report.holds
            both = report.x_elementary_abelian_2 and report.y_elementary_abelian_2
            assert report.equality == both, (x.name, y.name)

    def test_product_bound_implies_wall_for_product(self, s3, c4):
        # if both factors satisfy the absolute bound, so does their product
        from walllat.groups import direct_product

        for x, y in [(s3, s3), (s3, c4), (c4, c4)]:
            assert check_wall(x).holds and check_wall(y).holds
            product = direct_product(x, y)
            assert check_wall(product).holds


class TestCatalogWallSweepSmall:
    def test_wall_holds_on_small_catalog(self):
        for cat in catalog_groups(max_order=48):
            report = check_wall(cat.group)
            assert report.holds, cat.name
