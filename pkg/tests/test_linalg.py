"""Exact rank and rational projector matrices."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from walllat.linalg import ExactMatrix, RationalMatrix, stack_rank

from conftest import rank_by_fractions

matrices = st.integers(1, 6).flatmap(
    lambda ncols: st.lists(
        st.lists(st.integers(-30, 30), min_size=ncols, max_size=ncols),
        min_size=1,
        max_size=6,
    )
)


class TestRank:
    def test_simple_ranks(self):
        assert ExactMatrix([[1, 2], [2, 4]]).rank() == 1
        assert ExactMatrix([[1, 0], [0, 1]]).rank() == 2
        assert ExactMatrix([[0, 0], [0, 0]]).rank() == 0

    def test_empty(self):
        assert ExactMatrix([]).rank() == 0

    @settings(max_examples=200, deadline=None)
    @given(matrices)
    def test_rank_matches_fraction_elimination(self, rows):
        assert ExactMatrix(rows).rank() == rank_by_fractions(rows)

    @settings(max_examples=100, deadline=None)
    @given(matrices, st.randoms(use_true_random=False))
    def test_rank_invariant_under_row_permutation(self, rows, rnd):
        shuffled = list(rows)
        rnd.shuffle(shuffled)
        assert ExactMatrix(rows).rank() == ExactMatrix(shuffled).rank()

    def test_big_integer_entries(self):
        big = 10**30
        rows = [[big, 0], [0, big], [big, big]]
        assert ExactMatrix(rows).rank() == 2

    def test_stack_rank(self):
        a = ExactMatrix([[1, 0, 0]])
        b = ExactMatrix([[0, 1, 0], [1, 1, 0]])
        assert stack_rank([a, b]) == 2


class TestRationalMatrix:
    def test_product_and_equality(self):
        half_eye = RationalMatrix.of(np.eye(2, dtype=np.int64), 2)
        quarter = half_eye @ half_eye
        assert quarter.den == 4
        assert quarter.equals(RationalMatrix.of(np.eye(2, dtype=np.int64), 4))
        assert not quarter.equals(half_eye)

    def test_trace_fraction(self):
        m = RationalMatrix.of(np.array([[3, 0], [0, 3]], dtype=np.int64), 6)
        assert m.trace_fraction() == (1, 1)

    def test_rejects_nonpositive_denominator(self):
        with pytest.raises(ValueError):
            RationalMatrix.of(np.eye(1, dtype=np.int64), 0)
