"""Exact integer and rational matrices.

Ranks are computed by fraction-free (Bareiss) elimination via the kernel
backends; rationals appear only in the averaging-projector checks, as integer
matrices with an explicit common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from walllat import kernels

ExactVector = tuple[int, ...]


class ExactMatrix:
    """An immutable integer matrix with arbitrary-precision entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows: tuple[ExactVector, ...] = tuple(tuple(int(v) for v in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return kernels.exact_rank(self.rows)

    def stack(self, *others: "ExactMatrix") -> "ExactMatrix":
        rows = list(self.rows)
        for other in others:
            if other.nrows and self.ncols and other.ncols != self.ncols:
                raise ValueError("column counts differ")
            rows.extend(other.rows)
        return ExactMatrix(rows)

    def row(self, i: int) -> ExactVector:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactMatrix) and other.rows == self.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def stack_rank(blocks) -> int:
    """Rank of the vertical stack of row blocks (each a sequence of int rows)."""
    rows: list = []
    for block in blocks:
        if isinstance(block, ExactMatrix):
            rows.extend(block.rows)
        else:
            rows.extend(block)
    if not rows:
        return 0
    return kernels.exact_rank(rows)


@dataclass(frozen=True)
class RationalMatrix:
    """num / den with an integer numerator matrix and positive denominator."""

    num: np.ndarray
    den: int

    @staticmethod
    def of(num: np.ndarray, den: int) -> "RationalMatrix":
        if den <= 0:
            raise ValueError("denominator must be positive")
        return RationalMatrix(np.asarray(num, dtype=np.int64), den)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        _guard_product(self.num, other.num)
        return RationalMatrix(self.num @ other.num, self.den * other.den)

    def equals(self, other: "RationalMatrix") -> bool:
        g = gcd(self.den, other.den)
        left = self.num * (other.den // g)
        right = other.num * (self.den // g)
        return bool(np.array_equal(left, right))

    def trace_fraction(self) -> tuple[int, int]:
        """Trace as a reduced (numerator, denominator) pair."""
        t = int(np.trace(self.num))
        g = gcd(abs(t), self.den) or 1
        return t // g, self.den // g


def _guard_product(a: np.ndarray, b: np.ndarray) -> None:
    # int64 matmul must not overflow: |entry| * |entry| * inner-dim < 2^62.
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * max(a.shape[1], 1)
    if bound >= 1 << 62:
        raise OverflowError("rational matrix product would overflow int64")
