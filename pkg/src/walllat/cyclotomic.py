"""Exact arithmetic in cyclotomic fields Q(zeta_c).

Elements are stored as rational coefficient vectors over 1, zeta, ...,
zeta^{c-1} modulo x^c - 1; equality and rationality tests reduce modulo the
c-th cyclotomic polynomial, so all comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(c: int) -> tuple[int, ...]:
    """Integer coefficients of the c-th cyclotomic polynomial, low degree first."""
    if c < 1:
        raise ValueError("conductor must be positive")
    # x^c - 1 divided by the cyclotomic polynomials of proper divisors
    poly: list[int] = [-1] + [0] * (c - 1) + [1]
    for d in range(1, c):
        if c % d == 0:
            poly = _exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1] // den[-1]
        out[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] -= coeff * d
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@dataclass(frozen=True)
class Cyc:
    """An element of Q(zeta_conductor)."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def zero(conductor: int) -> "Cyc":
        return Cyc(conductor, (Fraction(0),) * conductor)

    @staticmethod
    def from_int(value: int, conductor: int) -> "Cyc":
        coeffs = [Fraction(0)] * conductor
        coeffs[0] = Fraction(value)
        return Cyc(conductor, tuple(coeffs))

    @staticmethod
    def root_power(k: int, conductor: int) -> "Cyc":
        coeffs = [Fraction(0)] * conductor
        coeffs[k % conductor] = Fraction(1)
        return Cyc(conductor, tuple(coeffs))

    @staticmethod
    def from_vector(values, conductor: int) -> "Cyc":
        vec = [Fraction(v) for v in values]
        if len(vec) != conductor:
            raise ValueError("coefficient vector length must equal the conductor")
        return Cyc(conductor, tuple(vec))

    def _check(self, other: "Cyc") -> None:
        if other.conductor != self.conductor:
            raise ValueError("conductors differ")

    def __add__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        return Cyc(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        return Cyc(self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Cyc") -> "Cyc":
        self._check(other)
        c = self.conductor
        out = [Fraction(0)] * c
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % c] += a * b
        return Cyc(c, tuple(out))

    def scale(self, factor: Fraction | int) -> "Cyc":
        f = Fraction(factor)
        return Cyc(self.conductor, tuple(a * f for a in self.coeffs))

    def conjugate(self) -> "Cyc":
        c = self.conductor
        out = [Fraction(0)] * c
        for i, a in enumerate(self.coeffs):
            out[(-i) % c] += a
        return Cyc(c, tuple(out))

    def reduced(self) -> tuple[Fraction, ...]:
        """Canonical coefficients modulo the cyclotomic polynomial."""
        phi = cyclotomic_polynomial(self.conductor)
        deg = len(phi) - 1
        work = list(self.coeffs)
        for k in range(len(work) - 1, deg - 1, -1):
            coeff = work[k]
            if coeff:
                work[k] = Fraction(0)
                for i in range(deg):
                    work[k - deg + i] -= coeff * phi[i]
        return tuple(work[:deg])

    def equals(self, other: "Cyc") -> bool:
        self._check(other)
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.reduced())

    def as_fraction(self) -> Fraction:
        """The rational value, if the element is rational; raises otherwise."""
        red = self.reduced()
        if any(v != 0 for v in red[1:]):
            raise ArithmeticError("value is not rational")
        return red[0]

    def __repr__(self) -> str:
        return f"Cyc(c={self.conductor}, {[str(v) for v in self.reduced()]})"
