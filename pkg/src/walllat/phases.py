"""Exact root-of-unity phases as reduced fractions of a full turn."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, order=True)
class Phase:
    """The phase exp(2*pi*i * num/den), stored with num reduced mod den.

    Comparable across moduli: Phase.of(1, 2) == Phase.of(2, 4).
    """

    num: int
    den: int

    @staticmethod
    def of(exponent: int, modulus: int) -> "Phase":
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        e = exponent % modulus
        g = gcd(e, modulus)
        if g == 0:
            return Phase(0, 1)
        return Phase(e // g, modulus // g)

    @property
    def is_one(self) -> bool:
        return self.num == 0

    def __add__(self, other: "Phase") -> "Phase":
        den = self.den * other.den // gcd(self.den, other.den)
        return Phase.of(self.num * (den // self.den) + other.num * (den // other.den), den)

    def __neg__(self) -> "Phase":
        return Phase.of(-self.num, self.den)

    def __sub__(self, other: "Phase") -> "Phase":
        return self + (-other)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __repr__(self) -> str:
        return f"Phase({self.num}/{self.den})"


def lift_exponent(exponent: int, modulus: int, target_modulus: int) -> int:
    """Rewrite a phase exponent mod ``modulus`` as one mod ``target_modulus``."""
    if target_modulus % modulus != 0:
        raise ValueError("target modulus must be a multiple of the source modulus")
    return (exponent * (target_modulus // modulus)) % target_modulus
