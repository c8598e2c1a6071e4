"""Coefficient fields for homology-level linear algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Rationals", "PrimeField", "QQ", "GF2", "parse_coeff"]


@dataclass(frozen=True)
class Rationals:
    name: str = "q"

    def convert(self, a):
        return Fraction(a)

    def reduce(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(a)

    def to_json(self, a):
        a = Fraction(a)
        return a.numerator if a.denominator == 1 else str(a)


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"zp:{self.p}"

    def convert(self, a):
        return int(a) % self.p

    def reduce(self, a):
        return a % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def to_json(self, a):
        return int(a) % self.p


QQ = Rationals()
GF2 = PrimeField(2)


def parse_coeff(text: str):
    """``z`` → None (integers); ``q``; ``z2``; ``zp:<p>``."""
    text = text.strip().lower()
    if text == "z":
        return None
    if text == "q":
        return QQ
    if text == "z2":
        return GF2
    if text.startswith("zp:"):
        try:
            return PrimeField(int(text[3:]))
        except ValueError as exc:
            raise ValueError(f"bad coefficient {text!r}: {exc}") from None
    raise ValueError(f"unknown coefficient {text!r}; expected z, q, z2 or zp:<p>")
