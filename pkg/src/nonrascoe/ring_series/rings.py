"""Exact coefficient rings: integers, rationals and integers modulo m."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational


class RingError(ValueError):
    """Raised on ring mismatches, non-units and non-representable values."""


@dataclass(frozen=True)
class CoefficientRing:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("integer", "rational", "modular"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == "modular":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise RingError("modular ring needs an integer modulus >= 2")
        elif self.modulus is not None:
            raise RingError(f"{self.kind} ring takes no modulus")

    @property
    def is_modular(self) -> bool:
        return self.kind == "modular"

    @property
    def is_integral(self) -> bool:
        """True when elements are stored as Python ints."""
        return self.kind != "rational"

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def __str__(self) -> str:
        if self.kind == "integer":
            return "ZZ"
        if self.kind == "rational":
            return "QQ"
        return f"Z/{self.modulus}"

    def coerce(self, value):
        """Map an int or rational into this ring."""
        if isinstance(value, bool) or not isinstance(value, Rational):
            raise RingError(f"cannot coerce {value!r} into {self}")
        if self.kind == "rational":
            return Fraction(value)
        num, den = value.numerator, value.denominator
        if self.kind == "integer":
            if den != 1:
                raise RingError(f"{value} is not an integer")
            return int(num)
        m = self.modulus
        if den == 1:
            return int(num) % m
        if gcd(den, m) != 1:
            raise RingError(f"denominator of {value} is not invertible mod {m}")
        return int(num) * pow(int(den), -1, m) % m

    def normalize(self, coeffs: list) -> list:
        """Reduce raw int results (modular) in place; identity otherwise."""
        if self.kind == "modular":
            m = self.modulus
            for i, c in enumerate(coeffs):
                if c < 0 or c >= m:
                    coeffs[i] = c % m
        return coeffs

    def is_unit(self, value) -> bool:
        if self.kind == "integer":
            return value in (1, -1)
        if self.kind == "rational":
            return value != 0
        return gcd(value, self.modulus) == 1

    def inverse(self, value):
        if not self.is_unit(value):
            raise RingError(f"{value} is not a unit in {self}")
        if self.kind == "integer":
            return value
        if self.kind == "rational":
            return 1 / Fraction(value)
        return pow(value, -1, self.modulus)

    def to_str(self, value) -> str:
        if isinstance(value, Fraction):
            return str(value) if value.denominator != 1 else str(value.numerator)
        return str(value)

    def from_str(self, text: str):
        return self.coerce(Fraction(text))

    def reduce_from(self, other: CoefficientRing, value):
        """Image of an element of `other` under the canonical map into self."""
        if other == self:
            return value
        return self.coerce(value)


INTEGER = CoefficientRing("integer")
RATIONAL = CoefficientRing("rational")


def modular(m: int) -> CoefficientRing:
    return CoefficientRing("modular", m)


def parse_ring(text: str) -> CoefficientRing:
    """Parse 'int', 'rat' or 'modN' / 'mod:N' (also 'ZZ', 'QQ', 'Z/N')."""
    t = text.strip().lower()
    if t in ("int", "integer", "zz"):
        return INTEGER
    if t in ("rat", "rational", "qq"):
        return RATIONAL
    for prefix in ("mod:", "mod", "z/"):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return modular(int(t[len(prefix):]))
    raise RingError(f"unknown ring {text!r}")
