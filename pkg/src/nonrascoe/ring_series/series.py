"""Truncated univariate power series in q over an exact coefficient ring."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from . import _kernels
from .rings import INTEGER, CoefficientRing, RingError


class TruncatedSeries:
    """Coefficients of q^0 .. q^(order-1); immutable.

    Mixed-order arithmetic truncates to the smaller order.
    """

    __slots__ = ("ring", "_c")

    def __init__(self, ring: CoefficientRing, coeffs: Iterable, *, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self._c = tuple(coeffs)
        else:
            self._c = tuple(ring.coerce(x) for x in coeffs)

    # construction -------------------------------------------------------
    @classmethod
    def _raw(cls, ring: CoefficientRing, coeffs: list) -> TruncatedSeries:
        return cls(ring, coeffs, _trusted=True)

    @classmethod
    def zero(cls, order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
        return cls._raw(ring, [ring.zero] * order)

    @classmethod
    def one(cls, order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
        return cls.monomial(0, order, ring)

    @classmethod
    def monomial(cls, k: int, order: int, ring: CoefficientRing = INTEGER, coeff=1) -> TruncatedSeries:
        """coeff * q^k truncated at `order` (k >= 0)."""
        if k < 0:
            raise RingError("negative exponent in a power series")
        c = [ring.zero] * order
        if k < order:
            c[k] = ring.coerce(coeff)
        return cls._raw(ring, c)

    @classmethod
    def from_terms(cls, terms: dict[int, object], order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
        c = [ring.zero] * order
        for k, v in terms.items():
            if k < 0:
                raise RingError(f"negative exponent {k} in a power series")
            if k < order:
                c[k] += ring.coerce(v)
        return cls._raw(ring, ring.normalize(c))

    # basic protocol -----------------------------------------------------
    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring == other.ring and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.ring, self._c))

    def __repr__(self) -> str:
        shown = ", ".join(self.ring.to_str(x) for x in self._c[:12])
        more = ", ..." if self.order > 12 else ""
        return f"TruncatedSeries({self.ring}, order={self.order}, [{shown}{more}])"

    def _check(self, other: TruncatedSeries) -> None:
        if self.ring != other.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Rational):
            return self + TruncatedSeries.monomial(0, self.order, self.ring, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        a, b = self._c, other._c
        return TruncatedSeries._raw(self.ring, self.ring.normalize([a[i] + b[i] for i in range(n)]))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(self.ring, self.ring.normalize([-x for x in self._c]))

    def __sub__(self, other):
        if isinstance(other, Rational):
            return self + (-other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries._raw(self.ring, _kernels.mul(self.ring, list(self._c), list(other._c), n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self.scale(self.ring.inverse(self.ring.coerce(other)))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> TruncatedSeries:
        c = self.ring.coerce(c)
        return TruncatedSeries._raw(self.ring, self.ring.normalize([c * x for x in self._c]))

    def inverse(self) -> TruncatedSeries:
        return TruncatedSeries._raw(self.ring, _kernels.inverse(self.ring, list(self._c), self.order))

    def mul_binomial(self, k: int, c=1) -> TruncatedSeries:
        """Multiply by (1 - c q^k)."""
        return TruncatedSeries._raw(self.ring, _kernels.mul_binomial(self.ring, list(self._c), k, self.ring.coerce(c)))

    def div_binomial(self, k: int, c=1) -> TruncatedSeries:
        """Divide by (1 - c q^k), k >= 1."""
        return TruncatedSeries._raw(self.ring, _kernels.div_binomial(self.ring, list(self._c), k, self.ring.coerce(c)))

    # structural ---------------------------------------------------------
    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise RingError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries._raw(self.ring, self._c[:order])

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by q^k. Negative k requires the low coefficients to vanish."""
        n = self.order
        if k >= 0:
            return TruncatedSeries._raw(self.ring, [self.ring.zero] * min(k, n) + list(self._c[: max(n - k, 0)]))
        k = -k
        if any(self._c[:k]):
            raise RingError(f"shift by q^-{k} leaves negative exponents")
        return TruncatedSeries._raw(self.ring, self._c[k:])

    def substitute_power(self, t: int, order: int | None = None) -> TruncatedSeries:
        """a(q^t) truncated at `order` (default: t * self.order, the exact range)."""
        if t < 1:
            raise RingError("substitution power must be >= 1")
        if order is None:
            order = t * self.order
        if order > t * self.order:
            raise RingError("target order exceeds the known range of a(q^t)")
        c = [self.ring.zero] * order
        for i, x in enumerate(self._c):
            if i * t >= order:
                break
            c[i * t] = x
        return TruncatedSeries._raw(self.ring, c)

    def change_ring(self, ring: CoefficientRing) -> TruncatedSeries:
        """Image under the canonical map (e.g. ZZ -> Z/m, ZZ -> QQ)."""
        return TruncatedSeries._raw(ring, [ring.reduce_from(self.ring, x) for x in self._c])

    def first_mismatch(self, other: TruncatedSeries) -> int | None:
        n = min(self.order, other.order)
        for i in range(n):
            if self._c[i] != other._c[i]:
                return i
        return None

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self._c) if x]

    # serialization ------------------------------------------------------
    def to_strings(self) -> list[str]:
        return [self.ring.to_str(x) for x in self._c]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    @classmethod
    def from_json(cls, text: str, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
        return cls(ring, [Fraction(s) for s in json.loads(text)])


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    return a.inverse()


def series_substitute_power(a: TruncatedSeries, t: int, order: int | None = None) -> TruncatedSeries:
    return a.substitute_power(t, order)


def series_sum(terms: Sequence[TruncatedSeries], order: int, ring: CoefficientRing) -> TruncatedSeries:
    acc = [ring.zero] * order
    for s in terms:
        if s.ring != ring:
            raise RingError(f"ring mismatch: {s.ring} vs {ring}")
        if s.order < order:
            raise RingError(f"summand of order {s.order} is shorter than {order}")
        for i, x in enumerate(s.coeffs[:order]):
            if x:
                acc[i] += x
    return TruncatedSeries._raw(ring, ring.normalize(acc))
