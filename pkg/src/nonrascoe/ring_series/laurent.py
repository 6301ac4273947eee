"""Laurent polynomials and bivariate (q, z) series."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .rings import INTEGER, CoefficientRing, RingError
from .series import TruncatedSeries


class LaurentPolynomial:
    """Finitely supported map exponent -> coefficient (int or Fraction).

    Zero coefficients are never stored. Negative exponents are allowed.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[int, object] = {}
        for e, c in items:
            if c:
                v = t.get(e, 0) + c
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        self._t = t

    @classmethod
    def monomial(cls, e: int, c=1) -> LaurentPolynomial:
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, start: int = 0) -> LaurentPolynomial:
        return cls((start + i, c) for i, c in enumerate(coeffs))

    @classmethod
    def from_series(cls, s: TruncatedSeries) -> LaurentPolynomial:
        return cls.from_coeffs(s.coeffs)

    # protocol -----------------------------------------------------------
    @property
    def terms(self) -> dict[int, object]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def coefficient(self, e: int):
        return self._t.get(e, 0)

    __getitem__ = coefficient

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, Rational):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __repr__(self) -> str:
        if not self._t:
            return "LaurentPolynomial(0)"
        body = " + ".join(f"{c}*q^{e}" for e, c in self.items())
        return f"LaurentPolynomial({body})"

    @property
    def min_degree(self) -> int | None:
        return min(self._t) if self._t else None

    @property
    def max_degree(self) -> int | None:
        return max(self._t) if self._t else None

    def is_polynomial(self) -> bool:
        return not self._t or min(self._t) >= 0

    def coefficient_sum(self):
        return sum(self._t.values())

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Rational):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(list(self._t.items()) + list(other._t.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return LaurentPolynomial({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, object] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self._t) != 1:
                raise RingError("only monomials have Laurent-polynomial inverses")
            (e, c), = self._t.items()
            return LaurentPolynomial({-e * (-k): Fraction(1, 1) / Fraction(c) ** (-k)})
        result = LaurentPolynomial({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by q^k."""
        return LaurentPolynomial({e + k: c for e, c in self._t.items()})

    def substitute_power(self, t: int) -> LaurentPolynomial:
        return LaurentPolynomial({e * t: c for e, c in self._t.items()})

    def evaluate(self, x):
        """Exact value at x (int or Fraction); x != 0 when negative exponents occur."""
        if not self._t:
            return 0
        if x == 0 and min(self._t) < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._t.items()), Fraction(0))

    def to_series(self, order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
        """The polynomial as a truncated power series; negative exponents are an error."""
        if not self.is_polynomial():
            raise RingError(f"Laurent polynomial has negative exponent {self.min_degree}")
        return TruncatedSeries.from_terms({e: c for e, c in self._t.items() if e < order}, order, ring)

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in self.items()}


class BivariateSeries:
    """Series in q (truncated at `order`) whose coefficients are Laurent polynomials in z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[LaurentPolynomial]):
        self._c = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> BivariateSeries:
        return cls([LaurentPolynomial()] * order)

    @classmethod
    def monomial(cls, zexp: int, qexp: int, order: int, coeff=1) -> BivariateSeries:
        c = [LaurentPolynomial()] * order
        if 0 <= qexp < order:
            c[qexp] = LaurentPolynomial({zexp: coeff})
        elif qexp < 0:
            raise RingError("negative q exponent in a bivariate series")
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c)

    def coefficient(self, n: int) -> LaurentPolynomial:
        """Coefficient of q^n as a Laurent polynomial in z."""
        return self._c[n]

    __getitem__ = coefficient

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._c == other._c

    def __add__(self, other: BivariateSeries) -> BivariateSeries:
        n = min(self.order, other.order)
        return BivariateSeries(self._c[i] + other._c[i] for i in range(n))

    def __mul__(self, other):
        if isinstance(other, Rational):
            return BivariateSeries(c * other for c in self._c)
        n = min(self.order, other.order)
        out = [LaurentPolynomial()] * n
        for i in range(n):
            if not self._c[i]:
                continue
            for j in range(n - i):
                if other._c[j]:
                    out[i + j] = out[i + j] + self._c[i] * other._c[j]
        return BivariateSeries(out)

    def div_one_minus_zq(self, k: int) -> BivariateSeries:
        """Divide by (1 - z q^k), k >= 1."""
        y = list(self._c)
        zmono = LaurentPolynomial({1: 1})
        for i in range(k, len(y)):
            if y[i - k]:
                y[i] = y[i] + zmono * y[i - k]
        return BivariateSeries(y)

    def specialize(self, z, ring: CoefficientRing | None = None) -> TruncatedSeries:
        """Substitute a nonzero exact value for z."""
        if z == 0:
            raise RingError("z = 0 is not allowed (negative z powers)")
        if ring is None:
            from .rings import RATIONAL
            ring = INTEGER if Fraction(z).denominator == 1 and abs(z) == 1 else RATIONAL
        vals = []
        for c in self._c:
            v = c.evaluate(z) if c else 0
            vals.append(v)
        return TruncatedSeries(ring, vals)

    def to_json(self) -> list[dict[str, str]]:
        return [c.to_json() for c in self._c]
