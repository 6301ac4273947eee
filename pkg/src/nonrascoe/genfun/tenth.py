"""Ramanujan's lost-notebook relation, its two specializations, tenth-order mock theta
series and the level-5 Hauptmodul."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..ring_series import (
    INTEGER,
    RATIONAL,
    CoefficientRing,
    TruncatedSeries,
    euler_product,
    theta_sum,
)
from ..ring_series import _kernels
from ._common import SeriesPair, add_shifted, inverse_minus_q_inf, quotient_sum, series_from
from .core import sigma2_ell


def mock10_X(order: int, start: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sum_{n>=start} (-1)^n q^(n^2) / (-q)_(2n)."""

    def entries():
        n = start
        while n * n < order:
            yield 2 * n, n * n, -1 if n % 2 else 1
            n += 1

    return quotient_sum(order, ring, entries(), c=-1)


def mock10_chi(order: int, start: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sum_{n>=start} (-1)^n q^((n+1)^2) / (-q)_(2n+1)."""

    def entries():
        n = start
        while (n + 1) ** 2 < order:
            yield 2 * n + 1, (n + 1) ** 2, -1 if n % 2 else 1
            n += 1

    return quotient_sum(order, ring, entries(), c=-1)


@dataclass(frozen=True)
class Hauptmodul:
    """q^-1 (q;q)_inf^6 / (q^5;q^5)_inf^6 = polar/q + sum_{n>=0} coeffs[n] q^n."""

    polar: int
    coeffs: TruncatedSeries

    def coefficient(self, n: int) -> int:
        if n < -1:
            return 0
        if n == -1:
            return self.polar
        return self.coeffs[n]


def hauptmodul_j5(order: int, ring: CoefficientRing = INTEGER) -> Hauptmodul:
    f = euler_product(1, order + 1, ring) ** 6 * (euler_product(5, order + 1, ring) ** 6).inverse()
    return Hauptmodul(polar=f[0], coeffs=TruncatedSeries._raw(ring, list(f.coeffs[1:])))


# -- the lost-notebook relation, expanded in x with q = x^4 ---------------------------

def lost_notebook_sides(order: int, a, b) -> SeriesPair:
    """Both sides of the lost-notebook relation as x-series over QQ (q = x^4)."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0:
        raise ValueError("a must be nonzero")
    ring = RATIONAL

    def a_entries(extra: int, apow):
        m = 0
        while 4 * m * m + extra * m < order:
            yield m, 4 * m * m + extra * m, apow(m)
            m += 1

    def b_entries(shift: int):
        n = 0
        while (n + shift) ** 2 < order:
            yield n, (n + shift) ** 2, (a * b) ** n
            n += 1

    a1 = quotient_sum(order, ring, a_entries(0, lambda m: a ** (-2 * m)), c=b, step=4)
    b1 = quotient_sum(order, ring, b_entries(0), step=4)
    a2 = quotient_sum(order, ring, a_entries(4, lambda m: a ** (-2 * m - 1)), c=b, step=4)
    b2 = quotient_sum(order, ring, b_entries(1), step=4)
    lhs = a1 * b1 + a2 * b2

    theta = theta_sum(2, 0, order, lambda n: a ** n, ring)
    prod = [ring.one] + [ring.zero] * (order - 1)
    k = 1
    while 4 * k < order:
        prod = _kernels.div_binomial(ring, prod, 4 * k, b)
        k += 1
    first = theta * series_from(prod, ring)
    # sum_{n>=1} a^n x^(n^2) sum_{l<n} b^l / (x^4;x^4)_l
    tail = [ring.zero] * order
    partial = [ring.zero] * order
    run = [ring.one] + [ring.zero] * (order - 1)
    n = 1
    while n * n < order:
        l = n - 1
        if l:
            run = _kernels.div_binomial(ring, run, 4 * l, 1) if 4 * l < order else run
        bl = b ** l
        if bl:
            partial = [p + bl * r for p, r in zip(partial, run)]
        add_shifted(tail, partial, n * n, a ** n)
        n += 1
    rhs = first - series_from(tail, ring).scale(1 - b)
    return SeriesPair(lhs, rhs, 0, "x^4")


# -- the two real/imaginary specializations ---------------------------------------

def _alternating_partials(order: int, ring: CoefficientRing, step: int, upto):
    """Yield sum_{k=0}^{upto(n)} (-1)^k / (x^step;x^step)_k for n = 0, 1, ..."""
    partial = [ring.zero] * order
    run = [ring.one] + [ring.zero] * (order - 1)
    have = -1
    n = 0
    while True:
        target = upto(n)
        while have < target:
            have += 1
            if have:
                if step * have < order:
                    run = _kernels.div_binomial(ring, run, step * have, 1)
            sign = -1 if have % 2 else 1
            partial = [p + sign * r for p, r in zip(partial, run)]
        yield partial
        n += 1


def realpart_sides(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> SeriesPair:
    """Real-part specialization of the lost-notebook relation, both sides times q^s, s = floor(ell^2/4)."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    s = ell * ell // 4

    def u_entries():
        n = 0
        while n <= ell or n * n - n * ell + s < order:
            e = n * n - n * ell + s
            yield 2 * n, e, -1 if n % 2 else 1
            n += 1

    def w_entries():
        n = 0
        while n <= ell or (n + 1) ** 2 - n * ell + s < order:
            e = (n + 1) ** 2 - n * ell + s
            yield 2 * n + 1, e, -1 if n % 2 else 1
            n += 1

    u = quotient_sum(order, ring, u_entries())
    w = quotient_sum(order, ring, w_entries())
    lhs = sigma2_ell(order, ell, ring) * u - sigma2_ell(order, ell + 1, ring) * w

    theta = theta_sum(2, -2 * ell, order, lambda n: -1 if n % 2 else 1, ring, offset=s)
    first = inverse_minus_q_inf(order, ring) * theta
    tail = [ring.zero] * order
    partials = _alternating_partials(order, ring, 1, lambda n: 2 * n - 1)
    next(partials)
    n = 1
    while n <= ell or n * n - n * ell + s < order:
        part = next(partials)
        e = n * n - n * ell + s
        if e < order:
            add_shifted(tail, part, e, -1 if n % 2 else 1)
        n += 1
    rhs = first - series_from(tail, ring).scale(2)
    return SeriesPair(lhs, rhs, s, "q")


def imagpart_sides(order: int, ell: int = 0, form: str = "corrected") -> SeriesPair:
    """Imaginary-part specialization in x with q = x^2, both sides times x^(2s), s = floor((ell-1)^2/4).

    form "corrected": second left-hand inner sum carries q^(n^2+n-n ell+ell);
    form "printed": it carries q^(n^2+n-n ell+ell/2) (fails for ell > 0).
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if form not in ("corrected", "printed"):
        raise ValueError("form must be 'corrected' or 'printed'")
    ring = INTEGER
    s2 = 2 * ((ell - 1) ** 2 // 4)
    extra = 2 * ell if form == "corrected" else ell

    def expo(n):  # x-exponent of q^(n^2+n-n ell) plus the offset
        return 2 * (n * n + n - n * ell) + s2

    def first_entries():
        n = 0
        while n <= ell or expo(n) < order:
            yield 2 * n + 1, expo(n), -1 if n % 2 else 1
            n += 1

    def second_entries():
        n = 0
        while n <= ell or expo(n) + extra < order:
            yield 2 * n, expo(n) + extra, -1 if n % 2 else 1
            n += 1

    half = (order + 1) // 2
    sig0 = sigma2_ell(half, ell, ring).substitute_power(2, order)
    sig1 = sigma2_ell(half, ell + 1, ring).substitute_power(2, order)
    lhs = (sig0 * quotient_sum(order, ring, first_entries(), step=2)
           + sig1 * quotient_sum(order, ring, second_entries(), step=2))

    theta = theta_sum(4, 4 - 4 * ell, order, lambda n: -1 if n % 2 else 1, ring, offset=s2)
    inv = inverse_minus_q_inf(half, ring).substitute_power(2, order)
    tail = [ring.zero] * order
    partials = _alternating_partials(order, ring, 2, lambda n: 2 * n)
    n = 0
    while n <= ell or expo(n) < order:
        part = next(partials)
        if expo(n) < order:
            add_shifted(tail, part, expo(n), -1 if n % 2 else 1)
        n += 1
    rhs = series_from(tail, ring).scale(2) - inv * theta
    return SeriesPair(lhs, rhs, s2, "x^2")
