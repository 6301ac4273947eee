"""Rank parity series, (non-)Rascoe generating functions and their conjugation forms."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..ring_series import (
    INTEGER,
    RATIONAL,
    BivariateSeries,
    CoefficientRing,
    LaurentPolynomial,
    RingError,
    TruncatedSeries,
    distinct_parts_product,
    gaussian_binomial_series,
    inverse_qpoch_running,
    qpoch,
)
from ..ring_series import _kernels
from ._common import SeriesPair, add_shifted, inverse_minus_q_inf, quotient_sum, series_from


def _check_ell(ell: int) -> None:
    if ell < 0:
        raise ValueError("ell must be >= 0")


def sigma2_ell(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sum_n (-1)^n q^(n^2 + ell n) / (-q)_n."""
    _check_ell(ell)

    def entries():
        n = 0
        while n * n + ell * n < order:
            yield n, n * n + ell * n, -1 if n % 2 else 1
            n += 1

    return quotient_sum(order, ring, entries(), c=-1)


def rr_sum(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sum_n q^(n^2 + ell n) / (q)_n, generating parts > ell with gaps >= 2."""
    _check_ell(ell)

    def entries():
        n = 0
        while n * n + ell * n < order:
            yield n, n * n + ell * n, 1
            n += 1

    return quotient_sum(order, ring, entries())


def nonrascoe_gf(order: int, ell: int = 0, ring: CoefficientRing = INTEGER, method: str = "auto") -> TruncatedSeries:
    """(-q)_inf * sigma_{2,ell}: the coefficient of q^n is b_ell(n).

    method "product" multiplies the two factors; "stream" sums
    (-1)^n q^(n^2+ell n) (-q^(n+1))_inf, dividing (-q)_inf by one factor per
    step and keeping only the coefficients still needed. "auto" streams in
    modular rings, where the running values stay small.
    """
    _check_ell(ell)
    if method == "auto":
        method = "stream" if ring.is_modular else "product"
    if method == "product":
        return distinct_parts_product(order, ring) * sigma2_ell(order, ell, ring)
    if method != "stream":
        raise ValueError(f"unknown method {method!r}")
    tail = list(distinct_parts_product(order, ring).coeffs)
    acc = [ring.zero] * order
    n = 0
    while n * n + ell * n < order:
        e = n * n + ell * n
        if n:
            tail = _kernels.div_binomial(ring, tail[: order - e], n, -1)
        sign = -1 if n % 2 else 1
        for i, v in enumerate(tail[: order - e]):
            if v:
                acc[e + i] += sign * v
        n += 1
    return series_from(acc, ring)


def _nonrascoe_inner(order: int, ell: int, ring: CoefficientRing) -> list:
    """sum_{n>=1} q^(n(n+1)/2) sum_m [n+ell-1, m+ell-1] q^(m^2+ell m)/(q)_m, as a list."""
    acc = [ring.zero] * order
    m = 0
    while m * m + ell * m + max(m, 1) * (max(m, 1) + 1) // 2 < order:
        base = m * m + ell * m
        # P_m(q) = sum_{n >= max(m,1)} q^(n(n+1)/2) [n+ell-1, m+ell-1]
        poly = [0] * (order - base)
        n = max(m, 1)
        while n * (n + 1) // 2 < order - base:
            g = gaussian_binomial_series(n + ell - 1, m + ell - 1, order - base - n * (n + 1) // 2, ring)
            add_shifted(poly, g, n * (n + 1) // 2)
            n += 1
        if any(poly):
            inv = _inverse_qpochs(order, ring, m)[m]
            prod = _kernels.mul(ring, ring.normalize(poly), list(inv.coeffs[: order - base]), order - base)
            add_shifted(acc, prod, base)
        m += 1
    return acc


def nonrascoe_double_sum(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """Double sum over (number of parts, parts above parts+ell) generating b_ell.

    The displayed sum starts at weight 1; the constant 1 = b_ell(0) is added.
    """
    _check_ell(ell)
    acc = _nonrascoe_inner(order, ell, ring)
    if order:
        acc[0] += 1
    return series_from(acc, ring)


def rascoe_double_sum(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sum_{n>=1} q^(n(n+1)/2) sum_{m=0}^{n-1} [n+ell-1, m+ell] q^((m+ell)(m+1))/(q)_m."""
    _check_ell(ell)
    acc = [ring.zero] * order
    m = 0
    while (m + ell) * (m + 1) + (m + 1) * (m + 2) // 2 < order:
        base = (m + ell) * (m + 1)
        poly = [0] * (order - base)
        n = m + 1
        while n * (n + 1) // 2 < order - base:
            g = gaussian_binomial_series(n + ell - 1, m + ell, order - base - n * (n + 1) // 2, ring)
            add_shifted(poly, g, n * (n + 1) // 2)
            n += 1
        if any(poly):
            inv = _inverse_qpochs(order, ring, m)[m]
            prod = _kernels.mul(ring, ring.normalize(poly), list(inv.coeffs[: order - base]), order - base)
            add_shifted(acc, prod, base)
        m += 1
    return series_from(acc, ring)


def sigma_general(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sigma_{2,ell} as (1/(-q)_inf) sum_n q^(n(n+1)/2) sum_m [n+ell-1, m+ell-1] q^(m^2+ell m)/(q)_m.

    The n = 0 term is taken as 1 (the empty partition) for every ell.
    """
    _check_ell(ell)
    acc = _nonrascoe_inner(order, ell, ring)
    if order:
        acc[0] += 1
    return series_from(acc, ring) * inverse_minus_q_inf(order, ring)


def rr_rank_bivariate(order: int, ell: int = 0) -> BivariateSeries:
    """sum_n z^(n+ell-1) q^(n^2+ell n) / (zq)_n; the n = 0 term z^(ell-1) is kept."""
    _check_ell(ell)
    total = BivariateSeries.zero(order)
    n = 0
    while n * n + ell * n < order:
        term = BivariateSeries.monomial(n + ell - 1, n * n + ell * n, order)
        for k in range(1, n + 1):
            term = term.div_one_minus_zq(k)
        total = total + term
        n += 1
    return total


def largest_repeat_bivariate(order: int, ell: int = 0) -> BivariateSeries:
    """sum_n z^(n+ell) q^(n^2+ell n) / (zq)_n: z counts parts, largest part n repeating >= n+ell times."""
    _check_ell(ell)
    total = BivariateSeries.zero(order)
    n = 0
    while n * n + ell * n < order:
        term = BivariateSeries.monomial(n + ell, n * n + ell * n, order)
        for k in range(1, n + 1):
            term = term.div_one_minus_zq(k)
        total = total + term
        n += 1
    return total


def smallest_repeat_bivariate(order: int, ell: int = 0) -> BivariateSeries:
    """sum_i z^i q^(i^2+ell i) (-q^(i+1))_inf: z tracks the repeated smallest part."""
    _check_ell(ell)
    coeffs = [LaurentPolynomial() for _ in range(order)]
    tail = list(distinct_parts_product(order, INTEGER).coeffs)
    i = 0
    while i * i + ell * i < order:
        e = i * i + ell * i
        if i:
            tail = _kernels.div_binomial(INTEGER, tail[: order - e], i, -1)
        for k, v in enumerate(tail[: order - e]):
            if v:
                coeffs[e + k] = coeffs[e + k] + LaurentPolynomial({i: v})
        i += 1
    return BivariateSeries(coeffs)


# -- conjugation forms ---------------------------------------------------------

def _weighted_sigma(order: int, ell: int, z: Fraction, ring: CoefficientRing) -> TruncatedSeries:
    """sum_n z^n q^(n^2+ell n) / (-q)_n."""

    def entries():
        n = 0
        while n * n + ell * n < order:
            yield n, n * n + ell * n, z ** n
            n += 1

    return quotient_sum(order, ring, entries(), c=-1)


@lru_cache(maxsize=64)
def _inverse_qpoch_table(order: int, ring: CoefficientRing, count: int) -> tuple[TruncatedSeries, ...]:
    out = []
    for k, s in enumerate(inverse_qpoch_running(order, ring)):
        if k > count:
            break
        out.append(s)
    return tuple(out)


def _inverse_qpochs(order: int, ring: CoefficientRing, count: int) -> tuple[TruncatedSeries, ...]:
    """1/(q)_k for k = 0..count."""
    return _inverse_qpoch_table(order, ring, count)


def conjugation_rep(order: int, z, ell: int = 0, form: str = "small1") -> SeriesPair:
    """Both sides of a conjugation identity for sum_n z^n q^(n^2+ell n)/(-q)_n.

    form "small1": (z^-ell/(-q)_inf) sum_n q^(n(n+1)/2 - ell n) sum_{i=ell}^n z^i q^(i(i-1)/2)/(q)_(n-i).
    form "small2" (ell = 0 only): Euler-theorem rearrangement
        (-q/z)_inf/(-q)_inf sum_n (-z)_n q^(n(n+1)/2)
        - (1/(-q)_inf) sum_n q^(n(n+1)/2) sum_{i>=1} z^-i q^(i(i+1)/2)/(q)_(n+i).
    """
    _check_ell(ell)
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    ring = RATIONAL
    lhs = _weighted_sigma(order, ell, z, ring)
    inv_mq = inverse_minus_q_inf(order, ring)
    if form == "small1":
        # smallest exponent of the n-th block is (n-ell)(n-ell+1)/2
        nmax = ell
        while (nmax + 1 - ell) * (nmax + 2 - ell) // 2 < order:
            nmax += 1
        inv = _inverse_qpochs(order, ring, nmax)
        acc = [Fraction(0)] * order
        for n in range(ell, nmax + 1):
            for i in range(ell, n + 1):
                e = n * (n + 1) // 2 - ell * n + i * (i - 1) // 2
                if e < order:
                    add_shifted(acc, inv[n - i], e, z ** (i - ell))
        rhs = series_from(acc, ring) * inv_mq
        return SeriesPair(lhs, rhs)
    if form == "small2":
        if ell:
            raise ValueError("form small2 exists only for ell = 0")
        first = [Fraction(0)] * order
        n = 0
        while n * (n + 1) // 2 < order:
            poly = qpoch(0, n, order, ring, a_coeff=-z)
            add_shifted(first, poly, n * (n + 1) // 2)
            n += 1
        prod = qpoch(1, None, order, ring, a_coeff=-1 / z)
        part1 = prod * series_from(first, ring)
        nmax = 0
        while (nmax + 1) * (nmax + 2) // 2 + 1 < order:
            nmax += 1
        inv = _inverse_qpochs(order, ring, 2 * nmax + 2)
        second = [Fraction(0)] * order
        n = 0
        while n * (n + 1) // 2 + 1 < order:
            i = 1
            while n * (n + 1) // 2 + i * (i + 1) // 2 < order:
                add_shifted(second, inv[n + i], n * (n + 1) // 2 + i * (i + 1) // 2, z ** (-i))
                i += 1
            n += 1
        rhs = (part1 - series_from(second, ring)) * inv_mq
        return SeriesPair(lhs, rhs)
    raise ValueError(f"unknown conjugation form {form!r}")


def sigma2_ell_shifted_conjugate(order: int, ell: int = 0, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sigma_{2,ell} via z = -q^ell in the first conjugation form:

    (1/(-q)_inf) sum_n q^(n(n+1)/2) sum_{m<=n} (-1)^m q^(ell m + m(m-1)/2) / (q)_(n-m).
    """
    _check_ell(ell)
    nmax = 0
    while (nmax + 1) * (nmax + 2) // 2 < order:
        nmax += 1
    inv = _inverse_qpochs(order, ring, nmax)
    acc = [ring.zero] * order
    for n in range(nmax + 1):
        for m in range(n + 1):
            e = n * (n + 1) // 2 + ell * m + m * (m - 1) // 2
            if e < order:
                add_shifted(acc, inv[n - m], e, -1 if m % 2 else 1)
    return series_from(acc, ring) * inverse_minus_q_inf(order, ring)

