"""Generating functions of unrestricted Rascoe (c) and non-Rascoe (e) partitions."""

from __future__ import annotations

from typing import NamedTuple

from ..ring_series import (
    INTEGER,
    CoefficientRing,
    TruncatedSeries,
    euler_product,
    gaussian_binomial_series,
)
from ._common import add_shifted, series_from


class UnrestrictedSeries(NamedTuple):
    c_double_sum: TruncatedSeries
    c_product: TruncatedSeries
    e_double_sum: TruncatedSeries
    e_product: TruncatedSeries


def _grouped_sum(order: int, ring: CoefficientRing, exponent, bottom) -> list:
    """sum_{n>=2} sum_{m=0}^{n} [2n-m-2, bottom(n, m)] q^exponent(n, m) / (q)_m, grouped by m."""
    acc = [ring.zero] * order
    inv = TruncatedSeries.one(order, ring)  # 1/(q)_m
    m = 0
    while exponent(max(2, m), m) < order:
        if m:
            inv = inv.div_binomial(m)
        poly = [ring.zero] * order
        n = max(2, m)
        while (e := exponent(n, m)) < order:
            g = gaussian_binomial_series(2 * n - m - 2, bottom(n, m), order - e, ring)
            add_shifted(poly, g, e)
            n += 1
        add_shifted(acc, series_from(poly, ring) * inv, 0)
        m += 1
    return acc


def unrestricted_gfs(order: int, ring: CoefficientRing = INTEGER) -> UnrestrictedSeries:
    """Double sums and closed forms for c(n) and e(n)."""
    c = _grouped_sum(order, ring, lambda n, m: m * n + 2 * n - 1, lambda n, m: n - m - 1)
    if order > 1:
        c[1] += ring.one
    e = _grouped_sum(order, ring, lambda n, m: m * n + n, lambda n, m: n - m)
    if order:
        e[0] += ring.one
    for k in range(2, order):  # q^2/(1-q)
        e[k] += ring.one
    inv_q = euler_product(1, order, ring).inverse()
    # q/(q^2;q)_inf = q(1-q)/(q)_inf
    c_prod = inv_q.mul_binomial(1).shift(1)
    e_prod = TruncatedSeries.from_terms({0: 1, 1: -1, 2: 1}, order, ring) * inv_q
    return UnrestrictedSeries(series_from(c, ring), c_prod, series_from(e, ring), e_prod)
