"""Shifted Rogers-Ramanujan identity and the mod-2 triple sum built on it."""

from __future__ import annotations

from ..ring_series import (
    INTEGER,
    CoefficientRing,
    LaurentPolynomial,
    RingError,
    TruncatedSeries,
    gaussian_binomial,
    jacobi_sum,
    modular,
    partitions_in_box,
    pochhammer,
)
from ._common import series_from


def _c_index(ell: int, j: int) -> int:
    return (ell + 1 - 5 * j) // 2


def _d_index(ell: int, j: int) -> int:
    return (ell - 1 - 5 * j) // 2


def _j_range(ell: int) -> range:
    # the bracket [ell-1, floor((ell +- 1 - 5j)/2)] needs its lower entry in [0, ell-1]
    return range(-(ell + 3) // 5 - 1, (ell + 1) // 5 + 2)


def gis_polys(ell: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """(c_ell, d_ell) from their finite j-sums.

    ell = 0 would need [-1, k] everywhere; it is routed to the plain
    Rogers-Ramanujan case c_0 = 1, d_0 = 0.
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if ell == 0:
        return LaurentPolynomial({0: 1}), LaurentPolynomial()
    c = LaurentPolynomial()
    d = LaurentPolynomial()
    for j in _j_range(ell):
        sign = -1 if j % 2 else 1
        gc = gaussian_binomial(ell - 1, _c_index(ell, j))
        if gc:
            c = c + gc.shift(j * (5 * j - 3) // 2) * sign
        gd = gaussian_binomial(ell - 1, _d_index(ell, j))
        if gd:
            d = d + gd.shift(j * (5 * j + 1) // 2) * sign
    return c, d


def _laurent_times_series(poly: LaurentPolynomial, series: TruncatedSeries, lo: int, width: int,
                          ring: CoefficientRing) -> list:
    """Coefficients of q^lo .. q^(lo+width-1) in poly * series."""
    acc = [ring.zero] * width
    for e, c in poly.items():
        base = e - lo
        if base < 0:
            raise RingError("lo is above the lowest exponent of poly")
        for i in range(width - base):
            v = series[i]
            if v:
                acc[base + i] += c * v
    return acc


def _rr_products(ring: CoefficientRing):
    def g(n):  # 1/((q;q^5)(q^4;q^5))
        return (pochhammer(1, 1, 5, None, n, ring) * pochhammer(1, 4, 5, None, n, ring)).inverse()

    def h(n):  # 1/((q^2;q^5)(q^3;q^5))
        return (pochhammer(1, 2, 5, None, n, ring) * pochhammer(1, 3, 5, None, n, ring)).inverse()

    return g, h


def gis_rhs(order: int, ell: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """(-1)^ell q^(-ell(ell-1)/2) [c_ell / (q,q^4;q^5)_inf - d_ell / (q^2,q^3;q^5)_inf]."""
    c, d = gis_polys(ell)
    shift = -(ell * (ell - 1) // 2)
    sign = -1 if ell % 2 else 1
    c = c.shift(shift) * sign
    d = d.shift(shift) * sign
    lo = min(c.min_degree if c else 0, d.min_degree if d else 0, 0)
    width = order - lo
    g, h = _rr_products(ring)
    left = _laurent_times_series(c, g(width), lo, width, ring)
    right = _laurent_times_series(d, h(width), lo, width, ring)
    total = ring.normalize([x - y for x, y in zip(left, right)])
    off = -lo
    if any(total[:off]):
        raise RingError("negative exponents survived in the shifted Rogers-Ramanujan sum side")
    return series_from(total[off:], ring)


def _box_poly(ell: int, lower: int) -> dict[int, int]:
    """sum_k p(ell-1-lower, lower, k) q^k."""
    out = {}
    k = 0
    while True:
        v = partitions_in_box(ell - 1 - lower, lower, k)
        if not v and k > max(0, (ell - 1 - lower) * lower):
            break
        if v:
            out[k] = v
        k += 1
    return out


def lcong_rhs(order: int, ell: int) -> TruncatedSeries:
    """Mod-2 triple sum over (j, m, k) predicted to equal b_ell mod 2.

    Built from partitions_in_box and the two quintuple-product theta series.
    ell = 0 uses c_0 = 1, d_0 = 0 (see gis_polys).
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    ring = modular(2)
    shift = ell * (ell - 1) // 2
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    if ell == 0:
        first[0] = 1
    else:
        for j in _j_range(ell):
            for k, v in _box_poly(ell, _c_index(ell, j)).items():
                e = j * (5 * j - 3) // 2 + k
                first[e] = first.get(e, 0) + v
            for k, v in _box_poly(ell, _d_index(ell, j)).items():
                e = j * (5 * j + 1) // 2 + k
                second[e] = second.get(e, 0) + v
    lo = min(list(first) + list(second) + [0]) - shift
    width = order - lo if lo < 0 else order
    off = -lo if lo < 0 else 0
    # theta series with the global offset folded in
    t1 = jacobi_sum(5, 1, width + shift, ring)   # sum q^(m(5m+1)/2)
    t2 = jacobi_sum(5, -3, width + shift, ring)  # sum q^(m(5m-3)/2)
    acc = [0] * width
    for poly, theta in ((first, t1), (second, t2)):
        for e, v in poly.items():
            base = e - shift + off
            if v % 2 == 0 or base >= width:
                continue
            for i in range(width - base):
                if theta[i]:
                    acc[base + i] += v * theta[i]
    if any(x % 2 for x in acc[:off]):
        raise RingError("negative exponents survived in the triple sum")
    return series_from(acc[off:], ring)
