"""q-Pochhammer products, Gaussian binomials, box partitions and theta sums."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPolynomial
from .rings import INTEGER, CoefficientRing, RingError
from .series import TruncatedSeries

INF = math.inf


def _is_infinite(count) -> bool:
    return count is None or count == INF


def euler_product(step: int, order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """(q^s; q^s)_inf from the pentagonal number theorem; O(sqrt(order)) terms."""
    terms: dict[int, int] = {0: 1}
    k = 1
    while True:
        g1 = step * (k * (3 * k - 1) // 2)
        if g1 >= order:
            break
        sign = -1 if k % 2 else 1
        terms[g1] = sign
        g2 = step * (k * (3 * k + 1) // 2)
        if g2 < order:
            terms[g2] = sign
        k += 1
    return TruncatedSeries.from_terms(terms, order, ring)


def distinct_parts_product(order: int, ring: CoefficientRing = INTEGER, step: int = 1) -> TruncatedSeries:
    """(-q^s; q^s)_inf = (q^2s; q^2s)_inf / (q^s; q^s)_inf."""
    return euler_product(2 * step, order, ring) * euler_product(step, order, ring).inverse()


def pochhammer(base_coeff, base_exp: int, step: int, count, order: int,
               ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """prod_{k=0}^{count-1} (1 - base_coeff * q^(base_exp + k*step)) truncated at `order`.

    `count` may be a nonnegative int or math.inf / None.
    """
    if step < 1:
        raise RingError("step must be >= 1")
    infinite = _is_infinite(count)
    if infinite:
        if base_exp < 1:
            raise RingError("an infinite product needs base_exp >= 1")
        if base_exp == step and base_coeff == 1:
            return euler_product(step, order, ring)
        if base_exp == step and base_coeff == -1:
            return distinct_parts_product(order, ring, step)
    elif count < 0:
        raise RingError("negative count: use pochhammer_at for (a)_{-n}")
    c = ring.coerce(base_coeff)
    s = TruncatedSeries.one(order, ring)
    for k in itertools.count() if infinite else range(count):
        e = base_exp + k * step
        if e >= order:
            # exponents only grow; remaining factors are 1 mod q^order
            break
        s = s.mul_binomial(e, c)
    return s


def qpoch(a_exp: int, n: int, order: int, ring: CoefficientRing = INTEGER, a_coeff=1) -> TruncatedSeries:
    """(a_coeff q^a_exp; q)_n with the usual base q; n may be math.inf."""
    return pochhammer(a_coeff, a_exp, 1, n, order, ring)


def inverse_qpoch_running(order: int, ring: CoefficientRing, sign: int = 1):
    """Yield 1/(sign*q; q)_n for n = 0, 1, 2, ... by incremental division.

    sign=+1 gives 1/(q)_n, sign=-1 gives 1/(-q)_n.
    """
    cur = TruncatedSeries.one(order, ring)
    n = 0
    while True:
        yield cur
        n += 1
        cur = cur.div_binomial(n, sign)


# -- Gaussian binomials ---------------------------------------------------

@lru_cache(maxsize=4096)
def _gauss_coeffs(top: int, n: int) -> tuple[int, ...]:
    if n == 0 or n == top:
        return (1,)
    n = min(n, top - n)
    # [top-n+i choose i] built up one factor at a time; every step is exact
    poly = [1]
    base = top - n
    for i in range(1, n + 1):
        k = base + i
        grown = poly + [0] * k
        for j in range(len(poly) - 1, -1, -1):
            grown[j + k] -= poly[j]
        # exact division by (1 - q^i)
        out = list(grown)
        for j in range(i, len(out)):
            out[j] += out[j - i]
        while out and out[-1] == 0:
            out.pop()
        poly = out
    return tuple(poly)


def gaussian_binomial(top: int, n: int) -> LaurentPolynomial:
    """[top choose n]_q; the zero polynomial unless 0 <= n <= top."""
    if n < 0 or top < 0 or n > top:
        return LaurentPolynomial()
    return LaurentPolynomial.from_coeffs(_gauss_coeffs(top, n))


def gaussian_binomial_series(top: int, n: int, order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    if n < 0 or top < 0 or n > top:
        return TruncatedSeries.zero(order, ring)
    n = min(n, top - n)
    if n * (top - n) < 4 * order or n < 3:
        c = _gauss_coeffs(top, n)[:order]
        return TruncatedSeries(ring, list(c) + [0] * (order - len(c)))
    # the full polynomial is much longer than needed: build it mod q^order
    s = TruncatedSeries.one(order, ring)
    for i in range(1, n + 1):
        k = top - n + i
        if k < order:
            s = s.mul_binomial(k)
        s = s.div_binomial(i)
    return s


def partitions_in_box(nbox: int, m: int, k: int) -> int:
    """p(nbox, m, k): partitions of k into at most m parts, each <= nbox.

    Defined as the q^k coefficient of [nbox+m choose m], so any negative box
    dimension gives 0 (including k = 0), while p(N,0,0) = p(0,M,0) = 1.
    """
    if nbox < 0 or m < 0 or k < 0:
        return 0
    c = _gauss_coeffs(nbox + m, m)
    return c[k] if k < len(c) else 0


# -- theta sums -----------------------------------------------------------

def quadratic_range(a2: int, b: int, c: int, bound: int) -> range:
    """Integers n with (a2*n^2 + b*n)/2 + c < bound, for a2 > 0 (a superset, tight to +-1)."""
    # solve a2 n^2 + b n + 2(c - bound) < 0
    disc = b * b - 4 * a2 * 2 * (c - bound)
    if disc < 0:
        return range(0)
    r = math.isqrt(disc)
    lo = (-b - r - 1) // (2 * a2) - 1
    hi = (-b + r + 1) // (2 * a2) + 1
    return range(lo, hi + 1)


def jacobi_sum(a: int, b: int, order: int, ring: CoefficientRing = INTEGER, offset: int = 0) -> TruncatedSeries:
    """q^offset * sum_{n in Z} (-1)^n q^{n(a n + b)/2}, truncated at `order`.

    Raises if a contributing exponent is half-integral or negative.
    """
    if a <= 0:
        raise RingError("jacobi_sum needs a > 0")
    terms: dict[int, int] = {}
    for n in quadratic_range(a, b, offset, order):
        twice = n * (a * n + b)
        e2 = twice + 2 * offset
        if e2 >= 2 * order:
            continue
        if twice % 2:
            raise RingError(f"half-integer exponent at n={n}; substitute q -> x^2 first")
        e = e2 // 2
        if e < 0:
            raise RingError(f"negative exponent {e} at n={n}; raise the offset")
        terms[e] = terms.get(e, 0) + (-1 if n % 2 else 1)
    return TruncatedSeries.from_terms(terms, order, ring)


def theta_sum(a: int, b: int, order: int, coeff_of_n, ring: CoefficientRing, offset: int = 0) -> TruncatedSeries:
    """q^offset * sum_{n in Z} coeff_of_n(n) q^{n(a n + b)/2} with arbitrary exact weights."""
    terms: dict[int, object] = {}
    for n in quadratic_range(a, b, offset, order):
        twice = n * (a * n + b) + 2 * offset
        if twice >= 2 * order:
            continue
        if twice % 2:
            raise RingError(f"half-integer exponent at n={n}")
        e = twice // 2
        if e < 0:
            raise RingError(f"negative exponent {e} at n={n}")
        terms[e] = terms.get(e, 0) + coeff_of_n(n)
    return TruncatedSeries.from_terms(terms, order, ring)


# -- exact evaluation at rational points -----------------------------------

def pochhammer_at(a, q, n: int) -> Fraction:
    """(a; q)_n evaluated exactly, including the n < 0 convention

    (a)_{-n} = 1 / ((1 - a/q^n)(1 - a/q^(n-1)) ... (1 - a/q)).
    """
    a = Fraction(a)
    q = Fraction(q)
    out = Fraction(1)
    if n >= 0:
        for k in range(n):
            out *= 1 - a * q ** k
        return out
    for k in range(1, -n + 1):
        out *= 1 - a / q ** k
    if out == 0:
        raise ZeroDivisionError(f"pole of (a;q)_{n}")
    return 1 / out


def qbinomial_at(top: int, n: int, q) -> Fraction:
    if n < 0 or top < 0 or n > top:
        return Fraction(0)
    return Fraction(gaussian_binomial(top, n).evaluate(q))
