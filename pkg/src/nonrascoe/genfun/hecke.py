"""Hecke-Rogers type double sums for the rank parity series.

Every summand carries a factor q^(-m n) (or similar) inside a finite inner
sum; the prefactor q^(n(5n-1)/2 + 2 ell n) always dominates, so each term is
placed directly at its exponent and a negative exponent raises.
"""

from __future__ import annotations

from ..ring_series import INTEGER, CoefficientRing, RingError, TruncatedSeries, qpoch
from ..ring_series import _kernels
from ._common import add_shifted, inverse_minus_q_inf, series_from


def _fine_block(order: int, ring: CoefficientRing, start: int, step: int, count: int) -> list:
    """sum_{m=0}^{count-1} (-1)^m (-1)_m / (q)_m * q^(start + m*step)."""
    acc = [ring.zero] * order
    run = [ring.one] + [ring.zero] * (order - 1)  # (-1)_m / (q)_m
    for m in range(count):
        if m:
            run = _kernels.mul_binomial(ring, run, m - 1, -1)
            run = _kernels.div_binomial(ring, run, m, 1)
        e = start + m * step
        if e < 0:
            raise RingError(f"negative exponent {e} in a Hecke-type summand")
        if e < order:
            add_shifted(acc, run, e, -1 if m % 2 else 1)
    return acc


def _lowest(n: int, ell: int) -> int:
    # smallest exponent occurring in the n-th outer term
    return (3 * n * n + n) // 2 + ell * n


def hecke_reps(order: int, variant: str = "i", ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sigma_2 by one of the two Hecke-type double sums ("i" or "ii")."""
    if variant not in ("i", "ii"):
        raise ValueError("variant must be 'i' or 'ii'")
    acc = [ring.zero] * order
    if order:
        acc[0] = ring.one
    n = 1
    while _lowest(n, 0) < order:
        pre = n * (5 * n - 1) // 2
        if variant == "i":
            block = _fine_block(order, ring, pre, 1 - n, n + 1)
            block = _kernels.div_binomial(ring, block, n, -1)
            sign = -1 if n % 2 else 1
        else:
            block = _fine_block(order, ring, pre, -n, n)
            block = _kernels.div_binomial(ring, block, n, 1)
            sign = 1 if n % 2 else -1
        block = _kernels.mul_binomial(ring, block, 2 * n, -1)
        add_shifted(acc, block, 0, sign)
        n += 1
    return series_from(acc, ring) * inverse_minus_q_inf(order, ring)


def gsigma_reps(order: int, ell: int = 0, variant: str = "lm1", ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """sigma_{2,ell} by the ell-shifted Hecke-type sums ("lm1" or "lm2").

    (q^(n+1))_(ell-1) and (-q^(n+1))_(ell-1) at ell = 0 are 1/(1-q^n) and 1/(1+q^n).
    """
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if variant not in ("lm1", "lm2"):
        raise ValueError("variant must be 'lm1' or 'lm2'")
    acc = list(qpoch(1, ell, order, ring, a_coeff=-1).coeffs)
    n = 1
    while _lowest(n, ell) < order:
        pre = n * (5 * n - 1) // 2 + 2 * ell * n
        if variant == "lm1":
            block = _fine_block(order, ring, pre, -n, n + ell)
            c, sign = 1, (1 if (n + ell) % 2 else -1)
        else:
            block = _fine_block(order, ring, pre, 1 - n - ell, n + 1)
            c, sign = -1, (-1 if n % 2 else 1)
        if ell == 0:
            block = _kernels.div_binomial(ring, block, n, c)
        else:
            for k in range(n + 1, n + ell):
                if k >= order:
                    break
                block = _kernels.mul_binomial(ring, block, k, c)
        block = _kernels.mul_binomial(ring, block, ell + 2 * n, -1)
        add_shifted(acc, block, 0, sign)
        n += 1
    return series_from(acc, ring) * inverse_minus_q_inf(order, ring)
