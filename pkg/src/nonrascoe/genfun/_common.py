"""Shared building blocks for the generating-function evaluators."""

from __future__ import annotations

from typing import Iterable, NamedTuple

from ..ring_series import (
    INTEGER,
    CoefficientRing,
    RingError,
    TruncatedSeries,
    euler_product,
)
from ..ring_series import _kernels


class SeriesPair(NamedTuple):
    """Two sides of an identity, both multiplied by variable^offset.

    `variable` names the expansion variable: "q", or "x" with q = x^t.
    """

    lhs: TruncatedSeries
    rhs: TruncatedSeries
    offset: int = 0
    variable: str = "q"


def inverse_minus_q_inf(order: int, ring: CoefficientRing = INTEGER) -> TruncatedSeries:
    """1/(-q;q)_inf = (q;q)_inf / (q^2;q^2)_inf."""
    return euler_product(1, order, ring) * euler_product(2, order, ring).inverse()


def quotient_sum(order: int, ring: CoefficientRing, entries: Iterable[tuple[int, int, object]],
                 c=1, step: int = 1) -> TruncatedSeries:
    """sum coeff * x^e / prod_{i=1}^{k} (1 - c x^(step*i)) over entries (k, e, coeff).

    Entries must come with nondecreasing k; the running inverse is updated one
    factor at a time. Exponents >= order are skipped; negative ones are an error.
    """
    c = ring.coerce(c)
    acc = [ring.zero] * order
    run = [ring.one] + [ring.zero] * (order - 1)
    have = 0
    for k, e, coeff in entries:
        if k < have:
            raise RingError("quotient_sum entries must have nondecreasing k")
        if e < 0:
            raise RingError(f"negative exponent {e} in a power-series summand")
        if e >= order:
            continue
        while have < k:
            have += 1
            if step * have < order:
                run = _kernels.div_binomial(ring, run, step * have, c)
        coeff = ring.coerce(coeff)
        if not coeff:
            continue
        lim = order - e
        for i in range(lim):
            v = run[i]
            if v:
                acc[e + i] += coeff * v
    return TruncatedSeries._raw(ring, ring.normalize(acc))


def add_shifted(acc: list, s: TruncatedSeries | list, e: int, coeff=1) -> None:
    """acc += coeff * q^e * s (in place, truncated to len(acc))."""
    if e < 0:
        raise RingError(f"negative exponent {e} survived into a power series")
    n = len(acc)
    for i in range(min(len(s), n - e)):
        v = s[i]
        if v:
            acc[e + i] += coeff * v


def series_from(acc: list, ring: CoefficientRing) -> TruncatedSeries:
    return TruncatedSeries._raw(ring, ring.normalize(acc))
