"""Catalog of two-sided series identities and the coefficientwise checker."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .. import partition_oracle as oracle
from ..genfun import (
    SeriesPair,
    conjugation_rep,
    gis_rhs,
    gsigma_reps,
    hecke_reps,
    imagpart_sides,
    largest_repeat_bivariate,
    lcong_rhs,
    lost_notebook_sides,
    mock10_chi,
    mock10_X,
    nonrascoe_double_sum,
    nonrascoe_gf,
    rascoe_double_sum,
    realpart_sides,
    rr_rank_bivariate,
    rr_sum,
    sigma2_ell,
    sigma2_ell_shifted_conjugate,
    sigma_general,
    smallest_repeat_bivariate,
    unrestricted_gfs,
)
from ..genfun._common import quotient_sum
from ..ring_series import (
    INTEGER,
    CoefficientRing,
    TruncatedSeries,
    distinct_parts_product,
    euler_product,
    jacobi_sum,
    modular,
    pochhammer,
)
from .report import IdentityReport, json_safe

ORACLE_ORDER_CAP = 40


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class SeriesIdentity:
    id: str
    build: Callable[..., SeriesPair]
    summary: str
    defaults: dict
    grid: tuple[dict, ...] = ({},)
    order_cap: int | None = None


def _ells(hi: int, lo: int = 0) -> tuple[dict, ...]:
    return tuple({"l": l} for l in range(lo, hi + 1))


# -- builders: (order, ring, **params) -> SeriesPair ----------------------------

def _theorem_main(order, ring, l):
    return SeriesPair(nonrascoe_gf(order, l, INTEGER), [oracle.b_count(n, l) for n in range(order)])


def _rascoe_oracle(order, ring, l):
    return SeriesPair(rascoe_double_sum(order, l, INTEGER), [oracle.a_count(n, l) for n in range(order)])


def _z_table(biv, order, skip_zero=True):
    out = [None] if skip_zero else []
    for n in range(1 if skip_zero else 0, order):
        out.append(dict(sorted((e, c) for e, c in biv[n].items() if c)))
    return out


def _rr_rank_oracle(order, ring, l):
    lhs = _z_table(rr_rank_bivariate(order, l), order)
    rhs = [None] + [oracle.rank_counts(n, l) for n in range(1, order)]
    return SeriesPair(lhs, rhs)


def _psmall_oracle(order, ring, l):
    lhs = _z_table(smallest_repeat_bivariate(order, l), order, skip_zero=False)
    rhs = [oracle.count_by_smallest(n, l) for n in range(order)]
    return SeriesPair(lhs, rhs)


def _largest_oracle(order, ring, l):
    lhs = _z_table(largest_repeat_bivariate(order, l), order)
    rhs = [None] + [oracle.count_by_parts(n, l) for n in range(1, order)]
    return SeriesPair(lhs, rhs)


def _nonrascoe_sum(order, ring, l):
    return SeriesPair(nonrascoe_double_sum(order, l, ring), nonrascoe_gf(order, l, ring, "product"))


def _complement(order, ring, l):
    total = rascoe_double_sum(order, l, ring) + nonrascoe_double_sum(order, l, ring)
    return SeriesPair(total, distinct_parts_product(order, ring))


def _rank_specialization(order, ring, l):
    lhs = rr_rank_bivariate(order, l).specialize(-1, INTEGER)
    rhs = sigma2_ell(order, l, INTEGER).scale(1 if l % 2 else -1)
    return SeriesPair(lhs, rhs)


def _psmall_alternating(order, ring, l):
    return SeriesPair(smallest_repeat_bivariate(order, l).specialize(-1, INTEGER), nonrascoe_gf(order, l, INTEGER))


def _hecke(variant):
    def build(order, ring):
        return SeriesPair(hecke_reps(order, variant, ring), sigma2_ell(order, 0, ring))
    return build


def _hecke_i_ii(order, ring):
    return SeriesPair(hecke_reps(order, "i", ring), hecke_reps(order, "ii", ring))


def _gsigma(variant):
    def build(order, ring, l):
        return SeriesPair(gsigma_reps(order, l, variant, ring), sigma2_ell(order, l, ring))
    return build


def _conj_small1(order, ring, z, l):
    return conjugation_rep(order, z, l, "small1")


def _conj_small2(order, ring, z):
    return conjugation_rep(order, z, 0, "small2")


def _sigma_gauss(order, ring, l):
    return SeriesPair(sigma_general(order, l, ring), sigma2_ell(order, l, ring))


def _sigma_shift(order, ring, l):
    return SeriesPair(sigma2_ell_shifted_conjugate(order, l, ring), sigma2_ell(order, l, ring))


def _rr_product(order, ring, residues):
    prod = TruncatedSeries.one(order, ring)
    for r in residues:
        prod = prod * pochhammer(1, r, 5, None, order, ring)
    return prod


def _rr1(order, ring):
    return SeriesPair(rr_sum(order, 0, ring), _rr_product(order, ring, (1, 4)).inverse())


def _jtpi1(order, ring):
    return SeriesPair(jacobi_sum(5, 1, order, ring), _rr_product(order, ring, (2, 3, 5)))


def _jtpi1_companion(order, ring):
    return SeriesPair(jacobi_sum(5, -3, order, ring), _rr_product(order, ring, (1, 4, 5)))


def _gis(order, ring, l):
    return SeriesPair(gis_rhs(order, l, ring), rr_sum(order, l, ring))


def _ra(which):
    def build(order, ring):
        u = unrestricted_gfs(order, ring)
        if which == "c":
            return SeriesPair(u.c_double_sum, u.c_product)
        return SeriesPair(u.e_double_sum, u.e_product)
    return build


def _unrestricted_total(order, ring):
    u = unrestricted_gfs(order, ring)
    return SeriesPair(u.c_product + u.e_product, euler_product(1, order, ring).inverse())


def _lcong(order, ring, l):
    return SeriesPair(nonrascoe_gf(order, l, modular(2)), lcong_rhs(order, l))


def _realpart(order, ring, l):
    return realpart_sides(order, l, ring)


def _imagpart(order, ring, l):
    return imagpart_sides(order, l, "corrected")


def _lostnb(order, ring, a, b):
    return lost_notebook_sides(order, a, b)


def _mock_mod2(kind):
    """(-1)^n q^e / (q)_k and the same over (-q)_k agree mod 2."""
    def build(order, ring):
        r2 = modular(2)
        if kind == "X":
            def entries():
                n = 0
                while n * n < order:
                    yield 2 * n, n * n, -1 if n % 2 else 1
                    n += 1
            return SeriesPair(quotient_sum(order, r2, entries()), mock10_X(order, 0, r2))

        def entries():
            n = 0
            while (n + 1) ** 2 < order:
                yield 2 * n + 1, (n + 1) ** 2, -1 if n % 2 else 1
                n += 1
        return SeriesPair(quotient_sum(order, r2, entries()), mock10_chi(order, 0, r2))
    return build


_Z_SAMPLES = (Fraction(2, 3), Fraction(1), Fraction(-3, 2))

CATALOG: dict[str, SeriesIdentity] = {
    e.id: e
    for e in (
        SeriesIdentity("theorem_main", _theorem_main, "(-q)_inf sigma_{2,l} counts non-Rascoe partitions (oracle)",
                       {"l": 0}, _ells(3), ORACLE_ORDER_CAP),
        SeriesIdentity("rascoe_vs_oracle", _rascoe_oracle, "Rascoe double sum counts Rascoe partitions (oracle)",
                       {"l": 0}, _ells(3), ORACLE_ORDER_CAP),
        SeriesIdentity("rr_rank_vs_oracle", _rr_rank_oracle, "z^m q^n of the rank series is R_l(m, n) (oracle)",
                       {"l": 0}, _ells(3), ORACLE_ORDER_CAP),
        SeriesIdentity("psmall_vs_oracle", _psmall_oracle, "z^j q^n of the smallest-repeat series is P_l(j, n) (oracle)",
                       {"l": 0}, _ells(3), ORACLE_ORDER_CAP),
        SeriesIdentity("largest_vs_oracle", _largest_oracle, "largest-part-repeat series by number of parts (oracle)",
                       {"l": 0}, _ells(3), ORACLE_ORDER_CAP),
        SeriesIdentity("nonrascoe_sum_vs_gf", _nonrascoe_sum, "non-Rascoe double sum = (-q)_inf sigma_{2,l}",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("rascoe_plus_nonrascoe", _complement, "a_l + b_l = distinct-part partitions",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("rr_rank_at_minus_one", _rank_specialization, "rank series at z = -1 is -(-1)^l sigma_{2,l}",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("psmall_alternating", _psmall_alternating, "sum_j (-1)^j P_l(j, n) = b_l(n)",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("hecke_i_vs_sigma2", _hecke("i"), "first Hecke-type sum = sigma_2", {}),
        SeriesIdentity("hecke_ii_vs_sigma2", _hecke("ii"), "second Hecke-type sum = sigma_2", {}),
        SeriesIdentity("hecke_i_vs_ii", _hecke_i_ii, "the two Hecke-type sums agree", {}),
        SeriesIdentity("gsigma_lm1", _gsigma("lm1"), "first shifted Hecke-type sum = sigma_{2,l}",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("gsigma_lm2", _gsigma("lm2"), "second shifted Hecke-type sum = sigma_{2,l}",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("conj_small1", _conj_small1, "conjugation form for sum z^n q^(n^2+ln)/(-q)_n",
                       {"z": -1, "l": 0},
                       tuple({"z": -1, "l": l} for l in range(4)) + tuple({"z": z, "l": 0} for z in _Z_SAMPLES)
                       + ({"z": Fraction(2), "l": 1},)),
        SeriesIdentity("conj_small2", _conj_small2, "Euler-theorem conjugation form at l = 0",
                       {"z": -1}, tuple({"z": z} for z in (Fraction(-1),) + _Z_SAMPLES)),
        SeriesIdentity("sigma_gauss", _sigma_gauss, "Gaussian-binomial double sum = sigma_{2,l}",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("sigma_shifted_conjugate", _sigma_shift, "conjugation form at z = -q^l = sigma_{2,l}",
                       {"l": 0}, _ells(3)),
        SeriesIdentity("rr1", _rr1, "first Rogers-Ramanujan identity", {}),
        SeriesIdentity("jtpi1", _jtpi1, "triple product: sum (-1)^n q^(n(5n+1)/2)", {}),
        SeriesIdentity("jtpi1_companion", _jtpi1_companion, "triple product: sum (-1)^n q^(n(5n-3)/2)", {}),
        SeriesIdentity("gis", _gis, "shifted Rogers-Ramanujan identity", {"l": 1}, _ells(6)),
        SeriesIdentity("ra1", _ra("c"), "unrestricted Rascoe double sum = q/(q^2;q)_inf", {}),
        SeriesIdentity("ra2", _ra("e"), "unrestricted non-Rascoe double sum = (1-q+q^2)/(q)_inf", {}),
        SeriesIdentity("unrestricted_total", _unrestricted_total, "c(n) + e(n) = p(n)", {}),
        SeriesIdentity("lcong", _lcong, "b_l mod 2 equals the box-partition triple sum", {"l": 0}, _ells(6)),
        SeriesIdentity("realpart", _realpart, "real-part specialization relating b_l and b_(l+1)",
                       {"l": 0}, _ells(4)),
        SeriesIdentity("imagpart", _imagpart, "imaginary-part specialization (in x, q = x^2)",
                       {"l": 0}, _ells(4)),
        SeriesIdentity("lostnb", _lostnb, "lost-notebook relation (in x, q = x^4) at rational a, b",
                       {"a": 1, "b": 0},
                       ({"a": 1, "b": 0}, {"a": 2, "b": -1}, {"a": Fraction(1, 2), "b": Fraction(3, 5)},
                        {"a": 1, "b": 1}, {"a": -3, "b": Fraction(2, 7)})),
        SeriesIdentity("mockX_mod2", _mock_mod2("X"), "(q)_(2n) and (-q)_(2n) denominators agree mod 2", {}),
        SeriesIdentity("mockchi_mod2", _mock_mod2("chi"), "(q)_(2n+1) and (-q)_(2n+1) denominators agree mod 2", {}),
    )
}


def catalog_ids() -> list[str]:
    return list(CATALOG)


def _as_list(side) -> list:
    return list(side.coeffs) if isinstance(side, TruncatedSeries) else list(side)


def _perturbed(seq: list, k: int, ring: CoefficientRing | None) -> list:
    out = list(seq)
    v = out[k]
    if isinstance(v, dict):
        v = dict(v)
        v[0] = v.get(0, 0) + 1
    elif v is None:
        v = {"perturbed": 1}
    elif ring is not None:
        v = ring.normalize([v + ring.one])[0]
    else:
        v = v + 1
    out[k] = v
    return out


def first_difference(lhs: Sequence, rhs: Sequence) -> int | None:
    if len(lhs) != len(rhs):
        raise ValueError("sides have different lengths")
    for k, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return k
    return None


def check_series_identity(identity: str, order: int, ring: CoefficientRing | None = None, *,
                          perturb: int | None = None, **params) -> IdentityReport:
    """Compare both sides of a catalog identity coefficientwise to `order`.

    `perturb=k` adds one to coefficient k of the left side first (harness
    self-test: the report must then fail with witness index k).
    """
    entry = CATALOG.get(identity)
    if entry is None:
        raise UnknownIdentityError(identity)
    if order < 1:
        raise ValueError("order must be >= 1")
    unknown = set(params) - set(entry.defaults)
    if unknown:
        raise ValueError(f"{identity} has no parameter(s) {sorted(unknown)}")
    bound = {**entry.defaults, **params}
    n = order if entry.order_cap is None else min(order, entry.order_cap)
    t0 = time.perf_counter()
    pair = entry.build(n, ring or INTEGER, **bound)
    lhs, rhs = _as_list(pair.lhs), _as_list(pair.rhs)
    if perturb is not None:
        if not 0 <= perturb < len(lhs):
            raise ValueError(f"perturb index {perturb} outside 0..{len(lhs) - 1}")
        side_ring = pair.lhs.ring if isinstance(pair.lhs, TruncatedSeries) else None
        lhs = _perturbed(lhs, perturb, side_ring)
    k = first_difference(lhs, rhs)
    ms = (time.perf_counter() - t0) * 1000
    checked = {"order": len(lhs), "variable": pair.variable, "offset": pair.offset}
    if n < order:
        checked["requested_order"] = order
    witness = None
    if k is not None:
        witness = {"index": k, "exponent": k - pair.offset, "lhs": json_safe(lhs[k]), "rhs": json_safe(rhs[k])}
    details = {"perturbed_index": perturb} if perturb is not None else {}
    return IdentityReport(
        id=identity,
        params=json_safe(bound),
        mode="series",
        status="pass" if k is None else "fail",
        checked=checked,
        witness=witness,
        ms=ms,
        details=details,
    )


def check_catalog(order: int, ids: Sequence[str] | None = None) -> list[IdentityReport]:
    """Every grid point of every (selected) catalog identity."""
    out = []
    for identity in ids or catalog_ids():
        for params in CATALOG[identity].grid:
            out.append(check_series_identity(identity, order, **params))
    return out
