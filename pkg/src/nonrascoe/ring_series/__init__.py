"""Exact rings, truncated series and the q-series primitives built on them."""

from .laurent import BivariateSeries, LaurentPolynomial
from .qfuncs import (
    INF,
    distinct_parts_product,
    euler_product,
    gaussian_binomial,
    gaussian_binomial_series,
    inverse_qpoch_running,
    jacobi_sum,
    partitions_in_box,
    pochhammer,
    pochhammer_at,
    qbinomial_at,
    qpoch,
    quadratic_range,
    theta_sum,
)
from .rings import INTEGER, RATIONAL, CoefficientRing, RingError, modular, parse_ring
from .series import (
    TruncatedSeries,
    series_add,
    series_inv,
    series_mul,
    series_substitute_power,
    series_sum,
)

__all__ = [
    "BivariateSeries",
    "CoefficientRing",
    "INF",
    "INTEGER",
    "LaurentPolynomial",
    "RATIONAL",
    "RingError",
    "TruncatedSeries",
    "distinct_parts_product",
    "euler_product",
    "gaussian_binomial",
    "gaussian_binomial_series",
    "inverse_qpoch_running",
    "jacobi_sum",
    "modular",
    "parse_ring",
    "partitions_in_box",
    "pochhammer",
    "pochhammer_at",
    "qbinomial_at",
    "qpoch",
    "quadratic_range",
    "series_add",
    "series_inv",
    "series_mul",
    "series_substitute_power",
    "series_sum",
    "theta_sum",
]
