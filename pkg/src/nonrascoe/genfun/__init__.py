"""Closed-form evaluators for the generating functions of the toolkit."""

from ._common import SeriesPair, inverse_minus_q_inf, quotient_sum
from .catalog import (
    REGISTRY,
    CoefficientTable,
    GenFunId,
    IdSyntaxError,
    evaluate,
    parse_id,
    parse_partition_spec,
    partition_class_names,
    series_names,
)
from .core import (
    conjugation_rep,
    largest_repeat_bivariate,
    nonrascoe_double_sum,
    nonrascoe_gf,
    rascoe_double_sum,
    rr_rank_bivariate,
    rr_sum,
    sigma2_ell,
    sigma2_ell_shifted_conjugate,
    sigma_general,
    smallest_repeat_bivariate,
)
from .gis import gis_polys, gis_rhs, lcong_rhs
from .hecke import gsigma_reps, hecke_reps
from .tenth import Hauptmodul, realpart_sides, imagpart_sides, hauptmodul_j5, mock10_chi, mock10_X, lost_notebook_sides
from .unrestricted import UnrestrictedSeries, unrestricted_gfs

__all__ = [
    "REGISTRY",
    "CoefficientTable",
    "GenFunId",
    "Hauptmodul",
    "IdSyntaxError",
    "SeriesPair",
    "UnrestrictedSeries",
    "conjugation_rep",
    "realpart_sides",
    "imagpart_sides",
    "evaluate",
    "gis_polys",
    "gis_rhs",
    "gsigma_reps",
    "hauptmodul_j5",
    "hecke_reps",
    "inverse_minus_q_inf",
    "largest_repeat_bivariate",
    "lcong_rhs",
    "mock10_X",
    "mock10_chi",
    "nonrascoe_double_sum",
    "nonrascoe_gf",
    "lost_notebook_sides",
    "parse_id",
    "parse_partition_spec",
    "partition_class_names",
    "quotient_sum",
    "rascoe_double_sum",
    "rr_rank_bivariate",
    "rr_sum",
    "series_names",
    "sigma2_ell",
    "sigma2_ell_shifted_conjugate",
    "sigma_general",
    "smallest_repeat_bivariate",
    "unrestricted_gfs",
]
