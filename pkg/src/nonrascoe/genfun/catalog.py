"""Bracket grammar for naming series and partition classes, and the series registry.

Grammar (whitespace ignored):

    id     := NAME [ '[' [ arg { ',' arg } ] ']' ]
    arg    := NAME '=' value | value
    value  := INT [ '/' INT ] | NAME

A bare value binds to the entry's variant (e.g. "hecke[ii]", "gsigma[lm2,l=1]").
Integers may be signed; p/r denotes an exact rational.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..partition_oracle import ConstraintSpec
from ..ring_series import INTEGER, CoefficientRing, TruncatedSeries, distinct_parts_product, euler_product
from .core import (
    conjugation_rep,
    nonrascoe_double_sum,
    nonrascoe_gf,
    rascoe_double_sum,
    rr_sum,
    sigma2_ell,
    sigma2_ell_shifted_conjugate,
    sigma_general,
)
from .gis import gis_rhs, lcong_rhs
from .hecke import gsigma_reps, hecke_reps
from .tenth import realpart_sides, imagpart_sides, hauptmodul_j5, mock10_chi, mock10_X, lost_notebook_sides
from .unrestricted import unrestricted_gfs


class IdSyntaxError(ValueError):
    """Malformed or unknown id string."""


Value = int | Fraction | str

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[\[\],=/]))")


@dataclass(frozen=True)
class GenFunId:
    name: str
    params: tuple[tuple[str, Value], ...] = ()

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def __str__(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(str(v) if k == "variant" else f"{k}={v}" for k, v in self.params)
        return f"{self.name}[{inner}]"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m or m.end() == pos:
                raise IdSyntaxError(f"unexpected character at {pos} in {text!r}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, kind: str, value: str | None = None) -> str:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] if tok else "end of input"
            raise IdSyntaxError(f"expected {want!r}, got {got!r} in {self.text!r}")
        self.i += 1
        return tok[1]

    def parse(self) -> GenFunId:
        name = self.take("name")
        params: list[tuple[str, Value]] = []
        if self.peek() == ("sym", "["):
            self.take("sym", "[")
            if self.peek() != ("sym", "]"):
                params.append(self.arg())
                while self.peek() == ("sym", ","):
                    self.take("sym", ",")
                    params.append(self.arg())
            self.take("sym", "]")
        if self.peek() is not None:
            raise IdSyntaxError(f"trailing input in {self.text!r}")
        keys = [k for k, _ in params]
        if len(set(keys)) != len(keys):
            raise IdSyntaxError(f"repeated parameter in {self.text!r}")
        return GenFunId(name, tuple(params))

    def arg(self) -> tuple[str, Value]:
        tok = self.peek()
        if tok and tok[0] == "name" and self.i + 1 < len(self.tokens) and self.tokens[self.i + 1] == ("sym", "="):
            key = self.take("name")
            self.take("sym", "=")
            return key, self.value()
        return "variant", self.value()

    def value(self) -> Value:
        tok = self.peek()
        if tok and tok[0] == "name":
            return self.take("name")
        num = int(self.take("num"))
        if self.peek() == ("sym", "/"):
            self.take("sym", "/")
            den = int(self.take("num"))
            if den == 0:
                raise IdSyntaxError(f"zero denominator in {self.text!r}")
            frac = Fraction(num, den)
            return frac.numerator if frac.denominator == 1 else frac
        return num


def parse_id(text: str) -> GenFunId:
    return _Parser(text).parse()


# -- series registry -------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientTable:
    """series[k] is the coefficient of variable^(k + first_exponent)."""

    series: TruncatedSeries
    first_exponent: int = 0
    variable: str = "q"

    def rows(self):
        for k, v in enumerate(self.series):
            yield k + self.first_exponent, v


@dataclass(frozen=True)
class _Entry:
    build: Callable[..., CoefficientTable]
    params: dict[str, Value] = field(default_factory=dict)
    variants: tuple[str, ...] = ()
    ring_free: bool = True
    summary: str = ""


def _plain(fn):
    def build(order, ring, **kw):
        return CoefficientTable(fn(order, ring=ring, **kw))
    return build


def _pair_side(pair, side: str) -> CoefficientTable:
    if side not in ("lhs", "rhs"):
        raise IdSyntaxError("side must be lhs or rhs")
    s = pair.lhs if side == "lhs" else pair.rhs
    return CoefficientTable(s, -pair.offset, "x" if pair.variable.startswith("x") else "q")


def _sigma2(order, ring, l):
    return CoefficientTable(sigma2_ell(order, l, ring))


def _nonrascoe(order, ring, l, method):
    return CoefficientTable(nonrascoe_gf(order, l, ring, method))


def _hecke(order, ring, variant):
    return CoefficientTable(hecke_reps(order, variant, ring))


def _gsigma(order, ring, variant, l):
    return CoefficientTable(gsigma_reps(order, l, variant, ring))


def _j5(order, ring):
    j = hauptmodul_j5(max(order - 1, 0), ring)
    coeffs = [j.polar] + list(j.coeffs)
    return CoefficientTable(TruncatedSeries(ring, coeffs[:order]), -1)


def _mock(fn):
    def build(order, ring, start):
        return CoefficientTable(fn(order, start, ring))
    return build


def _conj(order, ring, z, l, form, side):
    return _pair_side(conjugation_rep(order, z, l, form), side)


def _unrestricted(order, ring, variant, form):
    if variant not in ("c", "e") or form not in ("sum", "product"):
        raise IdSyntaxError("unrestricted takes variant c|e and form=sum|product")
    u = unrestricted_gfs(order, ring)
    key = f"{variant}_{'double_sum' if form == 'sum' else 'product'}"
    return CoefficientTable(getattr(u, key))


def _realpart(order, ring, l, side):
    return _pair_side(realpart_sides(order, l, ring), side)


def _imagpart(order, ring, l, form, side):
    return _pair_side(imagpart_sides(order, l, form), side)


def _lostnb(order, ring, a, b, side):
    return _pair_side(lost_notebook_sides(order, a, b), side)


def _lcong(order, ring, l):
    return CoefficientTable(lcong_rhs(order, l))


def _gis(order, ring, l):
    return CoefficientTable(gis_rhs(order, l, ring))


REGISTRY: dict[str, _Entry] = {
    "sigma2": _Entry(_sigma2, {"l": 0}, summary="rank parity series sigma_{2,l}"),
    "nonrascoe": _Entry(_nonrascoe, {"l": 0, "method": "auto"}, summary="(-q)_inf sigma_{2,l}: b_l(n)"),
    "nonrascoe_sum": _Entry(_plain(lambda o, ring, l: nonrascoe_double_sum(o, l, ring)), {"l": 0},
                            summary="double sum for b_l(n)"),
    "rascoe": _Entry(_plain(lambda o, ring, l: rascoe_double_sum(o, l, ring)), {"l": 0},
                     summary="double sum for a_l(n)"),
    "sigmageneral": _Entry(_plain(lambda o, ring, l: sigma_general(o, l, ring)), {"l": 0},
                           summary="sigma_{2,l} via the Gaussian-binomial double sum"),
    "sigmaconj": _Entry(_plain(lambda o, ring, l: sigma2_ell_shifted_conjugate(o, l, ring)), {"l": 0},
                        summary="sigma_{2,l} via the conjugation form at z = -q^l"),
    "rrsum": _Entry(_plain(lambda o, ring, l: rr_sum(o, l, ring)), {"l": 0},
                    summary="sum q^(n^2+ln)/(q)_n"),
    "gis": _Entry(_gis, {"l": 0}, summary="shifted Rogers-Ramanujan product side"),
    "lcong": _Entry(_lcong, {"l": 0}, ring_free=False, summary="mod-2 triple sum for b_l(n)"),
    "hecke": _Entry(_hecke, {"variant": "i"}, ("i", "ii"), summary="Hecke-type double sums for sigma_2"),
    "gsigma": _Entry(_gsigma, {"variant": "lm1", "l": 0}, ("lm1", "lm2"),
                     summary="Hecke-type double sums for sigma_{2,l}"),
    "mockX": _Entry(_mock(mock10_X), {"start": 0}, summary="tenth-order X(q)"),
    "mockchi": _Entry(_mock(mock10_chi), {"start": 0}, summary="tenth-order chi(q)"),
    "j5": _Entry(_j5, {}, summary="Hauptmodul q^-1 (q)_inf^6/(q^5;q^5)_inf^6, from q^-1"),
    "conj": _Entry(_conj, {"z": -1, "l": 0, "form": "small1", "side": "rhs"}, ring_free=False,
                   summary="conjugation identity sides over QQ"),
    "unrestricted": _Entry(_unrestricted, {"variant": "c", "form": "sum"}, ("c", "e"),
                           summary="unrestricted Rascoe (c) / non-Rascoe (e) series"),
    "realpart": _Entry(_realpart, {"l": 0, "side": "lhs"}, summary="real-part specialization, scaled by q^floor(l^2/4)"),
    "imagpart": _Entry(_imagpart, {"l": 0, "form": "corrected", "side": "lhs"}, ring_free=False,
                   summary="imaginary-part specialization in x, q = x^2"),
    "lostnb": _Entry(_lostnb, {"a": 1, "b": 0, "side": "lhs"}, ring_free=False,
                     summary="lost-notebook relation in x, q = x^4, over QQ"),
    "distinct": _Entry(_plain(lambda o, ring: distinct_parts_product(o, ring)), {},
                       summary="(-q)_inf"),
    "partitions": _Entry(_plain(lambda o, ring: euler_product(1, o, ring).inverse()), {},
                         summary="1/(q)_inf"),
}


def _bind(gid: GenFunId, defaults: dict[str, Value], variants: tuple[str, ...]) -> dict[str, Value]:
    bound = dict(defaults)
    for key, value in gid.params:
        if key not in defaults:
            raise IdSyntaxError(f"{gid.name} has no parameter {key!r}")
        bound[key] = value
    if variants and bound.get("variant") not in variants:
        raise IdSyntaxError(f"{gid.name} variant must be one of {', '.join(variants)}")
    for key, default in defaults.items():
        v = bound[key]
        if isinstance(default, int) and not isinstance(default, bool) and not isinstance(v, int):
            if key in ("z", "a", "b") and isinstance(v, Fraction):
                continue
            raise IdSyntaxError(f"{gid.name}: {key} must be an integer")
        if isinstance(default, str) and not isinstance(v, str):
            raise IdSyntaxError(f"{gid.name}: {key} must be a name")
    return bound


def evaluate(gid: GenFunId | str, order: int, ring: CoefficientRing | None = None) -> CoefficientTable:
    """Coefficients 0..order-1 of the named series (see REGISTRY)."""
    if isinstance(gid, str):
        gid = parse_id(gid)
    entry = REGISTRY.get(gid.name)
    if entry is None:
        raise IdSyntaxError(f"unknown series {gid.name!r}")
    if order < 1:
        raise ValueError("order must be >= 1")
    bound = _bind(gid, entry.params, entry.variants)
    if not entry.ring_free and ring is not None:
        raise ValueError(f"{gid.name} has a fixed coefficient ring")
    return entry.build(order, ring or INTEGER, **bound)


# -- partition classes -----------------------------------------------------------

_PARTITION_CLASSES: dict[str, tuple[Callable[..., ConstraintSpec], dict[str, int | None]]] = {
    "rascoe": (lambda l: ConstraintSpec.rascoe(l), {"l": 0}),
    "nonrascoe": (lambda l: ConstraintSpec.nonrascoe(l), {"l": 0}),
    "rr": (lambda l: ConstraintSpec.rogers_ramanujan(l), {"l": 0}),
    "psmall": (lambda j, l: ConstraintSpec.smallest_repeats(j, l), {"j": 0, "l": 0}),
    "lrep": (lambda l, parts: ConstraintSpec.largest_repeats(l, parts), {"l": 0, "parts": None}),
    "distinct": (lambda: ConstraintSpec.distinct(), {}),
    "unrestricted": (lambda: ConstraintSpec.unrestricted(), {}),
    "crascoe": (lambda: ConstraintSpec.unrestricted_rascoe(), {}),
    "enonrascoe": (lambda: ConstraintSpec.unrestricted_nonrascoe(), {}),
}


def parse_partition_spec(text: str) -> ConstraintSpec:
    """Partition class from e.g. "rascoe[l=0]", "rr[l=1]", "psmall[j=2,l=0]"."""
    gid = parse_id(text)
    found = _PARTITION_CLASSES.get(gid.name)
    if found is None:
        raise IdSyntaxError(f"unknown partition class {gid.name!r}")
    make, defaults = found
    bound = dict(defaults)
    for key, value in gid.params:
        if key not in defaults:
            raise IdSyntaxError(f"{gid.name} has no parameter {key!r}")
        if not isinstance(value, int):
            raise IdSyntaxError(f"{gid.name}: {key} must be an integer")
        bound[key] = value
    try:
        return make(**bound)
    except ValueError as exc:
        raise IdSyntaxError(str(exc)) from exc


def series_names() -> list[str]:
    return sorted(REGISTRY)


def partition_class_names() -> list[str]:
    return sorted(_PARTITION_CLASSES)
