"""Finite q-identities checked by exact evaluation at rational points."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from ..ring_series import pochhammer_at, qbinomial_at
from .report import IdentityReport, json_safe

MIN_POINTS = 5
RESAMPLE_BUDGET = 64
DEFAULT_EXTRAS = {"lam": Fraction(2, 3), "a": Fraction(1, 2), "b": Fraction(3)}


class PoleError(ArithmeticError):
    """Every candidate point hit a pole within the resampling budget."""


def candidate_points() -> list[Fraction]:
    """{+-p/r : 1 <= p, r <= 13, gcd(p, r) = 1} without 0 and +-1, sorted."""
    pts = {Fraction(s * p, r) for p in range(1, 14) for r in range(1, 14) if gcd(p, r) == 1 for s in (1, -1)}
    return sorted(pts - {Fraction(1), Fraction(-1)})


def sample_points(count: int, seed: int, exclude: Sequence[Fraction] = ()) -> list[Fraction]:
    pool = [p for p in candidate_points() if p not in set(exclude)]
    return random.Random(seed).sample(pool, count)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _poch(a, q, n):
    return pochhammer_at(a, q, n)


def _fine_sum(q, n: int, expo: Callable[[int], int], lo: int = 0) -> Fraction:
    """sum_{j=lo}^{n} (-1)_j (-1)^j q^expo(j) / (q)_j."""
    return sum(
        (_poch(-1, q, j) * _sign(j) * q ** expo(j) / _poch(q, q, j) for j in range(lo, n + 1)),
        Fraction(0),
    )


def _tail_term(q, j: int) -> Fraction:
    """(-q)_(j-1) (1 + q^(2j)) (-1)_j q^(-j^2) / (q)_j^2."""
    return _poch(-q, q, j - 1) * (1 + q ** (2 * j)) * _poch(-1, q, j) * q ** (-j * j) / _poch(q, q, j) ** 2


# each evaluator returns (lhs, rhs) at one point

def _finite1(q, n, ell, x):
    lhs = 1 + sum((_tail_term(q, j) for j in range(1, n)), Fraction(0))
    rhs = _sign(n - 1) * _poch(-q, q, n - 1) / _poch(q, q, n - 1) * _fine_sum(q, n - 1, lambda j: j - j * n)
    return lhs, rhs


def _theoremfinite1(q, n, ell, x):
    lhs = _fine_sum(q, n, lambda j: j - j * n)
    rhs = -(1 + q ** n) / (1 - q ** n) * _fine_sum(q, n - 1, lambda j: -j * n)
    return lhs, rhs


def _theoremgfinite1(q, n, ell, x):
    lhs = _fine_sum(q, n, lambda j: -j * (n + ell))
    if ell >= -n:
        ratio = _poch(q ** (n + 1), q, ell) / _poch(-q ** (n + 1), q, ell)
        return lhs, _sign(ell) * ratio * _fine_sum(q, n + ell, lambda j: -j * n)
    # ell < -n: (q^(n+1))_ell has a pole at every q. Multiply both sides by
    # (-q^(n+1))_ell / (q^(n+1))_ell = (q^(n+1+ell))_(-ell) / (-q^(n+1+ell))_(-ell),
    # which vanishes; the right side becomes (-1)^ell times an empty sum.
    m = -ell
    factor = _poch(q ** (n + 1 + ell), q, m) / _poch(-q ** (n + 1 + ell), q, m)
    return lhs * factor, _sign(ell) * _fine_sum(q, n + ell, lambda j: -j * n)


def _lfinitelemma(q, n, ell, x):
    lhs = sum((_tail_term(q, j) for j in range(n + 1, n + ell + 1)), Fraction(0))
    b = _sign(n + ell) * _poch(-q, q, n + ell) / _poch(q, q, n + ell) * _fine_sum(
        q, n + ell, lambda j: -j * (n + ell), lo=n + 1)
    c = _sign(n) * _poch(-q, q, n) / _poch(q, q, n) * _fine_sum(q, n + ell, lambda j: -j * n, lo=n + 1)
    return lhs, b + c


def _finite4(q, n, ell, x):
    lam, a, b = x["lam"], x["a"], x["b"]
    lhs = sum((qbinomial_at(n, m, q) * _poch(-lam / a, q, m) * a ** m * q ** (m * (m + 1) // 2) / _poch(-b * q, q, m)
               for m in range(n + 1)), Fraction(0))
    inner = sum((qbinomial_at(n, m, q) * _poch(-lam / b, q, m) * b ** m * q ** (m * (m + 1) // 2) / _poch(-a * q, q, m)
                 for m in range(n + 1)), Fraction(0))
    return lhs, _poch(-a * q, q, n) / _poch(-b * q, q, n) * inner


def _finite41(q, n, ell, x):
    lam, b = x["lam"], x["b"]
    lhs = sum((qbinomial_at(n, m, q) * lam ** m * q ** (m * m) / _poch(-b * q, q, m) for m in range(n + 1)),
              Fraction(0))
    inner = sum((qbinomial_at(n, m, q) * _poch(-lam / b, q, m) * b ** m * q ** (m * (m + 1) // 2)
                 for m in range(n + 1)), Fraction(0))
    return lhs, inner / _poch(-b * q, q, n)


@dataclass(frozen=True)
class FiniteIdentity:
    id: str
    evaluate: Callable
    summary: str
    min_n: int = 0
    uses_ell: bool = False
    extras: tuple[str, ...] = ()


FINITE_IDENTITIES: dict[str, FiniteIdentity] = {
    f.id: f
    for f in (
        FiniteIdentity("finite1", _finite1, "finite Fine-type sum with the (1+q^(2j)) tail", min_n=1),
        FiniteIdentity("theoremfinite1", _theoremfinite1, "links the two Hecke-type inner sums", min_n=1),
        FiniteIdentity("theoremgfinite1", _theoremgfinite1, "two finite Fine analogues, any integer l",
                       uses_ell=True),
        FiniteIdentity("lfinitelemma", _lfinitelemma, "tail sum over j = n+1..n+l", uses_ell=True),
        FiniteIdentity("finite4", _finite4, "finite Srivastava-type transformation", extras=("lam", "a", "b")),
        FiniteIdentity("finite41", _finite41, "a -> 0 case of the Srivastava-type transformation",
                       extras=("lam", "b")),
    )
}


def finite_ids() -> list[str]:
    return list(FINITE_IDENTITIES)


def _validate(entry: FiniteIdentity, n: int, ell: int, extras: dict) -> None:
    if n < entry.min_n:
        raise ValueError(f"{entry.id} needs n >= {entry.min_n}")
    if entry.id == "theoremgfinite1" and n < 0:
        raise ValueError("theoremgfinite1 is checked for n >= 0 (it is empty for n < 0)")
    if entry.id == "lfinitelemma" and (n < 0 or ell < 0):
        raise ValueError("lfinitelemma needs n, l >= 0")
    for key in ("a", "b"):
        if key in entry.extras and extras[key] == 0:
            raise ValueError(f"{key} must be nonzero")


def check_finite_identity(identity: str, n: int, ell: int = 0, points: Sequence | None = None, *,
                          seed: int = 0, count: int = MIN_POINTS, extras: dict | None = None) -> IdentityReport:
    """Evaluate both sides exactly at rational points; pass iff equal at all of them.

    Points that hit a pole are replaced by fresh seeded samples. With no
    points given, `count` points are drawn from the candidate pool by `seed`.
    """
    entry = FINITE_IDENTITIES.get(identity)
    if entry is None:
        raise KeyError(identity)
    x = {k: Fraction(v) for k, v in {**DEFAULT_EXTRAS, **(extras or {})}.items()}
    _validate(entry, n, ell, x)
    if points is None:
        points = sample_points(count, seed)
    points = [Fraction(p) for p in points]
    if len(points) < MIN_POINTS:
        raise ValueError(f"at least {MIN_POINTS} points are needed")
    bad = [p for p in points if p in (0, 1, -1)]
    if bad:
        raise ValueError(f"points {bad} are poles of every identity")
    rng = random.Random(seed ^ 0x5EED)
    pool = [p for p in candidate_points() if p not in set(points)]
    t0 = time.perf_counter()
    used: list[Fraction] = []
    rejected: list[Fraction] = []
    witness = None
    mode_note = "multiplied through" if identity == "theoremgfinite1" and ell < -n else "direct"
    for p in points:
        for _ in range(RESAMPLE_BUDGET):
            try:
                lhs, rhs = entry.evaluate(p, n, ell, x)
                break
            except ZeroDivisionError:
                rejected.append(p)
                if not pool:
                    raise PoleError(f"{identity}: no pole-free point left")
                p = pool.pop(rng.randrange(len(pool)))
        else:
            raise PoleError(f"{identity}: resampling budget exhausted")
        used.append(p)
        if lhs != rhs and witness is None:
            witness = {"point": str(p), "lhs": str(lhs), "rhs": str(rhs)}
    ms = (time.perf_counter() - t0) * 1000
    params = {"n": n}
    if entry.uses_ell:
        params["l"] = ell
    params.update({k: x[k] for k in entry.extras})
    details = {"evaluation": mode_note}
    if rejected:
        details["rejected_points"] = [str(p) for p in rejected]
    return IdentityReport(
        id=identity,
        params=json_safe(params),
        mode="rational-point-evaluation",
        status="pass" if witness is None else "fail",
        checked={"points": [str(p) for p in used]},
        witness=witness,
        ms=ms,
        details=details,
    )


def finite_grid(max_n: int = 12, max_ell: int = 8) -> list[tuple[str, int, int]]:
    """(id, n, l) triples: n <= max_n and l in [-n-3, max_ell] where l applies."""
    out = []
    for identity, entry in FINITE_IDENTITIES.items():
        for n in range(entry.min_n, max_n + 1):
            if not entry.uses_ell:
                out.append((identity, n, 0))
                continue
            lo = 0 if identity == "lfinitelemma" else -n - 3
            for ell in range(lo, max_ell + 1):
                out.append((identity, n, ell))
    return out
