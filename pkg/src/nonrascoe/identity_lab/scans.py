"""Congruence and parity scans over long coefficient ranges."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .. import partition_oracle as oracle
from ..genfun import hauptmodul_j5, lcong_rhs, mock10_chi, mock10_X, nonrascoe_gf, unrestricted_gfs
from ..ring_series import INTEGER, modular, quadratic_range
from .report import IdentityReport

# exceptional m (0 <= m <= 118) with b(29*29m + 21) divisible by 4, as published
PUBLISHED_EXCEPTIONAL_M = (
    0, 1, 7, 8, 13, 19, 22, 27, 28, 29, 32, 37, 41, 44, 47, 48, 49, 50, 51, 52, 53, 57, 64, 67, 69,
    74, 75, 76, 77, 78, 79, 81, 82, 83, 84, 85, 89, 95, 100, 102, 104, 106, 108, 109, 115, 116, 117, 118,
)
PUBLISHED_M_RANGE = 118


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000


# -- b(29k + 21) mod 4 -------------------------------------------------------------

@dataclass
class Conjecture1Scan:
    nmax: int
    eligible: int
    violations: list[tuple[int, int]]      # (k, b(29k+21) mod 4)
    exceptional: list[int]                 # m with b(29*29m+21) = 0 mod 4
    multiples_checked: list[int]           # every m with 29*29m+21 <= nmax
    ms: float = 0.0
    sample: list[tuple[int, int, int]] = field(default_factory=list)  # (k, n, b(n) mod 4), first eligible k

    def residue_of(self, k: int) -> int | None:
        return dict(self.violations).get(k)

    def report(self) -> IdentityReport:
        witness = None
        if self.violations:
            k, r = self.violations[0]
            witness = {"k": k, "n": 29 * k + 21, "residue_mod_4": r}
        top = min(PUBLISHED_M_RANGE, self.multiples_checked[-1]) if self.multiples_checked else -1
        published = [m for m in PUBLISHED_EXCEPTIONAL_M if m <= top]
        found = [m for m in self.exceptional if m <= top]
        details = {
            "eligible_k": self.eligible,
            "violations": [list(v) for v in self.violations],
            "exceptional_m": self.exceptional,
            "first_eligible": [list(t) for t in self.sample],
            "published_comparison": {
                "m_range": [0, top],
                "found_only": sorted(set(found) - set(published)),
                "published_only": sorted(set(published) - set(found)),
            },
        }
        return IdentityReport(
            id="conjecture1",
            params={"nmax": self.nmax},
            mode="modular-scan",
            status="fail" if self.violations else "pass",
            checked={"n_range": [0, self.nmax], "ring": "Z/4"},
            witness=witness,
            ms=self.ms,
            details=details,
        )


def scan_conjecture1(nmax: int) -> Conjecture1Scan:
    """b(29k+21) mod 4 for every 29k+21 <= nmax, all in Z/4.

    Eligible k are k >= 1 not divisible by 29; multiples k = 29m are
    reported separately.
    """
    if nmax < 50:
        raise ValueError("nmax must be >= 50")
    t0 = time.perf_counter()
    b = nonrascoe_gf(nmax + 1, 0, modular(4))
    violations = []
    exceptional = []
    multiples = []
    eligible = 0
    sample = []
    k = 0
    while 29 * k + 21 <= nmax:
        v = b[29 * k + 21]
        if k % 29:
            eligible += 1
            if len(sample) < 10:
                sample.append((k, 29 * k + 21, v))
            if v:
                violations.append((k, v))
        else:
            m = k // 29
            multiples.append(m)
            if v == 0:
                exceptional.append(m)
        k += 1
    return Conjecture1Scan(nmax, eligible, violations, exceptional, multiples, _ms(t0), sample)


# -- parity of b_ell -------------------------------------------------------------------

def _pentagonal_like(a: int, b: int, shift: int, nmax: int) -> set[int]:
    """{m(a m + b)/2 + shift : m in Z} within [0, nmax]."""
    out = set()
    for m in quadratic_range(a, b, shift, nmax + 1):
        v = m * (a * m + b) // 2 + shift
        if 0 <= v <= nmax:
            out.add(v)
    return out


def predicted_odd_support(ell: int, nmax: int) -> set[int]:
    """Where b_ell(n) is predicted odd: ell = 0, 1, 2."""
    if ell == 0:
        return _pentagonal_like(5, 1, 0, nmax)
    if ell == 1:
        return _pentagonal_like(5, -3, 0, nmax)
    if ell == 2:
        # the two progressions are disjoint on n >= 0, so their union is their mod-2 sum
        return _pentagonal_like(5, 1, -1, nmax) ^ _pentagonal_like(5, -3, -1, nmax)
    raise ValueError("parity predictions exist for ell in {0, 1, 2}")


def parity_scan(ell: int, nmax: int) -> IdentityReport:
    t0 = time.perf_counter()
    predicted = predicted_odd_support(ell, nmax)
    b = nonrascoe_gf(nmax + 1, ell, modular(2))
    odd = set(b.support())
    diff = sorted(odd ^ predicted)
    witness = None
    if diff:
        n = diff[0]
        witness = {"n": n, "b_mod_2": b[n], "predicted_odd": n in predicted}
    return IdentityReport(
        id="parity",
        params={"l": ell, "nmax": nmax},
        mode="modular-scan",
        status="fail" if diff else "pass",
        checked={"n_range": [0, nmax], "ring": "Z/2"},
        witness=witness,
        ms=_ms(t0),
        details={"odd_count": len(odd)},
    )


# -- convolutions with tenth-order mock theta coefficients --------------------------

def _first_odd(values, start: int) -> int | None:
    for k in range(start, len(values)):
        if values[k]:
            return k
    return None


def convolution_congruences(kmax: int, start: int = 0) -> IdentityReport:
    """sum_{n<=k} b(n) c_X(k-n) + b_1(n) c_chi(k-n) = 0 mod 2 for 1 <= k <= kmax.

    `start` selects the lower limit of the X and chi sums (0 or 1); the k = 0
    value is recorded in the details either way.
    """
    if start not in (0, 1):
        raise ValueError("start must be 0 or 1")
    t0 = time.perf_counter()
    r2 = modular(2)
    order = kmax + 1
    b = nonrascoe_gf(order, 0, r2)
    b1 = nonrascoe_gf(order, 1, r2)
    conv = b * mock10_X(order, start, r2) + b1 * mock10_chi(order, start, r2)
    k = _first_odd(conv, 1)
    witness = None if k is None else {"k": k, "value_mod_2": conv[k]}
    return IdentityReport(
        id="convolution",
        params={"kmax": kmax, "start": start},
        mode="modular-scan",
        status="pass" if k is None else "fail",
        checked={"k_range": [1, kmax], "ring": "Z/2"},
        witness=witness,
        ms=_ms(t0),
        details={"k0_value_mod_2": conv[0]},
    )


def j5_convolution(kmax: int) -> IdentityReport:
    """sum_{n<=k} b(n) c5(40k-40n-1) + b_1(n) c5(40k-40n-9) = 0 mod 2 for 1 <= k <= kmax."""
    t0 = time.perf_counter()
    r2 = modular(2)
    b = nonrascoe_gf(kmax + 1, 0, r2)
    b1 = nonrascoe_gf(kmax + 1, 1, r2)
    j = hauptmodul_j5(40 * kmax, r2)
    witness = None
    for k in range(1, kmax + 1):
        total = sum(b[n] * j.coefficient(40 * (k - n) - 1) + b1[n] * j.coefficient(40 * (k - n) - 9)
                    for n in range(k + 1))
        if total % 2:
            witness = {"k": k, "value_mod_2": total % 2}
            break
    return IdentityReport(
        id="convolution_j5",
        params={"kmax": kmax},
        mode="modular-scan",
        status="pass" if witness is None else "fail",
        checked={"k_range": [1, kmax], "ring": "Z/2", "c5_order": 40 * kmax},
        witness=witness,
        ms=_ms(t0),
        details={"c5_at_minus_1": j.coefficient(-1), "c5_at_minus_9": j.coefficient(-9)},
    )


# -- triple-sum parity and the Beck statistic ----------------------------------------

def scan_lcong(ell: int, order: int) -> IdentityReport:
    if not 0 <= ell <= 6:
        raise ValueError("ell must be in [0, 6]")
    t0 = time.perf_counter()
    lhs = nonrascoe_gf(order, ell, modular(2))
    rhs = lcong_rhs(order, ell)
    k = lhs.first_mismatch(rhs)
    witness = None if k is None else {"index": k, "lhs": lhs[k], "rhs": rhs[k]}
    return IdentityReport(
        id="lcong",
        params={"l": ell},
        mode="modular-scan",
        status="pass" if k is None else "fail",
        checked={"order": order, "ring": "Z/2"},
        witness=witness,
        ms=_ms(t0),
        details={"support_rhs": rhs.support()[:12]},
    )


@dataclass
class BeckRow:
    n: int
    statistic: int
    e: int
    extra: dict = field(default_factory=dict)


def beck_scan(nmax: int, limit: int = oracle.DEFAULT_WEIGHT_LIMIT) -> IdentityReport:
    """Distinct-part totals over partitions of 2n+2 with rank n+1, against e(n)."""
    if 2 * nmax + 2 > limit:
        raise oracle.OracleGuardError(f"2*nmax+2 = {2 * nmax + 2} exceeds the weight limit {limit}")
    t0 = time.perf_counter()
    e = unrestricted_gfs(nmax + 1, INTEGER).e_product
    rows = [BeckRow(n, oracle.beck_statistic(n, limit), e[n]) for n in range(nmax + 1)]
    bad = [r for r in rows if r.statistic != r.e]
    witness = None if not bad else {"n": bad[0].n, "statistic": bad[0].statistic, "e": bad[0].e}
    agree_to = (bad[0].n - 1) if bad else nmax
    return IdentityReport(
        id="beck",
        params={"nmax": nmax},
        mode="modular-scan",
        status="pass" if not bad else "fail",
        checked={"n_range": [0, nmax], "ring": "Z"},
        witness=witness,
        ms=_ms(t0),
        details={"agrees_through": agree_to, "table": [[r.n, r.statistic, r.e] for r in rows]},
    )
