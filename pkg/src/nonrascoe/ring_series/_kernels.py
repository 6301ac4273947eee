"""List-level kernels for truncated series arithmetic.

All functions take plain Python lists of ring elements and return fresh lists.
Integer-valued coefficients (ZZ and Z/m) use exact big-integer arithmetic;
rationals are handled by clearing denominators.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import accumulate
from math import lcm

from .rings import CoefficientRing, RingError

SCHOOLBOOK_CUTOFF = 48
SPARSE_FRACTION = 0.125


def nonzero_terms(a: list) -> list[tuple[int, object]]:
    return [(i, c) for i, c in enumerate(a) if c]


def _schoolbook(a: list, b: list, n: int) -> list:
    out = [0] * n
    bt = nonzero_terms(b)
    for i, ai in enumerate(a[:n]):
        if not ai:
            continue
        lim = n - i
        for j, bj in bt:
            if j >= lim:
                break
            out[i + j] += ai * bj
    return out


def _pack(values: list[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _signed_pack(values: list[int], width: int) -> int:
    pos = [v if v > 0 else 0 for v in values]
    neg = [-v if v < 0 else 0 for v in values]
    return _pack(pos, width) - _pack(neg, width)


def _kronecker(a: list[int], b: list[int], n: int) -> list[int]:
    """Truncated product of integer sequences via Kronecker substitution."""
    a = a[:n]
    b = b[:n]
    amax = max((abs(x) for x in a), default=0)
    bmax = max((abs(x) for x in b), default=0)
    if amax == 0 or bmax == 0:
        return [0] * n
    bound = amax * bmax * min(len(a), len(b))
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width
    prod = _signed_pack(a, width) * _signed_pack(b, width)
    half = 1 << (bits - 1)
    # offset every digit by 2^(bits-1) so each is nonnegative and carry-free,
    # then keep the low n digits (exact, since |digit| < 2^(bits-1))
    prod = (prod + _pack([half] * n, width)) & ((1 << (bits * n)) - 1)
    raw = prod.to_bytes(width * n, "little")
    return [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n)
    ]


def _int_mul(a: list[int], b: list[int], n: int) -> list[int]:
    la, lb = min(len(a), n), min(len(b), n)
    if min(la, lb) <= SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b, n)
    nza = sum(1 for x in a[:n] if x)
    nzb = sum(1 for x in b[:n] if x)
    if min(nza, nzb) <= SPARSE_FRACTION * n or min(nza, nzb) <= SCHOOLBOOK_CUTOFF:
        if nza <= nzb:
            return _sparse_mul(a, b, n)
        return _sparse_mul(b, a, n)
    return _kronecker(a, b, n)


def _sparse_mul(sparse: list, dense: list, n: int) -> list:
    out = [0] * n
    for i, c in nonzero_terms(sparse[:n]):
        lim = n - i
        seg = dense[:lim]
        if c == 1:
            for j, d in enumerate(seg):
                if d:
                    out[i + j] += d
        elif c == -1:
            for j, d in enumerate(seg):
                if d:
                    out[i + j] -= d
        else:
            for j, d in enumerate(seg):
                if d:
                    out[i + j] += c * d
    return out


def _clear(a: list[Fraction]) -> tuple[list[int], int]:
    den = 1
    for x in a:
        if x:
            den = lcm(den, x.denominator)
    return [int(x * den) for x in a], den


def mul(ring: CoefficientRing, a: list, b: list, n: int) -> list:
    """First n coefficients of a*b."""
    if ring.kind == "rational":
        ai, da = _clear(a[:n])
        bi, db = _clear(b[:n])
        prod = _int_mul(ai, bi, n)
        d = da * db
        return [Fraction(x, d) for x in prod] + [Fraction(0)] * (n - len(prod))
    out = _int_mul(a, b, n)
    out += [0] * (n - len(out))
    return ring.normalize(out)


def inverse(ring: CoefficientRing, a: list, n: int) -> list:
    """First n coefficients of 1/a; a[0] must be a unit."""
    if not a or not ring.is_unit(a[0]):
        raise RingError(f"constant term {a[0] if a else 0} is not a unit in {ring}")
    nz = nonzero_terms(a[1:n])
    if n <= 256 or len(nz) <= 4 * int(n ** 0.5) + 16:
        return _inverse_recurrence(ring, a, n, nz)
    return _inverse_newton(ring, a, n)


def _inverse_recurrence(ring, a, n, nz) -> list:
    inv0 = ring.inverse(a[0])
    y = [ring.zero] * n
    y[0] = inv0
    terms = [(j + 1, c) for j, c in nz]
    modular = ring.is_modular
    m = ring.modulus
    for i in range(1, n):
        acc = 0
        for j, c in terms:
            if j > i:
                break
            yi = y[i - j]
            if yi:
                acc += c * yi
        if acc:
            v = -acc * inv0
            y[i] = v % m if modular else v
    return y


def _inverse_newton(ring, a, n) -> list:
    prec = 256
    y = _inverse_recurrence(ring, a, prec, nonzero_terms(a[1:prec]))
    while prec < n:
        prec = min(2 * prec, n)
        ay = mul(ring, a[:prec], y, prec)
        # y <- y (2 - a y)
        corr = [-c for c in ay]
        corr[0] += 2
        y = mul(ring, y, ring.normalize(corr) if ring.is_modular else corr, prec)
    return y


def mul_binomial(ring: CoefficientRing, a: list, k: int, c) -> list:
    """a * (1 - c q^k), same length."""
    if c == 0:
        return list(a)
    if k == 0:
        f = 1 - c
        return ring.normalize([f * x for x in a])
    head = list(a[:k])
    if c == 1:
        tail = [x - y for x, y in zip(a[k:], a)]
    elif c == -1:
        tail = [x + y for x, y in zip(a[k:], a)]
    else:
        tail = [x - c * y for x, y in zip(a[k:], a)]
    return ring.normalize(head + tail)


def _alternate(seq: list) -> list:
    seq[1::2] = [-x for x in seq[1::2]]
    return seq


def div_binomial(ring: CoefficientRing, a: list, k: int, c) -> list:
    """a / (1 - c q^k) for k >= 1, same length.

    Each residue class mod k is an independent first-order recurrence,
    solved with a running sum.
    """
    if k < 1:
        raise RingError("div_binomial needs k >= 1")
    y = list(a)
    if c == 0:
        return y
    for r in range(min(k, len(y))):
        cls = y[r::k]
        if len(cls) < 2:
            continue
        if c == 1:
            y[r::k] = list(accumulate(cls))
        elif c == -1:
            y[r::k] = _alternate(list(accumulate(_alternate(cls))))
        else:
            out = []
            prev = 0
            for x in cls:
                prev = x + c * prev
                out.append(prev)
            y[r::k] = out
    return ring.normalize(y)
