import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonrascoe.ring_series import (
    INTEGER,
    RATIONAL,
    LaurentPolynomial,
    RingError,
    TruncatedSeries,
    euler_product,
    gaussian_binomial,
    jacobi_sum,
    modular,
    parse_ring,
    partitions_in_box,
    pochhammer,
    pochhammer_at,
    qbinomial_at,
    series_inv,
)
from nonrascoe.genfun import nonrascoe_gf, sigma2_ell
from oracles import naive_mul, naive_product

RINGS = [INTEGER, RATIONAL, modular(2), modular(4), modular(7)]


def reduce(values, ring):
    if ring.is_modular:
        return [v % ring.modulus for v in values]
    return [ring.coerce(v) for v in values]


def coeff_lists(n=30):
    return st.lists(st.integers(-50, 50), min_size=n, max_size=n)


rings = st.sampled_from(RINGS)


# -- arithmetic laws -----------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(rings, coeff_lists(), coeff_lists(), coeff_lists())
def test_ring_axioms(ring, a, b, c):
    A, B, C = (TruncatedSeries(ring, x) for x in (a, b, c))
    assert (A + B) + C == A + (B + C)
    assert A * (B + C) == A * B + A * C
    assert A * B == B * A


@settings(max_examples=40, deadline=None)
@given(rings, coeff_lists(), coeff_lists())
def test_product_matches_schoolbook(ring, a, b):
    got = TruncatedSeries(ring, a) * TruncatedSeries(ring, b)
    assert list(got) == reduce(naive_mul(a, b, 30), ring)


@settings(max_examples=40, deadline=None)
@given(rings, coeff_lists(40), coeff_lists(40), st.integers(1, 40))
def test_truncation_consistency(ring, a, b, n):
    long = TruncatedSeries(ring, a) * TruncatedSeries(ring, b)
    short = TruncatedSeries(ring, a[:n]) * TruncatedSeries(ring, b[:n])
    assert short == long.truncate(n)


def test_mixed_orders_truncate_to_minimum():
    s = TruncatedSeries(INTEGER, [1, 2, 3]) + TruncatedSeries(INTEGER, [1, 1])
    assert list(s) == [2, 3]


def _unit(ring, k):
    if ring == INTEGER:
        return 1 if k % 2 else -1
    if ring == RATIONAL:
        return Fraction(k, 7)
    while math.gcd(k, ring.modulus) != 1:
        k += 1
    return k


@settings(max_examples=50, deadline=None)
@given(rings, coeff_lists(), st.integers(1, 50))
def test_inverse_of_units(ring, a, k):
    s = TruncatedSeries(ring, [_unit(ring, k)] + a[1:])
    assert s * series_inv(s) == TruncatedSeries.one(30, ring)


def test_inverse_of_nonunit_raises():
    with pytest.raises((RingError, ZeroDivisionError)):
        TruncatedSeries(INTEGER, [2, 1, 0]).inverse()
    with pytest.raises((RingError, ZeroDivisionError)):
        TruncatedSeries(modular(4), [2, 1]).inverse()


def test_div_binomial_inverts_mul_binomial():
    s = TruncatedSeries(INTEGER, range(1, 21))
    assert s.mul_binomial(3, 2).div_binomial(3, 2) == s


def test_shift_and_substitute():
    s = TruncatedSeries(INTEGER, [1, 2, 3, 4])
    assert list(s.shift(2)) == [0, 0, 1, 2]
    # the top coefficients are unknown after a down-shift
    assert list(s.shift(2).shift(-2)) == [1, 2]
    assert list(s.substitute_power(2)) == [1, 0, 2, 0, 3, 0, 4, 0]
    with pytest.raises(RingError):
        s.shift(-1)


def test_parse_ring():
    assert parse_ring("int") == INTEGER
    assert parse_ring("rat") == RATIONAL
    assert parse_ring("mod4") == modular(4)
    with pytest.raises(RingError):
        parse_ring("mod1")
    with pytest.raises(RingError):
        parse_ring("reals")


# -- homomorphism into Z/m -------------------------------------------------------

@pytest.mark.parametrize("m", [2, 4])
def test_reduction_commutes_with_sigma2_pipeline(m):
    full = sigma2_ell(200, 0) * euler_product(2, 200) * euler_product(1, 200).inverse()
    assert list(full.change_ring(modular(m))) == list(nonrascoe_gf(200, 0, modular(m)))
    assert list(sigma2_ell(200, 1).change_ring(modular(m))) == list(sigma2_ell(200, 1, modular(m)))


# -- products and theta sums ---------------------------------------------------------

def test_euler_product_matches_naive():
    assert list(euler_product(1, 120)) == naive_product(range(1, 120), 120)
    assert list(euler_product(3, 120)) == naive_product(range(3, 120, 3), 120)


def test_pochhammer_finite_and_infinite():
    assert list(pochhammer(1, 2, 5, None, 80)) == naive_product(range(2, 80, 5), 80)
    assert list(pochhammer(1, 1, 1, 4, 20)) == naive_product([1, 2, 3, 4], 20)


def _naive_theta(a, b, n):
    out = [0] * n
    for k in range(-100, 101):
        e = k * (a * k + b) // 2
        if 0 <= e < n:
            out[e] += -1 if k % 2 else 1
    return out


def test_jacobi_sums_against_triple_products():
    n = 200
    assert list(jacobi_sum(5, 1, n)) == _naive_theta(5, 1, n)
    assert list(jacobi_sum(5, 1, n)) == naive_product(
        [e for e in range(1, n) if e % 5 in (0, 2, 3)], n)
    assert list(jacobi_sum(5, -3, n)) == naive_product(
        [e for e in range(1, n) if e % 5 in (0, 1, 4)], n)


def test_rogers_ramanujan_first_identity():
    n = 200
    lhs = [0] * n
    for k in range(15):
        denom = TruncatedSeries(INTEGER, naive_product(range(1, k + 1), n)).inverse()
        lhs = [x + y for x, y in zip(lhs, denom.shift(k * k))]
    rhs = TruncatedSeries(INTEGER, naive_product([e for e in range(1, n) if e % 5 in (1, 4)], n)).inverse()
    assert lhs == list(rhs)


# -- Gaussian binomials and boxes --------------------------------------------------

def _box_count(nbox, m, k):
    """Partitions of k into at most m parts each <= nbox, by recursion on the largest part."""
    def go(rest, parts, cap):
        if rest == 0:
            return 1
        if parts == 0:
            return 0
        return sum(go(rest - p, parts - 1, p) for p in range(1, min(cap, rest) + 1))
    return go(k, m, nbox)


def test_gaussian_binomial_symmetry_and_degree():
    for top in range(21):
        for n in range(top + 1):
            g = gaussian_binomial(top, n)
            assert g == gaussian_binomial(top, top - n)
            assert all(c >= 0 for _, c in g.items())
            assert g.max_degree == n * (top - n)
    assert gaussian_binomial(3, 4) == LaurentPolynomial()


def test_partitions_in_box_against_recursion():
    for nbox in range(7):
        for m in range(7):
            for k in range(nbox * m + 2):
                assert partitions_in_box(nbox, m, k) == _box_count(nbox, m, k)
                assert partitions_in_box(nbox, m, k) == partitions_in_box(m, nbox, k)


def test_partitions_in_box_symmetry_to_ten():
    for nbox in range(11):
        for m in range(11):
            for k in range(nbox * m + 1):
                assert partitions_in_box(nbox, m, k) == partitions_in_box(m, nbox, k)


def test_pochhammer_at_values():
    q = Fraction(1, 3)
    a = Fraction(2, 5)
    direct = 1
    for k in range(4):
        direct *= 1 - a * q ** k
    assert pochhammer_at(a, q, 4) == direct
    assert pochhammer_at(a, q, 0) == 1
    # (a)_{-n} (a q^{-n})_n = 1
    assert pochhammer_at(a, q, -3) * pochhammer_at(a * q ** -3, q, 3) == 1
    with pytest.raises(ZeroDivisionError):
        pochhammer_at(q, q, -1)


def test_qbinomial_at_small_case():
    q = Fraction(2, 7)
    assert qbinomial_at(4, 2, q) == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert qbinomial_at(4, 5, q) == 0
