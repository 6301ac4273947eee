from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonrascoe.genfun import (
    GenFunId,
    IdSyntaxError,
    conjugation_rep,
    evaluate,
    gis_rhs,
    gsigma_reps,
    hauptmodul_j5,
    hecke_reps,
    imagpart_sides,
    lcong_rhs,
    lost_notebook_sides,
    mock10_chi,
    mock10_X,
    nonrascoe_double_sum,
    nonrascoe_gf,
    parse_id,
    parse_partition_spec,
    rascoe_double_sum,
    realpart_sides,
    rr_rank_bivariate,
    rr_sum,
    series_names,
    sigma2_ell,
    sigma2_ell_shifted_conjugate,
    sigma_general,
    unrestricted_gfs,
)
from nonrascoe.partition_oracle import ConstraintSpec
from nonrascoe.ring_series import RATIONAL, modular
from oracles import all_partitions, count_where, distinct, naive_inverse, naive_mul, naive_product, rank

N = 200
ELLS = [0, 1, 2, 3]


# -- oracles ---------------------------------------------------------------------------

def sigma_oracle(n_terms, ell):
    """sum (-1)^n q^(n^2 + ell n) / (-q)_n with schoolbook arithmetic."""
    out = [0] * n_terms
    n = 0
    while n * n + ell * n < n_terms:
        inv = naive_inverse(naive_product(range(1, n + 1), n_terms, c=-1), n_terms)
        e = n * n + ell * n
        for i in range(n_terms - e):
            out[e + i] += (-1) ** n * inv[i]
        n += 1
    return out


def a_oracle(n, ell):
    return count_where(n, lambda p: distinct(p) and (len(p) + ell) in p)


def b_oracle(n, ell):
    return count_where(n, lambda p: distinct(p) and (len(p) + ell) not in p)


def rr_ranks(n, ell):
    out = {}
    for p in all_partitions(n):
        if all(a - b >= 2 for a, b in zip(p, p[1:])) and all(x > ell for x in p):
            out[rank(p)] = out.get(rank(p), 0) + 1
    return out


# -- the rank parity series ----------------------------------------------------------------

def test_sigma2_leading_coefficients():
    assert list(sigma2_ell(10)) == [1, -1, 1, -1, 2, -2, 1, -1, 2, -3]


@pytest.mark.parametrize("ell", ELLS)
def test_sigma2_matches_schoolbook(ell):
    assert list(sigma2_ell(80, ell)) == sigma_oracle(80, ell)


@pytest.mark.parametrize("ell", ELLS)
def test_counts_match_partition_listing(ell):
    b = nonrascoe_gf(41, ell)
    b_sum = nonrascoe_double_sum(41, ell)
    a = rascoe_double_sum(41, ell)
    for n in range(41):
        assert b[n] == b_oracle(n, ell)
        assert b_sum[n] == b[n]
        assert a[n] == a_oracle(n, ell)


@pytest.mark.parametrize("ell", ELLS)
def test_stream_and_product_methods_agree(ell):
    assert nonrascoe_gf(300, ell, method="stream") == nonrascoe_gf(300, ell, method="product")
    assert list(nonrascoe_gf(300, ell, modular(4))) == [x % 4 for x in nonrascoe_gf(300, ell)]


def test_unknown_method():
    with pytest.raises(ValueError):
        nonrascoe_gf(10, 0, method="magic")


@pytest.mark.parametrize("ell", ELLS)
def test_rank_bivariate_matches_listing(ell):
    biv = rr_rank_bivariate(41, ell)
    for n in range(1, 41):
        got = {m: c for m, c in biv.coefficient(n).items()}
        assert got == rr_ranks(n, ell)


def test_rank_bivariate_keeps_the_empty_term():
    # the formula gives z^-1 at n = 0, while the empty partition has rank 0
    assert dict(rr_rank_bivariate(5).coefficient(0).items()) == {-1: 1}


@pytest.mark.parametrize("ell", ELLS)
def test_representations_agree(ell):
    s = sigma2_ell(N, ell)
    assert gsigma_reps(N, ell, "lm1") == s
    assert gsigma_reps(N, ell, "lm2") == s
    assert sigma_general(N, ell) == s
    assert sigma2_ell_shifted_conjugate(N, ell) == s
    pair = conjugation_rep(N, -1, ell, "small1")
    assert pair.lhs == pair.rhs
    assert list(pair.lhs) == list(s)


def test_hecke_forms_and_second_conjugation_form():
    s = sigma2_ell(N)
    assert hecke_reps(N, "i") == s
    assert hecke_reps(N, "ii") == s
    pair = conjugation_rep(N, -1, 0, "small2")
    assert pair.lhs == pair.rhs


@pytest.mark.parametrize("z", [Fraction(2, 3), Fraction(-3, 2), 5])
def test_conjugation_forms_at_other_z(z):
    for form in ("small1", "small2"):
        pair = conjugation_rep(60, z, 0, form)
        assert pair.lhs == pair.rhs


@pytest.mark.parametrize("ell", range(7))
def test_shifted_rogers_ramanujan_product_side(ell):
    assert gis_rhs(N, ell) == rr_sum(N, ell)


@pytest.mark.parametrize("ell", ELLS)
def test_mod2_triple_sum(ell):
    assert list(lcong_rhs(N, ell)) == list(nonrascoe_gf(N, ell, modular(2)))


def test_rr_sum_by_brute_force():
    s = rr_sum(30, 1)
    for n in range(30):
        assert s[n] == sum(rr_ranks(n, 1).values())


# -- unrestricted classes -------------------------------------------------------------------

def test_unrestricted_series():
    u = unrestricted_gfs(N)
    assert u.c_double_sum == u.c_product
    assert u.e_double_sum == u.e_product
    p = naive_inverse(naive_product(range(1, N), N), N)
    assert [x + y for x, y in zip(u.c_product, u.e_product)] == p
    for n in range(25):
        assert u.c_product[n] == count_where(n, lambda q: len(q) in q)


# -- tenth-order series and the Hauptmodul --------------------------------------------------

def _mock_oracle(n_terms, odd):
    out = [0] * n_terms
    k = 0
    while (k + odd) ** 2 < n_terms:
        e = (k + odd) ** 2
        inv = naive_inverse(naive_product(range(1, 2 * k + odd + 1), n_terms, c=-1), n_terms)
        for i in range(n_terms - e):
            out[e + i] += (-1) ** k * inv[i]
        k += 1
    return out


def test_mock_theta_series():
    assert list(mock10_X(60)) == _mock_oracle(60, 0)
    assert list(mock10_chi(60)) == _mock_oracle(60, 1)
    assert list(mock10_X(60, 1)) == [x - (i == 0) for i, x in enumerate(_mock_oracle(60, 0))]


def test_hauptmodul():
    j = hauptmodul_j5(60)
    num = naive_product(range(1, 61), 61)
    den = naive_product(range(5, 61, 5), 61)
    for _ in range(5):
        num = naive_mul(num, naive_product(range(1, 61), 61), 61)
    inv = naive_inverse(den, 61)
    for _ in range(5):
        inv = naive_mul(inv, naive_inverse(den, 61), 61)
    f = naive_mul(num, inv, 61)
    assert j.coefficient(-1) == f[0] == 1
    assert [j.coefficient(n) for n in range(60)] == f[1:]
    assert j.coefficient(-9) == 0
    assert [j.coefficient(n) for n in range(4)] == [-6, 9, 10, -30]


# -- real, imaginary and lost-notebook relations --------------------------------------------

@pytest.mark.parametrize("ell", range(6))
def test_real_part(ell):
    pair = realpart_sides(120, ell)
    assert pair.lhs == pair.rhs
    assert pair.offset == ell * ell // 4


@pytest.mark.parametrize("ell", range(6))
def test_imaginary_part(ell):
    pair = imagpart_sides(120, ell)
    assert pair.lhs == pair.rhs
    assert pair.variable == "x^2"


@pytest.mark.parametrize("ell", range(1, 5))
def test_imaginary_part_as_printed_fails(ell):
    # the exponent n^2 + n - n l + l/2 does not match; n^2 + n - n l + l does
    pair = imagpart_sides(120, ell, form="printed")
    assert pair.lhs.first_mismatch(pair.rhs) is not None


def test_imaginary_part_forms_coincide_at_zero():
    a, b = imagpart_sides(60, 0, "printed"), imagpart_sides(60, 0)
    assert a.lhs == b.lhs and a.rhs == b.rhs


@pytest.mark.parametrize("a,b", [(1, 0), (2, -1), (Fraction(1, 2), Fraction(3, 5)), (-3, Fraction(2, 7))])
def test_lost_notebook_relation(a, b):
    pair = lost_notebook_sides(80, a, b)
    assert pair.lhs == pair.rhs
    assert pair.lhs.ring == RATIONAL


def test_lost_notebook_rejects_zero_a():
    with pytest.raises(ValueError):
        lost_notebook_sides(20, 0, 1)


# -- id grammar and registry -----------------------------------------------------------------

def test_parse_examples():
    assert parse_id("sigma2[l=0]") == GenFunId("sigma2", (("l", 0),))
    assert parse_id("hecke[ii]") == GenFunId("hecke", (("variant", "ii"),))
    assert parse_id(" gsigma [ lm2 , l = 1 ] ") == GenFunId("gsigma", (("variant", "lm2"), ("l", 1)))
    assert parse_id("conj[z=-3/6]").get("z") == Fraction(-1, 2)
    assert parse_id("lostnb[a=4/2]").get("a") == 2
    assert parse_id("distinct[]") == GenFunId("distinct")


@pytest.mark.parametrize("text", ["", "[l=0]", "sigma2[", "sigma2[l=]", "sigma2[l=0,l=1]", "sigma2]",
                                  "sigma2[l=1/0]", "sigma2[l=0]x", "sig ma2", "sigma2[l=0;]"])
def test_parse_errors(text):
    with pytest.raises(IdSyntaxError):
        parse_id(text)


names = st.from_regex(r"[a-z_][a-z0-9_]{0,6}", fullmatch=True)
values = st.one_of(st.integers(-50, 50), st.fractions(max_denominator=9).filter(lambda f: f.denominator > 1), names)


@settings(max_examples=100, deadline=None)
@given(names, st.dictionaries(names.filter(lambda k: k != "variant"), values, max_size=3))
def test_canonical_form_round_trips(name, params):
    gid = GenFunId(name, tuple(params.items()))
    assert parse_id(str(gid)) == gid


def test_evaluate_registry():
    assert list(evaluate("sigma2[l=0]", 10).series) == [1, -1, 1, -1, 2, -2, 1, -1, 2, -3]
    assert evaluate("nonrascoe", 12).series[11] == 9
    table = evaluate("j5", 3)
    assert list(table.rows()) == [(-1, 1), (0, -6), (1, 9)]
    assert list(evaluate("hecke[ii]", 30).series) == list(sigma2_ell(30))
    assert list(evaluate("sigma2[l=1]", 20, modular(2)).series) == [x % 2 for x in sigma2_ell(20, 1)]
    assert set(series_names()) >= {"sigma2", "nonrascoe", "hecke", "gsigma", "mockX", "mockchi", "j5"}


@pytest.mark.parametrize("text", ["nosuch", "sigma2[k=1]", "sigma2[l=x]", "hecke[iii]", "gsigma[lm3]",
                                  "conj[side=middle]"])
def test_evaluate_rejects_bad_ids(text):
    with pytest.raises(ValueError):
        evaluate(text, 10)


def test_fixed_ring_entries():
    with pytest.raises(ValueError):
        evaluate("lcong", 10, modular(2))
    assert list(evaluate("lcong[l=1]", 30).series) == list(nonrascoe_gf(30, 1, modular(2)))


def test_partition_spec_strings():
    assert parse_partition_spec("rascoe[l=0]") == ConstraintSpec.rascoe(0)
    assert parse_partition_spec("rr[l=1]") == ConstraintSpec.rogers_ramanujan(1)
    assert parse_partition_spec("psmall[j=2,l=0]") == ConstraintSpec.smallest_repeats(2, 0)
    for bad in ("nosuch", "rr[j=1]", "rr[l=1/2]"):
        with pytest.raises(IdSyntaxError):
            parse_partition_spec(bad)
