from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonrascoe import partition_oracle as po
from nonrascoe.partition_oracle import ConstraintSpec, OracleGuardError, Partition
from oracles import all_partitions, distinct, rank


# -- brute-force oracle: all partitions, filtered by the plain definitions -------------

def brute(n, pred):
    return [p for p in all_partitions(n) if pred(p)]


def is_rr(p, ell=0):
    return all(a - b >= 2 for a, b in zip(p, p[1:])) and all(x > ell for x in p)


def is_rascoe(p, ell=0):
    return distinct(p) and (len(p) + ell) in p


def is_nonrascoe(p, ell=0):
    return distinct(p) and (len(p) + ell) not in p


def is_psmall(p, j, ell=0):
    if j == 0:
        return distinct(p)
    if not p or p[-1] != j or p.count(j) != j + ell:
        return False
    rest = [x for x in p if x != j]
    return distinct(rest)


def is_lrep(p, ell=0):
    return not p or p.count(p[0]) >= p[0] + ell


# -- worked values -----------------------------------------------------------------------

def test_worked_counts():
    assert po.a_count(11) == 3
    assert po.b_count(11) == 9
    assert po.b_count(0) == 1
    assert po.a_count(0) == 0
    assert [po.p_small(j, 11) for j in range(3)] == [12, 5, 2]
    assert sum((-1) ** j * c for j, c in po.count_by_smallest(11).items()) == 9


def test_rascoe_listing_of_eleven():
    got = [p.parts for p in po.enumerate_partitions(11, ConstraintSpec.rascoe())]
    assert got == [(9, 2), (7, 3, 1), (6, 3, 2)]


def test_rr_rank_split_at_nine():
    parts = po.enumerate_partitions(9, ConstraintSpec.rogers_ramanujan())
    odd = [p.parts for p in parts if p.rank % 2]
    assert odd == [(7, 2)]
    assert len(parts) - len(odd) == 4


def test_empty_partition():
    assert po.enumerate_partitions(0, ConstraintSpec.nonrascoe()) == [Partition(())]
    assert po.rank_counts(0) == {0: 1}
    assert Partition(()).rank == 0


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))


def test_conjugate_is_involution():
    for p in all_partitions(12):
        q = Partition(p).conjugate()
        assert q.weight == 12
        assert q.conjugate() == Partition(p)


# -- oracle vs brute force ---------------------------------------------------------------

CLASSES = [
    (lambda ell: ConstraintSpec.rogers_ramanujan(ell), is_rr),
    (lambda ell: ConstraintSpec.rascoe(ell), is_rascoe),
    (lambda ell: ConstraintSpec.nonrascoe(ell), is_nonrascoe),
    (lambda ell: ConstraintSpec.largest_repeats(ell), is_lrep),
]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 22), st.integers(0, 3), st.sampled_from(range(len(CLASSES))))
def test_enumeration_matches_brute_force(n, ell, which):
    make, pred = CLASSES[which]
    got = [p.parts for p in po.enumerate_partitions(n, make(ell))]
    assert got == brute(n, lambda p: pred(p, ell))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 22), st.integers(0, 4), st.integers(0, 2))
def test_smallest_repeat_class_matches_brute_force(n, j, ell):
    if j and j + ell < 1:
        return
    got = [p.parts for p in po.enumerate_partitions(n, ConstraintSpec.smallest_repeats(j, ell))]
    assert got == brute(n, lambda p: is_psmall(p, j, ell))


def test_generated_partitions_satisfy_predicate():
    specs = [ConstraintSpec.rogers_ramanujan(1), ConstraintSpec.nonrascoe(2), ConstraintSpec.rascoe(0),
             ConstraintSpec.smallest_repeats(2, 1), ConstraintSpec.largest_repeats(1),
             ConstraintSpec.unrestricted_rascoe(), ConstraintSpec.unrestricted_nonrascoe()]
    for spec in specs:
        for n in range(25):
            for p in po.iter_partitions(n, spec):
                assert po.satisfies(p, spec)


def test_lexicographic_decreasing_order():
    parts = [p.parts for p in po.enumerate_partitions(20, ConstraintSpec.distinct())]
    assert parts == sorted(parts, reverse=True)


# -- structural identities -----------------------------------------------------------------

@pytest.mark.parametrize("ell", [0, 1, 2])
def test_largest_repeat_by_parts_is_shifted_rank(ell):
    for n in range(1, 41):
        by_parts = po.count_by_parts(n, ell)
        ranks = po.rank_counts(n, ell)
        assert by_parts == {m + 1: c for m, c in ranks.items()}


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_alternating_smallest_part_sum_is_b(ell):
    for n in range(41):
        alt = sum((-1) ** j * c for j, c in po.count_by_smallest(n, ell).items())
        assert alt == po.b_count(n, ell)


def _conjugate_shape(q, j):
    """Largest part k repeated exactly j times, no part strictly between k-j and k,
    and every value 1..k-j present."""
    if not q:
        return j == 0
    k = q[0]
    return (q.count(k) == j and all(x <= k - j for x in q[j:])
            and set(range(1, k - j + 1)) <= set(q))


def test_conjugation_of_smallest_repeat_class():
    for n in range(1, 31):
        for j in range(1, n + 1):
            if j * j > n:
                break
            src = po.enumerate_partitions(n, ConstraintSpec.smallest_repeats(j, 0))
            images = sorted(p.conjugate().parts for p in src)
            assert images == sorted(brute(n, lambda q: _conjugate_shape(q, j)))


def test_complementary_unrestricted_classes():
    for n in range(41):
        assert po.c_count(n) + po.e_count(n) == len(all_partitions(n))


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_rr_to_largest_repeat_bijection(ell):
    for n in range(1, 26):
        rr = po.enumerate_partitions(n, ConstraintSpec.rogers_ramanujan(ell))
        images = [po.rr_to_largest_repeat(p, ell) for p in rr]
        assert sorted(images, key=lambda p: p.parts) == sorted(
            po.enumerate_partitions(n, ConstraintSpec.largest_repeats(ell)), key=lambda p: p.parts)
        for p, q in zip(rr, images):
            assert q.num_parts == p.rank + 1


def test_beck_statistic_small_values():
    # oracle: direct filter over all partitions of 2n+2
    for n in range(8):
        expect = sum(len(set(p)) for p in all_partitions(2 * n + 2) if rank(p) == n + 1)
        assert po.beck_statistic(n) == expect
        assert expect == po.e_count(n)


def test_rank_counts_match_brute_force():
    for n in range(1, 30):
        assert po.rank_counts(n, 1) == dict(sorted(Counter(rank(p) for p in brute(n, lambda p: is_rr(p, 1))).items()))


# -- guards and constraint validation -----------------------------------------------------------

def test_weight_guard():
    with pytest.raises(OracleGuardError):
        po.enumerate_partitions(121, ConstraintSpec.rogers_ramanujan())
    assert po.count(121, ConstraintSpec.rogers_ramanujan(), limit=121) > 0


def test_rr_enumeration_at_the_guard_is_fast():
    assert po.count(120, ConstraintSpec.rogers_ramanujan()) > 0


def test_invalid_specs():
    with pytest.raises(ValueError):
        ConstraintSpec(min_gap=3)
    with pytest.raises(ValueError):
        ConstraintSpec(count_shift=1)
    with pytest.raises(ValueError):
        ConstraintSpec(smallest_repeat=0, smallest_part=1, min_gap=1)
    with pytest.raises(ValueError):
        po.enumerate_partitions(-1, ConstraintSpec.distinct())
