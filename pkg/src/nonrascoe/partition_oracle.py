"""Brute-force enumerators for the restricted partition classes.

These are the independent ground truth that the closed-form generating
functions are checked against. Enumeration is recursive descent with
part-ceiling pruning, producing partitions in lexicographically decreasing
order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, fields
from typing import Iterator

DEFAULT_WEIGHT_LIMIT = 120


class OracleGuardError(ValueError):
    """Raised when a weight exceeds the exhaustive-search guard."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.parts
        if any(x < 1 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    @property
    def rank(self) -> int:
        # the empty partition gets the conventional rank 0
        return self.largest - self.num_parts

    @property
    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    @property
    def distinct_part_count(self) -> int:
        return len(set(self.parts))

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def conjugate(self) -> Partition:
        return Partition(tuple(sum(1 for x in self.parts if x > i) for i in range(self.largest)))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "()"


@dataclass(frozen=True)
class ConstraintSpec:
    """Selects one partition class.

    min_gap: 0 unrestricted, 1 distinct, 2 Rogers-Ramanujan.
    parts_above: every part exceeds this value.
    count_shift / count_is_part: "(number of parts + shift) is / is not a part".
    smallest_repeat: smallest part j repeats exactly j + smallest_repeat times,
        other parts distinct (requires smallest_part, j = 0 meaning distinct parts).
    largest_repeat: largest part n repeats at least n + largest_repeat times.
    num_parts: restrict to exactly this many parts.
    """

    min_gap: int = 0
    parts_above: int = 0
    count_shift: int | None = None
    count_is_part: bool | None = None
    smallest_repeat: int | None = None
    smallest_part: int | None = None
    largest_repeat: int | None = None
    num_parts: int | None = None

    def __post_init__(self):
        if self.min_gap not in (0, 1, 2):
            raise ValueError("min_gap must be 0, 1 or 2")
        if self.parts_above < 0:
            raise ValueError("parts_above must be >= 0")
        if (self.count_shift is None) != (self.count_is_part is None):
            raise ValueError("count_shift and count_is_part go together")
        if self.smallest_repeat is not None:
            if self.smallest_part is None or self.smallest_part < 0:
                raise ValueError("smallest_repeat needs smallest_part >= 0")
            if self.min_gap or self.parts_above or self.largest_repeat is not None or self.count_shift is not None:
                raise ValueError("smallest_repeat cannot be combined with other constraints")
            if self.smallest_part > 0 and self.smallest_part + self.smallest_repeat < 1:
                raise ValueError("smallest part must repeat at least once")
        elif self.smallest_part is not None:
            raise ValueError("smallest_part only applies with smallest_repeat")
        if self.largest_repeat is not None:
            if self.min_gap or self.parts_above or self.count_shift is not None:
                raise ValueError("largest_repeat cannot be combined with gap/part constraints")

    # named classes ------------------------------------------------------
    @classmethod
    def unrestricted(cls) -> ConstraintSpec:
        return cls()

    @classmethod
    def distinct(cls) -> ConstraintSpec:
        return cls(min_gap=1)

    @classmethod
    def rogers_ramanujan(cls, ell: int = 0) -> ConstraintSpec:
        return cls(min_gap=2, parts_above=ell)

    @classmethod
    def rascoe(cls, ell: int = 0) -> ConstraintSpec:
        return cls(min_gap=1, count_shift=ell, count_is_part=True)

    @classmethod
    def nonrascoe(cls, ell: int = 0) -> ConstraintSpec:
        return cls(min_gap=1, count_shift=ell, count_is_part=False)

    @classmethod
    def unrestricted_rascoe(cls) -> ConstraintSpec:
        return cls(count_shift=0, count_is_part=True)

    @classmethod
    def unrestricted_nonrascoe(cls) -> ConstraintSpec:
        return cls(count_shift=0, count_is_part=False)

    @classmethod
    def smallest_repeats(cls, j: int, ell: int = 0) -> ConstraintSpec:
        return cls(smallest_repeat=ell, smallest_part=j)

    @classmethod
    def largest_repeats(cls, ell: int = 0, num_parts: int | None = None) -> ConstraintSpec:
        return cls(largest_repeat=ell, num_parts=num_parts)

    def describe(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) not in (None, 0)}


def satisfies(p: Partition, spec: ConstraintSpec) -> bool:
    """Independent predicate check, written directly from the class definitions."""
    parts = p.parts
    if spec.num_parts is not None and len(parts) != spec.num_parts:
        return False
    if spec.smallest_repeat is not None:
        j = spec.smallest_part
        if j == 0:
            return p.is_distinct
        if not parts or parts[-1] != j or p.multiplicity(j) != j + spec.smallest_repeat:
            return False
        rest = [x for x in parts if x != j]
        return len(set(rest)) == len(rest)
    if spec.largest_repeat is not None:
        if not parts:
            return True
        return p.multiplicity(parts[0]) >= parts[0] + spec.largest_repeat
    for a, b in zip(parts, parts[1:]):
        if a - b < spec.min_gap:
            return False
    if any(x <= spec.parts_above for x in parts):
        return False
    if spec.count_shift is not None:
        hit = (len(parts) + spec.count_shift) in parts
        if hit != spec.count_is_part:
            return False
    return True


# -- generators --------------------------------------------------------------

def _max_sum(top: int, gap: int, floor: int) -> int | None:
    """Largest total from parts <= top, > floor, consecutive gap >= gap (None: unbounded)."""
    if gap == 0:
        return None
    if top <= floor:
        return 0
    count = (top - floor - 1) // gap + 1
    return count * top - gap * count * (count - 1) // 2


def _descend(n: int, top: int, gap: int, floor: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(prefix)
        return
    hi = min(n, top)
    for part in range(hi, floor, -1):
        rest = n - part
        if rest:
            nxt = part - gap if gap else part
            if nxt <= floor:
                continue
            cap = _max_sum(nxt, gap, floor)
            if cap is not None and cap < rest:
                # parts only shrink from here
                break
        prefix.append(part)
        yield from _descend(rest, part - gap if gap else part, gap, floor, prefix)
        prefix.pop()


def _gap_partitions(n: int, gap: int, floor: int = 0, top: int | None = None) -> Iterator[tuple[int, ...]]:
    yield from _descend(n, n if top is None else top, gap, floor, [])


def _smallest_repeat_partitions(n: int, j: int, ell: int) -> Iterator[tuple[int, ...]]:
    if j == 0:
        yield from _gap_partitions(n, 1)
        return
    reps = j + ell
    rest = n - j * reps
    if rest < 0:
        return
    tail = (j,) * reps
    for head in _gap_partitions(rest, 1, floor=j):
        yield head + tail


def _largest_repeat_partitions(n: int, ell: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for big in range(n, 0, -1):
        need = big + ell
        if need < 1:
            need = 1
        if big * need > n:
            continue
        for reps in range(n // big, need - 1, -1):
            rest = n - big * reps
            for tail in _gap_partitions(rest, 0, top=big - 1):
                yield (big,) * reps + tail


def _check_guard(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("weight must be >= 0")
    if n > limit:
        raise OracleGuardError(
            f"weight {n} exceeds the exhaustive-search guard {limit}; "
            "use the series-based counts (genfun) or raise the limit explicitly"
        )


def iter_partitions(n: int, spec: ConstraintSpec, limit: int = DEFAULT_WEIGHT_LIMIT) -> Iterator[Partition]:
    _check_guard(n, limit)
    if spec.smallest_repeat is not None:
        raw = _smallest_repeat_partitions(n, spec.smallest_part, spec.smallest_repeat)
    elif spec.largest_repeat is not None:
        raw = _largest_repeat_partitions(n, spec.largest_repeat)
    else:
        raw = _gap_partitions(n, spec.min_gap, floor=spec.parts_above)
    for parts in raw:
        if spec.num_parts is not None and len(parts) != spec.num_parts:
            continue
        if spec.count_shift is not None:
            if ((len(parts) + spec.count_shift) in parts) != spec.count_is_part:
                continue
        yield Partition(parts)


def enumerate_partitions(n: int, spec: ConstraintSpec, limit: int = DEFAULT_WEIGHT_LIMIT) -> list[Partition]:
    """All partitions of n in the class, lexicographically decreasing."""
    return list(iter_partitions(n, spec, limit))


def count(n: int, spec: ConstraintSpec, limit: int = DEFAULT_WEIGHT_LIMIT) -> int:
    return sum(1 for _ in iter_partitions(n, spec, limit))


def rank_counts(n: int, ell: int = 0, limit: int = DEFAULT_WEIGHT_LIMIT) -> dict[int, int]:
    """R_ell(m, n): generalized Rogers-Ramanujan partitions of n by rank.

    At n = 0 the empty partition is reported with its conventional rank 0.
    """
    return dict(sorted(Counter(p.rank for p in iter_partitions(n, ConstraintSpec.rogers_ramanujan(ell), limit)).items()))


def count_by_smallest(n: int, ell: int = 0, limit: int = DEFAULT_WEIGHT_LIMIT) -> dict[int, int]:
    """{j: P_ell(j, n)} for every j with a nonzero count."""
    _check_guard(n, limit)
    out = {}
    for j in range(0, n + 1):
        if j and j * (j + ell) > n:
            break
        c = count(n, ConstraintSpec.smallest_repeats(j, ell), limit)
        if c:
            out[j] = c
    return out


def count_by_parts(n: int, ell: int = 0, limit: int = DEFAULT_WEIGHT_LIMIT) -> dict[int, int]:
    """{m: L_ell(m, n)}: largest part n' repeating at least n' + ell times, by number of parts."""
    return dict(sorted(Counter(p.num_parts for p in iter_partitions(n, ConstraintSpec.largest_repeats(ell), limit)).items()))


# -- named counting functions -------------------------------------------------

def a_count(n: int, ell: int = 0) -> int:
    return count(n, ConstraintSpec.rascoe(ell))


def b_count(n: int, ell: int = 0) -> int:
    return count(n, ConstraintSpec.nonrascoe(ell))


def p_small(j: int, n: int, ell: int = 0) -> int:
    return count(n, ConstraintSpec.smallest_repeats(j, ell))


def c_count(n: int) -> int:
    return count(n, ConstraintSpec.unrestricted_rascoe())


def e_count(n: int) -> int:
    return count(n, ConstraintSpec.unrestricted_nonrascoe())


def beck_statistic(n: int, limit: int = DEFAULT_WEIGHT_LIMIT) -> int:
    """Total number of distinct part sizes over partitions of 2n+2 with rank n+1."""
    return sum(
        p.distinct_part_count
        for p in iter_partitions(2 * n + 2, ConstraintSpec.unrestricted(), limit)
        if p.rank == n + 1
    )


def rr_to_largest_repeat(p: Partition, ell: int = 0) -> Partition:
    """Bijection from generalized RR partitions to the largest-part-repeats class.

    Strips the staircase ell+1, ell+3, ..., ell+2k-1 (k = number of parts) and
    rebuilds the partition as a k x (k+ell) block plus the conjugate of the
    remainder. The number of parts of the image is rank(p) + 1.
    """
    k = p.num_parts
    if k == 0:
        return Partition(())
    rem = [x - (ell + 2 * (k - 1 - i) + 1) for i, x in enumerate(p.parts)]
    rem = Partition(tuple(x for x in rem if x > 0))
    return Partition((k,) * (k + ell) + rem.conjugate().parts)
