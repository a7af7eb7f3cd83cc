import random

from spacesweep.budget import BitBudget
from spacesweep.common_utils.fields import Axis, StripRelation, TapeKind
from spacesweep.generators import random_points
from spacesweep.grid import (
    StripGrid,
    build,
    build_from_keys,
    iter_separators,
    iter_strips,
    separator_between,
    truncate_to_spanned,
)
from spacesweep.navpile import NavPile, key_x
from spacesweep.tape import InputTape


def test_separator_between():
    assert separator_between(3, 4) == 4
    assert separator_between(0, 10) == 5
    assert separator_between(-3, 0) == -2


def test_locate_and_bounds():
    grid = StripGrid(Axis.X, [0, 10, 20])

    assert grid.m == 4
    assert [grid.locate(k) for k in (-5, 0, 9, 10, 20, 99)] == [0, 1, 1, 2, 3, 3]
    assert grid.bounds(0) == (None, 0)
    assert grid.bounds(2) == (10, 20)
    assert grid.bounds(3) == (20, None)


def test_span_range():
    grid = StripGrid(Axis.X, [0, 10, 20])

    # Closed strips inside [0, 20]
    assert grid.span_range(0, 20) == (1, 2)
    # Strict spans hold no end of the interval
    assert grid.span_range(0, 20, strict=True) == (2, 2)

    assert grid.span_range(1, 9) is None
    # Infinite strips are never spanned
    assert grid.span_range(-100, 100) == (1, 2)


def test_classify():
    grid = StripGrid(Axis.Y, [0, 10, 20])

    assert grid.classify(5, 25, 1) == StripRelation.LOCAL
    assert grid.classify(5, 25, 2) == StripRelation.SPANS
    assert grid.classify(5, 25, 3) == StripRelation.LOCAL
    assert grid.classify(5, 25, 0) == StripRelation.DISJOINT
    assert grid.is_local(-5, 25, 0)


def test_cuts_every_capacity_keys():
    grid = build_from_keys([1, 2, 3, 4, 5, 6, 7], 3, BitBudget(100), Axis.X, universe=7)

    assert grid.separators == [4, 7]

    # Gaps put the separator at the midpoint
    assert list(iter_separators([0, 10, 20, 30], 2)) == [15]


def test_runs_are_never_split():
    keys = [1, 2, 2, 2, 3]

    assert list(iter_separators(keys, 2)) == [3]

    # A long run gets a strip of its own
    assert list(iter_separators(keys, 2, isolate_runs=True)) == [2, 3]
    assert list(iter_strips(keys, 2, isolate_runs=True)) == [(None, 2), (2, 3), (3, None)]


def test_leading_run_is_isolated():
    # The first run reaches capacity and gets [5, 6), the strip below it is empty
    assert list(iter_separators([5, 5, 5, 7], 2, isolate_runs=True)) == [5, 6]
    assert list(iter_strips([5, 5, 5, 7], 2, isolate_runs=True)) == [(None, 5), (5, 6), (6, None)]

    # Also right after another isolated run, across a gap
    assert list(iter_separators([1, 1, 4, 4, 9], 2, isolate_runs=True)) == [1, 2, 4, 5]

    # Adjacent isolated runs share the separator between them
    assert list(iter_separators([1, 1, 2, 2], 2, isolate_runs=True)) == [1, 2]
    assert list(iter_strips([1, 1, 2, 2], 2, isolate_runs=True)) == [(None, 1), (1, 2), (2, None)]


def test_isolated_runs_own_unit_strips():
    keys = sorted(random.Random(3).randint(0, 6) for _ in range(60))

    for capacity in [1, 2, 5]:
        strips = list(iter_strips(keys, capacity, isolate_runs=True))
        # The largest run keeps the open strip above it
        if keys.count(max(keys)) >= capacity:
            assert strips[-1] == (max(keys), None)
        for key in set(keys) - {max(keys)}:
            if keys.count(key) >= capacity:
                assert (key, key + 1) in strips


def test_iter_strips_single_strip():
    assert list(iter_strips([1, 2, 3], 10)) == [(None, None)]
    assert list(iter_strips([], 10)) == [(None, None)]


def test_build_from_pile():
    n = 200
    records = random_points(n, seed=4, dup_rate=0.2)
    tape = InputTape(TapeKind.POINTS, records)
    budget = BitBudget(10**5)

    with NavPile(tape, key_x, budget, 64) as pile:
        grid = build(pile, 16, budget, Axis.X)

    # Each strip holds at most the capacity plus one run of equal keys
    counts = [0] * grid.m
    for x, _ in records:
        counts[grid.locate(x)] += 1
    longest_run = max(sum(1 for r in records if r[0] == x) for x, _ in records)
    assert all(c <= 16 + longest_run for c in counts)
    assert sum(counts) == n

    # The lazy strips agree with the stored grid
    keys = sorted(x for x, _ in records)
    assert list(iter_strips(keys, 16)) == [grid.bounds(i) for i in range(grid.m)]

    # Separators are charged one word each
    assert budget.live_bits == len(grid.separators) * 8
    grid.free()
    assert budget.live_bits == 0


def test_truncate_to_spanned():
    grid = StripGrid(Axis.X, [0, 10, 20])

    assert truncate_to_spanned((11, 5, 19, 5), grid) is None
    assert truncate_to_spanned((-5, 5, 25, 5), grid) == (0, 5, 20, 5)
    # Separator to separator stays as it is
    assert truncate_to_spanned((0, 5, 20, 5), grid) == (0, 5, 20, 5)
    # Strictly, the strip starting at 0 holds an endpoint and is not spanned
    assert truncate_to_spanned((0, 5, 20, 5), grid, strict=True) == (10, 5, 20, 5)
    assert truncate_to_spanned((5, 5, 15, 5), grid, strict=True) is None

    # Verticals are cut with a y grid
    assert truncate_to_spanned((3, 25, 3, -5), grid) == (3, 0, 3, 20)
