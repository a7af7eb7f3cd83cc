import random

import pytest

from spacesweep.budget import BitBudget
from spacesweep.closest import (
    closest_in_core,
    closest_pair,
    direct,
    is_candidate,
    stretched_batch_size,
    uses_direct,
    vertical_pass,
)
from spacesweep.common_utils.arithmetic import lg
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import Algorithm, Axis, TapeKind
from spacesweep.dataclasses import PairResult
from spacesweep.grid import StripGrid, iter_separators
from spacesweep.oracle import bf_closest
from spacesweep.tape import InputTape


def points(*records) -> InputTape:
    return InputTape(TapeKind.POINTS, records)


def test_small_instances():
    assert closest_pair(points((0, 0), (3, 4), (10, 10)), 64) == PairResult(25, 0, 1)

    # Zero distance
    assert closest_pair(points((5, 5), (5, 5), (9, 9)), 64) == PairResult(0, 0, 1)

    assert str(PairResult(25, 0, 1)) == "0 1 25"


def test_too_few_points():
    with pytest.raises(UsageError):
        closest_pair(points((1, 1)), 64)

    with pytest.raises(UsageError):
        closest_pair(InputTape(TapeKind.SEGMENTS, [(0, 0, 1, 1), (2, 2, 3, 3)]), 64)


def test_ties_go_to_the_smallest_pair():
    # Every neighbour pair is at distance 1
    tape = points((3, 0), (0, 0), (2, 0), (1, 0))

    assert closest_pair(tape, 4) == PairResult(1, 0, 2)
    assert closest_pair(tape, 1000) == PairResult(1, 0, 2)


def test_vertical_line():
    ys = [0, 7, 3, 20, 11, 12, 30, 41]
    tape = InputTape(TapeKind.POINTS, [(5, y) for y in ys])

    # All points share one strip, the answer is the smallest gap
    assert closest_pair(tape, 10**4) == PairResult(1, 4, 5)
    assert closest_pair(tape, 3) == PairResult(1, 4, 5)


def test_pair_across_a_separator():
    # Strips of two points each, the closest pair straddles the separator at x = 10
    tape = points((0, 0), (2, 100), (4, 0), (9, 50), (11, 50), (20, 0))
    n = len(tape)
    budget = BitBudget.for_run(Algorithm.CLOSEST, n, 2 * lg(n))

    assert direct(tape, 2 * lg(n), budget) == PairResult(4, 3, 4)
    assert budget.live_bits == 0


def test_is_candidate():
    grid = StripGrid(Axis.X, [10])

    assert is_candidate(8, grid, 4)
    assert is_candidate(12, grid, 4)
    assert not is_candidate(7, grid, 4)
    # Without a distance yet every point is a candidate
    assert is_candidate(-100, grid, None)


def test_regimes():
    n = 1024
    assert uses_direct(n, 320)
    assert not uses_direct(n, 319)

    # We start from 100 // 16 = 6, a pair of batches of 6 is still too large for s = 10
    assert stretched_batch_size(n, 10) == 3
    assert uses_direct(2 * 3, 10)
    # Never fewer than two records per batch
    assert stretched_batch_size(n, 1) == 2


def test_in_core():
    budget = BitBudget(10**4)
    pts = [(0, 0, 3), (1, 1, 0), (5, 5, 1), (1, 0, 2)]

    assert closest_in_core(pts, budget, 8) == PairResult(1, 0, 2)
    assert closest_in_core(pts[:1], budget, 8) is None
    assert budget.live_bits == 0


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("dup_rate", [0.0, 0.5])
def test_matches_oracle(points_tape, s_grid, seed, dup_rate):
    n = 120
    tape = points_tape(n, seed=seed, dup_rate=dup_rate, degenerate=seed % 2 == 1)
    expected = bf_closest(tape)

    for s in s_grid(n):
        budget = BitBudget.for_run(Algorithm.CLOSEST, n, s)
        assert closest_pair(tape, s, budget) == expected
        assert budget.peak_bits <= budget.capacity_bits


def test_zero_distance_tie_across_strips():
    # Two duplicate pairs in different strips, the one with the smaller indices wins
    tape = points((100, 0), (0, 0), (100, 0), (0, 0), (50, 7), (60, 9))

    assert bf_closest(tape) == PairResult(0, 0, 2)
    assert closest_pair(tape, 12) == PairResult(0, 0, 2)
    for s in [lg(6), 2 * lg(6), 100]:
        assert closest_pair(tape, s) == PairResult(0, 0, 2)


@pytest.mark.parametrize("seed", range(150))
def test_crowded_matches_oracle(points_tape, s_grid, seed):
    n = 40
    tape = points_tape(n, seed=seed, dup_rate=0.3 if seed % 3 == 0 else 0.0, degenerate=seed % 2 == 1, limit=4)
    expected = bf_closest(tape)

    for s in s_grid(n):
        budget = BitBudget.for_run(Algorithm.CLOSEST, n, s)
        assert closest_pair(tape, s, budget) == expected
        assert budget.live_bits == 0


def strip_grid(tape: InputTape, capacity: int) -> StripGrid:
    xs = sorted(tape.get(i)[0] for i in range(len(tape)))
    return StripGrid(Axis.X, list(iter_separators(xs, capacity)), per_strip_capacity=capacity)


def spread_points(n: int, seed: int, limit: int) -> InputTape:
    """
    Distinct points, so the vertical pass finds a positive distance
    """
    rng = random.Random(seed)
    spots = set()
    while len(spots) < n:
        spots.add((rng.randint(-limit, limit), rng.randint(-limit, limit)))
    return points(*rng.sample(sorted(spots), n))


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("capacity", [2, 5, 16])
def test_points_far_from_separators_have_no_close_neighbour(seed, capacity):
    tape = spread_points(80, seed, limit=40)
    records = [tape.get(i) for i in range(len(tape))]
    grid = strip_grid(tape, capacity)

    delta = vertical_pass(tape, 10**4, BitBudget(10**6), grid)
    assert delta is not None and delta.dist2 > 0

    for i, (x, y) in enumerate(records):
        if is_candidate(x, grid, delta.dist2):
            continue
        for j, (qx, qy) in enumerate(records):
            if j == i:
                continue
            dist2 = (x - qx) ** 2 + (y - qy) ** 2
            # Within a strip no pair beats delta, across a separator the gap alone is wider
            assert dist2 >= delta.dist2
            if grid.locate(qx) != grid.locate(x):
                assert dist2 > delta.dist2


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("capacity", [2, 5, 16])
def test_close_candidates_lie_in_two_groups(seed, capacity):
    # Candidates in y order, cut into groups of 8 m, a candidate's partners within delta above it stay in its group
    # or the next one
    tape = spread_points(120, seed, limit=50)
    records = [tape.get(i) for i in range(len(tape))]
    grid = strip_grid(tape, capacity)

    delta = vertical_pass(tape, 10**4, BitBudget(10**6), grid)
    assert delta is not None and delta.dist2 > 0

    candidates = sorted(
        (y, idx, x) for idx, (x, y) in enumerate(records) if is_candidate(x, grid, delta.dist2)
    )
    group_size = 8 * grid.m

    for position, (y, _, x) in enumerate(candidates):
        for later, (qy, _, qx) in enumerate(candidates[position + 1 :], start=position + 1):
            if (x - qx) ** 2 + (y - qy) ** 2 <= delta.dist2:
                assert later // group_size <= position // group_size + 1
