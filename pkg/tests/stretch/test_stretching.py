import itertools

import pytest

from spacesweep.common_utils.fields import CombineMode, TapeKind
from spacesweep.stretch import BatchSizeError, batch_pairs, materialize, plan, population, run_disjoint, run_min
from spacesweep.tape import InputTape


def test_plan():
    batch_plan = plan(10, 4)

    assert batch_plan.batches == [range(0, 4), range(4, 8), range(8, 10)]
    assert len(batch_plan) == 3
    assert list(batch_pairs(batch_plan)) == [(0, 1), (0, 2), (1, 2)]

    with pytest.raises(BatchSizeError):
        plan(10, 0)
    with pytest.raises(BatchSizeError):
        plan(10, 11)


def test_run_min_covers_every_pair():
    values = [7, 3, 9, 1, 4, 8, 2]
    batch_plan = plan(len(values), 2)

    # We solve each subproblem by its closest pair of values
    def solve(ranges):
        indices = [i for r in ranges for i in r]
        return min(
            ((abs(values[a] - values[b]), a, b) for a, b in itertools.combinations(indices, 2)), default=None
        )

    expected = min((abs(values[a] - values[b]), a, b) for a, b in itertools.combinations(range(len(values)), 2))
    assert run_min(batch_plan, solve) == expected


def test_run_min_single_batch():
    batch_plan = plan(3, 3)

    assert run_min(batch_plan, lambda ranges: ranges) == [range(0, 3)]

    # A subproblem without an answer is skipped
    assert run_min(plan(4, 2), lambda ranges: None) is None


def test_run_disjoint_reports_each_pair_once():
    values = [1, 2, 1, 3, 2, 1, 3]
    batch_plan = plan(len(values), 3, CombineMode.DISJOINT)

    def within(batch):
        return [(a, b) for a, b in itertools.combinations(batch, 2) if values[a] == values[b]]

    def cross(first, second):
        return [(a, b) for a in first for b in second if values[a] == values[b]]

    reported = [pair for result in run_disjoint(batch_plan, within, cross) for pair in result]

    expected = [(a, b) for a, b in itertools.combinations(range(len(values)), 2) if values[a] == values[b]]
    assert sorted(reported) == expected


def test_population_and_materialize():
    tape = InputTape(TapeKind.POINTS, [(i, i % 3) for i in range(12)])

    def member(idx, record):
        return record[1] == 0

    assert population(tape, member) == 4

    # Selected records have ranks 0 to 3, we keep ranks 1 and 3
    assert list(materialize(tape, member, [range(1, 2), range(3, 4)])) == [(3, (3, 0)), (9, (9, 0))]
