import pytest

from spacesweep.budget import BitBudget
from spacesweep.common_utils.fields import Axis, TapeKind
from spacesweep.grid import StripGrid
from spacesweep.status import InvalidStatusInput, SweepStatus, build, spanning_member, truncated_vertical
from spacesweep.tape import InputTape

GRID_Y = StripGrid(Axis.Y, [0, 10, 20, 30])


def test_query_cell():
    budget = BitBudget(10**5)

    with SweepStatus(0, GRID_Y, [(7, 0, 20), (9, 20, 30), (12, 10, 30)], budget, 8) as status:
        assert list(status.query_cell(1)) == [7]
        assert list(status.query_cell(2)) == [7, 12]
        assert list(status.query_cell(3)) == [9, 12]

        # Infinite rows are never spanned
        assert list(status.query_cell(0)) == []
        assert list(status.query_cell(4)) == []

        assert status.locate_row(15) == 2

    assert budget.live_bits == 0


def test_empty_status():
    with SweepStatus(0, GRID_Y, [], BitBudget(10**4), 8) as status:
        assert all(list(status.query_cell(row)) == [] for row in range(GRID_Y.m))


def test_rejects_ends_off_separators():
    with pytest.raises(InvalidStatusInput):
        SweepStatus(0, GRID_Y, [(5, 3, 20)], BitBudget(10**4), 8)

    with pytest.raises(InvalidStatusInput):
        SweepStatus(0, GRID_Y, [(5, 20, 20)], BitBudget(10**4), 8)


def test_truncated_vertical():
    assert truncated_vertical(0, (5, -5, 5, 25), GRID_Y) == (0, 0, 20)
    # Ends in two neighbouring rows, nothing strictly spanned
    assert truncated_vertical(1, (7, 12, 7, 18), GRID_Y) is None
    assert truncated_vertical(2, (6, 35, 6, 10), GRID_Y) == (2, 20, 30)


def test_build_from_source():
    grid_x = StripGrid(Axis.X, [10])
    tape = InputTape(
        TapeKind.SEGMENTS,
        [(5, -5, 5, 25), (7, 12, 7, 18), (15, -5, 15, 25), (0, 15, 20, 15), (6, 10, 6, 35)],
        axis_parallel=True,
    )
    budget = BitBudget(10**5)

    member = spanning_member(grid_x, GRID_Y, 0)
    assert [idx for idx in range(len(tape)) if member(idx, tape.get(idx))] == [0, 4]

    with build(tape, grid_x, GRID_Y, 0, budget) as status:
        assert status.spanning_ids == [0, 4]
        assert list(status.query_cell(2)) == [0]
        assert list(status.query_cell(3)) == [4]

    # Only the second spanning vertical of the strip
    with build(tape, grid_x, GRID_Y, 0, budget, ranks=range(1, 2)) as status:
        assert status.spanning_ids == [4]

    with build(tape, grid_x, GRID_Y, 1, budget) as status:
        assert status.spanning_ids == [2]

    assert budget.live_bits == 0
