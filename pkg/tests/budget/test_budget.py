import pytest

from spacesweep.budget import BitBudget, BitVector, BudgetExceeded, RankSelect, words
from spacesweep.common_utils.constants import BUDGET_CONSTANTS, SUPERBLOCK_BITS
from spacesweep.common_utils.errors import NotFound, UsageError
from spacesweep.common_utils.fields import Algorithm


def test_budget_constants():
    # Changing one of these changes every space guarantee
    assert BUDGET_CONSTANTS == {
        Algorithm.NAVPILE: 4,
        Algorithm.CLOSEST: 256,
        Algorithm.SEGX: 64,
        Algorithm.AXCOUNT: 256,
        Algorithm.AXENUM: 256,
        Algorithm.KLEE: 128,
    }


def test_for_run():
    assert BitBudget.for_run(Algorithm.SEGX, 1024, 100).capacity_bits == 64 * 100

    # s below lg n is lifted to lg n
    assert BitBudget.for_run(Algorithm.KLEE, 1024, 3).capacity_bits == 128 * 10

    # Empty inputs still get a budget
    assert BitBudget.for_run(Algorithm.CLOSEST, 0, 1).capacity_bits == 256


def test_alloc_and_peak():
    budget = BitBudget(100)

    with budget.alloc(60, "a"):
        with budget.alloc(40, "b") as b:
            assert budget.live_bits == 100

            b.resize(10)
            assert budget.live_bits == 70

        assert budget.live_bits == 60

    assert budget.live_bits == 0
    assert budget.peak_bits == 100


def test_exceeded():
    budget = BitBudget(100)
    allocation = budget.alloc(80, "a")

    with pytest.raises(BudgetExceeded):
        budget.alloc(21, "b")

    with pytest.raises(BudgetExceeded):
        allocation.resize(101)

    # A refused charge leaves nothing behind
    assert budget.live_bits == 80

    allocation.free()
    # Freeing twice is harmless
    allocation.free()
    assert budget.live_bits == 0


def test_scope_detects_leaks():
    budget = BitBudget(100)

    with budget.scope():
        with budget.alloc(50):
            pass

    with pytest.raises(AssertionError):
        with budget.scope():
            budget.alloc(10, "leaked")


def test_words():
    assert words(3, 1024) == 30
    assert words(1, 1) == 1


def test_bit_vector():
    budget = BitBudget(10**6)
    vector = BitVector.from_bits("0110010", budget)

    assert str(vector) == "0110010"
    assert vector[1] and not vector[0]

    vector.clear(1)
    vector.set(6)
    assert str(vector) == "0010011"

    with pytest.raises(UsageError):
        vector.set(7)

    # Storage is charged in whole words
    assert budget.live_bits == 64
    vector.free()
    assert budget.live_bits == 0


def test_rank_select_small():
    budget = BitBudget(10**6)
    vector = BitVector.from_bits("0110010", budget)
    index = RankSelect(vector, budget)

    assert [index.rank(i) for i in range(8)] == [0, 0, 1, 2, 2, 2, 3, 3]
    assert [index.select(j) for j in (1, 2, 3)] == [1, 2, 5]
    assert list(index) == [1, 2, 5]

    assert index.next_one(3) == 5
    assert index.next_one(6) is None
    assert index.next_one(7) is None

    with pytest.raises(NotFound):
        index.select(4)
    with pytest.raises(NotFound):
        index.select(0)


def test_rank_select_across_superblocks():
    budget = BitBudget(10**6)
    length = 3 * SUPERBLOCK_BITS + 17
    positions = list(range(5, length, 37)) + [length - 1]

    vector = BitVector(length, budget)
    for p in positions:
        vector.set(p)
    index = RankSelect(vector, budget)

    # We check select against the positions and rank against select
    for j, p in enumerate(positions, start=1):
        assert index.select(j) == p
        assert index.rank(p) == j - 1
        assert index.rank(p + 1) == j

    assert index.rank(length) == len(positions)
    assert list(index) == positions
    assert index.next_one(positions[3] + 1) == positions[4]
