import pytest

from spacesweep.bench import default_s_grid
from spacesweep.common_utils.constants import GEN_COORD_LIMIT
from spacesweep.common_utils.fields import TapeKind
from spacesweep.generators import random_axis_segments, random_points, random_rectangles, random_segments
from spacesweep.tape import InputTape


@pytest.fixture
def s_grid():
    """
    Log-spaced space bounds from lg n to n lg n
    """
    return default_s_grid


@pytest.fixture
def points_tape():
    def make(
        n: int, seed: int = 0, dup_rate: float = 0.0, degenerate: bool = False, limit: int = GEN_COORD_LIMIT
    ) -> InputTape:
        return InputTape(TapeKind.POINTS, random_points(n, seed, dup_rate, degenerate, limit))

    return make


@pytest.fixture
def segments_tape():
    def make(
        n: int, seed: int = 0, dup_rate: float = 0.0, degenerate: bool = False, limit: int = GEN_COORD_LIMIT
    ) -> InputTape:
        return InputTape(TapeKind.SEGMENTS, random_segments(n, seed, dup_rate, degenerate, limit))

    return make


@pytest.fixture
def axis_tape():
    def make(
        n: int, seed: int = 0, dup_rate: float = 0.0, degenerate: bool = False, limit: int = GEN_COORD_LIMIT
    ) -> InputTape:
        segments = random_axis_segments(n, seed, dup_rate, degenerate, limit)
        return InputTape(TapeKind.SEGMENTS, segments, axis_parallel=True)

    return make


@pytest.fixture
def rects_tape():
    def make(
        n: int,
        seed: int = 0,
        dup_rate: float = 0.0,
        degenerate: bool = False,
        sort: bool = False,
        limit: int = GEN_COORD_LIMIT,
    ) -> InputTape:
        return InputTape(TapeKind.RECTANGLES, random_rectangles(n, seed, dup_rate, degenerate, sort, limit))

    return make
