"""
One-dimensional plane partitions into half-open strips

Strip i is [sep[i-1], sep[i]) with sep[-1] = -inf and sep[m-1] = +inf.
"""
import itertools
import logging
from bisect import bisect_left, bisect_right
from typing import Iterable, Iterator, List, Optional, Tuple

from tabulate import tabulate

from spacesweep.budget import Allocation, BitBudget
from spacesweep.common_utils.arithmetic import lg
from spacesweep.common_utils.axis_segments import horizontal_extent, is_vertical, vertical_extent
from spacesweep.common_utils.fields import Axis, StripRelation
from spacesweep.navpile import NavPile, PileEntry


def separator_between(a: int, b: int) -> int:
    """
    A separator s with a < s <= b, the floored midpoint when there is room
    """
    assert a < b
    return (a + b) // 2 if b - a >= 2 else b


class StripGrid:
    axis: Axis
    separators: List[int]
    per_strip_capacity: int

    def __init__(
        self,
        axis: Axis,
        separators: Iterable[int] = (),
        per_strip_capacity: int = 0,
        budget: Optional[BitBudget] = None,
        word_bits: int = 1,
    ):
        self.axis = Axis(axis)
        self.separators = list(separators)
        self.per_strip_capacity = per_strip_capacity
        self._word_bits = word_bits
        self._allocation: Optional[Allocation] = (
            budget.alloc(len(self.separators) * word_bits, f"{self.axis} separators") if budget else None
        )

        assert all(a < b for a, b in zip(self.separators, self.separators[1:]))

    def _append(self, separator: int):
        assert not self.separators or self.separators[-1] < separator
        if self._allocation is not None:
            self._allocation.resize((len(self.separators) + 1) * self._word_bits)
        self.separators.append(separator)

    def free(self):
        if self._allocation is not None:
            self._allocation.free()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.free()

    def __repr__(self):
        return f"<StripGrid {self.axis} m={self.m}>"

    def __str__(self):
        rows = []
        for i in range(self.m):
            low, high = self.bounds(i)
            rows.append((i, "-inf" if low is None else low, "+inf" if high is None else high))
        return tabulate(rows, headers=["strip", "from", "to (excl.)"])

    @property
    def m(self) -> int:
        return len(self.separators) + 1

    def locate(self, key: int) -> int:
        """
        The strip i with sep[i-1] <= key < sep[i]
        """
        return bisect_right(self.separators, key)

    def bounds(self, i: int) -> Tuple[Optional[int], Optional[int]]:
        """
        (sep[i-1], sep[i]), None on an infinite side
        """
        assert 0 <= i < self.m
        low = self.separators[i - 1] if i > 0 else None
        high = self.separators[i] if i < self.m - 1 else None
        return low, high

    def span_range(self, lo: int, hi: int, strict: bool = False) -> Optional[Tuple[int, int]]:
        """
        First and last strip whose closed interval [lo, hi] contains, None when there is none

        Infinite strips are never spanned. With strict, a spanned strip must also hold no end of [lo, hi],
        so these are exactly the strips strictly between locate(lo) and locate(hi).
        """
        assert lo <= hi
        if strict:
            first = bisect_right(self.separators, lo) + 1
        else:
            first = bisect_left(self.separators, lo) + 1
        last = bisect_right(self.separators, hi) - 1

        if first > last:
            return None
        return first, last

    def classify(self, lo: int, hi: int, i: int) -> StripRelation:
        """
        LOCAL if an end of [lo, hi] lies in strip i, else SPANS if [lo, hi] covers its closed interval
        """
        if self.locate(lo) == i or self.locate(hi) == i:
            return StripRelation.LOCAL

        spanned = self.span_range(lo, hi)
        if spanned and spanned[0] <= i <= spanned[1]:
            return StripRelation.SPANS

        return StripRelation.DISJOINT

    def is_local(self, lo: int, hi: int, i: int) -> bool:
        return self.locate(lo) == i or self.locate(hi) == i


def build(
    pile: NavPile,
    capacity: int,
    budget: BitBudget,
    axis: Axis,
    isolate_runs: bool = False,
) -> StripGrid:
    """
    Streams the pile once and cuts a strip every `capacity` keys

    A run of equal keys is never split, the strip overflows instead. With isolate_runs, a run of at least
    `capacity` keys gets a strip of its own that holds no other key.
    """
    entries: Iterable[PileEntry] = pile
    return build_from_keys(
        (entry.key for entry in entries), capacity, budget, axis, pile.n, isolate_runs=isolate_runs
    )


def build_from_keys(
    keys: Iterable[int],
    capacity: int,
    budget: BitBudget,
    axis: Axis,
    universe: int,
    isolate_runs: bool = False,
) -> StripGrid:
    """
    build over any nondecreasing key stream, separators are words indexing `universe` records
    """
    grid = StripGrid(axis, per_strip_capacity=capacity, budget=budget, word_bits=lg(max(universe, 1)))
    for separator in iter_separators(keys, capacity, isolate_runs):
        grid._append(separator)

    logging.debug(f"Built {grid!r} with capacity {capacity}")
    return grid


def iter_separators(keys: Iterable[int], capacity: int, isolate_runs: bool = False) -> Iterator[int]:
    """
    The separators of build, each yielded as soon as the first key past it is read
    """
    assert capacity >= 1

    count = 0
    last: Optional[int] = None
    last_separator: Optional[int] = None
    # Separator closing an isolated run, placed once a larger key shows up
    pending: Optional[int] = None

    for key, run in itertools.groupby(keys):
        length = sum(1 for _ in run)

        if pending is not None:
            yield pending
            last_separator, pending, count = pending, None, 0

        if isolate_runs and length >= capacity:
            # The run owns [key, key + 1), also when it opens the stream or follows a gap
            if key != last_separator:
                yield key
                last_separator = key
            pending, count = key + 1, length
        else:
            if count >= capacity and last is not None:
                last_separator = separator_between(last, key)
                yield last_separator
                count = 0
            count += length

        last = key


def iter_strips(
    keys: Iterable[int], capacity: int, isolate_runs: bool = False
) -> Iterator[Tuple[Optional[int], Optional[int]]]:
    """
    Bounds of the strips build would make, in order, holding only the current separator
    """
    low: Optional[int] = None
    for separator in iter_separators(keys, capacity, isolate_runs):
        yield low, separator
        low = separator
    yield low, None


def truncate_to_spanned(seg, grid: StripGrid, strict: bool = False) -> Optional[Tuple[int, int, int, int]]:
    """
    The segment clipped to the strips of grid it fully spans, None when it spans none

    Horizontals are clipped with an x grid and verticals with a y grid. With strict, strips holding an
    endpoint are not spanned.
    """
    if is_vertical(seg):
        ylo, yhi, x = vertical_extent(seg)
        spanned = grid.span_range(ylo, yhi, strict)
        if spanned is None:
            return None
        return x, grid.separators[spanned[0] - 1], x, grid.separators[spanned[1]]

    xlo, xhi, y = horizontal_extent(seg)
    spanned = grid.span_range(xlo, xhi, strict)
    if spanned is None:
        return None
    return grid.separators[spanned[0] - 1], y, grid.separators[spanned[1]], y
