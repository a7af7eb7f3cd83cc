"""
In-core sweeps over horizontal and vertical segments

Horizontals are (xlo, xhi, y, idx), closed in x. Verticals are (ylo, yhi, x, idx), closed in y.
The sweep runs by x, at equal x horizontals open before verticals are handled and close after them.
"""
from bisect import bisect_left, bisect_right
from typing import Callable, List, Optional, Sequence, Tuple

from sortedcontainers import SortedList

from spacesweep.budget import BitBudget

Horizontal = Tuple[int, int, int, int]
Vertical = Tuple[int, int, int, int]

# Report gets (horizontal index, vertical index, x, y)
HVReport = Callable[[int, int, int, int], None]

OPEN, QUERY, CLOSE = range(3)

# The four fields of a held segment, plus one Fenwick or status word
WORDS_PER_SEGMENT = 5


class FenwickTree:
    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)

    def update(self, i: int, delta: int):
        """
        Add delta at position i, 1-indexed
        """
        while i <= self.n:
            self.tree[i] += delta
            i += i & -i

    def query(self, i: int) -> int:
        """
        Sum over positions 1..i
        """
        total = 0
        while i > 0:
            total += self.tree[i]
            i -= i & -i
        return total

    def range_query(self, left: int, right: int) -> int:
        return self.query(right) - self.query(left - 1) if left <= right else 0


def _events(horizontals: Sequence[Horizontal], verticals: Sequence[Vertical]) -> List[tuple]:
    events = []
    for h in horizontals:
        events.append((h[0], OPEN, h))
        events.append((h[1], CLOSE, h))
    for v in verticals:
        events.append((v[2], QUERY, v))

    events.sort(key=lambda e: (e[0], e[1], e[2][3]))
    return events


def count_hv(horizontals: Sequence[Horizontal], verticals: Sequence[Vertical]) -> int:
    """
    Number of crossing (horizontal, vertical) pairs, a Fenwick tree over compressed y counts the open horizontals
    """
    if not horizontals or not verticals:
        return 0

    ys = sorted({h[2] for h in horizontals})
    tree = FenwickTree(len(ys))
    count = 0

    for _, kind, segment in _events(horizontals, verticals):
        if kind == OPEN:
            tree.update(bisect_left(ys, segment[2]) + 1, 1)
        elif kind == CLOSE:
            tree.update(bisect_left(ys, segment[2]) + 1, -1)
        else:
            # Compressed positions of the y values inside [ylo, yhi]
            count += tree.range_query(bisect_left(ys, segment[0]) + 1, bisect_right(ys, segment[1]))

    return count


def report_hv(horizontals: Sequence[Horizontal], verticals: Sequence[Vertical], report: HVReport) -> int:
    """
    Reports every crossing pair, the open horizontals sit in a list ordered by (y, idx)
    """
    if not horizontals or not verticals:
        return 0

    active = SortedList()
    count = 0

    for _, kind, segment in _events(horizontals, verticals):
        if kind == OPEN:
            active.add((segment[2], segment[3]))
        elif kind == CLOSE:
            active.remove((segment[2], segment[3]))
        else:
            ylo, yhi, x, v_idx = segment
            for y, h_idx in active.irange((ylo,), (yhi, float("inf"))):
                report(h_idx, v_idx, x, y)
                count += 1

    return count


def colour_split(segments: Sequence[tuple], split: Optional[int]) -> Tuple[List[tuple], List[tuple]]:
    """
    (segments with local index below split, the others)
    """
    if split is None:
        return list(segments), []
    return [s for s in segments if s[3] < split], [s for s in segments if s[3] >= split]


def count_pairs(
    horizontals: Sequence[Horizontal],
    verticals: Sequence[Vertical],
    budget: BitBudget,
    word_bits: int,
    split: Optional[int] = None,
) -> int:
    """
    count_hv over the held segments, with split only pairs of different colours
    """
    with budget.alloc(WORDS_PER_SEGMENT * (len(horizontals) + len(verticals)) * word_bits, "in-core H-V count"):
        if split is None:
            return count_hv(horizontals, verticals)

        red_h, blue_h = colour_split(horizontals, split)
        red_v, blue_v = colour_split(verticals, split)
        return count_hv(red_h, blue_v) + count_hv(blue_h, red_v)


def report_pairs(
    horizontals: Sequence[Horizontal],
    verticals: Sequence[Vertical],
    budget: BitBudget,
    word_bits: int,
    report: HVReport,
    split: Optional[int] = None,
) -> int:
    with budget.alloc(WORDS_PER_SEGMENT * (len(horizontals) + len(verticals)) * word_bits, "in-core H-V report"):
        if split is None:
            return report_hv(horizontals, verticals, report)

        red_h, blue_h = colour_split(horizontals, split)
        red_v, blue_v = colour_split(verticals, split)
        return report_hv(red_h, blue_v, report) + report_hv(blue_h, red_v, report)
