"""
In-core union area of axis-parallel rectangles

A vertical line sweeps the x-sorted edges, a coverage-count segment tree over the compressed y coordinates
holds the covered length of the sweep line.
"""
from contextlib import nullcontext
from typing import List, Optional, Sequence, Tuple

from spacesweep.budget import BitBudget

# (xlo, ylo, xhi, yhi)
Rect = Tuple[int, int, int, int]

# count and covered length per node, both charged one word
WORDS_PER_NODE = 2
WORDS_PER_EVENT = 4


class CoverageTree:
    """
    Elementary intervals [ys[k], ys[k+1]) as leaves, each node knows how often it is fully covered
    """

    def __init__(self, ys: Sequence[int]):
        self.ys = list(ys)
        self.leaves = max(1, len(self.ys) - 1)
        self.count = [0] * (4 * self.leaves)
        self.covered = [0] * (4 * self.leaves)

    def __len__(self):
        return len(self.count)

    def update(self, lo: int, hi: int, delta: int):
        """
        Adds delta to the coverage of elementary intervals lo..hi-1
        """
        if lo < hi:
            self._update(1, 0, self.leaves, lo, hi, delta)

    def _update(self, node: int, left: int, right: int, lo: int, hi: int, delta: int):
        if hi <= left or right <= lo:
            return

        if lo <= left and right <= hi:
            self.count[node] += delta
        else:
            middle = (left + right) // 2
            self._update(2 * node, left, middle, lo, hi, delta)
            self._update(2 * node + 1, middle, right, lo, hi, delta)

        assert self.count[node] >= 0
        if self.count[node] > 0:
            self.covered[node] = self.ys[right] - self.ys[left]
        elif right - left == 1:
            self.covered[node] = 0
        else:
            self.covered[node] = self.covered[2 * node] + self.covered[2 * node + 1]

    def covered_length(self) -> int:
        return self.covered[1]


def bentley_measure(rects: Sequence[Rect], budget: Optional[BitBudget] = None, word_bits: int = 1) -> int:
    """
    Exact area of the union, empty rectangles contribute nothing
    """
    rects = [r for r in rects if r[0] < r[2] and r[1] < r[3]]
    if not rects:
        return 0

    ys = sorted({y for r in rects for y in (r[1], r[3])})
    rank = {y: k for k, y in enumerate(ys)}

    events: List[Tuple[int, int, int, int]] = []
    for xlo, ylo, xhi, yhi in rects:
        events.append((xlo, 1, rank[ylo], rank[yhi]))
        events.append((xhi, -1, rank[ylo], rank[yhi]))
    events.sort()

    tree = CoverageTree(ys)
    bits = (WORDS_PER_NODE * len(tree) + WORDS_PER_EVENT * len(events)) * word_bits

    area = 0
    with (budget.alloc(bits, "bentley sweep") if budget else nullcontext()):
        previous = events[0][0]
        for x, delta, lo, hi in events:
            area += tree.covered_length() * (x - previous)
            tree.update(lo, hi, delta)
            previous = x

    assert tree.covered_length() == 0
    return area
