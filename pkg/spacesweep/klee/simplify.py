"""
Spanning-width simplification

Inside a strip, rectangles spanning it cover whole columns. The scan collapses those columns: a corner
inside a spanning run moves to the run's opening, and every corner moves left by the width of the runs
closed before it. What remains is measured in-core, the collapsed width is added back times the height.
"""
from typing import Iterable, List, Optional, Tuple

from spacesweep.common_utils.fields import EventSide


class Simplifier:
    """
    z open spanning rectangles, W collapsed width so far, runs are [x1, x2]
    """

    z: int
    W: int
    x1: Optional[int]
    x2: Optional[int]

    def __init__(self, start: Optional[int] = None, open_at_start: int = 0):
        self.z = 0
        self.W = 0
        self.x1 = None
        self.x2 = None

        for _ in range(open_at_start):
            assert start is not None
            self.open(start)

    def __repr__(self):
        return f"<Simplifier z={self.z} W={self.W} x1={self.x1}>"

    def open(self, x: int):
        if self.z == 0:
            self.x1 = x
        self.z += 1

    def close(self, x: int):
        assert self.z > 0
        self.z -= 1
        if self.z == 0:
            assert self.x1 is not None
            self.W += x - self.x1
            self.x2 = x

    def relocate(self, x: int) -> int:
        """
        Collapsed coordinate of a corner at x, only W of runs closed before x is subtracted
        """
        if self.z > 0:
            assert self.x1 is not None
            return self.x1 - self.W
        return x - self.W

    def finish(self, x: int) -> int:
        """
        Closes every run still open at x, the end of the scanned range, and returns the total width
        """
        while self.z > 0:
            self.close(x)
        return self.W

    def feed(self, x: int, side: EventSide) -> Optional[int]:
        if side == EventSide.OPEN:
            self.open(x)
        elif side == EventSide.CLOSE:
            self.close(x)
        else:
            return self.relocate(x)
        return None


def simplify_scan(events: Iterable[Tuple[int, EventSide]]) -> Tuple[int, List[Tuple[int, int]]]:
    """
    Runs the x-ordered events through a Simplifier

    Returns the total spanning width and the (x, relocated x) of every corner, in event order.
    """
    simplifier = Simplifier()
    relocated: List[Tuple[int, int]] = []

    previous: Optional[int] = None
    for x, side in events:
        assert previous is None or previous <= x, "Events must be sorted by x"
        previous = x

        moved = simplifier.feed(x, EventSide(side))
        if moved is not None:
            relocated.append((x, moved))

    assert simplifier.z == 0, "Every spanning left edge is matched by a right edge"
    return simplifier.W, relocated
