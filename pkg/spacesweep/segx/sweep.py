"""
In-core plane sweep reporting every intersecting pair of segments once

The broom is a vertical line moving right, events are points in lexicographic (x, y) order. A pair is
reported at its first common point, where the event point is collected from the segments starting there,
the status run through it and the single-point segments sitting on it.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sortedcontainers import SortedDict, SortedList

from spacesweep.budget import BitBudget
from spacesweep.common_utils.fields import CrossingKind
from spacesweep.segx.predicates import (
    Point,
    Segment,
    endpoints,
    first_common_point,
    is_point,
    pair_intersects,
    single_common_point,
)

# Segment record
WORDS_PER_SEGMENT = 4
# Two rational coordinates and the slot counters
WORDS_PER_EVENT = 6
WORDS_PER_PENDING = 2

Report = Callable[[int, int, CrossingKind], None]


class Broom:
    def __init__(self):
        self.x: Fraction = Fraction(0)
        self.y: Fraction = Fraction(0)


@dataclass
class EventSlot:
    starts: List[int] = field(default_factory=list)
    points: List[int] = field(default_factory=list)
    ends: int = 0
    crossings: int = 0

    def empty(self) -> bool:
        return not (self.starts or self.points or self.ends or self.crossings)


class _Ordered:
    def key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other: "_Ordered") -> bool:
        return self.key() < other.key()


class StatusEntry(_Ordered):
    """
    A segment crossing the broom

    Below the event point the order is the one just right of the broom, above it the one just left of it,
    since crossings above the event point are still ahead. A vertical segment sits at the event point.
    """

    def __init__(self, idx: int, seg: Segment, broom: Broom):
        self.idx = idx
        self.broom = broom
        (self.x1, self.y1), (self.x2, self.y2) = endpoints(seg)
        self.vertical = self.x1 == self.x2
        if not self.vertical:
            self.slope = Fraction(self.y2 - self.y1, self.x2 - self.x1)

    def __repr__(self):
        return f"<StatusEntry {self.idx}>"

    def key(self) -> tuple:
        if self.vertical:
            return self.broom.y, (1, 0), self.idx

        y = self.y1 + self.slope * (self.broom.x - self.x1)
        if y > self.broom.y:
            return y, (0, -self.slope), self.idx
        return y, (0, self.slope), self.idx


class Probe(_Ordered):
    def __init__(self, *key):
        self._key = key

    def key(self) -> tuple:
        return self._key


class PlaneSweep:
    def __init__(
        self,
        segments: Sequence[Tuple[int, Segment]],
        budget: BitBudget,
        word_bits: int,
        report: Report,
        split: Optional[int] = None,
    ):
        """
        segments are (local index, record) pairs, with split only pairs across it are reported
        """
        self.segments: Dict[int, Segment] = dict(segments)
        self.word_bits = word_bits
        self.report = report
        self.split = split

        self.broom = Broom()
        self.status = SortedList()
        self.queue: SortedDict = SortedDict()
        self.pending: Dict[Tuple[int, int], Point] = {}

        self._held = budget.alloc(len(self.segments) * WORDS_PER_SEGMENT * word_bits, "sweep segments")
        self._working = budget.alloc(0, "sweep structures")

        for idx, seg in self.segments.items():
            lo, hi = endpoints(seg)
            start = self._slot((Fraction(lo[0]), Fraction(lo[1])))
            if is_point(seg):
                start.points.append(idx)
            else:
                start.starts.append(idx)
                self._slot((Fraction(hi[0]), Fraction(hi[1]))).ends += 1

        self._charge(0)

    def _slot(self, point: Point) -> EventSlot:
        slot = self.queue.get(point)
        if slot is None:
            slot = self.queue[point] = EventSlot()
        return slot

    def _charge(self, transient: int):
        self._working.resize(
            (
                len(self.queue) * WORDS_PER_EVENT
                + len(self.status)
                + len(self.pending) * WORDS_PER_PENDING
                + transient
            )
            * self.word_bits
        )

    def _schedule(self, a: StatusEntry, b: StatusEntry, p: Point):
        pair = (min(a.idx, b.idx), max(a.idx, b.idx))
        if pair in self.pending:
            return

        q = single_common_point(self.segments[a.idx], self.segments[b.idx])
        if q is None or q <= p:
            return

        self.pending[pair] = q
        self._slot(q).crossings += 1

    def _unschedule(self, a: StatusEntry, b: StatusEntry):
        q = self.pending.pop((min(a.idx, b.idx), max(a.idx, b.idx)), None)
        if q is None:
            return

        slot = self.queue.get(q)
        if slot is None:
            return
        slot.crossings -= 1
        if slot.empty():
            del self.queue[q]

    def _crosses_split(self, i: int, j: int) -> bool:
        return self.split is None or (i < self.split) != (j < self.split)

    def _report_at(self, p: Point, meeting: List[int]):
        for i, j in combinations(sorted(meeting), 2):
            if not self._crosses_split(i, j):
                continue

            a, b = self.segments[i], self.segments[j]
            kind = pair_intersects(a, b)
            assert kind is not None

            # Overlapping pairs meet at every event along their common part
            if kind == CrossingKind.OVERLAP and first_common_point(a, b) != p:
                continue

            self.report(i, j, kind)

    def _handle(self, p: Point, slot: EventSlot):
        self.broom.x, self.broom.y = p

        lo = self.status.bisect_left(Probe(p[1]))
        hi = self.status.bisect_left(Probe(p[1], (2,)))
        run: List[StatusEntry] = list(self.status[lo:hi])

        self._charge(len(run) + len(slot.starts) + len(slot.points))
        self._report_at(p, [e.idx for e in run] + slot.starts + slot.points)

        below = self.status[lo - 1] if lo > 0 else None
        above = self.status[hi] if hi < len(self.status) else None

        if run:
            if below is not None:
                self._unschedule(below, run[0])
            if above is not None:
                self._unschedule(run[-1], above)
            for a, b in zip(run, run[1:]):
                self._unschedule(a, b)
            del self.status[lo:hi]

        continuing = [e for e in run if (e.x2, e.y2) != p]
        inserted = continuing + [StatusEntry(idx, self.segments[idx], self.broom) for idx in slot.starts]

        if not inserted:
            if below is not None and above is not None:
                self._schedule(below, above, p)
            return

        if not run and below is not None and above is not None:
            self._unschedule(below, above)

        for entry in inserted:
            self.status.add(entry)

        first = self.status.bisect_left(Probe(p[1]))
        last = self.status.bisect_left(Probe(p[1], (2,))) - 1
        if first > 0:
            self._schedule(self.status[first - 1], self.status[first], p)
        if last + 1 < len(self.status):
            self._schedule(self.status[last], self.status[last + 1], p)

    def run(self):
        events = 0
        while self.queue:
            p, slot = self.queue.popitem(0)
            self._handle(p, slot)
            self._charge(0)
            events += 1

        assert not self.status
        logging.debug(f"Swept {len(self.segments)} segments in {events} events")

    def free(self):
        self._working.free()
        self._held.free()


def sweep(
    segments: Sequence[Tuple[int, Segment]],
    budget: BitBudget,
    word_bits: int,
    report: Report,
    split: Optional[int] = None,
):
    plane_sweep = PlaneSweep(segments, budget, word_bits, report, split)
    try:
        plane_sweep.run()
    finally:
        plane_sweep.free()
