"""
Read-only views over an InputTape

Views hold no copy of the records: every get goes through the tape and is counted there.
"""
from bisect import bisect_right
from typing import List, NamedTuple, Sequence, Tuple

from spacesweep.common_utils.fields import Axis
from spacesweep.tape.input_tape import Record, RecordSource, TapeIndexError


class SubTape:
    """
    Concatenation of index ranges of a source, e.g. a batch pair B_i ∪ B_j
    """

    def __init__(self, source: RecordSource, ranges: Sequence[range]):
        self._source = source
        self._ranges = [r for r in ranges if len(r)]

        # Prefix sizes for the local to source index mapping
        self._starts: List[int] = []
        total = 0
        for r in self._ranges:
            self._starts.append(total)
            total += len(r)
        self._len = total

    def __len__(self):
        return self._len

    def __repr__(self):
        return f"<SubTape {[(r.start, r.stop) for r in self._ranges]}>"

    def source_index(self, i: int) -> int:
        if not 0 <= i < self._len:
            raise TapeIndexError(f"Index {i} outside [0, {self._len})")
        block = bisect_right(self._starts, i) - 1
        return self._ranges[block][i - self._starts[block]]

    def global_index(self, i: int) -> int:
        """
        Index on the underlying InputTape, through nested views
        """
        idx = self.source_index(i)
        if isinstance(self._source, SubTape):
            return self._source.global_index(idx)
        return idx

    def get(self, i: int):
        return self._source.get(self.source_index(i))

    def read_count(self) -> int:
        return self._source.read_count()


def global_index(source: RecordSource, i: int) -> int:
    if isinstance(source, SubTape):
        return source.global_index(i)
    return i


class EndpointTape:
    """
    The 2n endpoints of a segment source, element e is endpoint e % 2 of segment e // 2
    """

    def __init__(self, segments: RecordSource):
        self._segments = segments

    def __len__(self):
        return 2 * len(self._segments)

    def get(self, e: int) -> Tuple[int, int]:
        x1, y1, x2, y2 = self._segments.get(e // 2)
        return (x2, y2) if e % 2 else (x1, y1)

    def read_count(self) -> int:
        return self._segments.read_count()


class Edge(NamedTuple):
    coord: int
    high: bool
    rectangle: Record


class EdgeTape:
    """
    The 2n edges of a rectangle source along one axis

    Element e is the low (even e) or high (odd e) edge of rectangle e // 2. The owning rectangle comes with
    the coordinate from the same read.
    """

    def __init__(self, rectangles: RecordSource, axis: Axis):
        self._rectangles = rectangles
        self._offset = 0 if axis == Axis.X else 1

    def __len__(self):
        return 2 * len(self._rectangles)

    def get(self, e: int) -> Edge:
        record: Record = self._rectangles.get(e // 2)
        return Edge(record[self._offset + 2 * (e % 2)], bool(e % 2), record)

    def read_count(self) -> int:
        return self._rectangles.read_count()
