import threading
from typing import Iterable, Protocol, Sequence, Tuple

from spacesweep.common_utils.axis_segments import validate_axis_parallel
from spacesweep.common_utils.constants import COORD_LIMIT
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import TapeKind, record_width

Record = Tuple[int, ...]


class TapeIndexError(UsageError):
    ...


class CoordinateOutOfRange(UsageError):
    ...


class InvalidRectangle(UsageError):
    ...


class RecordSource(Protocol):
    """
    Anything the algorithms read records from: the tape itself or a read-only view over it
    """

    def __len__(self) -> int:
        ...

    def get(self, i: int):
        ...

    def read_count(self) -> int:
        ...


class InputTape:
    """
    The read-only input array, every access is counted

    Its own storage does not count against any workspace budget.
    """

    kind: TapeKind
    axis_parallel: bool

    def __init__(
        self,
        kind: TapeKind,
        records: Iterable[Sequence[int]],
        axis_parallel: bool = False,
    ):
        self.kind = TapeKind(kind)
        self.axis_parallel = axis_parallel
        self._records: Tuple[Record, ...] = tuple(tuple(r) for r in records)
        self._reads = 0
        self._lock = threading.Lock()

        width = record_width[self.kind]
        for idx, record in enumerate(self._records):
            if len(record) != width:
                raise UsageError(
                    f"Record {idx} has {len(record)} fields, {self.kind} need {width}"
                )
            if any(abs(c) > COORD_LIMIT for c in record):
                raise CoordinateOutOfRange(
                    f"Record {idx} {record} leaves [-{COORD_LIMIT}, {COORD_LIMIT}]"
                )
            if self.kind == TapeKind.RECTANGLES and not (
                record[0] < record[2] and record[1] < record[3]
            ):
                raise InvalidRectangle(
                    f"Rectangle {idx} {record} needs xlo < xhi and ylo < yhi"
                )

        if axis_parallel:
            if self.kind != TapeKind.SEGMENTS:
                raise UsageError("Only segment tapes can be flagged axis-parallel")
            validate_axis_parallel(self._records)

    def __len__(self):
        return len(self._records)

    def __repr__(self):
        return f"<InputTape {self.kind} n={len(self)} reads={self._reads}>"

    @property
    def n(self) -> int:
        return len(self._records)

    def get(self, i: int) -> Record:
        if not 0 <= i < len(self._records):
            raise TapeIndexError(f"Index {i} outside [0, {len(self._records)})")

        with self._lock:
            self._reads += 1

        return self._records[i]

    def read_count(self) -> int:
        return self._reads
