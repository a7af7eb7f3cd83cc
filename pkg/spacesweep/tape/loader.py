import logging
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from spacesweep.common_utils.constants import COORD_LIMIT
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import TapeKind, record_width
from spacesweep.tape.input_tape import CoordinateOutOfRange, InputTape


class TapeFormatError(UsageError):
    ...


def parse_records(lines: Iterable[str], kind: TapeKind) -> List[Tuple[int, ...]]:
    """
    One record per line, decimal integers separated by single spaces, '#' starts a comment line
    """
    width = record_width[TapeKind(kind)]
    records = []

    for line_number, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue

        fields = line.split(" ")
        if len(fields) != width:
            raise TapeFormatError(
                f"Line {line_number}: expected {width} integers for {kind}, got {line!r}"
            )

        try:
            record = tuple(int(f) for f in fields)
        except ValueError:
            raise TapeFormatError(f"Line {line_number}: not an integer record {line!r}")

        if any(abs(c) > COORD_LIMIT for c in record):
            raise CoordinateOutOfRange(
                f"Line {line_number}: coordinate outside [-{COORD_LIMIT}, {COORD_LIMIT}]"
            )

        records.append(record)

    return records


def format_records(records: Iterable[Sequence[int]]) -> str:
    return "".join(" ".join(str(c) for c in record) + "\n" for record in records)


def load_tape(path: str | Path, kind: TapeKind, axis_parallel: bool = False) -> InputTape:
    try:
        with open(path) as file:
            records = parse_records(file, kind)
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e.strerror}")

    logging.info(f"Loaded {len(records)} {kind} from {path}")

    return InputTape(kind, records, axis_parallel=axis_parallel)
