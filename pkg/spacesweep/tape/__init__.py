from spacesweep.tape.input_tape import (
    InputTape,
    Record,
    RecordSource,
    TapeIndexError,
    CoordinateOutOfRange,
    InvalidRectangle,
)
from spacesweep.tape.views import SubTape, EndpointTape, Edge, EdgeTape, global_index
from spacesweep.tape.loader import TapeFormatError, load_tape, parse_records, format_records
