from spacesweep.status.sweep_status import (
    SweepStatus,
    SpanningVertical,
    InvalidStatusInput,
    truncated_vertical,
    spanning_member,
    build,
)
