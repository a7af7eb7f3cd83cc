from spacesweep.axenum.enumerate_axis import (
    AxisSink,
    enumerate_axis,
    direct,
    uses_direct,
    stretched_batch_size,
    phase1_vertical_strips,
    phase2_horizontal_strips,
    phase3_spanning,
)
