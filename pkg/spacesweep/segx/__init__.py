from spacesweep.segx.predicates import (
    pair_intersects,
    first_common_point,
    single_common_point,
    orientation,
    on_segment,
    format_point,
)
from spacesweep.segx.sweep import PlaneSweep, sweep
from spacesweep.segx.segment_intersections import (
    Sink,
    batch_size,
    direct,
    enumerate_crossings,
    count_crossings,
)
