from spacesweep.axcount.hv_sweep import (
    FenwickTree,
    Horizontal,
    Vertical,
    HVReport,
    count_hv,
    report_hv,
    count_pairs,
    report_pairs,
)
from spacesweep.axcount.cell_counters import CellCounters
from spacesweep.axcount.count_axis import (
    count_axis,
    direct,
    stretched,
    uses_direct,
    stretched_batch_size,
    build_grids,
    classify_crossing,
    truncated_horizontal,
    as_horizontal,
    as_vertical,
    column_member,
    row_member,
    plain_convert,
    truncating_convert,
    strip_work,
    check_axis_source,
    phase1_vertical_strips,
    phase2_horizontal_strips,
    phase3_spanning,
)
