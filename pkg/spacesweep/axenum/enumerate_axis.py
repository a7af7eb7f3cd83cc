"""
Reporting horizontal-vertical crossings

Phases 1 and 2 report the crossings with an endpoint near them the way the counter finds them. Phase 3
rebuilds a succinct status per vertical strip: a horizontal strictly spanning the strip meets every
vertical spanning the cell of its row.
"""
import logging
from typing import Callable, Optional, Tuple

from spacesweep.axcount import (
    HVReport,
    build_grids,
    check_axis_source,
    column_member,
    plain_convert,
    report_pairs,
    row_member,
    strip_work,
    truncating_convert,
)
from spacesweep.budget import BitBudget
from spacesweep.common_utils.arithmetic import clamp, lg
from spacesweep.common_utils.axis_segments import horizontal_extent, is_vertical
from spacesweep.common_utils.fields import Algorithm, CombineMode
from spacesweep.dataclasses import AxisCrossing
from spacesweep.grid import StripGrid
from spacesweep import status as sweep_status
from spacesweep import stretch
from spacesweep.tape import RecordSource, SubTape

AxisSink = Callable[[AxisCrossing], None]


def uses_direct(n: int, s: int) -> bool:
    return s >= n


def stretched_batch_size(n: int, s: int) -> int:
    # a pair of batches holds at most s segments
    return clamp(s // 2, 1, n)


def phase1_vertical_strips(
    source: RecordSource,
    budget: BitBudget,
    grid_x: StripGrid,
    report: HVReport,
    split: Optional[int] = None,
) -> int:
    word = lg(len(source))

    def solve(horizontals, verticals) -> int:
        return report_pairs(horizontals, verticals, budget, word, report, split)

    return sum(
        strip_work(source, column_member(grid_x, column), plain_convert, grid_x.per_strip_capacity, solve)
        for column in range(grid_x.m)
    )


def phase2_horizontal_strips(
    source: RecordSource,
    budget: BitBudget,
    grid_x: StripGrid,
    grid_y: StripGrid,
    report: HVReport,
    split: Optional[int] = None,
) -> int:
    word = lg(len(source))
    convert = truncating_convert(grid_x)

    def solve(horizontals, verticals) -> int:
        return report_pairs(horizontals, verticals, budget, word, report, split)

    return sum(
        strip_work(source, row_member(grid_x, grid_y, row), convert, grid_y.per_strip_capacity, solve)
        for row in range(grid_y.m)
    )


def phase3_spanning(
    source: RecordSource,
    budget: BitBudget,
    grid_x: StripGrid,
    grid_y: StripGrid,
    report: HVReport,
    split: Optional[int] = None,
) -> Tuple[int, int]:
    """
    (reported crossings, statuses built)

    Every strip gets one status, a strip with more spanning verticals than its capacity gets one per chunk of
    them instead.
    """
    found = 0
    stopovers = 0

    for strip in range(grid_x.m):
        spanning_population = stretch.population(source, sweep_status.spanning_member(grid_x, grid_y, strip))
        capacity = grid_x.per_strip_capacity
        if spanning_population <= capacity:
            chunks = [range(spanning_population)]
        else:
            chunks = stretch.plan(spanning_population, capacity, CombineMode.DISJOINT).batches

        for ranks in chunks:
            with sweep_status.build(source, grid_x, grid_y, strip, budget, ranks) as status:
                stopovers += 1
                if not status.spanning_ids:
                    continue

                for h_idx in range(len(source)):
                    seg = source.get(h_idx)
                    if is_vertical(seg):
                        continue
                    xlo, xhi, y = horizontal_extent(seg)
                    if not grid_x.locate(xlo) < strip < grid_x.locate(xhi):
                        continue

                    for v_idx in status.query_cell(status.locate_row(y)):
                        if split is not None and (h_idx < split) == (v_idx < split):
                            continue
                        report(h_idx, v_idx, source.get(v_idx)[0], y)
                        found += 1

    return found, stopovers


def direct(source: RecordSource, s: int, budget: BitBudget, report: HVReport, split: Optional[int] = None) -> int:
    grid_x, grid_y = build_grids(source, s, budget)

    with grid_x, grid_y:
        logging.info(f"Axis-parallel enumeration on {len(source)} segments: {grid_y.m} x {grid_x.m} cells")

        local_columns = phase1_vertical_strips(source, budget, grid_x, report, split)
        local_rows = phase2_horizontal_strips(source, budget, grid_x, grid_y, report, split)
        spanning, stopovers = phase3_spanning(source, budget, grid_x, grid_y, report, split)
        # One status per strip, one per chunk of a strip cut into chunks
        assert stopovers >= grid_x.m, f"{stopovers} statuses for {grid_x.m} strips"

    logging.debug(f"Phase reports {local_columns}, {local_rows}, {spanning} with {stopovers} statuses")
    return local_columns + local_rows + spanning


def _solve(source: RecordSource, ranges, s: int, budget: BitBudget, sink: AxisSink) -> int:
    sub = SubTape(source, ranges)

    def relay(h_idx: int, v_idx: int, x: int, y: int):
        i, j = sub.source_index(h_idx), sub.source_index(v_idx)
        sink(AxisCrossing(min(i, j), max(i, j), x, y))

    split = len(ranges[0]) if len(ranges) > 1 else None
    return direct(sub, s, budget, relay, split)


def enumerate_axis(source: RecordSource, s: int, sink: AxisSink, budget: Optional[BitBudget] = None) -> int:
    """
    Pushes every crossing horizontal-vertical pair to the sink once, returns their number
    """
    check_axis_source(source)
    n = len(source)
    if n == 0:
        return 0

    if budget is None:
        budget = BitBudget.for_run(Algorithm.AXENUM, n, s)

    with budget.scope():
        if uses_direct(n, s):
            return _solve(source, [range(n)], s, budget, sink)

        r = stretched_batch_size(n, s)
        batch_plan = stretch.plan(n, r, CombineMode.DISJOINT)
        logging.info(f"Axis-parallel enumeration on {n} segments: {len(batch_plan)} batches of {r}")

        return sum(
            stretch.run_disjoint(
                batch_plan,
                lambda batch: _solve(source, [batch], s, budget, sink),
                lambda first, second: _solve(source, [first, second], s, budget, sink),
            )
        )
