"""
Counting horizontal-vertical crossings on a grid of m x m cells

A crossing of h and v lies in cell (i, j), j the column of v and i the row of h. It belongs to
  1. phase 1 if h has an endpoint in column j,
  2. otherwise phase 2 if v has an endpoint in row i,
  3. otherwise phase 3, both strictly span the cell.
"""
import logging
from math import isqrt
from typing import Callable, List, Optional, Tuple

from spacesweep.axcount.cell_counters import CellCounters
from spacesweep.axcount.hv_sweep import Horizontal, Vertical, count_pairs
from spacesweep.budget import BitBudget
from spacesweep.common_utils.arithmetic import clamp, lg, strip_capacity
from spacesweep.common_utils.axis_segments import horizontal_extent, is_vertical, vertical_extent
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import Algorithm, Axis, CombineMode, TapeKind
from spacesweep.grid import StripGrid, build, truncate_to_spanned
from spacesweep.navpile import NavPile, key_x, key_y
from spacesweep import stretch
from spacesweep.tape import EndpointTape, RecordSource, SubTape

Member = Callable[[int, tuple], bool]
# Turns a selected record into a held horizontal or vertical
Convert = Callable[[int, tuple], Tuple[Optional[Horizontal], Optional[Vertical]]]
PairSolve = Callable[[List[Horizontal], List[Vertical]], int]


def uses_direct(n: int, s: int) -> bool:
    """
    s >= n^(2/3) lg n, as s^3 >= n^2 lg^3 n
    """
    return s**3 >= n**2 * lg(n) ** 3


def stretched_batch_size(n: int, s: int) -> int:
    """
    r = s^(3/2) / lg^(3/2) s clamped to [1, n], halved until a pair of batches fits the direct regime
    """
    r = clamp(isqrt(s**3 // lg(s) ** 3), 1, n)
    while r > 1 and not uses_direct(2 * r, s):
        r //= 2
    return r


def as_horizontal(idx: int, seg) -> Horizontal:
    xlo, xhi, y = horizontal_extent(seg)
    return xlo, xhi, y, idx


def as_vertical(idx: int, seg) -> Vertical:
    ylo, yhi, x = vertical_extent(seg)
    return ylo, yhi, x, idx


def build_grids(source: RecordSource, s: int, budget: BitBudget) -> Tuple[StripGrid, StripGrid]:
    """
    Vertical and horizontal strips, each holding about 2 s / lg n segment endpoints
    """
    endpoints = EndpointTape(source)
    capacity = 2 * strip_capacity(len(source), s)

    with NavPile(endpoints, key_x, budget, s) as pile:
        grid_x = build(pile, capacity, budget, Axis.X)
    with NavPile(endpoints, key_y, budget, s) as pile:
        grid_y = build(pile, capacity, budget, Axis.Y)

    return grid_x, grid_y


def classify_crossing(h: Horizontal, v: Vertical, grid_x: StripGrid, grid_y: StripGrid) -> int:
    column, row = grid_x.locate(v[2]), grid_y.locate(h[2])
    if grid_x.is_local(h[0], h[1], column):
        return 1
    if grid_y.is_local(v[0], v[1], row):
        return 2
    return 3


def truncated_horizontal(h: Horizontal, grid_x: StripGrid) -> Optional[Horizontal]:
    """
    h cut down to the columns it strictly spans, [sep[first-1], sep[last]) held closed on integers
    """
    truncated = truncate_to_spanned((h[0], h[2], h[1], h[2]), grid_x, strict=True)
    if truncated is None:
        return None

    xlo, y, xhi, _ = truncated
    return xlo, xhi - 1, y, h[3]


def column_member(grid_x: StripGrid, column: int) -> Member:
    """
    Verticals of the column and horizontals with an endpoint in it
    """

    def member(idx: int, seg) -> bool:
        if is_vertical(seg):
            return grid_x.locate(seg[0]) == column
        xlo, xhi, _ = horizontal_extent(seg)
        return grid_x.is_local(xlo, xhi, column)

    return member


def plain_convert(idx: int, seg) -> Tuple[Optional[Horizontal], Optional[Vertical]]:
    if is_vertical(seg):
        return None, as_vertical(idx, seg)
    return as_horizontal(idx, seg), None


def row_member(grid_x: StripGrid, grid_y: StripGrid, row: int) -> Member:
    """
    Horizontals of the row strictly spanning a column and verticals with an endpoint in the row
    """

    def member(idx: int, seg) -> bool:
        if is_vertical(seg):
            ylo, yhi, _ = vertical_extent(seg)
            return grid_y.is_local(ylo, yhi, row)
        xlo, xhi, y = horizontal_extent(seg)
        return grid_y.locate(y) == row and grid_x.span_range(xlo, xhi, strict=True) is not None

    return member


def truncating_convert(grid_x: StripGrid) -> Convert:
    def convert(idx: int, seg) -> Tuple[Optional[Horizontal], Optional[Vertical]]:
        if is_vertical(seg):
            return None, as_vertical(idx, seg)
        return truncated_horizontal(as_horizontal(idx, seg), grid_x), None

    return convert


def strip_work(
    source: RecordSource,
    member: Member,
    convert: Convert,
    chunk_capacity: int,
    solve: PairSolve,
) -> int:
    """
    Runs solve on the selected segments of one strip

    A strip holding more than chunk_capacity segments is cut into chunks by rank, solving every chunk and
    then every chunk pair across.
    """
    strip_population = stretch.population(source, member)
    if strip_population == 0:
        return 0

    chunks = stretch.plan(strip_population, min(chunk_capacity, strip_population), CombineMode.DISJOINT)

    def load(batch: range) -> Tuple[List[Horizontal], List[Vertical]]:
        horizontals, verticals = [], []
        for idx, seg in stretch.materialize(source, member, [batch]):
            h, v = convert(idx, seg)
            if h is not None:
                horizontals.append(h)
            if v is not None:
                verticals.append(v)
        return horizontals, verticals

    def within(batch: range) -> int:
        return solve(*load(batch))

    def cross(first: range, second: range) -> int:
        h_first, v_first = load(first)
        h_second, v_second = load(second)
        return solve(h_first, v_second) + solve(h_second, v_first)

    return sum(stretch.run_disjoint(chunks, within, cross))


def phase1_vertical_strips(
    source: RecordSource, s: int, budget: BitBudget, grid_x: StripGrid, split: Optional[int] = None
) -> int:
    word = lg(len(source))

    def solve(horizontals, verticals) -> int:
        return count_pairs(horizontals, verticals, budget, word, split)

    return sum(
        strip_work(source, column_member(grid_x, column), plain_convert, grid_x.per_strip_capacity, solve)
        for column in range(grid_x.m)
    )


def phase2_horizontal_strips(
    source: RecordSource,
    s: int,
    budget: BitBudget,
    grid_x: StripGrid,
    grid_y: StripGrid,
    split: Optional[int] = None,
) -> int:
    word = lg(len(source))
    convert = truncating_convert(grid_x)

    def solve(horizontals, verticals) -> int:
        return count_pairs(horizontals, verticals, budget, word, split)

    return sum(
        strip_work(source, row_member(grid_x, grid_y, row), convert, grid_y.per_strip_capacity, solve)
        for row in range(grid_y.m)
    )


def phase3_spanning(
    source: RecordSource,
    s: int,
    budget: BitBudget,
    grid_x: StripGrid,
    grid_y: StripGrid,
    split: Optional[int] = None,
) -> int:
    """
    Sum over cells of spanning horizontals times spanning verticals, colour against colour with split
    """
    word = lg(len(source))
    colours = 1 if split is None else 2
    rows, columns = grid_y.m, grid_x.m

    horizontal_counters = [CellCounters(rows, columns, budget, word, "horizontal counters") for _ in range(colours)]
    vertical_counters = [CellCounters(columns, rows, budget, word, "vertical counters") for _ in range(colours)]

    try:
        for idx in range(len(source)):
            seg = source.get(idx)
            colour = 0 if split is None or idx < split else 1
            if is_vertical(seg):
                ylo, yhi, x = vertical_extent(seg)
                vertical_counters[colour].add(grid_x.locate(x), grid_y.locate(ylo), grid_y.locate(yhi))
            else:
                xlo, xhi, y = horizontal_extent(seg)
                horizontal_counters[colour].add(grid_y.locate(y), grid_x.locate(xlo), grid_x.locate(xhi))

        total = 0
        with budget.alloc(colours * rows * columns * word, "spanning verticals"):
            # spanning_v[colour][column][row]
            spanning_v = [[counters.spanning(column) for column in range(columns)] for counters in vertical_counters]

            for row in range(rows):
                spanning_h = [counters.spanning(row) for counters in horizontal_counters]
                for column in range(columns):
                    if split is None:
                        total += spanning_h[0][column] * spanning_v[0][column][row]
                    else:
                        total += spanning_h[0][column] * spanning_v[1][column][row]
                        total += spanning_h[1][column] * spanning_v[0][column][row]
    finally:
        for counters in horizontal_counters + vertical_counters:
            counters.free()

    return total


def direct(source: RecordSource, s: int, budget: BitBudget, split: Optional[int] = None) -> int:
    grid_x, grid_y = build_grids(source, s, budget)

    with grid_x, grid_y:
        logging.info(f"Axis-parallel count on {len(source)} segments: {grid_y.m} x {grid_x.m} cells")

        local_columns = phase1_vertical_strips(source, s, budget, grid_x, split)
        local_rows = phase2_horizontal_strips(source, s, budget, grid_x, grid_y, split)
        spanning = phase3_spanning(source, s, budget, grid_x, grid_y, split)

    logging.debug(f"Phase counts {local_columns}, {local_rows}, {spanning}")
    return local_columns + local_rows + spanning


def stretched(source: RecordSource, s: int, budget: BitBudget) -> int:
    n = len(source)
    r = stretched_batch_size(n, s)
    batch_plan = stretch.plan(n, r, CombineMode.DISJOINT)

    logging.info(f"Axis-parallel count on {n} segments: {len(batch_plan)} batches of {r}")

    def within(batch: range) -> int:
        return direct(SubTape(source, [batch]), s, budget)

    def cross(first: range, second: range) -> int:
        return direct(SubTape(source, [first, second]), s, budget, split=len(first))

    return sum(stretch.run_disjoint(batch_plan, within, cross))


def check_axis_source(source: RecordSource):
    kind = getattr(source, "kind", TapeKind.SEGMENTS)
    if kind != TapeKind.SEGMENTS or not getattr(source, "axis_parallel", True):
        raise UsageError("Axis-parallel algorithms need a segment tape validated as axis-parallel")


def count_axis(source: RecordSource, s: int, budget: Optional[BitBudget] = None) -> int:
    """
    Number of crossing horizontal-vertical pairs
    """
    check_axis_source(source)
    n = len(source)
    if n == 0:
        return 0

    if budget is None:
        budget = BitBudget.for_run(Algorithm.AXCOUNT, n, s)

    with budget.scope():
        if uses_direct(n, s):
            return direct(source, s, budget)
        return stretched(source, s, budget)
