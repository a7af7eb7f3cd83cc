import heapq
import itertools
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from spacesweep.budget import Allocation, BitBudget
from spacesweep.common_utils.arithmetic import ceil_div, ceil_sqrt, lg, strip_capacity
from spacesweep.common_utils.constants import COORD_LIMIT
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import Algorithm, Axis, EventSide, StripRelation, TapeKind
from spacesweep.dataclasses import CellMeasure
from spacesweep.grid import iter_strips
from spacesweep.klee.bentley import Rect, bentley_measure
from spacesweep.klee.simplify import Simplifier, simplify_scan
from spacesweep.navpile import NavPile
from spacesweep.tape import Edge, EdgeTape, RecordSource

# Edges the per-strip cell pile skips sort after every coordinate
OUTSIDE = COORD_LIMIT + 1

# (low, high) of a strip or cell, None on an infinite side
Bounds = Tuple[Optional[int], Optional[int]]

# four relocated coordinates and the rectangle index
WORDS_PER_LOCAL = 5


class UnsortedInput(UsageError):
    """
    measure_sorted needs the rectangles ordered by nondecreasing xlo
    """


def edge_coord(edge: Edge) -> int:
    return edge.coord


def area_relation(lo: int, hi: int, low: Optional[int], high: Optional[int]) -> StripRelation:
    """
    SPANS when [lo, hi] contains the closed strip, LOCAL when it meets the strip interior otherwise
    """
    if low is not None and high is not None and lo <= low and hi >= high:
        return StripRelation.SPANS
    if (high is None or lo < high) and (low is None or hi > low):
        return StripRelation.LOCAL
    return StripRelation.DISJOINT


def clip(lo: int, hi: int, low: Optional[int], high: Optional[int]) -> Tuple[int, int]:
    return (lo if low is None else max(lo, low)), (hi if high is None else min(hi, high))


def spanning_runs(source: RecordSource, low: int, high: int) -> Iterator[Tuple[int, EventSide]]:
    """
    Open and close events of the merged x-intervals of the rectangles spanning [low, high], one tape scan
    """
    run: Optional[Tuple[int, int]] = None
    for idx in range(len(source)):
        xlo, ylo, xhi, yhi = source.get(idx)
        if area_relation(ylo, yhi, low, high) != StripRelation.SPANS:
            continue

        if run is not None and xlo <= run[1]:
            run = (run[0], max(run[1], xhi))
            continue

        if run is not None:
            yield run[0], EventSide.OPEN
            yield run[1], EventSide.CLOSE
        run = (xlo, xhi)

    if run is not None:
        yield run[0], EventSide.OPEN
        yield run[1], EventSide.CLOSE


def _strip_locals(source: RecordSource, low: Optional[int], high: Optional[int], check_sorted: bool) -> List[Rect]:
    locals_: List[Rect] = []
    previous: Optional[int] = None

    for idx in range(len(source)):
        xlo, ylo, xhi, yhi = source.get(idx)
        if check_sorted:
            if previous is not None and xlo < previous:
                raise UnsortedInput(f"Rectangle {idx} starts at x={xlo}, before rectangle {idx - 1} at x={previous}")
            previous = xlo

        if area_relation(ylo, yhi, low, high) == StripRelation.LOCAL:
            ylo, yhi = clip(ylo, yhi, low, high)
            locals_.append((xlo, ylo, xhi, yhi))

    return locals_


def _sorted_strip(
    source: RecordSource, low: Optional[int], high: Optional[int], budget: BitBudget, word: int, check_sorted: bool
) -> int:
    locals_ = _strip_locals(source, low, high, check_sorted)

    with budget.alloc(WORDS_PER_LOCAL * len(locals_) * word, "strip rectangles"), budget.alloc(
        2 * 2 * len(locals_) * word, "relocated corners"
    ):
        corners = ((x, EventSide.CORNER) for x in sorted({x for r in locals_ for x in (r[0], r[2])}))
        if low is None or high is None:
            runs: Iterator[Tuple[int, EventSide]] = iter(())
        else:
            runs = spanning_runs(source, low, high)

        spanning_width, relocated = simplify_scan(heapq.merge(runs, corners, key=lambda event: event[0]))
        moved = dict(relocated)

        relocated_rects = [(moved[xlo], ylo, moved[xhi], yhi) for xlo, ylo, xhi, yhi in locals_]
        strip_total = bentley_measure(relocated_rects, budget, word)

    if spanning_width:
        assert low is not None and high is not None
        strip_total += spanning_width * (high - low)

    logging.debug(f"Strip [{low}, {high}): {len(locals_)} local rectangles, spanning width {spanning_width}")
    return strip_total


def measure_sorted(source: RecordSource, s: int, budget: BitBudget) -> int:
    """
    Horizontal strips of about s / lg n edges, each solved with one collecting and one simplifying scan

    Strips are cut on the fly by a pile over the y-edges, only the current bounds are held.
    """
    n = len(source)
    word = lg(n)
    capacity = strip_capacity(n, s)
    logging.info(f"Klee's measure on {n} x-sorted rectangles, horizontal strips of {capacity} edges")

    total = 0
    strips = 0
    with NavPile(EdgeTape(source, Axis.Y), edge_coord, budget, s) as pile:
        for low, high in iter_strips((entry.key for entry in pile), capacity, isolate_runs=True):
            total += _sorted_strip(source, low, high, budget, word, check_sorted=strips == 0)
            strips += 1

    logging.info(f"Measured {strips} strips")
    return total


class _Cell:
    """
    In-core state of one cell of the multi-scan, locals map a rectangle index to its relocated coordinates
    """

    def __init__(self, bounds: Bounds, open_spanning: int):
        self.low, self.high = bounds
        self.simplifier = Simplifier(self.low, open_at_start=open_spanning)
        self.locals: Dict[int, List[Optional[int]]] = {}

    def spans(self, xlo: int, xhi: int) -> bool:
        return self.low is not None and self.high is not None and xlo <= self.low and xhi >= self.high

    def add_edge(self, idx: int, edge: Edge, strip: Bounds):
        xlo, ylo, xhi, yhi = edge.rectangle
        relation = area_relation(ylo, yhi, *strip)

        if relation == StripRelation.SPANS:
            if edge.high:
                self.simplifier.close(edge.coord)
            else:
                self.simplifier.open(edge.coord)

        elif relation == StripRelation.LOCAL:
            # Edges of rectangles spanning the cell or only touching it carry no local area
            if area_relation(xlo, xhi, self.low, self.high) != StripRelation.LOCAL:
                return

            coords = self.locals.setdefault(idx, [None, None, None, None])
            coords[2 if edge.high else 0] = self.simplifier.relocate(edge.coord)


def _vertical_sweep(
    source: RecordSource,
    y_pile: NavPile,
    cell: _Cell,
    strip: Bounds,
) -> int:
    """
    Union height of the rectangles spanning the cell horizontally, relocating the locals' y on the way
    """
    low, high = strip

    def horizontal_spanner(rect) -> bool:
        xlo, ylo, xhi, yhi = rect
        return cell.spans(xlo, xhi) and area_relation(ylo, yhi, low, high) == StripRelation.LOCAL

    # Spanners that opened below the strip are counted by a tape scan, the pile starts at the strip
    already_open = 0
    if low is not None and cell.low is not None and cell.high is not None:
        for idx in range(len(source)):
            rect = source.get(idx)
            if rect[1] < low and horizontal_spanner(rect):
                already_open += 1

    simplifier = Simplifier(low, open_at_start=already_open)

    y_pile.reset(None if low is None else low - 1)
    for entry in y_pile:
        edge: Edge = entry.record
        if high is not None and edge.coord >= high:
            break

        idx = entry.index // 2
        if idx in cell.locals:
            cell.locals[idx][3 if edge.high else 1] = simplifier.relocate(edge.coord)
        elif horizontal_spanner(edge.rectangle):
            if edge.high:
                simplifier.close(edge.coord)
            else:
                simplifier.open(edge.coord)

    if high is None:
        assert simplifier.z == 0
        return simplifier.W
    return simplifier.finish(high)


def _close_cell(
    source: RecordSource,
    y_pile: NavPile,
    cell: _Cell,
    strip: Bounds,
    budget: BitBudget,
    word: int,
) -> CellMeasure:
    low, high = strip

    if cell.high is None:
        assert cell.simplifier.z == 0
        w_h = cell.simplifier.W
    else:
        w_h = cell.simplifier.finish(cell.high)

    w_v = _vertical_sweep(source, y_pile, cell, strip)

    rects: List[Rect] = []
    for idx, (x0, y0, x1, y1) in cell.locals.items():
        # Ends outside the cell are clipped: the low side stays, the high side loses the collapsed width
        if x0 is None:
            assert cell.low is not None
            x0 = cell.low
        if x1 is None:
            assert cell.high is not None
            x1 = cell.high - w_h
        if y0 is None:
            assert low is not None
            y0 = low
        if y1 is None:
            assert high is not None
            y1 = high - w_v
        rects.append((x0, y0, x1, y1))

    local = bentley_measure(rects, budget, word)

    width = None if cell.low is None or cell.high is None else cell.high - cell.low
    height = None if low is None or high is None else high - low
    measure = CellMeasure(local, w_h, w_v, width, height)

    assert measure.total >= 0
    if width is not None and height is not None:
        assert measure.total <= width * height, f"Cell total {measure.total} above its area {width * height}"
    return measure


def _unsorted_strip(
    source: RecordSource,
    s: int,
    budget: BitBudget,
    strip: Bounds,
    x_pile: NavPile,
    y_pile: NavPile,
    cell_allocation: Allocation,
) -> int:
    """
    Horizontal sweep of one strip, cells close after ell x-edges of the rectangles local to the strip
    """
    n = len(source)
    word = lg(n)

    def local_key(edge: Edge) -> int:
        _, ylo, _, yhi = edge.rectangle
        return edge.coord if area_relation(ylo, yhi, *strip) == StripRelation.LOCAL else OUTSIDE

    x_pile.reset(None)
    events = iter(x_pile)
    pending = next(events, None)

    open_spanning = 0
    strip_total = 0
    cells = 0
    with NavPile(EdgeTape(source, Axis.X), local_key, budget, s) as cell_pile:
        local_keys = itertools.takewhile(lambda key: key < OUTSIDE, (entry.key for entry in cell_pile))

        for bounds in iter_strips(local_keys, strip_capacity(n, s), isolate_runs=True):
            cell = _Cell(bounds, open_spanning)
            high = bounds[1]

            while pending is not None and (high is None or pending.key < high):
                cell.add_edge(pending.index // 2, pending.record, strip)
                cell_allocation.resize(WORDS_PER_LOCAL * len(cell.locals) * word)
                pending = next(events, None)

            open_spanning = cell.simplifier.z
            strip_total += _close_cell(source, y_pile, cell, strip, budget, word).total
            cell_allocation.resize(0)
            cells += 1

    assert pending is None and open_spanning == 0
    logging.debug(f"Strip [{strip[0]}, {strip[1]}): {cells} cells, area {strip_total}")
    return strip_total


def measure_unsorted(source: RecordSource, s: int, budget: BitBudget) -> int:
    """
    Multi-scan: per horizontal strip, a horizontal sweep closes cells of about s / lg n local edges, and each
    closed cell pauses it for a vertical sweep over the strip

    Strip and cell bounds come from piles as the sweeps advance, none of them is stored.
    """
    n = len(source)
    m = max(1, ceil_sqrt(n * lg(n), s))
    per_strip = max(1, ceil_div(2 * n, m))
    logging.info(f"Klee's measure on {n} rectangles, about {m} horizontal strips of {per_strip} edges")

    total = 0
    with NavPile(EdgeTape(source, Axis.Y), edge_coord, budget, s) as strip_pile, NavPile(
        EdgeTape(source, Axis.X), edge_coord, budget, s
    ) as x_pile, NavPile(EdgeTape(source, Axis.Y), edge_coord, budget, s) as y_pile, budget.alloc(
        0, "cell rectangles"
    ) as cell_allocation:
        for strip in iter_strips((entry.key for entry in strip_pile), per_strip, isolate_runs=True):
            total += _unsorted_strip(source, s, budget, strip, x_pile, y_pile, cell_allocation)

    return total


def klee_measure(
    source: RecordSource, s: int, sorted_input: bool = False, budget: Optional[BitBudget] = None
) -> int:
    """
    Area of the union of the rectangles
    """
    kind = getattr(source, "kind", TapeKind.RECTANGLES)
    if kind != TapeKind.RECTANGLES:
        raise UsageError(f"Klee's measure runs on rectangles, got {kind}")

    n = len(source)
    if n == 0:
        return 0

    if budget is None:
        budget = BitBudget.for_run(Algorithm.KLEE, n, s)

    with budget.scope():
        if sorted_input:
            return measure_sorted(source, s, budget)
        return measure_unsorted(source, s, budget)
