"""
Quadratic references for every algorithm, none of them touches a BitBudget
"""
import itertools
from bisect import bisect_left
from typing import List, Optional, Set

from spacesweep.common_utils.axis_segments import horizontal_extent, is_vertical, vertical_extent
from spacesweep.dataclasses import AxisCrossing, Crossing, PairResult
from spacesweep.segx.predicates import pair_intersects
from spacesweep.tape import RecordSource


def _records(source: RecordSource) -> list:
    return [source.get(i) for i in range(len(source))]


def bf_closest(source: RecordSource) -> PairResult:
    points = _records(source)
    assert len(points) >= 2

    best: Optional[PairResult] = None
    for (i, (xi, yi)), (j, (xj, yj)) in itertools.combinations(enumerate(points), 2):
        candidate = PairResult((xi - xj) ** 2 + (yi - yj) ** 2, i, j)
        if best is None or candidate < best:
            best = candidate

    assert best is not None
    return best


def bf_intersections(source: RecordSource) -> Set[Crossing]:
    """
    Every intersecting pair with its kind, through the exact predicates
    """
    crossings: Set[Crossing] = set()
    for (i, a), (j, b) in itertools.combinations(enumerate(_records(source)), 2):
        kind = pair_intersects(a, b)
        if kind is not None:
            crossings.add(Crossing(i, j, kind))
    return crossings


def bf_axis_intersections(source: RecordSource) -> Set[AxisCrossing]:
    """
    Horizontal-vertical pairs whose closed extents meet, parallel pairs never count
    """
    segments = _records(source)
    verticals = [(idx, *vertical_extent(seg)) for idx, seg in enumerate(segments) if is_vertical(seg)]
    horizontals = [(idx, *horizontal_extent(seg)) for idx, seg in enumerate(segments) if not is_vertical(seg)]

    crossings: Set[AxisCrossing] = set()
    for h_idx, xlo, xhi, y in horizontals:
        for v_idx, ylo, yhi, x in verticals:
            if xlo <= x <= xhi and ylo <= y <= yhi:
                crossings.add(AxisCrossing(min(h_idx, v_idx), max(h_idx, v_idx), x, y))
    return crossings


def bf_measure(source: RecordSource) -> int:
    """
    Coverage counts on the compressed grid through a 2D difference array, then the covered cells' area
    """
    rects = [r for r in _records(source) if r[0] < r[2] and r[1] < r[3]]
    if not rects:
        return 0

    xs = sorted({x for r in rects for x in (r[0], r[2])})
    ys = sorted({y for r in rects for y in (r[1], r[3])})

    diff: List[List[int]] = [[0] * len(ys) for _ in xs]
    for xlo, ylo, xhi, yhi in rects:
        i0, i1 = bisect_left(xs, xlo), bisect_left(xs, xhi)
        j0, j1 = bisect_left(ys, ylo), bisect_left(ys, yhi)
        diff[i0][j0] += 1
        diff[i0][j1] -= 1
        diff[i1][j0] -= 1
        diff[i1][j1] += 1

    area = 0
    above = [0] * len(ys)
    for i in range(len(xs) - 1):
        running = 0
        for j in range(len(ys) - 1):
            running += diff[i][j]
            above[j] += running
            if above[j] > 0:
                area += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j])

    return area
