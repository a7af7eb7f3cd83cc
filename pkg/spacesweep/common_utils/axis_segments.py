"""
Helpers for axis-parallel segments (x1, y1, x2, y2)

A segment with x1 == x2 is vertical, degenerate single points included.
Every other axis-parallel segment is horizontal.
"""
import itertools
from typing import Dict, Iterable, List, Tuple

from spacesweep.common_utils.errors import UsageError

Segment = Tuple[int, int, int, int]


class NotAxisParallel(UsageError):
    ...


class CollinearOverlap(UsageError):
    ...


def is_vertical(seg: Segment) -> bool:
    return seg[0] == seg[2]


def is_horizontal(seg: Segment) -> bool:
    return seg[0] != seg[2] and seg[1] == seg[3]


def horizontal_extent(seg: Segment) -> Tuple[int, int, int]:
    """
    (x_lo, x_hi, y) of a horizontal segment
    """
    x1, y1, x2, _ = seg
    return min(x1, x2), max(x1, x2), y1


def vertical_extent(seg: Segment) -> Tuple[int, int, int]:
    """
    (y_lo, y_hi, x) of a vertical segment
    """
    x1, y1, _, y2 = seg
    return min(y1, y2), max(y1, y2), x1


def validate_axis_parallel(segments: Iterable[Segment]):
    """
    1. Every segment is horizontal or vertical
    2. Parallel segments on one line share at most a single point
    """
    lines: Dict[Tuple[bool, int], List[Tuple[int, int, int]]] = {}

    for idx, seg in enumerate(segments):
        if is_vertical(seg):
            lo, hi, line = vertical_extent(seg)
            lines.setdefault((True, line), []).append((lo, hi, idx))
        elif is_horizontal(seg):
            lo, hi, line = horizontal_extent(seg)
            lines.setdefault((False, line), []).append((lo, hi, idx))
        else:
            raise NotAxisParallel(f"Segment {idx} {seg} is neither horizontal nor vertical")

    for (vertical, line), extents in lines.items():
        extents.sort()
        reach, reach_idx = extents[0][1], extents[0][2]
        for lo, hi, idx in itertools.islice(extents, 1, None):
            if min(hi, reach) > lo:
                raise CollinearOverlap(
                    f"Segments {reach_idx} and {idx} overlap on the "
                    f"{'vertical' if vertical else 'horizontal'} line {line}"
                )
            if hi > reach:
                reach, reach_idx = hi, idx
