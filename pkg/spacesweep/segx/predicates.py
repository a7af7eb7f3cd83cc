"""
Exact integer predicates on segments (x1, y1, x2, y2)

Points compare lexicographically by (x, y). Intersection points of integer segments are rational and
carried as Fractions.
"""
from fractions import Fraction
from typing import Optional, Tuple

from spacesweep.common_utils.fields import CrossingKind

Segment = Tuple[int, int, int, int]
Point = Tuple[Fraction, Fraction]


def cross(ax: int, ay: int, bx: int, by: int) -> int:
    return ax * by - ay * bx


def orientation(p, q, r) -> int:
    """
    1 for a left turn p -> q -> r, -1 for a right turn, 0 when collinear
    """
    value = cross(q[0] - p[0], q[1] - p[1], r[0] - p[0], r[1] - p[1])
    return (value > 0) - (value < 0)


def endpoints(seg: Segment) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    (lexicographically smaller end, larger end)
    """
    a, b = (seg[0], seg[1]), (seg[2], seg[3])
    return (a, b) if a <= b else (b, a)


def is_point(seg: Segment) -> bool:
    return seg[0] == seg[2] and seg[1] == seg[3]


def on_segment(p, seg: Segment) -> bool:
    lo, hi = endpoints(seg)
    return orientation(lo, hi, p) == 0 and lo <= tuple(p) <= hi


def _intersection(a: Segment, b: Segment) -> Optional[Tuple[CrossingKind, Point]]:
    """
    Kind of intersection and the first common point
    """
    a_lo, a_hi = endpoints(a)
    b_lo, b_hi = endpoints(b)

    if is_point(a) or is_point(b):
        p, other = (a_lo, b) if is_point(a) else (b_lo, a)
        if not on_segment(p, other):
            return None
        other_lo, other_hi = endpoints(other)
        kind = CrossingKind.TOUCH if p in (other_lo, other_hi) else CrossingKind.PROPER
        return kind, (Fraction(p[0]), Fraction(p[1]))

    dax, day = a_hi[0] - a_lo[0], a_hi[1] - a_lo[1]
    dbx, dby = b_hi[0] - b_lo[0], b_hi[1] - b_lo[1]
    wx, wy = b_lo[0] - a_lo[0], b_lo[1] - a_lo[1]

    d = cross(dax, day, dbx, dby)

    if d == 0:
        if cross(wx, wy, dax, day) != 0:
            return None

        # Collinear, the common part is [max of lows, min of highs] in lexicographic order
        first, last = max(a_lo, b_lo), min(a_hi, b_hi)
        if first > last:
            return None
        kind = CrossingKind.TOUCH if first == last else CrossingKind.OVERLAP
        return kind, (Fraction(first[0]), Fraction(first[1]))

    tn = cross(wx, wy, dbx, dby)
    un = cross(wx, wy, dax, day)
    if d < 0:
        d, tn, un = -d, -tn, -un

    if not (0 <= tn <= d and 0 <= un <= d):
        return None

    point = (a_lo[0] + Fraction(tn * dax, d), a_lo[1] + Fraction(tn * day, d))
    kind = CrossingKind.TOUCH if tn in (0, d) and un in (0, d) else CrossingKind.PROPER
    return kind, point


def pair_intersects(a: Segment, b: Segment) -> Optional[CrossingKind]:
    """
    OVERLAP when collinear with more than one common point, TOUCH for a single point that is an end of both,
    PROPER for a single point inside at least one of them, None when disjoint
    """
    result = _intersection(a, b)
    return result[0] if result else None


def first_common_point(a: Segment, b: Segment) -> Optional[Point]:
    result = _intersection(a, b)
    return result[1] if result else None


def single_common_point(a: Segment, b: Segment) -> Optional[Point]:
    """
    The common point of a pair meeting in exactly one point, None otherwise
    """
    result = _intersection(a, b)
    if result is None or result[0] == CrossingKind.OVERLAP:
        return None
    return result[1]


def format_point(point: Point) -> str:
    """
    Reduced fractions "p/q r/t"
    """
    return " ".join(f"{c.numerator}/{c.denominator}" for c in point)
