"""
Seeded random instances for every tape kind

The seed alone determines the instance. dup_rate draws coordinates from the ones already used, degenerate
adds touching, collinear and nested cases. limit bounds the coordinates to [-limit, limit], a small limit gives
instances crowded with repeats.
"""
import random
from enum import Enum
from typing import List, Tuple

from spacesweep.common_utils.constants import GEN_COORD_LIMIT
from spacesweep.common_utils.fields import TapeKind


class Shape(str, Enum):
    POINTS = "points"
    SEGMENTS = "segments"
    AXIS = "axis"
    RECTS = "rects"

    def __str__(self):
        return self.value


shape_kind = {
    Shape.POINTS: TapeKind.POINTS,
    Shape.SEGMENTS: TapeKind.SEGMENTS,
    Shape.AXIS: TapeKind.SEGMENTS,
    Shape.RECTS: TapeKind.RECTANGLES,
}


class _Coordinates:
    """
    Uniform coordinates that repeat an earlier one with probability dup_rate
    """

    def __init__(self, rng: random.Random, dup_rate: float, limit: int = GEN_COORD_LIMIT):
        self.rng = rng
        self.dup_rate = dup_rate
        self.limit = limit
        self.used: List[int] = []

    def draw(self) -> int:
        if self.used and self.rng.random() < self.dup_rate:
            return self.rng.choice(self.used)

        value = self.rng.randint(-self.limit, self.limit)
        self.used.append(value)
        return value


def random_points(
    n: int, seed: int = 0, dup_rate: float = 0.0, degenerate: bool = False, limit: int = GEN_COORD_LIMIT
) -> List[Tuple[int, int]]:
    rng = random.Random(seed)
    xs, ys = _Coordinates(rng, dup_rate, limit), _Coordinates(rng, dup_rate, limit)

    points: List[Tuple[int, int]] = []
    for _ in range(n):
        if degenerate and points and rng.random() < 0.3:
            # We put the point on the vertical line of an earlier one
            points.append((rng.choice(points)[0], ys.draw()))
        else:
            points.append((xs.draw(), ys.draw()))

    return points


def random_segments(
    n: int, seed: int = 0, dup_rate: float = 0.0, degenerate: bool = False, limit: int = GEN_COORD_LIMIT
) -> List[Tuple[int, int, int, int]]:
    rng = random.Random(seed)
    coords = _Coordinates(rng, dup_rate, limit)

    segments: List[Tuple[int, int, int, int]] = []
    for _ in range(n):
        if degenerate and segments and rng.random() < 0.3:
            x1, y1, x2, y2 = rng.choice(segments)
            case = rng.randrange(3)
            if case == 0:
                # Shares an endpoint
                segments.append((x1, y1, coords.draw(), coords.draw()))
            elif case == 1 and (x1 + x2) % 2 == 0 and (y1 + y2) % 2 == 0:
                # Collinear overlap with its first half
                segments.append((x1, y1, (x1 + x2) // 2, (y1 + y2) // 2))
            else:
                # A single point sitting on the earlier endpoint
                segments.append((x2, y2, x2, y2))
        else:
            segments.append((coords.draw(), coords.draw(), coords.draw(), coords.draw()))

    return segments


def random_axis_segments(
    n: int, seed: int = 0, dup_rate: float = 0.0, degenerate: bool = False, limit: int = GEN_COORD_LIMIT
) -> List[Tuple[int, int, int, int]]:
    """
    Horizontals on pairwise distinct rows and verticals on pairwise distinct columns, so no two parallel
    segments ever share a line
    """
    rng = random.Random(seed)
    # Distinct lines need room for n of them even under a small limit
    span = max(limit, n // 2)
    rows = rng.sample(range(-span, span + 1), n)
    columns = rng.sample(range(-span, span + 1), n)
    xs, ys = _Coordinates(rng, dup_rate, limit), _Coordinates(rng, dup_rate, limit)

    segments: List[Tuple[int, int, int, int]] = []
    for k in range(n):
        if rng.random() < 0.5:
            y = rows[k]
            x1, x2 = xs.draw(), xs.draw()
            if degenerate and rng.random() < 0.3:
                # Ends exactly on a column
                x2 = rng.choice(columns)
            if x1 == x2:
                x2 = x1 + 1
            ys.used.append(y)
            segments.append((x1, y, x2, y))
        else:
            x = columns[k]
            y1, y2 = ys.draw(), ys.draw()
            if degenerate and rng.random() < 0.3:
                # Ends exactly on a row, or collapses to a point
                y2 = rng.choice(rows) if rng.random() < 0.7 else y1
            xs.used.append(x)
            segments.append((x, y1, x, y2))

    return segments


def random_rectangles(
    n: int,
    seed: int = 0,
    dup_rate: float = 0.0,
    degenerate: bool = False,
    sort: bool = False,
    limit: int = GEN_COORD_LIMIT,
) -> List[Tuple[int, int, int, int]]:
    rng = random.Random(seed)
    xs, ys = _Coordinates(rng, dup_rate, limit), _Coordinates(rng, dup_rate, limit)

    rects: List[Tuple[int, int, int, int]] = []
    for _ in range(n):
        if degenerate and rects and rng.random() < 0.3:
            xlo, ylo, xhi, yhi = rng.choice(rects)
            if rng.random() < 0.5 and xhi - xlo >= 3 and yhi - ylo >= 3:
                # Nested inside
                rects.append((xlo + 1, ylo + 1, xhi - 1, yhi - 1))
            else:
                # Touching along the edge facing the origin, chains of these never drift away
                width = rng.randint(1, 1 + limit // 8)
                if xlo + xhi > 0:
                    rects.append((xlo - width, ylo, xlo, yhi))
                else:
                    rects.append((xhi, ylo, xhi + width, yhi))
            continue

        x1, x2 = xs.draw(), xs.draw()
        y1, y2 = ys.draw(), ys.draw()
        if x1 == x2:
            x2 = x1 + 1
        if y1 == y2:
            y2 = y1 + 1
        rects.append((min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2)))

    if sort:
        rects.sort(key=lambda r: r[0])
    return rects


def generate(
    shape: Shape,
    n: int,
    seed: int = 0,
    dup_rate: float = 0.0,
    degenerate: bool = False,
    sort: bool = False,
    limit: int = GEN_COORD_LIMIT,
):
    shape = Shape(shape)
    if shape == Shape.POINTS:
        return random_points(n, seed, dup_rate, degenerate, limit)
    elif shape == Shape.SEGMENTS:
        return random_segments(n, seed, dup_rate, degenerate, limit)
    elif shape == Shape.AXIS:
        return random_axis_segments(n, seed, dup_rate, degenerate, limit)
    return random_rectangles(n, seed, dup_rate, degenerate, sort, limit)
