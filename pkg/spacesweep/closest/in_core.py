"""
Classic divide and conquer closest pair over points held in the workspace

Points are (x, y, index) triples. Distances stay squared, ties go to the smallest (index, index) pair.
"""
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from spacesweep.budget import BitBudget
from spacesweep.dataclasses import PairResult

Point = Tuple[int, int, int]

# x, y and index
WORDS_PER_POINT = 3


def pair_result(p: Point, q: Point) -> PairResult:
    dist2 = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
    i, j = sorted((p[2], q[2]))
    return PairResult(dist2, i, j)


def _better(best: Optional[PairResult], candidate: PairResult) -> PairResult:
    return candidate if best is None or candidate < best else best


def _solve(by_x: List[Point]) -> Tuple[Optional[PairResult], List[Point]]:
    """
    Best pair of a slice sorted by x, and the slice sorted by (y, index)
    """
    if len(by_x) <= 3:
        best = None
        for p, q in combinations(by_x, 2):
            best = _better(best, pair_result(p, q))
        return best, sorted(by_x, key=lambda p: (p[1], p[2]))

    mid = len(by_x) // 2
    mid_x = by_x[mid][0]

    left_best, left_by_y = _solve(by_x[:mid])
    right_best, right_by_y = _solve(by_x[mid:])

    best = left_best
    if right_best is not None:
        best = _better(best, right_best)

    # Merge by (y, index)
    by_y: List[Point] = []
    a = b = 0
    while a < len(left_by_y) or b < len(right_by_y):
        if b == len(right_by_y) or (
            a < len(left_by_y) and (left_by_y[a][1], left_by_y[a][2]) < (right_by_y[b][1], right_by_y[b][2])
        ):
            by_y.append(left_by_y[a])
            a += 1
        else:
            by_y.append(right_by_y[b])
            b += 1

    assert best is not None

    # Non-strict bounds, pairs at exactly the current distance can still win the tie-break
    strip = [p for p in by_y if (p[0] - mid_x) ** 2 <= best.dist2]
    for a, p in enumerate(strip):
        for q in strip[a + 1 :]:
            if (q[1] - p[1]) ** 2 > best.dist2:
                break
            best = _better(best, pair_result(p, q))

    return best, by_y


def closest_in_core(points: Sequence[Point], budget: BitBudget, word_bits: int) -> Optional[PairResult]:
    """
    Closest pair among the points, None for fewer than two
    """
    if len(points) < 2:
        return None

    with budget.alloc(WORDS_PER_POINT * len(points) * word_bits, "in-core closest pair"):
        best, _ = _solve(sorted(points))

    return best
