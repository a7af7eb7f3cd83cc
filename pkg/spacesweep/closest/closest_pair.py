import logging
from typing import List, Optional

from spacesweep.budget import BitBudget
from spacesweep.closest.in_core import Point, WORDS_PER_POINT, closest_in_core
from spacesweep.common_utils.arithmetic import clamp, lg, strip_capacity
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import Algorithm, Axis, CombineMode, TapeKind
from spacesweep.dataclasses import PairResult
from spacesweep.grid import StripGrid, build
from spacesweep.navpile import NavPile, key_x, key_y
from spacesweep import stretch
from spacesweep.tape import RecordSource, SubTape


def uses_direct(n: int, s: int) -> bool:
    """
    s >= sqrt(n) lg n, as s^2 >= n lg^2 n
    """
    return s * s >= n * lg(n) ** 2


def stretched_batch_size(n: int, s: int) -> int:
    """
    r = s^2 / lg^2 s, halved until a pair of batches fits the direct regime
    """
    r = clamp(s * s // lg(s) ** 2, 2, n)
    while r > 2 and not uses_direct(2 * r, s):
        r //= 2
    return r


def is_candidate(x: int, grid: StripGrid, dist2: Optional[int]) -> bool:
    """
    Within horizontal distance delta of a separator, checking the two around x is enough
    """
    if dist2 is None:
        return grid.m > 1

    strip = grid.locate(x)
    low, high = grid.bounds(strip)
    return (low is not None and (x - low) ** 2 <= dist2) or (high is not None and (high - x) ** 2 <= dist2)


def _better(best: Optional[PairResult], candidate: Optional[PairResult]) -> Optional[PairResult]:
    if candidate is None:
        return best
    return candidate if best is None or candidate < best else best


def vertical_pass(source: RecordSource, s: int, budget: BitBudget, grid: StripGrid) -> Optional[PairResult]:
    """
    Closest pair inside every vertical strip

    A strip overflowing its capacity through a run of equal x is solved chunk pair by chunk pair.
    """
    n = len(source)
    word = lg(n)
    capacity = grid.per_strip_capacity

    best: Optional[PairResult] = None
    for strip in range(grid.m):

        def member(idx, record, strip=strip) -> bool:
            return grid.locate(record[0]) == strip

        strip_population = stretch.population(source, member)
        if strip_population < 2:
            continue

        def solve(ranges) -> Optional[PairResult]:
            points: List[Point] = [(x, y, idx) for idx, (x, y) in stretch.materialize(source, member, ranges)]
            return closest_in_core(points, budget, word)

        chunks = stretch.plan(strip_population, min(capacity, strip_population), CombineMode.MIN)
        if len(chunks) > 1:
            logging.debug(f"Strip {strip} holds {strip_population} points, solving {len(chunks)} chunks")

        best = _better(best, stretch.run_min(chunks, solve))

    return best


def horizontal_pass(
    source: RecordSource, s: int, budget: BitBudget, grid: StripGrid, dist2: Optional[int]
) -> Optional[PairResult]:
    """
    Candidates streamed by y, grouped 8 m at a time, every pair of consecutive groups solved in-core
    """
    word = lg(len(source))
    group_size = 8 * grid.m

    best: Optional[PairResult] = None
    previous: List[Point] = []
    current: List[Point] = []

    with NavPile(source, key_y, budget, s) as pile, budget.alloc(0, "candidate groups") as groups:
        for entry in pile:
            x, y = entry.record
            if not is_candidate(x, grid, dist2):
                continue

            current.append((x, y, entry.index))
            groups.resize(WORDS_PER_POINT * (len(previous) + len(current)) * word)

            if len(current) == group_size:
                best = _better(best, closest_in_core(previous + current, budget, word))
                previous, current = current, []

        if current or not previous:
            best = _better(best, closest_in_core(previous + current, budget, word))

    return best


def direct(source: RecordSource, s: int, budget: BitBudget) -> PairResult:
    n = len(source)
    capacity = strip_capacity(n, s)

    with NavPile(source, key_x, budget, s) as pile:
        grid = build(pile, capacity, budget, Axis.X)

    with grid:
        logging.info(f"Closest pair on {n} points: {grid.m} vertical strips of {capacity}")

        delta = vertical_pass(source, s, budget, grid)
        if delta is not None and delta.dist2 == 0:
            return delta

        delta_prime = horizontal_pass(source, s, budget, grid, delta.dist2 if delta else None)

    best = _better(delta, delta_prime)
    assert best is not None
    return best


def stretched(source: RecordSource, s: int, budget: BitBudget) -> PairResult:
    n = len(source)
    r = stretched_batch_size(n, s)
    batch_plan = stretch.plan(n, r, CombineMode.MIN)

    logging.info(f"Closest pair on {n} points: {len(batch_plan)} batches of {r}")

    def solve(ranges) -> PairResult:
        sub = SubTape(source, ranges)
        result = direct(sub, s, budget)
        i, j = sub.source_index(result.i), sub.source_index(result.j)
        return PairResult(result.dist2, i, j)

    best = stretch.run_min(batch_plan, solve)
    assert best is not None
    return best


def closest_pair(source: RecordSource, s: int, budget: Optional[BitBudget] = None) -> PairResult:
    """
    The pair of points at minimum squared distance, smallest (i, j) among ties
    """
    n = len(source)
    if n < 2:
        raise UsageError(f"Closest pair needs at least 2 points, got {n}")
    kind = getattr(source, "kind", TapeKind.POINTS)
    if kind != TapeKind.POINTS:
        raise UsageError(f"Closest pair runs on points, got {kind}")

    if budget is None:
        budget = BitBudget.for_run(Algorithm.CLOSEST, n, s)

    with budget.scope():
        if uses_direct(n, s):
            return direct(source, s, budget)
        return stretched(source, s, budget)
