import logging
from typing import Callable, List, Optional

from spacesweep.budget import BitBudget
from spacesweep.common_utils.arithmetic import clamp, lg
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import Algorithm, CombineMode, CrossingKind, TapeKind
from spacesweep.dataclasses import Crossing
from spacesweep import stretch
from spacesweep.segx.sweep import sweep
from spacesweep.tape import RecordSource, SubTape

Sink = Callable[[Crossing], None]


def batch_size(n: int, s: int) -> int:
    """
    r = s / lg s, clamped to [1, n]
    """
    return clamp(s // lg(s), 1, n)


def direct(
    source: RecordSource,
    s: int,
    budget: BitBudget,
    sink: Sink,
    split: Optional[int] = None,
) -> int:
    """
    One in-core sweep over the whole source, with split only pairs across it are reported
    """
    segments = [(idx, source.get(idx)) for idx in range(len(source))]
    found = 0

    def report(i: int, j: int, kind: CrossingKind):
        nonlocal found
        found += 1
        sink(Crossing(i, j, kind))

    sweep(segments, budget, lg(max(len(source), 1)), report, split)
    return found


def _solve(source: RecordSource, ranges: List[range], s: int, budget: BitBudget, sink: Sink) -> int:
    sub = SubTape(source, ranges)

    def relay(crossing: Crossing):
        i, j = sub.source_index(crossing.i), sub.source_index(crossing.j)
        sink(Crossing(min(i, j), max(i, j), crossing.kind))

    split = len(ranges[0]) if len(ranges) > 1 else None
    return direct(sub, s, budget, relay, split)


def enumerate_crossings(
    source: RecordSource, s: int, sink: Sink, budget: Optional[BitBudget] = None
) -> int:
    """
    Pushes every intersecting pair to the sink once, returns their number
    """
    n = len(source)
    kind = getattr(source, "kind", TapeKind.SEGMENTS)
    if kind != TapeKind.SEGMENTS:
        raise UsageError(f"Segment intersections run on segments, got {kind}")
    if n == 0:
        return 0

    if budget is None:
        budget = BitBudget.for_run(Algorithm.SEGX, n, s)

    r = batch_size(n, s)
    batch_plan = stretch.plan(n, r, CombineMode.DISJOINT)
    logging.info(f"Segment intersections on {n} segments: {len(batch_plan)} batches of {r}")

    with budget.scope():
        k = sum(
            stretch.run_disjoint(
                batch_plan,
                lambda batch: _solve(source, [batch], s, budget, sink),
                lambda first, second: _solve(source, [first, second], s, budget, sink),
            )
        )

    logging.info(f"Found {k} intersecting pairs")
    return k


def count_crossings(source: RecordSource, s: int, budget: Optional[BitBudget] = None) -> int:
    """
    Counting by enumeration into a sink that stores nothing
    """
    return enumerate_crossings(source, s, lambda crossing: None, budget)
