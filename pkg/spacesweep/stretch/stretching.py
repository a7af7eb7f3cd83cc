"""
Batch-pair combinators

The input is cut into contiguous batches of r records. Subproblems run one at a time in lexicographic
(i, j) order, so the workspace only ever holds a single subproblem.
"""
import logging
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, TypeVar

from spacesweep.common_utils.arithmetic import ceil_div
from spacesweep.common_utils.errors import UsageError
from spacesweep.common_utils.fields import CombineMode
from spacesweep.dataclasses import BatchPlan
from spacesweep.tape import RecordSource

T = TypeVar("T")


class BatchSizeError(UsageError):
    ...


def plan(n: int, r: int, mode: CombineMode = CombineMode.MIN) -> BatchPlan:
    if not 1 <= r <= n:
        raise BatchSizeError(f"Batch size {r} outside [1, {n}]")

    batches = [range(start, min(start + r, n)) for start in range(0, n, r)]
    assert len(batches) == ceil_div(n, r)

    return BatchPlan(n=n, r=r, mode=CombineMode(mode), batches=batches)


def batch_pairs(batch_plan: BatchPlan) -> Iterator[Tuple[int, int]]:
    for i in range(len(batch_plan)):
        for j in range(i + 1, len(batch_plan)):
            yield i, j


def run_min(
    batch_plan: BatchPlan,
    solve: Callable[[List[range]], Optional[T]],
    combine: Callable[[T, T], T] = min,  # type: ignore
) -> Optional[T]:
    """
    Combines solve(B_i ∪ B_j) over every batch pair, or solve(B_1) for a single batch

    solve gets the ranges of the subproblem and may return None when it has no answer.
    """
    if len(batch_plan) == 1:
        return solve([batch_plan.batches[0]])

    best: Optional[T] = None
    for i, j in batch_pairs(batch_plan):
        result = solve([batch_plan.batches[i], batch_plan.batches[j]])
        if result is None:
            continue
        best = result if best is None else combine(best, result)

    logging.debug(f"Combined {len(batch_plan) * (len(batch_plan) - 1) // 2} batch pairs")
    return best


def run_disjoint(
    batch_plan: BatchPlan,
    solve_within: Callable[[range], T],
    solve_cross: Callable[[range, range], T],
) -> Iterator[T]:
    """
    solve_within on every batch, then solve_cross on every batch pair

    solve_cross must only produce results between its two batches, then no result shows up twice.
    """
    for batch in batch_plan.batches:
        yield solve_within(batch)

    for i, j in batch_pairs(batch_plan):
        yield solve_cross(batch_plan.batches[i], batch_plan.batches[j])


def population(source: RecordSource, member: Callable[[int, Any], bool]) -> int:
    """
    Number of records of the source the predicate selects, one scan
    """
    return sum(1 for idx in range(len(source)) if member(idx, source.get(idx)))


def materialize(
    source: RecordSource, member: Callable[[int, Any], bool], ranges: Sequence[range]
) -> Iterator[Tuple[int, Any]]:
    """
    (index, record) of the selected records whose rank among all selected ones falls in ranges

    This is how an overflowing strip is cut into chunks without holding it.
    """
    rank = 0
    for idx in range(len(source)):
        record = source.get(idx)
        if not member(idx, record):
            continue
        if any(rank in r for r in ranges):
            yield idx, record
        rank += 1
