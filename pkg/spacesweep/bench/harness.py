"""
Time/space trade-off measurements, one CSV row per (s, repetition)
"""
import csv
import logging
import time
from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, Optional, TextIO, Tuple

from spacesweep.axcount import count_axis
from spacesweep.axenum import enumerate_axis
from spacesweep.budget import BitBudget
from spacesweep.closest import closest_pair
from spacesweep.common_utils.arithmetic import lg
from spacesweep.common_utils.constants import BENCH_CSV_HEADER
from spacesweep.common_utils.fields import Algorithm
from spacesweep.dataclasses import BenchRow
from spacesweep.generators import Shape, generate, shape_kind
from spacesweep.klee import klee_measure
from spacesweep.navpile import key_x, pile_sort
from spacesweep.segx import count_crossings, enumerate_crossings
from spacesweep.tape import InputTape, RecordSource


class BenchTarget(str, Enum):
    CLOSEST = "closest"
    SEGX_ENUM = "segx-enum"
    SEGX_COUNT = "segx-count"
    AXIS_ENUM = "axis-enum"
    AXIS_COUNT = "axis-count"
    KLEE = "klee"
    KLEE_SORTED = "klee-sorted"
    PILE_SORT = "pile-sort"

    def __str__(self):
        return self.value


# Algorithm whose budget constant a target runs under, and the instance shape it is benchmarked on
target_setup: Dict[BenchTarget, Tuple[Algorithm, Shape]] = {
    BenchTarget.CLOSEST: (Algorithm.CLOSEST, Shape.POINTS),
    BenchTarget.SEGX_ENUM: (Algorithm.SEGX, Shape.SEGMENTS),
    BenchTarget.SEGX_COUNT: (Algorithm.SEGX, Shape.SEGMENTS),
    BenchTarget.AXIS_ENUM: (Algorithm.AXENUM, Shape.AXIS),
    BenchTarget.AXIS_COUNT: (Algorithm.AXCOUNT, Shape.AXIS),
    BenchTarget.KLEE: (Algorithm.KLEE, Shape.RECTS),
    BenchTarget.KLEE_SORTED: (Algorithm.KLEE, Shape.RECTS),
    BenchTarget.PILE_SORT: (Algorithm.NAVPILE, Shape.POINTS),
}


def default_s_grid(n: int, points: int = 6) -> List[int]:
    """
    Log-spaced space bounds from lg n to n lg n, both ends included
    """
    low, high = lg(max(n, 1)), max(n, 1) * lg(max(n, 1))
    if points < 2 or low >= high:
        return [low]

    grid = [round(low * (high / low) ** (i / (points - 1))) for i in range(points)]
    return sorted(set(grid))


def bench_instance(target: BenchTarget, n: int, seed: int) -> InputTape:
    _, shape = target_setup[BenchTarget(target)]
    records = generate(shape, n, seed, sort=target == BenchTarget.KLEE_SORTED)
    return InputTape(shape_kind[shape], records, axis_parallel=shape == Shape.AXIS)


def _runner(target: BenchTarget) -> Callable[[RecordSource, int, BitBudget], int]:
    def discard(_):
        pass

    if target == BenchTarget.CLOSEST:
        return lambda tape, s, budget: closest_pair(tape, s, budget).dist2
    elif target == BenchTarget.SEGX_ENUM:
        return lambda tape, s, budget: enumerate_crossings(tape, s, discard, budget)
    elif target == BenchTarget.SEGX_COUNT:
        return lambda tape, s, budget: count_crossings(tape, s, budget)
    elif target == BenchTarget.AXIS_ENUM:
        return lambda tape, s, budget: enumerate_axis(tape, s, discard, budget)
    elif target == BenchTarget.AXIS_COUNT:
        return lambda tape, s, budget: count_axis(tape, s, budget)
    elif target == BenchTarget.KLEE:
        return lambda tape, s, budget: klee_measure(tape, s, False, budget)
    elif target == BenchTarget.KLEE_SORTED:
        return lambda tape, s, budget: klee_measure(tape, s, True, budget)

    return lambda tape, s, budget: sum(1 for _ in pile_sort(tape, key_x, budget, s))


def bench(
    target: BenchTarget,
    tape: RecordSource,
    s_grid: Optional[Iterable[int]] = None,
    repetitions: int = 1,
) -> Iterator[BenchRow]:
    target = BenchTarget(target)
    algorithm, _ = target_setup[target]
    run = _runner(target)
    n = len(tape)

    for s in s_grid or default_s_grid(n):
        for _ in range(repetitions):
            budget = BitBudget.for_run(algorithm, n, s)
            reads = tape.read_count()

            start = time.perf_counter_ns()
            k = run(tape, s, budget)
            wall_ns = time.perf_counter_ns() - start

            row = BenchRow(str(target), n, s, wall_ns, budget.peak_bits, tape.read_count() - reads, k)
            logging.info(f"{row}")
            yield row


def write_csv(rows: Iterable[BenchRow], file: TextIO) -> int:
    writer = csv.writer(file, lineterminator="\n")
    writer.writerow(BENCH_CSV_HEADER.split(","))

    count = 0
    for row in rows:
        writer.writerow(row.as_csv_row())
        count += 1
    return count
