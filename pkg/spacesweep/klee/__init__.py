from spacesweep.klee.bentley import CoverageTree, Rect, bentley_measure
from spacesweep.klee.simplify import Simplifier, simplify_scan
from spacesweep.klee.measure import (
    UnsortedInput,
    area_relation,
    klee_measure,
    measure_sorted,
    measure_unsorted,
    spanning_runs,
)
