from spacesweep.stretch.stretching import (
    BatchSizeError,
    plan,
    batch_pairs,
    run_min,
    run_disjoint,
    population,
    materialize,
)
