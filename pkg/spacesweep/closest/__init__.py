from spacesweep.closest.in_core import closest_in_core, pair_result
from spacesweep.closest.closest_pair import (
    closest_pair,
    direct,
    stretched,
    uses_direct,
    stretched_batch_size,
    is_candidate,
    vertical_pass,
    horizontal_pass,
)
