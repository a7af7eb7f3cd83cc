from spacesweep.grid.strip_grid import (
    StripGrid,
    build,
    build_from_keys,
    iter_separators,
    iter_strips,
    separator_between,
    truncate_to_spanned,
)
