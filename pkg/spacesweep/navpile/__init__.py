from spacesweep.navpile.nav_pile import (
    NavPile,
    PileEntry,
    KeyFn,
    Threshold,
    key_x,
    key_y,
    key_identity,
    descending,
    bucket_count,
    pile_sort,
)
