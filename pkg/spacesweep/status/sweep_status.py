"""
Succinct sweep-line status of one vertical strip

The vertical segments spanning cells of the strip are stored once, as indices. Every cell row gets a bit
vector over those indices with rank-select, so the verticals spanning a cell are scanned in O(1) each.
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from spacesweep.budget import BitBudget, BitVector, RankSelect
from spacesweep.common_utils.arithmetic import lg
from spacesweep.common_utils.axis_segments import is_vertical, vertical_extent
from spacesweep.grid import StripGrid, truncate_to_spanned
from spacesweep import stretch
from spacesweep.tape import RecordSource

# (index, ylo, yhi) of a vertical cut down to whole cells
SpanningVertical = Tuple[int, int, int]


class InvalidStatusInput(Exception):
    ...


class SweepStatus:
    def __init__(
        self,
        strip: int,
        grid_y: StripGrid,
        spanning: Sequence[SpanningVertical],
        budget: BitBudget,
        word_bits: int,
    ):
        self.strip = strip
        self.grid_y = grid_y
        separators = set(grid_y.separators)

        for idx, ylo, yhi in spanning:
            if ylo not in separators or yhi not in separators or ylo >= yhi:
                raise InvalidStatusInput(f"Vertical {idx} [{ylo}, {yhi}] does not run separator to separator")

        self.spanning_ids: List[int] = [idx for idx, _, _ in spanning]
        self._ids_allocation = budget.alloc(len(self.spanning_ids) * word_bits, "status ids")

        self.cell_bits: List[BitVector] = []
        self.cell_rs: List[RankSelect] = []
        for row in range(grid_y.m):
            bits = BitVector(len(self.spanning_ids), budget, f"cell {row} bits")
            low, high = grid_y.bounds(row)
            if low is not None and high is not None:
                for t, (_, ylo, yhi) in enumerate(spanning):
                    if ylo <= low and high <= yhi:
                        bits.set(t)

            self.cell_bits.append(bits)
            self.cell_rs.append(RankSelect(bits, budget))

    def __repr__(self):
        return f"<SweepStatus strip={self.strip} spanning={len(self.spanning_ids)}>"

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.free()

    def free(self):
        for rs, bits in zip(self.cell_rs, self.cell_bits):
            rs.free()
            bits.free()
        self._ids_allocation.free()

    def query_cell(self, row: int) -> Iterator[int]:
        """
        Indices of the verticals spanning cell row of the strip, in stored order
        """
        assert 0 <= row < self.grid_y.m
        for t in self.cell_rs[row]:
            yield self.spanning_ids[t]

    def locate_row(self, y: int) -> int:
        return self.grid_y.locate(y)


def truncated_vertical(idx: int, seg, grid_y: StripGrid) -> Optional[SpanningVertical]:
    """
    The vertical cut to the rows it strictly spans, None when it spans none
    """
    truncated = truncate_to_spanned(seg, grid_y, strict=True)
    if truncated is None:
        return None
    return idx, truncated[1], truncated[3]


def spanning_member(grid_x: StripGrid, grid_y: StripGrid, strip: int):
    """
    Selects the verticals of strip that strictly span at least one row
    """

    def member(idx: int, seg) -> bool:
        if not is_vertical(seg) or grid_x.locate(seg[0]) != strip:
            return False
        ylo, yhi, _ = vertical_extent(seg)
        return grid_y.span_range(ylo, yhi, strict=True) is not None

    return member


def build(
    source: RecordSource,
    grid_x: StripGrid,
    grid_y: StripGrid,
    strip: int,
    budget: BitBudget,
    ranks: Optional[range] = None,
) -> SweepStatus:
    """
    Status of the verticals of strip spanning at least one cell, one scan of the source

    With ranks, only those of the strip's spanning verticals whose rank falls in it.
    """
    member = spanning_member(grid_x, grid_y, strip)
    word = lg(max(len(source), 1))
    selected = stretch.materialize(source, member, [ranks if ranks is not None else range(len(source))])

    with budget.alloc(0, "status build") as held:
        spanning = []
        for idx, seg in selected:
            truncated = truncated_vertical(idx, seg, grid_y)
            assert truncated is not None
            spanning.append(truncated)
            held.resize(3 * len(spanning) * word)

        status = SweepStatus(strip, grid_y, spanning, budget, word)

    logging.debug(f"Built {status!r}")
    return status
