from dataclasses import dataclass
from typing import Optional


@dataclass
class CellMeasure:
    local: int
    w_h: int
    w_v: int
    # None for an unbounded side
    width: Optional[int]
    height: Optional[int]

    @property
    def total(self) -> int:
        # Terms with a zero factor vanish even when the other side is unbounded
        total = self.local
        if self.w_h:
            assert self.height is not None
            total += self.w_h * self.height
        if self.w_v:
            assert self.width is not None
            total += self.w_v * self.width
        return total - self.w_h * self.w_v
