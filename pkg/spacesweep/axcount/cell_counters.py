from typing import List

from spacesweep.budget import BitBudget

# b, f and t
WORDS_PER_CELL = 3


class CellCounters:
    """
    Per-cell counts of segments of one orientation, laid out along their own axis

    For horizontals a line is a row and positions are columns, for verticals a line is a column and
    positions are rows. b counts segments beginning at a position, f those finishing there and t those
    doing both.
    """

    def __init__(self, lines: int, positions: int, budget: BitBudget, word_bits: int, label: str = "cell counters"):
        self.lines = lines
        self.positions = positions
        self.b: List[int] = [0] * (lines * positions)
        self.f: List[int] = [0] * (lines * positions)
        self.t: List[int] = [0] * (lines * positions)
        self._allocation = budget.alloc(WORDS_PER_CELL * lines * positions * word_bits, label)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.free()

    def free(self):
        self._allocation.free()

    def add(self, line: int, begin: int, finish: int):
        assert begin <= finish
        self.b[line * self.positions + begin] += 1
        self.f[line * self.positions + finish] += 1
        if begin == finish:
            self.t[line * self.positions + begin] += 1

    def spanning(self, line: int) -> List[int]:
        """
        Segments of the line strictly spanning each position, through e_0 = 0 and e_j = e_(j-1) + b_(j-1) - f_(j-1)
        """
        base = line * self.positions
        out = []
        entering = 0
        for j in range(self.positions):
            if j > 0:
                entering += self.b[base + j - 1] - self.f[base + j - 1]
            assert entering >= 0
            assert self.t[base + j] <= min(self.b[base + j], self.f[base + j])

            spanning = entering - self.f[base + j] + self.t[base + j]
            assert spanning >= 0
            out.append(spanning)

        return out
