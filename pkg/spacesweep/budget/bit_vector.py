"""
Packed bit vector with a two-level rank directory

Superblocks of SUPERBLOCK_BITS bits store absolute ranks, every payload word stores its rank relative to
its superblock. Select is a binary search over superblocks followed by a word scan.
"""
from bisect import bisect_left
from typing import Iterator, List, Optional

from spacesweep.budget.bit_budget import Allocation, BitBudget
from spacesweep.common_utils.arithmetic import ceil_div, lg
from spacesweep.common_utils.constants import SUPERBLOCK_BITS, WORD_BITS
from spacesweep.common_utils.errors import NotFound, UsageError

WORDS_PER_SUPERBLOCK = SUPERBLOCK_BITS // WORD_BITS

# A rank relative to its superblock is < SUPERBLOCK_BITS
RELATIVE_RANK_BITS = lg(SUPERBLOCK_BITS)


class BitVector:
    length: int
    payload: List[int]

    def __init__(self, length: int, budget: BitBudget, label: str = "bit vector"):
        if length < 0:
            raise UsageError(f"Negative bit vector length {length}")

        self.length = length
        self.payload = [0] * ceil_div(length, WORD_BITS)
        self._allocation: Allocation = budget.alloc(len(self.payload) * WORD_BITS, label)

    def __len__(self):
        return self.length

    def __getitem__(self, i: int) -> bool:
        self._check(i)
        return bool(self.payload[i // WORD_BITS] >> (i % WORD_BITS) & 1)

    def __str__(self):
        return "".join("1" if self[i] else "0" for i in range(self.length))

    @classmethod
    def from_bits(cls, bits: str, budget: BitBudget) -> "BitVector":
        """
        From a string like "10110", position 0 first
        """
        vector = cls(len(bits), budget)
        for i, bit in enumerate(bits):
            if bit == "1":
                vector.set(i)
        return vector

    def _check(self, i: int):
        if not 0 <= i < self.length:
            raise UsageError(f"Bit {i} outside [0, {self.length})")

    def set(self, i: int):
        self._check(i)
        self.payload[i // WORD_BITS] |= 1 << (i % WORD_BITS)

    def clear(self, i: int):
        self._check(i)
        self.payload[i // WORD_BITS] &= ~(1 << (i % WORD_BITS))

    def free(self):
        self._allocation.free()


class RankSelect:
    """
    Rank, select and forward scanning over a BitVector that no longer changes
    """

    def __init__(self, over: BitVector, budget: BitBudget):
        self.over = over

        self._superblock_ranks: List[int] = []
        self._word_ranks: List[int] = []

        total = 0
        for w, word in enumerate(over.payload):
            if w % WORDS_PER_SUPERBLOCK == 0:
                self._superblock_ranks.append(total)
            self._word_ranks.append(total - self._superblock_ranks[-1])
            total += word.bit_count()

        self.total = total
        self._allocation = budget.alloc(self.directory_bits, "rank directory")

    @property
    def directory_bits(self) -> int:
        return (
            len(self._word_ranks) * RELATIVE_RANK_BITS
            + len(self._superblock_ranks) * lg(self.over.length + 1)
        )

    def free(self):
        self._allocation.free()

    def rank(self, i: int) -> int:
        """
        Number of set bits among positions [0, i)
        """
        if not 0 <= i <= self.over.length:
            raise UsageError(f"rank({i}) outside [0, {self.over.length}]")

        w, offset = divmod(i, WORD_BITS)
        if w == len(self._word_ranks):
            return self.total

        below = self.over.payload[w] & ((1 << offset) - 1)
        return self._superblock_ranks[w // WORDS_PER_SUPERBLOCK] + self._word_ranks[w] + below.bit_count()

    def select(self, j: int) -> int:
        """
        Position of the j-th set bit, j starting at 1
        """
        if not 1 <= j <= self.total:
            raise NotFound(f"select({j}) with {self.total} set bits")

        # Last superblock whose absolute rank is below j
        superblock = bisect_left(self._superblock_ranks, j) - 1

        w = superblock * WORDS_PER_SUPERBLOCK
        last = min(w + WORDS_PER_SUPERBLOCK, len(self._word_ranks))
        while w + 1 < last and self._superblock_ranks[superblock] + self._word_ranks[w + 1] < j:
            w += 1

        word = self.over.payload[w]
        remaining = j - self._superblock_ranks[superblock] - self._word_ranks[w]
        for _ in range(remaining - 1):
            word &= word - 1

        return w * WORD_BITS + (word & -word).bit_length() - 1

    def next_one(self, i: int) -> Optional[int]:
        """
        Smallest set position >= i, None when there is none
        """
        if not 0 <= i <= self.over.length:
            raise UsageError(f"next_one({i}) outside [0, {self.over.length}]")

        w, offset = divmod(i, WORD_BITS)
        if w >= len(self.over.payload):
            return None

        word = self.over.payload[w] >> offset << offset
        while not word:
            w += 1
            if w == len(self.over.payload):
                return None
            word = self.over.payload[w]

        return w * WORD_BITS + (word & -word).bit_length() - 1

    def __iter__(self) -> Iterator[int]:
        position = self.next_one(0)
        while position is not None:
            yield position
            position = self.next_one(position + 1)
