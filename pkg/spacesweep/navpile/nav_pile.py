"""
Bucket tournament realization of the adjustable navigation pile

The source is cut into b buckets of consecutive records. Each leaf caches the (key, index) of its bucket's
smallest record above the floor, the floor being the threshold or the last emitted pair. A segment tree of
bucket numbers holds the tournament winners. Emitting rescans one bucket and replays one root path.
"""
import logging
from typing import Any, Callable, Iterator, List, NamedTuple, Optional, Tuple, Union

from spacesweep.budget import BitBudget
from spacesweep.common_utils.arithmetic import ceil_div, lg
from spacesweep.tape import RecordSource

KeyFn = Callable[[Any], int]

# None is -inf, an int t streams keys > t, a (key, index) pair resumes after that element
Threshold = Union[None, int, Tuple[int, int]]


class PileEntry(NamedTuple):
    key: int
    index: int
    record: Any


def key_x(record) -> int:
    return record[0]


def key_y(record) -> int:
    return record[1]


def key_identity(record) -> int:
    return record


def descending(key: KeyFn) -> KeyFn:
    """
    Streams in nonincreasing original key order, entries carry the negated key
    """

    def negated(record) -> int:
        return -key(record)

    return negated


def bucket_count(s: int, n: int) -> int:
    """
    b = max(1, floor(s / (2 lg n))), never more buckets than records
    """
    return max(1, min(s // (2 * lg(max(n, 1))), max(n, 1)))


class NavPile:
    def __init__(
        self,
        source: RecordSource,
        key: KeyFn,
        budget: BitBudget,
        s: int,
        threshold: Threshold = None,
    ):
        self.source = source
        self.key = key
        self.n = len(source)

        self.b = bucket_count(s, self.n)
        self.bucket_size = max(1, ceil_div(self.n, self.b))
        self.buckets = max(1, ceil_div(self.n, self.bucket_size))

        self._size = 1
        while self._size < self.buckets:
            self._size *= 2

        word = lg(max(self.n, 1))
        self._allocation = budget.alloc(
            2 * self.buckets * word + (self.buckets - 1) * lg(self.buckets) + 2 * word,
            "navigation pile",
        )

        self._leaves: List[Optional[Tuple[int, int]]] = []
        self._tree: List[int] = []
        self.emitted = 0

        self.reset(threshold)

    def __repr__(self):
        return f"<NavPile n={self.n} buckets={self.buckets} emitted={self.emitted}>"

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.free()

    def free(self):
        self._allocation.free()

    def reset(self, threshold: Threshold = None):
        """
        Re-initializes the pile above a new threshold with one scan of the source
        """
        if threshold is None:
            self._floor: Optional[Tuple[int, int]] = None
        elif isinstance(threshold, tuple):
            self._floor = threshold
        else:
            self._floor = (threshold, self.n)

        self._leaves = [self._scan_bucket(bucket)[0] for bucket in range(self.buckets)]

        self._tree = [0] * (2 * self._size)
        for bucket in range(self._size):
            self._tree[self._size + bucket] = min(bucket, self.buckets - 1)
        for node in range(self._size - 1, 0, -1):
            self._tree[node] = self._match(self._tree[2 * node], self._tree[2 * node + 1])

    def _scan_bucket(self, bucket: int, emitted: int = -1) -> Tuple[Optional[Tuple[int, int]], Any]:
        """
        Smallest (key, index) above the floor in the bucket, plus the record at index emitted if met
        """
        best = None
        emitted_record = None

        for idx in range(bucket * self.bucket_size, min((bucket + 1) * self.bucket_size, self.n)):
            record = self.source.get(idx)
            if idx == emitted:
                emitted_record = record

            candidate = (self.key(record), idx)
            if self._floor is not None and candidate <= self._floor:
                continue
            if best is None or candidate < best:
                best = candidate

        return best, emitted_record

    def _match(self, a: int, b: int) -> int:
        left, right = self._leaves[a], self._leaves[b]
        if right is None:
            return a
        if left is None or right < left:
            return b
        return a

    def peek(self) -> Optional[Tuple[int, int]]:
        return self._leaves[self._tree[1]]

    def next(self) -> Optional[PileEntry]:
        """
        The smallest not yet emitted (key, index) above the threshold, None once exhausted
        """
        winner = self._tree[1]
        head = self._leaves[winner]
        if head is None:
            return None

        self._floor = head
        self._leaves[winner], record = self._scan_bucket(winner, emitted=head[1])

        node = (self._size + winner) // 2
        while node:
            self._tree[node] = self._match(self._tree[2 * node], self._tree[2 * node + 1])
            node //= 2

        self.emitted += 1
        return PileEntry(head[0], head[1], record)

    def stream_k(self, k: int) -> List[PileEntry]:
        out = []
        while len(out) < k:
            entry = self.next()
            if entry is None:
                break
            out.append(entry)
        return out

    def __iter__(self) -> Iterator[PileEntry]:
        while (entry := self.next()) is not None:
            yield entry


def pile_sort(source: RecordSource, key: KeyFn, budget: BitBudget, s: int) -> Iterator[PileEntry]:
    """
    Every record of the source in (key, index) order
    """
    with NavPile(source, key, budget, s) as pile:
        logging.debug(f"Sorting with {pile}")
        yield from pile
