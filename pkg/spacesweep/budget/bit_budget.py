import logging
from contextlib import contextmanager
from typing import List

from tabulate import tabulate

from spacesweep.common_utils.arithmetic import lg
from spacesweep.common_utils.constants import BUDGET_CONSTANTS
from spacesweep.common_utils.fields import Algorithm


class BudgetExceeded(Exception):
    """
    An algorithm held more workspace than its constant allows, this is a defect and never a user error
    """


class Allocation:
    """
    A live share of a BitBudget, usable as a context manager
    """

    def __init__(self, budget: "BitBudget", bits: int, label: str):
        self.budget = budget
        self.bits = 0
        self.label = label
        self.freed = False

        self.resize(bits)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.free()

    def __repr__(self):
        return f"<Allocation {self.label or '?'} {self.bits} bits>"

    def resize(self, bits: int):
        assert not self.freed
        if bits < 0:
            raise ValueError(f"Cannot allocate {bits} bits")

        self.budget._charge(bits - self.bits, self.label)
        self.bits = bits

    def free(self):
        if self.freed:
            return
        self.budget._charge(-self.bits, self.label)
        self.budget._allocations.remove(self)
        self.bits = 0
        self.freed = True


class BitBudget:
    """
    The Θ(s)-bit workspace of one algorithm run

    live_bits never exceeds capacity_bits, peak_bits is the high-water mark of live_bits.
    """

    capacity_bits: int
    live_bits: int
    peak_bits: int

    def __init__(self, capacity_bits: int, name: str = ""):
        self.capacity_bits = capacity_bits
        self.name = name
        self.live_bits = 0
        self.peak_bits = 0
        self._allocations: List[Allocation] = []

    @classmethod
    def for_run(cls, algorithm: Algorithm, n: int, s: int) -> "BitBudget":
        """
        Capacity C_algorithm * max(s, lg n), C from the constant table
        """
        constant = BUDGET_CONSTANTS[Algorithm(algorithm)]
        capacity = constant * max(s, lg(max(n, 1)))
        logging.debug(f"Budget for {algorithm} n={n} s={s}: {capacity} bits")

        return cls(capacity, name=str(algorithm))

    def __repr__(self):
        return f"<BitBudget {self.name} live={self.live_bits} peak={self.peak_bits} cap={self.capacity_bits}>"

    def __str__(self):
        rows = [(a.label or "?", a.bits) for a in self._allocations]
        rows.append(("live", self.live_bits))
        rows.append(("peak", self.peak_bits))
        rows.append(("capacity", self.capacity_bits))

        return tabulate(rows, headers=["allocation", "bits"], tablefmt="simple")

    def alloc(self, bits: int, label: str = "") -> Allocation:
        allocation = Allocation(self, bits, label)
        self._allocations.append(allocation)
        return allocation

    def _charge(self, delta: int, label: str):
        if self.live_bits + delta > self.capacity_bits:
            raise BudgetExceeded(
                f"{self.name or 'budget'}: {label or 'allocation'} needs {delta} more bits, "
                f"{self.live_bits}/{self.capacity_bits} already live"
            )

        self.live_bits += delta
        assert self.live_bits >= 0
        self.peak_bits = max(self.peak_bits, self.live_bits)

    @contextmanager
    def scope(self):
        """
        Every allocation made inside the block must be freed when it exits
        """
        baseline = self.live_bits
        yield self
        assert self.live_bits == baseline, f"Leaked {self.live_bits - baseline} bits\n{self}"


def alloc(budget: BitBudget, bits: int, label: str = "") -> Allocation:
    return budget.alloc(bits, label)


def words(count: int, universe: int) -> int:
    """
    Bits of count words indexing a source of universe records
    """
    return count * lg(max(universe, 1))
