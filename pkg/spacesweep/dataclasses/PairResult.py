from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class PairResult:
    """
    Ordering is (dist2, i, j), so min() applies the lexicographic tie-break
    """

    dist2: int
    i: int
    j: int

    def __post_init__(self):
        assert self.i < self.j and self.dist2 >= 0

    def __str__(self):
        return f"{self.i} {self.j} {self.dist2}"
