from dataclasses import dataclass

from spacesweep.common_utils.fields import CrossingKind


@dataclass(frozen=True)
class Crossing:
    i: int
    j: int
    kind: CrossingKind

    def __post_init__(self):
        assert self.i < self.j

    def __str__(self):
        return f"{self.i} {self.j} {self.kind}"
