from dataclasses import dataclass


@dataclass(frozen=True)
class AxisCrossing:
    i: int
    j: int
    x: int
    y: int

    def __post_init__(self):
        assert self.i < self.j

    def __str__(self):
        return f"{self.i} {self.j} {self.x} {self.y}"
