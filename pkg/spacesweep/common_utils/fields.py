from enum import Enum


class TapeKind(str, Enum):
    POINTS = "points"
    SEGMENTS = "segments"
    RECTANGLES = "rectangles"

    def __str__(self):
        return self.value


# Record width per kind
record_width = {
    TapeKind.POINTS: 2,
    TapeKind.SEGMENTS: 4,
    TapeKind.RECTANGLES: 4,
}


class Axis(str, Enum):
    X = "x"
    Y = "y"

    def __str__(self):
        return self.value


class CrossingKind(str, Enum):
    PROPER = "proper"
    TOUCH = "touch"
    OVERLAP = "overlap"

    def __str__(self):
        return self.value


class StripRelation(str, Enum):
    LOCAL = "local"
    SPANS = "spans"
    DISJOINT = "disjoint"

    def __str__(self):
        return self.value


class Algorithm(str, Enum):
    NAVPILE = "navpile"
    CLOSEST = "closest"
    SEGX = "segx"
    AXCOUNT = "axcount"
    AXENUM = "axenum"
    KLEE = "klee"

    def __str__(self):
        return self.value


class EventSide(str, Enum):
    OPEN = "open"
    CLOSE = "close"
    CORNER = "corner"

    def __str__(self):
        return self.value


class CombineMode(str, Enum):
    MIN = "min"
    DISJOINT = "disjoint"

    def __str__(self):
        return self.value
