from dataclasses import astuple, dataclass


@dataclass(frozen=True)
class BenchRow:
    algo: str
    n: int
    s: int
    wall_ns: int
    peak_bits: int
    tape_reads: int
    # Output size of the run: pairs found, area, dist2 or records streamed
    k: int

    def as_csv_row(self) -> tuple:
        return astuple(self)
