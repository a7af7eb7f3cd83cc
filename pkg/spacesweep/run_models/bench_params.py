from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, validator

from spacesweep.bench import BenchTarget
from spacesweep.common_utils.constants import BENCH_REPETITIONS


class BenchParams(BaseModel):
    target: BenchTarget
    n: int = 1024
    seed: int = 0
    repetitions: int = BENCH_REPETITIONS
    s_grid: Optional[List[int]] = None
    input: Optional[Path] = None
    out: Optional[Path] = None

    @validator("n", "repetitions")
    def positive(cls, value):
        if value < 1:
            raise ValueError("must be positive")
        return value

    @validator("s_grid", pre=True)
    def comma_separated(cls, value):
        if isinstance(value, str):
            value = [int(s) for s in value.split(",") if s.strip()]
        if value is not None and any(s < 1 for s in value):
            raise ValueError("space bits must be positive")
        return value
