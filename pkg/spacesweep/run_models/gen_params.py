from pathlib import Path
from typing import Optional

from pydantic import BaseModel, validator

from spacesweep.common_utils.constants import COORD_LIMIT, GEN_COORD_LIMIT
from spacesweep.generators import Shape


class GenParams(BaseModel):
    shape: Shape
    n: int
    seed: int = 0
    dup_rate: float = 0.0
    degenerate: bool = False
    sorted: bool = False
    coord_limit: int = GEN_COORD_LIMIT
    out: Optional[Path] = None

    @validator("n")
    def positive_n(cls, value):
        if value < 1:
            raise ValueError("n must be positive")
        return value

    @validator("dup_rate")
    def rate(cls, value):
        if not 0.0 <= value <= 1.0:
            raise ValueError("dup rate must lie in [0, 1]")
        return value

    @validator("coord_limit")
    def limit_in_range(cls, value):
        if not 1 <= value <= COORD_LIMIT:
            raise ValueError(f"coordinate limit must lie in [1, {COORD_LIMIT}]")
        return value
