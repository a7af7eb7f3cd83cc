from pathlib import Path
from typing import Optional

from pydantic import BaseModel, validator


class RunParams(BaseModel):
    input: Optional[Path] = None
    space_bits: Optional[int] = None
    # Validated only, no algorithm draws random numbers
    seed: int = 0
    out: Optional[Path] = None

    @validator("space_bits")
    def positive_space(cls, value):
        if value is not None and value < 1:
            raise ValueError("space bits must be positive")
        return value

    @validator("seed")
    def unsigned_seed(cls, value):
        if not 0 <= value < 2**64:
            raise ValueError("seed must fit an unsigned 64 bit integer")
        return value
