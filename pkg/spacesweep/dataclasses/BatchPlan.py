from dataclasses import dataclass
from typing import List

from spacesweep.common_utils.fields import CombineMode


@dataclass(frozen=True)
class BatchPlan:
    n: int
    r: int
    mode: CombineMode
    batches: List[range]

    def __len__(self):
        return len(self.batches)
