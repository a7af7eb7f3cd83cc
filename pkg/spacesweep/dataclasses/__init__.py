from .AxisCrossing import AxisCrossing
from .BatchPlan import BatchPlan
from .BenchRow import BenchRow
from .CellMeasure import CellMeasure
from .Crossing import Crossing
from .PairResult import PairResult
