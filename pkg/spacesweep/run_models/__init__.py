from .run_params import RunParams
from .gen_params import GenParams
from .bench_params import BenchParams
