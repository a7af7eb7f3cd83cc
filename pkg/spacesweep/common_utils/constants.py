import os
from typing import Dict

from spacesweep.common_utils.fields import Algorithm

# logging level of the command line entry point
LOG_LEVEL = os.environ.get("SPACESWEEP_LOG_LEVEL") or "WARNING"

# oracles are quadratic, verify refuses larger inputs
ORACLE_MAX_N = int(os.environ.get("SPACESWEEP_ORACLE_MAX_N") or 4096)

# default number of timed runs per bench row
BENCH_REPETITIONS = int(os.environ.get("SPACESWEEP_BENCH_REPETITIONS") or 1)

VERSION = os.environ.get("VERSION") or "dev"

# input coordinates, |c| <= COORD_LIMIT keeps every product inside 64 bits
COORD_LIMIT = 2**30

# generated instances draw from [-GEN_COORD_LIMIT, GEN_COORD_LIMIT]
GEN_COORD_LIMIT = 2**20

# bit vector payload word
WORD_BITS = 64

# rank directory, absolute ranks every SUPERBLOCK_BITS bits
SUPERBLOCK_BITS = 2**12

BENCH_CSV_HEADER = "algo,n,s,wall_ns,peak_bits,tape_reads,k"

# Workspace multipliers: an algorithm run on n records with s bits gets C * max(s, lg n) bits
# Derivations are in DESIGN.md, tests pin these values
BUDGET_CONSTANTS: Dict[Algorithm, int] = {
    Algorithm.NAVPILE: 4,
    Algorithm.CLOSEST: 256,
    Algorithm.SEGX: 64,
    Algorithm.AXCOUNT: 256,
    Algorithm.AXENUM: 256,
    Algorithm.KLEE: 128,
}
