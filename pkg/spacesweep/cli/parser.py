import argparse

from spacesweep.bench import BenchTarget
from spacesweep.common_utils.constants import GEN_COORD_LIMIT, VERSION
from spacesweep.generators import Shape


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--input", help="Input file, one record per line")
    parser.add_argument("--space-bits", type=int, default=None, help="Workspace bound s, defaults to n lg n")
    parser.add_argument(
        "--seed", type=int, default=0, help="Checked as an unsigned 64 bit seed, the algorithms draw nothing at random"
    )
    parser.add_argument("--out", help="Output file, defaults to stdout")


def _add_algorithm_commands(subparsers):
    """
    The algorithm commands, shared by the top level and by verify
    """
    closest = subparsers.add_parser("closest", help="Closest pair of points, prints 'i j dist2'")
    _common(closest)

    segx = subparsers.add_parser("segx", help="Intersections of arbitrary segments")
    segx.add_argument("mode", choices=["enum", "count"])
    segx.add_argument("--points", action="store_true", help="Append the first common point of every pair")
    _common(segx)

    axis = subparsers.add_parser("axis", help="Intersections of horizontal and vertical segments")
    axis.add_argument("mode", choices=["enum", "count"])
    axis.add_argument("--count-only", action="store_true", help="Enumerate but only print the number of pairs")
    _common(axis)

    klee = subparsers.add_parser("klee", help="Area of the union of rectangles")
    klee.add_argument("--sorted", action="store_true", help="Input rectangles are ordered by xlo")
    _common(klee)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spacesweep",
        description="Plane-sweep geometry on a read-only input within a bounded workspace",
    )
    parser.add_argument("--version", action="version", version=VERSION)

    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_algorithm_commands(subparsers)

    gen = subparsers.add_parser("gen", help="Seeded random instance")
    gen.add_argument("shape", choices=[str(shape) for shape in Shape])
    gen.add_argument("-n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--dup-rate", type=float, default=0.0)
    gen.add_argument("--degenerate", action="store_true")
    gen.add_argument("--sorted", action="store_true", help="Order rectangles by xlo")
    gen.add_argument(
        "--coord-limit", type=int, default=GEN_COORD_LIMIT, help="Coordinates drawn from [-limit, limit]"
    )
    gen.add_argument("--out")

    verify = subparsers.add_parser("verify", help="Runs a command and its brute-force oracle, exits 3 on mismatch")
    verify_subparsers = verify.add_subparsers(dest="verified", required=True)
    _add_algorithm_commands(verify_subparsers)

    bench = subparsers.add_parser("bench", help="CSV of time and space over a grid of workspace bounds")
    bench.add_argument("target", choices=[str(target) for target in BenchTarget])
    bench.add_argument("-n", type=int, default=1024)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repetitions", type=int, default=None)
    bench.add_argument("--s-grid", default=None, help="Comma separated space bounds")
    bench.add_argument("--input")
    bench.add_argument("--out")

    return parser
