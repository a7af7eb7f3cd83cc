"""
One function per subcommand, each returns the exit code of a successful run
"""
import argparse
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Set, TextIO, Tuple

from tabulate import tabulate

from spacesweep.axcount import count_axis
from spacesweep.axenum import enumerate_axis
from spacesweep.bench import bench, bench_instance, target_setup, write_csv
from spacesweep.closest import closest_pair
from spacesweep.common_utils.arithmetic import lg
from spacesweep.common_utils.constants import ORACLE_MAX_N
from spacesweep.common_utils.errors import UsageError, VerificationMismatch
from spacesweep.common_utils.fields import TapeKind
from spacesweep.dataclasses import AxisCrossing, Crossing
from spacesweep.generators import Shape, generate, shape_kind
from spacesweep.klee import klee_measure
from spacesweep.oracle import bf_axis_intersections, bf_closest, bf_intersections, bf_measure
from spacesweep.run_models import BenchParams, GenParams, RunParams
from spacesweep.segx import count_crossings, enumerate_crossings, first_common_point, format_point
from spacesweep.tape import InputTape, format_records, load_tape

# Tape kind and axis-parallel validation per algorithm command
command_tapes: Dict[str, Tuple[TapeKind, bool]] = {
    "closest": (TapeKind.POINTS, False),
    "segx": (TapeKind.SEGMENTS, False),
    "axis": (TapeKind.SEGMENTS, True),
    "klee": (TapeKind.RECTANGLES, False),
}

# Differences shown when verify fails
MISMATCH_ROWS = 10


@contextmanager
def output(path: Optional[Path]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return

    try:
        file = open(path, "w")
    except OSError as e:
        raise UsageError(f"Cannot write {path}: {e.strerror}")

    with file:
        yield file


def space_bound(params: RunParams, n: int) -> int:
    """
    --space-bits, n lg n by default, never below the lg n bits of a single index
    """
    word = lg(max(n, 1))
    s = params.space_bits if params.space_bits is not None else max(n, 1) * word
    if s < word:
        raise UsageError(f"--space-bits {s} is below lg n = {word}, a single index into the input needs that much")
    return s


def load(command: str, params: RunParams) -> InputTape:
    if params.input is None:
        raise UsageError(f"{command} needs --input")

    kind, axis_parallel = command_tapes[command]
    return load_tape(params.input, kind, axis_parallel=axis_parallel)


def _run_params(args: argparse.Namespace) -> RunParams:
    return RunParams(input=args.input, space_bits=args.space_bits, seed=args.seed, out=args.out)


def run_algorithm(args: argparse.Namespace) -> int:
    params = _run_params(args)
    tape = load(args.command, params)
    s = space_bound(params, len(tape))
    logging.info(f"Running {args.command} on n={len(tape)} with s={s}")

    with output(params.out) as out:
        if args.command == "closest":
            out.write(f"{closest_pair(tape, s)}\n")

        elif args.command == "segx" and args.mode == "enum":

            def write_crossing(crossing: Crossing):
                line = str(crossing)
                if args.points:
                    point = first_common_point(tape.get(crossing.i), tape.get(crossing.j))
                    assert point is not None
                    line += f" {format_point(point)}"
                out.write(line + "\n")

            enumerate_crossings(tape, s, write_crossing)

        elif args.command == "segx":
            out.write(f"{count_crossings(tape, s)}\n")

        elif args.command == "axis" and args.mode == "enum":

            def write_axis_crossing(crossing: AxisCrossing):
                if not args.count_only:
                    out.write(f"{crossing}\n")

            k = enumerate_axis(tape, s, write_axis_crossing)
            if args.count_only:
                out.write(f"{k}\n")

        elif args.command == "axis":
            out.write(f"{count_axis(tape, s)}\n")

        elif args.command == "klee":
            out.write(f"{klee_measure(tape, s, sorted_input=args.sorted)}\n")

    return 0


def _mismatch(what: str, missing: List, extra: List) -> VerificationMismatch:
    rows = [("missing", str(item)) for item in missing[:MISMATCH_ROWS]]
    rows += [("unexpected", str(item)) for item in extra[:MISMATCH_ROWS]]
    table = tabulate(rows, headers=["", "result"])
    return VerificationMismatch(f"{what}: {len(missing)} missing, {len(extra)} unexpected\n{table}")


def _compare_sets(what: str, found: Set, expected: Set):
    if found != expected:
        raise _mismatch(what, sorted(expected - found, key=str), sorted(found - expected, key=str))


def run_verify(args: argparse.Namespace) -> int:
    params = _run_params(args)
    command = args.verified
    tape = load(command, params)
    n = len(tape)
    if n > ORACLE_MAX_N:
        raise UsageError(f"verify runs oracles up to n = {ORACLE_MAX_N}, got {n}")
    s = space_bound(params, n)

    if command == "closest":
        found, expected = closest_pair(tape, s), bf_closest(tape)
        if found != expected:
            raise _mismatch("closest", [expected], [found])
        summary = str(found)

    elif command == "segx":
        crossings: Set[Crossing] = set()
        k = enumerate_crossings(tape, s, crossings.add) if args.mode == "enum" else count_crossings(tape, s)
        oracle = bf_intersections(tape)
        if args.mode == "enum":
            _compare_sets("segx enum", crossings, oracle)
        elif k != len(oracle):
            raise VerificationMismatch(f"segx count: {k} pairs, the oracle finds {len(oracle)}")
        summary = str(k)

    elif command == "axis":
        axis_crossings: Set[AxisCrossing] = set()
        k = enumerate_axis(tape, s, axis_crossings.add) if args.mode == "enum" else count_axis(tape, s)
        axis_oracle = bf_axis_intersections(tape)
        if args.mode == "enum":
            _compare_sets("axis enum", axis_crossings, axis_oracle)
        elif k != len(axis_oracle):
            raise VerificationMismatch(f"axis count: {k} pairs, the oracle finds {len(axis_oracle)}")
        summary = str(k)

    else:
        area, expected_area = klee_measure(tape, s, sorted_input=args.sorted), bf_measure(tape)
        if area != expected_area:
            raise VerificationMismatch(f"klee: area {area}, the oracle finds {expected_area}")
        summary = str(area)

    with output(params.out) as out:
        out.write(f"ok {summary}\n")
    return 0


def run_gen(args: argparse.Namespace) -> int:
    params = GenParams(
        shape=args.shape,
        n=args.n,
        seed=args.seed,
        dup_rate=args.dup_rate,
        degenerate=args.degenerate,
        sorted=args.sorted,
        coord_limit=args.coord_limit,
        out=args.out,
    )
    records = generate(
        params.shape, params.n, params.seed, params.dup_rate, params.degenerate, params.sorted, params.coord_limit
    )

    with output(params.out) as out:
        out.write(format_records(records))
    return 0


def run_bench(args: argparse.Namespace) -> int:
    fields = dict(target=args.target, n=args.n, seed=args.seed, s_grid=args.s_grid, input=args.input, out=args.out)
    if args.repetitions is not None:
        fields["repetitions"] = args.repetitions
    params = BenchParams(**fields)

    if params.input is not None:
        _, shape = target_setup[params.target]
        tape = load_tape(params.input, shape_kind[shape], axis_parallel=shape == Shape.AXIS)
    else:
        tape = bench_instance(params.target, params.n, params.seed)

    with output(params.out) as out:
        rows = write_csv(bench(params.target, tape, params.s_grid, params.repetitions), out)

    logging.info(f"Wrote {rows} bench rows")
    return 0


def run_command(args: argparse.Namespace) -> int:
    if args.command == "gen":
        return run_gen(args)
    elif args.command == "bench":
        return run_bench(args)
    elif args.command == "verify":
        return run_verify(args)
    return run_algorithm(args)
