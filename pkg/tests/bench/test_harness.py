import io

from spacesweep.bench import BenchTarget, bench, bench_instance, default_s_grid, write_csv
from spacesweep.common_utils.constants import BENCH_CSV_HEADER
from spacesweep.common_utils.fields import TapeKind
from spacesweep.dataclasses import BenchRow


def test_default_s_grid():
    assert default_s_grid(1024) == [10, 40, 160, 640, 2560, 10240]
    assert default_s_grid(1) == [1]
    assert default_s_grid(1024, points=2) == [10, 10240]


def test_bench_instance():
    tape = bench_instance(BenchTarget.AXIS_COUNT, 40, seed=1)
    assert tape.kind == TapeKind.SEGMENTS and tape.axis_parallel

    sorted_tape = bench_instance(BenchTarget.KLEE_SORTED, 40, seed=1)
    xs = [sorted_tape.get(i)[0] for i in range(40)]
    assert xs == sorted(xs)


def test_bench_rows():
    tape = bench_instance(BenchTarget.PILE_SORT, 64, seed=0)
    rows = list(bench(BenchTarget.PILE_SORT, tape, [6, 60], repetitions=2))

    assert [row.s for row in rows] == [6, 6, 60, 60]
    # Every record comes out once
    assert all(row.k == 64 and row.n == 64 and row.algo == "pile-sort" for row in rows)
    assert all(0 < row.peak_bits <= 4 * row.s for row in rows)
    assert all(row.tape_reads >= 64 for row in rows)


def test_bench_klee_rows_agree():
    tape = bench_instance(BenchTarget.KLEE, 30, seed=2)
    rows = list(bench(BenchTarget.KLEE, tape, [5, 50, 500]))

    # The area does not depend on the workspace
    assert len({row.k for row in rows}) == 1


def test_write_csv():
    out = io.StringIO()
    rows = [BenchRow("closest", 8, 24, 1000, 512, 40, 2)]

    assert write_csv(rows, out) == 1
    assert out.getvalue() == BENCH_CSV_HEADER + "\n" + "closest,8,24,1000,512,40,2\n"
