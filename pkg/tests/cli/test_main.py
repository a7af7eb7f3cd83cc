import pytest

from spacesweep.budget import BudgetExceeded
from spacesweep.cli import handle_error, main
from spacesweep.common_utils.errors import UsageError, VerificationMismatch


@pytest.fixture
def write_input(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_closest(write_input, capsys):
    path = write_input("pts.txt", "0 0\n3 4\n10 10\n")

    assert main(["closest", "--input", path, "--space-bits", "4096"]) == 0
    assert capsys.readouterr().out == "0 1 25\n"


def test_segx(write_input, capsys):
    path = write_input("segs.txt", "0 0 4 4\n0 4 4 0\n")

    assert main(["segx", "enum", "--input", path]) == 0
    assert capsys.readouterr().out == "0 1 proper\n"

    assert main(["segx", "enum", "--points", "--input", path]) == 0
    assert capsys.readouterr().out == "0 1 proper 2/1 2/1\n"

    assert main(["segx", "count", "--input", path]) == 0
    assert capsys.readouterr().out == "1\n"


def test_axis(write_input, capsys):
    path = write_input("axis.txt", "0 5 10 5\n4 0 4 10\n7 0 7 10\n")

    assert main(["axis", "enum", "--input", path]) == 0
    assert sorted(capsys.readouterr().out.splitlines()) == ["0 1 4 5", "0 2 7 5"]

    assert main(["axis", "enum", "--count-only", "--input", path]) == 0
    assert capsys.readouterr().out == "2\n"

    assert main(["axis", "count", "--input", path]) == 0
    assert capsys.readouterr().out == "2\n"


def test_klee(write_input, capsys):
    path = write_input("rects.txt", "0 0 2 2\n1 1 3 3\n")

    assert main(["klee", "--input", path]) == 0
    assert main(["klee", "--sorted", "--input", path, "--space-bits", "1"]) == 0
    assert capsys.readouterr().out == "7\n7\n"


def test_output_file(write_input, tmp_path):
    path = write_input("rects.txt", "0 0 3 4\n")
    out = tmp_path / "area.txt"

    assert main(["klee", "--input", path, "--out", str(out)]) == 0
    assert out.read_text() == "12\n"


def test_usage_errors(write_input, capsys):
    path = write_input("pts.txt", "\n".join(f"{i} {i * i}" for i in range(16)) + "\n")

    # s below lg n
    assert main(["closest", "--input", path, "--space-bits", "3"]) == 2
    assert "lg n" in capsys.readouterr().err

    assert main(["closest", "--input", path, "--space-bits", "0"]) == 2
    assert main(["closest"]) == 2
    assert main(["closest", "--input", path + ".missing"]) == 2

    bad = write_input("bad.txt", "1 2 3\n")
    assert main(["closest", "--input", bad]) == 2

    diagonal = write_input("diag.txt", "0 0 1 1\n")
    assert main(["axis", "count", "--input", diagonal]) == 2

    # argparse errors
    assert main(["klee", "--space-bits", "many"]) == 2
    assert main([]) == 2


def test_verify(write_input, capsys):
    path = write_input("axis.txt", "0 5 10 5\n4 0 4 10\n7 0 7 10\n0 8 10 8\n")

    assert main(["verify", "axis", "count", "--input", path, "--space-bits", "512"]) == 0
    assert capsys.readouterr().out == "ok 4\n"

    assert main(["verify", "axis", "enum", "--input", path]) == 0
    assert main(["verify", "segx", "enum", "--input", path]) == 0

    points = write_input("pts.txt", "0 0\n3 4\n10 10\n")
    assert main(["verify", "closest", "--input", points]) == 0

    rects = write_input("rects.txt", "0 0 2 2\n1 1 3 3\n")
    assert main(["verify", "klee", "--input", rects]) == 0
    assert capsys.readouterr().out.splitlines()[-2:] == ["ok 0 1 25", "ok 7"]


def test_verify_mismatch(write_input, monkeypatch, capsys):
    rects = write_input("rects.txt", "0 0 2 2\n")
    monkeypatch.setattr("spacesweep.cli.commands.bf_measure", lambda tape: 5)

    assert main(["verify", "klee", "--input", rects]) == 3
    assert "verification failed" in capsys.readouterr().err


def test_budget_exceeded(write_input, monkeypatch):
    rects = write_input("rects.txt", "0 0 2 2\n")

    def overflowing(*args, **kwargs):
        raise BudgetExceeded("klee: too much")

    monkeypatch.setattr("spacesweep.cli.commands.klee_measure", overflowing)

    assert main(["klee", "--input", rects]) == 4


def test_handle_error():
    assert handle_error(UsageError("bad")) == 2
    assert handle_error(VerificationMismatch("different")) == 3
    assert handle_error(BudgetExceeded("over")) == 4

    # Anything else is a bug and propagates
    with pytest.raises(KeyError):
        handle_error(KeyError("unexpected"))


def test_gen(tmp_path, capsys):
    assert main(["gen", "points", "-n", "5", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert len(first.splitlines()) == 5

    out = tmp_path / "pts.txt"
    assert main(["gen", "points", "-n", "5", "--seed", "3", "--out", str(out)]) == 0
    assert out.read_text() == first

    # Generated files feed straight back into the algorithms
    assert main(["gen", "axis", "-n", "30", "--degenerate", "--out", str(tmp_path / "axis.txt")]) == 0
    assert main(["verify", "axis", "enum", "--input", str(tmp_path / "axis.txt")]) == 0

    assert main(["gen", "points", "-n", "0"]) == 2
    assert main(["gen", "rects", "-n", "5", "--dup-rate", "2"]) == 2


def test_bench(tmp_path):
    out = tmp_path / "bench.csv"

    assert main(["bench", "closest", "-n", "32", "--s-grid", "5,50", "--out", str(out)]) == 0

    lines = out.read_text().splitlines()
    assert lines[0] == "algo,n,s,wall_ns,peak_bits,tape_reads,k"
    assert [line.split(",")[2] for line in lines[1:]] == ["5", "50"]

    assert main(["bench", "closest", "--s-grid", "0,5"]) == 2
    assert main(["bench", "nothing"]) == 2


def test_version(capsys):
    assert main(["--version"]) == 0


def test_gen_coord_limit(capsys):
    assert main(["gen", "rects", "-n", "20", "--seed", "1", "--coord-limit", "4"]) == 0
    records = [tuple(map(int, line.split())) for line in capsys.readouterr().out.splitlines()]

    assert len(records) == 20
    # Corners are drawn inside the limit, a collapsed side grows by one
    assert all(-4 <= c <= 5 for record in records for c in record)

    assert main(["gen", "rects", "-n", "5", "--coord-limit", "0"]) == 2


def test_seed_leaves_algorithms_alone(write_input, capsys):
    path = write_input("pts.txt", "0 0\n3 4\n10 10\n3 4\n")

    assert main(["closest", "--input", path]) == 0
    assert main(["closest", "--input", path, "--seed", "99"]) == 0
    assert capsys.readouterr().out == "1 3 0\n1 3 0\n"

    assert main(["closest", "--input", path, "--seed", "-1"]) == 2
    assert main(["closest", "--input", path, "--seed", str(2**64)]) == 2


@pytest.mark.parametrize(
    "command",
    [
        ["closest", "--space-bits", "8"],
        ["segx", "enum", "--points"],
        ["segx", "count", "--space-bits", "40"],
        ["axis", "enum", "--space-bits", "8"],
        ["axis", "count"],
        ["klee", "--space-bits", "8"],
    ],
)
def test_repeated_runs_print_the_same_bytes(tmp_path, capsys, command):
    shape = {"closest": "points", "segx": "segments", "axis": "axis", "klee": "rects"}[command[0]]
    path = str(tmp_path / "input.txt")

    assert main(["gen", shape, "-n", "60", "--seed", "11", "--dup-rate", "0.3", "--coord-limit", "16"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", shape, "-n", "60", "--seed", "11", "--dup-rate", "0.3", "--coord-limit", "16"]) == 0
    assert capsys.readouterr().out == first

    with open(path, "w") as file:
        file.write(first)

    runs = []
    for _ in range(2):
        assert main(command + ["--input", path, "--seed", "5"]) == 0
        runs.append(capsys.readouterr().out)

    assert runs[0] == runs[1]
    assert runs[0]
