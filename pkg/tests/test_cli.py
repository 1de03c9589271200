import io
import json
from fractions import Fraction

import pytest

from horn_lab.cli import dispatch
from horn_lab.errors import DimensionError
from horn_lab.fulton import SweepConfig, fulton_sweep
from horn_lab.point_io import parse_point, read_point


def _run(argv):
    out = io.StringIO()
    code = dispatch(argv, out)
    return code, out.getvalue()


def test_lr_prints_the_coefficient():
    assert _run(["lr", "2,1", "2,1", "3,2,1"]) == (0, "2\n")
    code, text = _run(["lr", "1", "1"])
    assert code == 0
    assert text.splitlines() == ["2 1", "1,1 1"]


def test_lr_batch(tmp_path):
    batch = tmp_path / "triples.txt"
    batch.write_text("1 1 2\n2,1 2,1 3,2,1\n")
    code, text = _run(["lr", "--batch", str(batch)])
    assert code == 0
    assert text.splitlines() == ["1 1 2 1", "2,1 2,1 3,2,1 2"]


def test_horn_enumerate():
    code, text = _run(["horn", "enumerate", "2"])
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[0] == "{1}{2}{2} r=1 c=1 unclassified"

    code, text = _run(["horn", "enumerate", "2", "--classify", "--format", "json-lines"])
    records = [json.loads(line) for line in text.splitlines()]
    assert [r["status"] for r in records] == ["facet"] * 3


def test_member_commands(tmp_path):
    inside = tmp_path / "inside.txt"
    inside.write_text("1,-1\n1,-1\n1,-1\n")
    outside = tmp_path / "outside.txt"
    outside.write_text("2,-2\n0,0\n0,0\n")

    assert _run(["member", "2", "--point", str(inside)]) == (0, "member\n")
    code, text = _run(["horn", "member", "2", "--point", str(outside)])
    assert code == 1
    assert text == "not a member: inequality {1}{2}{2} value=2/1\n"


def test_face_test(tmp_path):
    point = tmp_path / "face.txt"
    point.write_text("1,0\n0,-1\n0,0\n")
    code, text = _run(["face", "test", "2", "--triple", "{1}{2}{2}", "--point", str(point)])
    assert code == 0
    assert text == "rho: true\ndirect: true\n"


def test_randomized_commands_need_a_seed():
    assert _run(["sample", "2"])[0] == 2
    assert _run(["face", "dim", "2", "--triple", "{1}{2}{2}"])[0] == 2


def test_sample_is_reproducible():
    first = _run(["sample", "3", "--count", "4", "--seed", "5"])
    second = _run(["sample", "3", "--count", "4", "--seed", "5"])
    assert first == second
    assert first[0] == 0

    code, text = _run(["sample", "2", "--count", "50", "--seed", "1", "--check"])
    assert code == 0
    assert text.endswith("pass\n")


def test_face_dim():
    code, text = _run(["face", "dim", "2", "--triple", "{1}{2}{2}", "--seed", "3"])
    assert code == 0
    assert "rank=4" in text


def test_fulton_commands():
    code, text = _run(
        ["fulton", "sweep", "--max-weight", "6", "--max-parts", "3", "--nmax", "3", "--seed", "7"]
    )
    assert code == 0
    assert "0 failures" in text

    code, text = _run(["fulton", "check", "1", "1", "1,1", "--nmax", "2"])
    assert (code, text) == (0, "N=1 c=1\nN=2 c=1\npass\n")

    code, text = _run(["fulton", "trace", "1", "1", "1,1", "--n", "2", "--seed", "1"])
    assert code == 0
    assert text.endswith("all 7 steps pass\n")

    assert _run(["fulton", "check", "2,1", "2,1", "3,2,1"])[0] == 2


def test_usage_errors():
    assert _run(["horn", "enumerate", "2", "--bogus"])[0] == 2
    assert _run(["lr", "2,1"])[0] == 2
    assert _run(["lr", "1,2", "1", "2"])[0] == 2


def test_point_files(tmp_path):
    p = parse_point("1/2,-1/2\n0,0\n# comment\n0.25,-0.25\n")
    assert p.alpha == (Fraction(1, 2), Fraction(-1, 2))
    assert isinstance(p.gamma[0], float)

    with pytest.raises(DimensionError):
        parse_point("1,0\n0\n0,0\n")
    with pytest.raises(ValueError):
        parse_point("1,0\n0,0\n")

    path = tmp_path / "p.txt"
    path.write_text("0\n0\n0\n")
    with pytest.raises(DimensionError):
        read_point(path, n=2)


def test_lr_batch_output_parses_back(tmp_path):
    batch = tmp_path / "triples.txt"
    batch.write_text("0 1 1\n2,1 2,1 3,2,1\n")
    code, text = _run(["lr", "--batch", str(batch)])
    assert code == 0
    again = tmp_path / "again.txt"
    again.write_text("".join(" ".join(line.split()[:3]) + "\n" for line in text.splitlines()))
    assert _run(["lr", "--batch", str(again)]) == (0, text)
    assert text.splitlines()[0] == "0 1 1 1"


def test_lr_json_lines():
    code, text = _run(["lr", "2,1", "2,1", "3,2,1", "--format", "json-lines"])
    assert code == 0
    assert json.loads(text) == {"lambda": "2,1", "mu": "2,1", "nu": "3,2,1", "c": 2}


def test_missing_files_are_input_errors(tmp_path):
    missing = str(tmp_path / "nowhere.txt")
    assert _run(["member", "2", "--point", missing])[0] == 2
    assert _run(["face", "test", "2", "--triple", "{1}{2}{2}", "--point", missing])[0] == 2
    assert _run(["lr", "--batch", missing])[0] == 2


def test_fulton_sweep_prints_every_row():
    code, text = _run(
        ["fulton", "sweep", "--max-weight", "4", "--max-parts", "2", "--nmax", "2",
         "--format", "json-lines"]
    )
    assert code == 0
    records = [json.loads(line) for line in text.splitlines()]
    expected = fulton_sweep(SweepConfig(max_weight=4, max_parts=2, n_max=2))
    assert len(records) == len(expected)
    assert all(r["passed"] for r in records)


def test_workers_belongs_to_fulton_sweep():
    assert _run(["sample", "2", "--seed", "1", "--workers", "2"])[0] == 2
    code, text = _run(
        ["fulton", "sweep", "--max-weight", "3", "--max-parts", "2", "--nmax", "2", "--workers", "2"]
    )
    assert code == 0
    assert "0 failures" in text
