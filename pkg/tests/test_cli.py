import json
import subprocess
import sys

import pytest

from biramsey.cli import main
from biramsey.coloring import parse, serialize
from biramsey.constructions import figure1_k55

from conftest import GOLDEN


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def mixed_file(tmp_path):
    path = tmp_path / "mixed.txt"
    path.write_text("3 4 3\n0 0 1 2\n0 1 1 2\n2 2 0 0\n")
    return path


def test_construct_figure1_golden(capsys):
    code, out, err = run(capsys, "construct", "figure1")
    assert code == 0
    assert out == (GOLDEN / "figure1_k55.txt").read_text()
    assert "P4-free: yes" in err


def test_construct_extremal_to_file(capsys, tmp_path):
    dest = tmp_path / "e5.txt"
    code, out, _ = run(capsys, "construct", "extremal", "5", "--out", str(dest))
    assert code == 0
    assert dest.read_bytes() == (GOLDEN / "extremal_r5.txt").read_bytes()
    assert "P4-free: yes" in out


def test_construct_variants(capsys):
    code, out, _ = run(capsys, "construct", "complete-star", "5")
    assert code == 0 and out.startswith("6 4\n- 0 0 3")
    code, out, _ = run(capsys, "construct", "biequiv", "4", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["payload"]["largest_biclique"] == [2, 2]
    code, _, err = run(capsys, "construct", "extremal", "x")
    assert code == 2 and "integers" in err
    code, _, _ = run(capsys, "construct", "complete-star", "3")
    assert code == 2


def test_construct_blowup(capsys, tmp_path):
    base = tmp_path / "f.txt"
    base.write_text(serialize(figure1_k55()))
    code, out, _ = run(capsys, "construct", "blowup", str(base), "2")
    assert code == 0
    c = parse(out)
    assert (c.m, c.n, c.r) == (10, 10, 4)


def test_analyze(capsys, mixed_file, tmp_path):
    cert = tmp_path / "p4.json"
    code, out, _ = run(capsys, "analyze", str(mixed_file), "--out", str(cert))
    assert code == 0
    assert "monochromatic P4: color" in out
    code, out, _ = run(capsys, "verify", str(mixed_file), str(cert))
    assert code == 0 and out.startswith("OK: p4")
    code, out, _ = run(capsys, "analyze", str(mixed_file), "--format", "json")
    payload = json.loads(out)["payload"]
    assert payload["max_connected_matching"]["edges"]
    assert payload["biequivalence"] is False


def test_analyze_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2 1\n0 0\n0")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "row" in err
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err


def test_balanced_and_verify(capsys, mixed_file, tmp_path):
    cert = tmp_path / "b.json"
    code, out, _ = run(capsys, "balanced", str(mixed_file), "--out", str(cert))
    assert code == 0 and "trace:" in out
    assert run(capsys, "verify", str(mixed_file), str(cert))[0] == 0
    data = json.loads(cert.read_text())
    data["y"] = data["y"][:1] if len(data["y"]) > 1 else [3 - data["y"][0]]
    cert.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", str(mixed_file), str(cert), "--format", "json")
    assert code == 2


def test_balanced_four_colors_not_found(capsys, tmp_path):
    f = tmp_path / "f.txt"
    f.write_text(serialize(figure1_k55()))
    code, out, _ = run(capsys, "balanced", str(f))
    assert code == 1 and "NOT met" in out


def test_search_statuses(capsys, tmp_path):
    dest = tmp_path / "w.txt"
    code, out, _ = run(capsys, "search", "3", "3", "3", "--out", str(dest))
    assert code == 0 and parse(dest.read_text()).m == 3
    code, out, _ = run(capsys, "search", "4", "4", "3")
    assert code == 1 and "EXHAUSTED" in out and "star-forest" in out
    code, out, _ = run(capsys, "search", "5", "5", "4", "--budget", "10")
    assert code == 3
    code, out, _ = run(capsys, "search", "2", "2", "2", "--count-iso", "--format", "json")
    assert code == 0 and json.loads(out)["payload"]["iso_classes"] == 2
    code, _, _ = run(capsys, "search", "0", "2", "2")
    assert code == 2


def test_search_json_report(capsys):
    code, out, _ = run(capsys, "search", "2", "2", "1", "--format", "json", "--symmetry", "colors")
    rep = json.loads(out)
    assert code == 1
    assert rep["command"] == "search" and rep["status"] == "NOT_FOUND"
    assert rep["payload"]["symmetry_mode"] == "colors"
    assert set(rep) == {"command", "parameters", "status", "payload", "wall_time"}


def test_star_arboricity_and_ramsey(capsys):
    code, out, _ = run(capsys, "star-arboricity", "3", "3")
    assert code == 0 and out.startswith("st(K_{3,3}) = 3")
    code, out, _ = run(capsys, "ramsey-f", "3")
    assert code == 0 and out.startswith("f(3) = 4")
    code, out, _ = run(capsys, "ramsey-f", "5", "--budget", "100")
    assert code == 3 and "f(5) >= 7" in out
    code, _, _ = run(capsys, "star-arboricity", "5", "5", "--budget", "5")
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "biramsey", "construct", "extremal", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "3 3 3\n0 1 2\n1 2 0\n2 0 1\n"


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct", "pentagon"])
    assert exc.value.code == 2
