import json
import subprocess
import sys

import pytest

from racdraw.cli import main


@pytest.fixture()
def k16_file(tmp_path):
    path = tmp_path / "k16.json"
    assert main(["draw", "--n", "16", "--complete", "--out", str(path)]) == 0
    return path


class TestDraw:
    def test_complete_writes_document(self, k16_file):
        doc = json.loads(k16_file.read_text())
        assert doc["m"] == "120"
        assert doc["n"] == "16"

    def test_stdout(self, capsys):
        assert main(["draw", "--n", "2", "--complete", "--out", "-"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["m"] == "1"

    def test_from_edge_list(self, tmp_path, capsys):
        edges = tmp_path / "g.edges"
        edges.write_text("n 5\n0 4\n")
        assert main(["draw", "--input", str(edges), "--out", "-"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == "5" and doc["m"] == "1"

    def test_empty_graph_is_usage_error(self, capsys):
        assert main(["draw", "--n", "0", "--complete"]) == 2
        assert "empty graph" in capsys.readouterr().err

    def test_requires_exactly_one_source(self, tmp_path, capsys):
        assert main(["draw"]) == 2
        edges = tmp_path / "g.edges"
        edges.write_text("n 2\n0 1\n")
        assert main(["draw", "--n", "2", "--input", str(edges)]) == 2

    def test_large_l_needs_override(self, capsys):
        assert main(["draw", "--n", "65537", "--complete", "--out", "-"]) == 2
        assert "--allow-large" in capsys.readouterr().err

    def test_parse_error_surfaces_line(self, tmp_path, capsys):
        edges = tmp_path / "bad.edges"
        edges.write_text("n 3\n0 0\n")
        assert main(["draw", "--input", str(edges), "--out", "-"]) == 2
        assert "line 2" in capsys.readouterr().err


class TestValidate:
    def test_clean_drawing_exits_zero(self, k16_file, capsys):
        assert main(["validate", str(k16_file)]) == 0
        out = capsys.readouterr().out
        assert "violations: 0" in out
        assert "certified RAC: yes" in out

    def test_corrupted_drawing_exits_one(self, k16_file, tmp_path, capsys):
        doc = json.loads(k16_file.read_text())
        doc["edges"][3]["bends"][1][0] = str(int(doc["edges"][3]["bends"][1][0]) + 1)
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        assert main(["validate", str(bad)]) == 1
        assert "certified RAC: NO" in capsys.readouterr().out

    def test_modes_write_identical_reports(self, k16_file, tmp_path, capsys):
        rep_a = tmp_path / "a.json"
        rep_b = tmp_path / "b.json"
        assert main(["validate", str(k16_file), "--mode", "brute", "--report", str(rep_a)]) == 0
        assert main(["validate", str(k16_file), "--mode", "filtered", "--report", str(rep_b)]) == 0
        assert rep_a.read_bytes() == rep_b.read_bytes()
        report = json.loads(rep_a.read_text())
        assert report["crossing_count"] == 7760
        assert report["violations"] == []

    def test_garbage_input_is_io_error(self, tmp_path, capsys):
        bad = tmp_path / "nope.json"
        bad.write_text("{")
        assert main(["validate", str(bad)]) == 2


class TestStats:
    def test_text(self, k16_file, capsys):
        assert main(["stats", str(k16_file)]) == 0
        out = capsys.readouterr().out
        assert "area             47882" in out
        assert "bends per edge   6" in out

    def test_json(self, k16_file, capsys):
        assert main(["stats", str(k16_file), "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["area"] == "47882"
        assert doc["crossing_count"] == 7760


class TestSvg:
    def test_writes_svg(self, k16_file, tmp_path):
        out = tmp_path / "k16.svg"
        assert main(["svg", str(k16_file), "--out", str(out), "--color-classes"]) == 0
        assert out.read_text().startswith("<?xml")

    def test_marks_crossings(self, tmp_path, capsys):
        small = tmp_path / "k5.json"
        assert main(["draw", "--n", "5", "--complete", "--out", str(small)]) == 0
        capsys.readouterr()
        assert main(["svg", str(small), "--mark-crossings", "--out", "-"]) == 0
        assert "crossings" in capsys.readouterr().out


class TestBench:
    def test_l_max_too_small(self, capsys):
        assert main(["bench", "--l-max", "1"]) == 2
        assert "l-max must be >= 2" in capsys.readouterr().err

    def test_table_shape(self, capsys):
        assert main(["bench", "--l-max", "2", "--repeat", "1"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert len(out) == 3  # header, one row, ratio line
        assert out[1].split()[0] == "2"


def test_draw_validate_compose_via_pipe():
    pipeline = (
        f"{sys.executable} -m racdraw draw --n 5 --complete --out - | "
        f"{sys.executable} -m racdraw validate -"
    )
    proc = subprocess.run(
        pipeline, shell=True, capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0, proc.stderr
    assert "certified RAC: yes" in proc.stdout
