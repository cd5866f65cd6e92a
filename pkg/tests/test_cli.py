from __future__ import annotations

import io
import json
import types

import pytest

from zigzag_lab import cli
from zigzag_lab.generators import gm_3n, prism
from zigzag_lab.io_formats import read_planar_code, write_planar_code


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_catalog_z(capsys):
    code, out, err = run(["analyze", "--catalog", "Dodecahedron",
                          "--report", "z"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    rep = json.loads(lines[0])
    assert rep["id"] == "Dodecahedron"
    assert rep["z_vector"] == "10^6"
    assert "point_group" not in rep


def test_analyze_multiple_inputs_keep_order(capsys):
    code, out, _ = run(["analyze", "--catalog", "Cube", "--catalog",
                        "Tetrahedron", "--report", "z"], capsys)
    assert code == 0
    ids = [json.loads(line)["id"] for line in out.strip().splitlines()]
    assert ids == ["Cube", "Tetrahedron"]


def test_analyze_rejects_non_sphere_catalog(capsys):
    code, out, err = run(["analyze", "--catalog", "Klein"], capsys)
    assert code == 1
    assert out == ""
    assert "higher-genus" in err


def test_analyze_without_inputs_is_usage_error(capsys):
    code, _, err = run(["analyze"], capsys)
    assert code == 2
    assert "nothing to analyze" in err


def test_analyze_unknown_section(capsys):
    code, _, err = run(["analyze", "--catalog", "Cube",
                        "--report", "nonsense"], capsys)
    assert code == 1
    assert "unknown report section" in err


def test_analyze_reads_stdin(capsys, monkeypatch):
    blob = write_planar_code([prism(6)])
    monkeypatch.setattr(cli.sys, "stdin",
                        types.SimpleNamespace(buffer=io.BytesIO(blob)))
    code, out, _ = run(["analyze", "--in", "-", "--report", "z,tight"], capsys)
    assert code == 0
    rep = json.loads(out.strip())
    assert rep["id"] == "-[0]"
    assert rep["tight"] is True
    assert rep["z_vector"] == "18_{3,0}^2"


def test_analyze_file_and_svg_dir(tmp_path, capsys):
    plc = tmp_path / "two.plc"
    plc.write_bytes(write_planar_code([prism(5), gm_3n(2, 1)]))
    svg_dir = tmp_path / "art"
    code, out, _ = run(["analyze", "--in", str(plc), "--svg-dir",
                        str(svg_dir), "--report", "z"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 2
    made = sorted(p.name for p in svg_dir.iterdir())
    assert len(made) == 2
    assert all(name.endswith(".svg") for name in made)


def test_parallel_matches_serial(capsys):
    argv = ["analyze", "--catalog", "Cube", "--catalog", "Dodecahedron",
            "--catalog", "TruncatedOctahedron"]
    code1, out1, _ = run(argv + ["--jobs", "1"], capsys)
    code2, out2, _ = run(argv + ["--jobs", "3"], capsys)
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_per_graph_failures_become_data(capsys):
    # the snub cube is 5-valent: hexagon-road sections cannot apply, but the
    # run keeps going and reports the failure inline
    code, out, _ = run(["analyze", "--catalog", "SnubCube", "--catalog",
                        "Cube", "--report", "railroads"], capsys)
    assert code == 1
    first, second = (json.loads(line) for line in out.strip().splitlines())
    assert first["id"] == "SnubCube" and "3-valent" in first["error"]
    assert second["tight"] is True


def test_jobs_environment_default(capsys, monkeypatch):
    monkeypatch.setenv("ZIGZAG_LAB_JOBS", "2")
    code, out, _ = run(["analyze", "--catalog", "Cube", "--catalog",
                        "Octahedron", "--report", "z"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_generate_planar_code_stream(capsysbinary):
    code = cli.main(["generate", "prism", "--m", "6"])
    blob = capsysbinary.readouterr().out
    (m,) = read_planar_code(blob)
    assert m.is_isomorphic(prism(6))
    assert code == 0


def test_generate_to_file(tmp_path, capsys):
    out_path = tmp_path / "rings.plc"
    code, _, _ = run(["generate", "gm", "--s", "7", "--m", "1",
                      "--out", str(out_path)], capsys)
    assert code == 0
    (m,) = read_planar_code(out_path.read_bytes())
    assert m.n_vertices == 28


def test_generate_analyze_inline(capsys):
    code, out, _ = run(["generate", "gm", "--s", "7", "--m", "1",
                        "--analyze", "--report", "z"], capsys)
    assert code == 0
    rep = json.loads(out.strip())
    assert rep["id"] == "gm-7-1-0"
    assert rep["z_vector"] == "28^3"


def test_generate_gc_dodecahedron(capsys):
    code, out, _ = run(["generate", "gc", "--base", "Dodecahedron", "--k", "2",
                        "--l", "1", "--analyze", "--report", "z,tight"], capsys)
    assert code == 0
    rep = json.loads(out.strip())
    assert rep["n"] == 140
    assert rep["tight"] is True
    assert rep["z_vector"] == "28^15"


def test_generate_enumeration_emits_each_class(capsys):
    code, out, _ = run(["generate", "3n", "--n", "28", "--analyze",
                        "--report", "z,tight"], capsys)
    assert code == 0
    reps = [json.loads(line) for line in out.strip().splitlines()]
    assert [r["id"] for r in reps] == ["3n-28-0", "3n-28-1"]
    assert all(r["tight"] for r in reps)


def test_generate_bad_parameters(capsys):
    code, _, err = run(["generate", "prism", "--m", "1"], capsys)
    assert code == 2
    assert "prism needs m >= 3" in err


def test_generate_catalog_requires_name(capsys):
    with pytest.raises(SystemExit) as wrap:
        cli.main(["generate", "catalog"])
    assert wrap.value.code == 2


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as wrap:
        cli.main(["frobnicate"])
    assert wrap.value.code == 2


def test_verify_table1(capsys):
    code, out, err = run(["verify", "table1"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 36
    assert all(r["ok"] for r in rows)
    assert "table1: 36/36 assertions passed" in err


def test_verify_invariants_with_extra_input(tmp_path, capsys):
    plc = tmp_path / "extra.plc"
    plc.write_bytes(write_planar_code([prism(8)]))
    code, out, err = run(["verify", "invariants", "--in", str(plc)], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert all(r["ok"] for r in rows)
    assert any(f"{plc}[0]" in r["assertion"] for r in rows)
