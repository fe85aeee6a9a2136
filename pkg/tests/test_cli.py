"""Front-end behavior: exit codes, file formats, stream plumbing."""

from __future__ import annotations

import os

import pytest

from gschnyder.cli import main
from gschnyder.codec import deserialize
from gschnyder.core_map import maps_isomorphic, read_mesh


def _gen(tmp_path, *args):
    out = tmp_path / "m.tri"
    assert main(["gen", *args, "-o", str(out)]) == 0
    return str(out)


def test_gen_torus_and_compute_validate(tmp_path, capsys):
    mesh = _gen(tmp_path, "torus", "3", "3")
    gsw = str(tmp_path / "m.gsw")
    assert main(["compute", mesh, "-o", gsw]) == 0
    assert main(["validate", gsw, "--mesh", mesh]) == 0
    seen = capsys.readouterr().out
    assert "cut_graph_condition: ok" in seen
    assert "inner_local_condition: ok" in seen


def test_gen_planar_with_handles_and_refine(tmp_path):
    mesh = _gen(tmp_path, "planar", "18", "--handles", "2", "--refine", "1",
                "--seed", "3")
    m = read_mesh(mesh)
    assert m.genus == 2
    assert m.n_vertices > 18


def test_encode_decode_files(tmp_path):
    mesh = _gen(tmp_path, "torus", "3", "4")
    gsc = str(tmp_path / "m.gsc")
    back = str(tmp_path / "back.tri")
    wood_out = str(tmp_path / "back.gsw")
    assert main(["encode", mesh, "-o", gsc]) == 0
    code = deserialize(open(gsc, "rb").read())
    assert code.n == 12
    assert main(["decode", gsc, "-o", back, "--wood-out", wood_out]) == 0
    assert maps_isomorphic(read_mesh(mesh), read_mesh(back))
    assert main(["validate", wood_out, "--mesh", back]) == 0


def test_encode_with_saved_wood(tmp_path):
    mesh = _gen(tmp_path, "planar", "15", "--seed", "2")
    gsw = str(tmp_path / "m.gsw")
    gsc = str(tmp_path / "m.gsc")
    assert main(["compute", mesh, "-o", gsw]) == 0
    # a reloaded wood loses its provenance mark, so --force is required
    assert main(["encode", mesh, "--wood", gsw, "-o", gsc]) == 1
    assert main(["encode", mesh, "--wood", gsw, "--force", "-o", gsc]) == 0
    assert os.path.getsize(gsc) > 4


def test_roundtrip_exit_codes(tmp_path):
    mesh = _gen(tmp_path, "stacked", "14", "--handles", "1", "--seed", "5")
    assert main(["roundtrip", mesh]) == 0


def test_validate_rejects_recolored_wood(tmp_path, capsys):
    mesh = _gen(tmp_path, "torus", "3", "3")
    gsw = tmp_path / "m.gsw"
    assert main(["compute", mesh, "-o", str(gsw)]) == 0
    text = gsw.read_text().replace("color 2", "color 0", 1)
    bad = tmp_path / "bad.gsw"
    bad.write_text(text)
    assert main(["validate", str(bad), "--mesh", mesh]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_decode_corrupt_stream_is_domain_failure(tmp_path):
    mesh = _gen(tmp_path, "torus", "3", "3")
    gsc = tmp_path / "m.gsc"
    assert main(["encode", mesh, "-o", str(gsc)]) == 0
    blob = bytearray(gsc.read_bytes())
    blob[4] ^= 0x55
    bad = tmp_path / "bad.gsc"
    bad.write_bytes(bytes(blob))
    assert main(["decode", str(bad)]) == 1


def test_missing_input_is_io_failure(tmp_path):
    assert main(["roundtrip", str(tmp_path / "absent.tri")]) == 2


def test_gen_usage_error_exits_two(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "torus", "3"])
    assert exc.value.code == 2


def test_seed_env_var(tmp_path, monkeypatch):
    a = tmp_path / "a.tri"
    b = tmp_path / "b.tri"
    monkeypatch.setenv("GSCHNYDER_SEED", "41")
    assert main(["gen", "planar", "20", "-o", str(a)]) == 0
    monkeypatch.delenv("GSCHNYDER_SEED")
    assert main(["gen", "planar", "20", "--seed", "41", "-o", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_stats_table(tmp_path, capsys):
    mesh = _gen(tmp_path, "torus", "4", "4")
    gsc = str(tmp_path / "m.gsc")
    assert main(["encode", mesh, "-o", gsc]) == 0
    assert main(["stats", gsc]) == 0
    out = capsys.readouterr().out
    assert "bits/vertex" in out
    assert "m.gsc" in out


def test_export_dot_with_wood(tmp_path):
    mesh = _gen(tmp_path, "planar", "10", "--seed", "1")
    gsw = str(tmp_path / "m.gsw")
    dot = tmp_path / "m.dot"
    assert main(["compute", mesh, "-o", gsw]) == 0
    assert main(["export-dot", mesh, "--wood", gsw, "-o", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith("graph") or text.startswith("digraph")


def test_bench_writes_csv_and_figures(tmp_path):
    out = tmp_path / "bench"
    assert main([
        "bench", "--genus", "1", "--rounds", "1", "--runs", "1",
        "--out-dir", str(out),
    ]) == 0
    assert (out / "bench.csv").exists()
    assert (out / "time_vs_n.png").exists()
    assert (out / "bits_per_vertex.png").exists()
    header = (out / "bench.csv").read_text().splitlines()[0]
    assert header == "genus,n,seconds,bits_per_vertex"
