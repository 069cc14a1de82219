import json

import pytest

from twfrag.cli import main

C6 = "6 6\n1 1 1 1 1 1\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n"


@pytest.fixture
def c6_file(tmp_path):
    p = tmp_path / "c6.txt"
    p.write_text(C6)
    return str(p)


def test_orient(c6_file, capsys):
    assert main(["orient", "--input", c6_file, "--r", "2", "--dump"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("r=2 maxout=")
    stats = json.loads(out[out.index("{"):])
    assert stats["n"] == 6 and stats["r"] == 2


def test_cover(c6_file, capsys):
    assert main(["cover", "--input", c6_file, "--k", "2", "--provider", "baker"]) == 0
    out = capsys.readouterr().out
    assert "X_1: 0 2 4" in out and "X_2: 1 3 5" in out


def test_solve_with_oracle(c6_file, capsys):
    assert main(["solve", "--input", c6_file, "--problem", "mis", "--k", "3",
                 "--oracle"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["opt"] == 3 and doc["value"] >= 2
    assert doc["ratio"] >= 2 / 3


def test_verify_clean(c6_file, capsys):
    assert main(["verify", "--input", c6_file, "--r", "3"]) == 0
    assert "clean" in capsys.readouterr().out


def test_missing_file_exit_2(tmp_path):
    assert main(["orient", "--input", str(tmp_path / "nope.txt"), "--r", "2"]) == 2


def test_bad_graph_exit_2(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2 1\n1 1\n0 0\n")
    assert main(["orient", "--input", str(p), "--r", "1"]) == 2


def test_refusal_exit_3(tmp_path):
    lines = ["25 24", " ".join(["1"] * 25)]
    lines += [f"{i} {i + 1}" for i in range(24)]
    p = tmp_path / "p25.txt"
    p.write_text("\n".join(lines) + "\n")
    assert main(["solve", "--input", str(p), "--problem", "frmatch", "--r", "2",
                 "--k", "2"]) == 3


def test_bench_cli(tmp_path, capsys):
    cfg = tmp_path / "sweep.toml"
    cfg.write_text("""
[[instances]]
family = "cycle"
n = 5
seeds = [1]

[[runs]]
problem = "mis"
k = 2
""")
    out_dir = tmp_path / "out"
    assert main(["bench", "--config", str(cfg), "--out", str(out_dir)]) == 0
    assert (out_dir / "rows.csv").exists()
