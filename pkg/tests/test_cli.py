import os
import subprocess
import sys
from pathlib import Path

import pytest

from unigraph.cli import main
from unigraph.coloring import is_unigraphic_coloring
from unigraph.textio import read_coloring, read_edge_list

FIX = Path(__file__).parent / "fixtures"


def kv(capsys, *argv):
    code = main(["--format", "kv", *[str(a) for a in argv]])
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "unigraph-report 1" and lines[-1] == "end"
    pairs = dict(ln.split("=", 1) for ln in lines[1:-1] if not ln.startswith("notice="))
    pairs["notices"] = [ln.split("=", 1)[1] for ln in lines if ln.startswith("notice=")]
    assert int(pairs["exit"]) == code
    return code, pairs


def test_recognize_domino(capsys):
    code, r = kv(capsys, "recognize", FIX / "domino.txt")
    assert code == 0
    assert r["result.is_unigraph"] == "false" and r["result.witness_edges"]
    assert r["input.degree_set"] == "3,3,2,2,2,2"


def test_tree_path7(capsys, tmp_path):
    out = tmp_path / "p7.col"
    code, r = kv(capsys, "tree", FIX / "path7.txt", "--coloring-out", out)
    assert code == 0 and r["result.w"] == "2"
    T = read_edge_list(FIX / "path7.txt")
    c = read_coloring(T, out)
    assert c.k == 2 and is_unigraphic_coloring(T, c)


def test_decompose_k4(capsys):
    code, r = kv(capsys, "decompose", FIX / "k4.txt", "--strong")
    assert code == 0 and r["result.w"] == "1" and r["result.s"] == "1"


def test_decompose_domino(capsys):
    code, r = kv(capsys, "decompose", FIX / "domino.txt", "--strong")
    assert (r["result.w"], r["result.s"]) == ("2", "3")


def test_check_coloring(capsys):
    code, r = kv(capsys, "check-coloring", FIX / "domino.txt", FIX / "domino2.col", "--strong")
    assert code == 0
    assert r["result.unigraphic"] == "true" and r["result.strongly_unigraphic"] == "false"
    assert r["result.failure"] == "non-unique-realization"
    code, r = kv(capsys, "check-coloring", FIX / "domino.txt", FIX / "domino3.col", "--strong")
    assert r["result.strongly_unigraphic"] == "true"


def test_star_coloring(capsys):
    code, r = kv(capsys, "star-coloring", FIX / "domino.txt")
    assert code == 0 and r["result.k"] == "3" and r["result.cover_source"] == "minimum"
    code, r = kv(capsys, "star-coloring", FIX / "domino.txt", "--cover", "0,1,4,5")
    assert r["result.k"] == "4"
    code, r = kv(capsys, "star-coloring", FIX / "domino.txt", "--cover", "0")
    assert code == 2


def test_export_dot(capsys, tmp_path):
    out = tmp_path / "d.dot"
    code, _ = kv(capsys, "export-dot", FIX / "domino.txt", FIX / "domino3.col", out)
    assert code == 0 and out.read_text().count("color=") == 7


@pytest.mark.parametrize("argv,expected", [
    (["recognize", "bad_token.txt"], 2),
    (["recognize", "bad_loop.txt"], 2),
    (["recognize", "bad_count.txt"], 2),
    (["recognize", "bad_range.txt"], 2),
    (["recognize", "missing.txt"], 2),
    (["tree", "domino.txt"], 2),
    (["check-coloring", "domino.txt", "domino_partial.col"], 2),
    (["recognize", "domino.txt"], 0),
    (["recognize", "path13.txt"], 0),  # refuted by the diameter condition
    (["decompose", "cycle13.txt", "--strong"], 3),
    (["decompose", "cycle13.txt", "--bounds-only"], 0),
    (["tree", "path13.txt"], 0),
])
def test_exit_codes(capsys, argv, expected):
    argv = [argv[0]] + [str(FIX / a) if a.endswith((".txt", ".col")) else a for a in argv[1:]]
    code, r = kv(capsys, *argv)
    assert code == expected
    if expected == 2:
        assert r["notices"] and r["notices"][0].startswith("error:")
    if expected == 3:
        assert any("exceeds the supported bound" in x for x in r["notices"])


def test_parse_error_names_line(capsys):
    code, r = kv(capsys, "recognize", FIX / "bad_token.txt")
    assert "bad_token.txt:3:" in r["notices"][0]


def test_format_after_subcommand(capsys):
    assert main(["tree", str(FIX / "path7.txt"), "--format", "kv"]) == 0
    assert capsys.readouterr().out.startswith("unigraph-report 1")


def test_text_output(capsys):
    assert main(["recognize", str(FIX / "domino.txt")]) == 0
    out = capsys.readouterr().out
    assert "is unigraph: false" in out


def test_console_script_and_module():
    env = dict(os.environ)
    p = subprocess.run([sys.executable, "-m", "unigraph.cli", "--format", "kv", "tree",
                        str(FIX / "path7.txt")], capture_output=True, text=True, env=env)
    assert p.returncode == 0 and "result.w=2" in p.stdout
    p = subprocess.run([sys.executable, "-m", "unigraph.cli", "tree", str(FIX / "domino.txt")],
                       capture_output=True, text=True, env=env)
    assert p.returncode == 2 and "not a tree" in p.stderr
