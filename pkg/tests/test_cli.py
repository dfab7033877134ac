import io
import json
import subprocess
import sys

import pytest

from prismroles.cli import main
from prismroles.formats import from_edgelist, from_graph6, to_edgelist, to_graph6
from prismroles.graph import complete, complement, cycle, matching, star
from prismroles.prism import complementary_prism


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text(to_edgelist(cycle(5)))
    return str(p)


def test_decide_yes(c5_file):
    assert run(["decide", c5_file]) == (0, "YES\n")


def test_decide_no_from_stdin():
    code, out = run(["decide", "--format", "graph6"], to_graph6(matching(4)))
    assert (code, out) == (1, "NO side=G cond=3\n")


def test_decide_json():
    code, out = run(["decide", "--json"], to_edgelist(complete(3)))
    line, record = out.splitlines()
    assert code == 1 and line == "NO side=G cond=1"
    assert json.loads(record)["condition"] == 1


@pytest.mark.parametrize("text, fmt", [("3\n0 7\n", "edgelist"), ("not a graph\n", None),
                                       ("C~~", "graph6"), ("0\n", "edgelist")])
def test_decide_input_errors(text, fmt, capsys):
    argv = ["decide"] + (["--format", fmt] if fmt else [])
    code, _ = run(argv, text)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert run(["decide", str(tmp_path / "nope")])[0] == 2


def test_witness_round_trip(tmp_path, c5_file):
    code, out = run(["witness", c5_file])
    assert code == 0 and out.startswith("lemma c5_golden\n")
    w = tmp_path / "w.txt"
    w.write_text(out)
    assert run(["verify", c5_file, str(w)]) == (0, "valid\n")
    tampered = out.replace("\n9 3\n", "\n9 1\n")
    w.write_text(tampered)
    code, msg = run(["verify", c5_file, str(w)])
    assert code == 1 and msg.startswith("invalid")


def test_witness_examples():
    code, out = run(["witness"], to_edgelist(star(3)))
    assert code == 0 and "lemma star" in out
    code, out = run(["witness"], to_edgelist(matching(3)))
    assert code == 0 and "lemma k2_cubed_golden" in out
    assert run(["witness"], to_edgelist(complete(3))) == (1, "NO side=G cond=1\n")


def test_witness_json():
    code, out = run(["witness", "--json"], to_edgelist(cycle(5)))
    rec = json.loads(out)
    assert code == 0 and rec["role_graph_alias"] == "R_{3,2}" and len(rec["roles"]) == 10


def test_verify_direct(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text(to_edgelist(cycle(6)))
    w = tmp_path / "a.txt"
    w.write_text("roles 1\n1 1\nvertices 6\n" + "".join(f"{v} 1\n" for v in range(6)))
    assert run(["verify", "--direct", str(g), str(w)]) == (0, "valid\n")
    w.write_text("garbage\n")
    assert run(["verify", str(g), str(w)])[0] == 2


def test_prism_outputs(c5_file):
    code, out = run(["prism", c5_file])
    assert code == 0 and "# 0 <-> 5" in out
    assert from_edgelist(out) == complementary_prism(cycle(5)).graph
    code, out = run(["prism", c5_file, "--to", "graph6"])
    assert from_graph6(out) == complementary_prism(cycle(5)).graph


def test_crosscheck_small():
    code, out = run(["crosscheck", "--nmax", "5"])
    assert code == 0
    rows = [ln.split("\t") for ln in out.splitlines() if not ln.startswith("#")]
    assert len(rows) == 52
    assert all(r[4] == "ok" for r in rows)
    assert out.splitlines()[-1] == "# graphs=52 disagreements=0 fallbacks=0 unknowns=0"


def test_crosscheck_order_three_no_set():
    code, out = run(["crosscheck", "--nmax", "3", "--json"])
    rows = json.loads(out)["rows"]
    no = {from_graph6(r["graph6"]).edge_count() for r in rows if r["n"] == 3 and r["oracle"] == "NO"}
    # K3 and its complement, nothing else
    assert no == {0, 3}
    assert all(r["decide"] == r["oracle"] for r in rows)


def test_crosscheck_guard():
    assert run(["crosscheck", "--nmax", "9"])[0] == 2


def test_crosscheck_unknown_exit():
    assert run(["crosscheck", "--nmax", "4", "--budget", "3"])[0] == 3


def test_entry_point(c5_file):
    res = subprocess.run([sys.executable, "-m", "prismroles", "decide", c5_file],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "YES\n"
