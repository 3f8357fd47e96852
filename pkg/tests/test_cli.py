import io
import json
import contextlib

import pytest

from cwkit.cli import resolve_graph, run
from cwkit.errors import InputError
from cwkit.graphs import to_graph6
from cwkit.isomorphism import is_isomorphic
from cwkit.names import graph_named


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_resolve_name_graph6_and_file(tmp_path):
    assert resolve_graph("P4").n == 4
    g = graph_named("C5")
    assert resolve_graph(to_graph6(g)) == g
    f = tmp_path / "g.edges"
    f.write_text("3 2\n0 1\n1 2\n")
    assert is_isomorphic(resolve_graph(str(f)), graph_named("P3"))
    f6 = tmp_path / "g.g6"
    f6.write_text(to_graph6(g) + "\n")
    assert resolve_graph(str(f6)) == g
    with pytest.raises(InputError):
        resolve_graph("definitely not a graph ((")


def test_classify_pair_output():
    code, out, _ = invoke("classify", "pair", "3P1", "co(S_1_2_3)")
    assert code == 0
    assert out.startswith("status=Open rule=OPEN1.7")


def test_classify_pair_json():
    code, out, _ = invoke("classify", "pair", "K1_3", "co(K1_3)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "Bounded" and doc["rule"] == "B7"


def test_classify_single_and_family():
    code, out, _ = invoke("classify", "single", "2P2")
    assert code == 0 and "Unbounded" in out
    code, out, _ = invoke("classify", "family", "--relation", "topminor", "K1_4")
    assert code == 0 and "Unbounded" in out


def test_colouring_pair():
    code, out, _ = invoke("colouring", "pair", "P4", "K13")
    assert code == 0 and "Polynomial" in out


def test_witness_certify_and_files(tmp_path):
    out_file = tmp_path / "w.txt"
    part_file = tmp_path / "w.part"
    code, out, _ = invoke(
        "witness", "thm4G", "4", "--certify",
        "--out", str(out_file), "--format", "edges",
        "--out-partition", str(part_file),
    )
    assert code == 0
    assert "bound=4" in out
    assert out_file.read_text().splitlines()[0] == "56 112"
    from cwkit.certificate import parse_partition

    assert parse_partition(part_file.read_text()).n == 4


def test_witness_verify_free():
    code, out, _ = invoke("witness", "thm5G", "2", "--verify-free")
    assert code == 0 and "verified free" in out


def test_witness_graph6_output(tmp_path):
    out_file = tmp_path / "w.g6"
    code, out, _ = invoke("witness", "wall", "2", "--out", str(out_file))
    assert code == 0
    from cwkit.graphs import from_graph6
    from cwkit.witnesses import wall

    assert from_graph6(out_file.read_text()) == wall(2)


def test_witness_bad_params():
    code, _, err = invoke("witness", "wall", "1")
    assert code == 2
    code, _, err = invoke("witness", "wall", "2", "3")
    assert code == 2
    code, _, err = invoke("witness", "wall", "2", "--certify")
    assert code == 2  # walls carry no partition


def test_cw_exact_and_eval(tmp_path):
    code, out, _ = invoke("cw", "exact", "P4")
    assert code == 0
    assert out.splitlines()[0] == "cliquewidth=3"
    assert out.splitlines()[1].startswith("witness=")
    f = tmp_path / "expr.cwx"
    f.write_text("# builds an edge\neta(2,1; 2(b)+1(a))\n")
    code, out, _ = invoke("cw", "eval", str(f))
    assert code == 0 and "width=2" in out and "n=2 m=1" in out


def test_cw_exact_capacity():
    code, _, err = invoke("cw", "exact", "grid(3)")
    assert code == 3 and "capped" in err
    code, out, _ = invoke("cw", "exact", "grid(3)", "--max-n", "9")
    assert code == 0


def test_free_check_exit_codes():
    code, out, _ = invoke("free-check", "thm-unused", "--patterns", "P4")
    assert code == 2  # unresolvable graph argument
    code, out, _ = invoke("free-check", "C5", "--patterns", "P4")
    assert code == 1 and out.startswith("free=no pattern=P4")
    code, out, _ = invoke("free-check", "K3", "--patterns", "P3")
    assert code == 0 and out.strip() == "free=yes"


def test_parse_error_exit_code():
    code, _, err = invoke("classify", "pair", "P4", "S_3_2_1")
    assert code == 2 and "error" in err


def test_scan_small_and_deterministic():
    code1, out1, _ = invoke("scan", "--max-vertices", "4")
    code2, out2, _ = invoke("scan", "--max-vertices", "4", "--jobs", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "Bounded" in out1


def test_repeat_runs_byte_identical():
    a = invoke("classify", "pair", "K3", "P1+P5")
    b = invoke("classify", "pair", "K3", "P1+P5")
    assert a == b
