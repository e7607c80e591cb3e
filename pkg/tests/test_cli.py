import json
import logging

import pytest

from walk_partitions.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE, main, run
from walk_partitions.walk_partitions.settings import get_settings

K3_EDGES = [(a, b) for a in "123" for b in "123"]


@pytest.fixture
def k3_file(graph_file):
    return graph_file(list("123"), K3_EDGES)


@pytest.fixture
def loop_file(graph_file):
    def write(weight):
        return graph_file(["1"], [{"from": "1", "to": "1", "weight": weight}],
                          f"loop{weight}.json")

    return write


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_factor(capsys):
    assert invoke(capsys, "factor", "1,2,1,2,2") == (EXIT_OK, "1,2[1: 1,2,1][2: 2,2]\n", "")


def test_factor_formats(capsys):
    code, out, _ = invoke(capsys, "factor", "12321", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["hedges"][0]["vertex"] == "1"
    code, out, _ = invoke(capsys, "factor", "12321", "--dot")
    assert out.startswith("digraph syntax_tree {")


def test_reduce(capsys):
    assert invoke(capsys, "reduce", "--signature", "2,0", "1,2,3,2,4,2,1")[:2] == \
        (EXIT_OK, "1,2,3,2,1\n")
    assert invoke(capsys, "reduce", "--signature", "2,0", "--cycle-level", "0", "242")[:2] == \
        (EXIT_OK, "(2)\n")
    code, out, _ = invoke(capsys, "reduce", "--signature", "2,0", "--json", "1232421")
    assert json.loads(out) == {"walk": "1,2,3,2,4,2,1", "signature": "2,0",
                               "core": "1,2,3,2,1"}


@pytest.mark.parametrize("walks, expected", [
    (["1,2,1", "2,3,2"], "1,2,3,2,1"),
    (["12", "21"], "0"),
    (["(1)", "1,2,1"], "1,2,1"),
    (["1,2,1", "1,3,1", "3,4,3"], "1,2,1,3,4,3,1"),
])
def test_nest(capsys, walks, expected):
    assert invoke(capsys, "nest", *walks)[:2] == (EXIT_OK, expected + "\n")


def test_nest_json(capsys):
    _, out, _ = invoke(capsys, "nest", "12", "21", "--json")
    assert json.loads(out) == {"walk": "0", "zero": True}


def test_kmax(capsys, k3_file):
    assert invoke(capsys, "kmax", "--graph", k3_file)[:2] == (EXIT_OK, "3,2,1,0\n")
    _, out, _ = invoke(capsys, "kmax", "--graph", k3_file, "--json")
    assert json.loads(out) == {"signature": [3, 2, 1, 0]}


def test_annotate(capsys):
    code, out, _ = invoke(capsys, "annotate", "1232421", "--signature", "2,0", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["resummable"] for row in rows] == [None, False, False, True]


def test_enumerate(capsys, k3_file):
    code, out, _ = invoke(capsys, "enumerate", "walks", "--graph", k3_file, "--from", "1",
                          "--to", "1", "--max-len", "2")
    assert code == EXIT_OK
    assert out.split() == ["(1)", "1,1", "1,1,1", "1,2,1", "1,3,1"]
    _, out, _ = invoke(capsys, "enumerate", "cycles", "--graph", k3_file, "--from", "1",
                       "--signature", "3,2,1,0", "--max-len", "4")
    assert out == ""


def test_dress_and_partition_check(capsys, graph_file):
    path = graph_file(["1", "2"], [("1", "1"), ("1", "2"), ("2", "2")])
    code, out, _ = invoke(capsys, "dress", "12", "--graph", path, "--signature", "1,0",
                          "--max-len", "3")
    assert code == EXIT_OK
    assert set(out.split()) == {"1,2", "1,1,2", "1,2,2", "1,1,1,2", "1,1,2,2", "1,2,2,2"}
    code, out, _ = invoke(capsys, "partition-check", "--graph", path, "--signature", "1,0",
                          "--max-len", "3", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["violations"] == []


def test_walksum_modes(capsys, loop_file):
    path = loop_file(0.5)
    assert invoke(capsys, "walksum", "--graph", path, "--from", "1", "--to", "1",
                  "--mode", "inverse")[:2] == (EXIT_OK, "2.0\n")
    assert invoke(capsys, "walksum", "--graph", path, "--from", "1", "--to", "1")[:2] == \
        (EXIT_OK, "2.0\n")
    assert invoke(capsys, "walksum", "--graph", path, "--from", "1", "--to", "1",
                  "--mode", "truncated", "--max-len", "2")[:2] == (EXIT_OK, "1.75\n")


def test_walksum_json(capsys, loop_file):
    _, out, _ = invoke(capsys, "walksum", "--graph", loop_file(0.5), "--from", "1", "--to",
                       "1", "--json")
    data = json.loads(out)
    assert data["shape"] == [1, 1]
    assert data["entries"] == [[[2.0, 0.0]]]
    assert data["diagnostics"] == {"mode": "resummed", "signature": "1,0",
                                   "spectral_radius": 0.5, "term_count": 1,
                                   "vertex_condition": 0.5}


def test_walksum_warns_on_divergent_dressed_vertex(capsys, caplog, loop_file):
    with caplog.at_level(logging.WARNING):
        code, out, _ = invoke(capsys, "walksum", "--graph", loop_file(1.2), "--from", "1",
                              "--to", "1", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["entries"][0][0][0] == pytest.approx(-5)
    assert data["diagnostics"]["vertex_condition"] == pytest.approx(1.2)
    assert "may diverge" in caplog.text


def test_log_level_flag_leaves_settings_alone(capsys):
    before = get_settings().log_level
    assert invoke(capsys, "--log-level", "DEBUG", "factor", "12")[0] == EXIT_OK
    assert get_settings().log_level == before


@pytest.mark.parametrize("argv", [
    ["reduce", "1,2"],
    ["factor"],
    ["unknown"],
    ["enumerate", "walks", "--from", "1", "--to", "1", "--max-len", "2"],
    ["walksum", "--from", "1", "--to", "1"],
])
def test_usage_errors(capsys, argv):
    assert invoke(capsys, *argv)[0] == EXIT_USAGE


def test_signature_other_than_kmax_needs_a_bound(capsys, loop_file):
    code, _, err = invoke(capsys, "walksum", "--graph", loop_file(0.5), "--from", "1", "--to",
                          "1", "--signature", "0")
    assert code == EXIT_USAGE
    assert "--max-len" in err


@pytest.mark.parametrize("argv", [
    ["reduce", "--signature", "2,1", "121"],
    ["factor", "1,,2"],
    ["dress", "1232421", "--signature", "2,0", "--max-len", "7"],
])
def test_domain_errors(capsys, argv, graph_file):
    path = graph_file(["1", "2", "3", "4"], [("1", "2"), ("2", "1"), ("2", "3"), ("3", "2"),
                                             ("2", "4"), ("4", "2")])
    code, out, err = invoke(capsys, *argv, "--graph", path)
    assert code == EXIT_DOMAIN_ERROR
    assert out == ""
    assert err.startswith("error:")


def test_missing_graph_file(capsys, tmp_path):
    code, _, err = invoke(capsys, "kmax", "--graph", str(tmp_path / "absent.json"))
    assert code == EXIT_DOMAIN_ERROR
    assert "no such file" in err


def test_walk_off_the_graph(capsys, graph_file):
    path = graph_file(["1", "2"], [("1", "2")])
    assert invoke(capsys, "factor", "121", "--graph", path)[0] == EXIT_DOMAIN_ERROR


def test_singular_walk_sum(capsys, loop_file):
    code, _, err = invoke(capsys, "walksum", "--graph", loop_file(1.0), "--from", "1", "--to",
                          "1", "--mode", "inverse")
    assert code == EXIT_DOMAIN_ERROR
    assert "Cannot invert" in err


def test_output_is_deterministic(capsys, k3_file):
    argv = ["enumerate", "irreducible", "--graph", k3_file, "--from", "1", "--to", "2",
            "--signature", "2,0", "--max-len", "4"]
    first = invoke(capsys, *argv)
    assert first[0] == EXIT_OK
    assert invoke(capsys, *argv) == first


def test_main_exits_with_status(k3_file):
    with pytest.raises(SystemExit) as exc:
        main(["kmax", "--graph", k3_file])
    assert exc.value.code == EXIT_OK
