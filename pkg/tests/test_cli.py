import io
import json
import logging
from pathlib import Path

import pytest

from cbu import cycle_graph, g2
from cbu._cli import (
    EXIT_BUDGET,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    configure_logging,
    main,
)
from cbu._io import format_graph, labeling_from_dot, read_graph, write_graph


DATASETS = Path(__file__).resolve().parent / "datasets"


@pytest.fixture(autouse=True)
def cli_logger():
    logger = logging.getLogger("cbu")
    handlers, level = list(logger.handlers), logger.level
    yield logger
    logger.handlers[:] = handlers
    logger.setLevel(level)


@pytest.fixture
def stdin_graph(monkeypatch):
    def _feed(g, fmt="json"):
        monkeypatch.setattr("sys.stdin", io.StringIO(format_graph(g, fmt)))

    return _feed


def test_decide(capsys):
    # 0 - triangle
    assert main(["decide", str(DATASETS / "k3.json")]) == EXIT_NEGATIVE
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "non-member"
    assert out["reason"] == "triangle"


def test_decide_from_stdin(stdin_graph, capsys):
    stdin_graph(cycle_graph(5), "edges")
    assert main(["decide", "-"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "member"
    assert out["labeling"]["kind"] == "labeling"


def test_decide_budget(tmp_path, capsys):
    write_graph(g2(), tmp_path / "g2.json")
    assert main(["decide", str(tmp_path / "g2.json"), "--budget", "1"]) == EXIT_BUDGET
    assert "inconclusive" in capsys.readouterr().err


def test_check_orientation(tmp_path, capsys):
    # 0 - quasi-cycle
    assert main(["check-orientation", str(DATASETS / "c4-quasi.json")]) == EXIT_NEGATIVE
    assert json.loads(capsys.readouterr().out)["kind"] == "bad-cycle"
    # 1 - labelable
    path = tmp_path / "path.json"
    path.write_text('{"n": 3, "arcs": [[0, 1], [1, 2]]}')
    certificate = tmp_path / "labeling.json"
    args = ["check-orientation", str(path), "--certificate", str(certificate)]
    assert main(args) == EXIT_OK
    assert json.loads(certificate.read_text())["arcs"] == [[0, 1, "1/1"], [1, 2, "2/1"]]


def test_check_orientation_dot(tmp_path, capsys, monkeypatch):
    # 0 - a DOT orientation, DOT certificate on stdout
    quasi = tmp_path / "quasi.dot"
    quasi.write_text("digraph { 0 -> 1 -> 2 -> 3; 0 -> 3 }\n")
    args = ["check-orientation", str(quasi), "--certificate-format", "dot"]
    assert main(args) == EXIT_NEGATIVE
    out = capsys.readouterr().out
    assert out.startswith("digraph G {")
    assert 'label="bad-cycle through' in out
    # 1 - a labelable orientation from stdin
    monkeypatch.setattr("sys.stdin", io.StringIO("digraph { 2 -> 1; 1 -> 0 }"))
    certificate = tmp_path / "labeling.dot"
    args = ["check-orientation", "-", "--input-format", "dot", "--certificate"]
    assert main(args + [str(certificate), "--certificate-format", "dot"]) == EXIT_OK
    assert labeling_from_dot(certificate.read_text()).items() == ((1, 0, 2), (2, 1, 1))
    # 2 - malformed DOT
    quasi.write_text("digraph { 0 -- 1 }\n")
    assert main(["check-orientation", str(quasi)]) == EXIT_USAGE
    assert "is undirected" in capsys.readouterr().err


def test_gen_build_verify_svg(tmp_path, capsys):
    grid = tmp_path / "grid.dot"
    rep = tmp_path / "rep.json"
    emitted = tmp_path / "emitted.json"
    # 0 - gen
    assert main(["gen", "grid", "--n", "3", "--format", "dot", "-o", str(grid)]) == EXIT_OK
    assert grid.read_text().startswith("graph G {")
    # 1 - build from the graph file, n inferred
    args = ["build", "grid-2cbu", "--graph", str(grid), "-o", str(rep)]
    assert main(args + ["--emit-graph", str(emitted)]) == EXIT_OK
    document = json.loads(rep.read_text())
    assert document["d"] == 2
    assert sorted(document["boxes"], key=int) == [str(v) for v in range(9)]
    assert read_graph(emitted) == read_graph(grid)
    # 2 - verify
    assert main(["verify", str(rep), str(grid)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"ok": True, "violations": []}
    assert main(["verify", str(rep), str(DATASETS / "k3.json")]) == EXIT_NEGATIVE
    assert not json.loads(capsys.readouterr().out)["ok"]
    # 3 - svg
    assert main(["svg", str(rep)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("<svg")


def test_verify_hand_written_representation(tmp_path, capsys):
    rep = tmp_path / "p2.json"
    rep.write_text('{"d": 2, "boxes": {"0": [[0, 1], [0, 1]], "1": [[1, 2], [0, 1]]}}')
    graph = tmp_path / "p2.edges"
    graph.write_text("2\n0 1\n")
    assert main(["verify", str(rep), str(graph)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"ok": True, "violations": []}


def test_build_from_stdin(stdin_graph, capsys):
    stdin_graph(cycle_graph(6), "dot")
    assert main(["build", "outerplanar-2cbu"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["kind"] == "contact"
    stdin_graph(cycle_graph(3))
    assert main(["build", "labeling"]) == EXIT_NEGATIVE
    assert "not CBU" in capsys.readouterr().err


def test_analyze_cycle(stdin_graph, capsys):
    stdin_graph(cycle_graph(5))
    assert main(["analyze", "-"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out == {
        "n": 5,
        "m": 5,
        "alpha": 2,
        "independent_set": out["independent_set"],
        "chi": 3,
        "chi_f": "5/2",
        "girth": 5,
    }
    assert len(out["independent_set"]) == 2
    # 1 - selected invariants, acyclic graph
    stdin_graph(cycle_graph(5).spanning_subgraph([(0, 1)]))
    assert main(["analyze", "-", "--girth", "--chi"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out == {"n": 5, "m": 1, "chi": 2, "girth": None}


def test_usage_errors(tmp_path, capsys):
    # 0 - malformed input
    broken = tmp_path / "broken.json"
    broken.write_text("{oops")
    assert main(["decide", str(broken)]) == EXIT_USAGE
    assert "malformed JSON" in capsys.readouterr().err
    # 1 - missing file
    assert main(["decide", str(tmp_path / "missing.json")]) == EXIT_USAGE
    assert "can't read" in capsys.readouterr().err
    # 2 - missing parameter
    assert main(["gen", "cycle"]) == EXIT_USAGE
    assert "value of --n" in capsys.readouterr().err
    # 3 - both inputs from stdin
    assert main(["verify", "-", "-"]) == EXIT_USAGE
    # 4 - argparse
    with pytest.raises(SystemExit) as exc_info:
        main(["gen", "petersen"])
    assert exc_info.value.code == EXIT_USAGE


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert capsys.readouterr().out.startswith("cbu ")


def test_configure_logging(monkeypatch, cli_logger):
    logger = cli_logger
    # 0 - default
    monkeypatch.delenv("CBU_LOG", raising=False)
    configure_logging()
    assert logger.level == logging.WARNING
    configure_logging(verbosity=1)
    assert logger.level == logging.INFO
    # 1 - from the environment
    monkeypatch.setenv("CBU_LOG", "debug")
    configure_logging(verbosity=3)
    assert logger.level == logging.DEBUG
    monkeypatch.setenv("CBU_LOG", "40")
    configure_logging()
    assert logger.level == logging.ERROR
    monkeypatch.setenv("CBU_LOG", "chatty")
    configure_logging()
    assert logger.level == logging.WARNING
    # 2 - one handler however often it's called
    assert [h.get_name() for h in logger.handlers].count("cbu-cli") == 1
