import pytest

from cbu import (
    ArcLabeling,
    CbuCertificate,
    CbuProblem,
    Graph,
    Orientation,
    Recognition,
    RecognitionOptions,
    RecognitionResult,
    SearchStats,
    cycle_graph,
    decide_cbu,
    find_cover_orientation,
    g1,
    g3,
    solve_labeling,
)
from cbu._exceptions import BudgetExhaustedError, InvalidLabelingError
from cbu._selftest import connected_graphs
from cbu.tools import BaseRecognitionTool


@pytest.fixture
def c5_setup():
    problem = CbuProblem(graph=cycle_graph(5))
    options = RecognitionOptions()
    options.set_tool("cbu.branch_and_prune")
    options.set_params(shortcuts=False)
    return problem, options


def test_decide_triangle():
    certificate = decide_cbu(cycle_graph(3))
    assert certificate.verdict == "non-member"
    assert not certificate.is_member
    assert certificate.reason == "triangle"
    assert certificate.triangle == (0, 1, 2)
    assert certificate.stats.shortcut == "triangle"
    assert certificate.orientation is None


def test_decide_shortcuts():
    # 0 - bipartite: every arc leaves the part of vertex 0, all labels 1
    certificate = decide_cbu(cycle_graph(4))
    assert certificate.is_member
    assert certificate.reason == "bipartite"
    assert certificate.orientation.is_source(0) and certificate.orientation.is_source(2)
    assert {label for _, _, label in certificate.labeling.items()} == {1}
    # 1 - odd cycles map onto C5
    certificate = decide_cbu(cycle_graph(5))
    assert certificate.is_member
    assert certificate.reason == "c5-homomorphism"
    assert certificate.stats.nodes == 0
    certificate = decide_cbu(cycle_graph(9))
    assert certificate.reason == "c5-homomorphism"


def test_decide_by_search():
    certificate = decide_cbu(cycle_graph(7), shortcuts=False)
    assert certificate.is_member
    assert certificate.reason == "search"
    assert certificate.stats.nodes > 0
    assert certificate.stats.shortcut is None
    assert certificate.orientation.base == cycle_graph(7)


def test_decide_fixed_arcs():
    certificate = decide_cbu(g1(), fixed_arcs=[(0, 1), (0, 2), (1, 3), (2, 3)])
    assert certificate.verdict == "non-member"
    assert certificate.reason == "search"
    assert certificate.labeling is None
    # fixed arcs switch the shortcuts off, the search still finds a witness
    certificate = decide_cbu(cycle_graph(5), fixed_arcs=[(1, 0)])
    assert certificate.is_member
    assert certificate.reason == "search"
    assert certificate.orientation.has_arc(1, 0)


def test_decide_budget():
    with pytest.raises(BudgetExhaustedError):
        decide_cbu(cycle_graph(5), budget=1, shortcuts=False)


def test_decide_parallel_matches_sequential():
    sequential = decide_cbu(cycle_graph(7), shortcuts=False)
    parallel = decide_cbu(cycle_graph(7), shortcuts=False, jobs=2, split_depth=2)
    assert parallel.verdict == sequential.verdict
    assert parallel.labeling == sequential.labeling
    assert parallel.stats.nodes >= sequential.stats.nodes


def test_certificate_validation():
    with pytest.raises(InvalidLabelingError, match="needs a labeling"):
        CbuCertificate("member")
    o = Orientation.from_arcs(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidLabelingError, match="not below"):
        CbuCertificate("member", ArcLabeling(o, {(0, 1): 1, (1, 2): 1}))
    certificate = CbuCertificate("non-member", stats=SearchStats(nodes=4))
    assert certificate.stats.nodes == 4


def test_recognition_run(c5_setup):
    result = Recognition(*c5_setup).run()
    assert result.success
    assert result.verdict == "member"
    assert result.reason == "search"
    assert result.certificate.is_member
    assert result.certificate.labeling == result.labeling


def test_recognition_labeling_method():
    problem = CbuProblem(orientation=Orientation.from_arcs(3, [(0, 1), (1, 2), (2, 0)]))
    options = RecognitionOptions()
    options.set_solving_method("labeling")
    result = Recognition(problem, options).run()
    assert result.success
    assert not result.labelable
    assert result.res["certificate"].kind == "bad-cycle"
    # labeling results carry no verdict
    with pytest.raises(AttributeError):
        result.certificate


def test_runner_result_summary(c5_setup, capsys):
    runner = Recognition(*c5_setup)
    # 0
    runner.summary()
    console_output = capsys.readouterr()
    assert "cbu.branch_and_prune" in console_output.out
    assert "Recognition hasn't started" in console_output.out
    # 1
    result = runner.run()
    assert "success" in str(result)
    result.summary()
    console_output = capsys.readouterr()
    assert "SUCCESS" in console_output.out
    assert "verdict: member" in console_output.out
    runner.summary()
    console_output = capsys.readouterr()
    assert "SUCCESS" in console_output.out
    assert "graph" in console_output.out


def test_result_validation():
    with pytest.raises(ValueError, match=r".*status not returned.*"):
        RecognitionResult(dict())
    assert RecognitionResult({"success": 1}).success_or_not == "success"
    assert RecognitionResult({"success": False}).success_or_not == "failure"
    assert "failure" in repr(RecognitionResult({"success": 0}))


def test_dispatch_custom_tool(c5_setup):
    problem, options = c5_setup

    class CustomTool(BaseRecognitionTool):
        def __call__(self) -> dict:
            return {"successful": True}

        @classmethod
        def required_in_problem(cls) -> set:
            return set()

        @classmethod
        def optional_in_problem(cls) -> dict:
            return dict()

        @classmethod
        def required_in_options(cls) -> set:
            return set()

        @classmethod
        def optional_in_options(cls) -> dict:
            return {"shortcuts": True}

    options.set_tool(CustomTool)
    runner = Recognition(problem, options)
    with pytest.raises(ValueError):
        runner.run()


@pytest.mark.slow
def test_g3_is_not_cbu():
    certificate = decide_cbu(g3())
    assert certificate.verdict == "non-member"
    assert certificate.reason == "search"
    assert certificate.stats.prunes > 0
    # a cover graph all the same
    cover = find_cover_orientation(g3())
    assert cover is not None
    assert not isinstance(solve_labeling(cover), ArcLabeling)


def test_members_are_closed_under_subgraphs():
    for g in connected_graphs(5):
        if g.n < 2 or not decide_cbu(g).is_member:
            continue
        for e in g.edges:
            h = g.spanning_subgraph([f for f in g.edges if f != e])
            assert decide_cbu(h).is_member, (g, e)
        for v in g.vertices:
            nxg = g.to_networkx()
            nxg.remove_node(v)
            assert decide_cbu(Graph.from_networkx(nxg)).is_member, (g, v)
