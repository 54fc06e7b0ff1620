import networkx as nx
import pytest

from cbu import (
    Graph,
    SearchStats,
    branch_and_prune,
    check_labeling,
    complete_graph,
    cycle_graph,
    edge_order,
    exhaustive_search,
    find_cover_orientation,
    g1,
    has_quasi_cycle,
)
from cbu._exceptions import BudgetExhaustedError
from cbu._search import surviving_prefixes


G1_SQUARE = {(0, 1): (0, 1), (0, 2): (0, 2), (1, 3): (1, 3), (2, 3): (2, 3)}


def small_connected_graphs(max_n):
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() > max_n:
            break
        if nxg.number_of_nodes() and nx.is_connected(nxg):
            yield Graph.from_networkx(nxg)


def test_edge_order():
    assert edge_order(cycle_graph(4)) == [(0, 1), (1, 2), (0, 3), (2, 3)]
    # every component is visited, each edge exactly once
    g = Graph(5, [(3, 4), (0, 1), (1, 2), (0, 2)])
    order = edge_order(g)
    assert sorted(order) == list(g.edges)
    assert order[-1] == (3, 4)


def test_branch_and_prune_triangle():
    labeling, stats = branch_and_prune(complete_graph(3))
    assert labeling is None
    assert stats.prunes > 0
    assert stats.orientations == 0


def test_branch_and_prune_c5():
    labeling, stats = branch_and_prune(cycle_graph(5))
    assert labeling is not None
    assert labeling.orientation.base == cycle_graph(5)
    assert check_labeling(labeling) == []
    # first free edge only tried one way round
    assert labeling.orientation.has_arc(0, 1)
    assert stats.orientations == 1


def test_branch_and_prune_fixed_arcs():
    labeling, _ = branch_and_prune(g1(), fixed_arcs=G1_SQUARE)
    assert labeling is None
    labeling, _ = branch_and_prune(g1())
    assert labeling is not None
    # forcing the reverse of the first edge is honoured
    labeling, _ = branch_and_prune(cycle_graph(6), fixed_arcs={(0, 1): (1, 0)})
    assert labeling.orientation.has_arc(1, 0)


def test_contradicting_fixed_arcs():
    stats = SearchStats()
    directed = {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (2, 0)}
    labeling, stats = branch_and_prune(
        complete_graph(3), fixed_arcs=directed, stats=stats
    )
    assert labeling is None
    assert stats.nodes == 0 and stats.prunes == 1


def test_branch_and_prune_agrees_with_exhaustive():
    for g in small_connected_graphs(5):
        pruned, _ = branch_and_prune(g)
        plain, _ = exhaustive_search(g)
        assert (pruned is None) == (plain is None), g
        if pruned is not None:
            assert check_labeling(pruned) == []


def test_budget():
    with pytest.raises(BudgetExhaustedError) as exc_info:
        branch_and_prune(cycle_graph(5), budget=1)
    assert exc_info.value.budget == 1
    assert exc_info.value.stats.nodes == 2
    with pytest.raises(BudgetExhaustedError, match="inconclusive"):
        exhaustive_search(complete_graph(3), budget=3)


def test_exhaustive_search_fixed_arcs():
    labeling, stats = exhaustive_search(g1(), fixed_arcs=G1_SQUARE)
    assert labeling is None
    assert stats.orientations == 2**3
    labeling, _ = exhaustive_search(cycle_graph(4), fixed_arcs={(0, 1): (1, 0)})
    assert labeling.orientation.has_arc(1, 0)


def test_surviving_prefixes():
    prefixes = surviving_prefixes(cycle_graph(4), 2)
    assert prefixes == [
        {(0, 1): (0, 1), (1, 2): (1, 2)},
        {(0, 1): (0, 1), (1, 2): (2, 1)},
    ]
    assert surviving_prefixes(complete_graph(3), 3) == []
    # fixed arcs are part of every prefix
    prefixes = surviving_prefixes(cycle_graph(4), 1, fixed_arcs={(0, 1): (1, 0)})
    assert prefixes == [
        {(0, 1): (1, 0), (1, 2): (1, 2)},
        {(0, 1): (1, 0), (1, 2): (2, 1)},
    ]


def test_find_cover_orientation():
    o = find_cover_orientation(cycle_graph(4))
    assert o is not None
    assert o.is_acyclic()
    assert find_cover_orientation(complete_graph(3)) is None
    o = find_cover_orientation(cycle_graph(5))
    assert o.is_acyclic()
    assert not has_quasi_cycle(o)[0]


def test_search_stats():
    stats = SearchStats(1, 2, 3, "triangle")
    stats.merge(SearchStats(1, 1, 1))
    assert stats.to_dict() == {
        "nodes": 2,
        "prunes": 3,
        "orientations": 4,
        "shortcut": "triangle",
    }


@pytest.mark.slow
def test_branch_and_prune_agrees_with_exhaustive_on_six_vertices():
    for g in small_connected_graphs(6):
        if g.n < 6:
            continue
        pruned, _ = branch_and_prune(g)
        plain, _ = exhaustive_search(g)
        assert (pruned is None) == (plain is None), g
