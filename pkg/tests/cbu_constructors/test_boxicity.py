from pathlib import Path

import pytest

from cbu import Graph, complete_graph, cycle_graph, subdivide
from cbu._exceptions import ConstructionError, NotProperError
from cbu._io import read_representation
from cbu.constructors import (
    bipartite_to_cbu,
    bprime_construction,
    bprime_graph,
    interval_representation,
    subdivision_from_proper,
)
from cbu.geometry import IntersectionRepresentation, contact_graph, induced_labeling


DATASETS = Path(__file__).resolve().parent.parent / "datasets"

SQUARE_GRAPH = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def square():
    return IntersectionRepresentation(
        [[(0, 1), (0, 3)], [(2, 3), (0, 3)], [(0, 3), (0, 1)], [(0, 3), (2, 3)]]
    )


@pytest.fixture
def proper_triangle():
    return IntersectionRepresentation(
        [[(0, 2), (0, 2)], [(1, 3), (0, 2)], [(0, 3), (1, 3)]]
    )


def test_bipartite_to_cbu(square):
    r = bipartite_to_cbu(square)
    assert r.d == 3
    assert contact_graph(r) == SQUARE_GRAPH
    # every contact runs from the first part to the second
    o, labeling = induced_labeling(r)
    assert {label for _, _, label in labeling.items()} == {1}
    assert all(o.is_source(v) for v in (0, 1))
    # explicit parts
    r = bipartite_to_cbu(square, ({2, 3}, {0, 1}))
    _, labeling = induced_labeling(r)
    assert labeling.out_label(2) == 1


def test_bipartite_to_cbu_rejects(square, proper_triangle):
    with pytest.raises(ConstructionError, match="not bipartite"):
        bipartite_to_cbu(proper_triangle)
    with pytest.raises(ConstructionError, match="lies inside one part"):
        bipartite_to_cbu(square, ({0, 2}, {1, 3}))
    with pytest.raises(ConstructionError, match="share the vertices"):
        bipartite_to_cbu(square, ({0, 1, 2}, {2, 3}))
    with pytest.raises(ConstructionError, match="missing \\[3\\]"):
        bipartite_to_cbu(square, ({0, 1}, {2}))


def test_subdivision_from_proper(proper_triangle):
    r = subdivision_from_proper(proper_triangle, complete_graph(3))
    assert r.d == 3 and r.n == 6
    assert contact_graph(r) == subdivide(complete_graph(3), 1).graph


def test_subdivision_of_the_c6_dataset():
    r = subdivision_from_proper(read_representation(DATASETS / "c6-intersection.json"))
    assert contact_graph(r) == subdivide(cycle_graph(6), 1).graph


def test_subdivision_from_proper_rejects(proper_triangle):
    nested = interval_representation([(0, 2), (1, 3), (1, 2)])
    assert nested.d == 1
    with pytest.raises(NotProperError) as exc_info:
        subdivision_from_proper(nested)
    assert exc_info.value.edge == (0, 1)
    with pytest.raises(ConstructionError, match="is not"):
        subdivision_from_proper(proper_triangle, Graph(3, [(0, 1)]))


def test_bprime(square):
    parts = ({0, 1}, {2, 3})
    g = bprime_graph(SQUARE_GRAPH, parts)
    assert (g.n, g.m) == (7, 10)
    assert g.neighbors(4) == {0, 1, 6}
    assert g.neighbors(6) == {4, 5}
    r = bprime_construction(SQUARE_GRAPH, square, parts)
    assert r.d == 3
    assert contact_graph(r) == g


def test_bprime_rejects(square):
    with pytest.raises(ConstructionError, match="is not"):
        bprime_construction(cycle_graph(4), square)
    with pytest.raises(ConstructionError):
        bprime_graph(complete_graph(3), ({0}, {1, 2}))
