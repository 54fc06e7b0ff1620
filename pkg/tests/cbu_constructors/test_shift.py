import pytest

from cbu import (
    ArcLabeling,
    Graph,
    Orientation,
    add_false_twin,
    cycle_graph,
    good_c5_labeling,
    jones_graph,
    jones_labeling,
    path_graph,
    shift_graph,
    shift_graph_vertices,
)
from cbu._exceptions import ConstructionError, InvalidGraphError, InvalidLabelingError
from cbu.constructors import (
    ShiftEmbedding,
    labeling_to_representation,
    remove_bipartite_edges,
    shift_embedding,
    shift_graph_representation,
    twin_representation,
)
from cbu.geometry import contact_graph, induced_labeling


@pytest.fixture
def two_arcs():
    # 0 -> 1 and 2 -> 3, every label 1
    o = Orientation.from_arcs(4, [(0, 1), (2, 3)])
    return ArcLabeling(o, {(0, 1): 1, (2, 3): 1})


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_shift_graph_representation(m):
    r = shift_graph_representation(m)
    assert r.d == m - 1
    assert contact_graph(r) == shift_graph(m)
    # the first interval of (i, j) is [i, j]
    for v, pair in enumerate(shift_graph_vertices(m)):
        assert r.box(v).intervals[0] == pair


def test_shift_graph_representation_h3():
    r = shift_graph_representation(3)
    assert [b.intervals for b in r.boxes] == [
        ((1, 2), (1, 2)),
        ((1, 3), (3, 4)),
        ((2, 3), (1, 2)),
    ]


def test_twin_representation():
    r = shift_graph_representation(3)
    twin = twin_representation(r, 0)
    assert twin.d == 3 and twin.n == 4
    assert contact_graph(twin) == add_false_twin(shift_graph(3), 0)
    with pytest.raises(InvalidGraphError, match="out of range"):
        twin_representation(r, 3)


def test_remove_bipartite_edges():
    r = shift_graph_representation(4)
    g = shift_graph(4)
    u, w = g.edges[0]
    removed = remove_bipartite_edges(r, [u], [w])
    assert removed.d == r.d + 1
    assert contact_graph(removed) == Graph(g.n, g.edges[1:])
    with pytest.raises(ConstructionError, match="share the vertices"):
        remove_bipartite_edges(r, [u], [u, w])
    non_neighbour = next(v for v in g.vertices if v != u and not g.has_edge(u, v))
    with pytest.raises(ConstructionError, match="not in contact"):
        remove_bipartite_edges(r, [u], [non_neighbour])


def test_shift_embedding_of_c5():
    embedding = shift_embedding(good_c5_labeling())
    assert embedding == ShiftEmbedding(5, ((1, 2), (2, 3), (3, 4), (4, 5), (2, 4)))
    assert embedding.twins == {}
    assert embedding.twin_count == 0
    assert embedding.implied_graph() == cycle_graph(5)


def test_shift_embedding_with_twins(two_arcs):
    embedding = shift_embedding(two_arcs)
    assert embedding.m == 3
    assert embedding.pairs == ((1, 2), (2, 3), (1, 2), (2, 3))
    assert embedding.twins == {(1, 2): 1, (2, 3): 1}
    assert embedding.twin_count == 2
    assert embedding.implied_graph() == Graph(4, [(0, 1), (0, 3), (1, 2), (2, 3)])


def test_shift_embedding_rejects():
    o = Orientation.from_arcs(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidLabelingError, match="not below"):
        shift_embedding(ArcLabeling(o, {(0, 1): 2, (1, 2): 2}))


def test_labeling_to_representation_c5():
    labeling = good_c5_labeling()
    r = labeling_to_representation(cycle_graph(5), labeling)
    assert r.d == 4
    assert contact_graph(r) == cycle_graph(5)
    o, _ = induced_labeling(r)
    assert o == labeling.orientation


def test_labeling_to_representation_removes_stars(two_arcs):
    g = two_arcs.orientation.base
    r = labeling_to_representation(g, two_arcs)
    # H_3, two twins and two stars
    assert r.d == 6
    assert contact_graph(r) == g
    o, _ = induced_labeling(r)
    assert o == two_arcs.orientation


@pytest.mark.parametrize("i", [1, 2, 3])
def test_labeling_to_representation_jones(i):
    g = jones_graph(i)
    r = labeling_to_representation(g, jones_labeling(i))
    assert contact_graph(r) == g
    assert r.d <= 2 * g.n - 1


def test_labeling_to_representation_rejects():
    with pytest.raises(InvalidLabelingError, match="does not belong"):
        labeling_to_representation(path_graph(5), good_c5_labeling())
    empty = ArcLabeling(Orientation(Graph(0), []), {})
    assert labeling_to_representation(Graph(0), empty).n == 0
