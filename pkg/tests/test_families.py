import math
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from cbu import (
    check_labeling,
    complete_bipartite_graph,
    complete_graph,
    crown_graph,
    cycle_graph,
    double_wheel_subdivided,
    find_triangle,
    fractional_chromatic_number,
    g1,
    g2,
    g3,
    generate_family,
    girth,
    grid_graph,
    grid_vertex,
    independence_number,
    jones_graph,
    jones_labeling,
    path_graph,
    r_prime_graph,
    r_prime_layout,
    series_parallel_gadget,
    shift_graph,
    shift_graph_labeling,
    shift_graph_vertices,
)
from cbu._exceptions import InvalidOptionError


def test_standard_graphs():
    assert cycle_graph(5).m == 5
    assert path_graph(1).m == 0
    assert complete_graph(4).m == 6
    assert complete_bipartite_graph(2, 3).edges == (
        (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)
    )
    g = grid_graph(2, 3)
    assert (g.n, g.m) == (6, 7)
    assert grid_vertex(2, 3, 3) == 5
    assert g.has_edge(grid_vertex(1, 3, 3), grid_vertex(2, 3, 3))
    assert grid_graph(3) == grid_graph(3, 3)
    crown = crown_graph(2)
    assert (crown.n, crown.m) == (8, 12)
    assert not crown.has_edge(1, 5) and crown.has_edge(1, 6)


@pytest.mark.parametrize(
    "build, bad",
    [(cycle_graph, 2), (path_graph, 0), (complete_graph, 0), (crown_graph, True)],
)
def test_standard_graphs_invalid(build, bad):
    with pytest.raises(InvalidOptionError):
        build(bad)


@pytest.mark.parametrize("m", range(2, 7))
def test_shift_graph(m):
    g = shift_graph(m)
    assert g.n == math.comb(m, 2)
    assert g.m == math.comb(m, 3)
    assert find_triangle(g) is None
    labeling = shift_graph_labeling(m)
    assert check_labeling(labeling) == []
    pairs = shift_graph_vertices(m)
    for t, h, label in labeling.items():
        assert pairs[t][1] == pairs[h][0] == label


def test_shift_graph_numbering():
    assert shift_graph_vertices(3) == [(1, 2), (1, 3), (2, 3)]
    assert shift_graph(3).edges == ((0, 2),)


@pytest.mark.parametrize("i", range(1, 9))
def test_jones_labeling(i):
    g = jones_graph(i)
    assert g.n == 3 * i + 2
    assert g.m == 5 * i
    labeling = jones_labeling(i)
    assert labeling.orientation.base == g
    assert check_labeling(labeling) == []


@pytest.mark.parametrize("i", range(1, 7))
def test_jones_independence(i):
    g = jones_graph(i)
    alpha, witness = independence_number(g)
    assert alpha == i + 1
    # above a quarter of the vertices
    assert 4 * alpha > g.n
    assert all(not g.has_edge(u, v) for u, v in combinations(witness, 2))
    assert Fraction(g.n, alpha) <= fractional_chromatic_number(g) < 4


def test_jones_first_is_c5():
    assert jones_graph(1) == cycle_graph(5)


@pytest.mark.parametrize("g", [4, 5, 6])
def test_double_wheel(g):
    wheel = double_wheel_subdivided(g)
    rays = 2 * g
    assert wheel.n == g + 2 + rays * (g // 2)
    assert wheel.m == g + rays * (g // 2 + 1)
    assert girth(wheel) == g
    assert nx.check_planarity(wheel.to_networkx())[0]


def test_series_parallel_gadget():
    gadget = series_parallel_gadget()
    assert (gadget.n, gadget.m) == (56, 72)
    assert girth(gadget) == 6
    small = series_parallel_gadget(1)
    assert small.neighbors(2) == frozenset({0, 3, 4})
    assert small.neighbors(7) == frozenset({6, 3})


def test_g_family():
    assert (g1().n, g1().m) == (6, 7)
    assert (g2().n, g2().m) == (8, 10)
    assert (g3().n, g3().m) == (11, 15)
    for g in (g1(), g2(), g3()):
        assert find_triangle(g) is None
        assert girth(g) == 4
        assert nx.check_planarity(g.to_networkx())[0]
    assert set(g1().edges) <= set(g2().edges) <= set(g3().edges)


def test_r_prime():
    layout = r_prime_layout(4, 4)
    assert len(layout) == 20
    assert [entry for entry in layout if entry[2]] == [
        (2, 4, "L1"), (2, 4, "R1"), (2, 4, "L2"), (2, 4, "R2"),
        (4, 2, "L1"), (4, 2, "R1"), (4, 2, "L2"), (4, 2, "R2"),
    ]
    assert (2, 2, None) not in layout and (4, 4, None) not in layout
    g = r_prime_graph(4, 4)
    assert g.n == 20
    assert find_triangle(g) is None
    assert nx.check_planarity(g.to_networkx())[0]
    # each replacement vertex has its partner and at most one grid neighbour
    for v, (_, _, part) in enumerate(layout):
        if part is not None:
            assert 1 <= g.degree(v) <= 2


def test_generate_family():
    assert generate_family("grid", n=3) == grid_graph(3)
    assert generate_family("grid", n=2, m=3) == grid_graph(2, 3)
    assert generate_family("shift", m=4) == shift_graph(4)
    assert generate_family("series-parallel") == series_parallel_gadget(9)
    assert generate_family("g3") == g3()
    assert generate_family("r-prime", n1=4, n2=4) == r_prime_graph(4, 4)
    with pytest.raises(InvalidOptionError, match=".*Did you mean 'grid'.*"):
        generate_family("gird", n=3)
    with pytest.raises(InvalidOptionError, match=".*--n.*"):
        generate_family("cycle")
