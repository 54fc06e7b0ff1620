"""Generators for named graph families and gadgets

Every generator documents its vertex numbering.
"""

import difflib
from typing import Callable, Dict, List, Optional, Tuple

from ._exceptions import InvalidOptionError
from ._graph import Graph, Orientation, subdivide
from ._labeling import ArcLabeling
from ._standard_graphs import (
    _require,
    complete_bipartite_graph,
    complete_graph,
    crown_graph,
    cycle_graph,
    grid_graph,
    path_graph,
)


# ---------- shift graphs -----------------------------------------------------------
def shift_graph_vertices(m: int) -> List[Tuple[int, int]]:
    """the pairs ``(i, j)``, ``1 <= i < j <= m``, in lexicographic order; pair number
    ``k`` in this list is vertex ``k`` of :func:`shift_graph`"""
    _require(m, 2, "shift graph order")
    return [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


def shift_graph(m: int) -> Graph:
    """H_m: ``(i, j) ~ (k, l)`` iff ``j == k`` or ``l == i``"""
    pairs = shift_graph_vertices(m)
    index = {p: v for v, p in enumerate(pairs)}
    edges = [
        (index[(i, j)], index[(j, k)])
        for i, j in pairs
        for k in range(j + 1, m + 1)
    ]
    return Graph(len(pairs), edges)


def shift_graph_labeling(m: int) -> ArcLabeling:
    """arcs ``(i, j) -> (j, k)`` labelled ``j``"""
    pairs = shift_graph_vertices(m)
    index = {p: v for v, p in enumerate(pairs)}
    labels = {
        (index[(i, j)], index[(j, k)]): j
        for i, j in pairs
        for k in range(j + 1, m + 1)
    }
    o = Orientation(shift_graph(m), labels)
    return ArcLabeling(o, labels)


# ---------- 5-cycle ---------------------------------------------------------------
def good_c5_labeling() -> ArcLabeling:
    """C_5 oriented from source 0 to sink 3 along 0-1-2-3 and 0-4-3"""
    labels = {(0, 1): 1, (0, 4): 1, (1, 2): 2, (2, 3): 3, (4, 3): 3}
    return ArcLabeling(Orientation(cycle_graph(5), labels), labels)


# ---------- Jones graphs -----------------------------------------------------------
def _jones_index(i: int) -> Dict[str, int]:
    names = {"a1": 0, "b1": 1, "c1": 2, "d": 3, "e": 4}
    for k in range(2, i + 1):
        names[f"a{k}"] = 3 * k - 1
        names[f"b{k}"] = 3 * k
        names[f"c{k}"] = 3 * k + 1
    return names


def jones_graph(i: int) -> Graph:
    """J_i on ``3i + 2`` vertices

    J_1 is the 5-cycle ``a1 b1 c1 d e``, numbered 0..4. J_(k+1) adds ``a_(k+1)``,
    ``b_(k+1)``, ``c_(k+1)`` (numbers ``3k+2``, ``3k+3``, ``3k+4``) with
    ``N(a_(k+1)) = {b_k, b_(k+1)}``, ``N(b_(k+1)) = {a_(k+1), c_(k+1)}`` and
    ``N(c_(k+1)) = {a_k, c_k, b_(k+1)}``.
    """
    _require(i, 1, "Jones graph index")
    v = _jones_index(i)
    edges = [
        (v["a1"], v["b1"]),
        (v["b1"], v["c1"]),
        (v["c1"], v["d"]),
        (v["d"], v["e"]),
        (v["e"], v["a1"]),
    ]
    for k in range(1, i):
        a, b, c = v[f"a{k}"], v[f"b{k}"], v[f"c{k}"]
        a2, b2, c2 = v[f"a{k + 1}"], v[f"b{k + 1}"], v[f"c{k + 1}"]
        edges += [(a2, b), (a2, b2), (b2, c2), (c2, a), (c2, c)]
    return Graph(3 * i + 2, edges)


def jones_labeling(i: int) -> ArcLabeling:
    """Homogeneous labeling of J_i

    ``a_k -> b_k``, ``c_k -> b_k``, ``a_k -> c_(k+1)`` and ``c_k -> c_(k+1)`` get
    ``2k``, ``b_k -> a_(k+1)`` gets ``2k + 1``; on the starting 5-cycle ``e -> a1``
    and ``e -> d`` get 0 and ``d -> c1`` gets 1.
    """
    g = jones_graph(i)
    v = _jones_index(i)
    labels = {
        (v["e"], v["a1"]): 0,
        (v["e"], v["d"]): 0,
        (v["d"], v["c1"]): 1,
    }
    for k in range(1, i + 1):
        a, b, c = v[f"a{k}"], v[f"b{k}"], v[f"c{k}"]
        labels[(a, b)] = 2 * k
        labels[(c, b)] = 2 * k
        if k < i:
            labels[(a, v[f"c{k + 1}"])] = 2 * k
            labels[(c, v[f"c{k + 1}"])] = 2 * k
            labels[(b, v[f"a{k + 1}"])] = 2 * k + 1
    return ArcLabeling(Orientation(g, labels), labels)


# ---------- planar gadgets --------------------------------------------------------
def double_wheel_subdivided(g: int) -> Graph:
    """W'_g: the cycle C_g (vertices ``0..g-1``) plus two apexes ``g`` and ``g+1``
    joined to every cycle vertex, each of these rays subdivided ``g // 2`` times
    (numbering of subdivision vertices as in :func:`cbu.subdivide`)"""
    _require(g, 3, "double wheel girth")
    cycle = cycle_graph(g)
    rays = [(c, g + side) for side in (0, 1) for c in range(g)]
    wheel = Graph(g + 2, list(cycle.edges) + rays)
    return subdivide(wheel, {ray: g // 2 for ray in rays}).graph


def series_parallel_gadget(paths: int = 9) -> Graph:
    """``a = 0`` and ``b = 1`` joined by ``paths`` disjoint paths ``a x y b``, each
    edge ``x y`` doubled by a path of length 5

    Path ``p`` (from 0) uses ``x = 2 + 6p``, ``y = 3 + 6p`` and the inner vertices
    ``4 + 6p .. 7 + 6p`` of the long ``x``-``y`` path, in order from ``x``.
    """
    _require(paths, 1, "number of paths")
    edges = []
    for p in range(paths):
        x, y = 2 + 6 * p, 3 + 6 * p
        inner = [4 + 6 * p + t for t in range(4)]
        edges += [(0, x), (x, y), (y, 1)]
        chain = [x] + inner + [y]
        edges += list(zip(chain, chain[1:]))
    return Graph(2 + 6 * paths, edges)


# a, b, c, d, e, f = 0..5; the 4-cycle a b d c and the 5-cycle b e f c d
_G1_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (4, 5), (5, 2)]
# j = 6, k = 7: the path a j k d
_G2_EXTRA = [(0, 6), (6, 7), (7, 3)]
# i = 8, e' = 9, f' = 10: the 4-cycle j a c i and the 5-cycle a e' f' i c repeat the
# G1 pattern with j, c in the roles of a, d
_G3_EXTRA = [(6, 8), (8, 2), (0, 9), (9, 10), (10, 8)]


def g1() -> Graph:
    """6 vertices ``a b c d e f``: 4-cycle ``a b d c`` sharing the path ``b d c``
    with the 5-cycle ``b e f c d``"""
    return Graph(6, _G1_EDGES)


def g2() -> Graph:
    """:func:`g1` plus the path ``a j k d`` (``j = 6``, ``k = 7``)"""
    return Graph(8, _G1_EDGES + _G2_EXTRA)


def g3() -> Graph:
    """:func:`g2` plus ``i = 8``, ``e' = 9``, ``f' = 10`` with edges ``j i``,
    ``i c``, ``a e'``, ``e' f'`` and ``f' i``: planar, girth 4, not CBU"""
    return Graph(11, _G1_EDGES + _G2_EXTRA + _G3_EXTRA)


# ---------- R'(n1, n2) ------------------------------------------------------------
REPLACEMENT_PARTS = ("L1", "R1", "L2", "R2")


def r_prime_layout(n1: int, n2: int) -> List[Tuple[int, int, Optional[str]]]:
    """Vertex list of R'(n1, n2) as ``(i, j, part)``

    Grid vertices ``(i, j)`` come in lexicographic order with ``part = None``. A
    position with ``i`` and ``j`` both even is dropped; when moreover
    ``i + j = 2 (mod 4)`` its place in the order is taken by four vertices with parts
    ``"L1"``, ``"R1"``, ``"L2"``, ``"R2"``.
    """
    _require(n1, 1, "grid size")
    _require(n2, 1, "grid size")
    layout = []
    for i in range(1, n1 + 1):
        for j in range(1, n2 + 1):
            if i % 2 == 0 and j % 2 == 0:
                if (i + j) % 4 == 2:
                    layout.extend((i, j, part) for part in REPLACEMENT_PARTS)
            else:
                layout.append((i, j, None))
    return layout


def r_prime_graph(n1: int, n2: int) -> Graph:
    """R'(n1, n2), numbered as in :func:`r_prime_layout`

    Each replaced position ``(i, j)`` carries the paths
    ``(i-1, j) - L1 - R1 - (i, j+1)`` and ``(i, j-1) - L2 - R2 - (i+1, j)``; grid
    neighbours outside the grid are simply left out.
    """
    layout = r_prime_layout(n1, n2)
    index = {entry: v for v, entry in enumerate(layout)}

    def grid(i, j):
        return index.get((i, j, None))

    edges = []
    for i, j, part in layout:
        if part is not None:
            continue
        for a, b in ((i + 1, j), (i, j + 1)):
            if grid(a, b) is not None:
                edges.append((index[(i, j, None)], grid(a, b)))
    for (i, j, part), v in index.items():
        if part == "L1":
            l1, r1 = v, index[(i, j, "R1")]
            l2, r2 = index[(i, j, "L2")], index[(i, j, "R2")]
            edges += [(l1, r1), (l2, r2)]
            ends = ((l1, (i - 1, j)), (r1, (i, j + 1)), (l2, (i, j - 1)), (r2, (i + 1, j)))
            for end, neighbour in ends:
                if grid(*neighbour) is not None:
                    edges.append((end, grid(*neighbour)))
    return Graph(len(layout), edges)


# ---------- registry for the command line -----------------------------------------
def _param(params, name):
    if params.get(name) is None:
        raise InvalidOptionError(
            name=f"value of --{name.replace('_', '-')}",
            invalid_option=None,
            valid_options="a positive integer",
        )
    return params[name]


#: family name -> builder taking the CLI parameters
family_table: Dict[str, Callable[[dict], Graph]] = {
    "cycle": lambda p: cycle_graph(_param(p, "n")),
    "path": lambda p: path_graph(_param(p, "n")),
    "complete": lambda p: complete_graph(_param(p, "n")),
    "complete-bipartite": lambda p: complete_bipartite_graph(_param(p, "n"), _param(p, "m")),
    "grid": lambda p: grid_graph(_param(p, "n"), p.get("m")),
    "crown": lambda p: crown_graph(_param(p, "n")),
    "shift": lambda p: shift_graph(_param(p, "m")),
    "jones": lambda p: jones_graph(_param(p, "i")),
    "double-wheel": lambda p: double_wheel_subdivided(_param(p, "g")),
    "series-parallel": lambda p: series_parallel_gadget(p.get("paths") or 9),
    "g1": lambda p: g1(),
    "g2": lambda p: g2(),
    "g3": lambda p: g3(),
    "r-prime": lambda p: r_prime_graph(_param(p, "n1"), _param(p, "n2")),
}


def generate_family(name: str, **params) -> Graph:
    """builds a family member by its command-line name, e.g.
    ``generate_family("grid", n=4)``"""
    if name not in family_table:
        close = difflib.get_close_matches(name, family_table.keys())
        suffix = f"Did you mean '{close[0]}'?" if close else ""
        raise InvalidOptionError(
            suffix,
            name="family",
            invalid_option=name,
            valid_options=sorted(family_table),
        )
    return family_table[name](params)
