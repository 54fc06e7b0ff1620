"""Graph homomorphisms and the transfer of arc labelings along them"""

import logging
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from ._exceptions import InvalidLabelingError, NotHomomorphismError
from ._graph import Graph, Orientation
from ._labeling import ArcLabeling, check_labeling


_logger = logging.getLogger(__name__)

VertexMap = Union[Mapping[int, int], Sequence[int]]


def _as_dict(hom: VertexMap, n: int) -> Dict[int, int]:
    hom = dict(hom) if isinstance(hom, Mapping) else dict(enumerate(hom))
    missing = [v for v in range(n) if v not in hom]
    if missing:
        raise NotHomomorphismError(f"the vertex map leaves {missing} unmapped")
    return hom


def is_homomorphism(g: Graph, h: Graph, hom: VertexMap) -> bool:
    """whether ``hom`` sends every edge of ``g`` onto an edge of ``h``"""
    try:
        hom = _as_dict(hom, g.n)
    except NotHomomorphismError:
        return False
    return all(h.has_edge(hom[u], hom[v]) for u, v in g.edges)


def find_homomorphism_c5(g: Graph) -> Optional[Dict[int, int]]:
    r"""A homomorphism from ``g`` to the 5-cycle ``0-1-2-3-4``, or ``None``

    Bipartite graphs are sent onto the edge ``0 1`` through their 2-colouring.
    Otherwise the vertices are coloured by backtracking in DFS preorder: a component's
    first vertex gets colour 0 (C_5 is vertex-transitive), every later vertex tries
    ``c + 1`` then ``c - 1`` (mod 5) from the colour ``c`` of its DFS parent, and a
    colour is kept only if it is a C_5-neighbour of every coloured neighbour.
    """
    parts = g.bipartition()
    if parts is not None:
        part_a, _ = parts
        return {v: 0 if v in part_a else 1 for v in g.vertices}
    nxg = g.to_networkx()
    order, parent = [], {}
    for component in sorted(nx.connected_components(nxg), key=min):
        root = min(component)
        tree = nx.dfs_predecessors(nxg, root)
        for v in nx.dfs_preorder_nodes(nxg, root):
            order.append(v)
            parent[v] = tree.get(v)
    colour: Dict[int, int] = {}

    def candidates(v):
        p = parent[v]
        options = (0,) if p is None else ((colour[p] + 1) % 5, (colour[p] + 4) % 5)
        for c in options:
            if all(
                (colour[w] - c) % 5 in (1, 4) for w in g.neighbors(v) if w in colour
            ):
                yield c

    # explicit stack of candidate iterators, one per position in ``order``
    stack = []
    position = 0
    while position < len(order):
        if position == len(stack):
            stack.append(candidates(order[position]))
        v = order[position]
        colour.pop(v, None)
        choice = next(stack[position], None)
        if choice is None:
            stack.pop()
            position -= 1
            if position < 0:
                _logger.debug("no homomorphism from %s to C5", g)
                return None
            continue
        colour[v] = choice
        position += 1
    return {v: colour[v] for v in g.vertices}


def pullback_labeling(
    g: Graph,
    h: Graph,
    hom: VertexMap,
    h_labeling: Union[ArcLabeling, Tuple[Orientation, ArcLabeling]],
) -> ArcLabeling:
    r"""Transfers a homogeneous labeling of ``h`` onto ``g`` along ``hom``

    The edge ``uv`` of ``g`` is oriented as ``hom(u) hom(v)`` is in ``h`` and gets its
    label.

    Parameters
    ----------
    g, h : Graph
        source and target graph
    hom : mapping or sequence
        the vertex map ``V(g) -> V(h)``
    h_labeling : ArcLabeling or tuple
        a homogeneous labeling of an orientation of ``h`` (an ``(Orientation,
        ArcLabeling)`` pair is accepted too)

    Returns
    -------
    ArcLabeling
        a homogeneous labeling of an orientation of ``g``

    Raises
    ------
    NotHomomorphismError
        when some edge of ``g`` is not mapped onto an edge of ``h``
    InvalidLabelingError
        when ``h_labeling`` is not a homogeneous labeling of ``h``
    """
    if isinstance(h_labeling, tuple):
        h_labeling = h_labeling[1]
    if h_labeling.orientation.base != h:
        raise InvalidLabelingError("the labeling does not belong to an orientation of h")
    problems = check_labeling(h_labeling)
    if problems:
        raise InvalidLabelingError(problems=problems)
    hom = _as_dict(hom, g.n)
    for u, v in g.edges:
        if not h.has_edge(hom[u], hom[v]):
            raise NotHomomorphismError(
                f"edge {(u, v)} is sent to the non-edge {(hom[u], hom[v])}"
            )
    ho = h_labeling.orientation
    labels = {}
    for u, v in g.edges:
        if ho.has_arc(hom[u], hom[v]):
            labels[(u, v)] = h_labeling.label(hom[u], hom[v])
        else:
            labels[(v, u)] = h_labeling.label(hom[v], hom[u])
    return ArcLabeling(Orientation(g, labels), labels)
