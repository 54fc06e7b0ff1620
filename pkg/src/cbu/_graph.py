"""Graph and orientation data model

Vertices are dense integer indices ``0..n-1``. All objects here are immutable after
construction; transformations return new objects together with provenance maps.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

import networkx as nx

from ._exceptions import InvalidGraphError


Edge = Tuple[int, int]
Arc = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """the undirected edge ``{u, v}`` written with its smaller endpoint first"""
    return (u, v) if u < v else (v, u)


def _check_vertex_index(v, n: int, what: str = "vertex"):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidGraphError(f"{what} {v!r} is not an integer index")
    if not 0 <= v < n:
        raise InvalidGraphError(f"{what} {v} is out of range for a graph on {n} vertices")


class Graph:
    r"""A finite simple undirected graph on the vertices ``0..n-1``

    Parameters
    ----------
    n : int
        number of vertices
    edges : iterable of pairs
        the edges, each an unordered pair of distinct vertices

    Raises
    ------
    InvalidGraphError
        on self-loops, parallel edges or endpoints outside ``0..n-1``

    Examples
    --------

    >>> from cbu import Graph
    >>> g = Graph(3, [(0, 1), (2, 1)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> sorted(g.neighbors(1))
    [0, 2]
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidGraphError(f"vertex count must be a nonnegative integer, got {n!r}")
        keys = set()
        for edge in edges:
            try:
                u, v = edge
            except (TypeError, ValueError) as exception:
                raise InvalidGraphError(f"edge {edge!r} is not a pair") from exception
            _check_vertex_index(u, n, "edge endpoint")
            _check_vertex_index(v, n, "edge endpoint")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            key = edge_key(u, v)
            if key in keys:
                raise InvalidGraphError(f"parallel edge {key}")
            keys.add(key)
        self._n = n
        self._edges = tuple(sorted(keys))
        adj = [set() for _ in range(n)]
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)

    @property
    def n(self) -> int:
        """number of vertices"""
        return self._n

    @property
    def m(self) -> int:
        """number of edges"""
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """the edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order"""
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset:
        _check_vertex_index(v, self._n)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj[u]

    def edge_index(self) -> Dict[Edge, int]:
        """position of every edge in :attr:`edges`"""
        return {e: k for k, e in enumerate(self._edges)}

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def bipartition(self) -> Union[Tuple[frozenset, frozenset], None]:
        """a 2-colouring ``(A, B)`` with the smallest vertex of every component in
        ``A``, or ``None`` when the graph has an odd cycle"""
        nxg = self.to_networkx()
        if not nx.is_bipartite(nxg):
            return None
        colour = nx.bipartite.color(nxg)
        part_a, part_b = set(), set()
        for component in nx.connected_components(nxg):
            root = min(component)
            for v in component:
                (part_a if colour[v] == colour[root] else part_b).add(v)
        return frozenset(part_a), frozenset(part_b)

    def is_connected(self) -> bool:
        return self._n > 0 and nx.is_connected(self.to_networkx())

    def spanning_subgraph(self, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """the graph on the same vertices restricted to ``edges``, which must all be
        edges of this graph"""
        edges = [edge_key(*e) for e in edges]
        for e in edges:
            if not self.has_edge(*e):
                raise InvalidGraphError(f"{e} is not an edge of the graph")
        return Graph(self._n, edges)

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self._n))
        nxg.add_edges_from(self._edges)
        return nxg

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> "Graph":
        """converts a networkx graph, relabelling nodes ``0..n-1`` in node order when
        they aren't already these integers"""
        if set(nxg.nodes) != set(range(nxg.number_of_nodes())):
            nxg = nx.convert_node_labels_to_integers(nxg)
        return cls(nxg.number_of_nodes(), nxg.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


class Orientation:
    r"""An assignment of a direction to every edge of a :class:`Graph`

    Parameters
    ----------
    base : Graph
        the underlying undirected graph
    arcs : iterable of pairs
        one ``(tail, head)`` pair per edge of ``base``

    Raises
    ------
    InvalidGraphError
        when an arc is not an edge of ``base``, an edge is oriented twice, or some
        edge is left unoriented
    """

    __slots__ = ("_base", "_direction", "_out", "_in")

    def __init__(self, base: Graph, arcs: Iterable[Tuple[int, int]]):
        direction = {}
        for arc in arcs:
            try:
                tail, head = arc
            except (TypeError, ValueError) as exception:
                raise InvalidGraphError(f"arc {arc!r} is not a pair") from exception
            if not base.has_edge(tail, head):
                raise InvalidGraphError(f"arc {(tail, head)} is not an edge of {base}")
            key = edge_key(tail, head)
            if key in direction:
                raise InvalidGraphError(f"edge {key} is oriented more than once")
            direction[key] = (tail, head)
        if len(direction) != base.m:
            missing = [e for e in base.edges if e not in direction]
            raise InvalidGraphError(f"edges left without a direction: {missing}")
        self._base = base
        self._direction = {e: direction[e] for e in base.edges}
        outs = [set() for _ in base.vertices]
        ins = [set() for _ in base.vertices]
        for tail, head in self._direction.values():
            outs[tail].add(head)
            ins[head].add(tail)
        self._out = tuple(frozenset(s) for s in outs)
        self._in = tuple(frozenset(s) for s in ins)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> "Orientation":
        """builds the base graph from the arcs themselves"""
        arcs = list(arcs)
        return cls(Graph(n, arcs), arcs)

    @property
    def base(self) -> Graph:
        return self._base

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        """the arcs, listed in the order of :attr:`Graph.edges`"""
        return tuple(self._direction.values())

    def direction(self, u: int, v: int) -> Arc:
        """the arc that the edge ``{u, v}`` was turned into"""
        try:
            return self._direction[edge_key(u, v)]
        except KeyError:
            raise InvalidGraphError(f"{(u, v)} is not an edge of {self._base}") from None

    def has_arc(self, tail: int, head: int) -> bool:
        return self._direction.get(edge_key(tail, head)) == (tail, head)

    def out_neighbors(self, v: int) -> frozenset:
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset:
        return self._in[v]

    def is_source(self, v: int) -> bool:
        return not self._in[v]

    def is_sink(self, v: int) -> bool:
        return not self._out[v]

    def reversed(self) -> "Orientation":
        return Orientation(self._base, ((h, t) for t, h in self.arcs))

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def restrict_to_cycle(self, cycle: "WalkCycle") -> "Orientation":
        """the orientation of ``cycle`` alone, as a standalone oriented cycle whose
        vertex ``i`` is ``cycle.vertices[i]``"""
        position = {v: i for i, v in enumerate(cycle.vertices)}
        arcs = [self.direction(u, v) for u, v in cycle.edges()]
        return Orientation.from_arcs(
            cycle.length, ((position[t], position[h]) for t, h in arcs)
        )

    def to_networkx(self) -> nx.DiGraph:
        nxd = nx.DiGraph()
        nxd.add_nodes_from(self._base.vertices)
        nxd.add_edges_from(self.arcs)
        return nxd

    def __eq__(self, other) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self._base == other._base and self._direction == other._direction

    def __hash__(self) -> int:
        return hash((self._base, self.arcs))

    def __repr__(self) -> str:
        return f"Orientation(n={self._base.n}, arcs={list(self.arcs)})"


def iter_orientations(g: Graph) -> Iterator[Orientation]:
    """all ``2**m`` orientations of ``g``; edge ``k`` is flipped from ``(u, v)`` to
    ``(v, u)`` when bit ``k`` of the running index is set"""
    for flips in itertools.product((False, True), repeat=g.m):
        yield Orientation(
            g, ((v, u) if flip else (u, v) for (u, v), flip in zip(g.edges, flips))
        )


@dataclass(frozen=True)
class WalkCycle:
    """A cycle ``v0, ..., v(k-1)`` given by its cyclic vertex sequence"""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise InvalidGraphError(f"a cycle needs at least 3 vertices: {self.vertices}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraphError(f"cycle repeats a vertex: {self.vertices}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """consecutive pairs ``(v_i, v_(i+1))`` including the closing pair"""
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def is_cycle_of(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges())

    def reversed(self) -> "WalkCycle":
        vs = self.vertices
        return WalkCycle((vs[0],) + tuple(reversed(vs[1:])))

    def canonical(self) -> "WalkCycle":
        """rotation starting at the smallest vertex, continuing towards its smaller
        cycle neighbour"""
        vs = self.vertices
        i = vs.index(min(vs))
        rotated = vs[i:] + vs[:i]
        if rotated[-1] < rotated[1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        return WalkCycle(rotated)


def enumerate_cycles(g: Graph, max_length: int) -> Iterator[WalkCycle]:
    """Yields every cycle of ``g`` with at most ``max_length`` vertices, once each up
    to rotation and reflection

    Cycles come in canonical form (see :meth:`WalkCycle.canonical`), sorted by length
    and then lexicographically, so the output is deterministic.
    """
    if max_length < 3:
        raise InvalidGraphError(f"max_length must be at least 3, got {max_length}")
    seen = set()
    for cycle in nx.simple_cycles(g.to_networkx(), length_bound=max_length):
        if len(cycle) < 3:
            continue
        seen.add(WalkCycle(cycle).canonical().vertices)
    for vertices in sorted(seen, key=lambda c: (len(c), c)):
        yield WalkCycle(vertices)


class Subdivision(NamedTuple):
    """Result of :func:`subdivide`"""

    #: the subdivided graph
    graph: Graph
    #: fresh vertex -> (original edge, position 1..r along the path from its smaller end)
    provenance: Dict[int, Tuple[Edge, int]]
    #: original edge -> full path ``(u, s1, ..., sr, v)`` with ``u < v``
    paths: Dict[Edge, Tuple[int, ...]]


def subdivide(g: Graph, times: Union[int, Mapping[Tuple[int, int], int]]) -> Subdivision:
    r"""Replaces every edge ``uv`` by a path with ``times[uv]`` fresh inner vertices

    Parameters
    ----------
    g : Graph
        the graph to subdivide
    times : int or mapping
        a uniform count, or a count per edge (edges absent from the mapping get 0)

    Returns
    -------
    Subdivision
        the new graph with provenance. Fresh vertices are numbered from ``g.n`` on,
        edge by edge in the order of :attr:`Graph.edges`, each path running from the
        smaller endpoint to the larger one.
    """
    if isinstance(times, int):
        counts = {e: times for e in g.edges}
    else:
        counts = {}
        for (u, v), r in times.items():
            if not g.has_edge(u, v):
                raise InvalidGraphError(f"{(u, v)} is not an edge of {g}")
            counts[edge_key(u, v)] = r
    if any(r < 0 for r in counts.values()):
        raise InvalidGraphError("subdivision counts must be nonnegative")
    next_vertex = g.n
    edges, provenance, paths = [], {}, {}
    for e in g.edges:
        r = counts.get(e, 0)
        inner = tuple(range(next_vertex, next_vertex + r))
        next_vertex += r
        path = (e[0],) + inner + (e[1],)
        paths[e] = path
        for pos, s in enumerate(inner, start=1):
            provenance[s] = (e, pos)
        edges.extend(zip(path, path[1:]))
    return Subdivision(Graph(next_vertex, edges), provenance, paths)


def add_false_twin(g: Graph, v: int) -> Graph:
    """adds vertex ``g.n`` with the neighbourhood of ``v``, non-adjacent to ``v``"""
    _check_vertex_index(v, g.n)
    twin = g.n
    return Graph(g.n + 1, list(g.edges) + [(u, twin) for u in sorted(g.neighbors(v))])
