"""Shift graphs, false twins and star removal: from a homogeneous labeling to boxes

A vertex with in-label ``i`` and out-label ``j`` behaves like the pair ``(i, j)`` of
the shift graph ``H_m``: arcs join ``(i, j)`` to ``(j, k)``. A labelled graph is
therefore a subgraph of ``H_m`` with some pairs repeated as false twins, and every
step below (representing ``H_m``, adding a twin, deleting a complete bipartite set of
edges) costs one extra dimension.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .._exceptions import ConstructionError, InvalidGraphError, InvalidLabelingError
from .._families import shift_graph, shift_graph_vertices
from .._graph import Graph, add_false_twin, edge_key
from .._labeling import ArcLabeling, check_labeling
from .._standard_graphs import _require
from ..geometry import Box, BoxRepresentation, contact_graph, lift_dimension
from ._checks import ensure_verified


_logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def shift_graph_representation(m: int) -> BoxRepresentation:
    r"""Contact representation of ``H_m`` in dimension ``m - 1``

    The first interval of ``(i, j)`` is exactly ``[i, j]``. From ``H_(m-1)`` the
    pairs ``(i, m)`` are added as copies of ``(i, m-1)`` stretched to ``[i, m]``, and
    ``(m-1, m)`` as ``[m-1, m]`` times a big cube. One more axis then separates each
    copy from its original: ``[1, 2]`` for ``(m-1, m)`` and the ``(i, m-1)``,
    ``[3, 4]`` for the ``(i, m)`` and ``[1, 4]`` for everything else.

    Vertices are numbered as in :func:`cbu.shift_graph_vertices`.
    """
    _require(m, 2, "shift graph order")
    boxes: Dict[Pair, Tuple] = {(1, 2): ((1, 2),)}
    for top in range(3, m + 1):
        omega = max(abs(x) for box in boxes.values() for iv in box for x in iv) + 1
        grown = dict(boxes)
        for i in range(1, top - 1):
            grown[(i, top)] = ((i, top),) + boxes[(i, top - 1)][1:]
        d = len(boxes[(1, 2)])
        grown[(top - 1, top)] = ((top - 1, top),) + ((-omega, omega),) * (d - 1)
        for pair, box in grown.items():
            if pair[1] == top - 1 or pair == (top - 1, top):
                last = (1, 2)
            elif pair[1] == top:
                last = (3, 4)
            else:
                last = (1, 4)
            grown[pair] = box + (last,)
        boxes = grown
    pairs = shift_graph_vertices(m)
    rep = BoxRepresentation([Box(boxes[p]) for p in pairs], d=m - 1)
    return ensure_verified(rep, shift_graph(m), "shift_graph_representation")


def twin_representation(r: BoxRepresentation, v: int) -> BoxRepresentation:
    """Adds a false twin ``r.n`` of ``v`` in one more dimension: the new axis is
    ``[0, 1]`` for ``v``, ``[2, 3]`` for the twin and ``[0, 3]`` elsewhere"""
    g = contact_graph(r)
    if not 0 <= v < r.n:
        raise InvalidGraphError(f"vertex {v} is out of range for {r}")
    doubled = BoxRepresentation(list(r.boxes) + [r.box(v)], d=r.d)
    lifted = lift_dimension(
        doubled,
        [(0, 1) if w == v else (2, 3) if w == r.n else (0, 3) for w in range(r.n + 1)],
    )
    return ensure_verified(lifted, add_false_twin(g, v), "twin_representation")


def remove_bipartite_edges(
    r: BoxRepresentation, part_a: Iterable[int], part_b: Iterable[int]
) -> BoxRepresentation:
    """Deletes every contact between ``A`` and ``B`` in one more dimension: the new
    axis is ``[0, 1]`` on ``A``, ``[2, 3]`` on ``B`` and ``[0, 3]`` elsewhere

    Raises
    ------
    ConstructionError
        when the parts intersect or some ``A``-``B`` pair is not in contact
    """
    part_a, part_b = frozenset(part_a), frozenset(part_b)
    if part_a & part_b:
        raise ConstructionError(f"the parts share the vertices {sorted(part_a & part_b)}")
    g = contact_graph(r)
    missing = [(a, b) for a in sorted(part_a) for b in sorted(part_b) if not g.has_edge(a, b)]
    if missing:
        raise ConstructionError(f"the pairs {missing} are not in contact")
    lifted = lift_dimension(
        r,
        [(0, 1) if w in part_a else (2, 3) if w in part_b else (0, 3) for w in range(r.n)],
    )
    removed = {edge_key(a, b) for a in part_a for b in part_b}
    target = Graph(r.n, [e for e in g.edges if e not in removed])
    return ensure_verified(lifted, target, "remove_bipartite_edges")


@dataclass(frozen=True)
class ShiftEmbedding:
    r"""Where the vertices of a labelled graph land in ``H_m`` with twins

    ``pairs[v]`` is ``(in-label, out-label)`` of ``v`` after the labels were ranked to
    ``2 .. m-1``, a source reading as in-label ``1`` and a sink as out-label ``m``.
    Vertices sharing a pair are twins of the first of them.
    """

    m: int
    pairs: Tuple[Pair, ...]

    @property
    def twins(self) -> Dict[Pair, int]:
        """``t_(i,j)``: number of vertices on ``(i, j)`` beyond the first"""
        counts = defaultdict(int)
        for pair in self.pairs:
            counts[pair] += 1
        return {pair: c - 1 for pair, c in sorted(counts.items()) if c > 1}

    @property
    def twin_count(self) -> int:
        return sum(self.twins.values())

    def implied_graph(self) -> Graph:
        """``u ~ v`` whenever the out-label of one is the in-label of the other"""
        by_in = defaultdict(list)
        for v, (i, _) in enumerate(self.pairs):
            by_in[i].append(v)
        edges = {
            edge_key(u, w)
            for u, (_, j) in enumerate(self.pairs)
            for w in by_in.get(j, ())
        }
        return Graph(len(self.pairs), edges)


def shift_embedding(labeling: ArcLabeling) -> ShiftEmbedding:
    """ranks the labels to ``2 .. q+1`` and reads off every vertex's pair

    Raises
    ------
    InvalidLabelingError
        when the labeling is not homogeneous
    """
    problems = check_labeling(labeling)
    if problems:
        raise InvalidLabelingError(problems=problems)
    o = labeling.orientation
    labels = sorted({label for _, _, label in labeling.items()})
    ranks = {label: rank for rank, label in enumerate(labels, start=2)}
    m = len(ranks) + 2
    pairs = []
    for v in o.base.vertices:
        in_label, out_label = labeling.in_label(v), labeling.out_label(v)
        pairs.append(
            (
                1 if in_label is None else ranks[in_label],
                m if out_label is None else ranks[out_label],
            )
        )
    return ShiftEmbedding(m, tuple(pairs))


def _star_schedule(extra: Graph) -> List[Tuple[int, List[int]]]:
    schedule, removed = [], set()
    for v in extra.vertices:
        leaves = sorted(w for w in extra.neighbors(v) if edge_key(v, w) not in removed)
        if leaves:
            schedule.append((v, leaves))
            removed.update(edge_key(v, w) for w in leaves)
    return schedule


def labeling_to_representation(g: Graph, labeling: ArcLabeling) -> BoxRepresentation:
    r"""A contact representation of ``g`` realising ``labeling``, in dimension at
    most ``2n - 1``

    The vertices are placed in ``H_m`` by :func:`shift_embedding`; the representation
    of ``H_m`` gets a twin for every repeated pair, is restricted to the pairs in use
    and reindexed to ``g``. The contact graph now has every arc of the labeling plus
    the extra pairs ``u -> w`` with out-label of ``u`` equal to in-label of ``w``;
    these are deleted as stars, vertex by vertex in increasing order. The first
    intervals keep the ranked labels, so contacts are oriented as in ``labeling``.

    Raises
    ------
    InvalidLabelingError
        when ``labeling`` is not a homogeneous labeling of an orientation of ``g``
    """
    if labeling.orientation.base != g:
        raise InvalidLabelingError("the labeling does not belong to an orientation of g")
    embedding = shift_embedding(labeling)
    if g.n == 0:
        return BoxRepresentation([], d=1)
    m = embedding.m
    rep = shift_graph_representation(m)
    index = {p: k for k, p in enumerate(shift_graph_vertices(m))}
    # vertex of g -> index in the growing representation
    position = {}
    for v, pair in enumerate(embedding.pairs):
        first = embedding.pairs.index(pair)
        if first == v:
            position[v] = index[pair]
        else:
            rep = twin_representation(rep, index[pair])
            position[v] = rep.n - 1
    rep = BoxRepresentation([rep.box(position[v]) for v in g.vertices], d=rep.d)
    implied = embedding.implied_graph()
    before_stars = rep.d
    extra = Graph(g.n, [e for e in implied.edges if not g.has_edge(*e)])
    for centre, leaves in _star_schedule(extra):
        rep = remove_bipartite_edges(rep, [centre], leaves)
    _logger.debug(
        "labeling_to_representation: m = %d, %d twins, dimension %d before and %d "
        "after star removal",
        m,
        embedding.twin_count,
        before_stars,
        rep.d,
    )
    return ensure_verified(rep, g, "labeling_to_representation")

