"""Triangle-free outerplanar graphs as contact graphs of rectangles

The outer boundary walk of every component is peeled down to a single vertex, one
pendant vertex or one ear (a path of degree-2 vertices hanging off an edge) at a
time. Replaying the steps backwards grows a drawing in which axis 0 is the height:
an *envelope* lists, left to right along axis 1, which box is exposed from above
over which interval, and always reads like the current boundary walk.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .._analysis import find_triangle
from .._exceptions import ConstructionError
from .._graph import Graph
from ..geometry import Box, BoxRepresentation
from ._checks import ensure_verified


_logger = logging.getLogger(__name__)

_APEX = "apex"

PENDANT = "pendant"
EAR = "ear"

Step = Tuple[str, int, Tuple[int, ...]]
Segment = Tuple[int, Fraction, Fraction]


def outer_walk(g: Graph, root: int) -> List[int]:
    """The closed walk ``[root, ..., root]`` around the outer face of the component of
    ``root`` in an outerplanar embedding (``[root]`` for an isolated vertex)

    Raises
    ------
    ConstructionError
        when the component is not outerplanar
    """
    nxg = g.to_networkx()
    component = nxg.subgraph(nx.node_connected_component(nxg, root)).copy()
    component.add_edges_from((_APEX, v) for v in list(component.nodes))
    planar, embedding = nx.check_planarity(component)
    if not planar:
        raise ConstructionError(f"the component of vertex {root} is not outerplanar")
    walk = [root]
    x = root
    while True:
        chunk = embedding.traverse_face(_APEX, x)[1:]
        walk.extend(chunk[1:])
        x = chunk[-1]
        if x == root:
            return walk


def _check_walk(g: Graph, walk: Sequence[int]):
    if not walk or walk[0] != walk[-1] and len(walk) > 1:
        raise ConstructionError("the boundary walk must be closed")
    for u, v in zip(walk, walk[1:]):
        if not g.has_edge(u, v):
            raise ConstructionError(f"the boundary walk uses the non-edge {(u, v)}")
    if set(walk) != set(g.vertices):
        raise ConstructionError("the boundary walk must visit every vertex")


def _runs(walk: List[int], adj: Dict[int, set], root: int):
    # maximal runs of inner positions holding degree-2 vertices seen once on the walk
    counts = {}
    for v in walk:
        counts[v] = counts.get(v, 0) + 1

    def eligible(pos):
        v = walk[pos]
        return v != root and len(adj[v]) == 2 and counts[v] == 1

    pos = 1
    while pos < len(walk) - 1:
        if not eligible(pos):
            pos += 1
            continue
        end = pos
        while end + 1 < len(walk) - 1 and eligible(end + 1):
            end += 1
        yield pos, end
        pos = end + 1


def _next_step(walk: List[int], adj: Dict[int, set], root: int) -> Optional[Step]:
    for p in range(len(walk) - 2):
        w = walk[p + 1]
        if walk[p] == walk[p + 2] and len(adj[w]) == 1:
            return PENDANT, p, (w,)
    for a, b in _runs(walk, adj, root):
        run = tuple(walk[a : b + 1])
        left, right = walk[a - 1], walk[b + 1]
        if left != right and len(run) >= 2 and right in adj[left]:
            return EAR, a - 1, run
        if left == right and len(run) >= 3:
            return EAR, a, run[1:]
    return None


def reduce_walk(g: Graph, walk: List[int]) -> List[Step]:
    """Peels the component with boundary walk ``walk`` down to ``walk[0]``

    Returns
    -------
    list
        the steps in the order applied, each ``(kind, position, vertices)``:
        ``("pendant", p, (w,))`` removed ``w`` from ``walk[p:p+3] == [x, w, x]`` and
        ``("ear", p, run)`` removed ``run`` from between ``walk[p]`` and the next
        vertex, which are adjacent

    Raises
    ------
    ConstructionError
        when no step applies
    """
    root = walk[0]
    walk = list(walk)
    adj = {v: set(g.neighbors(v)) for v in set(walk)}
    steps = []
    while len(walk) > 1:
        step = _next_step(walk, adj, root)
        if step is None:
            raise ConstructionError(
                f"the boundary walk {walk} can't be reduced further, the graph is not "
                "a triangle-free outerplanar graph with this walk"
            )
        kind, p, removed = step
        steps.append(step)
        for v in removed:
            for w in adj.pop(v):
                if w in adj:
                    adj[w].discard(v)
        if kind == PENDANT:
            walk[p : p + 3] = [walk[p]]
        else:
            walk[p + 1 : p + 1 + len(removed)] = []
    return steps


class _Drawing:
    """Boxes of one component together with the envelope"""

    def __init__(self, root: int, offset: Fraction):
        self.boxes: Dict[int, Box] = {root: Box(((0, 1), (offset, offset + 1)))}
        self.envelope: List[Segment] = [(root, offset, offset + 1)]

    def top(self, v: int) -> Fraction:
        return self.boxes[v].hi(0)

    def add_pendant(self, p: int, w: int):
        x, ya, yb = self.envelope[p]
        third = (yb - ya) / 3
        a, b = ya + third, yb - third
        height = self.top(x)
        self.boxes[w] = Box(((height, height + 1), (a, b)))
        self.envelope[p : p + 1] = [(x, ya, a), (w, a, b), (x, b, yb)]

    def add_ear(self, p: int, run: Tuple[int, ...]):
        left, ya, y_mid = self.envelope[p]
        right, _, yb = self.envelope[p + 1]
        t_left, t_right = self.top(left), self.top(right)
        k = len(run) - 1
        if t_right > t_left:
            self._climb_right(p, run, k, (left, ya, y_mid, t_left), (right, yb, t_right))
        else:
            self._climb_left(p, run, k, (left, ya, t_left), (right, y_mid, yb, t_right))

    def _climb_right(self, p, run, k, left_seg, right_seg):
        # staircase w_1 .. w_k over the right half of the left segment, rising from
        # the top of the left box to the top of the right box; w_(k+1) bridges over
        left, ya, y_mid, t_left = left_seg
        right, yb, t_right = right_seg
        depth = (y_mid - ya) / 2
        u = depth / (k + 2)
        lows = [y_mid - depth + (j - 1) * u for j in range(1, k + 1)]
        heights = [t_left + j * (t_right - t_left) / k for j in range(k + 1)]
        for j, w in enumerate(run[:k]):
            self.boxes[w] = Box(((heights[j], heights[j + 1]), (lows[j], lows[j] + 3 * u / 2)))
        start, end = lows[-1] + 3 * u / 4, y_mid + (yb - y_mid) / 2
        self.boxes[run[k]] = Box(((t_right, t_right + 1), (start, end)))
        segments = [(left, ya, lows[0])]
        segments += [(run[j], lows[j], lows[j + 1]) for j in range(k - 1)]
        segments += [(run[k - 1], lows[-1], start), (run[k], start, end), (right, end, yb)]
        self.envelope[p : p + 2] = segments

    def _climb_left(self, p, run, k, left_seg, right_seg):
        # mirror image: the staircase sits over the left half of the right segment
        left, ya, t_left = left_seg
        right, y_mid, yb, t_right = right_seg
        depth = (yb - y_mid) / 2
        u = depth / (k + 2)
        highs = [y_mid + depth - (j - 1) * u for j in range(1, k + 1)]
        heights = [t_right + j * (t_left - t_right) / k for j in range(k + 1)]
        stairs = list(reversed(run[1:]))
        for j, w in enumerate(stairs):
            low = highs[j] - 3 * u / 2
            self.boxes[w] = Box(((heights[j], heights[j + 1]), (low, highs[j])))
        start, end = y_mid - (y_mid - ya) / 2, highs[-1] - 3 * u / 4
        self.boxes[run[0]] = Box(((t_left, t_left + 1), (start, end)))
        segments = [(left, ya, start), (run[0], start, end), (stairs[-1], end, highs[-1])]
        segments += [(stairs[j], highs[j + 1], highs[j]) for j in range(k - 2, -1, -1)]
        segments += [(right, highs[0], yb)]
        self.envelope[p : p + 2] = segments


def outerplanar_2cbu(g: Graph, walk: Optional[Sequence[int]] = None) -> BoxRepresentation:
    r"""A 2-dimensional contact representation of a triangle-free outerplanar graph

    Every component is drawn from its smallest vertex ``r``, placed at
    ``[0, 1] x [2c, 2c+1]`` for the ``c``-th component, by replaying
    :func:`reduce_walk` backwards. A pendant vertex sits on the middle third of the
    exposed top of its neighbour. An ear ``L w_1 .. w_s R`` over the edge ``LR``
    becomes a staircase ``w_1 .. w_(s-1)`` climbing from the lower of the two tops to
    the higher one, closed by a flat box ``w_s`` lying on the higher top and on the
    last step (mirrored when ``L`` is the higher one).

    Parameters
    ----------
    g : Graph
        a triangle-free outerplanar graph
    walk : sequence of int, optional
        the outer boundary walk ``[r, ..., r]`` of a connected ``g``; computed from
        a planar embedding of ``g`` plus an apex vertex by default

    Raises
    ------
    ConstructionError
        when ``g`` has a triangle, is not outerplanar, or ``walk`` can't be peeled
    """
    triangle = find_triangle(g)
    if triangle is not None:
        raise ConstructionError(f"the graph has the triangle {triangle}")
    components = sorted(nx.connected_components(g.to_networkx()), key=min)
    if walk is not None:
        if len(components) != 1:
            raise ConstructionError("a boundary walk can only be given for a connected graph")
        _check_walk(g, walk)
    boxes: Dict[int, Box] = {}
    for c, component in enumerate(components):
        root = min(component)
        boundary = list(walk) if walk is not None else outer_walk(g, root)
        steps = reduce_walk(g, boundary)
        _logger.debug("component %d: %d reduction steps", c, len(steps))
        drawing = _Drawing(boundary[0], Fraction(2 * c))
        for kind, p, vertices in reversed(steps):
            if kind == PENDANT:
                drawing.add_pendant(p, vertices[0])
            else:
                drawing.add_ear(p, vertices)
        boxes.update(drawing.boxes)
    rep = BoxRepresentation(boxes, d=2)
    return ensure_verified(rep, g, "outerplanar_2cbu")
