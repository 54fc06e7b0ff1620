"""Contact representations obtained from boxicity (intersection) models"""

import logging
from typing import Iterable, Optional, Tuple

from .._exceptions import ConstructionError, NotProperError
from .._graph import Graph, subdivide
from ..geometry import (
    Box,
    BoxRepresentation,
    IntersectionRepresentation,
    find_private_point,
    intersection_graph,
)
from ._checks import check_parts, ensure_verified
from ._expansion import expand_boxes


_logger = logging.getLogger(__name__)


def _check_graph(r: IntersectionRepresentation, g: Optional[Graph]) -> Graph:
    found = intersection_graph(r)
    if g is not None and g != found:
        raise ConstructionError(
            f"the intersection graph of the representation ({found}) is not {g}"
        )
    return found


def bipartite_to_cbu(
    r: IntersectionRepresentation,
    parts: Optional[Tuple[Iterable[int], Iterable[int]]] = None,
) -> BoxRepresentation:
    r"""A ``(d+1)``-dimensional contact representation of a bipartite graph from a
    ``d``-dimensional intersection representation

    After :func:`expand_boxes`, vertices of ``A`` get the new first interval
    ``[0, 1]`` and vertices of ``B`` get ``[1, 2]``.

    Parameters
    ----------
    r : IntersectionRepresentation
        boxes whose intersection graph is bipartite
    parts : pair of vertex sets, optional
        ``(A, B)``; the 2-colouring of the intersection graph by default

    Raises
    ------
    ConstructionError
        when the intersection graph has an edge inside a part
    """
    g = intersection_graph(r)
    part_a, _ = check_parts(g, parts, "intersection graph")
    expanded, _ = expand_boxes(r)
    rep = BoxRepresentation(
        [
            box.with_axis((0, 1) if v in part_a else (1, 2), first=True)
            for v, box in enumerate(expanded.boxes)
        ],
        d=r.d + 1,
    )
    return ensure_verified(rep, g, "bipartite_to_cbu")


def subdivision_from_proper(
    r: IntersectionRepresentation, g: Optional[Graph] = None
) -> BoxRepresentation:
    r"""A ``(b+1)``-dimensional contact representation of the 1-subdivision of the
    intersection graph of a proper ``b``-dimensional representation

    Vertex ``v`` gets ``[2v, 2v+1]`` times its expanded box. The subdivision vertex of
    the edge ``uv`` (``u < v``) gets ``[2u+1, 2v]`` times a small box centred at a
    private point of the edge, a quarter of the expansion on each side, so it meets
    the boxes of ``u`` and ``v`` only. Vertices are numbered as in
    :func:`cbu.subdivide`.

    Raises
    ------
    ConstructionError
        when ``g`` is given and differs from the intersection graph
    NotProperError
        when some edge has no private point
    """
    g = _check_graph(r, g)
    expanded, amounts = expand_boxes(r)
    boxes = [
        box.with_axis((2 * v, 2 * v + 1), first=True)
        for v, box in enumerate(expanded.boxes)
    ]
    for u, v in g.edges:
        point = find_private_point(r, u, v)
        if point is None:
            raise NotProperError(edge=(u, v))
        house = Box(tuple((p - a / 2, p + a / 2) for p, a in zip(point, amounts)))
        boxes.append(house.with_axis((2 * u + 1, 2 * v), first=True))
    rep = BoxRepresentation(boxes, d=r.d + 1)
    return ensure_verified(rep, subdivide(g, 1).graph, "subdivision_from_proper")


def bprime_graph(b: Graph, parts: Tuple[Iterable[int], Iterable[int]]) -> Graph:
    """``b`` plus ``x = n`` joined to all of ``X``, ``y = n+1`` joined to all of ``Y``
    and ``z = n+2`` joined to ``x`` and ``y``"""
    part_x, part_y = check_parts(b, parts)
    x, y, z = b.n, b.n + 1, b.n + 2
    edges = list(b.edges)
    edges += [(v, x) for v in sorted(part_x)]
    edges += [(v, y) for v in sorted(part_y)]
    edges += [(x, z), (z, y)]
    return Graph(b.n + 3, edges)


def bprime_construction(
    b: Graph,
    r: IntersectionRepresentation,
    parts: Optional[Tuple[Iterable[int], Iterable[int]]] = None,
) -> BoxRepresentation:
    r"""Contact representation of :func:`bprime_graph` in dimension ``d + 1``

    The bipartite part comes from :func:`bipartite_to_cbu`. With ``Omega`` two more
    than its largest coordinate, ``x`` is ``[-1, 0] x [-Omega, Omega]^d``, ``y`` is
    ``[2, 3] x [-Omega, Omega]^d`` and ``z`` is ``[0, 2] x [Omega-1, Omega]^d``.

    Raises
    ------
    ConstructionError
        when ``r`` doesn't represent ``b`` or the parts don't fit
    """
    _check_graph(r, b)
    parts = check_parts(b, parts)
    base = bipartite_to_cbu(r, parts)
    omega = base.max_abs_coordinate() + 2
    _logger.debug("bprime_construction: Omega = %s", omega)
    rest = ((-omega, omega),) * r.d
    corner = ((omega - 1, omega),) * r.d
    boxes = list(base.boxes)
    boxes.append(Box(((-1, 0),) + rest))
    boxes.append(Box(((2, 3),) + rest))
    boxes.append(Box(((0, 2),) + corner))
    rep = BoxRepresentation(boxes, d=r.d + 1)
    return ensure_verified(rep, bprime_graph(b, parts), "bprime_construction")


def interval_representation(intervals: Iterable[Tuple]) -> IntersectionRepresentation:
    """a 1-dimensional intersection representation from ``(lo, hi)`` pairs"""
    return IntersectionRepresentation([Box(((lo, hi),)) for lo, hi in intervals], d=1)
