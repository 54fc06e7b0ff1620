"""Explicit 2- and 3-dimensional representations of grids and subdivisions"""

import logging
from fractions import Fraction
from typing import Mapping, Tuple, Union

from .._exceptions import ConstructionError
from .._families import r_prime_graph, r_prime_layout
from .._graph import Graph, edge_key, subdivide
from .._standard_graphs import _require, grid_graph, grid_vertex
from ..geometry import Box, BoxRepresentation
from ._checks import ensure_verified


_logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def double_subdivision_to_3cbu(
    g: Graph, counts: Union[int, Mapping[Tuple[int, int], int]] = 2
) -> BoxRepresentation:
    r"""3-dimensional contact representation of ``subdivide(g, counts)``

    With 1-based ``i = u + 1``, vertex ``u`` gets
    ``[3i, 3i+1] x [n-i, n-i+1] x [0, 2m]``. For the ``k``-th edge ``ij``
    (1-based, ``i < j``) with inner path ``s_1 .. s_r`` from the ``i`` side, ``s_1``
    gets ``[3i+1, 3i+2] x [n-j, n-i+1] x [2k-1, 2k]`` and ``s_l`` (``l >= 2``) splits
    ``[3i+2, 3j]`` into ``r - 1`` equal steps on the thin slab
    ``[n-j, n-j+1/2] x [2k-1, 2k]``.

    Raises
    ------
    ConstructionError
        when some edge is subdivided fewer than two times
    """
    if isinstance(counts, int):
        per_edge = {e: counts for e in g.edges}
    else:
        per_edge = {e: 0 for e in g.edges}
        per_edge.update({edge_key(*e): c for e, c in counts.items()})
    short = [e for e, c in per_edge.items() if c < 2]
    if short:
        raise ConstructionError(
            f"every edge must be subdivided at least twice, not so for {short}"
        )
    sub = subdivide(g, per_edge)
    n, m = g.n, g.m
    boxes = [None] * sub.graph.n
    for u in g.vertices:
        i = u + 1
        boxes[u] = Box(((3 * i, 3 * i + 1), (n - i, n - i + 1), (0, max(2 * m, 1))))
    for k, e in enumerate(g.edges, start=1):
        path = sub.paths[e]
        inner = path[1:-1]
        i, j = e[0] + 1, e[1] + 1
        depth = (2 * k - 1, 2 * k)
        boxes[inner[0]] = Box(((3 * i + 1, 3 * i + 2), (n - j, n - i + 1), depth))
        step = Fraction(3 * j - 3 * i - 2, len(inner) - 1)
        for ell, s in enumerate(inner[1:], start=2):
            start = 3 * i + 2 + (ell - 2) * step
            boxes[s] = Box(((start, start + step), (n - j, n - j + HALF), depth))
    rep = BoxRepresentation(boxes, d=3)
    return ensure_verified(rep, sub.graph, "double_subdivision_to_3cbu")


def _grid_box(i: int, j: int) -> Box:
    return Box(((i + j - 1, i + j), (2 * i - 2 * j, 2 * i - 2 * j + 3)))


def grid_2cbu(n: int, n2: int = None) -> BoxRepresentation:
    """The ``n x n2`` grid (square by default) in the plane: ``(i, j)`` becomes
    ``[i+j-1, i+j] x [2i-2j, 2i-2j+3]``, numbered as in :func:`cbu.grid_graph`"""
    n2 = n if n2 is None else n2
    _require(n, 1, "grid size")
    _require(n2, 1, "grid size")
    boxes = {}
    for i in range(1, n + 1):
        for j in range(1, n2 + 1):
            boxes[grid_vertex(i, j, n2)] = _grid_box(i, j)
    rep = BoxRepresentation(boxes, d=2)
    return ensure_verified(rep, grid_graph(n, n2), "grid_2cbu")


def _replacement_box(i: int, j: int, part: str) -> Box:
    x0, y0 = i + j - 1, 2 * i - 2 * j
    left = (x0, x0 + HALF)
    right = (x0 + HALF, x0 + 1)
    low = (y0, y0 + 1)
    high = (y0 + 2, y0 + 3)
    return Box(
        {
            "L1": (left, low),
            "R1": (right, low),
            "L2": (left, high),
            "R2": (right, high),
        }[part]
    )


def r_prime_2cbu(n1: int, n2: int) -> BoxRepresentation:
    """:func:`cbu.r_prime_graph` in the plane

    Grid vertices keep their :func:`grid_2cbu` boxes; the four vertices replacing a
    position split the lower and upper unit square of its box into left and right
    halves, ``L1 R1`` low and ``L2 R2`` high.
    """
    boxes = [
        _grid_box(i, j) if part is None else _replacement_box(i, j, part)
        for i, j, part in r_prime_layout(n1, n2)
    ]
    rep = BoxRepresentation(boxes, d=2)
    return ensure_verified(rep, r_prime_graph(n1, n2), "r_prime_2cbu")
