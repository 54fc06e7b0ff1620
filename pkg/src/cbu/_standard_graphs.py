"""Textbook graphs with documented vertex numbering"""

from ._exceptions import InvalidOptionError
from ._graph import Graph


def _require(value: int, minimum: int, name: str):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InvalidOptionError(
            name=name, invalid_option=value, valid_options=f"integers >= {minimum}"
        )


def cycle_graph(k: int) -> Graph:
    """C_k on ``0..k-1`` with edges ``i ~ i+1 (mod k)``"""
    _require(k, 3, "cycle length")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    """P_k, the path on ``k`` vertices ``0 - 1 - ... - (k-1)``"""
    _require(k, 1, "path length")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(n: int) -> Graph:
    _require(n, 1, "complete graph size")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with part ``0..a-1`` and part ``a..a+b-1``"""
    _require(a, 1, "part size")
    _require(b, 1, "part size")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def grid_vertex(i: int, j: int, n2: int) -> int:
    """index of the 1-indexed grid vertex ``(i, j)`` in a grid with ``n2`` columns"""
    return (i - 1) * n2 + (j - 1)


def grid_graph(n1: int, n2: int = None) -> Graph:
    """The ``n1 x n2`` grid (square when ``n2`` is omitted)

    Vertex ``(i, j)``, ``1 <= i <= n1``, ``1 <= j <= n2``, is numbered
    ``(i-1)*n2 + (j-1)``; ``(i, j) ~ (i+1, j)`` and ``(i, j) ~ (i, j+1)``.
    """
    n2 = n1 if n2 is None else n2
    _require(n1, 1, "grid size")
    _require(n2, 1, "grid size")
    edges = []
    for i in range(1, n1 + 1):
        for j in range(1, n2 + 1):
            if i < n1:
                edges.append((grid_vertex(i, j, n2), grid_vertex(i + 1, j, n2)))
            if j < n2:
                edges.append((grid_vertex(i, j, n2), grid_vertex(i, j + 1, n2)))
    return Graph(n1 * n2, edges)


def crown_graph(b: int) -> Graph:
    """K_{2b,2b} minus a perfect matching

    Left part ``0..2b-1``, right part ``2b..4b-1``; left vertex ``i`` misses only
    right vertex ``2b+i``.
    """
    _require(b, 1, "crown parameter")
    side = 2 * b
    return Graph(
        2 * side,
        [(i, side + j) for i in range(side) for j in range(side) if i != j],
    )
