"""Exact desk-scale invariants: independence number, chromatic number, fractional
chromatic number, girth and triangles"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from scipy.optimize import linprog

from ._exceptions import CertificationError, SizeLimitError
from ._graph import Graph


_logger = logging.getLogger(__name__)

#: largest vertex count for which alpha, chi and chi_f are computed by default
MAX_EXACT_VERTICES = 24

_DENOMINATOR_LIMITS = (10**2, 10**4, 10**6, 10**9)


def _check_size(g: Graph, quantity: str, max_vertices: Optional[int]):
    limit = MAX_EXACT_VERTICES if max_vertices is None else max_vertices
    if g.n > limit:
        raise SizeLimitError(quantity=quantity, size=g.n, limit=limit)


def find_triangle(g: Graph) -> Optional[Tuple[int, int, int]]:
    """the lexicographically smallest triangle, or ``None``"""
    for u, v in g.edges:
        common = g.neighbors(u) & g.neighbors(v)
        later = [w for w in common if w > v]
        if later:
            return (u, v, min(later))
    return None


def girth(g: Graph) -> Union[int, float]:
    """length of a shortest cycle, ``math.inf`` for forests"""
    return nx.girth(g.to_networkx())


def independence_number(
    g: Graph, max_vertices: Optional[int] = None
) -> Tuple[int, FrozenSet[int]]:
    """alpha(g) with a maximum independent set, via a maximum clique of the
    complement"""
    _check_size(g, "the independence number", max_vertices)
    if g.n == 0:
        return 0, frozenset()
    clique, size = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    return size, frozenset(clique)


def find_coloring(g: Graph, k: int) -> Optional[List[int]]:
    """A proper colouring with colours ``0..k-1``, or ``None``

    DSATUR-style backtracking: always branch on the uncoloured vertex seeing the most
    colours, and never open more than one new colour at a time.
    """
    colour = [-1] * g.n
    if k <= 0:
        return colour if g.n == 0 else None

    def saturation(v):
        return len({colour[w] for w in g.neighbors(v) if colour[w] >= 0})

    def extend(coloured: int, used: int) -> bool:
        if coloured == g.n:
            return True
        v = max(
            (v for v in g.vertices if colour[v] < 0),
            key=lambda v: (saturation(v), g.degree(v), -v),
        )
        taken = {colour[w] for w in g.neighbors(v)}
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if extend(coloured + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return colour if extend(0, 0) else None


def chromatic_number(g: Graph, max_vertices: Optional[int] = None) -> int:
    _check_size(g, "the chromatic number", max_vertices)
    if g.n == 0:
        return 0
    lower = 1 if g.m == 0 else 2
    for k in range(lower, g.n + 1):
        if find_coloring(g, k) is not None:
            return k
    return g.n


@dataclass(frozen=True)
class FractionalColoring:
    """Optimal fractional colouring together with its dual certificate"""

    #: maximal independent set -> nonnegative weight
    weights: Dict[FrozenSet[int], Fraction]
    #: total weight, the fractional chromatic number
    value: Fraction
    #: vertex -> dual weight; no independent set carries dual weight above 1
    dual: Dict[int, Fraction] = field(default_factory=dict)

    def covers(self, g: Graph) -> bool:
        return all(
            sum((w for s, w in self.weights.items() if v in s), Fraction(0)) >= 1
            for v in g.vertices
        )


def _certified(
    g: Graph,
    sets: Sequence[FrozenSet[int]],
    x: Sequence[Fraction],
    y: Sequence[Fraction],
) -> bool:
    if any(xi < 0 for xi in x) or any(yi < 0 for yi in y):
        return False
    for v in g.vertices:
        if sum((xi for s, xi in zip(sets, x) if v in s), Fraction(0)) < 1:
            return False
    for s in sets:
        if sum((y[v] for v in s), Fraction(0)) > 1:
            return False
    return sum(x, Fraction(0)) == sum(y, Fraction(0))


def _solve_exact(rows: List[List[Fraction]], rhs: List[Fraction]) -> Optional[List[Fraction]]:
    # Gauss-Jordan elimination over the rationals for a square system
    size = len(rows)
    if any(len(r) != size for r in rows):
        return None
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [entry / p for entry in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [er - factor * ec for er, ec in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


def _exact_from_support(g, sets, x_float, y_float):
    support = [i for i, xi in enumerate(x_float) if xi > 1e-9]
    tight = [v for v, yv in enumerate(y_float) if yv > 1e-9]
    if len(support) != len(tight):
        return None
    matrix = [[Fraction(int(v in sets[i])) for i in support] for v in tight]
    xs = _solve_exact(matrix, [Fraction(1)] * len(tight))
    transposed = [list(col) for col in zip(*matrix)] if matrix else []
    ys = _solve_exact(transposed, [Fraction(1)] * len(support))
    if xs is None or ys is None:
        return None
    x = [Fraction(0)] * len(sets)
    for i, value in zip(support, xs):
        x[i] = value
    y = [Fraction(0)] * g.n
    for v, value in zip(tight, ys):
        y[v] = value
    return x, y


def fractional_coloring(g: Graph, max_vertices: Optional[int] = None) -> FractionalColoring:
    r"""Optimal fractional colouring over the maximal independent sets

    The LP is solved in floating point with HiGHS, then primal and dual solutions are
    rationalised and certified exactly: the primal covers every vertex, the dual packs
    every independent set with weight at most 1, and both objectives agree. When
    rounding doesn't certify, the basis is re-solved in rational arithmetic.

    Raises
    ------
    SizeLimitError
        above ``max_vertices`` (default :data:`MAX_EXACT_VERTICES`)
    CertificationError
        when no exact certificate could be obtained
    """
    _check_size(g, "the fractional chromatic number", max_vertices)
    if g.n == 0:
        return FractionalColoring({}, Fraction(0), {})
    sets = sorted(
        (frozenset(c) for c in nx.find_cliques(nx.complement(g.to_networkx()))),
        key=lambda s: sorted(s),
    )
    incidence = np.array([[1.0 if v in s else 0.0 for s in sets] for v in g.vertices])
    res = linprog(
        c=np.ones(len(sets)),
        A_ub=-incidence,
        b_ub=-np.ones(g.n),
        bounds=(0, None),
        method="highs",
    )
    if res.status != 0:
        raise CertificationError(f"fractional colouring LP failed: {res.message}")
    x_float = list(res.x)
    y_float = [-m for m in res.ineqlin.marginals]
    for limit in _DENOMINATOR_LIMITS:
        x = [Fraction(xi).limit_denominator(limit) for xi in x_float]
        y = [Fraction(yi).limit_denominator(limit) for yi in y_float]
        if _certified(g, sets, x, y):
            break
    else:
        exact = _exact_from_support(g, sets, x_float, y_float)
        if exact is None or not _certified(g, sets, *exact):
            raise CertificationError(
                "could not certify the fractional chromatic number exactly"
            )
        x, y = exact
    weights = {s: xi for s, xi in zip(sets, x) if xi != 0}
    value = sum(x, Fraction(0))
    _logger.debug("chi_f = %s over %d maximal independent sets", value, len(sets))
    return FractionalColoring(weights, value, dict(enumerate(y)))


def fractional_chromatic_number(g: Graph, max_vertices: Optional[int] = None) -> Fraction:
    """chi_f(g) as an exact fraction"""
    return fractional_coloring(g, max_vertices).value
