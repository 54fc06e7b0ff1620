"""Intersection graphs of closed boxes and private points"""

import itertools
from fractions import Fraction
from typing import List, Optional, Tuple

from .._graph import Graph, edge_key
from ._box import _BoxFamily


def intersection_graph(r: _BoxFamily) -> Graph:
    """vertices adjacent iff their closed boxes share a point"""
    order = sorted(range(r.n), key=lambda v: r.box(v).lo(0))
    edges = []
    for idx, u in enumerate(order):
        bu = r.box(u)
        for v in order[idx + 1 :]:
            bv = r.box(v)
            if bv.lo(0) > bu.hi(0):
                break
            if bu.meets(bv):
                edges.append(edge_key(u, v))
    return Graph(r.n, edges)


def _axis_candidates(r: _BoxFamily, axis: int, lo: Fraction, hi: Fraction) -> List[Fraction]:
    # every endpoint inside [lo, hi] together with the midpoints between consecutive
    # ones: one representative for each cell of the arrangement along this axis
    cuts = sorted({lo, hi} | {x for x in r.coordinates(axis) if lo <= x <= hi})
    mids = [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]
    return sorted(cuts + mids)


def find_private_point(r: _BoxFamily, u: int, v: int) -> Optional[Tuple[Fraction, ...]]:
    """A point covered by the boxes of ``u`` and ``v`` and by no other box

    The search runs over the coordinate arrangement restricted to the common part of
    the two boxes, so the answer is exact and complete. Returns ``None`` when the
    boxes don't meet or no such point exists.
    """
    common = r.box(u).overlap(r.box(v))
    if common is None:
        return None
    others = [
        r.box(w)
        for w in range(r.n)
        if w not in (u, v) and r.box(w).overlap(r.box(u)) is not None
        and r.box(w).overlap(r.box(v)) is not None
    ]
    axes = [_axis_candidates(r, k, lo, hi) for k, (lo, hi) in enumerate(common)]
    for point in itertools.product(*axes):
        if not any(w.contains(point) for w in others):
            return point
    return None


def private_points(r: _BoxFamily) -> dict:
    """``edge -> private point`` (``None`` for edges without one) for every edge of
    the intersection graph"""
    return {e: find_private_point(r, *e) for e in intersection_graph(r).edges}


def is_proper(r: _BoxFamily) -> bool:
    return all(p is not None for p in private_points(r).values())
