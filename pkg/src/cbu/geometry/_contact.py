"""Exact contact predicates and the representation verifier"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from .._exceptions import DimensionMismatchError, RepresentationError
from .._graph import Graph, Orientation, edge_key
from .._labeling import ArcLabeling
from ._box import Box, _BoxFamily


_logger = logging.getLogger(__name__)

DISJOINT = "disjoint"
CONTACT = "contact"
INTERIOR_OVERLAP = "interior overlap"
DEGENERATE_TOUCHING = "degenerate touching"
WRONG_AXIS = "touching along wrong axis"
MISSING_CONTACT = "missing contact"
UNEXPECTED_CONTACT = "unexpected contact"
SIZE_MISMATCH = "vertex count mismatch"


@dataclass(frozen=True)
class Violation:
    """One failed condition, naming the vertices involved"""

    kind: str
    vertices: Tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"{self.kind} {self.vertices}{suffix}"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of :func:`verify_representation`; truthy iff ``ok``"""

    ok: bool
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


def classify_pair(a: Box, b: Box) -> Tuple[str, Union[int, None]]:
    """How two closed boxes meet

    Returns
    -------
    tuple
        ``(kind, axis)``: ``kind`` is one of ``"disjoint"``, ``"contact"`` (allowed,
        touching along axis 0 only), ``"interior overlap"``, ``"degenerate touching"``
        (touching along two or more axes) or ``"touching along wrong axis"``; ``axis``
        is the touching axis when there is exactly one
    """
    touches = []
    for k, ((alo, ahi), (blo, bhi)) in enumerate(zip(a.intervals, b.intervals)):
        lo, hi = max(alo, blo), min(ahi, bhi)
        if lo > hi:
            return DISJOINT, None
        if lo == hi:
            touches.append(k)
    if not touches:
        return INTERIOR_OVERLAP, None
    if len(touches) > 1:
        return DEGENERATE_TOUCHING, None
    if touches[0] == 0:
        return CONTACT, 0
    return WRONG_AXIS, touches[0]


def _scan(r: _BoxFamily) -> Tuple[List[Tuple[int, int]], List[Violation]]:
    # sweep along axis 0: only pairs whose axis-0 intervals meet can interact
    order = sorted(range(r.n), key=lambda v: r.box(v).lo(0))
    contacts, violations = [], []
    for idx, u in enumerate(order):
        bu = r.box(u)
        for v in order[idx + 1 :]:
            bv = r.box(v)
            if bv.lo(0) > bu.hi(0):
                break
            kind, axis = classify_pair(bu, bv)
            if kind == DISJOINT:
                continue
            pair = edge_key(u, v)
            if kind == CONTACT:
                contacts.append(pair)
            elif kind == WRONG_AXIS:
                violations.append(Violation(kind, pair, f"boxes touch along axis {axis}"))
            else:
                violations.append(Violation(kind, pair))
    contacts.sort()
    violations.sort(key=lambda x: (x.vertices, x.kind))
    return contacts, violations


def contact_graph(r: _BoxFamily) -> Graph:
    """The contact graph of a valid representation

    Raises
    ------
    RepresentationError
        listing every offending pair when ``r`` breaks the contact invariants
    """
    contacts, violations = _scan(r)
    if violations:
        raise RepresentationError(violations=violations)
    return Graph(r.n, contacts)


def verify_representation(r: _BoxFamily, g: Graph) -> VerificationReport:
    """Checks that ``r`` is a valid representation whose contact graph is ``g``, with
    the same vertex indexing"""
    contacts, violations = _scan(r)
    if r.n != g.n:
        violations.append(
            Violation(SIZE_MISMATCH, (), f"{r.n} boxes for a graph on {g.n} vertices")
        )
    found = set(contacts)
    for e in g.edges:
        if e not in found:
            violations.append(Violation(MISSING_CONTACT, e))
    for e in contacts:
        if not g.has_edge(*e):
            violations.append(Violation(UNEXPECTED_CONTACT, e))
    if violations:
        _logger.debug("representation %s fails with %d violations", r, len(violations))
    return VerificationReport(not violations, tuple(violations))


def induced_labeling(r: _BoxFamily) -> Tuple[Orientation, ArcLabeling]:
    """Orients every contact from the box whose axis-0 interval ends at the touching
    coordinate to the box whose interval starts there, labelling it with that
    coordinate"""
    g = contact_graph(r)
    arcs: Dict[Tuple[int, int], Fraction] = {}
    for u, v in g.edges:
        bu, bv = r.box(u), r.box(v)
        if bu.hi(0) == bv.lo(0):
            arcs[(u, v)] = bu.hi(0)
        else:
            arcs[(v, u)] = bv.hi(0)
    o = Orientation(g, arcs)
    return o, ArcLabeling(o, arcs)


def lift_dimension(
    r: _BoxFamily,
    intervals: Union[Mapping[int, Tuple], Sequence[Tuple]],
) -> _BoxFamily:
    """Appends ``intervals[v]`` to the box of every vertex ``v`` as a new last axis;
    axis 0 is untouched and the result has the type of ``r``"""
    if isinstance(intervals, Mapping):
        missing = [v for v in range(r.n) if v not in intervals]
        if missing or len(intervals) != r.n:
            raise DimensionMismatchError(
                entered_dimension=len(intervals),
                entered_name="interval map",
                expected_dimension=r.n,
                expected_source="the vertex count of the representation",
            )
        intervals = [intervals[v] for v in range(r.n)]
    elif len(intervals) != r.n:
        raise DimensionMismatchError(
            entered_dimension=len(intervals),
            entered_name="interval list",
            expected_dimension=r.n,
            expected_source="the vertex count of the representation",
        )
    return type(r)(
        [box.with_axis(iv) for box, iv in zip(r.boxes, intervals)], d=r.d + 1
    )
