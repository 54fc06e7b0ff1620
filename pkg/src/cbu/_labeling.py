"""Homogeneous arc labelings of orientations

A labeling is homogeneous when all out-arcs of a vertex share one label, all its
in-arcs share one label, and the in-label is strictly below the out-label at every
vertex having both kinds of arcs.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple, Union

import networkx as nx

from ._exceptions import InvalidLabelingError
from ._graph import Arc, Orientation, WalkCycle, enumerate_cycles


_logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


class ArcLabeling:
    r"""Labels on the arcs of an :class:`Orientation`

    An ``ArcLabeling`` is not necessarily homogeneous; use :func:`check_labeling` (or
    :meth:`is_homogeneous`) to find out.

    Parameters
    ----------
    orientation : Orientation
        the oriented graph being labelled
    labels : mapping
        ``(tail, head) -> label`` for exactly the arcs of ``orientation``; labels are
        integers or :class:`fractions.Fraction`

    Raises
    ------
    InvalidLabelingError
        when the keys don't match the arcs of ``orientation``
    """

    kind = "labeling"

    __slots__ = ("_orientation", "_labels")

    def __init__(self, orientation: Orientation, labels: Mapping[Arc, Rational]):
        labels = {tuple(arc): label for arc, label in labels.items()}
        expected = set(orientation.arcs)
        if set(labels) != expected:
            extra = sorted(set(labels) - expected)
            missing = sorted(expected - set(labels))
            raise InvalidLabelingError(
                "labels don't match the arcs of the orientation",
                problems=[f"not arcs: {extra}", f"unlabelled arcs: {missing}"],
            )
        self._orientation = orientation
        self._labels = {arc: labels[arc] for arc in orientation.arcs}

    @property
    def orientation(self) -> Orientation:
        return self._orientation

    def label(self, tail: int, head: int) -> Rational:
        return self._labels[(tail, head)]

    def items(self) -> Tuple[Tuple[int, int, Rational], ...]:
        """``(tail, head, label)`` triples in arc order"""
        return tuple((t, h, lab) for (t, h), lab in self._labels.items())

    def out_label(self, v: int) -> Optional[Rational]:
        """the common label of the out-arcs of ``v``; ``None`` when there are none or
        they disagree"""
        labels = {self._labels[(v, w)] for w in self._orientation.out_neighbors(v)}
        return labels.pop() if len(labels) == 1 else None

    def in_label(self, v: int) -> Optional[Rational]:
        labels = {self._labels[(w, v)] for w in self._orientation.in_neighbors(v)}
        return labels.pop() if len(labels) == 1 else None

    def is_homogeneous(self) -> bool:
        return not check_labeling(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArcLabeling):
            return NotImplemented
        return self._orientation == other._orientation and self._labels == other._labels

    def __repr__(self) -> str:
        return f"ArcLabeling({list(self.items())})"


def check_labeling(labeling: ArcLabeling) -> List[str]:
    """Inspects every vertex and every arc of ``labeling``

    Returns
    -------
    list of str
        one message per problem found; empty when the labeling is homogeneous
    """
    problems = []
    o = labeling.orientation
    for t, h, label in labeling.items():
        if isinstance(label, bool) or not isinstance(label, (int, Fraction)):
            problems.append(f"arc {(t, h)}: label {label!r} is not a rational")
    if problems:
        return problems
    for v in o.base.vertices:
        outs = {labeling.label(v, w) for w in o.out_neighbors(v)}
        ins = {labeling.label(w, v) for w in o.in_neighbors(v)}
        if len(outs) > 1:
            problems.append(f"vertex {v}: out-arcs carry different labels {sorted(outs)}")
        if len(ins) > 1:
            problems.append(f"vertex {v}: in-arcs carry different labels {sorted(ins)}")
        if outs and ins and max(ins) >= min(outs):
            problems.append(
                f"vertex {v}: in-label {max(ins)} is not below out-label {min(outs)}"
            )
    return problems


@dataclass(frozen=True)
class SlotCycle:
    """Infeasibility certificate: the strict precedences ``in(v) < out(v)`` of these
    vertices close a cycle, because ``out(v_i)`` and ``in(v_(i+1))`` (cyclically) are
    forced into the same slot class"""

    vertices: Tuple[int, ...]

    kind = "slot-cycle"


@dataclass(frozen=True)
class BadCycle:
    """A badly oriented cycle: traversing ``cycle`` in the listed order, vertex
    ``cycle.vertices[through]`` is entered and left along the traversal, and no vertex
    is entered and left against it"""

    cycle: WalkCycle
    through: int

    kind = "bad-cycle"

    def holds_in(self, o: Orientation) -> bool:
        if not self.cycle.is_cycle_of(o.base):
            return False
        forward, backward = _through_vertices(o, self.cycle.vertices)
        return self.through in forward and not backward


class SlotSystem:
    r"""Union-find over the in-slot and out-slot of every vertex

    Adding the arc ``u -> v`` merges out-slot(u) with in-slot(v). Every vertex having
    both kinds of arcs contributes the strict precedence in-slot(v) -> out-slot(v) on
    the quotient; a homogeneous labeling exists iff the quotient precedence digraph is
    acyclic. Arcs can be removed again in LIFO order with :meth:`undo` (no path
    compression, union by size).

    Parameters
    ----------
    n : int
        number of vertices
    """

    def __init__(self, n: int):
        self._n = n
        self._parent = list(range(2 * n))
        self._size = [1] * (2 * n)
        self._out_count = [0] * n
        self._in_count = [0] * n
        self._history = []

    @staticmethod
    def in_slot(v: int) -> int:
        return 2 * v

    @staticmethod
    def out_slot(v: int) -> int:
        return 2 * v + 1

    def find(self, slot: int) -> int:
        while self._parent[slot] != slot:
            slot = self._parent[slot]
        return slot

    def add_arc(self, tail: int, head: int):
        a, b = self.find(self.out_slot(tail)), self.find(self.in_slot(head))
        merged = None
        if a != b:
            if self._size[a] < self._size[b]:
                a, b = b, a
            self._parent[b] = a
            self._size[a] += self._size[b]
            merged = (a, b)
        self._out_count[tail] += 1
        self._in_count[head] += 1
        self._history.append((tail, head, merged))

    def undo(self):
        """removes the most recently added arc"""
        tail, head, merged = self._history.pop()
        self._out_count[tail] -= 1
        self._in_count[head] -= 1
        if merged is not None:
            a, b = merged
            self._parent[b] = b
            self._size[a] -= self._size[b]

    @property
    def arc_count(self) -> int:
        return len(self._history)

    def through_vertices(self) -> List[int]:
        return [
            v for v in range(self._n) if self._out_count[v] and self._in_count[v]
        ]

    def quotient(self) -> nx.DiGraph:
        """precedence digraph on slot classes; each edge remembers one vertex that
        induces it"""
        quotient = nx.DiGraph()
        for tail, head, _ in self._history:
            quotient.add_node(self.find(self.out_slot(tail)))
        for v in self.through_vertices():
            quotient.add_edge(
                self.find(self.in_slot(v)), self.find(self.out_slot(v)), vertex=v
            )
        return quotient

    def find_cycle(self) -> Optional[Tuple[int, ...]]:
        """vertices whose precedences form a cycle in the quotient, or ``None``"""
        for v in self.through_vertices():
            if self.find(self.in_slot(v)) == self.find(self.out_slot(v)):
                return (v,)
        quotient = self.quotient()
        try:
            cycle = nx.find_cycle(quotient)
        except nx.NetworkXNoCycle:
            return None
        return tuple(quotient.edges[a, b]["vertex"] for a, b in cycle)

    def is_feasible(self) -> bool:
        return self.find_cycle() is None

    def ranks(self) -> Dict[int, int]:
        """longest-path rank of every slot class of the (acyclic) quotient, sources of
        the quotient having rank 1"""
        quotient = self.quotient()
        rank = {}
        for node in nx.topological_sort(quotient):
            rank[node] = 1 + max(
                (rank[p] for p in quotient.predecessors(node)), default=0
            )
        return rank

    def labels(self) -> Dict[Arc, int]:
        rank = self.ranks()
        return {
            (tail, head): rank[self.find(self.out_slot(tail))]
            for tail, head, _ in self._history
        }


def solve_labeling(o: Orientation) -> Union[ArcLabeling, SlotCycle]:
    r"""Decides whether ``o`` admits a homogeneous arc labeling

    Labels are the longest-path ranks of the slot classes in the quotient DAG, the
    smallest label being 1.

    Returns
    -------
    ArcLabeling or SlotCycle
        a homogeneous labeling of ``o``, or a cycle of slot classes witnessing that
        none exists (see :func:`expand_certificate` for a bad cycle)
    """
    system = SlotSystem(o.base.n)
    for tail, head in o.arcs:
        system.add_arc(tail, head)
    cycle = system.find_cycle()
    if cycle is not None:
        _logger.debug("orientation %s is not labelable, slot cycle %s", o, cycle)
        return SlotCycle(cycle)
    return ArcLabeling(o, system.labels())


def _through_vertices(o: Orientation, sequence: Tuple[int, ...]):
    k = len(sequence)
    forward_arc = [o.has_arc(sequence[i], sequence[(i + 1) % k]) for i in range(k)]
    forward = [i for i in range(k) if forward_arc[i - 1] and forward_arc[i]]
    backward = [i for i in range(k) if not forward_arc[i - 1] and not forward_arc[i]]
    return forward, backward


def find_bad_cycle(o: Orientation, max_length: Optional[int] = None) -> Optional[BadCycle]:
    """Returns a badly oriented cycle of ``o`` with at most ``max_length`` vertices
    (default: all cycles), or ``None``

    Cycles are scanned shortest first; each is tried in both traversal directions.
    """
    max_length = o.base.n if max_length is None else max_length
    if max_length < 3 or o.base.n < 3:
        return None
    for cycle in enumerate_cycles(o.base, max_length):
        for walk in (cycle, cycle.reversed()):
            forward, backward = _through_vertices(o, walk.vertices)
            if forward and not backward:
                bad = BadCycle(walk, forward[0])
                if not bad.holds_in(o):
                    raise InvalidLabelingError(f"bad cycle {bad} failed re-verification")
                return bad
    return None


def expand_certificate(
    o: Orientation, certificate: SlotCycle
) -> Union[BadCycle, SlotCycle]:
    """best-effort replacement of a slot cycle by a concrete bad cycle of ``o``"""
    bad = find_bad_cycle(o)
    return bad if bad is not None else certificate


def has_quasi_cycle(o: Orientation) -> Tuple[bool, Optional[WalkCycle]]:
    """Whether some cycle of ``o`` has exactly one arc against its traversal

    Returns
    -------
    tuple
        ``(found, witness)``; the witness is listed in the traversal order that has the
        single backward arc
    """
    if o.base.n < 3:
        return False, None
    for cycle in enumerate_cycles(o.base, o.base.n):
        forward = sum(o.has_arc(u, v) for u, v in cycle.edges())
        if forward == cycle.length - 1:
            return True, cycle
        if forward == 1:
            return True, cycle.reversed()
    return False, None


def classify_short_cycle(o: Orientation, cycle: WalkCycle) -> Optional[str]:
    """Names the orientation pattern of a 4- or 5-cycle

    ``"two-sources-two-sinks"`` and ``"paths-2-2"`` (one source, one sink, two directed
    paths of length 2) for 4-cycles, ``"paths-2-3"`` for 5-cycles. These are the only
    patterns a homogeneous labeling can leave on such cycles; anything else gives
    ``None``.
    """
    if cycle.length not in (4, 5):
        return None
    vs = cycle.vertices
    k = len(vs)
    sources, sinks = [], []
    for i in range(k):
        prev, nxt = vs[i - 1], vs[(i + 1) % k]
        if o.has_arc(vs[i], prev) and o.has_arc(vs[i], nxt):
            sources.append(i)
        elif o.has_arc(prev, vs[i]) and o.has_arc(nxt, vs[i]):
            sinks.append(i)
    if k == 4 and len(sources) == 2 and len(sinks) == 2:
        return "two-sources-two-sinks"
    if len(sources) == 1 and len(sinks) == 1:
        gap = (sinks[0] - sources[0]) % k
        lengths = sorted((gap, k - gap))
        if k == 4 and lengths == [2, 2]:
            return "paths-2-2"
        if k == 5 and lengths == [2, 3]:
            return "paths-2-3"
    return None


def _merge_labels(arcs: FrozenSet[Arc]) -> Optional[Dict[Arc, int]]:
    if not arcs:
        return {}
    outs, ins = defaultdict(set), defaultdict(set)
    for tail, head in arcs:
        outs[tail].add(head)
        ins[head].add(tail)
    sources = sorted(v for v in outs if not ins[v])
    if not sources:
        return None
    u = sources[0]
    targets = sorted(outs[u])
    rest = frozenset(arc for arc in arcs if arc[0] != u)
    shared = [v for v in targets if len(ins[v]) > 1]
    if not shared:
        labels = _merge_labels(rest)
        if labels is None:
            return None
        low = min(labels.values(), default=1) - 1
        labels.update({(u, v): low for v in targets})
        return labels
    vi = shared[0]
    partner = min(ins[vi] - {u})
    merged = set(rest)
    for v in targets:
        if v == partner or (v, partner) in arcs:
            return None
        merged.add((partner, v))
    labels = _merge_labels(frozenset(merged))
    if labels is None:
        return None
    copied = labels[(partner, vi)]
    result = {arc: labels[arc] for arc in rest}
    result.update({(u, v): copied for v in targets})
    return result


def synthesize_by_source_merge(o: Orientation) -> Optional[ArcLabeling]:
    r"""Builds a homogeneous labeling by repeatedly eliminating a source

    Take the smallest source ``u`` that has out-arcs. If each out-neighbour of ``u``
    has ``u`` as its only in-neighbour, label the rest recursively and give the arcs of
    ``u`` a label below all others. Otherwise some out-neighbour ``v_i`` has a second
    in-neighbour ``u'``: redirect all arcs of ``u`` so they leave ``u'`` instead,
    label that graph recursively and copy the out-label of ``u'`` onto the arcs of
    ``u``. Labels are finally shifted to start at 1.

    Returns
    -------
    ArcLabeling or None
        a labeling that passed :func:`check_labeling`, or ``None`` when the recursion
        got stuck, which happens exactly when ``o`` has a badly oriented cycle
    """
    labels = _merge_labels(frozenset(o.arcs))
    if labels is None:
        return None
    shift = 1 - min(labels.values(), default=1)
    labeling = ArcLabeling(o, {arc: lab + shift for arc, lab in labels.items()})
    problems = check_labeling(labeling)
    if problems:
        _logger.debug("source merging produced an invalid labeling: %s", problems)
        return None
    return labeling
