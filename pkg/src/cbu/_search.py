"""Orientation searches: branch-and-prune over the slot system, the plain exhaustive
oracle, and cover-graph orientations"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import networkx as nx

from ._analysis import find_coloring, find_triangle
from ._exceptions import BudgetExhaustedError
from ._graph import Arc, Edge, Graph, Orientation, edge_key, iter_orientations
from ._labeling import ArcLabeling, SlotSystem, has_quasi_cycle, solve_labeling


_logger = logging.getLogger(__name__)

#: default limit on search nodes (branch-and-prune) or orientations (exhaustive)
DEFAULT_BUDGET = 2**28


@dataclass
class SearchStats:
    """Counters of one search"""

    #: arcs tried, i.e. nodes of the search tree
    nodes: int = 0
    #: subtrees cut because the slot quotient got a cycle
    prunes: int = 0
    #: complete orientations reached and labelled (or examined, for exhaustive search)
    orientations: int = 0
    #: name of the shortcut that decided the instance, if any
    shortcut: Optional[str] = None

    def merge(self, other: "SearchStats"):
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.orientations += other.orientations

    def to_dict(self) -> dict:
        return asdict(self)


def edge_order(g: Graph) -> List[Edge]:
    """Branching order: vertices in DFS preorder (every component from its smallest
    vertex), each contributing its edges back to vertices visited before it, so every
    cycle is closed as early as the DFS tree allows"""
    nxg = g.to_networkx()
    visited = {}
    for component in sorted(nx.connected_components(nxg), key=min):
        for v in nx.dfs_preorder_nodes(nxg, min(component)):
            visited[v] = len(visited)
    order = []
    for v in sorted(visited, key=visited.get):
        earlier = sorted(w for w in g.neighbors(v) if visited[w] < visited[v])
        order.extend(edge_key(v, w) for w in earlier)
    return order


def _check_budget(stats: SearchStats, budget: int):
    if stats.nodes > budget:
        raise BudgetExhaustedError(budget=budget, stats=stats)


def branch_and_prune(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    fixed_arcs: Optional[Mapping[Edge, Arc]] = None,
    stats: Optional[SearchStats] = None,
) -> Tuple[Optional[ArcLabeling], SearchStats]:
    r"""Depth-first search for a labelable orientation

    Edges are oriented one at a time in :func:`edge_order`, the arc being merged into
    an undoable :class:`SlotSystem`; a subtree is cut as soon as the slot quotient has a
    cycle, since adding arcs never removes one. Without forced arcs the first free edge
    is only tried as ``(u, v)``, reversing all arcs of a labelable orientation giving
    another one.

    Parameters
    ----------
    g : Graph
        the graph to search
    budget : int
        maximum number of search nodes
    fixed_arcs : mapping, optional
        edge -> forced arc
    stats : SearchStats, optional
        counters to update in place

    Returns
    -------
    tuple
        ``(labeling, stats)``; ``labeling`` is the witness of the first labelable
        orientation in branching order, ``None`` when there is none

    Raises
    ------
    BudgetExhaustedError
        when more than ``budget`` nodes would be needed
    """
    stats = SearchStats() if stats is None else stats
    fixed = dict(fixed_arcs or {})
    system = SlotSystem(g.n)
    for tail, head in fixed.values():
        system.add_arc(tail, head)
    if system.find_cycle() is not None:
        stats.prunes += 1
        return None, stats
    free = [e for e in edge_order(g) if e not in fixed]
    chosen: Dict[Edge, Arc] = {}

    def choices(k):
        u, v = free[k]
        if k == 0 and not fixed:
            return ((u, v),)
        return ((u, v), (v, u))

    def descend(k) -> bool:
        if k == len(free):
            stats.orientations += 1
            return True
        for arc in choices(k):
            stats.nodes += 1
            _check_budget(stats, budget)
            system.add_arc(*arc)
            if system.find_cycle() is None:
                chosen[free[k]] = arc
                if descend(k + 1):
                    return True
                del chosen[free[k]]
            else:
                stats.prunes += 1
            system.undo()
        return False

    if not descend(0):
        _logger.debug("branch and prune: no labelable orientation, %s", stats)
        return None, stats
    arcs = {**fixed, **chosen}
    witness = solve_labeling(Orientation(g, arcs.values()))
    return witness, stats


def surviving_prefixes(
    g: Graph,
    depth: int,
    fixed_arcs: Optional[Mapping[Edge, Arc]] = None,
    stats: Optional[SearchStats] = None,
) -> List[Dict[Edge, Arc]]:
    """All choices for the first ``depth`` free edges (in branching order) that keep
    the slot quotient acyclic, in branching order; each becomes an independent
    subproblem for a parallel search"""
    stats = SearchStats() if stats is None else stats
    fixed = dict(fixed_arcs or {})
    free = [e for e in edge_order(g) if e not in fixed][:depth]
    system = SlotSystem(g.n)
    for tail, head in fixed.values():
        system.add_arc(tail, head)
    if system.find_cycle() is not None:
        return []
    prefixes = []

    def descend(k, chosen):
        if k == len(free):
            prefixes.append(dict(chosen))
            return
        u, v = free[k]
        arcs = ((u, v),) if k == 0 and not fixed else ((u, v), (v, u))
        for arc in arcs:
            stats.nodes += 1
            system.add_arc(*arc)
            if system.find_cycle() is None:
                chosen[free[k]] = arc
                descend(k + 1, chosen)
                del chosen[free[k]]
            else:
                stats.prunes += 1
            system.undo()

    descend(0, {})
    return [{**fixed, **prefix} for prefix in prefixes]


def exhaustive_search(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    fixed_arcs: Optional[Mapping[Edge, Arc]] = None,
    stats: Optional[SearchStats] = None,
) -> Tuple[Optional[ArcLabeling], SearchStats]:
    """The unpruned oracle: every orientation in :func:`iter_orientations` order goes
    through :func:`solve_labeling`; ``budget`` counts orientations"""
    stats = SearchStats() if stats is None else stats
    fixed = dict(fixed_arcs or {})
    for o in iter_orientations(g):
        if any(o.direction(*e) != arc for e, arc in fixed.items()):
            continue
        stats.orientations += 1
        stats.nodes += 1
        _check_budget(stats, budget)
        result = solve_labeling(o)
        if isinstance(result, ArcLabeling):
            return result, stats
    return None, stats


def _cover_candidates(g: Graph) -> Iterator[Orientation]:
    colouring = find_coloring(g, 3)
    if colouring is not None:
        yield Orientation(
            g,
            ((u, v) if colouring[u] < colouring[v] else (v, u) for u, v in g.edges),
        )
    yield from iter_orientations(g)


def find_cover_orientation(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> Optional[Orientation]:
    r"""An acyclic orientation without quasi-cycle, i.e. one making ``g`` the cover
    graph of a poset

    A proper 3-colouring oriented from lower to higher colour is tried first: on a
    cycle with one backward arc the forward path would climb at least 3 colours. Then
    every orientation is tried in order.

    Raises
    ------
    BudgetExhaustedError
        when more than ``budget`` candidates are examined
    """
    if find_triangle(g) is not None:
        return None
    for examined, o in enumerate(_cover_candidates(g), start=1):
        if examined > budget:
            raise BudgetExhaustedError(budget=budget, stats=SearchStats(orientations=examined))
        if o.is_acyclic() and not has_quasi_cycle(o)[0]:
            return o
    return None

