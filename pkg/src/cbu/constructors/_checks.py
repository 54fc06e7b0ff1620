import logging
from typing import FrozenSet, Iterable, Optional, Tuple

from .._exceptions import ConstructionError, RepresentationError
from .._graph import Graph
from ..geometry import BoxRepresentation, verify_representation


_logger = logging.getLogger(__name__)

Parts = Tuple[FrozenSet[int], FrozenSet[int]]


def check_parts(
    g: Graph, parts: Optional[Tuple[Iterable[int], Iterable[int]]], what: str = "graph"
) -> Parts:
    """the bipartition ``(A, B)`` of ``g``, computed when ``parts`` is ``None``

    Raises
    ------
    ConstructionError
        when ``parts`` doesn't split the vertices into two independent sets
    """
    if parts is None:
        found = g.bipartition()
        if found is None:
            raise ConstructionError(f"the {what} is not bipartite")
        return found
    part_a, part_b = (frozenset(p) for p in parts)
    if part_a & part_b:
        raise ConstructionError(f"the parts share the vertices {sorted(part_a & part_b)}")
    if part_a | part_b != frozenset(g.vertices):
        missing = sorted(set(g.vertices) - part_a - part_b)
        raise ConstructionError(
            f"the parts must cover the vertices 0..{g.n - 1} exactly, missing {missing}"
        )
    for u, v in g.edges:
        if (u in part_a) == (v in part_a):
            raise ConstructionError(
                f"edge {(u, v)} of the {what} lies inside one part"
            )
    return part_a, part_b


def ensure_verified(r: BoxRepresentation, g: Graph, construction: str) -> BoxRepresentation:
    """returns ``r`` after checking it represents ``g``

    Raises
    ------
    RepresentationError
        with the violations found
    """
    report = verify_representation(r, g)
    if not report:
        raise RepresentationError(
            f"{construction} produced an invalid representation",
            violations=report.violations,
        )
    _logger.debug("%s: verified %s for %s", construction, r, g)
    return r
