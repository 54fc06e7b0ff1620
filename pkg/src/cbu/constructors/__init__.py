r"""Explicit contact representations

Every constructor returns a :class:`cbu.geometry.BoxRepresentation` that has been
checked with :func:`cbu.geometry.verify_representation` against the graph it claims
to represent.
"""

import difflib
import math
from typing import Callable, Dict, NamedTuple

from .._exceptions import ConstructionError, InvalidOptionError
from .._families import _param, jones_graph, jones_labeling, r_prime_graph, shift_graph
from .._graph import Graph, subdivide
from .._recognition import decide_cbu
from .._search import DEFAULT_BUDGET
from .._standard_graphs import grid_graph
from ..geometry import BoxRepresentation

from ._expansion import expand_boxes, min_gap
from ._boxicity import (
    bipartite_to_cbu,
    bprime_construction,
    bprime_graph,
    interval_representation,
    subdivision_from_proper,
)
from ._hardness import double_subdivision_to_3cbu, grid_2cbu, r_prime_2cbu
from ._shift import (
    ShiftEmbedding,
    labeling_to_representation,
    remove_bipartite_edges,
    shift_embedding,
    shift_graph_representation,
    twin_representation,
)
from ._outerplanar import outer_walk, outerplanar_2cbu, reduce_walk


__all__ = [
    "expand_boxes",
    "min_gap",
    "bipartite_to_cbu",
    "subdivision_from_proper",
    "bprime_construction",
    "bprime_graph",
    "interval_representation",
    "double_subdivision_to_3cbu",
    "grid_2cbu",
    "r_prime_2cbu",
    "shift_graph_representation",
    "twin_representation",
    "remove_bipartite_edges",
    "ShiftEmbedding",
    "shift_embedding",
    "labeling_to_representation",
    "outer_walk",
    "reduce_walk",
    "outerplanar_2cbu",
    "Construction",
    "construction_table",
    "build_construction",
]


class Construction(NamedTuple):
    """A representation together with the graph it represents"""

    representation: BoxRepresentation
    graph: Graph


def _graph(params) -> Graph:
    if params.get("graph") is None:
        raise InvalidOptionError(
            name="input graph", invalid_option=None, valid_options="a graph file or stdin"
        )
    return params["graph"]


def _grid(params) -> Construction:
    n = params.get("n")
    if n is None:
        g = _graph(params)
        n = math.isqrt(g.n)
        if g != grid_graph(n):
            raise InvalidOptionError(
                "pass --n or a square grid graph",
                name="input graph",
                invalid_option=repr(g),
                valid_options="square grid graphs",
            )
    return Construction(grid_2cbu(n, params.get("m")), grid_graph(n, params.get("m")))


def _double_subdivision(params) -> Construction:
    g = _graph(params)
    counts = params.get("counts") or 2
    return Construction(double_subdivision_to_3cbu(g, counts), subdivide(g, counts).graph)


def _labeling(params) -> Construction:
    g = _graph(params)
    certificate = decide_cbu(g, budget=params.get("budget") or DEFAULT_BUDGET)
    if not certificate.is_member:
        raise ConstructionError(f"the graph is not CBU ({certificate.reason})")
    return Construction(labeling_to_representation(g, certificate.labeling), g)


def _jones(params) -> Construction:
    i = _param(params, "i")
    g = jones_graph(i)
    return Construction(labeling_to_representation(g, jones_labeling(i)), g)


#: construction name -> builder taking the command-line parameters
construction_table: Dict[str, Callable[[dict], Construction]] = {
    "grid-2cbu": _grid,
    "r-prime-2cbu": lambda p: Construction(
        r_prime_2cbu(_param(p, "n1"), _param(p, "n2")),
        r_prime_graph(p["n1"], p["n2"]),
    ),
    "shift": lambda p: Construction(
        shift_graph_representation(_param(p, "m")), shift_graph(p["m"])
    ),
    "double-subdivision-3cbu": _double_subdivision,
    "outerplanar-2cbu": lambda p: Construction(outerplanar_2cbu(_graph(p)), _graph(p)),
    "labeling": _labeling,
    "jones": _jones,
}


def build_construction(name: str, **params) -> Construction:
    """runs a construction by its command-line name, e.g.
    ``build_construction("shift", m=4)``"""
    if name not in construction_table:
        close = difflib.get_close_matches(name, construction_table.keys())
        suffix = f"Did you mean '{close[0]}'?" if close else ""
        raise InvalidOptionError(
            suffix,
            name="construction",
            invalid_option=name,
            valid_options=sorted(construction_table),
        )
    return construction_table[name](params)
