"""Desk-scale consistency suites behind ``cbu selftest``

Each check compares two independent routes to the same answer (slot-system labeling
against bad-cycle search, every construction against the exact verifier, ...). A
failing check is recorded in the report instead of raised, so that one run lists all
of them.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, List

import networkx as nx
import numpy as np

from ._analysis import find_triangle, fractional_chromatic_number, independence_number
from ._exceptions import InvalidOptionError
from ._families import g3, good_c5_labeling, shift_graph, shift_graph_vertices
from ._graph import Graph, iter_orientations, subdivide
from ._homomorphism import find_homomorphism_c5, pullback_labeling
from ._labeling import ArcLabeling, check_labeling, find_bad_cycle, solve_labeling
from ._problem import CbuProblem
from ._recognition import decide_cbu
from ._recognition_options import RecognitionOptions
from ._search import find_cover_orientation
from ._standard_graphs import cycle_graph, grid_graph
from .constructors import (
    double_subdivision_to_3cbu,
    grid_2cbu,
    labeling_to_representation,
    shift_graph_representation,
)
from .geometry import induced_labeling, verify_representation
from .utils import RecognitionPool


_logger = logging.getLogger(__name__)

LEVELS = ("quick", "full")

DEFAULT_SEED = 20240531


@dataclass(frozen=True)
class _Scale:
    oracle_n: int
    bipartite_n: int
    shift_m: int
    grid_n: int
    subdivision_n: int
    labeling_n: int
    corpus_size: int
    with_g3: bool


_SCALES = {
    "quick": _Scale(5, 6, 5, 5, 4, 4, 40, False),
    "full": _Scale(6, 7, 6, 8, 6, 5, 200, True),
}


@dataclass
class SelftestReport:
    """Outcome of :func:`selftest`; truthy iff no check failed"""

    level: str
    seed: int
    #: check name -> number of instances examined
    checks: dict = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "seed": self.seed,
            "ok": self.ok,
            "checks": dict(self.checks),
            "failures": list(self.failures),
        }


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """every connected graph with ``1 .. max_n`` vertices up to isomorphism, from the
    networkx graph atlas (``max_n <= 7``)"""
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() > max_n:
            break
        if nxg.number_of_nodes() and nx.is_connected(nxg):
            yield Graph.from_networkx(nxg)


def random_corpus(size: int, seed: int, max_n: int = 8) -> List[Graph]:
    """``size`` random graphs ``G(n, p)`` with ``3 <= n <= max_n``; the same seed
    gives the same corpus"""
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(size):
        n = int(rng.integers(3, max_n + 1))
        p = float(rng.uniform(0.15, 0.6))
        nxg = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
        corpus.append(Graph.from_networkx(nxg))
    return corpus


class _Runner:
    def __init__(self, report: SelftestReport, jobs: int):
        self.report = report
        self.jobs = jobs

    def check(self, name: str, instances, predicate: Callable[[object], str]):
        """``predicate`` returns an empty string on success, a message otherwise"""
        count = 0
        for instance in instances:
            count += 1
            message = predicate(instance)
            if message:
                subject = instance[0] if isinstance(instance, tuple) else instance
                self.report.failures.append(f"{name}: {subject}: {message}")
        self.report.checks[name] = self.report.checks.get(name, 0) + count
        _logger.info("%s: %d instances", name, count)

    def decide_all(self, graphs: List[Graph]) -> list:
        if not graphs:
            return []
        options = RecognitionOptions()
        options.set_tool("cbu.branch_and_prune")
        problems = [CbuProblem(graph=g) for g in graphs]
        results, _ = RecognitionPool(problems, options, parallel=self.jobs > 1).run()
        return results


def _oracle_agrees(g: Graph) -> str:
    for o in iter_orientations(g):
        labelable = isinstance(solve_labeling(o), ArcLabeling)
        if labelable == (find_bad_cycle(o) is not None):
            return f"slot system and bad-cycle search disagree on {o}"
    return ""


def _verified(rep, g: Graph) -> str:
    report = verify_representation(rep, g)
    if not report:
        return "; ".join(str(v) for v in report.violations)
    problems = check_labeling(induced_labeling(rep)[1])
    return "; ".join(problems)


def _labeling_construction(g: Graph) -> str:
    certificate = decide_cbu(g)
    if not certificate.is_member:
        return ""
    rep = labeling_to_representation(g, certificate.labeling)
    if rep.d > max(2 * g.n - 1, 1):
        return f"dimension {rep.d} exceeds 2n - 1"
    return _verified(rep, g)


def _homomorphism_transfer(g: Graph) -> str:
    hom = find_homomorphism_c5(g)
    if hom is None:
        return ""
    labeling = pullback_labeling(g, cycle_graph(5), hom, good_c5_labeling())
    problems = check_labeling(labeling)
    if problems:
        return "; ".join(problems)
    return "" if decide_cbu(g).is_member else "decide_cbu disagrees with the pullback"


def _non_member(item) -> str:
    _, result = item
    return "" if result.verdict == "non-member" else f"verdict {result.verdict}"


def _bipartite_member(item) -> str:
    _, result = item
    if result.verdict != "member":
        return f"verdict {result.verdict}"
    return "; ".join(check_labeling(result.labeling))


def _fractional_bound(g: Graph) -> str:
    alpha, _ = independence_number(g)
    if g.n and not 4 * alpha > g.n:
        return f"alpha = {alpha} is not above n/4"
    chi_f = fractional_chromatic_number(g)
    return "" if chi_f < 4 else f"chi_f = {chi_f} is not below 4"


def selftest(
    level: str = "quick", seed: int = DEFAULT_SEED, jobs: int = 1
) -> SelftestReport:
    """Runs the consistency suites

    Parameters
    ----------
    level : str
        ``"quick"`` (graphs up to 5 vertices) or ``"full"`` (up to 6 vertices, larger
        constructions, a 200-graph random corpus and the search on G_3)
    seed : int
        seed of the random corpus
    jobs : int
        worker processes for the batches of recognitions
    """
    if level not in _SCALES:
        raise InvalidOptionError(
            name="selftest level", invalid_option=level, valid_options=LEVELS
        )
    scale = _SCALES[level]
    report = SelftestReport(level, seed)
    run = _Runner(report, jobs)

    small = list(connected_graphs(scale.oracle_n))
    run.check("oracle equivalence", small, _oracle_agrees)

    with_triangle = [g for g in small if find_triangle(g) is not None]
    run.check(
        "triangles are not CBU",
        zip(with_triangle, run.decide_all(with_triangle)),
        _non_member,
    )

    bipartite = [g for g in connected_graphs(scale.bipartite_n) if g.is_bipartite()]
    run.check(
        "bipartite graphs are CBU",
        zip(bipartite, run.decide_all(bipartite)),
        _bipartite_member,
    )

    run.check(
        "shift graph representation",
        range(2, scale.shift_m + 1),
        _shift_check,
    )
    run.check(
        "grid representation",
        range(1, scale.grid_n + 1),
        lambda n: _verified(grid_2cbu(n), grid_graph(n)),
    )
    run.check(
        "double subdivision representation",
        [g for g in small if g.n <= scale.subdivision_n],
        _subdivision_check,
    )
    run.check(
        "labeling to representation",
        [g for g in small if g.n <= scale.labeling_n and find_triangle(g) is None],
        _labeling_construction,
    )
    run.check("homomorphism transfer", small, _homomorphism_transfer)

    corpus = random_corpus(scale.corpus_size, seed)
    members = [
        g for g, res in zip(corpus, run.decide_all(corpus)) if res.verdict == "member"
    ]
    run.check("fractional bound on members", members, _fractional_bound)
    run.check(
        "fractional bound on shift graphs",
        range(2, 8),
        lambda m: "" if fractional_chromatic_number(shift_graph(m)) < 4 else "chi_f >= 4",
    )

    if scale.with_g3:
        run.check("G3 is not CBU", [g3()], _g3_check)

    _logger.info(
        "selftest %s: %d checks, %d failures",
        level,
        sum(report.checks.values()),
        len(report.failures),
    )
    return report


def _shift_check(m: int) -> str:
    rep = shift_graph_representation(m)
    for v, (i, j) in enumerate(shift_graph_vertices(m)):
        if rep.box(v).intervals[0] != (Fraction(i), Fraction(j)):
            return f"first interval of {(i, j)} is {rep.box(v).intervals[0]}"
    return _verified(rep, shift_graph(m))


def _subdivision_check(g: Graph) -> str:
    return _verified(double_subdivision_to_3cbu(g, 2), subdivide(g, 2).graph)


def _g3_check(g: Graph) -> str:
    if decide_cbu(g).is_member:
        return "found a labelable orientation"
    o = find_cover_orientation(g)
    return "" if o is not None else "no cover-graph orientation"
