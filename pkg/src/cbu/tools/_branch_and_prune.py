import logging

from . import BaseRecognitionTool, error_handler
from .._analysis import find_triangle
from .._exceptions import BudgetExhaustedError
from .._families import good_c5_labeling
from .._graph import Graph, Orientation
from .._homomorphism import find_homomorphism_c5, pullback_labeling
from .._labeling import ArcLabeling
from .._search import (
    DEFAULT_BUDGET,
    SearchStats,
    branch_and_prune,
    surviving_prefixes,
)


_logger = logging.getLogger(__name__)

MEMBER = "member"
NON_MEMBER = "non-member"
INCONCLUSIVE = "inconclusive"


def decision(verdict, stats, reason, labeling=None, triangle=None) -> dict:
    """the result dictionary shared by all recognition tools"""
    return {
        "success": verdict != INCONCLUSIVE,
        "verdict": verdict,
        "orientation": labeling.orientation if labeling is not None else None,
        "labeling": labeling,
        "stats": stats,
        "reason": reason,
        "triangle": triangle,
    }


def bipartite_labeling(g: Graph):
    """every edge oriented from the part of the smallest vertex to the other, with
    label 1, as the pullback of the labelled edge ``0 -> 1``"""
    part_a, _ = g.bipartition()
    edge = Graph(2, [(0, 1)])
    labelled_edge = {(0, 1): 1}
    return pullback_labeling(
        g,
        edge,
        {v: 0 if v in part_a else 1 for v in g.vertices},
        ArcLabeling(Orientation(edge, labelled_edge), labelled_edge),
    )


class BranchAndPrune(BaseRecognitionTool):
    r"""Decides CBU membership by a pruned search over orientations

    Triangles decide non-membership at once. Unless shortcuts are disabled or arcs are
    forced, bipartite graphs and graphs with a homomorphism to C_5 are decided by
    pulling back a labeling. Otherwise edges are oriented one by one in DFS order while
    a :class:`cbu.SlotSystem` tracks the forced label equalities, and every branch whose
    slot quotient gets a cycle is cut.

    With ``jobs > 1`` the surviving choices for the first ``split_depth`` edges become
    independent subproblems run on a :class:`cbu.utils.RecognitionPool`; the member
    witness of the lowest-numbered subproblem is reported, so the verdict and the
    witness don't depend on scheduling. Each subproblem gets the full budget.
    """

    documentation_links = [
        "https://networkx.org/documentation/stable/reference/algorithms/generated/"
        "networkx.algorithms.cycles.find_cycle.html"
    ]
    short_description = (
        "Depth-first search over edge orientations with union-find slot merging and "
        "pruning on slot-quotient cycles"
    )

    @classmethod
    def required_in_problem(cls) -> set:
        return {"graph"}

    @classmethod
    def optional_in_problem(cls) -> dict:
        return {"fixed_arcs": {}}

    @classmethod
    def required_in_options(cls) -> set:
        return set()

    @classmethod
    def optional_in_options(cls) -> dict:
        return {
            "budget": DEFAULT_BUDGET,
            "jobs": 1,
            "split_depth": 4,
            "shortcuts": True,
        }

    def __init__(self, problem, options):
        super().__init__(problem, options)
        self._graph = problem.graph
        self._fixed = dict(problem.fixed_arcs) if problem.fixed_arcs_defined else {}

    def __call__(self) -> dict:
        g = self._graph
        stats = SearchStats()
        triangle = find_triangle(g)
        if triangle is not None:
            stats.shortcut = "triangle"
            return decision(NON_MEMBER, stats, "triangle", triangle=triangle)
        if self._params["shortcuts"] and not self._fixed:
            shortcut = self._shortcut(g)
            if shortcut is not None:
                stats.shortcut, labeling = shortcut
                return decision(MEMBER, stats, stats.shortcut, labeling)
        if self._params["jobs"] > 1:
            return self._call_parallel(stats)
        return self._call_search(stats)

    def _shortcut(self, g):
        if g.is_bipartite():
            return "bipartite", bipartite_labeling(g)
        hom = find_homomorphism_c5(g)
        if hom is not None:
            c5 = good_c5_labeling()
            return "c5-homomorphism", pullback_labeling(g, c5.orientation.base, hom, c5)
        return None

    @error_handler(
        when="when searching orientations",
        context="in the branch-and-prune search",
    )
    def _call_search(self, stats):
        try:
            labeling, stats = branch_and_prune(
                self._graph, self._params["budget"], self._fixed, stats
            )
        except BudgetExhaustedError as exception:
            _logger.info("branch and prune: budget exhausted, %s", exception.stats)
            return decision(INCONCLUSIVE, exception.stats, "budget exhausted")
        _logger.info("branch and prune finished: %s", stats)
        if labeling is None:
            return decision(NON_MEMBER, stats, "search")
        return decision(MEMBER, stats, "search", labeling)

    def _call_parallel(self, stats):
        from .._problem import CbuProblem
        from .._recognition_options import RecognitionOptions
        from ..utils import RecognitionPool

        prefixes = surviving_prefixes(
            self._graph, self._params["split_depth"], self._fixed, stats
        )
        _logger.info("splitting the search into %d subproblems", len(prefixes))
        if not prefixes:
            return decision(NON_MEMBER, stats, "search")
        problems = []
        for prefix in prefixes:
            sub = CbuProblem(f"subtree {len(problems)}", graph=self._graph)
            sub.set_fixed_arcs(prefix.values())
            problems.append(sub)
        options = RecognitionOptions()
        options.set_tool("cbu.branch_and_prune")
        options.set_params(budget=self._params["budget"], jobs=1, shortcuts=False)
        results, _ = RecognitionPool(problems, options, parallel=True).run()
        for result in results:
            stats.merge(result.stats)
        verdicts = [result.verdict for result in results]
        if MEMBER in verdicts:
            first = results[verdicts.index(MEMBER)]
            return decision(MEMBER, stats, "search", first.labeling)
        if INCONCLUSIVE in verdicts:
            return decision(INCONCLUSIVE, stats, "budget exhausted")
        return decision(NON_MEMBER, stats, "search")
