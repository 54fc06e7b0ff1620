from . import BaseRecognitionTool
from ._branch_and_prune import INCONCLUSIVE, MEMBER, NON_MEMBER, decision
from .._exceptions import BudgetExhaustedError
from .._search import DEFAULT_BUDGET, SearchStats, exhaustive_search


class ExhaustiveSearch(BaseRecognitionTool):
    r"""Tries every orientation with the slot-DAG labeler, without pruning or
    shortcuts; the reference oracle for the other recognition tools"""

    short_description = "Plain enumeration of all 2^m orientations"

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
        return {"budget": DEFAULT_BUDGET}

    def __call__(self) -> dict:
        problem = self.problem
        fixed = problem.fixed_arcs if problem.fixed_arcs_defined else {}
        stats = SearchStats()
        try:
            labeling, stats = exhaustive_search(
                problem.graph, self._params["budget"], fixed, stats
            )
        except BudgetExhaustedError as exception:
            return decision(INCONCLUSIVE, exception.stats, "budget exhausted")
        if labeling is None:
            return decision(NON_MEMBER, stats, "search")
        return decision(MEMBER, stats, "search", labeling)
