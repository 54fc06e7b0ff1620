from . import BaseRecognitionTool, error_handler
from ._branch_and_prune import INCONCLUSIVE, MEMBER, decision
from .._families import good_c5_labeling
from .._homomorphism import find_homomorphism_c5, pullback_labeling
from .._search import SearchStats


class C5Homomorphism(BaseRecognitionTool):
    r"""Certifies membership through a homomorphism onto the 5-cycle

    A labelled C_5 pulls back along any homomorphism, so finding one proves
    membership. Without a homomorphism the result is inconclusive.
    """

    short_description = (
        "Backtracking search for a homomorphism to C_5 and pullback of its labeling"
    )

    @classmethod
    def required_in_problem(cls) -> set:
        return {"graph"}

    @classmethod
    def optional_in_problem(cls) -> dict:
        return dict()

    @classmethod
    def required_in_options(cls) -> set:
        return set()

    @classmethod
    def optional_in_options(cls) -> dict:
        return dict()

    def __call__(self) -> dict:
        g = self.problem.graph
        stats = SearchStats(shortcut="c5-homomorphism")
        hom = self._call_search(g)
        if hom is None:
            return decision(INCONCLUSIVE, stats, "no homomorphism to C5")
        c5 = good_c5_labeling()
        labeling = pullback_labeling(g, c5.orientation.base, hom, c5)
        result = decision(MEMBER, stats, "c5-homomorphism", labeling)
        result["homomorphism"] = hom
        return result

    @error_handler(
        when="when searching for a homomorphism",
        context="in the backtracking onto C_5",
    )
    def _call_search(self, g):
        return find_homomorphism_c5(g)
