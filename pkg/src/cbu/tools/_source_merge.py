from . import BaseRecognitionTool, error_handler
from .._labeling import find_bad_cycle, solve_labeling, synthesize_by_source_merge


class SourceMerge(BaseRecognitionTool):
    r"""Labels a given orientation by repeatedly eliminating a source

    A source whose out-neighbours have no other in-neighbour is labelled below
    everything else; otherwise its arcs are redirected to leave a vertex sharing one of
    its out-neighbours, and inherit that vertex's label. The elimination gets stuck
    exactly on orientations with a badly oriented cycle, which is then reported.
    """

    short_description = "Constructive labeling by source elimination and arc redirection"

    @classmethod
    def required_in_problem(cls) -> set:
        return {"orientation"}

    @classmethod
    def optional_in_problem(cls) -> dict:
        return dict()

    @classmethod
    def required_in_options(cls) -> set:
        return set()

    @classmethod
    def optional_in_options(cls) -> dict:
        return {"expand_certificate": True}

    def __call__(self) -> dict:
        o = self.problem.orientation
        labeling = self._call_synthesize(o)
        if labeling is not None:
            return {"success": True, "labelable": True, "labeling": labeling, "certificate": None}
        certificate = find_bad_cycle(o) if self._params["expand_certificate"] else None
        if certificate is None:
            certificate = solve_labeling(o)
        return {"success": True, "labelable": False, "labeling": None, "certificate": certificate}

    @error_handler(
        when="when labelling the orientation",
        context="in the source elimination",
    )
    def _call_synthesize(self, o):
        return synthesize_by_source_merge(o)
