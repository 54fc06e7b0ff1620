from . import BaseRecognitionTool, error_handler
from .._labeling import ArcLabeling, expand_certificate, solve_labeling


class SlotDag(BaseRecognitionTool):
    r"""Labels a given orientation through the union-find slot system

    Out-slot of the tail and in-slot of the head of every arc are merged; labels are the
    longest-path ranks of the slot classes. A cycle of slot classes proves that no
    labeling exists, and is turned into a badly oriented cycle when
    ``expand_certificate`` is set.
    """

    documentation_links = [
        "https://networkx.org/documentation/stable/reference/algorithms/generated/"
        "networkx.algorithms.dag.topological_sort.html"
    ]
    short_description = "Union-find over in/out slots and longest paths in the quotient DAG"

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
        result = self._call_solve(o)
        if isinstance(result, ArcLabeling):
            return {"success": True, "labelable": True, "labeling": result, "certificate": None}
        if self._params["expand_certificate"]:
            result = expand_certificate(o, result)
        return {"success": True, "labelable": False, "labeling": None, "certificate": result}

    @error_handler(
        when="when labelling the orientation",
        context="in the slot system",
    )
    def _call_solve(self, o):
        return solve_labeling(o)
