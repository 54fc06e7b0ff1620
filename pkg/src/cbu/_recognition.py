import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple, Type

from ._exceptions import BudgetExhaustedError, InvalidLabelingError
from ._graph import Graph, Orientation
from ._labeling import ArcLabeling, check_labeling
from ._problem import CbuProblem
from ._recognition_options import RecognitionOptions
from ._search import DEFAULT_BUDGET, SearchStats
from .tools import tool_dispatch_table, BaseRecognitionTool


_logger = logging.getLogger(__name__)


class RecognitionResult:
    r"""The result of a :class:`Recognition` run

    You won't need to create an object of this class by yourself. Every key of the
    tool's result dictionary becomes an attribute; recognition tools give ``verdict``,
    ``labeling``, ``orientation``, ``stats``, ``reason`` and ``triangle``, labeling
    tools give ``labelable``, ``labeling`` and ``certificate``.
    """

    #: bool: whether the tool reached a decision
    success: bool
    #: dict: raw output from the backend tool
    res: dict

    def __init__(self, res: dict) -> None:
        self.__dict__.update(res)
        self.res = res
        if "success" not in res:
            raise ValueError(
                "termination status not returned in result dictionary, fix your tool "
                "to return a dictionary with at least the key 'success'"
            )
        self.success_or_not = (
            "success" if hasattr(self, "success") and self.success else "failure"
        )

    @property
    def certificate(self) -> "CbuCertificate":
        """the recognition outcome as a :class:`CbuCertificate`

        Raises
        ------
        AttributeError
            for results of labeling tools, which carry no verdict
        """
        return CbuCertificate(
            verdict=self.verdict,
            labeling=self.labeling,
            stats=self.stats,
            reason=self.reason,
            triangle=self.triangle,
        )

    def summary(self) -> None:
        """Helper method that prints a summary of the result to console"""
        self._summary()

    def _summary(self, display_lines=True) -> None:
        title = "Summary for recognition result"
        display_width = len(title)
        double_line = "=" * display_width
        single_line = "-" * display_width
        if display_lines:
            print(double_line)
        print(title)
        if display_lines:
            print(double_line)
        print(self.success_or_not.upper())
        if display_lines:
            print(single_line)
        for key, val in self.res.items():
            if key != "success":
                print(f"{key}: {val}")

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.success_or_not})"


class Recognition:
    r"""Takes a :class:`CbuProblem` and :class:`RecognitionOptions` and runs the chosen
    backend tool

    .. admonition:: Example usage of Recognition
        :class: attention

        >>> from cbu import CbuProblem, RecognitionOptions, Recognition, g3
        >>> problem = CbuProblem(graph=g3())
        >>> options = RecognitionOptions()
        >>> options.set_tool("cbu.branch_and_prune")
        >>> result = Recognition(problem, options).run()
        >>> result.verdict
        'non-member'
    """

    def __init__(self, problem: CbuProblem, options: RecognitionOptions) -> None:
        self.problem = problem
        self.options = options
        # dispatch the tool from the options, validation is done by the tool
        self.tool = self._dispatch_tool()(problem, options)
        self.result = None

    def run(self) -> RecognitionResult:
        """Runs the tool and returns a :class:`RecognitionResult`"""
        res_dict = self.tool()
        self.result = RecognitionResult(res_dict)
        return self.result

    def _dispatch_tool(self) -> Type[BaseRecognitionTool]:
        tool = self.options.get_tool()
        if isinstance(tool, str):
            return tool_dispatch_table[tool]
        return self.options.tool

    def summary(self):
        r"""Prints the result (when finished), the options and the problem"""
        title = "Summary for Recognition"
        subtitle_result = "Completed with the following result:"
        subtitle_options = "With recognition options defined as below:"
        subtitle_problem = "For problem defined as below:"
        display_width = max(
            len(title),
            len(subtitle_result),
            len(subtitle_options),
            len(subtitle_problem),
        )
        double_line = "=" * display_width
        single_line = "-" * display_width
        print(double_line)
        print(title)
        print(double_line)
        if self.result:
            print(f"{subtitle_result}\n")
            self.result._summary(False)
            print(single_line)
        else:
            print("Recognition hasn't started, try `recognition.run()` to see result")
            print(single_line)
        print(f"{subtitle_options}\n")
        self.options._summary(False)
        print(single_line)
        print(f"{subtitle_problem}\n")
        self.problem._summary(False)
        print(single_line)
        print("List of components used:")
        print(self.tool.components_used)
        print(double_line)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.problem}, {self.options})"


@dataclass(frozen=True)
class CbuCertificate:
    """Outcome of :func:`decide_cbu`

    A member certificate holds a homogeneous labeling of an orientation of the graph;
    a non-member certificate holds the search statistics (nodes visited, subtrees
    pruned) showing that every orientation was ruled out, or the triangle found.
    """

    verdict: str
    labeling: Optional[ArcLabeling] = None
    stats: SearchStats = field(default_factory=SearchStats)
    reason: str = ""
    triangle: Optional[Tuple[int, int, int]] = None

    def __post_init__(self):
        if self.verdict == "member":
            if self.labeling is None:
                raise InvalidLabelingError("a member certificate needs a labeling")
            problems = check_labeling(self.labeling)
            if problems:
                raise InvalidLabelingError(problems=problems)

    @property
    def is_member(self) -> bool:
        return self.verdict == "member"

    @property
    def orientation(self) -> Optional[Orientation]:
        return self.labeling.orientation if self.labeling is not None else None


def decide_cbu(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    fixed_arcs: Optional[Iterable[Tuple[int, int]]] = None,
    jobs: int = 1,
    shortcuts: bool = True,
    split_depth: int = 4,
) -> CbuCertificate:
    r"""Decides whether ``g`` is the contact graph of boxes with unidirectional
    contacts, i.e. whether some orientation of ``g`` admits a homogeneous labeling

    Parameters
    ----------
    g : Graph
        the graph
    budget : int
        maximum number of search nodes (per subtree when ``jobs > 1``)
    fixed_arcs : iterable of arcs, optional
        arcs the orientation must contain
    jobs : int
        number of worker processes; the verdict and witness don't depend on it
    shortcuts : bool
        decide bipartite graphs and graphs mapping to C_5 without searching
    split_depth : int
        number of edges fixed to form the parallel subproblems

    Raises
    ------
    BudgetExhaustedError
        when the budget runs out before a verdict
    """
    problem = CbuProblem("decide_cbu", graph=g)
    if fixed_arcs is not None:
        problem.set_fixed_arcs(fixed_arcs)
    options = RecognitionOptions()
    options.set_tool("cbu.branch_and_prune")
    options.set_params(
        budget=budget, jobs=jobs, shortcuts=shortcuts, split_depth=split_depth
    )
    result = Recognition(problem, options).run()
    if result.verdict == "inconclusive":
        raise BudgetExhaustedError(budget=budget, stats=result.stats)
    _logger.info("%s: %s (%s)", g, result.verdict, result.reason)
    return result.certificate
