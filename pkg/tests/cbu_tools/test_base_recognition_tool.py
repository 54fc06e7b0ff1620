import pytest

from cbu import CbuProblem, RecognitionOptions, cycle_graph
from cbu._exceptions import CbuError, NotDefinedError
from cbu.tools import BaseRecognitionTool, error_handler


@pytest.fixture
def empty_setup():
    problem = CbuProblem()
    options = RecognitionOptions()
    return problem, options


@pytest.fixture
def subclass_tool_empty():
    class MyOwnToolEmpty(BaseRecognitionTool):
        pass

    return MyOwnToolEmpty


@pytest.fixture
def subclass_tool0():
    class MyOwnToolImplementingNothing(BaseRecognitionTool):
        def __call__(self) -> dict:
            return super().__call__()

        @classmethod
        def required_in_problem(cls) -> set:
            return super().required_in_problem()

        @classmethod
        def optional_in_problem(cls) -> dict:
            return super().optional_in_problem()

        @classmethod
        def required_in_options(cls) -> set:
            return super().required_in_options()

        @classmethod
        def optional_in_options(cls) -> dict:
            return super().optional_in_options()

    return MyOwnToolImplementingNothing


@pytest.fixture
def subclass_tool1():
    class MyOwnToolRequiringProblemDef(BaseRecognitionTool):
        def __call__(self) -> dict: return super().__call__()

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
            return dict()

    return MyOwnToolRequiringProblemDef


@pytest.fixture
def subclass_tool2():
    class MyOwnToolRequiringOptionsDef(BaseRecognitionTool):
        def __call__(self) -> dict:
            return super().__call__()

        @classmethod
        def required_in_problem(cls) -> set:
            return set()

        @classmethod
        def optional_in_problem(cls) -> dict:
            return dict()

        @classmethod
        def required_in_options(cls) -> set:
            return {"budget"}

        @classmethod
        def optional_in_options(cls) -> dict:
            return {"jobs": 1}

    return MyOwnToolRequiringOptionsDef


def test_abstract_methods(empty_setup, subclass_tool_empty):
    problem, options = empty_setup
    with pytest.raises(TypeError):
        subclass_tool_empty(problem, options)


def test_to_make_coverage_happy(empty_setup, subclass_tool0):
    problem, options = empty_setup
    tool = subclass_tool0(problem, options)
    with pytest.raises(NotImplementedError):
        tool()
    assert not tool.required_in_problem()
    assert not tool.optional_in_problem()
    assert not tool.required_in_options()
    assert not tool.optional_in_options()
    assert tool.components_used == []


def test_validation_problem(empty_setup, subclass_tool1):
    problem, options = empty_setup
    # 1
    with pytest.raises(
        ValueError, match=".*not enough information is provided in the CbuProblem.*"
    ):
        subclass_tool1(problem, options)
    # 2
    problem.set_graph(cycle_graph(4))
    tool = subclass_tool1(problem, options)
    assert str(tool) == "MyOwnToolRequiringProblemDef"
    assert tool.components_used == ["graph"]
    # 3 - optional components show up once defined
    problem.set_fixed_arcs([(0, 1)])
    tool = subclass_tool1(problem, options)
    assert tool.components_used == ["graph", "fixed_arcs"]


def test_validation_options(empty_setup, subclass_tool2):
    problem, options = empty_setup
    # 1
    with pytest.raises(
        ValueError,
        match=".*not enough information is provided in the RecognitionOptions.*",
    ):
        subclass_tool2(problem, options)
    # 2
    options.set_params(budget=1000)
    tool = subclass_tool2(problem, options)
    with pytest.raises(NotImplementedError):
        tool()
    # 3 - user values over defaults
    assert tool.params == {"budget": 1000, "jobs": 1}
    options.set_params(jobs=4)
    tool._assign_options()
    assert tool.params["jobs"] == 4


def test_validation_options_warnings(empty_setup, subclass_tool2):
    problem, options = empty_setup
    options.set_params(budget=1, budgett=1000)
    with pytest.warns(
        UserWarning,
        match=(
            ".*the following options are defined but not in parameter list for the"
            " chosen tool.*"
        ),
    ):
        subclass_tool2(problem, options)


def test_error_handler():
    @error_handler(when="when testing", context="in a unit test")
    def fails(exception):
        raise exception

    with pytest.raises(CbuError, match=".*error occurred when testing.*") as exc_info:
        fails(KeyError("x"))
    assert isinstance(exc_info.value.__cause__, KeyError)
    # CbuError subclasses pass through untouched
    with pytest.raises(NotDefinedError):
        fails(NotDefinedError(needs="graph"))
