import pytest

import cbu
from cbu._exceptions import InvocationError


def problem_setup(k):
    return cbu.CbuProblem(f"cycle {k}", graph=cbu.cycle_graph(k))

def callback(result, i):
    return (i, result.verdict)

def failing_callback(result, i):
    raise KeyError(i)

@pytest.fixture
def problems_and_options():
    problems = [problem_setup(k) for k in range(3, 7)]
    options = cbu.RecognitionOptions()
    options.set_tool("cbu.branch_and_prune")
    options.set_params(shortcuts=False)
    return problems, options

EXPECTED = ["non-member", "member", "member", "member"]

def test_run_multiple_sequential(problems_and_options):
    problems, options = problems_and_options
    pool = cbu.utils.RecognitionPool(problems, options, callback, False)
    results, callback_results = pool.run()
    for res in results:
        assert isinstance(res, cbu.RecognitionResult)
    assert [res.verdict for res in results] == EXPECTED
    assert callback_results == list(enumerate(EXPECTED))

def test_run_multiple_parallel(problems_and_options):
    problems, options = problems_and_options
    pool = cbu.utils.RecognitionPool(problems, options, callback, True)
    results, callback_results = pool.run()
    assert [res.verdict for res in results] == EXPECTED
    assert callback_results == list(enumerate(EXPECTED))

def test_single_problem_many_options():
    problem = problem_setup(5)
    options = []
    for tool in ("cbu.branch_and_prune", "cbu.exhaustive", "cbu.c5_homomorphism"):
        opts = cbu.RecognitionOptions()
        opts.set_tool(tool)
        options.append(opts)
    results, callback_results = cbu.utils.RecognitionPool(problem, options).run()
    assert [res.verdict for res in results] == ["member"] * 3
    assert callback_results == [None] * 3

def test_single_problem_single_options():
    results, _ = cbu.utils.RecognitionPool(
        problem_setup(4), cbu.RecognitionOptions()
    ).run()
    assert len(results) == 1
    assert results[0].reason == "bipartite"

def test_failing_callback(problems_and_options):
    problems, options = problems_and_options
    with pytest.raises(InvocationError, match=r".*pool callback.*"):
        cbu.utils.RecognitionPool(problems, options, failing_callback).run()

def test_empty_list(problems_and_options):
    problems, options = problems_and_options
    with pytest.raises(ValueError, match=r".*empty list detected.*"):
        cbu.utils.RecognitionPool([], options)
    with pytest.raises(ValueError, match=r".*empty list detected.*"):
        cbu.utils.RecognitionPool(problems, [])

def test_unmatching_list_length(problems_and_options):
    problems, options = problems_and_options
    with pytest.raises(ValueError, match=r".*mismatch in lengths.*"):
        cbu.utils.RecognitionPool(problems, [options, options, options])
