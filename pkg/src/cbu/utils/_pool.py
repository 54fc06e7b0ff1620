from typing import Callable, List, Union, Tuple
import multiprocessing
import itertools

from .._exceptions import InvocationError
from .._problem import CbuProblem
from .._recognition_options import RecognitionOptions
from .._recognition import Recognition, RecognitionResult


class RecognitionPool:
    """Runs a batch of recognitions, in parallel or sequentially

    Parameters
    ----------
    list_of_problems : Union[List[CbuProblem], CbuProblem]
        the problems to run, or a single problem used for every run
    list_of_options : Union[List[RecognitionOptions], RecognitionOptions]
        options for each run, or a single set of options used for every run
    callback : Callable[[RecognitionResult, int], Any], optional
        invoked as ``callback(result, i)`` after run ``i``; its return values are
        collected
    parallel : bool, optional
        run on a :class:`multiprocessing.Pool` instead of in this process

    Examples
    --------

    >>> from cbu import CbuProblem, RecognitionOptions, cycle_graph
    >>> from cbu.utils import RecognitionPool
    >>> problems = [CbuProblem(graph=cycle_graph(k)) for k in range(3, 8)]
    >>> options = RecognitionOptions()
    >>> results, _ = RecognitionPool(problems, options).run()
    >>> [r.verdict for r in results]
    ['non-member', 'member', 'member', 'member', 'member']
    """

    def __init__(
        self,
        list_of_problems: Union[List[CbuProblem], CbuProblem],
        list_of_options: Union[List[RecognitionOptions], RecognitionOptions],
        callback: Callable[[RecognitionResult, int], None] = None,
        parallel: bool = False,
    ):
        if not list_of_problems:
            raise ValueError(
                "empty list detected, please pass in a concrete list of CbuProblem "
                "instances"
            )
        if not list_of_options:
            raise ValueError(
                "empty list detected, please pass in a concrete list of"
                " RecognitionOptions instances"
            )
        if (
            isinstance(list_of_problems, list)
            and isinstance(list_of_options, list)
            and len(list_of_problems) != len(list_of_options)
        ):
            raise ValueError(
                "mismatch in lengths, `list_of_problems` has length "
                f"{len(list_of_problems)} and `list_of_options` has length "
                f"{len(list_of_options)}. Please make sure they are of the same "
                "length"
            )
        if not isinstance(list_of_problems, list) and not isinstance(
            list_of_options, list
        ):
            list_of_problems = [list_of_problems]
        self.problems = (
            list_of_problems
            if isinstance(list_of_problems, list)
            else list(itertools.repeat(list_of_problems, len(list_of_options)))
        )
        self.options = (
            list_of_options
            if isinstance(list_of_options, list)
            else list(itertools.repeat(list_of_options, len(self.problems)))
        )
        self.callback = callback
        self.parallel = parallel

    def run(self) -> Tuple[List[RecognitionResult], List]:
        """Runs every recognition

        Returns
        -------
        Tuple[List[RecognitionResult], List]
            the results and the callback return values, both in input order
        """
        if self.parallel:
            return self._run_parallel(self.problems, self.options, self.callback)
        return self._run_sequential(self.problems, self.options, self.callback)

    def _run_sequential(self, problems, options, callback):
        results = [
            self._run_one_with_callback(problem, opts, i, callback)
            for i, (problem, opts) in enumerate(zip(problems, options))
        ]
        results, callback_results = zip(*results)
        return list(results), list(callback_results)

    def _run_parallel(self, problems, options, callback):
        all_args = zip(problems, options, range(len(problems)), itertools.repeat(callback))
        with multiprocessing.Pool() as pool:
            results = list(pool.imap(self._run_one_with_callback, all_args))
        results, callback_results = zip(*results)
        return list(results), list(callback_results)

    @staticmethod
    def _run_one_with_callback(problem, options=None, i=None, callback=None):
        # for parallel case where only one argument is passed in,
        # unpack the first argument
        if not isinstance(problem, CbuProblem):
            problem, options, i, callback = problem
        result = Recognition(problem, options).run()
        callback_result = None
        if callback:
            try:
                callback_result = callback(result, i)
            except Exception as exception:
                raise InvocationError(func_name="pool callback") from exception
        return result, callback_result
