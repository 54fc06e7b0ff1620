from abc import abstractmethod, ABCMeta
import functools
import warnings

from .._exceptions import CbuError


class BaseRecognitionTool(metaclass=ABCMeta):
    r"""Base class for backend recognition and labeling tools

    To create your own tool, subclass :class:`BaseRecognitionTool` and define the
    following methods & fields.

    .. admonition:: Example definition of a custom tool
        :class: dropdown, hint

        .. code-block:: pycon

            >>> from cbu.tools import BaseRecognitionTool
            >>> class AlwaysMember(BaseRecognitionTool):
            ...   short_description = "Claims membership without looking"
            ...   @classmethod
            ...   def required_in_problem(cls): return {"graph"}
            ...   @classmethod
            ...   def optional_in_problem(cls): return dict()
            ...   @classmethod
            ...   def required_in_options(cls): return set()
            ...   @classmethod
            ...   def optional_in_options(cls): return dict()
            ...   def __call__(self):
            ...     return {"success": True, "verdict": "member"}
            ...
            >>> from cbu import RecognitionOptions
            >>> options = RecognitionOptions()
            >>> options.set_tool(AlwaysMember)

    .. rubric:: Minimal implementation

    Input validation is performed automatically when a new instance is created, based
    on what the first four class methods return.

    .. autosummary::
        BaseRecognitionTool.required_in_problem
        BaseRecognitionTool.optional_in_problem
        BaseRecognitionTool.required_in_options
        BaseRecognitionTool.optional_in_options
        BaseRecognitionTool.__init__
        BaseRecognitionTool.__call__

    .. rubric:: Displaying

    .. autosummary::
        BaseRecognitionTool.short_description
        BaseRecognitionTool.documentation_links

    """

    #: list: references about the backend tool
    documentation_links = list()
    #: str: a short introduction about the tool. This is for display purpose only
    short_description = str()

    def __init__(self, problem, options):
        """initialisation routine for the tool instance

        Attaches the :class:`CbuProblem` and :class:`RecognitionOptions` objects to
        ``self``, validates both against the four class methods, and assigns
        tool parameters (user values over defaults) to ``self._params``.

        Parameters
        ----------
        problem : CbuProblem
            the problem setup
        options : RecognitionOptions
            an object that defines how to run the tool
        """
        self._problem = problem
        self._options = options
        self._validate_problem()
        self._validate_options()
        self._assign_options()
        self._update_components_used()

    @classmethod
    @abstractmethod
    def required_in_problem(cls) -> set:
        r"""a set of components required in :class:`CbuProblem` instance"""
        return set()

    @classmethod
    @abstractmethod
    def optional_in_problem(cls) -> dict:
        r"""a dictionary of components that are optional in :class:`CbuProblem`
        instance, mapped to what is used when they are absent"""
        return dict()

    @classmethod
    @abstractmethod
    def required_in_options(cls) -> set:
        """a set of tool-specific options required in :class:`RecognitionOptions`"""
        return set()

    @classmethod
    @abstractmethod
    def optional_in_options(cls) -> dict:
        """dict: tool-specific options that are optional in
        :class:`RecognitionOptions`, mapped to their defaults"""
        return dict()

    @abstractmethod
    def __call__(self) -> dict:
        """runs the tool

        Returns
        -------
        dict
            a Python dictionary that has at least ``success`` as a key
        """
        raise NotImplementedError

    @property
    def components_used(self) -> list:
        r"""components of :class:`CbuProblem` used in this run"""
        return self._components_used

    @property
    def problem(self):
        return self._problem

    @property
    def options(self):
        return self._options

    @property
    def params(self) -> dict:
        return self._params

    def _validate_problem(self):
        defined = self.problem.defined_components()
        required = self.required_in_problem()
        if all(component in defined for component in required):
            return True
        raise ValueError(
            f"you've chosen {self.__class__.__name__} to be your tool, but "
            "not enough information is provided in the CbuProblem object - "
            f"required: {required}; provided: {defined}"
        )

    def _validate_options(self):
        defined = self.options.get_params()
        required = self.required_in_options()
        optional = self.optional_in_options()
        if all(option in defined for option in required):
            unknown = [
                option
                for option in defined
                if option not in optional and option not in required
            ]
            if unknown:
                warnings.warn(
                    "the following options are defined but not in parameter list for "
                    f"the chosen tool: {unknown}"
                )
            return True
        raise ValueError(
            f"you've chosen {self.__class__.__name__} to be your tool, but "
            "not enough information is provided in the RecognitionOptions object - "
            f"required: {required}; provided: {defined}"
        )

    def _assign_options(self):
        params = self.options.get_params()
        self._params = dict()
        for opt in self.required_in_options():
            self._params[opt] = params[opt]
        for opt, val in self.optional_in_options().items():
            self._params[opt] = params.get(opt, val)

    def _update_components_used(self):
        self._components_used = list(self.required_in_problem())
        defined = self.problem.defined_components()
        self._components_used.extend(
            c for c in sorted(defined) if c in self.optional_in_problem()
        )

    def __repr__(self) -> str:
        return self.__class__.__name__


def error_handler(when, context):
    """Error handler for running backend tools

    :class:`CbuError` subclasses raised inside the wrapped call pass through untouched
    so callers can still tell e.g. an exhausted budget apart; anything else is wrapped.
    """

    def wrap_error_handler(func):
        @functools.wraps(func)
        def wrapped_func(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except CbuError:
                raise
            except Exception as e:
                raise CbuError(
                    (
                        f"error occurred {when} ({context}). Check exception details "
                        "from message above."
                    ),
                ) from e

        return wrapped_func

    return wrap_error_handler
