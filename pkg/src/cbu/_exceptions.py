from typing import Any, List, Sequence, Tuple, Union


class CbuError(Exception):
    """Base class for all CBU errors"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def _form_str(self, super_msg, msg):
        return f"{msg}\n\n{super_msg}" if super_msg else msg


class InvalidOptionError(CbuError, ValueError):
    r"""Raised when user passes an invalid option into our methods / functions

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`ValueError`
    name: str
        name of the item that tries to take the invalid option
    invalid_option : Any
        the invalid option entered
    valid_options : list or str
        a list of valid options to choose from, or a string describing valid options
    """

    def __init__(
        self,
        *args,
        name: str,
        invalid_option: Any,
        valid_options: Union[List, str],
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self._name = name
        self._invalid_option = invalid_option
        self._valid_options = valid_options

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"the {self._name} you've entered ('{self._invalid_option}') is "
            f"invalid, please choose from the following: {self._valid_options}"
        )
        return self._form_str(super_msg, msg)


class DimensionMismatchError(CbuError, ValueError):
    r"""Raised when boxes or interval maps don't agree on the dimension

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`ValueError`
    entered_dimension : int
        dimension entered that conflicts with the existing one
    entered_name : str
        name of the item, the dimension of which is entered
    expected_dimension : int
        dimension expected based on existing information
    expected_source : str
        name of an existing component that infers ``expected_dimension``
    """

    def __init__(
        self,
        *args,
        entered_dimension: Any,
        entered_name: str,
        expected_dimension: Any,
        expected_source: str,
        **kwargs,
    ) -> None:
        super().__init__(*args, **kwargs)
        self._entered_dimension = entered_dimension
        self._entered_name = entered_name
        self._expected_dimension = expected_dimension
        self._expected_source = expected_source

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"the {self._entered_name} you've provided (dimension: "
            f"{self._entered_dimension}) doesn't match the dimension of "
            f"{self._expected_source} which is {self._expected_dimension}"
        )
        return self._form_str(super_msg, msg)


class NotDefinedError(CbuError, NotImplementedError):
    r"""Raised when a component is not set on a :class:`CbuProblem` instance but
    attempts are made to use it (e.g. by a recognition tool)

    This is a subclass of :exc:`CbuError` and :exc:`NotImplementedError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`NotImplementedError`
    needs : list or str
        a list of information required to perform the operation, or a string describing
        them
    """

    def __init__(self, *args, needs: Union[List, str], **kwargs):
        super().__init__(*args, **kwargs)
        self._needs = needs

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"`{self._needs}` is called but you haven't added it to the problem setup"
        )
        return self._form_str(super_msg, msg)


class InvocationError(CbuError, RuntimeError):
    r"""Raised when there's an error happening during excecution of a user function

    This is a subclass of :exc:`CbuError` and :exc:`RuntimeError`.

    One should raise this error by ``raise InvocationError(func_name=a) from exception``,
    where ``exception`` is the original exception caught

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`RuntimeError`
    func_name : str
        name of the function that runs into error
    """

    def __init__(self, *args, func_name: str, **kwargs):
        super().__init__(*args, **kwargs)
        self._func_name = func_name

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"exception while calling your {self._func_name}. "
            "Check exception details from message above. "
        )
        return self._form_str(super_msg, msg)


class InvalidGraphError(CbuError, ValueError):
    r"""Raised when a graph, an orientation or a vertex reference is malformed

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.
    """


class InvalidLabelingError(CbuError, ValueError):
    r"""Raised when an arc labeling is not homogeneous where a valid one is required

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`ValueError`
    problems : list of str
        everything the homogeneity checker reported
    """

    def __init__(self, *args, problems: Sequence[str] = (), **kwargs):
        super().__init__(*args, **kwargs)
        self.problems = list(problems)

    def __str__(self) -> str:
        super_msg = super().__str__()
        if not self.problems:
            return super_msg
        shown = "; ".join(self.problems[:5])
        more = f" (and {len(self.problems) - 5} more)" if len(self.problems) > 5 else ""
        return self._form_str(super_msg, f"the arc labeling is invalid: {shown}{more}")


class NotHomomorphismError(CbuError, ValueError):
    r"""Raised when a vertex map does not send every edge onto an edge

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.
    """


class RepresentationError(CbuError, ValueError):
    r"""Raised when a box family violates the contact invariants

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`ValueError`
    violations : list
        the :class:`cbu.geometry.Violation` records found
    """

    def __init__(self, *args, violations: Sequence = (), **kwargs):
        super().__init__(*args, **kwargs)
        self.violations = list(violations)

    def __str__(self) -> str:
        super_msg = super().__str__()
        if not self.violations:
            return super_msg
        msg = "invalid box representation: " + "; ".join(
            str(v) for v in self.violations[:5]
        )
        return self._form_str(super_msg, msg)


class NotProperError(CbuError, ValueError):
    r"""Raised when an edge of an intersection representation owns no private point

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`ValueError`
    edge : tuple
        the edge ``(u, v)`` whose overlap is covered by other boxes everywhere
    """

    def __init__(self, *args, edge: Tuple[int, int], **kwargs):
        super().__init__(*args, **kwargs)
        self.edge = edge

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"the intersection representation is not proper: the overlap of edge "
            f"{self.edge} has no point outside every other box"
        )
        return self._form_str(super_msg, msg)


class ConstructionError(CbuError, RuntimeError):
    r"""Raised when the preconditions of a box construction don't hold

    This is a subclass of :exc:`CbuError` and :exc:`RuntimeError`.
    """


class BudgetExhaustedError(CbuError, RuntimeError):
    r"""Raised when a search stops before reaching a verdict

    This is a subclass of :exc:`CbuError` and :exc:`RuntimeError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`RuntimeError`
    budget : int
        the limit that was hit
    stats : Any
        search statistics gathered up to the point of exhaustion
    """

    def __init__(self, *args, budget: int, stats: Any = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.budget = budget
        self.stats = stats

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"search budget of {self.budget} exhausted before a verdict was reached, "
            "the result is inconclusive"
        )
        return self._form_str(super_msg, msg)


class SizeLimitError(CbuError, ValueError):
    r"""Raised when an exact invariant is requested for a graph above the desk-scale
    limit

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.

    Parameters
    ----------
    *args : Any
        passed on directly to :exc:`ValueError`
    quantity : str
        name of the invariant
    size : int
        vertex count of the graph
    limit : int
        largest supported vertex count
    """

    def __init__(self, *args, quantity: str, size: int, limit: int, **kwargs):
        super().__init__(*args, **kwargs)
        self._quantity = quantity
        self._size = size
        self._limit = limit

    def __str__(self) -> str:
        super_msg = super().__str__()
        msg = (
            f"{self._quantity} is only computed exactly for graphs with at most "
            f"{self._limit} vertices, got {self._size}"
        )
        return self._form_str(super_msg, msg)


class CertificationError(CbuError, ArithmeticError):
    r"""Raised when a floating point solution can't be certified in exact arithmetic

    This is a subclass of :exc:`CbuError` and :exc:`ArithmeticError`.
    """


class FormatError(CbuError, ValueError):
    r"""Raised when a JSON, DOT or edge-list document is malformed

    This is a subclass of :exc:`CbuError` and :exc:`ValueError`.
    """
