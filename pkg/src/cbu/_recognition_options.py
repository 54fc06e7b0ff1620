import difflib
import warnings
from collections.abc import Callable
from typing import Iterable, List, Type, Union

from ._exceptions import InvalidOptionError
from .tools import tool_suggest_table, tool_dispatch_table, solving_methods


#: solving method used when none is set
DEFAULT_SOLVING_METHOD = "recognition"


def _unknown(kind: str, value: str, choices: Iterable[str]) -> InvalidOptionError:
    choices = sorted(choices)
    close = difflib.get_close_matches(value, choices)
    return InvalidOptionError(
        f"Did you mean '{close[0]}'?" if close else "",
        name=kind,
        invalid_option=value,
        valid_options=choices,
    )


class RecognitionOptions:
    r"""How a recognition or labeling run is carried out: the solving method, the
    backend tool and its parameters

    .. tip::

        A typical workflow of :code:`RecognitionOptions`:

        Step 1 (optional): pick a solving method, ``"recognition"`` (decide membership
        of a graph) or ``"labeling"`` (decide whether a given orientation is labelable).

        Step 2: fix the backend tool with :meth:`set_tool`.

        Step 3: set tool-specific parameters with :meth:`set_params`.

    .. admonition:: Example usage of RecognitionOptions
        :class: dropdown, attention

        >>> from cbu import RecognitionOptions
        >>> options = RecognitionOptions()
        >>> options.get_default_tool()
        'cbu.branch_and_prune'
        >>> options.set_tool("cbu.exhaustive")
        >>> options.suggest_tool_params()
        Backend tool cbu.exhaustive takes these parameters:
        Required parameters:
        -- nothing --
        Optional parameters & default settings:
        {'budget': 268435456}
    """

    def __init__(self):
        self.params = {}
        self.tool = None
        self.method = None

    # ---------- parameters --------------------------------------------------------
    def set_params(self, **kwargs):
        r"""Sets tool-specific parameters, e.g. ``set_params(budget=10_000, jobs=4)``

        Later calls add to (and override) earlier ones. See
        :meth:`suggest_tool_params` for what the current tool understands.
        """
        self.params.update(kwargs)

    def get_params(self) -> dict:
        """parameter name -> value, as set so far"""
        return self.params

    # ---------- solving method ----------------------------------------------------
    def set_solving_method(self, method: str):
        r"""Sets the solving method, one of :data:`cbu.tools.solving_methods`;
        ``None`` unsets it

        Raises
        ------
        InvalidOptionError
            for an unknown method
        """
        if method is None:
            self.unset_solving_method()
        elif method in solving_methods:
            self.method = method
        else:
            raise _unknown("solving method", method, solving_methods)

    def unset_solving_method(self):
        self.method = None

    # ---------- backend tool ------------------------------------------------------
    def set_tool(self, tool: Union[str, Type]):
        r"""Sets the backend tool: the name of a registered tool (see
        :meth:`suggest_tools`) or your own subclass of
        :class:`cbu.tools.BaseRecognitionTool`; ``None`` unsets it

        A registered tool of another solving method is accepted with a warning.

        Raises
        ------
        InvalidOptionError
            when the name isn't registered
        ValueError
            when the class you pass in doesn't implement ``__call__(self)``
        """
        if tool is None:
            self.unset_tool()
            return
        if isinstance(tool, Type):
            abstract = getattr(tool, "__abstractmethods__", set())
            if not issubclass(tool, Callable) or "__call__" in abstract:
                raise ValueError(
                    f"the custom tool class {tool.__name__} should implement"
                    " __call__(self)"
                )
        elif tool not in tool_dispatch_table:
            raise _unknown("tool", tool, tool_dispatch_table)
        elif self.method and tool not in tool_suggest_table[self.method]:
            warnings.warn(
                f"the tool {tool} is valid but doesn't match the solving method"
                f" you've selected: {self.method}"
            )
        self.tool = tool

    def unset_tool(self):
        self.tool = None

    def get_tool(self) -> Union[str, Type]:
        """the backend tool chosen so far, or the default tool if not chosen"""
        return self.tool if self.tool else self.get_default_tool()

    def get_default_tool(self) -> str:
        """the first tool of the chosen solving method (of ``"recognition"`` when no
        method is set)"""
        return tool_suggest_table[self.method or DEFAULT_SOLVING_METHOD][0]

    def _tool_class(self) -> Type:
        tool = self.get_tool()
        return tool_dispatch_table[tool] if isinstance(tool, str) else tool

    def _tool_name(self) -> str:
        tool = self.get_tool()
        return tool if isinstance(tool, str) else tool.__name__

    # ---------- guidance ----------------------------------------------------------
    def suggest_solving_methods(self):
        print("The following solving methods are supported:")
        print(sorted(solving_methods))
        print("\nUse `suggest_tools()` to see a full list of backend tools for each method")

    def suggest_tools(self):
        """Prints the tools of the chosen solving method, or all tools by method"""
        if self.method:
            print(f"Tools for solving method '{self.method}' (the first is the default):")
            print(tool_suggest_table[self.method])
            print(
                "\nUse `RecognitionOptions.set_tool(tool_name)` to pick one, or"
                " `RecognitionOptions.unset_solving_method()` to see all tools"
            )
        else:
            print("Tools supported, by solving method:")
            for method in sorted(tool_suggest_table):
                print(f"  {method}: {', '.join(tool_suggest_table[method])}")

    def suggest_tool_params(self):
        """Prints required and optional tool-specific parameters"""
        suffix = "" if self.tool else " (default)"
        tool_class = self._tool_class()
        print(f"Backend tool {self._tool_name()}{suffix} takes these parameters:")
        print("Required parameters:")
        print(tool_class.required_in_options() or "-- nothing --")
        print("Optional parameters & default settings:")
        print(tool_class.optional_in_options() or "-- nothing --")

    # ---------- display -----------------------------------------------------------
    def summary(self):
        """Prints a summary of these options to console"""
        self._summary()

    def _summary(self, display_lines=True):
        title = "Summary for recognition options"
        double_line, single_line = "=" * len(title), "-" * len(title)
        tool_class = self._tool_class()
        suffix = "" if self.tool else " (by default)"
        lines: List[str] = [double_line, title, double_line]
        lines.append(f"Solving method: {self.method or 'None set'}")
        lines.append("Use `suggest_solving_methods()` to check available solving methods.")
        lines.append(single_line)
        lines.append(
            f"Backend tool: `{self._tool_name()}{suffix}` - {tool_class.short_description}"
        )
        lines.append(f"References: {tool_class.documentation_links}")
        lines.append("Use `suggest_tools()` to check available backend tools.")
        lines.append(single_line)
        lines.append(f"Tool-specific parameters: {'' if self.params else 'None set'}")
        lines += [f"{key} = {val}" for key, val in self.params.items()]
        lines.append(
            "Use `suggest_tool_params()` to check required/optional tool-specific"
            " parameters."
        )
        if not display_lines:
            lines = [line for line in lines if line not in (double_line, single_line)]
        print("\n".join(lines))

    def __repr__(self) -> str:
        method = f"'{self.method}'" if self.method else "unknown"
        tool = f"'{self.tool}'" if self.tool else f"(default)'{self.get_default_tool()}'"
        return f"{self.__class__.__name__}(method={method},tool={tool})"
