import json
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ._exceptions import InvalidGraphError, NotDefinedError
from ._graph import Arc, Edge, Graph, Orientation, edge_key


class CbuProblem:
    r"""Problem setup for a recognition or labeling run

    Attach what you know about the problem with the set methods below, then pass the
    object together with a :class:`RecognitionOptions` into a :class:`Recognition`.

    .. admonition:: Example usage of CbuProblem
        :class: attention

        >>> from cbu import CbuProblem, cycle_graph
        >>> problem = CbuProblem()
        >>> problem.set_graph(cycle_graph(5))
        >>> problem.suggest_tools()
        Based on what you've provided so far, here are possible tools:
        {
            "recognition": [
                "cbu.branch_and_prune",
                "cbu.exhaustive",
                "cbu.c5_homomorphism"
            ],
            "labeling": []
        }

    .. rubric:: Set Methods

    .. autosummary::
        CbuProblem.set_graph
        CbuProblem.set_orientation
        CbuProblem.set_fixed_arcs

    """

    all_components = [
        "graph",
        "orientation",
        "fixed_arcs",
    ]

    def __init__(self, name: str = "CBU problem", **kwargs):
        self.name = name
        self._graph = None
        self._orientation = None
        self._fixed_arcs = None
        for kw, val in kwargs.items():
            if kw in self.all_components:
                getattr(self, f"set_{kw}")(val)

    # ---------- set methods ------------------------------------------------------
    def set_graph(self, graph: Graph):
        """Sets the undirected graph of the problem

        Raises
        ------
        InvalidGraphError
            when ``graph`` disagrees with an orientation set before
        """
        if not isinstance(graph, Graph):
            raise InvalidGraphError(f"expected a Graph, got {type(graph).__name__}")
        if self._orientation is not None and self._orientation.base != graph:
            raise InvalidGraphError(
                "the graph doesn't match the base of the orientation already set"
            )
        self._graph = graph

    def set_orientation(self, orientation: Orientation):
        """Sets an orientation; its base graph becomes the problem graph"""
        if not isinstance(orientation, Orientation):
            raise InvalidGraphError(
                f"expected an Orientation, got {type(orientation).__name__}"
            )
        self._orientation = orientation
        self._graph = orientation.base

    def set_fixed_arcs(self, arcs: Iterable[Tuple[int, int]]):
        """Forces the direction of some edges during a recognition search

        Raises
        ------
        NotDefinedError
            when the graph hasn't been set yet
        InvalidGraphError
            when an arc is not an edge or an edge appears twice
        """
        graph = self.graph
        fixed: Dict[Edge, Arc] = {}
        for tail, head in arcs:
            if not graph.has_edge(tail, head):
                raise InvalidGraphError(f"fixed arc {(tail, head)} is not an edge")
            key = edge_key(tail, head)
            if key in fixed:
                raise InvalidGraphError(f"edge {key} is fixed more than once")
            fixed[key] = (tail, head)
        self._fixed_arcs = fixed

    # ---------- properties -------------------------------------------------------
    @property
    def graph(self) -> Graph:
        """the graph, set by :meth:`set_graph` or :meth:`set_orientation`

        Raises
        ------
        NotDefinedError
            when this property has not been defined by methods above
        """
        if self._graph is not None:
            return self._graph
        raise NotDefinedError(needs="graph")

    @property
    def orientation(self) -> Orientation:
        if self._orientation is not None:
            return self._orientation
        raise NotDefinedError(needs="orientation")

    @property
    def fixed_arcs(self) -> Mapping[Edge, Arc]:
        if self._fixed_arcs is not None:
            return self._fixed_arcs
        raise NotDefinedError(needs="fixed arcs")

    @property
    def graph_defined(self) -> bool:
        return self._graph is not None

    @property
    def orientation_defined(self) -> bool:
        return self._orientation is not None

    @property
    def fixed_arcs_defined(self) -> bool:
        return self._fixed_arcs is not None

    # ---------- helper methods -----------------------------------------------------
    def defined_components(self) -> set:
        r"""Returns a set of components that are defined for the ``CbuProblem`` object

        Returns
        -------
        set
            a set of strings describing what are defined
        """
        return {
            component
            for component in self.all_components
            if getattr(self, f"{component}_defined")
        }

    def suggest_tools(self, print_to_console=True) -> dict:
        r"""Prints / Returns the backend tools that you can use, based on things
        defined for this ``CbuProblem`` instance, grouped by solving method

        Parameters
        ----------
        print_to_console : bool, optional
            if set to ``True``, this method will both print and return the dictionary
            of backend tools; if set to ``False``, it will only return it

        Returns
        -------
        dict
            solving methods mapped to the tools whose required components are defined
        """
        to_suggest = dict()
        defined = self.defined_components()
        from .tools import recognition_tools_table

        for solving_method, backend_tools in recognition_tools_table.items():
            to_suggest[solving_method] = [
                tool
                for tool, tool_class in backend_tools.items()
                if tool_class.required_in_problem().issubset(defined)
            ]
        if print_to_console:
            print("Based on what you've provided so far, here are possible tools:")
            print(json.dumps(to_suggest, indent=4))
        return to_suggest

    def summary(self):
        """Helper method that prints a summary of current ``CbuProblem`` object to
        console"""
        self._summary()

    def _summary(self, display_lines=True):
        title = f"Summary for problem: {self.name}"
        sub_title1 = "List of components set by you:"
        sub_title2 = "List of components that can be further set for the problem:"
        display_width = max(len(title), len(sub_title1), len(sub_title2))
        double_line = "=" * display_width
        single_line = "-" * display_width
        defined = [c for c in self.all_components if c in self.defined_components()]
        not_set = [c for c in self.all_components if c not in defined]
        if display_lines:
            print(double_line)
        print(title)
        if display_lines:
            print(double_line)
        graph = repr(self._graph) if self._graph is not None else "Unknown"
        print(f"Graph: {graph}")
        if display_lines:
            print(single_line)
        print(sub_title1)
        print(defined if defined else "-- none --")
        if display_lines:
            print(single_line)
        print(sub_title2)
        print(not_set if not_set else "-- none --")

    def __repr__(self) -> str:
        return f"{self.name}"
