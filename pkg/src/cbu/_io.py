"""Reading and writing graphs, orientations, certificates and representations

All documents are JSON except graphs, which can also be written as DOT or as an edge
list, and orientations and their certificates, which can also be written as DOT
digraphs. Rationals are written as ``"p/q"`` strings in lowest terms with ``q > 0``.
The path ``"-"`` stands for standard input or output. See ``docs/formats.md``.
"""

import json
import re
import sys
from fractions import Fraction
from functools import singledispatch
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ._exceptions import FormatError, InvalidGraphError
from ._graph import Graph, Orientation, WalkCycle, edge_key
from ._labeling import ArcLabeling, BadCycle, SlotCycle
from ._recognition import CbuCertificate
from ._search import SearchStats
from .geometry import (
    Box,
    BoxRepresentation,
    IntersectionRepresentation,
    VerificationReport,
    Violation,
    as_rational,
)


PathLike = Union[str, Path]

GRAPH_FORMATS = ("json", "dot", "edges")

ORIENTATION_FORMATS = ("json", "dot")

_SUFFIX_FORMATS = {
    ".json": "json",
    ".dot": "dot",
    ".gv": "dot",
    ".edges": "edges",
    ".txt": "edges",
}


# ------------------------------------------------------------------ plain text


def read_text(path: PathLike) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exception:
        raise FormatError(f"can't read {path}: {exception.strerror}") from exception


def write_text(text: str, path: Optional[PathLike] = "-"):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text)


def dumps(data: Any) -> str:
    """deterministic JSON text of ``data``, which may hold any object
    :func:`to_json` knows"""
    return json.dumps(to_json(data), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exception:
        raise FormatError(f"malformed JSON: {exception}") from exception


# ------------------------------------------------------------------ rationals


def rational_to_json(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(value) -> Fraction:
    if isinstance(value, float):
        raise FormatError(f"{value!r}: write rationals as integers or 'p/q' strings")
    return as_rational(value)


def _label_from_json(value) -> Union[int, Fraction]:
    x = rational_from_json(value)
    return x.numerator if x.denominator == 1 else x


# ------------------------------------------------------------------ validation


def _expect(data, key: str, kind, what: str):
    if not isinstance(data, dict):
        raise FormatError(f"{what}: expected a JSON object, got {type(data).__name__}")
    if key not in data:
        raise FormatError(f"{what}: missing key '{key}'")
    value = data[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise FormatError(f"{what}: '{key}' must be an integer, got {value!r}")
    if kind is not int and not isinstance(value, kind):
        kinds = kind if isinstance(kind, tuple) else (kind,)
        names = " or ".join(k.__name__ for k in kinds)
        raise FormatError(f"{what}: '{key}' must be a {names}, got {value!r}")
    return value


def _int_tuple(item, size: Optional[int], what: str) -> tuple:
    if not isinstance(item, list) or (size is not None and len(item) != size):
        raise FormatError(f"{what}: expected a list of {size} integers, got {item!r}")
    for x in item:
        if isinstance(x, bool) or not isinstance(x, int):
            raise FormatError(f"{what}: {x!r} is not an integer")
    return tuple(item)


def _check_kind(data: dict, expected: str):
    kind = _expect(data, "kind", str, expected)
    if kind != expected:
        raise FormatError(f"expected a '{expected}' document, got '{kind}'")


# ------------------------------------------------------------------ serialisers


@singledispatch
def to_json(obj) -> Any:
    """JSON-compatible value of a graph, an orientation, a labeling, a certificate,
    a representation or a verification report"""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    raise FormatError(f"don't know how to write {type(obj).__name__} as JSON")


@to_json.register
def _(g: Graph):
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


@to_json.register
def _(o: Orientation):
    return {"n": o.base.n, "arcs": [list(a) for a in o.arcs]}


@to_json.register
def _(labeling: ArcLabeling):
    return {
        "kind": ArcLabeling.kind,
        "n": labeling.orientation.base.n,
        "arcs": [[t, h, rational_to_json(label)] for t, h, label in labeling.items()],
    }


@to_json.register
def _(certificate: SlotCycle):
    return {"kind": SlotCycle.kind, "vertices": list(certificate.vertices)}


@to_json.register
def _(certificate: BadCycle):
    return {
        "kind": BadCycle.kind,
        "cycle": list(certificate.cycle.vertices),
        "through": certificate.through,
    }


@to_json.register
def _(certificate: CbuCertificate):
    return {
        "kind": "cbu-certificate",
        "verdict": certificate.verdict,
        "reason": certificate.reason,
        "stats": certificate.stats.to_dict(),
        "triangle": None if certificate.triangle is None else list(certificate.triangle),
        "labeling": None if certificate.labeling is None else to_json(certificate.labeling),
    }


@to_json.register
def _(box: Box):
    return [[rational_to_json(lo), rational_to_json(hi)] for lo, hi in box.intervals]


def _boxes_to_json(boxes) -> dict:
    return {str(v): to_json(b) for v, b in enumerate(boxes)}


@to_json.register
def _(r: BoxRepresentation):
    return {"kind": "contact", "d": r.d, "boxes": _boxes_to_json(r.boxes)}


@to_json.register
def _(r: IntersectionRepresentation):
    return {"kind": "intersection", "d": r.d, "boxes": _boxes_to_json(r.boxes)}


@to_json.register
def _(report: VerificationReport):
    return {
        "ok": report.ok,
        "violations": [
            {"kind": v.kind, "vertices": list(v.vertices), "detail": v.detail}
            for v in report.violations
        ],
    }


# ------------------------------------------------------------------ parsers


def graph_from_json(data) -> Graph:
    n = _expect(data, "n", int, "graph")
    edges = _expect(data, "edges", list, "graph")
    return Graph(n, [_int_tuple(e, 2, "graph edge") for e in edges])


def orientation_from_json(data) -> Orientation:
    n = _expect(data, "n", int, "orientation")
    arcs = _expect(data, "arcs", list, "orientation")
    return Orientation.from_arcs(n, [_int_tuple(a, 2, "orientation arc") for a in arcs])


def labeling_from_json(data) -> ArcLabeling:
    _check_kind(data, ArcLabeling.kind)
    n = _expect(data, "n", int, "labeling")
    labels = {}
    for item in _expect(data, "arcs", list, "labeling"):
        if not isinstance(item, list) or len(item) != 3:
            raise FormatError(f"labeling: expected [tail, head, label], got {item!r}")
        arc = _int_tuple(item[:2], 2, "labeling arc")
        labels[arc] = _label_from_json(item[2])
    return ArcLabeling(Orientation.from_arcs(n, labels), labels)


def certificate_from_json(data) -> Union[ArcLabeling, SlotCycle, BadCycle, CbuCertificate]:
    """reads any certificate document, telling them apart by ``"kind"``"""
    kind = _expect(data, "kind", str, "certificate")
    if kind == ArcLabeling.kind:
        return labeling_from_json(data)
    if kind == SlotCycle.kind:
        return SlotCycle(_int_tuple(_expect(data, "vertices", list, kind), None, kind))
    if kind == BadCycle.kind:
        cycle = _int_tuple(_expect(data, "cycle", list, kind), None, kind)
        return BadCycle(WalkCycle(cycle), _expect(data, "through", int, kind))
    if kind == "cbu-certificate":
        stats = _expect(data, "stats", dict, kind)
        try:
            stats = SearchStats(**stats)
        except TypeError as exception:
            raise FormatError(f"{kind}: malformed stats {stats!r}") from exception
        triangle = data.get("triangle")
        labeling = data.get("labeling")
        return CbuCertificate(
            verdict=_expect(data, "verdict", str, kind),
            labeling=None if labeling is None else labeling_from_json(labeling),
            stats=stats,
            reason=data.get("reason", ""),
            triangle=None if triangle is None else _int_tuple(triangle, 3, "triangle"),
        )
    raise FormatError(f"unknown certificate kind '{kind}'")


def _box_from_json(item, d: int) -> Box:
    if not isinstance(item, list) or len(item) != d:
        raise FormatError(f"representation: expected {d} intervals, got {item!r}")
    intervals = []
    for iv in item:
        if not isinstance(iv, list) or len(iv) != 2:
            raise FormatError(f"representation: expected [lo, hi], got {iv!r}")
        intervals.append((rational_from_json(iv[0]), rational_from_json(iv[1])))
    return Box(tuple(intervals))


def _boxes_from_json(data, d: int) -> List[Box]:
    """``boxes`` maps vertex ids ``"0".."k-1"`` to boxes; a plain list indexed by
    vertex is accepted too"""
    boxes = _expect(data, "boxes", (dict, list), "representation")
    if isinstance(boxes, list):
        return [_box_from_json(b, d) for b in boxes]
    if not all(re.fullmatch(r"0|[1-9]\d*", key) for key in boxes):
        raise FormatError(
            f"representation: box keys must be vertex ids, got {list(boxes)}"
        )
    by_vertex = {int(key): item for key, item in boxes.items()}
    if sorted(by_vertex) != list(range(len(by_vertex))):
        raise FormatError(
            f"representation: box keys must be 0..{len(by_vertex) - 1},"
            f" got {sorted(by_vertex)}"
        )
    return [_box_from_json(by_vertex[v], d) for v in range(len(by_vertex))]


def representation_from_json(data) -> Union[BoxRepresentation, IntersectionRepresentation]:
    d = _expect(data, "d", int, "representation")
    boxes = _boxes_from_json(data, d)
    kind = data.get("kind", "contact")
    if kind == "contact":
        return BoxRepresentation(boxes, d=d)
    if kind == "intersection":
        return IntersectionRepresentation(boxes, d=d)
    raise FormatError(f"unknown representation kind '{kind}'")


def report_from_json(data) -> VerificationReport:
    ok = _expect(data, "ok", bool, "report")
    violations = []
    for v in _expect(data, "violations", list, "report"):
        violations.append(
            Violation(
                _expect(v, "kind", str, "violation"),
                _int_tuple(_expect(v, "vertices", list, "violation"), None, "violation"),
                v.get("detail", ""),
            )
        )
    return VerificationReport(ok, tuple(violations))


# ------------------------------------------------------------------ DOT and edge lists

_DOT_HEADER = re.compile(
    r"^\s*(strict\s+)?(?P<di>di)?graph\b[^{]*\{(?P<body>.*)\}\s*$", re.DOTALL
)
_DOT_COMMENTS = re.compile(r"//[^\n]*|#[^\n]*|/\*.*?\*/", re.DOTALL)
_DOT_TOKEN = re.compile(
    r"\[(?P<attributes>[^\]]*)\]|(?P<end>[;\n])|(?P<text>[^\[;\n]+)"
)
_DOT_ATTRIBUTE = re.compile(r'(\w+)\s*=\s*(?:"([^"]*)"|([^,;\s"]+))')

DotAttributes = Dict[str, str]


def _dot_attribute_list(attributes: Optional[DotAttributes]) -> str:
    if not attributes:
        return ""
    return " [" + ", ".join(f'{k}="{v}"' for k, v in attributes.items()) + "]"


def _format_dot(
    directed: bool,
    n: int,
    pairs: Iterable[Tuple[int, int]],
    pair_attributes: Optional[Mapping[Tuple[int, int], DotAttributes]] = None,
    node_attributes: Optional[Mapping[int, DotAttributes]] = None,
    graph_attributes: Optional[DotAttributes] = None,
) -> str:
    kind, connector = ("digraph", "->") if directed else ("graph", "--")
    pair_attributes = pair_attributes or {}
    node_attributes = node_attributes or {}
    lines = [f"{kind} G {{"]
    lines += [f'  {k}="{v}";' for k, v in (graph_attributes or {}).items()]
    lines += [f"  {v}{_dot_attribute_list(node_attributes.get(v))};" for v in range(n)]
    lines += [
        f"  {u} {connector} {v}{_dot_attribute_list(pair_attributes.get((u, v)))};"
        for u, v in pairs
    ]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_statements(body: str) -> Iterator[Tuple[str, DotAttributes]]:
    text, attributes = "", {}
    for token in _DOT_TOKEN.finditer(body + "\n"):
        if token.group("attributes") is not None:
            for name, quoted, bare in _DOT_ATTRIBUTE.findall(token.group("attributes")):
                attributes[name] = quoted or bare
        elif token.group("text") is not None:
            text += token.group("text")
        else:
            if text.strip():
                yield text.strip(), attributes
            text, attributes = "", {}


def _parse_dot(
    text: str, directed: bool
) -> Tuple[int, List[Tuple[int, int, DotAttributes]]]:
    """node count and ``(u, v, attributes)`` of every edge of a DOT document: integer
    node ids, edge chains ``a -- b -- c`` (``a -> b -> c`` when directed) and attribute
    lists; node, graph and default attributes are skipped"""
    kind, connector = ("digraph", "->") if directed else ("graph", "--")
    match = _DOT_HEADER.match(_DOT_COMMENTS.sub("", text))
    if match is None or bool(match.group("di")) != directed:
        adjective = "directed" if directed else "undirected"
        raise FormatError(f"DOT input must be a single {adjective} '{kind} {{ ... }}'")
    nodes, edges = set(), []
    for statement, attributes in _dot_statements(match.group("body")):
        if re.match(r"^(graph|node|edge)\b|^\w+\s*=", statement):
            continue
        if ("--" if directed else "->") in statement:
            adjective = "undirected" if directed else "directed"
            raise FormatError(f"DOT statement '{statement}' is {adjective}")
        ids = [part.strip().strip('"') for part in statement.split(connector)]
        if not all(re.fullmatch(r"\d+", x) for x in ids):
            raise FormatError(f"DOT statement '{statement}' has non-integer node ids")
        ids = [int(x) for x in ids]
        nodes.update(ids)
        edges.extend((u, v, attributes) for u, v in zip(ids, ids[1:]))
    return (max(nodes) + 1 if nodes else 0), edges


def graph_to_dot(g: Graph) -> str:
    return _format_dot(False, g.n, g.edges)


def graph_from_dot(text: str) -> Graph:
    """reads the undirected DOT subset written by :func:`graph_to_dot`: integer node
    ids, edge chains ``a -- b -- c`` and attribute lists, which are ignored"""
    n, edges = _parse_dot(text, directed=False)
    return Graph(n, [(u, v) for u, v, _ in edges])


def orientation_to_dot(
    o: Orientation,
    arc_attributes: Optional[Mapping[Tuple[int, int], DotAttributes]] = None,
    node_attributes: Optional[Mapping[int, DotAttributes]] = None,
    graph_attributes: Optional[DotAttributes] = None,
) -> str:
    """``digraph`` with one ``tail -> head`` statement per arc, optionally decorated"""
    return _format_dot(
        True, o.base.n, o.arcs, arc_attributes, node_attributes, graph_attributes
    )


def orientation_from_dot(text: str, base: Optional[Graph] = None) -> Orientation:
    """reads a ``digraph``; arrowheads give the direction of each edge

    With ``base`` the arcs must orient exactly the edges of ``base``, once each;
    otherwise the base graph is read off the arcs and the node statements.
    """
    n, arcs = _parse_dot(text, directed=True)
    pairs = [(u, v) for u, v, _ in arcs]
    repeated = sorted({arc for arc in pairs if pairs.count(arc) > 1})
    if repeated:
        raise FormatError(f"DOT orientation repeats the arcs {repeated}")
    try:
        if base is None:
            return Orientation.from_arcs(n, pairs)
        return Orientation(base, pairs)
    except InvalidGraphError as exception:
        raise FormatError(f"DOT orientation: {exception}") from exception


def labeling_to_dot(labeling: ArcLabeling) -> str:
    labels = {(t, h): {"label": rational_to_json(x)} for t, h, x in labeling.items()}
    return orientation_to_dot(labeling.orientation, labels)


def labeling_from_dot(text: str) -> ArcLabeling:
    """reads a ``digraph`` whose every arc carries a ``label="p/q"`` attribute"""
    n, arcs = _parse_dot(text, directed=True)
    labels = {}
    for u, v, attributes in arcs:
        if "label" not in attributes:
            raise FormatError(f"DOT labeling: arc {u} -> {v} has no label")
        labels[(u, v)] = _label_from_json(attributes["label"])
    return ArcLabeling(orientation_from_dot(text), labels)


def certificate_to_dot(o: Orientation, certificate) -> str:
    """draws ``o`` with a labeling (arc labels) or a negative certificate (the bad
    cycle or the slot cycle in red) on top"""
    if isinstance(certificate, ArcLabeling):
        return labeling_to_dot(certificate)
    if isinstance(certificate, BadCycle):
        red = {edge_key(u, v) for u, v in certificate.cycle.edges()}
        through = certificate.cycle.vertices[certificate.through]
        return orientation_to_dot(
            o,
            {arc: {"color": "red"} for arc in o.arcs if edge_key(*arc) in red},
            {through: {"color": "red"}},
            {"label": f"{BadCycle.kind} through {through}"},
        )
    if isinstance(certificate, SlotCycle):
        cycle = " ".join(str(v) for v in certificate.vertices)
        return orientation_to_dot(
            o,
            node_attributes={v: {"color": "red"} for v in certificate.vertices},
            graph_attributes={"label": f"{SlotCycle.kind} {cycle}"},
        )
    raise FormatError(f"don't know how to draw {type(certificate).__name__} as DOT")


def graph_to_edges(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


def graph_from_edges(text: str) -> Graph:
    """first line ``n``, then one ``u v`` pair per line; ``#`` starts a comment"""
    rows: List[List[str]] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 1:
        raise FormatError("edge list must start with a line holding the vertex count")
    try:
        n = int(rows[0][0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as exception:
        raise FormatError(f"malformed edge list: {exception}") from exception
    return Graph(n, edges)


def _sniff(text: str) -> str:
    head = text.lstrip()
    if head.startswith("{"):
        return "json"
    if re.match(r"(strict\s+)?(di)?graph\b", head):
        return "dot"
    return "edges"


def parse_graph(text: str, fmt: Optional[str] = None) -> Graph:
    fmt = fmt or _sniff(text)
    if fmt == "json":
        return graph_from_json(loads(text))
    if fmt == "dot":
        return graph_from_dot(text)
    if fmt == "edges":
        return graph_from_edges(text)
    raise FormatError(f"unknown graph format '{fmt}', use one of {GRAPH_FORMATS}")


def format_graph(g: Graph, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(g)
    if fmt == "dot":
        return graph_to_dot(g)
    if fmt == "edges":
        return graph_to_edges(g)
    raise FormatError(f"unknown graph format '{fmt}', use one of {GRAPH_FORMATS}")


# ------------------------------------------------------------------ files


def read_graph(path: PathLike, fmt: Optional[str] = None) -> Graph:
    """reads a graph; the format comes from ``fmt``, the file suffix or the content"""
    if fmt is None and str(path) != "-":
        fmt = _SUFFIX_FORMATS.get(Path(path).suffix.lower())
    return parse_graph(read_text(path), fmt)


def write_graph(g: Graph, path: Optional[PathLike] = "-", fmt: str = "json"):
    write_text(format_graph(g, fmt), path)


def parse_orientation(text: str, fmt: Optional[str] = None) -> Orientation:
    fmt = fmt or ("json" if _sniff(text) == "json" else "dot")
    if fmt == "json":
        return orientation_from_json(loads(text))
    if fmt == "dot":
        return orientation_from_dot(text)
    raise FormatError(
        f"unknown orientation format '{fmt}', use one of {ORIENTATION_FORMATS}"
    )


def read_orientation(path: PathLike, fmt: Optional[str] = None) -> Orientation:
    """reads an orientation as JSON or as a DOT ``digraph``; the format comes from
    ``fmt``, the file suffix or the content"""
    if fmt is None and str(path) != "-":
        fmt = _SUFFIX_FORMATS.get(Path(path).suffix.lower())
        fmt = fmt if fmt in ORIENTATION_FORMATS else None
    return parse_orientation(read_text(path), fmt)


def read_certificate(path: PathLike):
    return certificate_from_json(loads(read_text(path)))


def read_representation(path: PathLike):
    return representation_from_json(loads(read_text(path)))


def write_json(data, path: Optional[PathLike] = "-"):
    write_text(dumps(data), path)
