"""The ``cbu`` command

Exit status: 0 on success, 1 on a negative answer (non-member, failed verification,
failed construction), 2 on malformed input or usage errors and 3 when a search runs
out of budget.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from ._analysis import (
    chromatic_number,
    fractional_chromatic_number,
    girth,
    independence_number,
)
from ._exceptions import (
    BudgetExhaustedError,
    CbuError,
    ConstructionError,
    DimensionMismatchError,
    FormatError,
    InvalidGraphError,
    InvalidLabelingError,
    InvalidOptionError,
    RepresentationError,
    SizeLimitError,
)
from ._families import family_table, generate_family
from ._io import (
    GRAPH_FORMATS,
    ORIENTATION_FORMATS,
    certificate_to_dot,
    read_graph,
    read_orientation,
    read_representation,
    rational_to_json,
    write_graph,
    write_json,
    write_text,
)
from ._problem import CbuProblem
from ._recognition import Recognition, decide_cbu
from ._recognition_options import RecognitionOptions
from ._search import DEFAULT_BUDGET
from ._selftest import DEFAULT_SEED, LEVELS, selftest
from ._version import __version__
from .constructors import build_construction, construction_table
from .geometry import representation_to_svg, verify_representation


_logger = logging.getLogger("cbu")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

LOG_FORMAT = "cbu %(levelname)s %(name)s: %(message)s"

#: constructions that read a graph, from stdin unless --graph is given
_GRAPH_CONSTRUCTIONS = {"double-subdivision-3cbu", "outerplanar-2cbu", "labeling"}


def configure_logging(verbosity: int = 0):
    """one stderr handler on the ``cbu`` logger; the level comes from ``CBU_LOG``
    (a level name or number, WARNING by default) lowered by ``-v`` flags"""
    level = os.environ.get("CBU_LOG", "WARNING").strip().upper()
    level = int(level) if level.isdigit() else logging.getLevelName(level)
    if not isinstance(level, int):
        level = logging.WARNING
    level = max(logging.DEBUG, level - 10 * verbosity)
    for handler in list(_logger.handlers):
        if handler.get_name() == "cbu-cli":
            _logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.set_name("cbu-cli")
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    _logger.addHandler(handler)
    _logger.setLevel(level)


# ------------------------------------------------------------------ subcommands


def _gen(args) -> int:
    g = generate_family(
        args.family,
        n=args.n,
        m=args.m,
        i=args.i,
        g=args.g,
        paths=args.paths,
        n1=args.n1,
        n2=args.n2,
    )
    write_graph(g, args.output, args.format)
    return EXIT_OK


def _decide(args) -> int:
    g = read_graph(args.graph, args.input_format)
    certificate = decide_cbu(g, budget=args.budget, jobs=args.jobs)
    write_json(certificate, args.certificate)
    return EXIT_OK if certificate.is_member else EXIT_NEGATIVE


def _check_orientation(args) -> int:
    o = read_orientation(args.orientation, args.input_format)
    problem = CbuProblem("check-orientation", orientation=o)
    options = RecognitionOptions()
    options.set_solving_method("labeling")
    result = Recognition(problem, options).run()
    answer = result.labeling if result.labelable else result.res["certificate"]
    if args.certificate_format == "dot":
        write_text(certificate_to_dot(o, answer), args.certificate)
    else:
        write_json(answer, args.certificate)
    return EXIT_OK if result.labelable else EXIT_NEGATIVE


def _build(args) -> int:
    graph_path = args.graph
    if graph_path is None and (
        args.construction in _GRAPH_CONSTRUCTIONS
        or (args.construction == "grid-2cbu" and args.n is None)
    ):
        graph_path = "-"
    construction = build_construction(
        args.construction,
        graph=None if graph_path is None else read_graph(graph_path, args.input_format),
        n=args.n,
        m=args.m,
        i=args.i,
        n1=args.n1,
        n2=args.n2,
        counts=args.counts,
        budget=args.budget,
    )
    write_json(construction.representation, args.output)
    if args.emit_graph:
        write_graph(construction.graph, args.emit_graph)
    return EXIT_OK


def _verify(args) -> int:
    if args.representation == "-" and args.graph == "-":
        raise InvalidOptionError(
            name="input files",
            invalid_option="- -",
            valid_options="at most one of REP and GRAPH from stdin",
        )
    r = read_representation(args.representation)
    g = read_graph(args.graph, args.input_format)
    report = verify_representation(r, g)
    write_json(report, args.output)
    return EXIT_OK if report else EXIT_NEGATIVE


def _svg(args) -> int:
    r = read_representation(args.representation)
    write_text(representation_to_svg(r), args.output)
    return EXIT_OK


def _analyze(args) -> int:
    g = read_graph(args.graph, args.input_format)
    everything = not (args.alpha or args.chi or args.chif or args.girth)
    out = {"n": g.n, "m": g.m}
    if everything or args.alpha:
        alpha, witness = independence_number(g)
        out["alpha"] = alpha
        out["independent_set"] = sorted(witness)
    if everything or args.chi:
        out["chi"] = chromatic_number(g)
    if everything or args.chif:
        out["chi_f"] = rational_to_json(fractional_chromatic_number(g))
    if everything or args.girth:
        value = girth(g)
        out["girth"] = value if isinstance(value, int) else None
    write_json(out, args.output)
    return EXIT_OK


def _selftest(args) -> int:
    report = selftest(args.level, seed=args.seed, jobs=args.jobs)
    write_json(report.to_dict(), args.output)
    for failure in report.failures:
        _logger.error(failure)
    return EXIT_OK if report else EXIT_NEGATIVE


# ------------------------------------------------------------------ parser


def _add_output(parser: argparse.ArgumentParser):
    parser.add_argument("-o", "--output", default="-", help="output file (default: stdout)")


def _add_input_format(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--input-format",
        choices=GRAPH_FORMATS,
        default=None,
        help="graph format (default: from the suffix or the content)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbu",
        description="Contact graphs of boxes with unidirectional contacts.",
    )
    parser.add_argument("--version", action="version", version=f"cbu {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more logging on stderr"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", help="generate a graph of a named family")
    gen.add_argument("family", choices=sorted(family_table))
    for name in ("n", "m", "i", "g", "paths", "n1", "n2"):
        gen.add_argument(f"--{name}", type=int, default=None)
    gen.add_argument("--format", choices=GRAPH_FORMATS, default="json")
    _add_output(gen)
    gen.set_defaults(func=_gen)

    decide = subparsers.add_parser("decide", help="decide CBU membership of a graph")
    decide.add_argument("graph", help="graph file, '-' for stdin")
    decide.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    decide.add_argument("--jobs", type=int, default=1)
    decide.add_argument(
        "--certificate", default="-", help="where to write the certificate (default: stdout)"
    )
    _add_input_format(decide)
    decide.set_defaults(func=_decide)

    check = subparsers.add_parser(
        "check-orientation", help="label an orientation or certify that it can't be"
    )
    check.add_argument("orientation", help="orientation file, '-' for stdin")
    check.add_argument("--certificate", default="-")
    check.add_argument(
        "--input-format",
        choices=ORIENTATION_FORMATS,
        default=None,
        help="orientation format (default: from the suffix or the content)",
    )
    check.add_argument(
        "--certificate-format",
        choices=ORIENTATION_FORMATS,
        default="json",
        help="json, or a dot digraph with labels or the offending cycle in red",
    )
    check.set_defaults(func=_check_orientation)

    build = subparsers.add_parser("build", help="build a contact representation")
    build.add_argument("construction", choices=sorted(construction_table))
    build.add_argument("--graph", default=None, help="input graph file, '-' for stdin")
    for name in ("n", "m", "i", "n1", "n2", "counts"):
        build.add_argument(f"--{name}", type=int, default=None)
    build.add_argument("--budget", type=int, default=None)
    build.add_argument("--emit-graph", default=None, help="also write the represented graph")
    _add_input_format(build)
    _add_output(build)
    build.set_defaults(func=_build)

    verify = subparsers.add_parser("verify", help="verify a representation against a graph")
    verify.add_argument("representation")
    verify.add_argument("graph")
    _add_input_format(verify)
    _add_output(verify)
    verify.set_defaults(func=_verify)

    svg = subparsers.add_parser("svg", help="draw a 2-dimensional representation")
    svg.add_argument("representation")
    _add_output(svg)
    svg.set_defaults(func=_svg)

    analyze = subparsers.add_parser("analyze", help="exact invariants of a graph")
    analyze.add_argument("graph")
    analyze.add_argument("--alpha", action="store_true")
    analyze.add_argument("--chi", action="store_true")
    analyze.add_argument("--chif", action="store_true")
    analyze.add_argument("--girth", action="store_true")
    _add_input_format(analyze)
    _add_output(analyze)
    analyze.set_defaults(func=_analyze)

    check_all = subparsers.add_parser("selftest", help="run the consistency suites")
    check_all.add_argument("--level", choices=LEVELS, default="quick")
    check_all.add_argument("--seed", type=int, default=DEFAULT_SEED)
    check_all.add_argument("--jobs", type=int, default=1)
    _add_output(check_all)
    check_all.set_defaults(func=_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except BudgetExhaustedError as exception:
        _logger.error("%s", exception)
        return EXIT_BUDGET
    except (
        DimensionMismatchError,
        FormatError,
        InvalidOptionError,
        InvalidGraphError,
        InvalidLabelingError,
        SizeLimitError,
    ) as exception:
        _logger.error("%s", exception)
        return EXIT_USAGE
    except (ConstructionError, RepresentationError) as exception:
        _logger.error("%s", exception)
        return EXIT_NEGATIVE
    except CbuError as exception:
        _logger.error("%s", exception)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
