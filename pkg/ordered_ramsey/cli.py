"""
Command-line surface of the toolkit.

Every command reads graphs from files or inline form (``n=5;e=1-2,2-4``) and
writes deterministic output on stdout; logs go to stderr. Exit codes:
0 for a definitive answer, 2 when the search could not decide (budget or
cap), 1 for usage and input errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from ordered_ramsey.arrow.minimal import enumerate_minimal, is_minimal_ramsey, ordered_ramsey_number
from ordered_ramsey.arrow.search import ArrowCertificate, arrows
from ordered_ramsey.classify import Answer, classify_pair
from ordered_ramsey.colorings.coloring import Color, EdgeColoring, find_monochromatic_copy, parse_coloring
from ordered_ramsey.colorings.refuters import (
    Refutation,
    applicable_forest_cases,
    applicable_pseudoforest_cases,
    forest_refutation,
    pseudoforest_refutation,
)
from ordered_ramsey.config import (
    DEFAULT_SEED,
    DEFAULT_THREADS,
    ENUMERATE_MAX_VERTICES,
    FAMILY_PLACEMENT_BUDGET,
    RAMSEY_NUMBER_CAP,
)
from ordered_ramsey.constructions.combinators import right_star
from ordered_ramsey.constructions.determiners import (
    DeterminerSpec,
    build_determiner,
    good_coloring_of,
    verify_determiner,
)
from ordered_ramsey.constructions.families import canonical_h_coloring, family_Fj
from ordered_ramsey.constructions.forests import build_forest_ramsey, build_pseudoforest_ramsey_monP3
from ordered_ramsey.constructions.unavoidable import build_f_n, build_gamma_n
from ordered_ramsey.core.density import density_m, density_m2, density_m2_asym
from ordered_ramsey.core.graph import OrderedGraph
from ordered_ramsey.core.io import format_dsl, format_graph, load_graph
from ordered_ramsey.core.structure import extract_defining_sequence, is_forest, is_right_star
from ordered_ramsey.errors import (
    BudgetExceededError,
    CapExceededError,
    HypothesisViolationError,
    NotApplicableError,
    NotCoveredError,
    OrderedRamseyError,
    PreconditionError,
)
from ordered_ramsey.store import ResultStore
from ordered_ramsey.threshold import ThresholdExperiment, run_threshold_scan, write_csv

# Set up logging
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNKNOWN = 2

CONSTRUCT_KINDS = (
    "forest",
    "pseudoforest-p3",
    "left-determiner",
    "right-determiner",
    "gamma",
    "f-n",
    "family-j",
)


def _fraction_text(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _sequence(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _probabilities(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated probabilities, got {text!r}") from None


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        flags = ", ".join(_FLAG_NAMES.get(n, f"--{n}") for n in missing)
        raise PreconditionError(f"{args.command} needs {flags}")


_FLAG_NAMES = {"f": "-F", "h": "-H", "h2": "-H2", "g": "-G", "coloring": "-C"}


def _graph(args: argparse.Namespace, name: str) -> OrderedGraph:
    _require(args, name)
    return load_graph(getattr(args, name))


def _emit(out: TextIO, args: argparse.Namespace, lines: Sequence[str], payload: Any) -> None:
    if args.json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("".join(line if line.endswith("\n") else line + "\n" for line in lines))


def _store(args: argparse.Namespace) -> Optional[ResultStore]:
    if args.cache is None:
        return None
    return ResultStore(args.cache or None)


def _star_size(args: argparse.Namespace) -> int:
    if args.s is not None:
        return args.s
    h = _graph(args, "h")
    if not is_right_star(h):
        raise PreconditionError(f"{h} is not a right star")
    return h.num_edges


# --- classify ---------------------------------------------------------------

def _cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    h = _graph(args, "h")
    h2 = _graph(args, "h2")
    verdicts = classify_pair(h, h2)
    lines = []
    for v in verdicts:
        line = f"theorem={v.theorem} answer={v.answer.value}"
        if v.case is not None:
            line += f" case={v.case}"
        if v.reason:
            line += f" reason={json.dumps(v.reason)}"
        lines.append(line)
    _emit(out, args, lines, [v.model_dump(mode="json") for v in verdicts])
    decided = any(v.answer is not Answer.UNKNOWN for v in verdicts)
    return EXIT_OK if decided else EXIT_UNKNOWN


# --- arrows -----------------------------------------------------------------

def _certificate_payload(f: OrderedGraph, cert: ArrowCertificate) -> Dict[str, Any]:
    return {
        "graph": format_dsl(f),
        "verdict": cert.verdict.value,
        "nodes": cert.nodes,
        "witness": cert.witness.to_text() if cert.witness is not None else None,
    }


def _cmd_arrows(args: argparse.Namespace, out: TextIO) -> int:
    h = _graph(args, "h")
    h2 = _graph(args, "h2")
    if args.ramsey_number:
        cap = args.max_n or RAMSEY_NUMBER_CAP
        r = ordered_ramsey_number(h, h2, cap=cap, budget=args.budget)
        _emit(out, args, [str(r)], {"ordered_ramsey_number": r})
        return EXIT_OK

    f = _graph(args, "f")
    store = _store(args)
    cert = store.get_arrow(f, h, h2) if store is not None else None
    if cert is None:
        cert = arrows(f, h, h2, budget=args.budget, threads=args.threads)
        if store is not None:
            store.put_arrow(f, h, h2, cert)
    lines = [cert.verdict.value, f"# nodes {cert.nodes}"]
    if cert.witness is not None:
        lines.append(cert.witness.to_text())
        if args.witness:
            with open(args.witness, "w") as fh:
                fh.write(cert.witness.to_text())
    _emit(out, args, lines, _certificate_payload(f, cert))
    return EXIT_OK


# --- minimal / enumerate ----------------------------------------------------

def _cmd_minimal(args: argparse.Namespace, out: TextIO) -> int:
    f = _graph(args, "f")
    h = _graph(args, "h")
    h2 = _graph(args, "h2")
    cert = is_minimal_ramsey(f, h, h2, budget=args.budget)
    if not cert.arrows:
        status = "NOT_ARROWS"
    else:
        status = "MINIMAL" if cert.is_minimal else "NOT_MINIMAL"
    lines = [status]
    if cert.failing_edge is not None:
        lines.append(f"failing_edge={cert.failing_edge[0]}-{cert.failing_edge[1]}")
    if cert.failing_vertex is not None:
        lines.append(f"failing_vertex={cert.failing_vertex}")
    _emit(out, args, lines, {"status": status, **cert.model_dump(mode="json")})
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    h = _graph(args, "h")
    h2 = load_graph(args.h2) if args.h2 is not None else h
    max_n = args.max_n or ENUMERATE_MAX_VERTICES
    store = _store(args)
    found = store.get_family(h, h2, max_n, args.max_edges) if store is not None else None
    code = EXIT_OK
    if found is None:
        try:
            found = enumerate_minimal(h, h2, max_vertices=max_n, max_edges=args.max_edges, budget=args.budget)
        except BudgetExceededError as exc:
            logger.warning(f"Enumeration incomplete: {exc}")
            print(f"incomplete: {exc}", file=sys.stderr)
            found = list(exc.partial or [])
            code = EXIT_UNKNOWN
        else:
            if store is not None:
                store.put_family(h, h2, max_n, found, args.max_edges)
    lines = [format_dsl(g) for g in found]
    if code == EXIT_UNKNOWN:
        lines.append("# incomplete")
    _emit(out, args, lines, {"members": [format_dsl(g) for g in found], "complete": code == EXIT_OK})
    return code


# --- construct --------------------------------------------------------------

def _determiner_spec(args: argparse.Namespace, side: str) -> DeterminerSpec:
    _require(args, "d", "i")
    s = _star_size(args)
    if side == "left":
        return DeterminerSpec.left(s, args.d, args.i)
    _require(args, "j")
    return DeterminerSpec.right(s, args.d, args.i, args.j)


def _construct_determiner(args: argparse.Namespace, out: TextIO, side: str) -> int:
    spec = _determiner_spec(args, side)
    graph = build_determiner(spec)
    good = good_coloring_of(graph, spec)
    params = f"s={spec.s} d={','.join(map(str, spec.d))} i={spec.i}" + (f" j={spec.j}" if spec.j else "")
    header = [f"provenance: determiner/{side}", f"parameters: {params}"]
    lines = [format_graph(graph, header)]
    payload = {
        "graph": format_dsl(graph),
        "provenance": f"determiner/{side}",
        "parameters": spec.model_dump(mode="json"),
        "good_coloring": good.coloring.to_text(),
        "distinguished_copy": list(good.distinguished_copy.mapping),
    }
    _emit(out, args, lines, payload)
    return EXIT_OK


def _construct_family(args: argparse.Namespace, out: TextIO) -> int:
    _require(args, "d")
    s = _star_size(args)
    levels = family_Fj(s, args.d, interleavings=args.interleavings, verify=not args.no_verify, budget=args.budget)
    lines = []
    for level, result in enumerate(levels, 1):
        for k, member in enumerate(result.members, 1):
            header = [f"provenance: family/pointed-union level={level} member={k}"]
            lines.append(format_graph(member, header))
        if not result.complete:
            lines.append(f"# level {level} incomplete after {result.placements} placements\n")
    payload = [
        {"level": level, "members": [format_dsl(g) for g in r.members], "complete": r.complete}
        for level, r in enumerate(levels, 1)
    ]
    _emit(out, args, lines, payload)
    return EXIT_OK if all(r.complete for r in levels) else EXIT_UNKNOWN


def _cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    verify = not args.no_verify
    kind = args.kind
    if kind in ("left-determiner", "right-determiner"):
        return _construct_determiner(args, out, kind.split("-")[0])
    if kind == "family-j":
        return _construct_family(args, out)

    if kind == "forest":
        construction = build_forest_ramsey(_graph(args, "h"), _graph(args, "h2"), budget=args.budget, verify=verify)
    elif kind == "pseudoforest-p3":
        graph = build_pseudoforest_ramsey_monP3()
        lines = [format_graph(graph, ["provenance: pseudoforest/p5-plus-chord", "parameters: h=h2=monotone P3"])]
        _emit(out, args, lines, {"graph": format_dsl(graph), "provenance": "pseudoforest/p5-plus-chord"})
        return EXIT_OK
    else:
        _require(args, "d", "j")
        h = right_star(_star_size(args))
        if kind == "gamma":
            construction = build_gamma_n(
                h, args.d, args.j, args.n, tail_index=args.tail, verify=verify, budget=args.budget
            )
        else:
            construction = build_f_n(h, args.d, args.j, args.n, verify=verify, budget=args.budget)

    header = construction.header()
    dashed = getattr(construction, "dashed", None)
    if dashed:
        header.append("dashed: " + " ".join(f"{u}-{v}" for u, v in dashed))
    payload = construction.model_dump(mode="json", exclude={"graph"})
    payload["graph"] = format_dsl(construction.graph)
    _emit(out, args, [format_graph(construction.graph, header)], payload)
    return EXIT_OK


# --- refute -----------------------------------------------------------------

def _refute_canonical(f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph, method: str) -> EdgeColoring:
    if not is_right_star(h):
        raise PreconditionError(f"the canonical coloring needs a right star as H, got {h}")
    d = extract_defining_sequence(h2)
    if d is None:
        raise PreconditionError(f"the canonical coloring needs a right caterpillar as H', got {h2}")
    return canonical_h_coloring(f, h.num_edges, d, method=method)


def _refute_by_case(args: argparse.Namespace, f: OrderedGraph, h: OrderedGraph, h2: OrderedGraph) -> Refutation:
    host_class = args.host_class
    if host_class == "auto":
        host_class = "forest" if is_forest(f) and applicable_forest_cases(h, h2) else "pseudoforest"
    if host_class == "forest":
        cases = applicable_forest_cases(h, h2)
        refute = forest_refutation
    else:
        cases = applicable_pseudoforest_cases(h, h2)
        refute = pseudoforest_refutation
    case = args.case
    if case is None:
        if not cases:
            raise NotApplicableError(f"no {host_class} refuter case applies to ({h}, {h2})")
        case = cases[0]
    return refute(f, h, h2, case)


def _cmd_refute(args: argparse.Namespace, out: TextIO) -> int:
    f = _graph(args, "f")
    h = _graph(args, "h")
    h2 = _graph(args, "h2")
    if args.host_class == "canonical":
        coloring = _refute_canonical(f, h, h2, args.method)
        header = [f"# refuter: canonical {args.method}"]
        payload = {"refuter": "canonical", "method": args.method, "coloring": coloring.to_text()}
    else:
        refutation = _refute_by_case(args, f, h, h2)
        coloring = refutation.coloring
        header = [f"# refuter: {refutation.host_class} case {refutation.case}"]
        header.extend(f"# step: {step}" for step in refutation.steps)
        payload = {
            "refuter": refutation.host_class,
            "case": refutation.case,
            "swapped": refutation.swapped,
            "steps": refutation.steps,
            "coloring": coloring.to_text(),
        }
    _emit(out, args, [*header, coloring.to_text()], payload)
    return EXIT_OK


# --- density ----------------------------------------------------------------

def _cmd_density(args: argparse.Namespace, out: TextIO) -> int:
    g = _graph(args, "g")
    if args.h2 is not None:
        value = density_m2_asym(g, load_graph(args.h2))
        kind = "m2_asym"
    elif args.two:
        if g.num_edges == 1:
            logger.warning("2-density of a single edge reported as 1/2 by convention")
        value = density_m2(g, allow_single_edge=True)
        kind = "m2"
    else:
        value = density_m(g)
        kind = "m"
    text = _fraction_text(value)
    _emit(out, args, [text], {"density": kind, "value": text, "single_edge_convention": kind == "m2" and g.num_edges == 1})
    return EXIT_OK


# --- random-scan ------------------------------------------------------------

def _cmd_random_scan(args: argparse.Namespace, out: TextIO) -> int:
    _require(args, "n", "p")
    exp = ThresholdExperiment(
        h=_graph(args, "h"),
        n=args.n,
        p_grid=args.p,
        trials=args.trials,
        seed=args.seed,
        budget=args.budget,
    )
    result = run_threshold_scan(exp, threads=args.threads)
    if args.json:
        payload = {
            "rows": [row.model_dump() for row in result.rows],
            "crossover_p": result.crossover_p,
            "reference_scale": result.reference_scale,
        }
        _emit(out, args, [], payload)
    else:
        write_csv(result, out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    f = _graph(args, "f")
    if args.determiner is not None:
        spec = _determiner_spec(args, args.determiner)
        ok = verify_determiner(f, spec, budget=args.budget)
        status = "DETERMINER" if ok else "NOT_DETERMINER"
        _emit(out, args, [status], {"status": status, "spec": spec.model_dump(mode="json")})
        return EXIT_OK

    h = _graph(args, "h")
    h2 = _graph(args, "h2")
    _require(args, "coloring")
    with open(args.coloring) as fh:
        coloring = parse_coloring(fh.read(), f)
    red = find_monochromatic_copy(coloring, h, Color.RED)
    blue = find_monochromatic_copy(coloring, h2, Color.BLUE)
    lines = ["VALID" if red is None and blue is None else "INVALID"]
    if red is not None:
        lines.append(f"red copy of H at {list(red.mapping)}")
    if blue is not None:
        lines.append(f"blue copy of H' at {list(blue.mapping)}")
    payload = {
        "valid": red is None and blue is None,
        "red_copy": list(red.mapping) if red is not None else None,
        "blue_copy": list(blue.mapping) if blue is not None else None,
    }
    _emit(out, args, lines, payload)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, TextIO], int]] = {
    "classify": _cmd_classify,
    "arrows": _cmd_arrows,
    "minimal": _cmd_minimal,
    "enumerate": _cmd_enumerate,
    "construct": _cmd_construct,
    "refute": _cmd_refute,
    "density": _cmd_density,
    "random-scan": _cmd_random_scan,
    "verify": _cmd_verify,
}


class _ArgumentParser(argparse.ArgumentParser):
    """Raises on usage errors so run() can map them to exit code 1."""

    def error(self, message: str):
        raise PreconditionError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("-F", dest="f", help="Host graph: file path or inline n=..;e=..")
    common.add_argument("-H", dest="h", help="Graph forbidden in red")
    common.add_argument("-H2", dest="h2", help="Graph forbidden in blue")
    common.add_argument("-G", dest="g", help="Graph for density")
    common.add_argument("-C", dest="coloring", help="Coloring file ('u v R|B' lines)")
    common.add_argument("--json", action="store_true", help="Structured output")
    common.add_argument("--budget", type=int, default=None, help="Search node budget")
    common.add_argument("--threads", type=int, default=DEFAULT_THREADS, help="Worker processes")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for random experiments")
    common.add_argument("--max-n", type=int, default=None, help="Vertex bound for enumeration and r_<")
    common.add_argument(
        "--cache", nargs="?", const="", default=None, metavar="PATH", help="Consult and fill the result store"
    )
    common.add_argument("--log-level", default=None, help="Override LOG_LEVEL")

    parser = _ArgumentParser(
        prog="ordered-ramsey",
        description="Ordered-graph Ramsey toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  ordered-ramsey arrows -F 'n=5;e=1-2,2-3,3-4,4-5,2-4' -H 'n=3;e=1-2,2-3' -H2 'n=3;e=1-2,2-3'
  ordered-ramsey enumerate -H 'n=3;e=1-2,1-3' --max-n 5
  ordered-ramsey density -G 'n=3;e=1-2,1-3,2-3' --two
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    sub.add_parser("classify", parents=[common], help="Run every applicable classifier on (H, H')")

    p = sub.add_parser("arrows", parents=[common], help="Decide F -> (H, H')")
    p.add_argument("--ramsey-number", action="store_true", help="Least r <= --max-n with K_r -> (H, H')")
    p.add_argument("--witness", default=None, help="Write a witness coloring to this file")

    sub.add_parser("minimal", parents=[common], help="Check that F is a minimal Ramsey graph of (H, H')")

    p = sub.add_parser("enumerate", parents=[common], help="All minimal Ramsey graphs of (H, H') up to --max-n")
    p.add_argument("--max-edges", type=int, default=None)

    p = sub.add_parser("construct", parents=[common], help="Build a Ramsey graph or a determiner")
    p.add_argument("--kind", choices=CONSTRUCT_KINDS, required=True)
    p.add_argument("--s", type=int, default=None, help="Edges of the right star (instead of -H)")
    p.add_argument("--d", type=_sequence, default=None, help="Defining sequence d_1,..,d_i")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--n", type=int, default=1, help="Chain length for gamma and f-n")
    p.add_argument("--tail", type=int, default=None, help="Closing determiner index for gamma")
    p.add_argument("--interleavings", type=int, default=FAMILY_PLACEMENT_BUDGET)
    p.add_argument("--no-verify", action="store_true")

    p = sub.add_parser("refute", parents=[common], help="Color F with no red H and no blue H'")
    p.add_argument("--host-class", choices=("auto", "forest", "pseudoforest", "canonical"), default="auto")
    p.add_argument("--case", type=int, default=None)
    p.add_argument("--method", choices=("auto", "height", "three-step"), default="auto")

    p = sub.add_parser("density", parents=[common], help="m(G), m2(G) or m2(G, H')")
    p.add_argument("--two", action="store_true", help="2-density")

    p = sub.add_parser("random-scan", parents=[common], help="Arrow frequency of G(n, p) over a p grid")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=_probabilities, default=None, help="Comma-separated probabilities")
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("verify", parents=[common], help="Check a coloring (-C) or a determiner")
    p.add_argument("--determiner", choices=("left", "right"), default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--d", type=_sequence, default=None)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Parse argv, run the command and return its exit code.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stdout: Stream for results (default sys.stdout)

    Returns:
        0 for a definitive answer, 2 for an undecided one, 1 for bad input
    """
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except PreconditionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT

    if args.log_level:
        logging.getLogger().setLevel(args.log_level.upper())
    logger.info(f"Running command: {args.command}")

    try:
        return COMMANDS[args.command](args, out)
    except (BudgetExceededError, CapExceededError) as exc:
        logger.warning(f"{args.command} undecided: {exc}")
        print(str(exc), file=sys.stderr)
        _emit(out, args, ["UNKNOWN"], {"verdict": "UNKNOWN", "reason": str(exc)})
        return EXIT_UNKNOWN
    except (NotApplicableError, NotCoveredError, HypothesisViolationError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        # PreconditionError, GraphFormatError and pydantic validation errors are ValueErrors
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except OrderedRamseyError as exc:
        logger.error(f"{args.command} failed: {exc}", exc_info=True)
        return EXIT_INPUT
