# positroid/main.py
import argparse
import importlib
import json
import logging
import sys
from typing import Any, Callable, Dict, List, NamedTuple, NoReturn, Optional

from positroid.core.config import Settings, get_settings
from positroid.core.exceptions import (
    PositroidError,
    TheoremViolationError,
    TransportError,
    UsageError,
)
from positroid.core.logging import setup_logging
from positroid.diagram.fixtures import get_fixture
from positroid.diagram.graph import build_le_graph, emit_dot
from positroid.diagram.parser import le_to_dict, load_diagram
from positroid.matroid.kernel import (
    closure,
    colines,
    copoints_on,
    dual,
    flats_of_rank,
    loops_coloops,
    minor,
    parallel_pairs,
)
from positroid.matroid.parallel import graph_loops_coloops, graph_parallel_pairs
from positroid.models.diagram import LeDiagram
from positroid.models.graph import LeGraph
from positroid.models.matroid import BasisMatroid, ColineReport
from positroid.models.reports import CommandOutcome, VerificationReport
from positroid.models.subset import GroundSubset
from positroid.routing.paths import bases, rank
from positroid.services.coline import cocircuit_pair_witness, positive_coline
from positroid.services.enumeration import catalog
from positroid.services.orchestrator import VerificationOrchestrator
from positroid.services.suites import SuiteRegistry, describe
from positroid.structure.blocks import (
    decompose_components,
    has_spanning_circuit,
    isolated_blocks,
)
from positroid.transport.base import TransportFactory

# Ensure transports register themselves with the factory
importlib.import_module("positroid.transport.console")
importlib.import_module("positroid.transport.filesystem")

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2
EXIT_THEOREM_VIOLATION = 3

# verify-suite name -> report fields holding its failures
SUITE_FAILURE_FIELDS: Dict[str, List[str]] = {
    "theorem": ["theorem_failures", "witness_failures"],
    "corollary": ["corollary_failures"],
    "lemma": ["lemma_mismatches"],
    "rank-oracle": ["rank_oracle_mismatches"],
    "axioms": ["axiom_violations"],
    "duality": ["duality_misses"],
}


class Rendered(NamedTuple):
    text: str
    data: Any


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on grammar errors."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage().rstrip()}")


def _subset(text: str) -> GroundSubset:
    try:
        return GroundSubset.parse(text)
    except ValueError as e:
        raise UsageError(str(e))


def _read_diagram(source: str) -> LeDiagram:
    """A file path, ``-`` for stdin, or ``@NAME`` for a built-in fixture."""
    if source.startswith("@"):
        return get_fixture(source[1:])
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise UsageError(f"cannot read {source}: {e.strerror}")
    return load_diagram(text)


def _set_lines(subsets: List[GroundSubset]) -> str:
    return "\n".join(str(subset) for subset in subsets)


def _matroid_data(m: BasisMatroid) -> Dict[str, Any]:
    return {
        "n": m.n,
        "r": m.r,
        "bases": [basis.labels() for basis in m.basis_subsets()],
    }


def _coline_text(report: ColineReport) -> str:
    simple, multiple = report.census()
    lines = [f"coline {report.coline.elements} (rank {report.coline.rank})"]
    lines += [
        f"  {entry.kind} {entry.flat.elements}" for entry in report.copoints
    ]
    verdict = "positive" if report.positive else "not positive"
    lines.append(f"  {simple} simple, {multiple} multiple: {verdict}")
    if report.candidate is not None:
        lines.append(f"  candidate {report.candidate}")
    return "\n".join(lines)


class Context:
    """Diagram, graph and matroid of the command input, built on demand."""

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self._diagram: Optional[LeDiagram] = None
        self._graph: Optional[LeGraph] = None
        self._matroid: Optional[BasisMatroid] = None

    @property
    def diagram(self) -> LeDiagram:
        if self._diagram is None:
            self._diagram = _read_diagram(self.args.diagram)
        return self._diagram

    @property
    def graph(self) -> LeGraph:
        if self._graph is None:
            self._graph = build_le_graph(self.diagram)
        return self._graph

    @property
    def matroid(self) -> BasisMatroid:
        if self._matroid is None:
            self._matroid = bases(self.graph)
        return self._matroid


def cmd_validate(ctx: Context) -> Rendered:
    d = ctx.diagram
    text = f"valid: n={d.n} r={d.r} path={d.path} dots={len(d.dots)}"
    return Rendered(text, {"valid": True, **le_to_dict(d)})


def cmd_graph(ctx: Context) -> Rendered:
    g = ctx.graph
    kinds = {True: "sink", False: "source"}
    vertices = [
        {
            "id": g.vertex_name(v),
            "kind": kinds[g.is_sink(v)] if g.is_external(v) else "internal",
        }
        for v in g.vertices()
    ]
    arcs = [[g.vertex_name(u), g.vertex_name(w)] for u, w in g.arcs()]
    return Rendered(emit_dot(g).rstrip("\n"), {"vertices": vertices, "arcs": arcs})


def cmd_bases(ctx: Context) -> Rendered:
    m = ctx.matroid
    return Rendered(_set_lines(m.basis_subsets()), _matroid_data(m))


def cmd_rank(ctx: Context) -> Rendered:
    subset = _subset(ctx.args.set)
    value = rank(ctx.graph, subset)
    return Rendered(str(value), {"set": subset.labels(), "rank": value})


def cmd_closure(ctx: Context) -> Rendered:
    subset = _subset(ctx.args.set)
    flat = closure(ctx.matroid, subset)
    return Rendered(
        f"{flat.elements} (rank {flat.rank})",
        {"set": subset.labels(), "closure": flat.to_json(), "rank": flat.rank},
    )


def cmd_flats(ctx: Context) -> Rendered:
    found = flats_of_rank(ctx.matroid, ctx.args.rank)
    return Rendered(
        _set_lines([flat.elements for flat in found]),
        {"rank": ctx.args.rank, "flats": [flat.to_json() for flat in found]},
    )


def cmd_colines(ctx: Context) -> Rendered:
    reports = colines(ctx.matroid)
    lines = []
    for report in reports:
        simple, multiple = report.census()
        marker = " positive" if report.positive else ""
        lines.append(
            f"{report.coline.elements} simple={simple} multiple={multiple}{marker}"
        )
    return Rendered("\n".join(lines), [report.to_json() for report in reports])


def cmd_copoints(ctx: Context) -> Rendered:
    report = copoints_on(ctx.matroid, _subset(ctx.args.coline))
    return Rendered(_coline_text(report), report.to_json())


def cmd_positive_coline(ctx: Context) -> Rendered:
    report = positive_coline(ctx.matroid, ctx.diagram)
    return Rendered(_coline_text(report), report.to_json())


def cmd_witness(ctx: Context) -> Rendered:
    m = ctx.matroid
    witness = cocircuit_pair_witness(m, positive_coline(m, ctx.diagram))
    text = "\n".join(
        [
            f"coline {witness.coline.elements}",
            f"cocircuit {witness.c1}",
            f"cocircuit {witness.c2}",
            f"symmetric difference {witness.symdiff}",
        ]
    )
    return Rendered(text, witness.to_json())


def cmd_connectivity(ctx: Context) -> Rendered:
    report = isolated_blocks(ctx.diagram, ctx.graph)
    spanning = has_spanning_circuit(ctx.matroid)
    blocks = " ".join(str(block) for block in report.blocks)
    lines = [
        "connected" if report.connected else "disconnected",
        f"blocks {blocks}",
        f"spanning circuit: {'yes' if spanning else 'no'}",
    ]
    data = report.to_json()
    data["levels"] = [list(levels) for levels in report.block_levels]
    data["spanning_circuit"] = spanning
    return Rendered("\n".join(lines), data)


def cmd_decompose(ctx: Context) -> Rendered:
    parts = decompose_components(ctx.matroid, ctx.diagram)
    lines = []
    data = []
    for part in parts:
        lines.append(
            f"{part.labels} path={part.diagram.path} r={part.matroid.r} "
            f"bases={part.matroid.num_bases}"
        )
        data.append(
            {
                "labels": part.labels.labels(),
                "diagram": le_to_dict(part.diagram),
                **_matroid_data(part.matroid),
            }
        )
    return Rendered("\n".join(lines), data)


def cmd_simple_check(ctx: Context) -> Rendered:
    m, d = ctx.matroid, ctx.diagram
    loops, coloops = loops_coloops(m)
    pairs = parallel_pairs(m)
    agree = graph_loops_coloops(d, ctx.graph) == (loops, coloops) and (
        graph_parallel_pairs(d, ctx.graph) == pairs
    )
    if not agree:
        logger.error(f"Graph and matroid detectors disagree on {describe(d)}")
    simple = not loops and not pairs
    lines = [
        f"loops {loops}",
        f"coloops {coloops}",
        "parallel " + " ".join(str(GroundSubset.of(*pair)) for pair in pairs),
        f"simple: {'yes' if simple else 'no'}",
    ]
    if not agree:
        lines.append("detectors disagree")
    data = {
        "loops": loops.labels(),
        "coloops": coloops.labels(),
        "parallel": [list(pair) for pair in pairs],
        "simple": simple,
        "detectors_agree": agree,
    }
    return Rendered("\n".join(line.rstrip() for line in lines), data)


def cmd_dual(ctx: Context) -> Rendered:
    m = dual(ctx.matroid)
    return Rendered(_set_lines(m.basis_subsets()), _matroid_data(m))


def cmd_minor(ctx: Context) -> Rendered:
    result = minor(
        ctx.matroid, _subset(ctx.args.delete), _subset(ctx.args.contract)
    )
    m = result.matroid
    relabel = " ".join(
        f"{new}<-{old}" for new, old in enumerate(result.labels, start=1)
    )
    text = f"n={m.n} r={m.r} labels {relabel}".rstrip()
    if m.num_bases:
        text += "\n" + _set_lines(m.basis_subsets())
    return Rendered(text, {"labels": list(result.labels), **_matroid_data(m)})


def cmd_enumerate(ctx: Context) -> Rendered:
    args, settings = ctx.args, ctx.settings
    if args.n > settings.catalog_n_max:
        logger.warning(
            f"n={args.n} exceeds catalog_n_max={settings.catalog_n_max}; this may take a long time"
        )
    result = catalog(args.n, args.r)
    records = [entry.to_json() for entry in result.entries]
    node = settings.output_config
    if args.output:
        node = {**node, "type": "filesystem", "path": args.output}

    if node["type"] != "console":
        transport = TransportFactory.create(node)
        with transport:
            results = transport.send_batch(records)
        dropped = [result for result in results if not result.is_success]
        if dropped:
            raise TransportError(
                f"{len(dropped)} of {len(records)} catalog records were not written: "
                f"{dropped[0].error_message}"
            )
        target = node.get("path", node["type"])
        summary = {
            "n": result.n,
            "diagrams": result.diagrams_seen,
            "positroids": len(result),
            "output": target,
        }
        text = (
            f"n={result.n}: {result.diagrams_seen} diagrams, "
            f"{len(result)} positroids written to {target}"
        )
        return Rendered(text, summary)

    if args.json:
        # line-delimited, one catalog entry per line
        lines = [json.dumps(record, separators=(",", ":")) for record in records]
        return Rendered("\n".join(lines), None)
    lines = [
        f"{describe(entry.diagram)} r={entry.matroid.r} bases={entry.matroid.num_bases}"
        for entry in result.entries
    ]
    lines.append(f"{result.diagrams_seen} diagrams, {len(result)} positroids")
    return Rendered("\n".join(lines), None)


def format_report(report: VerificationReport, mode: str = "text") -> str:
    """
    Render a verification report.

    ``json`` is the model dump and loads back with
    ``VerificationReport.model_validate_json``; ``text`` has one verdict line
    per suite ending in OK or FAILED, then the failure entries.
    """
    if mode == "json":
        return report.model_dump_json()

    low, high = report.n_range
    lines = [
        f"n {low}..{high}, suites {', '.join(report.suites)}",
        f"diagrams checked: {report.diagrams_checked}",
        f"simple positroids of rank >= 3: {report.simple_rank3plus_count}",
    ]
    failures: List[str] = []
    for suite in report.suites:
        fields = SUITE_FAILURE_FIELDS.get(suite, [])
        found = [entry for name in fields for entry in getattr(report, name)]
        detail = f"{report.suite_counts.get(suite, 0)} checked, {len(found)} failures"
        if suite == "corollary":
            stats = report.corollary_branch_stats
            detail += f", A positive {stats.get('A', 0)}, B needed {stats.get('B', 0)}"
            if report.corollary_b_by_n:
                by_n = ", ".join(
                    f"n={n}: {count}"
                    for n, count in sorted(report.corollary_b_by_n.items())
                )
                detail += f" ({by_n})"
            neither = report.corollary_counterexamples
            if neither:
                detail += f", neither positive {len(neither)}"
                failures += [
                    f"  corollary, found by search: {entry}" for entry in neither
                ]
        lines.append(f"{suite}: {detail} ... {'FAILED' if found else 'OK'}")
        failures += [f"  {suite}: {entry}" for entry in found]
    return "\n".join(lines + failures)


def cmd_verify(ctx: Context) -> Rendered:
    registry = SuiteRegistry(ctx.settings.model_dump())
    orchestrator = VerificationOrchestrator(registry, ctx.settings)
    report = orchestrator.verify(ctx.args.n, [ctx.args.suite])
    mode = "json" if ctx.args.json else "text"
    return Rendered(format_report(report, mode), report)


Handler = Callable[[Context], Rendered]


def build_parser() -> CommandParser:
    common = CommandParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    diagram_input = CommandParser(add_help=False)
    diagram_input.add_argument(
        "diagram",
        help="diagram file (.led or JSON), '-' for stdin, '@NAME' for a fixture",
    )

    parser = CommandParser(
        prog="positroid",
        description="Le-diagrams, their positroids and exhaustive checks",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(
        name: str, handler: Handler, help_text: str, diagram: bool = True
    ) -> CommandParser:
        parents = [common, diagram_input] if diagram else [common]
        sub = commands.add_parser(name, parents=parents, help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    add("validate", cmd_validate, "check a diagram and its Le-property")
    add("graph", cmd_graph, "Le-graph as Graphviz DOT")
    add("bases", cmd_bases, "bases of the positroid")
    add("rank", cmd_rank, "rank of a label set").add_argument("--set", required=True)
    add("closure", cmd_closure, "closure of a label set").add_argument(
        "--set", required=True
    )
    add("flats", cmd_flats, "flats of a given rank").add_argument(
        "--rank", type=int, required=True
    )
    add("colines", cmd_colines, "every coline with its copoint census")
    add("copoints", cmd_copoints, "copoints on a coline").add_argument(
        "--coline", required=True
    )
    add("positive-coline", cmd_positive_coline, "construct a positive coline")
    add("witness", cmd_witness, "two cocircuits certifying a positive coline")
    add("connectivity", cmd_connectivity, "isolated blocks and connectivity")
    add("decompose", cmd_decompose, "direct-sum decomposition")
    add("simple-check", cmd_simple_check, "loops, coloops and parallel pairs")
    add("dual", cmd_dual, "bases of the dual positroid")

    minor_parser = add("minor", cmd_minor, "delete and contract label sets")
    minor_parser.add_argument("--delete", default="")
    minor_parser.add_argument("--contract", default="")

    enumerate_parser = add(
        "enumerate", cmd_enumerate, "catalog every positroid of size n", diagram=False
    )
    enumerate_parser.add_argument("--n", type=int, required=True)
    enumerate_parser.add_argument("--r", type=int, default=None)
    enumerate_parser.add_argument(
        "--output", default=None, help="write the catalog as JSONL"
    )

    verify_parser = add(
        "verify", cmd_verify, "run the exhaustive checks", diagram=False
    )
    verify_parser.add_argument(
        "--n", type=int, default=None, help="bound for every suite"
    )
    verify_parser.add_argument(
        "--suite",
        default="all",
        choices=sorted(SUITE_FAILURE_FIELDS) + ["all"],
    )
    return parser


def _render(rendered: Rendered, as_json: bool) -> str:
    if not as_json or rendered.data is None:
        return rendered.text
    if isinstance(rendered.data, VerificationReport):
        return rendered.text
    return json.dumps(rendered.data)


def run(argv: List[str], settings: Optional[Settings] = None) -> CommandOutcome:
    """
    Parse and dispatch one command.

    Returns:
        CommandOutcome; library errors become exit 1, failed verification
        exit 2 and a falsified coline construction exit 3
    """
    settings = settings or get_settings()
    try:
        args = build_parser().parse_args(argv)
        rendered = args.handler(Context(args, settings))
    except TheoremViolationError as e:
        logger.error(f"Coline construction failed: {e}")
        return CommandOutcome(
            EXIT_THEOREM_VIOLATION, json.dumps(e.diagnostics), f"error: {e}"
        )
    except (PositroidError, UsageError) as e:
        return CommandOutcome(EXIT_ERROR, "", f"error: {e}")
    except SystemExit as e:
        # --help
        return CommandOutcome(e.code if isinstance(e.code, int) else EXIT_OK)

    payload = _render(rendered, args.json)
    if isinstance(rendered.data, VerificationReport) and not rendered.data.ok:
        return CommandOutcome(EXIT_VERIFY_FAILED, payload, "error: verification failed")
    return CommandOutcome(EXIT_OK, payload)


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    setup_logging(settings.debug, settings.log_level)
    outcome = run(sys.argv[1:] if argv is None else argv, settings)
    if outcome.payload:
        console = TransportFactory.create({"type": "console"})
        with console:
            console.send({"body": outcome.payload})
    if outcome.diagnostic:
        print(outcome.diagnostic, file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
