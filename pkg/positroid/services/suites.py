# positroid/services/suites.py
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Optional
import logging

from positroid.core.exceptions import (
    PositroidError,
    PreconditionError,
    TheoremViolationError,
)
from positroid.diagram.graph import build_le_graph
from positroid.matroid.kernel import (
    components,
    copoints_on,
    dual,
    is_simple,
    minor,
    rank_table,
)
from positroid.models.diagram import LeDiagram
from positroid.models.graph import LeGraph
from positroid.models.matroid import BasisMatroid
from positroid.models.reports import Catalog, DecompositionReport, VerificationReport
from positroid.models.subset import GroundSubset, full_mask, labels_of
from positroid.routing.brute_force import brute_force_rank
from positroid.routing.gammoid import gammoid_rank, le_graph_to_digraph
from positroid.routing.paths import (
    RankOracle,
    bases,
    max_disjoint_routing,
    verify_routing,
)
from positroid.services.coline import (
    LIFTED,
    RANK2,
    cocircuit_pair_witness,
    evaluate_candidates,
    positive_coline,
    search_positive_coline,
)
from positroid.services.enumeration import catalog
from positroid.structure.blocks import is_connected_by_circuits, isolated_blocks

logger = logging.getLogger(__name__)

DIAGRAM_SCOPE = "diagram"
CATALOG_SCOPE = "catalog"


def describe(d: LeDiagram) -> str:
    """Compact diagram descriptor used in failure lists, e.g. ``VVHVHVH:(1,3)(2,3)``."""
    return d.path + ":" + "".join(f"({s},{h})" for s, h in d.dots)


class DiagramContext:
    """Per-diagram data shared by the suites; each piece is computed on first use."""

    def __init__(self, diagram: LeDiagram):
        self.diagram = diagram

    @cached_property
    def graph(self) -> LeGraph:
        return build_le_graph(self.diagram)

    @cached_property
    def matroid(self) -> BasisMatroid:
        return bases(self.graph)

    @cached_property
    def blocks(self) -> DecompositionReport:
        return isolated_blocks(self.diagram, self.graph)

    @cached_property
    def may_be_simple(self) -> bool:
        """False when some source is a loop or reaches a single sink."""
        reach = self.graph.sink_reach
        for h in self.diagram.sources():
            if reach[h] & (reach[h] - 1) == 0:
                return False
        return True

    @cached_property
    def simple_rank3plus(self) -> bool:
        return self.diagram.r >= 3 and self.may_be_simple and is_simple(self.matroid)


@dataclass
class SuiteMetadata:
    """Metadata about a verification suite"""

    name: str
    description: str
    scope: str = DIAGRAM_SCOPE


class BaseSuite(ABC):
    """Base class for the exhaustive checks"""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.metadata = self.get_metadata()

    @abstractmethod
    def get_metadata(self) -> SuiteMetadata:
        """Return metadata about this suite"""
        pass

    def check(self, context: DiagramContext, report: VerificationReport) -> None:
        """Check one diagram and record failures in ``report``."""
        raise NotImplementedError

    def run_catalogs(self, n_max: int, report: VerificationReport) -> None:
        """Check whole catalogs up to ``n_max`` (catalog-scope suites only)."""
        raise NotImplementedError

    def _count(self, report: VerificationReport) -> None:
        name = self.metadata.name
        report.suite_counts[name] = report.suite_counts.get(name, 0) + 1


class TheoremSuite(BaseSuite):
    def get_metadata(self) -> SuiteMetadata:
        return SuiteMetadata(
            name="theorem",
            description="every simple positroid of rank >= 3 has a positive coline",
        )

    def check(self, context: DiagramContext, report: VerificationReport) -> None:
        if not context.simple_rank3plus:
            return
        d, m = context.diagram, context.matroid
        self._count(report)
        report.simple_rank3plus_count += 1
        try:
            coline = positive_coline(m, d)
        except TheoremViolationError:
            logger.error(f"No positive coline on {describe(d)}; stopping")
            raise
        except PositroidError as e:
            report.theorem_failures.append(f"{describe(d)} {e}")
            return
        if not coline.positive:
            report.theorem_failures.append(
                f"{describe(d)} returned coline {coline.coline.elements} is not positive"
            )
            return
        if coline.candidate in (LIFTED, RANK2):
            recomputed = copoints_on(m, coline.coline)
            if recomputed.copoints != coline.copoints:
                report.theorem_failures.append(
                    f"{describe(d)} lifted coline {coline.coline.elements} disagrees with its copoints"
                )
        try:
            witness = cocircuit_pair_witness(m, coline)
        except PreconditionError as e:
            report.witness_failures.append(f"{describe(d)} {e}")
            return
        if len(witness.symdiff) != 2:
            report.witness_failures.append(
                f"{describe(d)} cocircuits differ in {witness.symdiff}"
            )


class CorollarySuite(BaseSuite):
    def get_metadata(self) -> SuiteMetadata:
        return SuiteMetadata(
            name="corollary",
            description="which sink candidate is positive on connected simple positroids",
        )

    def check(self, context: DiagramContext, report: VerificationReport) -> None:
        if not context.simple_rank3plus or not context.blocks.connected:
            return
        d = context.diagram
        self._count(report)
        try:
            outcome = evaluate_candidates(context.matroid, d)
        except PositroidError as e:
            report.corollary_failures.append(f"{describe(d)} {e}")
            return
        stats = report.corollary_branch_stats
        if outcome.a.positive:
            stats["A"] = stats.get("A", 0) + 1
        elif outcome.b is not None and outcome.b.positive:
            stats["B"] = stats.get("B", 0) + 1
            report.corollary_b_by_n[d.n] = report.corollary_b_by_n.get(d.n, 0) + 1
        else:
            a_simple, a_multiple = outcome.a.census()
            b_census = "missing"
            if outcome.b is not None:
                b_simple, b_multiple = outcome.b.census()
                b_census = f"{b_simple}/{b_multiple}"
            entry = (
                f"{describe(d)} candidate A {a_simple}/{a_multiple}, "
                f"candidate B {b_census}"
            )
            if search_positive_coline(context.matroid) is None:
                report.corollary_failures.append(f"{entry}, no positive coline")
            else:
                report.corollary_counterexamples.append(entry)


class LemmaSuite(BaseSuite):
    def get_metadata(self) -> SuiteMetadata:
        return SuiteMetadata(
            name="lemma",
            description="one isolated block exactly when every pair shares a circuit",
        )

    def check(self, context: DiagramContext, report: VerificationReport) -> None:
        d, m = context.diagram, context.matroid
        self._count(report)
        try:
            blocks = context.blocks
        except PositroidError as e:
            report.lemma_mismatches.append(f"{describe(d)} {e}")
            return
        by_circuits = is_connected_by_circuits(m)
        if blocks.connected != by_circuits:
            report.lemma_mismatches.append(
                f"{describe(d)} {len(blocks.blocks)} blocks but common-circuit test says "
                f"{'connected' if by_circuits else 'disconnected'}"
            )
        elif list(blocks.blocks) != components(m):
            report.lemma_mismatches.append(
                f"{describe(d)} blocks {[str(b) for b in blocks.blocks]} differ from components"
            )


class RankOracleSuite(BaseSuite):
    def get_metadata(self) -> SuiteMetadata:
        return SuiteMetadata(
            name="rank-oracle",
            description="routing rank, path-set rank, gammoid rank and basis rank agree",
        )

    def check(self, context: DiagramContext, report: VerificationReport) -> None:
        d, g, m = context.diagram, context.graph, context.matroid
        self._count(report)
        oracle = RankOracle(g)
        table = rank_table(m)
        use_gammoid = d.n <= self.config.get("gammoid_n_max", 6)
        digraph = le_graph_to_digraph(g) if use_gammoid else None
        externals = range(1, d.n + 1)
        sinks = d.sinks()

        for index in range(1 << d.n):
            mask = index << 1
            subset = GroundSubset(mask)
            routed = oracle.rank(mask)
            values = {
                "brute-force": brute_force_rank(g, subset),
                "bases": table[index],
            }
            if digraph is not None:
                values["gammoid"] = gammoid_rank(digraph, sinks, externals, subset)
            wrong = {name: value for name, value in values.items() if value != routed}
            if wrong:
                report.rank_oracle_mismatches.append(
                    f"{describe(d)} rank{subset} routing={routed} {wrong}"
                )
                return

        X = GroundSubset(full_mask(d.n) & ~g.sink_mask)
        Y = GroundSubset(g.sink_mask)
        plan = max_disjoint_routing(g, X, Y)
        if not verify_routing(g, plan, X, Y):
            report.rank_oracle_mismatches.append(
                f"{describe(d)} invalid routing {plan.paths}"
            )


class AxiomsSuite(BaseSuite):
    def get_metadata(self) -> SuiteMetadata:
        return SuiteMetadata(
            name="axioms",
            description="basis exchange, rank and closure laws",
        )

    def check(self, context: DiagramContext, report: VerificationReport) -> None:
        d, m = context.diagram, context.matroid
        self._count(report)
        problem = self._basis_exchange(m) or self._rank_laws(m) or self._closure_laws(m)
        if problem:
            report.axiom_violations.append(f"{describe(d)} {problem}")

    @staticmethod
    def _basis_exchange(m: BasisMatroid) -> Optional[str]:
        for b1 in m.bases:
            for b2 in m.bases:
                for e in labels_of(b1 & ~b2):
                    reduced = b1 & ~(1 << e)
                    incoming = labels_of(b2 & ~b1)
                    if not any(m.is_basis(reduced | 1 << f) for f in incoming):
                        return f"exchange fails for {GroundSubset(b1)}, {GroundSubset(b2)}, {e}"
        return None

    @staticmethod
    def _rank_laws(m: BasisMatroid) -> Optional[str]:
        table = rank_table(m)
        if table[0] != 0:
            return "rank of the empty set is not 0"
        size = 1 << m.n
        for index in range(size):
            base = table[index]
            for bit in range(m.n):
                e = 1 << bit
                if index & e:
                    continue
                grown = table[index | e]
                if not base <= grown <= base + 1:
                    return f"unit increase fails at {GroundSubset(index << 1)} + {bit + 1}"
                for other in range(bit + 1, m.n):
                    f = 1 << other
                    if index & f:
                        continue
                    if grown + table[index | f] < table[index | e | f] + base:
                        return f"submodularity fails at {GroundSubset(index << 1)}"
        return None

    @staticmethod
    def _closure_laws(m: BasisMatroid) -> Optional[str]:
        table = rank_table(m)
        size = 1 << m.n

        def close(index: int) -> int:
            base = table[index]
            closed = index
            for bit in range(m.n):
                if not index >> bit & 1 and table[index | 1 << bit] == base:
                    closed |= 1 << bit
            return closed

        closures = [close(index) for index in range(size)]
        for index in range(size):
            closed = closures[index]
            if closed & index != index:
                return f"closure of {GroundSubset(index << 1)} is not extensive"
            if closures[closed] != closed:
                return f"closure of {GroundSubset(index << 1)} is not idempotent"
            for bit in range(m.n):
                if closed & ~closures[index | 1 << bit]:
                    return f"closure is not monotone at {GroundSubset(index << 1)}"
        return None


class DualitySuite(BaseSuite):
    def get_metadata(self) -> SuiteMetadata:
        return SuiteMetadata(
            name="duality",
            description="duals and single-element minors stay inside the catalog",
            scope=CATALOG_SCOPE,
        )

    def run_catalogs(self, n_max: int, report: VerificationReport) -> None:
        previous: Optional[Catalog] = None
        for n in range(1, n_max + 1):
            current = catalog(n)
            if len(current) != current.diagrams_seen:
                report.duality_misses.append(
                    f"n={n} {current.diagrams_seen} diagrams but {len(current)} basis sets"
                )
            for entry in current.entries:
                self._count(report)
                m, d = entry.matroid, entry.diagram
                if dual(m) not in current:
                    report.duality_misses.append(f"{describe(d)} dual")
                if previous is None:
                    continue
                for label in range(1, n + 1):
                    single = GroundSubset.of(label)
                    if minor(m, single, 0).matroid not in previous:
                        report.duality_misses.append(f"{describe(d)} delete {label}")
                    if minor(m, 0, single).matroid not in previous:
                        report.duality_misses.append(f"{describe(d)} contract {label}")
            previous = current
            logger.info(f"Duality checks done for n={n}")


class SuiteRegistry:
    """Registry of verification suites"""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self._suites: Dict[str, BaseSuite] = {}
        self._register_default_suites()

    def _register_default_suites(self) -> None:
        for suite_class in (
            TheoremSuite,
            CorollarySuite,
            LemmaSuite,
            RankOracleSuite,
            AxiomsSuite,
            DualitySuite,
        ):
            self.register(suite_class(self.config))

    def register(self, suite: BaseSuite) -> None:
        self._suites[suite.metadata.name] = suite
        logger.debug(f"Registered suite: {suite.metadata.name}")

    def get(self, name: str) -> Optional[BaseSuite]:
        return self._suites.get(name)

    def get_suites(self, names: Optional[List[str]] = None) -> List[BaseSuite]:
        """
        Resolve suite names; ``None`` or ``all`` selects every suite.

        Raises:
            PreconditionError: unknown suite name
        """
        if not names or "all" in names:
            return list(self._suites.values())
        unknown = [name for name in names if name not in self._suites]
        if unknown:
            raise PreconditionError(
                f"Unknown suite: {', '.join(unknown)}. Available: {', '.join(self.list_suites())}, all"
            )
        return [self._suites[name] for name in names]

    def list_suites(self) -> List[str]:
        return list(self._suites.keys())
