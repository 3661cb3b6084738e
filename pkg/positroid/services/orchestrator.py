# positroid/services/orchestrator.py
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple
import logging

from positroid.core.config import Settings, get_settings
from positroid.models.diagram import SINK, LeDiagram
from positroid.models.reports import VerificationReport
from positroid.services.enumeration import fillings, lattice_paths
from positroid.services.suites import (
    CATALOG_SCOPE,
    BaseSuite,
    DiagramContext,
    SuiteRegistry,
)

logger = logging.getLogger(__name__)

# (n, path, suite names) for one lattice path
WorkUnit = Tuple[int, str, Tuple[str, ...]]

_worker_registry: Optional[SuiteRegistry] = None
_worker_config: Dict[str, Any] = {}


def _init_worker(config: Dict[str, Any]) -> None:
    global _worker_registry, _worker_config
    _worker_config = config
    _worker_registry = SuiteRegistry(config)


def run_unit(unit: WorkUnit) -> VerificationReport:
    """Run the selected diagram suites over every filling of one lattice path."""
    global _worker_registry
    if _worker_registry is None:
        _worker_registry = SuiteRegistry(_worker_config)
    n, path, names = unit
    suites = _worker_registry.get_suites(list(names))
    report = VerificationReport(n_range=(n, n))
    rank = path.count(SINK)
    for dots in fillings(path):
        context = DiagramContext(
            LeDiagram.model_construct(n=n, r=rank, path=path, dots=dots)
        )
        report.diagrams_checked += 1
        for suite in suites:
            suite.check(context, report)
    return report


class VerificationOrchestrator:
    """Fans the exhaustive suites out over lattice paths and merges the partial reports"""

    def __init__(self, registry: SuiteRegistry, settings: Settings):
        self.registry = registry
        self.settings = settings

    def _bounds(
        self, suites: List[BaseSuite], n_max: Optional[int]
    ) -> Dict[str, int]:
        defaults = self.settings.suite_bounds
        return {
            suite.metadata.name: (
                n_max if n_max is not None else defaults[suite.metadata.name]
            )
            for suite in suites
        }

    def plan(self, suites: List[BaseSuite], n_max: Optional[int]) -> List[WorkUnit]:
        """Work units in (n, path) order; each carries the suites whose bound covers n."""
        bounds = self._bounds(suites, n_max)
        diagram_suites = [s for s in suites if s.metadata.scope != CATALOG_SCOPE]
        top = max((bounds[s.metadata.name] for s in diagram_suites), default=0)
        units = []
        for n in range(1, top + 1):
            names = tuple(
                s.metadata.name for s in diagram_suites if bounds[s.metadata.name] >= n
            )
            units.extend((n, path, names) for path in lattice_paths(n))
        return units

    def verify(
        self, n_max: Optional[int] = None, suite_names: Optional[List[str]] = None
    ) -> VerificationReport:
        """
        Run the selected suites over every diagram up to their bounds.

        Args:
            n_max: bound for every selected suite (None = each suite's default)
            suite_names: suite names or ["all"] (None = all)

        Returns:
            VerificationReport; failures are recorded, not raised

        Raises:
            TheoremViolationError: a simple connected positroid of rank >= 3
                has no positive coline; the run stops
        """
        suites = self.registry.get_suites(suite_names)
        bounds = self._bounds(suites, n_max)
        units = self.plan(suites, n_max)
        workers = self.settings.verify_workers
        logger.info(
            f"Verifying {', '.join(bounds)} with bounds {bounds}: "
            f"{len(units)} lattice paths, {workers} worker(s)"
        )

        report = VerificationReport(
            n_range=(1, max(bounds.values(), default=0)), suites=sorted(bounds)
        )
        if workers > 1 and len(units) > 1:
            config = self.registry.config
            with ProcessPoolExecutor(
                max_workers=workers, initializer=_init_worker, initargs=(config,)
            ) as executor:
                for partial in executor.map(run_unit, units, chunksize=4):
                    report = report.merge(partial)
        else:
            _init_worker(self.registry.config)
            for unit in units:
                report = report.merge(run_unit(unit))

        for suite in suites:
            if suite.metadata.scope == CATALOG_SCOPE:
                logger.info(f"Running catalog suite {suite.metadata.name}")
                partial = VerificationReport()
                suite.run_catalogs(bounds[suite.metadata.name], partial)
                report = report.merge(partial)

        logger.info(
            f"Verification finished: {report.diagrams_checked} diagrams, "
            f"{'OK' if report.ok else 'FAILURES'}"
        )
        return report


def verify(
    n_max: Optional[int] = None,
    suite: str = "all",
    settings: Optional[Settings] = None,
) -> VerificationReport:
    """Convenience entry point: one suite name (or ``all``) with an optional shared bound."""
    settings = settings or get_settings()
    registry = SuiteRegistry(settings.model_dump())
    return VerificationOrchestrator(registry, settings).verify(n_max, [suite])
