"""Runs verification suites and folds them into one report.

Suites are independent and run concurrently in worker threads; checks are
re-assembled in suite order so that reports do not depend on scheduling.
"""

import asyncio
import logging
from collections.abc import Callable
from pathlib import Path

from app.core.config import settings
from app.core.observability import observability
from app.fixtures.loader import KnownDiscrepancy, load_known_discrepancies
from app.modules.actions.service import ActionService
from app.modules.grassmann.service import GrassmannService
from app.modules.octonion.service import AlgebraService, FormsService
from app.modules.torus.service import TorusService
from app.modules.xmin.service import XminService

from .schemas import VerificationReport

logger = logging.getLogger("xmin.verification")

SuiteRunner = Callable[[int, int], VerificationReport]

SUITES: dict[str, SuiteRunner] = {
    "algebra": AlgebraService.report,
    "forms": FormsService.report,
    "grassmann": GrassmannService.report,
    "xmin": XminService.report,
    "torus": TorusService.report,
    "actions": ActionService.report,
}
ALL = "all"


class UnknownSuiteError(KeyError):
    pass


class VerificationService:
    @staticmethod
    def suite_names() -> list[str]:
        return [*SUITES, ALL]

    @staticmethod
    def mark_known(report: VerificationReport, known: dict[str, KnownDiscrepancy]) -> VerificationReport:
        for check in report.checks:
            if not check.is_discrepancy:
                continue
            entry = known.get(check.name)
            check.known = entry is not None and entry.matches(check)
            if entry is not None and not check.known:
                logger.warning(
                    "allowlisted %s no longer matches its pinned %s value",
                    check.name,
                    entry.field,
                    extra={"suite": report.suite, "check": check.name},
                )
            logger.warning(
                "%s discrepancy: %s",
                "known" if check.known else "unexpected",
                check.name,
                extra={"suite": report.suite, "check": check.name},
            )
        return report

    @staticmethod
    def run_suite(name: str, seed: int, samples: int, known: dict[str, KnownDiscrepancy]) -> VerificationReport:
        if name not in SUITES:
            raise UnknownSuiteError(name)
        with observability.track_suite(name) as tracker:
            report = SUITES[name](seed, samples)
            VerificationService.mark_known(report, known)
            summary = report.summary()
            tracker.record(summary.checks, summary.discrepancies)
        return report

    @staticmethod
    async def run(
        suite: str = ALL,
        seed: int = settings.DEFAULT_SEED,
        samples: int = settings.DEFAULT_SAMPLES,
        known_file: Path | None = None,
    ) -> VerificationReport:
        if suite != ALL and suite not in SUITES:
            raise UnknownSuiteError(suite)
        known = load_known_discrepancies(known_file)
        names = list(SUITES) if suite == ALL else [suite]
        reports = await asyncio.gather(
            *(asyncio.to_thread(VerificationService.run_suite, name, seed, samples, known) for name in names)
        )
        combined = VerificationReport(suite=suite, seed=seed, samples=samples)
        for report in reports:
            combined.checks.extend(report.checks)
        return combined

    @staticmethod
    def run_sync(suite: str = ALL, seed: int = settings.DEFAULT_SEED, samples: int = settings.DEFAULT_SAMPLES) -> VerificationReport:
        return asyncio.run(VerificationService.run(suite, seed, samples))
