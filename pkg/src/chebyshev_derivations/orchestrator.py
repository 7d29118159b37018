"""Sweep runner that schedules identity checks and series checks concurrently."""

from __future__ import annotations

import asyncio
import time
from collections.abc import AsyncIterator, Callable, Iterable

import structlog

from chebyshev_derivations.config import get_settings
from chebyshev_derivations.families import verify_derivative_expansion, verify_genfun
from chebyshev_derivations.hypergeom import verify_hypergeom_T, verify_hypergeom_U
from chebyshev_derivations.identities import (
    expected_constant,
    verify_T_i,
    verify_T_ii,
    verify_T_iii,
    verify_U_i,
    verify_U_ii,
    verify_U_iii,
)
from chebyshev_derivations.models import IdentityId, IdentityReport, Kind, SeriesCheck

logger = structlog.get_logger(__name__)

VERIFIERS: dict[IdentityId, Callable[[int], IdentityReport]] = {
    IdentityId.T_I: verify_T_i,
    IdentityId.T_II: verify_T_ii,
    IdentityId.T_III: verify_T_iii,
    IdentityId.U_I: verify_U_i,
    IdentityId.U_II: verify_U_ii,
    IdentityId.U_III: verify_U_iii,
    IdentityId.HG_T: verify_hypergeom_T,
    IdentityId.HG_U: verify_hypergeom_U,
}


def verify_identity(identity_id: IdentityId, n: int) -> IdentityReport:
    """Run one verifier; a raised error becomes a failed report.

    Args:
        identity_id: Which identity to check
        n: Order of the identity

    Returns:
        The verifier's report, or a FAIL report carrying the error
    """
    try:
        return VERIFIERS[identity_id](n)
    except Exception as e:
        logger.warning("identity_error", identity=identity_id.value, n=n, error=str(e))
        return IdentityReport.from_error(identity_id, n, expected_constant(identity_id, n), e)


def ordered(identities: Iterable[IdentityId]) -> list[IdentityId]:
    """Deduplicate and sort into declaration order."""
    members = list(IdentityId)
    return sorted(set(identities), key=members.index)


class VerificationOrchestrator:
    """Runs (identity, n) jobs on worker threads and reports them in a fixed order."""

    def __init__(self, workers: int | None = None) -> None:
        self.config = get_settings()
        self.workers = workers or self.config.workers

    async def verify(self, identity_id: IdentityId, n: int) -> IdentityReport:
        return await asyncio.to_thread(verify_identity, identity_id, n)

    async def stream(
        self, identities: Iterable[IdentityId], n_from: int, n_to: int
    ) -> AsyncIterator[IdentityReport]:
        """Yield reports sorted by identity then n, each as soon as its prefix is done.

        Args:
            identities: Identities to check; duplicates are dropped
            n_from: First n of the sweep
            n_to: Last n of the sweep, inclusive

        Yields:
            One IdentityReport per (identity, n) job
        """
        jobs = [(identity, n) for identity in ordered(identities) for n in range(n_from, n_to + 1)]
        semaphore = asyncio.Semaphore(self.workers)
        start_time = time.time()
        logger.info("sweep_started", jobs=len(jobs), n_from=n_from, n_to=n_to, workers=self.workers)

        async def run(identity: IdentityId, n: int) -> IdentityReport:
            async with semaphore:
                report = await self.verify(identity, n)
            logger.debug("identity_checked", identity=identity.value, n=n, passed=report.passed)
            return report

        tasks = [asyncio.create_task(run(identity, n)) for identity, n in jobs]
        failures = 0
        try:
            for task in tasks:
                report = await task
                failures += not report.passed
                yield report
        finally:
            for task in tasks:
                task.cancel()
        logger.info(
            "sweep_finished",
            jobs=len(jobs),
            failures=failures,
            elapsed_ms=int((time.time() - start_time) * 1000),
        )

    async def run(
        self, identities: Iterable[IdentityId], n_from: int, n_to: int
    ) -> list[IdentityReport]:
        """Collect a whole sweep; see :meth:`stream`."""
        return [report async for report in self.stream(identities, n_from, n_to)]

    async def series_check(self, kinds: Iterable[Kind], order: int) -> list[SeriesCheck]:
        """Generating-function check at ``order`` and derivative expansions for n <= order.

        Args:
            kinds: Families to check
            order: Truncation order M, at least 2

        Returns:
            Results per kind: the genfun check first, then expansions by n
        """
        jobs: list[tuple[str, Kind, int, Callable[[Kind, int], bool]]] = []
        for kind in kinds:
            jobs.append(("genfun", kind, order, verify_genfun))
            jobs.extend(
                ("derivative-expansion", kind, n, verify_derivative_expansion)
                for n in range(order + 1)
            )
        semaphore = asyncio.Semaphore(self.workers)

        async def run(
            check: str, kind: Kind, parameter: int, fn: Callable[[Kind, int], bool]
        ) -> SeriesCheck:
            async with semaphore:
                passed = await asyncio.to_thread(fn, kind, parameter)
            return SeriesCheck(check=check, kind=kind, parameter=parameter, passed=passed)

        results = await asyncio.gather(*(run(*job) for job in jobs))
        failures = sum(not r.passed for r in results)
        logger.info("series_checked", checks=len(results), failures=failures)
        return list(results)
