import logging
import time
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass, field

from fastapi import Request

logger = logging.getLogger("xmin.observability")


@dataclass
class RouteMetric:
    requests: int = 0
    server_errors: int = 0
    total_latency_ms: float = 0.0


@dataclass
class SuiteMetric:
    runs: int = 0
    checks: int = 0
    discrepancies: int = 0
    total_elapsed_ms: float = 0.0


@dataclass
class MetricsState:
    total_requests: int = 0
    server_errors: int = 0
    started_at: float = field(default_factory=time.time)
    per_route: dict[str, RouteMetric] = field(default_factory=lambda: defaultdict(RouteMetric))
    per_suite: dict[str, SuiteMetric] = field(default_factory=lambda: defaultdict(SuiteMetric))


class SuiteTracker:
    def __init__(self):
        self.checks = 0
        self.discrepancies = 0

    def record(self, checks: int, discrepancies: int) -> None:
        self.checks += checks
        self.discrepancies += discrepancies


class Observability:
    def __init__(self):
        self.state = MetricsState()

    async def track_request(self, request: Request, call_next):
        route_key = f"{request.method} {request.url.path}"
        started = time.perf_counter()
        status_code = 500

        try:
            response = await call_next(request)
            status_code = response.status_code
            return response
        finally:
            elapsed_ms = (time.perf_counter() - started) * 1000
            self.state.total_requests += 1

            route_metric = self.state.per_route[route_key]
            route_metric.requests += 1
            route_metric.total_latency_ms += elapsed_ms

            if status_code >= 500:
                self.state.server_errors += 1
                route_metric.server_errors += 1

    @contextmanager
    def track_suite(self, suite: str):
        tracker = SuiteTracker()
        started = time.perf_counter()
        logger.info("suite %s started", suite, extra={"suite": suite})
        try:
            yield tracker
        finally:
            elapsed_ms = (time.perf_counter() - started) * 1000
            metric = self.state.per_suite[suite]
            metric.runs += 1
            metric.checks += tracker.checks
            metric.discrepancies += tracker.discrepancies
            metric.total_elapsed_ms += elapsed_ms
            logger.info(
                "suite %s finished: checks=%d discrepancies=%d elapsed_ms=%.1f",
                suite,
                tracker.checks,
                tracker.discrepancies,
                elapsed_ms,
                extra={"suite": suite},
            )

    def error_rate_percent(self) -> float:
        if self.state.total_requests == 0:
            return 0.0
        return (self.state.server_errors / self.state.total_requests) * 100.0

    def snapshot(self) -> dict:
        routes = {}
        for route, metric in self.state.per_route.items():
            avg_latency = metric.total_latency_ms / metric.requests if metric.requests else 0.0
            routes[route] = {
                "requests": metric.requests,
                "server_errors": metric.server_errors,
                "avg_latency_ms": round(avg_latency, 2),
            }

        suites = {}
        for suite, metric in self.state.per_suite.items():
            avg_elapsed = metric.total_elapsed_ms / metric.runs if metric.runs else 0.0
            suites[suite] = {
                "runs": metric.runs,
                "checks": metric.checks,
                "discrepancies": metric.discrepancies,
                "avg_elapsed_ms": round(avg_elapsed, 2),
            }

        uptime_seconds = int(time.time() - self.state.started_at)
        return {
            "uptime_seconds": uptime_seconds,
            "total_requests": self.state.total_requests,
            "server_errors": self.state.server_errors,
            "error_rate_percent": round(self.error_rate_percent(), 4),
            "routes": routes,
            "suites": suites,
        }


observability = Observability()
