from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

from app import __version__


class CheckStatus(str, Enum):
    passed = "pass"
    discrepancy = "discrepancy"
    undecided = "undecided"


class Check(BaseModel):
    name: str
    anchor: str
    expected: Any = None
    computed: Any = None
    status: CheckStatus
    known: bool = False
    corrected: Any = None
    note: str | None = None

    @property
    def is_discrepancy(self) -> bool:
        return self.status == CheckStatus.discrepancy


class ReportSummary(BaseModel):
    checks: int
    passed: int
    discrepancies: int
    undecided: int
    known_discrepancies: int
    unexpected_discrepancies: int


class VerificationReport(BaseModel):
    suite: str
    tool_version: str = __version__
    seed: int | None = None
    samples: int | None = None
    checks: list[Check] = Field(default_factory=list)

    def summary(self) -> ReportSummary:
        discrepancies = [check for check in self.checks if check.is_discrepancy]
        known = sum(1 for check in discrepancies if check.known)
        return ReportSummary(
            checks=len(self.checks),
            passed=sum(1 for check in self.checks if check.status == CheckStatus.passed),
            discrepancies=len(discrepancies),
            undecided=sum(1 for check in self.checks if check.status == CheckStatus.undecided),
            known_discrepancies=known,
            unexpected_discrepancies=len(discrepancies) - known,
        )

    @property
    def ok(self) -> bool:
        return not any(check.is_discrepancy and not check.known for check in self.checks)

    def get(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


class VerificationResponse(BaseModel):
    report: VerificationReport
    summary: ReportSummary
