"""Check reports shared by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"


@dataclass
class CheckResult:
    check: str
    instance: str
    status: str
    certificate: Optional[Any] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = {"check": self.check, "instance": self.instance, "status": self.status}
        if self.certificate is not None:
            d["certificate"] = self.certificate
        return d


@dataclass
class Report:
    entries: list[CheckResult] = field(default_factory=list)

    def add(self, check: str, instance: str, ok: bool, certificate: Any = None,
            keep_on_pass: bool = False) -> CheckResult:
        """Certificates are failure evidence and dropped on a pass unless ``keep_on_pass``."""
        entry = CheckResult(check, instance, PASS if ok else FAIL, certificate if keep_on_pass or not ok else None)
        self.entries.append(entry)
        return entry

    def extend(self, other: "Report") -> "Report":
        self.entries.extend(other.entries)
        return self

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.passed]

    def __len__(self) -> int:
        return len(self.entries)

    def to_list(self) -> list[dict]:
        return [e.to_dict() for e in self.entries]
