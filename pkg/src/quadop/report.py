"""PASS/FAIL case records and machine-readable verification reports."""

import json
from dataclasses import dataclass, field


class Report:
    """One named check: status PASS, FAIL, SKIPPED, or INFO."""

    def __init__(self, name, passed, details="", witness=None, status=None):
        self.name = name
        self.passed = passed
        self.status = status or ("PASS" if passed else "FAIL")
        self.details = details
        self.witness = witness

    def as_case(self):
        case = {"name": self.name, "status": self.status, "details": self.details}
        if self.witness is not None:
            case["witness"] = str(self.witness)
        return case

    def __repr__(self):
        return "[%s] %s%s" % (
            self.status,
            self.name,
            (" - " + self.details) if self.details else "",
        )


@dataclass
class VerificationReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    runtime_ms: int = 0

    def add(self, report):
        self.cases.append(report)

    def extend(self, reports):
        self.cases.extend(reports)

    @property
    def failed(self):
        return [c for c in self.cases if c.status == "FAIL"]

    @property
    def ok(self):
        return not self.failed

    def to_json(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "runtime_ms": self.runtime_ms,
            "cases": sorted(
                (c.as_case() for c in self.cases), key=lambda c: c["name"]
            ),
        }

    def dumps(self):
        return json.dumps(self.to_json(), ensure_ascii=False, sort_keys=True, indent=1)
