"""Structured pass/fail reports shared by the law suites and the CLI.

Reports are deterministic: entries appear in the order they were added and
carry no timestamps, so identical runs produce byte-identical text.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    instances: int
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{self.name:<52} instances={self.instances:<6} {status}"
        if self.witness is not None:
            out += f"\n    witness: {self.witness}"
        return out


@dataclass
class Report:
    title: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, instances: int, passed: bool, witness: str | None = None) -> None:
        self.results.append(CheckResult(name, instances, passed, witness))

    def extend(self, other: "Report") -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def text(self) -> str:
        lines = [f"== {self.title} =="]
        lines.extend(r.line() for r in self.results)
        lines.append(f"-- checks={len(self.results)} failures={len(self.failures)}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "results": [
                {
                    "name": r.name,
                    "instances": r.instances,
                    "passed": r.passed,
                    "witness": r.witness,
                }
                for r in self.results
            ],
        }
