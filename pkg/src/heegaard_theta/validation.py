from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    rule: str
    entity: str
    message: str

    def format(self) -> str:
        return f"[{self.rule}] {self.entity}: {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def add(self, rule: str, entity: str, message: str) -> None:
        self.violations.append(Violation(rule, entity, message))

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def format(self) -> str:
        if self.ok:
            return "pass"
        return "\n".join(["fail"] + ["  " + v.format() for v in self.violations])

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "violations": [
                {"rule": v.rule, "entity": v.entity, "message": v.message}
                for v in self.violations
            ],
        }
