"""Check records with line-oriented text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class Record:
    relation: str
    indices: str
    verdict: bool
    lhs: str = ""
    rhs: str = ""

    def line(self) -> str:
        tag = "PASS" if self.verdict else "FAIL"
        head = f"{tag} {self.relation}" + (f" [{self.indices}]" if self.indices else "")
        if self.verdict:
            return head
        return f"{head}\n    lhs: {self.lhs}\n    rhs: {self.rhs}"


@dataclass
class Report:
    title: str = ""
    records: list[Record] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, relation: str, indices: str, verdict: bool, lhs="", rhs="") -> bool:
        verdict = bool(verdict)
        self.records.append(Record(relation, indices, verdict, str(lhs), str(rhs)))
        return verdict

    def check_equal(self, relation: str, indices: str, lhs, rhs) -> bool:
        return self.add(relation, indices, lhs == rhs, lhs, rhs)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for r in other.records:
            self.records.append(Record(prefix + r.relation, r.indices, r.verdict, r.lhs, r.rhs))
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(r.verdict for r in self.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.verdict]

    def count(self, relation: str) -> int:
        return sum(1 for r in self.records if r.relation == relation)

    def by_relation(self, relation: str) -> list[Record]:
        return [r for r in self.records if r.relation == relation]

    def to_text(self, verbose: bool = True) -> str:
        lines = []
        if self.title:
            lines.append(f"# {self.title}")
        for r in self.records:
            if verbose or not r.verdict:
                lines.append(r.line())
        for n in self.notes:
            lines.append(f"note: {n}")
        n_fail = len(self.failures)
        lines.append(f"{len(self.records) - n_fail}/{len(self.records)} passed")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "title": self.title,
            "passed": self.passed,
            "records": [dict(asdict(r), verdict="PASS" if r.verdict else "FAIL") for r in self.records],
            "notes": self.notes,
        }, indent=2)

    def __str__(self) -> str:
        return self.to_text()
