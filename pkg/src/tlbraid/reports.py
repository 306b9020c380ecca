"""Relation-check reports shared by the verification suites.

JSON shape: ``{"relations": [{"relation_name", "max_residual", "pass"}, ...],
"pass": bool}``.  Grid sweeps aggregate many instances of the same relation
into one entry (max residual wins); `instances` and `worst_at` record how
many were folded in and where the worst residual occurred.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RelationCheck:
    name: str
    residual: float
    passed: bool
    instances: int = 1
    worst_at: str = ""

    def to_json(self) -> dict:
        out = {
            "relation_name": self.name,
            "max_residual": self.residual,
            "pass": self.passed,
        }
        if self.instances != 1:
            out["instances"] = self.instances
        if self.worst_at:
            out["worst_at"] = self.worst_at
        return out


@dataclass(frozen=True)
class RelationReport:
    checks: tuple[RelationCheck, ...]
    tol: float
    applicable: bool = True
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        out = {
            "relations": [c.to_json() for c in self.checks],
            "pass": self.passed,
            "tol": self.tol,
        }
        if not self.applicable:
            out["applicable"] = False
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_residuals(cls, named: list[tuple[str, float]], tol: float,
                       note: str = "") -> "RelationReport":
        checks = tuple(
            RelationCheck(name, float(r), float(r) <= tol) for name, r in named
        )
        return cls(checks=checks, tol=tol, note=note)


class ReportAccumulator:
    """Folds per-point relation residuals into a grid-level RelationReport."""

    def __init__(self, tol: float):
        self.tol = tol
        self._worst: dict[str, tuple[float, str]] = {}
        self._counts: dict[str, int] = {}
        self.points = 0

    def add(self, name: str, residual: float, where: str) -> None:
        residual = float(residual)
        self._counts[name] = self._counts.get(name, 0) + 1
        if name not in self._worst or residual > self._worst[name][0]:
            self._worst[name] = (residual, where)

    def add_point(self) -> None:
        self.points += 1

    def report(self, note: str = "") -> RelationReport:
        checks = tuple(
            RelationCheck(
                name,
                residual,
                residual <= self.tol,
                instances=self._counts[name],
                worst_at=where,
            )
            for name, (residual, where) in sorted(self._worst.items())
        )
        return RelationReport(checks=checks, tol=self.tol, note=note)
