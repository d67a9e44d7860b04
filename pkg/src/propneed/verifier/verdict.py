from __future__ import annotations

import enum
from dataclasses import dataclass

from ..logic import Atom, Term


class Status(str, enum.Enum):
    VERIFIED = "verified"
    FAILED = "failed"


@dataclass(frozen=True)
class Countermodel:
    """Truth assignment over every atom plus the induced equality partition."""

    assignment: tuple[tuple[Atom, bool], ...]
    classes: tuple[tuple[Term, ...], ...]

    def value(self, atom: Atom) -> bool:
        return dict(self.assignment)[atom]

    @property
    def true_atoms(self) -> list[Atom]:
        return [a for a, v in self.assignment if v]

    def describe(self) -> list[str]:
        lines = ["true: " + " ".join(map(str, self.true_atoms))]
        merged = [c for c in self.classes if len(c) > 1]
        if merged:
            lines.append("classes: " + " ".join("{" + " ".join(map(str, c)) + "}" for c in merged))
        return lines


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Countermodel | None = None

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED

    @property
    def failed(self) -> bool:
        return self.status is Status.FAILED


VERIFIED = Verdict(Status.VERIFIED)


def make_classes(terms, find) -> tuple[tuple[Term, ...], ...]:
    """Group ``terms`` (already sorted) by representative, sorted by first member."""
    groups: dict[object, list[Term]] = {}
    for t in terms:
        groups.setdefault(find(t), []).append(t)
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda g: str(g[0])))
