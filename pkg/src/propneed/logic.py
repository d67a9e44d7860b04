"""Ground terms and formulas.

Everything here is an immutable value; the printed form (``str``) is the
s-expression used by the corpus format and doubles as the canonical sort
key for atoms and terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Var:
    """Bound variable; only occurs inside property schemas."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    """Function application; a constant is an application with no args."""

    head: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.head
        return "(" + " ".join([self.head, *map(str, self.args)]) + ")"


Term = Union[Var, App]


@dataclass(frozen=True)
class Pred:
    rel: str
    args: tuple[Term, ...]

    def __str__(self) -> str:
        return "(" + " ".join([self.rel, *map(str, self.args)]) + ")"


@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"(= {self.lhs} {self.rhs})"


@dataclass(frozen=True)
class Not:
    arg: Formula

    def __str__(self) -> str:
        return f"(not {self.arg})"


@dataclass(frozen=True)
class And:
    args: tuple[Formula, ...]

    def __str__(self) -> str:
        return "(and " + " ".join(map(str, self.args)) + ")"


@dataclass(frozen=True)
class Or:
    args: tuple[Formula, ...]

    def __str__(self) -> str:
        return "(or " + " ".join(map(str, self.args)) + ")"


@dataclass(frozen=True)
class Implies:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return f"(implies {self.lhs} {self.rhs})"


@dataclass(frozen=True)
class Iff:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return f"(iff {self.lhs} {self.rhs})"


Atom = Union[Pred, Eq]
Formula = Union[Pred, Eq, Not, And, Or, Implies, Iff]

CONNECTIVES = frozenset({"not", "and", "or", "implies", "iff"})
RESERVED = CONNECTIVES | {"="}


def const(name: str) -> App:
    return App(name)


def subterms(t: Term) -> Iterator[Term]:
    """Yield ``t`` and all of its subterms, children before parents."""
    if isinstance(t, App):
        for a in t.args:
            yield from subterms(a)
    yield t


def atoms_of(f: Formula) -> Iterator[Atom]:
    if isinstance(f, (Pred, Eq)):
        yield f
    elif isinstance(f, Not):
        yield from atoms_of(f.arg)
    elif isinstance(f, (And, Or)):
        for g in f.args:
            yield from atoms_of(g)
    else:
        yield from atoms_of(f.lhs)
        yield from atoms_of(f.rhs)


def atom_args(a: Atom) -> tuple[Term, ...]:
    return a.args if isinstance(a, Pred) else (a.lhs, a.rhs)


def terms_of(f: Formula) -> Iterator[Term]:
    """All subterm occurrences of ``f`` (with repetition)."""
    for a in atoms_of(f):
        for t in atom_args(a):
            yield from subterms(t)


def symbols_of(f: Formula) -> Iterator[tuple[str, str, int]]:
    """Yield ``(role, name, arity)`` for every symbol occurrence.

    ``role`` is ``"rel"`` for predicate heads and ``"fun"`` for term heads
    (constants are ``"fun"`` with arity 0).
    """
    for a in atoms_of(f):
        if isinstance(a, Pred):
            yield "rel", a.rel, len(a.args)
        for t in atom_args(a):
            for s in subterms(t):
                if isinstance(s, App):
                    yield "fun", s.head, len(s.args)


def evaluate(f: Formula, value) -> bool:
    """Evaluate ``f`` given a callable mapping atoms to truth values."""
    if isinstance(f, (Pred, Eq)):
        return bool(value(f))
    if isinstance(f, Not):
        return not evaluate(f.arg, value)
    if isinstance(f, And):
        return all(evaluate(g, value) for g in f.args)
    if isinstance(f, Or):
        return any(evaluate(g, value) for g in f.args)
    if isinstance(f, Implies):
        return (not evaluate(f.lhs, value)) or evaluate(f.rhs, value)
    return evaluate(f.lhs, value) == evaluate(f.rhs, value)


def is_ground(f: Formula) -> bool:
    return not any(isinstance(t, Var) for t in terms_of(f))
