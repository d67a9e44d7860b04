"""Domain model: constructors, property attachments, environments, items.

A :class:`Library` is the whole corpus under analysis.  Everything is
immutable; environment edits (:func:`detach`, :func:`attach`) return new
values.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Mapping

from .errors import AttachmentNotFound
from .logic import (
    And,
    App,
    Eq,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Pred,
    RESERVED,
    Term,
    Var,
    is_ground,
    symbols_of,
)


class Kind(str, enum.Enum):
    RELATION = "relation"
    FUNCTION = "function"


class PropertyKind(str, enum.Enum):
    """The nine constructor properties, in report order."""

    REFLEXIVITY = "reflexivity"
    SYMMETRY = "symmetry"
    ASYMMETRY = "asymmetry"
    CONNECTEDNESS = "connectedness"
    IRREFLEXIVITY = "irreflexivity"
    PROJECTIVITY = "projectivity"
    INVOLUTIVENESS = "involutiveness"
    IDEMPOTENCE = "idempotence"
    COMMUTATIVITY = "commutativity"

    @property
    def constructor_kind(self) -> Kind:
        return _SIGNATURE[self][0]

    @property
    def arity(self) -> int:
        return _SIGNATURE[self][1]

    def applies_to(self, decl: ConstructorDecl) -> bool:
        return (decl.kind, decl.arity) == _SIGNATURE[self]

    def __str__(self) -> str:
        return self.value


_SIGNATURE = {
    PropertyKind.REFLEXIVITY: (Kind.RELATION, 2),
    PropertyKind.SYMMETRY: (Kind.RELATION, 2),
    PropertyKind.ASYMMETRY: (Kind.RELATION, 2),
    PropertyKind.CONNECTEDNESS: (Kind.RELATION, 2),
    PropertyKind.IRREFLEXIVITY: (Kind.RELATION, 2),
    PropertyKind.PROJECTIVITY: (Kind.FUNCTION, 1),
    PropertyKind.INVOLUTIVENESS: (Kind.FUNCTION, 1),
    PropertyKind.IDEMPOTENCE: (Kind.FUNCTION, 2),
    PropertyKind.COMMUTATIVITY: (Kind.FUNCTION, 2),
}


@dataclass(frozen=True)
class ConstructorDecl:
    id: str
    kind: Kind
    arity: int


@dataclass(frozen=True, order=True)
class Attachment:
    constructor: str
    property: PropertyKind

    def sort_key(self) -> tuple[str, str]:
        return (self.constructor, self.property.value)

    def __str__(self) -> str:
        return f"({self.constructor} {self.property.value})"


@dataclass(frozen=True)
class Environment:
    attachments: frozenset[Attachment] = frozenset()

    @classmethod
    def of(cls, *pairs: tuple[str, PropertyKind | str]) -> Environment:
        return cls(frozenset(Attachment(c, PropertyKind(p)) for c, p in pairs))

    def restrict(self, constructors: Iterable[str]) -> Environment:
        keep = set(constructors)
        return Environment(frozenset(a for a in self.attachments if a.constructor in keep))

    def sorted(self) -> list[Attachment]:
        return sorted(self.attachments, key=Attachment.sort_key)

    def __contains__(self, att: Attachment) -> bool:
        return att in self.attachments

    def __len__(self) -> int:
        return len(self.attachments)

    def __iter__(self):
        return iter(self.sorted())


@dataclass(frozen=True)
class Item:
    id: str
    goal: Formula
    imports: frozenset[str] = frozenset()
    premises: tuple[Formula, ...] = ()
    uses: frozenset[str] = frozenset()

    @property
    def statement(self) -> Formula:
        """What other items may cite: the goal this item establishes."""
        return self.goal


@dataclass(frozen=True)
class Library:
    constructors: Mapping[str, ConstructorDecl] = field(default_factory=dict)
    constants: frozenset[str] = frozenset()
    environment: Environment = Environment()
    items: tuple[Item, ...] = ()

    def item(self, item_id: str) -> Item:
        for it in self.items:
            if it.id == item_id:
                return it
        raise KeyError(item_id)

    def item_ids(self) -> list[str]:
        return [it.id for it in self.items]


@dataclass(frozen=True)
class Diagnostic:
    subject: str
    reason: str

    def __str__(self) -> str:
        return f"{self.subject}: {self.reason}"


# ---------------------------------------------------------------------------
# property schemas


@dataclass(frozen=True)
class PropertySchema:
    """A universally quantified axiom with one constructor metavariable.

    ``symbol`` is the metavariable (``R`` for relations, ``f``/``g`` for
    unary/binary functions) and ``variables`` are the bound variables, in
    quantifier order.
    """

    kind: PropertyKind
    symbol: str
    variables: tuple[str, ...]
    body: Formula

    def instantiate(self, constructor: str, values: tuple[Term, ...]) -> Formula:
        if len(values) != len(self.variables):
            raise ValueError(f"{self.kind} takes {len(self.variables)} terms")
        env = dict(zip(self.variables, values))
        return _subst_formula(self.body, self.symbol, constructor, env)

    def __str__(self) -> str:
        quants = " ".join(f"∀{v}" for v in self.variables)
        return f"{quants} [{_render(self.body)}]"


def _subst_term(t: Term, sym: str, ctor: str, env: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return env[t.name]
    head = ctor if t.head == sym else t.head
    return App(head, tuple(_subst_term(a, sym, ctor, env) for a in t.args))


def _subst_formula(f: Formula, sym: str, ctor: str, env: dict[str, Term]) -> Formula:
    if isinstance(f, Pred):
        rel = ctor if f.rel == sym else f.rel
        return Pred(rel, tuple(_subst_term(a, sym, ctor, env) for a in f.args))
    if isinstance(f, Eq):
        return Eq(_subst_term(f.lhs, sym, ctor, env), _subst_term(f.rhs, sym, ctor, env))
    if isinstance(f, Not):
        return Not(_subst_formula(f.arg, sym, ctor, env))
    if isinstance(f, (And, Or)):
        return type(f)(tuple(_subst_formula(g, sym, ctor, env) for g in f.args))
    return type(f)(_subst_formula(f.lhs, sym, ctor, env), _subst_formula(f.rhs, sym, ctor, env))


def _render_term(t: Term) -> str:
    if isinstance(t, Var) or not t.args:
        return str(t)
    return f"{t.head}({','.join(map(_render_term, t.args))})"


def _render(f: Formula) -> str:
    if isinstance(f, Pred):
        return f"{f.rel}({','.join(map(_render_term, f.args))})"
    if isinstance(f, Eq):
        return f"{_render_term(f.lhs)} = {_render_term(f.rhs)}"
    if isinstance(f, Not):
        return "¬" + _render(f.arg)
    if isinstance(f, Implies):
        return f"{_render(f.lhs)} → {_render(f.rhs)}"
    if isinstance(f, Or):
        return " ∨ ".join(map(_render, f.args))
    if isinstance(f, And):
        return " ∧ ".join(map(_render, f.args))
    return f"{_render(f.lhs)} ↔ {_render(f.rhs)}"


_x, _y = Var("x"), Var("y")


def _R(a: Term, b: Term) -> Pred:
    return Pred("R", (a, b))


def _f(a: Term) -> App:
    return App("f", (a,))


def _g(a: Term, b: Term) -> App:
    return App("g", (a, b))


_SCHEMAS = {
    PropertyKind.REFLEXIVITY: PropertySchema(PropertyKind.REFLEXIVITY, "R", ("x",), _R(_x, _x)),
    PropertyKind.SYMMETRY: PropertySchema(
        PropertyKind.SYMMETRY, "R", ("x", "y"), Implies(_R(_x, _y), _R(_y, _x))
    ),
    PropertyKind.ASYMMETRY: PropertySchema(
        PropertyKind.ASYMMETRY, "R", ("x", "y"), Implies(_R(_x, _y), Not(_R(_y, _x)))
    ),
    PropertyKind.CONNECTEDNESS: PropertySchema(
        PropertyKind.CONNECTEDNESS, "R", ("x", "y"), Or((_R(_x, _y), _R(_y, _x)))
    ),
    PropertyKind.IRREFLEXIVITY: PropertySchema(
        PropertyKind.IRREFLEXIVITY, "R", ("x",), Not(_R(_x, _x))
    ),
    PropertyKind.PROJECTIVITY: PropertySchema(
        PropertyKind.PROJECTIVITY, "f", ("x",), Eq(_f(_f(_x)), _f(_x))
    ),
    PropertyKind.INVOLUTIVENESS: PropertySchema(
        PropertyKind.INVOLUTIVENESS, "f", ("x",), Eq(_f(_f(_x)), _x)
    ),
    PropertyKind.IDEMPOTENCE: PropertySchema(
        PropertyKind.IDEMPOTENCE, "g", ("x",), Eq(_g(_x, _x), _x)
    ),
    PropertyKind.COMMUTATIVITY: PropertySchema(
        PropertyKind.COMMUTATIVITY, "g", ("x", "y"), Eq(_g(_x, _y), _g(_y, _x))
    ),
}


def property_schema(kind: PropertyKind | str) -> PropertySchema:
    return _SCHEMAS[PropertyKind(kind)]


# ---------------------------------------------------------------------------
# environment editing


def detach(env: Environment, constructor: str, prop: PropertyKind | str) -> Environment:
    att = Attachment(constructor, PropertyKind(prop))
    if att not in env.attachments:
        raise AttachmentNotFound(constructor, str(PropertyKind(prop)))
    return Environment(env.attachments - {att})


def attach(env: Environment, constructor: str, prop: PropertyKind | str) -> Environment:
    return Environment(env.attachments | {Attachment(constructor, PropertyKind(prop))})


# ---------------------------------------------------------------------------
# validation


def _check_formula(
    f: Formula, lib: Library, subject: str, imports: frozenset[str]
) -> list[Diagnostic]:
    out = []
    if not is_ground(f):
        out.append(Diagnostic(subject, f"formula {f} is not ground"))
    for role, name, arity in symbols_of(f):
        decl = lib.constructors.get(name)
        if role == "fun" and arity == 0:
            if name in lib.constants:
                continue
            if decl is not None:
                out.append(Diagnostic(subject, f"constructor {name} used as a constant"))
            else:
                out.append(Diagnostic(subject, f"undeclared symbol {name}"))
            continue
        want = Kind.RELATION if role == "rel" else Kind.FUNCTION
        if decl is None:
            out.append(Diagnostic(subject, f"undeclared symbol {name}"))
        elif decl.kind is not want:
            out.append(Diagnostic(subject, f"{decl.kind.value} {name} used as a {want.value}"))
        elif decl.arity != arity:
            out.append(Diagnostic(subject, f"{name} expects {decl.arity} arguments, got {arity}"))
        elif name not in imports:
            out.append(Diagnostic(subject, f"constructor {name} not imported"))
    return out


def _dedup(diags: list[Diagnostic]) -> list[Diagnostic]:
    return list(dict.fromkeys(diags))


def validate_library(lib: Library) -> list[Diagnostic]:
    """Return every invariant violation; an empty list means the library is ok."""
    diags: list[Diagnostic] = []
    for cid, decl in lib.constructors.items():
        if cid != decl.id:
            diags.append(Diagnostic(cid, f"registered under mismatched id {decl.id}"))
        if decl.arity not in (1, 2):
            diags.append(Diagnostic(cid, f"arity {decl.arity} not supported"))
        if cid in RESERVED:
            diags.append(Diagnostic(cid, "reserved word used as constructor"))
        if cid in lib.constants:
            diags.append(Diagnostic(cid, "declared both as constant and constructor"))
    for c in sorted(lib.constants):
        if c in RESERVED:
            diags.append(Diagnostic(c, "reserved word used as constant"))

    for att in lib.environment.sorted():
        decl = lib.constructors.get(att.constructor)
        if decl is None:
            diags.append(Diagnostic(str(att), "undeclared constructor"))
        elif not att.property.applies_to(decl):
            diags.append(Diagnostic(str(att), "property/kind mismatch"))

    seen: set[str] = set()
    ids = {it.id for it in lib.items}
    for it in lib.items:
        if it.id in seen:
            diags.append(Diagnostic(it.id, "duplicate item"))
        seen.add(it.id)
        for imp in sorted(it.imports):
            if imp not in lib.constructors:
                diags.append(Diagnostic(it.id, f"unknown import {imp}"))
        for f in (*it.premises, it.goal):
            diags.extend(_check_formula(f, lib, it.id, it.imports))
        if it.id in it.uses:
            diags.append(Diagnostic(it.id, "uses itself"))
        for u in sorted(it.uses):
            if u not in ids:
                diags.append(Diagnostic(it.id, f"uses unknown item {u}"))

    graph = {it.id: {u for u in it.uses if u in ids and u != it.id} for it in lib.items}
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        cycle = list(dict.fromkeys(exc.args[1]))
        k = cycle.index(min(cycle))
        cycle = cycle[k:] + cycle[:k]
        diags.append(Diagnostic(cycle[0], "cycle: " + ",".join(cycle)))
    return _dedup(diags)
