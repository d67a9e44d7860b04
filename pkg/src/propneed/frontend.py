"""Reading and writing the corpus format.

The format is a sequence of parenthesized forms::

    ; comment to end of line
    (constant a)
    (constructor lt :kind relation :arity 2)
    (attach lt irreflexivity)
    (item th1 :imports (lt) :premises ((lt a b)) :goal (not (lt b a)) :uses ())

Form order does not matter except that items keep their order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .corpus import (
    Attachment,
    ConstructorDecl,
    Diagnostic,
    Environment,
    Item,
    Kind,
    Library,
    PropertyKind,
    validate_library,
)
from .errors import ParseError, ValidationError
from .logic import CONNECTIVES, And, App, Eq, Formula, Iff, Implies, Not, Or, Pred, Term

_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


@dataclass
class Sym:
    text: str
    line: int
    col: int


@dataclass
class SList:
    items: list
    line: int
    col: int


Node = Union[Sym, SList]


def read_sexprs(text: str) -> list[Node]:
    """Tokenize and read all top-level s-expressions, with positions."""
    stack: list[SList] = [SList([], 0, 0)]
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        tok = m.group()
        col = pos - line_start + 1
        if tok == "(":
            stack.append(SList([], line, col))
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unexpected ')'", line, col)
            done = stack.pop()
            stack[-1].items.append(done)
        elif tok[0].isspace() or tok[0] == ";":
            nl = tok.count("\n")
            if nl:
                line += nl
                line_start = pos + tok.rindex("\n") + 1
        else:
            stack[-1].items.append(Sym(tok, line, col))
        pos = m.end()
    if len(stack) > 1:
        open_ = stack[-1]
        raise ParseError("unbalanced '(' (missing ')')", open_.line, open_.col)
    return stack[0].items


def _where(node: Node) -> tuple[int, int]:
    return node.line, node.col


def _name(node: Node, what: str) -> str:
    if not isinstance(node, Sym):
        raise ParseError(f"expected {what}, got a list", *_where(node))
    if node.text.startswith(":"):
        raise ParseError(f"expected {what}, got keyword {node.text}", *_where(node))
    return node.text


def _term(node: Node) -> Term:
    if isinstance(node, Sym):
        return App(_name(node, "term"))
    if not node.items:
        raise ParseError("empty term", *_where(node))
    head = _name(node.items[0], "function symbol")
    if head in CONNECTIVES or head == "=":
        raise ParseError(f"'{head}' cannot head a term", *_where(node))
    return App(head, tuple(_term(a) for a in node.items[1:]))


def _formula(node: Node) -> Formula:
    if not isinstance(node, SList):
        raise ParseError(f"expected a formula, got {node.text}", *_where(node))
    if not node.items:
        raise ParseError("empty formula", *_where(node))
    head = _name(node.items[0], "formula head")
    args = node.items[1:]

    def arity(n: int) -> None:
        if len(args) != n:
            raise ParseError(f"'{head}' takes {n} arguments, got {len(args)}", *_where(node))

    if head == "=":
        arity(2)
        return Eq(_term(args[0]), _term(args[1]))
    if head == "not":
        arity(1)
        return Not(_formula(args[0]))
    if head in ("and", "or"):
        if not args:
            raise ParseError(f"'{head}' needs at least one argument", *_where(node))
        return (And if head == "and" else Or)(tuple(_formula(a) for a in args))
    if head in ("implies", "iff"):
        arity(2)
        return (Implies if head == "implies" else Iff)(_formula(args[0]), _formula(args[1]))
    return Pred(head, tuple(_term(a) for a in args))


def _keywords(node: SList, start: int, allowed: tuple[str, ...]) -> dict[str, Node]:
    out: dict[str, Node] = {}
    rest = node.items[start:]
    if len(rest) % 2:
        raise ParseError("keyword without value", *_where(rest[-1]))
    for key, val in zip(rest[::2], rest[1::2]):
        if not isinstance(key, Sym) or not key.text.startswith(":"):
            raise ParseError("expected a keyword", *_where(key))
        k = key.text[1:]
        if k not in allowed:
            raise ParseError(f"unknown keyword :{k}", *_where(key))
        if k in out:
            raise ParseError(f"repeated keyword :{k}", *_where(key))
        out[k] = val
    missing = [k for k in allowed if k not in out]
    if missing:
        raise ParseError(f"missing :{missing[0]}", *_where(node))
    return out


def _name_list(node: Node, what: str) -> list[str]:
    if not isinstance(node, SList):
        raise ParseError(f"expected a list of {what}", *_where(node))
    return [_name(n, what) for n in node.items]


def parse_library(text: str | bytes) -> Library:
    """Parse and validate a corpus.

    Raises :class:`ParseError` on syntax errors and :class:`ValidationError`
    carrying every diagnostic when the parsed library is ill-formed.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None

    constants: set[str] = set()
    constructors: dict[str, ConstructorDecl] = {}
    attachments: set[Attachment] = set()
    items: list[Item] = []
    diags: list[Diagnostic] = []

    for form in read_sexprs(text):
        if not isinstance(form, SList) or not form.items:
            raise ParseError("expected a top-level form", *_where(form))
        head = _name(form.items[0], "form name")
        if head == "constant":
            if len(form.items) != 2:
                raise ParseError("(constant NAME) takes one name", *_where(form))
            name = _name(form.items[1], "constant name")
            if name in constants:
                diags.append(Diagnostic(name, "duplicate constant"))
            constants.add(name)
        elif head == "constructor":
            if len(form.items) < 2:
                raise ParseError("constructor needs a name", *_where(form))
            name = _name(form.items[1], "constructor name")
            kw = _keywords(form, 2, ("kind", "arity"))
            kind_text = _name(kw["kind"], "kind")
            try:
                kind = Kind(kind_text)
            except ValueError:
                raise ParseError(f"unknown kind {kind_text}", *_where(kw["kind"])) from None
            arity_text = _name(kw["arity"], "arity")
            if not arity_text.isdigit():
                raise ParseError(f"arity must be a number, got {arity_text}", *_where(kw["arity"]))
            if name in constructors:
                diags.append(Diagnostic(name, "duplicate constructor"))
            constructors[name] = ConstructorDecl(name, kind, int(arity_text))
        elif head == "attach":
            if len(form.items) != 3:
                raise ParseError("(attach NAME PROPERTY) takes two names", *_where(form))
            name = _name(form.items[1], "constructor name")
            prop_text = _name(form.items[2], "property")
            try:
                prop = PropertyKind(prop_text)
            except ValueError:
                raise ParseError(f"unknown property {prop_text}", *_where(form.items[2])) from None
            att = Attachment(name, prop)
            if att in attachments:
                diags.append(Diagnostic(str(att), "duplicate attachment"))
            attachments.add(att)
        elif head == "item":
            if len(form.items) < 2:
                raise ParseError("item needs a name", *_where(form))
            name = _name(form.items[1], "item name")
            kw = _keywords(form, 2, ("imports", "premises", "goal", "uses"))
            prem = kw["premises"]
            if not isinstance(prem, SList):
                raise ParseError("expected a list of premises", *_where(prem))
            items.append(
                Item(
                    id=name,
                    goal=_formula(kw["goal"]),
                    imports=frozenset(_name_list(kw["imports"], "constructor name")),
                    premises=tuple(_formula(p) for p in prem.items),
                    uses=frozenset(_name_list(kw["uses"], "item name")),
                )
            )
        else:
            raise ParseError(f"unknown form '{head}'", *_where(form))

    lib = Library(
        constructors=dict(sorted(constructors.items())),
        constants=frozenset(constants),
        environment=Environment(frozenset(attachments)),
        items=tuple(items),
    )
    diags.extend(validate_library(lib))
    if diags:
        raise ValidationError(diags)
    return lib


def serialize_library(lib: Library) -> str:
    """Canonical text for ``lib``; one form per line, newline-terminated."""
    lines = [f"(constant {c})" for c in sorted(lib.constants)]
    for cid in sorted(lib.constructors):
        d = lib.constructors[cid]
        lines.append(f"(constructor {cid} :kind {d.kind.value} :arity {d.arity})")
    lines.extend(f"(attach {a.constructor} {a.property.value})" for a in lib.environment.sorted())
    for it in lib.items:
        lines.append(
            f"(item {it.id}\n"
            f"  :imports ({' '.join(sorted(it.imports))})\n"
            f"  :premises ({' '.join(map(str, it.premises))})\n"
            f"  :goal {it.goal}\n"
            f"  :uses ({' '.join(sorted(it.uses))}))"
        )
    return "".join(line + "\n" for line in lines)
