"""Clausal form by negation pushing and distribution (no fresh atoms).

Literals are nonzero ints: ``k + 1`` for atom ``k`` true, ``-(k + 1)`` for
false.  Tautological clauses are dropped.
"""
from __future__ import annotations

from ..logic import And, Eq, Formula, Iff, Implies, Not, Or, Pred

Clause = frozenset


def _product(a: list[Clause], b: list[Clause]) -> list[Clause]:
    out = []
    for x in a:
        for y in b:
            c = x | y
            if not any(-lit in c for lit in c):
                out.append(c)
    return out


def _disjoin(parts: list[list[Clause]]) -> list[Clause]:
    acc: list[Clause] = [frozenset()]
    for p in parts:
        acc = _product(acc, p)
    return acc


def to_cnf(f: Formula, index: dict, positive: bool = True) -> list[Clause]:
    if isinstance(f, (Pred, Eq)):
        k = index[f] + 1
        return [frozenset({k if positive else -k})]
    if isinstance(f, Not):
        return to_cnf(f.arg, index, not positive)
    if isinstance(f, (And, Or)):
        parts = [to_cnf(g, index, positive) for g in f.args]
        if isinstance(f, And) == positive:
            return [c for p in parts for c in p]
        return _disjoin(parts)
    a_pos, a_neg = (lambda: to_cnf(f.lhs, index, True)), (lambda: to_cnf(f.lhs, index, False))
    b_pos, b_neg = (lambda: to_cnf(f.rhs, index, True)), (lambda: to_cnf(f.rhs, index, False))
    if isinstance(f, Implies):
        if positive:
            return _disjoin([a_neg(), b_pos()])
        return a_pos() + b_neg()
    if positive:
        return _disjoin([a_neg(), b_pos()]) + _disjoin([a_pos(), b_neg()])
    return _disjoin([a_pos(), b_pos()]) + _disjoin([a_neg(), b_neg()])


def clauses_of(formulas, index: dict) -> list[tuple[int, ...]]:
    """CNF of the conjunction of ``formulas``, deduplicated, in stable order."""
    seen: dict[Clause, None] = {}
    for f in formulas:
        for c in to_cnf(f, index):
            seen.setdefault(c, None)
    return [tuple(sorted(c, key=abs)) for c in seen]
