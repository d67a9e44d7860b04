"""Verification problems, term universes and axiom instantiation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..corpus import Environment, Item, Library, property_schema
from ..errors import BudgetExceeded, MalformedItem
from ..logic import Atom, Eq, Formula, Not, Term, atom_args, atoms_of, subterms

DEFAULT_BUDGET = 50_000


@dataclass(frozen=True)
class Problem:
    premises: tuple[Formula, ...]
    goal: Formula
    env: Environment = Environment()


@dataclass(frozen=True)
class TermUniverse:
    terms: tuple[Term, ...]
    atoms: tuple[Atom, ...] = ()


@dataclass(frozen=True)
class GroundProblem:
    """A problem after one round of axiom instantiation.

    ``formulas`` must be jointly unsatisfiable for the goal to verify; the
    last one is always the negated goal.  ``atoms`` and ``terms`` are sorted
    by printed form and cover everything occurring in ``formulas``.
    """

    problem: Problem
    axioms: tuple[Formula, ...]
    formulas: tuple[Formula, ...]
    atoms: tuple[Atom, ...]
    terms: tuple[Term, ...] = field(repr=False)


def _by_print(xs) -> tuple:
    return tuple(sorted(set(xs), key=str))


def _atoms(formulas) -> tuple[Atom, ...]:
    return _by_print(a for f in formulas for a in atoms_of(f))


def _terms(atoms) -> tuple[Term, ...]:
    return _by_print(s for a in atoms for t in atom_args(a) for s in subterms(t))


def term_universe(p: Problem) -> TermUniverse:
    """Subterm-closed set of terms occurring in the premises and goal."""
    atoms = _atoms((*p.premises, p.goal))
    return TermUniverse(_terms(atoms), atoms)


def instance_count(env: Environment, u: TermUniverse) -> int:
    n = len(u.terms)
    return sum(n ** len(property_schema(a.property).variables) for a in env.attachments)


def _normalize(f: Formula) -> Formula | None:
    if isinstance(f, Eq):
        if f.lhs == f.rhs:
            return None
        lhs, rhs = sorted((f.lhs, f.rhs), key=str)
        return Eq(lhs, rhs)
    return f


def instantiate_axioms(
    env: Environment, u: TermUniverse, budget: int = DEFAULT_BUDGET
) -> tuple[Formula, ...]:
    """Ground every attached property schema over ``u.terms``.

    One round only: terms created by function schemas (``f(f(t))``) are
    not fed back into the universe.  Equations are oriented by printed
    form, trivial ``t = t`` instances dropped and duplicates removed.
    """
    needed = instance_count(env, u)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    out: dict[Formula, None] = {}
    for att in env.sorted():
        schema = property_schema(att.property)
        for values in itertools.product(u.terms, repeat=len(schema.variables)):
            f = _normalize(schema.instantiate(att.constructor, values))
            if f is not None:
                out[f] = None
    return tuple(sorted(out, key=str))


def ground(p: Problem, budget: int = DEFAULT_BUDGET) -> GroundProblem:
    u = term_universe(p)
    axioms = instantiate_axioms(p.env, u, budget)
    formulas = (*p.premises, *axioms, Not(p.goal))
    atoms = _atoms(formulas)
    return GroundProblem(p, axioms, formulas, atoms, _terms(atoms))


def problem_for(item: Item, lib: Library, env: Environment | None = None) -> Problem:
    """The refutation problem for ``item``: own premises plus cited statements.

    ``env`` defaults to the library environment; either way it is restricted
    to the constructors the item imports.
    """
    if item not in lib.items:
        raise MalformedItem(f"item {item.id} is not part of the library")
    by_id = {it.id: it for it in lib.items}
    cited = []
    for uid in sorted(item.uses):
        if uid not in by_id or uid == item.id:
            raise MalformedItem(f"item {item.id} uses unknown item {uid}")
        cited.append(by_id[uid].statement)
    env = lib.environment if env is None else env
    return Problem(tuple(item.premises) + tuple(cited), item.goal, env.restrict(item.imports))
