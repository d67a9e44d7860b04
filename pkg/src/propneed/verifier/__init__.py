"""Ground verification of items under an environment of property attachments.

:func:`check` decides refutation with DPLL plus congruence closure;
:func:`brute_force_verdict` is an independent truth-table oracle used to
cross-check it.
"""
from __future__ import annotations

from ..corpus import Environment, Item, Library
from ..logic import App, Eq, evaluate
from .dpll import solve
from .kernel import BACKEND
from .oracle import DEFAULT_ORACLE_BOUND, brute_force_verdict
from .problem import (
    DEFAULT_BUDGET,
    GroundProblem,
    Problem,
    TermUniverse,
    ground,
    instance_count,
    instantiate_axioms,
    problem_for,
    term_universe,
)
from .verdict import Countermodel, Status, Verdict

__all__ = [
    "BACKEND",
    "DEFAULT_BUDGET",
    "DEFAULT_ORACLE_BOUND",
    "Countermodel",
    "GroundProblem",
    "Problem",
    "Status",
    "TermUniverse",
    "Verdict",
    "brute_force_verdict",
    "check",
    "check_problem",
    "ground",
    "instance_count",
    "instantiate_axioms",
    "problem_for",
    "replay_witness",
    "term_universe",
]


def check_problem(p: Problem | GroundProblem, budget: int = DEFAULT_BUDGET) -> Verdict:
    gp = p if isinstance(p, GroundProblem) else ground(p, budget)
    return solve(gp)


def check(
    item: Item,
    lib: Library,
    env_override: Environment | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
) -> Verdict:
    """Verify ``item`` against its premises and the statements it cites.

    The environment (``env_override`` or the library's) is restricted to the
    item's imports before the property schemas are instantiated.
    """
    return check_problem(problem_for(item, lib, env_override), budget)


def replay_witness(gp: GroundProblem, witness: Countermodel) -> bool:
    """True iff ``witness`` satisfies every formula of ``gp`` (premises,
    axioms and the negated goal) and its partition is a congruence that
    agrees with the assignment."""
    values = dict(witness.assignment)
    if set(values) != set(gp.atoms):
        return False
    if not all(evaluate(f, values.__getitem__) for f in gp.formulas):
        return False
    cls = {t: k for k, c in enumerate(witness.classes) for t in c}
    if set(cls) != set(gp.terms):
        return False
    sig: dict[tuple, int] = {}
    for t in gp.terms:
        if isinstance(t, App) and t.args:
            key = (t.head, tuple(cls[a] for a in t.args))
            if sig.setdefault(key, cls[t]) != cls[t]:
                return False
    preds: dict[tuple, bool] = {}
    for a, v in values.items():
        if isinstance(a, Eq):
            if (cls[a.lhs] == cls[a.rhs]) != v:
                return False
        else:
            key = (a.rel, tuple(cls[t] for t in a.args))
            if preds.setdefault(key, v) != v:
                return False
    return True
