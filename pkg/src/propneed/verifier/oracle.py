"""Exhaustive truth-table oracle for ground problems with equality.

Shares only axiom instantiation with the DPLL checker.  Formulas are
evaluated directly (no clausal form) and equality is handled by saturating
a term relation under explicit reflexivity, symmetry, transitivity and
function-congruence steps, then testing predicate congruence pairwise.

Equality atoms occupy the high bits of the assignment mask, so every
equality part corresponds to one contiguous block of masks; a block whose
equality part is not extendable to a congruence is skipped whole.
"""
from __future__ import annotations

from ..logic import App, Eq, Pred
from ..errors import OracleBoundExceeded
from .kernel import Scanner
from .problem import DEFAULT_BUDGET, GroundProblem, Problem, ground
from .program import ATOM, compile_formula, flatten
from .verdict import VERIFIED, Countermodel, Status, Verdict, make_classes

DEFAULT_ORACLE_BOUND = 24


class _Saturation:
    """Least congruence containing a set of equations, as bitset rows."""

    def __init__(self, terms):
        self.n = len(terms)
        idx = {t: i for i, t in enumerate(terms)}
        by_head: dict[tuple, list] = {}
        for i, t in enumerate(terms):
            if isinstance(t, App) and t.args:
                by_head.setdefault((t.head, len(t.args)), []).append(
                    (i, tuple(idx[a] for a in t.args))
                )
        self.app_pairs = [
            (i, j, ai, aj)
            for group in by_head.values()
            for x, (i, ai) in enumerate(group)
            for (j, aj) in group[x + 1:]
        ]

    def relate(self, equations) -> list[int]:
        rel = [1 << i for i in range(self.n)]
        for i, j in equations:
            rel[i] |= 1 << j
            rel[j] |= 1 << i
        changed = True
        while changed:
            changed = False
            for k in range(self.n):
                bk, rk = 1 << k, rel[k]
                for i in range(self.n):
                    if rel[i] & bk and rel[i] | rk != rel[i]:
                        rel[i] |= rk
            for i, j, ai, aj in self.app_pairs:
                if not rel[i] >> j & 1 and all(rel[a] >> b & 1 for a, b in zip(ai, aj)):
                    rel[i] |= 1 << j
                    rel[j] |= 1 << i
                    changed = True
        return rel


def brute_force_verdict(
    p: Problem | GroundProblem,
    bound: int = DEFAULT_ORACLE_BOUND,
    budget: int = DEFAULT_BUDGET,
    scanner=None,
) -> Verdict:
    """Decide ``p`` by enumerating every assignment to its ground atoms.

    ``scanner`` overrides the enumeration backend (a ``Scanner`` class).
    """
    gp = p if isinstance(p, GroundProblem) else ground(p, budget)
    n = len(gp.atoms)
    if n > bound:
        raise OracleBoundExceeded(n, bound)

    preds = [a for a in gp.atoms if isinstance(a, Pred)]
    eqs = [a for a in gp.atoms if isinstance(a, Eq)]
    order = preds + eqs
    bit = {a: k for k, a in enumerate(order)}
    n_pred = len(preds)
    tidx = {t: i for i, t in enumerate(gp.terms)}
    eq_sides = [(tidx[a.lhs], tidx[a.rhs]) for a in eqs]
    pred_args = [(a.rel, [tidx[t] for t in a.args]) for a in preds]
    sat = _Saturation(gp.terms)

    # programs reading only high bits first: their failures skip the widest ranges
    programs = sorted(
        (compile_formula(f, bit) for f in gp.formulas),
        key=lambda code: (-min(arg for op, arg in code if op == ATOM), len(code)),
    )
    scanner = (scanner or Scanner)(*flatten(programs), n)

    total = 1 << n
    start = 0
    while True:
        m = scanner.next(start, total)
        if m < 0:
            return VERIFIED
        e = m >> n_pred
        block_end = (e + 1) << n_pred
        start = block_end
        rel = sat.relate([s for k, s in enumerate(eq_sides) if e >> k & 1])
        if any(not e >> k & 1 and rel[i] >> j & 1 for k, (i, j) in enumerate(eq_sides)):
            continue
        ties = [
            (x, y)
            for x in range(n_pred)
            for y in range(x + 1, n_pred)
            if pred_args[x][0] == pred_args[y][0]
            and all(rel[a] >> b & 1 for a, b in zip(pred_args[x][1], pred_args[y][1]))
        ]
        found = scanner.next(m, block_end, ties)
        if found >= 0:
            assignment = tuple((a, bool(found >> bit[a] & 1)) for a in gp.atoms)
            rep = {t: min(j for j in range(sat.n) if rel[i] >> j & 1) for i, t in enumerate(gp.terms)}
            classes = make_classes(gp.terms, rep.__getitem__)
            return Verdict(Status.FAILED, Countermodel(assignment, classes))
