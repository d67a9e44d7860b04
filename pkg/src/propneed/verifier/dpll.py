"""DPLL search with congruence-closure consistency and theory propagation.

Atoms are branched in printed-form order, false first, so the first model
found (and therefore the witness) is reproducible.
"""
from __future__ import annotations

from ..logic import Eq
from .cnf import clauses_of
from .congruence import CongruenceClosure
from .problem import GroundProblem
from .verdict import VERIFIED, Countermodel, Status, Verdict, make_classes


class _Theory:
    def __init__(self, gp: GroundProblem):
        self.terms = gp.terms
        idx = {t: i for i, t in enumerate(gp.terms)}
        self.eqs = []
        self.preds = []
        for k, a in enumerate(gp.atoms):
            if isinstance(a, Eq):
                self.eqs.append((k, idx[a.lhs], idx[a.rhs]))
            else:
                self.preds.append((k, a.rel, tuple(idx[t] for t in a.args)))

    def closure(self, assign: list) -> CongruenceClosure:
        cc = CongruenceClosure(self.terms)
        for k, i, j in self.eqs:
            if assign[k] is True:
                cc.union(i, j)
        cc.close()
        return cc

    def propagate(self, assign: list) -> list[tuple[int, bool]] | None:
        """Literals implied by the assigned equalities, or None on conflict."""
        cc = self.closure(assign)
        implied = []
        for k, i, j in self.eqs:
            if cc.find(i) == cc.find(j):
                if assign[k] is False:
                    return None
                if assign[k] is None:
                    implied.append((k, True))
        groups: dict[tuple, list[int]] = {}
        for k, rel, args in self.preds:
            groups.setdefault((rel, tuple(cc.find(a) for a in args)), []).append(k)
        for ks in groups.values():
            vals = {assign[k] for k in ks} - {None}
            if len(vals) > 1:
                return None
            if vals:
                (v,) = vals
                implied.extend((k, v) for k in ks if assign[k] is None)
        return implied


def _unit_propagate(clauses, assign: list) -> bool:
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            free = None
            n_free = 0
            for lit in clause:
                v = assign[abs(lit) - 1]
                if v is None:
                    free = lit
                    n_free += 1
                elif v == (lit > 0):
                    break
            else:
                if n_free == 0:
                    return False
                if n_free == 1:
                    assign[abs(free) - 1] = free > 0
                    changed = True
    return True


def solve(gp: GroundProblem) -> Verdict:
    """Refute ``gp.formulas``; a surviving model becomes the Failed witness."""
    index = {a: k for k, a in enumerate(gp.atoms)}
    clauses = clauses_of(gp.formulas, index)
    theory = _Theory(gp)
    n = len(gp.atoms)

    def settle(assign: list) -> bool:
        while True:
            if not _unit_propagate(clauses, assign):
                return False
            implied = theory.propagate(assign)
            if implied is None:
                return False
            if not implied:
                return True
            for k, v in implied:
                assign[k] = v

    stack = [[None] * n]
    while stack:
        assign = stack.pop()
        if not settle(assign):
            continue
        try:
            k = assign.index(None)
        except ValueError:
            return _witness(gp, theory, assign)
        for v in (True, False):  # popped in reverse: False is tried first
            child = list(assign)
            child[k] = v
            stack.append(child)
    return VERIFIED


def _witness(gp: GroundProblem, theory: _Theory, assign: list) -> Verdict:
    cc = theory.closure(assign)
    index = cc.index
    classes = make_classes(gp.terms, lambda t: cc.find(index[t]))
    return Verdict(Status.FAILED, Countermodel(tuple(zip(gp.atoms, assign)), classes))
