import itertools
import random

import pytest

from propneed.corpus import Environment, Item, PropertyKind, detach, property_schema
from propneed.errors import BudgetExceeded, MalformedItem, OracleBoundExceeded
from propneed.logic import App, Eq, Implies, Not, Pred
from propneed.verifier import (
    BACKEND,
    Problem,
    Status,
    TermUniverse,
    brute_force_verdict,
    check,
    check_problem,
    ground,
    instantiate_axioms,
    problem_for,
    replay_witness,
    term_universe,
)
from propneed.verifier import _scan_py
from propneed.verifier.problem import _normalize

from problem_gen import SHAPES, ProblemGen
from reference import is_instance

a, b, c = App("a"), App("b"), App("c")
sn, sm = App("sn"), App("sm")


def R(x, y):
    return Pred("R", (x, y))


def f(x):
    return App("f", (x,))


def g(x, y):
    return App("g", (x, y))


def add(x, y):
    return App("add", (x, y))


def pp(x, y):
    return Pred("pp", (x, y))


def pf(x, y):
    return Pred("pf", (x, y))


PREFIX_PREMISES = (Implies(pp(sn, sm), pf(sn, sm)), Implies(pf(sn, sm), Eq(sn, sm)))


def both(p):
    return check_problem(p), brute_force_verdict(p)


# --- term universe -----------------------------------------------------------


def test_term_universe_examples():
    assert set(term_universe(Problem((R(f(a), b),), R(a, b))).terms) == {a, f(a), b}
    assert set(term_universe(Problem((), Eq(a, a))).terms) == {a}
    assert set(term_universe(Problem((Eq(g(a, b), c),), Eq(a, a))).terms) == {a, b, g(a, b), c}


# --- instantiation -----------------------------------------------------------


def test_instantiate_irreflexivity():
    out = instantiate_axioms(Environment.of(("R", "irreflexivity")), TermUniverse((a,)))
    assert set(out) == {Not(R(a, a))}


def test_instantiate_projectivity():
    out = instantiate_axioms(Environment.of(("f", "projectivity")), TermUniverse((a,)))
    assert set(out) == {Eq(f(f(a)), f(a))}


def test_instantiate_commutativity_matches_enumeration():
    # oracle: enumerate u x u, drop t = t, orient each equation, deduplicate
    u = (a, b)
    expected = set()
    for t1, t2 in itertools.product(u, repeat=2):
        lhs, rhs = g(t1, t2), g(t2, t1)
        if lhs != rhs:
            expected.add(tuple(sorted((lhs, rhs), key=str)))
    expected = {Eq(x, y) for x, y in expected}
    assert expected == {Eq(g(a, b), g(b, a))}
    assert set(instantiate_axioms(Environment.of(("g", "commutativity")), TermUniverse(u))) == expected


def test_instantiate_one_round_only():
    u = TermUniverse((a,))
    out = instantiate_axioms(Environment.of(("f", "involutiveness")), u)
    assert out == (Eq(f(f(a)), a),)
    gp = ground(Problem((), Eq(a, b), Environment.of(("f", "involutiveness"))))
    # f(a), f(f(a)) enter the congruence universe but are not instantiated again
    assert set(gp.axioms) == {Eq(f(f(a)), a), Eq(f(f(b)), b)}
    assert set(gp.terms) == {a, b, f(a), f(b), f(f(a)), f(f(b))}


def test_instantiation_soundness():
    rng = random.Random(7)
    gen = ProblemGen(rng)
    for _ in range(150):
        p = gen.problem(max_atoms=30)
        u = term_universe(p)
        for ax in instantiate_axioms(p.env, u):
            assert any(
                is_instance(ax, property_schema(att.property), att.constructor, u.terms, _normalize)
                for att in p.env.attachments
            ), ax


def test_budget_exceeded():
    p = Problem((R(a, b), R(b, c)), R(a, c), Environment.of(("R", "symmetry")))
    assert instantiate_axioms(p.env, term_universe(p), budget=9)
    with pytest.raises(BudgetExceeded) as exc:
        check_problem(p, budget=8)
    assert exc.value.needed == 9


# --- check / oracle examples ---------------------------------------------------


def test_goal_is_a_premise():
    assert all(v.verified for v in both(Problem((R(a, b),), R(a, b))))


def test_symmetry_example():
    p = Problem((R(a, b),), R(b, a), Environment.of(("R", "symmetry")))
    assert all(v.verified for v in both(p))
    for v in both(Problem((R(a, b),), R(b, a))):
        assert v.failed
        assert v.witness.true_atoms == [R(a, b)]


def test_commutativity_pattern():
    p = Problem((), Eq(add(a, c), add(c, a)), Environment.of(("add", "commutativity")))
    assert all(v.verified for v in both(p))
    assert all(v.failed for v in both(Problem((), p.goal)))


def test_proper_prefix_pattern():
    env = Environment.of(("pp", "irreflexivity"))
    p = Problem(PREFIX_PREMISES, Not(pp(sn, sm)), env)
    assert all(v.verified for v in both(p))
    detached = Problem(p.premises, p.goal, detach(env, "pp", "irreflexivity"))
    checker, oracle = both(detached)
    assert checker.failed and oracle.failed
    # countermodel: pp holds of (sn, sm) and sn, sm are identified
    for w in (checker.witness, oracle.witness):
        assert w.value(pp(sn, sm)) and w.value(Eq(sn, sm))
        assert (sm, sn) in w.classes


def test_oracle_small_examples():
    assert brute_force_verdict(Problem((), R(a, a))).failed
    assert brute_force_verdict(Problem((Eq(a, b),), Eq(b, a))).verified
    assert check_problem(Problem((Eq(a, b),), Eq(b, a))).verified


def test_congruence_through_unlisted_terms():
    # f(a) = c, a = b  |-  f(b) = c needs function congruence
    p = Problem((Eq(f(a), c), Eq(a, b)), Eq(f(b), c))
    assert all(v.verified for v in both(p))
    # R(f(a), c), a = b  |-  R(f(b), c) needs predicate congruence too
    q = Problem((R(f(a), c), Eq(a, b)), R(f(b), c))
    assert all(v.verified for v in both(q))


def test_oracle_bound():
    p = Problem((R(a, b), R(b, c)), R(a, c), Environment.of(("R", "connectedness")))
    n = len(ground(p).atoms)
    assert n == 9
    assert brute_force_verdict(p, bound=9).status is check_problem(p).status
    with pytest.raises(OracleBoundExceeded):
        brute_force_verdict(p, bound=8)


# --- item-level check ----------------------------------------------------------


def test_check_items_in_toy_corpus(toy_lib):
    for item in toy_lib.items:
        assert check(item, toy_lib).verified, item.id


def test_check_restricts_environment_to_imports(toy_lib):
    item = toy_lib.item("par_sym")
    assert problem_for(item, toy_lib).env == Environment.of(("par", "symmetry"))


def test_check_cites_used_statements(toy_lib):
    item = toy_lib.item("abelian_chain")
    p = problem_for(item, toy_lib)
    assert toy_lib.item("abelian_swap").goal in p.premises


def test_malformed_item(toy_lib):
    stranger = Item("stranger", Pred("in", (App("x"), App("y"))), imports=frozenset({"in"}))
    with pytest.raises(MalformedItem):
        check(stranger, toy_lib)


def test_toy_detachments_agree_with_oracle(toy_lib):
    compared = 0
    for item in toy_lib.items:
        envs = [toy_lib.environment]
        envs += [
            detach(toy_lib.environment, att.constructor, att.property)
            for att in toy_lib.environment.restrict(item.imports).sorted()
        ]
        for env in envs:
            gp = ground(problem_for(item, toy_lib, env))
            if len(gp.atoms) <= 24:
                assert check_problem(gp).status is brute_force_verdict(gp).status
                compared += 1
    assert compared >= 25


# --- invariants over random problems ------------------------------------------------


@pytest.fixture(scope="module")
def random_problems():
    gen = ProblemGen(random.Random(20240611))
    return [ground(gen.problem()) for _ in range(300)]


def test_oracle_equivalence_sample(random_problems):
    for gp in random_problems:
        assert check_problem(gp).status is brute_force_verdict(gp).status


def test_witnesses_replay(random_problems):
    failed = 0
    for gp in random_problems:
        for v in (check_problem(gp), brute_force_verdict(gp)):
            if v.failed:
                failed += 1
                assert replay_witness(gp, v.witness)
    assert failed > 50


def test_replay_rejects_bad_witness():
    gp = ground(Problem((R(a, b),), R(b, a)))
    w = check_problem(gp).witness
    flipped = type(w)(tuple((at, not v) for at, v in w.assignment), w.classes)
    assert not replay_witness(gp, flipped)
    merged = type(w)(w.assignment, ((a, b),))
    assert not replay_witness(gp, merged)


def test_determinism(random_problems):
    for gp in random_problems[:100]:
        p = gp.problem
        assert check_problem(p) == check_problem(p)
        assert brute_force_verdict(p) == brute_force_verdict(p)


def test_monotone_in_axioms():
    rng = random.Random(99)
    gen = ProblemGen(rng)
    applicable = [(s.id, p) for s in SHAPES for p in PropertyKind if p.applies_to(s)]
    verified = 0
    for _ in range(200):
        p = gen.problem(max_atoms=20)
        extra = Environment.of(*rng.sample(applicable, 3))
        bigger = Problem(p.premises, p.goal, Environment(p.env.attachments | extra.attachments))
        if check_problem(p).verified:
            verified += 1
            assert check_problem(bigger).verified
    assert verified > 50


@pytest.mark.skipif(BACKEND != "cython", reason="compiled scanner not built")
def test_backends_agree(random_problems):
    for gp in random_problems:
        assert brute_force_verdict(gp) == brute_force_verdict(gp, scanner=_scan_py.Scanner)


def test_status_values():
    assert Status.VERIFIED.value == "verified" and Status.FAILED.value == "failed"


def test_kernel_falls_back_without_extension(monkeypatch):
    import importlib
    import sys

    import propneed.verifier.kernel as kernel

    monkeypatch.setitem(sys.modules, "propneed.verifier._scan", None)
    try:
        fallback = importlib.reload(kernel)
        assert fallback.BACKEND == "python"
        assert fallback.Scanner is _scan_py.Scanner
    finally:
        monkeypatch.undo()
        importlib.reload(kernel)
