import pytest
from hypothesis import given, strategies as st

from propneed.corpus import (
    Attachment,
    ConstructorDecl,
    Environment,
    Item,
    Kind,
    Library,
    PropertyKind,
    attach,
    detach,
    property_schema,
    validate_library,
)
from propneed.errors import AttachmentNotFound
from propneed.logic import App, Eq, Not, Pred, Var, atoms_of, terms_of

from strategies import libraries

a, b = App("a"), App("b")


def lib_with(attachments=(), items=(), constructors=None):
    ctors = constructors or [
        ConstructorDecl("subset", Kind.RELATION, 2),
        ConstructorDecl("R", Kind.RELATION, 2),
    ]
    return Library(
        constructors={c.id: c for c in ctors},
        constants=frozenset({"a", "b"}),
        environment=Environment.of(*attachments),
        items=tuple(items),
    )


# Tables 1 and 2, transcribed
TABLE = {
    "reflexivity": "∀x [R(x,x)]",
    "symmetry": "∀x ∀y [R(x,y) → R(y,x)]",
    "asymmetry": "∀x ∀y [R(x,y) → ¬R(y,x)]",
    "connectedness": "∀x ∀y [R(x,y) ∨ R(y,x)]",
    "irreflexivity": "∀x [¬R(x,x)]",
    "projectivity": "∀x [f(f(x)) = f(x)]",
    "involutiveness": "∀x [f(f(x)) = x]",
    "idempotence": "∀x [g(x,x) = x]",
    "commutativity": "∀x ∀y [g(x,y) = g(y,x)]",
}


@pytest.mark.parametrize("kind", list(PropertyKind))
def test_property_schema_matches_tables(kind):
    assert str(property_schema(kind)) == TABLE[kind.value]


def test_property_order_follows_tables():
    assert [p.value for p in PropertyKind] == list(TABLE)


def test_schema_structure():
    x, y = Var("x"), Var("y")
    assert property_schema("reflexivity").body == Pred("R", (x, x))
    inv = property_schema("involutiveness")
    assert inv.body == Eq(App("f", (App("f", (x,)),)), x)
    com = property_schema("commutativity")
    assert com.variables == ("x", "y")
    assert com.body == Eq(App("g", (x, y)), App("g", (y, x)))


@pytest.mark.parametrize("kind", list(PropertyKind))
def test_schemas_are_closed(kind):
    s = property_schema(kind)
    free = {t.name for t in terms_of(s.body) if isinstance(t, Var)}
    assert free <= set(s.variables)
    heads = {at.rel for at in atoms_of(s.body) if isinstance(at, Pred)}
    heads |= {t.head for t in terms_of(s.body) if isinstance(t, App)}
    assert heads <= {s.symbol}


def test_signatures():
    rel2 = [p for p in PropertyKind if (p.constructor_kind, p.arity) == (Kind.RELATION, 2)]
    assert [p.value for p in rel2] == [
        "reflexivity", "symmetry", "asymmetry", "connectedness", "irreflexivity"
    ]
    assert PropertyKind.PROJECTIVITY.arity == PropertyKind.INVOLUTIVENESS.arity == 1
    assert PropertyKind.IDEMPOTENCE.arity == PropertyKind.COMMUTATIVITY.arity == 2


def test_instantiate_irreflexivity():
    assert property_schema("irreflexivity").instantiate("lt", (a,)) == Not(Pred("lt", (a, a)))


def test_validate_kind_mismatch():
    diags = validate_library(lib_with([("subset", "commutativity")]))
    assert [d.reason for d in diags] == ["property/kind mismatch"]


def test_validate_cycle():
    items = [
        Item("a_th", Pred("R", (a, b)), imports=frozenset({"R"}), uses=frozenset({"b_th"})),
        Item("b_th", Pred("R", (a, b)), imports=frozenset({"R"}), uses=frozenset({"a_th"})),
    ]
    diags = validate_library(lib_with(items=items))
    assert [d.reason for d in diags] == ["cycle: a_th,b_th"]


def test_validate_two_items_ok():
    items = [
        Item("t1", Pred("R", (a, b)), imports=frozenset({"R"}), premises=(Pred("R", (a, b)),)),
        Item("t2", Pred("R", (a, b)), imports=frozenset({"R"}), uses=frozenset({"t1"})),
    ]
    assert validate_library(lib_with([("R", "symmetry")], items)) == []


@pytest.mark.parametrize(
    "goal, reason",
    [
        (Pred("R", (a, App("zz"))), "undeclared symbol zz"),
        (Pred("R", (a,)), "R expects 2 arguments, got 1"),
        (Eq(App("R", (a,)), a), "relation R used as a function"),
        (Pred("R", (a, App("subset"))), "constructor subset used as a constant"),
        (Pred("subset", (a, b)), "constructor subset not imported"),
    ],
)
def test_validate_formula_symbols(goal, reason):
    lib = lib_with(items=[Item("t", goal, imports=frozenset({"R"}))])
    assert reason in [d.reason for d in validate_library(lib)]


def test_validate_other_invariants():
    lib = lib_with(
        [("nope", "reflexivity")],
        [
            Item("t", Pred("R", (a, a)), imports=frozenset({"R", "ghost"}), uses=frozenset({"t", "u"})),
            Item("t", Pred("R", (a, a)), imports=frozenset({"R"})),
        ],
        constructors=[ConstructorDecl("R", Kind.RELATION, 2), ConstructorDecl("h", Kind.FUNCTION, 3)],
    )
    reasons = {d.reason for d in validate_library(lib)}
    assert {
        "undeclared constructor",
        "arity 3 not supported",
        "unknown import ghost",
        "uses itself",
        "uses unknown item u",
        "duplicate item",
    } <= reasons


def test_toy_corpus_validates(toy_lib):
    assert validate_library(toy_lib) == []


def test_detach_examples():
    env = Environment.of(("lt", "irreflexivity"), ("lt", "asymmetry"))
    assert detach(env, "lt", "asymmetry") == Environment.of(("lt", "irreflexivity"))
    assert detach(Environment.of(("add", "commutativity")), "add", "commutativity") == Environment()
    with pytest.raises(AttachmentNotFound):
        detach(Environment(), "lt", "symmetry")


def test_detach_leaves_input_unchanged():
    env = Environment.of(("lt", "irreflexivity"))
    detach(env, "lt", "irreflexivity")
    assert Attachment("lt", PropertyKind.IRREFLEXIVITY) in env


@given(
    st.sets(
        st.tuples(st.sampled_from(["r", "s", "h"]), st.sampled_from(list(PropertyKind))),
        min_size=1,
    ),
    st.data(),
)
def test_detach_then_attach_is_identity(pairs, data):
    env = Environment.of(*pairs)
    c, p = data.draw(st.sampled_from(sorted(pairs)))
    smaller = detach(env, c, p)
    assert len(smaller) == len(env) - 1
    assert attach(smaller, c, p) == env


@given(libraries())
def test_generated_libraries_validate(lib):
    assert validate_library(lib) == []
