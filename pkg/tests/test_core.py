import pytest
from hypothesis import given, strategies as st

from adftrans.core import (
    BOT,
    IN,
    OUT,
    TOP,
    Adf,
    AdfError,
    And,
    Atom,
    Neg,
    Or,
    PartialAssignment,
    completions,
    conj,
    disj,
    eval_condition,
    format_set,
    iter_subsets,
    parents,
    semantically_equal,
    simplify,
)

a, b, c = Atom("a"), Atom("b"), Atom("c")


def test_atoms_and_truth():
    f = ~a | c
    assert f.atoms() == {"a", "c"}
    assert f.holds({"c"}) and f.holds(set()) and not f.holds({"a"})
    assert TOP.holds(set()) and not BOT.holds({"a"})


def test_nested_connectives_flatten():
    assert And((a, And((b, c)))) == And((a, b, c))
    assert Or((Or((a, b)), c)).subs == (a, b, c)
    with pytest.raises(AdfError):
        And(())


def test_conj_disj_edge_cases():
    assert conj([]) == TOP and disj([]) == BOT
    assert conj([a]) == a and disj([~b]) == ~b
    assert conj([a, b]) == And((a, b))


formulas = st.recursive(
    st.sampled_from([TOP, BOT, a, b, c]),
    lambda sub: st.one_of(
        sub.map(Neg),
        st.lists(sub, min_size=1, max_size=3).map(lambda xs: And(tuple(xs))),
        st.lists(sub, min_size=1, max_size=3).map(lambda xs: Or(tuple(xs))),
    ),
    max_leaves=8,
)


@given(formulas)
def test_simplify_preserves_truth(f):
    g = simplify(f)
    assert g.atoms() <= f.atoms()
    assert semantically_equal(f, g)


def test_partial_assignment_rejects_overlap():
    with pytest.raises(AdfError):
        PartialAssignment({"a"}, {"a"})
    v = PartialAssignment.from_mapping({"a": True, "b": False})
    assert v.domain == {"a", "b"} and v.as_dict() == {"a": True, "b": False}
    assert PartialAssignment({"a"}).dominates(v) and not v.dominates(v)


def test_completions():
    v = PartialAssignment({"a"})
    cs = completions(v, "abc")
    assert len(cs) == 4
    assert cs[0] == PartialAssignment({"a"}, {"b", "c"})
    assert all(x.domain == set("abc") and "a" in x.true for x in cs)
    with pytest.raises(AdfError):
        completions(PartialAssignment({"z"}), "ab")


def test_adf_construction_and_defaults():
    adf = Adf(("a", "b"), {"b": ~a})
    assert adf.cond["a"] == TOP
    assert parents(adf, "b") == {"a"} and parents(adf, "a") == frozenset()
    assert adf.links() == {("a", "b")}
    assert eval_condition(adf, "b", {"a"}) == OUT and eval_condition(adf, "b", set()) == IN
    assert Adf(("b", "a"), {"b": ~a}) == adf and hash(Adf(("b", "a"), {"b": ~a})) == hash(adf)


@pytest.mark.parametrize(
    "args,cond",
    [
        (("a", "a"), {}),
        (("a",), {"b": TOP}),
        (("a",), {"a": Atom("z")}),
        (("1x",), {}),
    ],
)
def test_adf_validation(args, cond):
    with pytest.raises(AdfError):
        Adf(args, cond)


def test_unknown_argument_query():
    with pytest.raises(AdfError):
        parents(Adf(("a",), {}), "q")


def test_subsets_order_and_format():
    assert [format_set(s) for s in iter_subsets("ba")] == ["{}", "{a}", "{b}", "{a,b}"]
