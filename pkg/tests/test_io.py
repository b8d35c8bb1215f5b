import pytest
from hypothesis import given, settings, strategies as st

from adftrans.core import And, Atom, Neg, Or, TOP, BOT
from adftrans.harness import GenParams, gen
from adftrans.io import Document, ParseError, document_for, parse, parse_file, render_formula, serialize
from adftrans.frameworks import Af

from conftest import GOLDEN

GOLDEN_FILES = [(p.name, p.suffix[1:]) for p in sorted(GOLDEN.iterdir())]


def test_af_document():
    doc = parse("arg(a). arg(b). att(a,b).", "af")
    assert doc.kind == "af" and doc.body == Af("ab", {("a", "b")})


def test_adf_document_with_n_ary_and_default():
    doc = parse("s(b). s(a). s(c). ac(b, or(neg(a), c)).", "adf")
    assert doc.body.args == ("b", "a", "c")
    assert doc.body.cond["b"] == Or((Neg(Atom("a")), Atom("c")))
    assert doc.body.cond["a"] == TOP
    three = parse("s(a). s(b). s(c). ac(a, and(b, c, c(f))).", "adf").body
    assert three.cond["a"] == And((Atom("b"), Atom("c"), BOT))


@pytest.mark.parametrize(
    "text,kind,fragment",
    [
        ("arg(a). att(a,b).", "af", "undeclared argument b"),
        ("arg(a). arg(b) att(a,b).", "af", "expected '.'"),
        ("arg(a). satt([],a).", "setaf", "empty attacking set"),
        ("arg(a). nec([],a).", "afn", "empty necessity set"),
        ("arg(a). arg(b). att(a,b). datt([],a,b).", "eafc", "empty defense-attacking set"),
        ("arg(a). arg(b). datt([a],a,b).", "eafc", "not an attack"),
        ("s(a). ac(a,c(v)). ac(a,c(f)).", "adf", "duplicate condition"),
        ("s(a). ac(a, imp(a,a)).", "adf", "unknown connective"),
        ("arg(a). att(a,a)", "af", "end of input"),
        ("arg(a). $", "af", "unexpected character"),
        ("s(a). arg(a).", "adf", "unexpected fact"),
    ],
)
def test_parse_errors(text, kind, fragment):
    with pytest.raises(ParseError) as info:
        parse(text, kind)
    assert fragment in str(info.value)


def test_error_positions():
    with pytest.raises(ParseError) as info:
        parse("arg(a).\n  att(a,q).", "af")
    assert (info.value.line, info.value.col) == (2, 9)


def test_comments_and_whitespace():
    doc = parse("% header\narg( a ).  % trailing\n\n att(a , a ).", "af")
    assert doc.body.attacks == {("a", "a")}


def test_canonical_serialization(ex1):
    expected = [f"arg({x})." for x in "abcde"] + [
        "satt([a],c).",
        "satt([b],a).",
        "satt([b],b).",
        "satt([b,d],e).",
        "satt([c],d).",
        "satt([e],a).",
    ]
    assert serialize(document_for(ex1)) == "\n".join(expected) + "\n"


def test_constants_and_fold():
    assert render_formula(TOP) == "c(v)" and render_formula(BOT) == "c(f)"
    assert render_formula(And((Atom("a"), Atom("b"), Atom("c")))) == "and(and(a,b),c)"
    assert render_formula(Or((Atom("a"),))) == "or(a)"


@pytest.mark.parametrize("name,kind", GOLDEN_FILES)
def test_golden_round_trip(name, kind):
    doc = parse_file(str(GOLDEN / name), kind)
    text = serialize(doc)
    again = parse(text, kind)
    assert again == doc
    assert serialize(again) == text


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["af", "setaf", "eafc", "afn", "adf"]), st.integers(0, 2**32), st.integers(0, 7))
def test_generated_round_trip(kind, seed, n):
    body = gen(kind, GenParams(seed=seed, n_args=n))
    doc = document_for(body)
    assert parse(serialize(doc), kind) == doc


def test_document_for_rejects_unknown():
    with pytest.raises(KeyError):
        document_for("x")
    assert isinstance(document_for(Af("a", set())), Document)
