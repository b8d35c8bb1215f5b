import pytest

from adftrans.core import TOP, Adf, Atom, eval_condition, semantically_equal
from adftrans.frameworks import Af, Afn, Eafc, Setaf
from adftrans.translate import (
    InconsistentFramework,
    check_consistency,
    translate,
    translate_af,
    translate_afn,
    translate_setaf,
)

F = frozenset
a, b, c, d, e, f = (Atom(x) for x in "abcdef")


def same(adf: Adf, expected: dict):
    assert set(adf.args) == set(expected)
    for x, g in expected.items():
        assert semantically_equal(adf.cond[x], g), x


def test_af_translation():
    assert translate_af(Af("a", set())).cond["a"] == TOP
    assert translate_af(Af("ab", {("a", "b")})).cond["b"] == ~a
    same(translate_af(Af("abc", {("a", "c"), ("b", "c")})), {"a": TOP, "b": TOP, "c": ~a & ~b})


def test_setaf_translation(ex1):
    same(translate_setaf(ex1), {"a": ~b & ~e, "b": ~b, "c": ~a, "d": ~c, "e": ~b | ~d})


def test_eafc_translation(ex2, ex4):
    adf = translate(ex2)
    assert set(adf.args) == set(ex4.args)
    for x in ex4.args:
        assert semantically_equal(adf.cond[x], ex4.cond[x]), x


def test_eafc_without_defense_attacks_equals_af():
    att = {("a", "b"), ("b", "c"), ("c", "a")}
    assert translate(Eafc("abc", att, set())) == translate_af(Af("abc", att))


def test_afn_translation(ex3):
    same(translate_afn(ex3), {"a": b | c, "b": ~d, "c": ~e, "d": ~f, "e": ~a, "f": f})
    both = translate_afn(Afn("abc", {("b", "a")}, {(F("c"), "a")}))
    same(both, {"a": ~b & c, "b": TOP, "c": TOP})
    assert translate_afn(Afn("a", set(), set())).cond["a"] == TOP


def test_inconsistent_inputs_refused():
    afn = Afn("ab", {("b", "a")}, {(F("b"), "a")})
    rep = check_consistency(afn)
    assert not rep.consistent and rep.witnesses == (("a", F("b")),)
    with pytest.raises(InconsistentFramework) as info:
        translate(afn)
    assert info.value.report == rep
    eafc = Eafc("abc", {("a", "b"), ("c", "b")}, {(F("a"), ("c", "b"))})
    rep = check_consistency(eafc)
    assert rep.witnesses == (("a", "b", "c", F("a")),)
    assert "defense-attacks (c,b)" in str(rep)
    with pytest.raises(InconsistentFramework):
        translate(eafc)


def test_consistency_only_for_afn_and_eafc():
    with pytest.raises(TypeError):
        check_consistency(Af("a", set()))
    assert str(check_consistency(Afn("a", set(), set()))) == "strongly consistent"


def test_translate_dispatch_type_error():
    with pytest.raises(TypeError):
        translate("not a framework")


def test_setaf_translation_is_exact():
    sf = Setaf("abc", {(F("ab"), "c"), (F("c"), "c")})
    adf = translate(sf)
    for s in [set(), {"a"}, {"a", "b"}, {"c"}, {"a", "b", "c"}]:
        blocked = s >= {"a", "b"} or "c" in s
        assert (eval_condition(adf, "c", s) == "out") == blocked
