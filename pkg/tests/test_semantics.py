import pytest

from adftrans.core import EMPTY, IN, OUT, Adf, AdfError, Atom, PartialAssignment
from adftrans.semantics import (
    SEMANTICS,
    Decision,
    NoLeastExtension,
    _least,
    acyclic_evaluations,
    adf_range,
    classify,
    decide,
    decisively_in,
    discarded,
    extensions,
    grounded_by_iteration,
    is_conflict_free,
    is_pd_acyclic_conflict_free,
    link_polarity,
    min_dec,
    partially_acyclic_evaluations,
    range_of,
)

from helpers import fam, sets


def keys(evals):
    return {(tuple(sorted(e.pd_set)), e.pd_seq, tuple(sorted(e.blocking))) for e in evals}


def test_decide_and_min_dec(ex4):
    assert decide(ex4, "b", PartialAssignment(false={"a"})) is Decision.DECISIVELY_IN
    assert decide(ex4, "b", PartialAssignment({"a"}, {"c"})) is Decision.DECISIVELY_OUT
    assert decide(ex4, "b", EMPTY) is Decision.UNDECIDED
    assert min_dec(ex4, "b", IN) == (PartialAssignment(false={"a"}), PartialAssignment(true={"c"}))
    assert min_dec(ex4, "b", OUT) == (PartialAssignment({"a"}, {"c"}),)
    assert min_dec(ex4, "a", IN) == (EMPTY,) and min_dec(ex4, "a", OUT) == ()
    with pytest.raises(AdfError):
        min_dec(ex4, "b", "maybe")


def test_evaluations_of_example(ex4):
    assert keys(acyclic_evaluations(ex4, "b")) == {((), ("b",), ("a",)), ((), ("c", "b"), ("d",))}
    assert keys(acyclic_evaluations(ex4, "a")) == {((), ("a",), ())}
    pa = keys(partially_acyclic_evaluations(ex4, "b"))
    assert (("b", "c"), (), ()) in pa and len(pa) == 3
    assert str(acyclic_evaluations(ex4, "a")[0]) == "((a), {})"


def test_discarded_sets_of_example(ex4):
    x = set("ad")
    assert discarded(ex4, x, "standard") == frozenset()
    assert discarded(ex4, x, "partial") == set("bc")
    assert discarded(ex4, x, "acyclic") == set("bc")
    y = set("abcd")
    assert discarded(ex4, y, "standard") == {"e"}
    assert discarded(ex4, y, "partial") == {"e"}
    assert discarded(ex4, y, "acyclic") == set("bce")
    with pytest.raises(AdfError):
        discarded(ex4, x, "weird")


def test_ranges(ex4):
    assert adf_range(ex4, "ad", "acyclic") == PartialAssignment(set("ad"), set("bc"))
    assert range_of("ad", "bc") == PartialAssignment(set("ad"), set("bc"))
    assert decisively_in(ex4, PartialAssignment(set("ad"), set("bc"))) >= set("ade")


def test_conflict_freeness(ex4):
    assert is_conflict_free(ex4, "abcd") and not is_pd_acyclic_conflict_free(ex4, "abcd")
    assert is_pd_acyclic_conflict_free(ex4, "adeg")
    assert is_conflict_free(ex4, "ae")
    assert not is_conflict_free(ex4, "abe")


def test_example_families(ex4):
    assert fam(*map(sorted, extensions(ex4, "cc-complete"))) == fam("ad", "abcdf")
    assert extensions(ex4, "aa-complete") == sets("adeg")
    assert set(extensions(ex4, "ca2-complete")) == set(sets("adeg", "abcdf"))
    assert extensions(ex4, "grounded") == sets("ad")
    assert extensions(ex4, "acyclic-grounded") == sets("adeg")
    assert extensions(ex4, "stable") == sets("adeg")
    assert set(extensions(ex4, "model")) == set(sets("adeg", "abcdf"))


def test_extensions_are_ordered(ex4):
    cf = extensions(ex4, "conflict-free")
    assert cf == sorted(cf, key=lambda s: (len(s), sorted(s)))
    assert cf[0] == frozenset()


def test_every_semantics_runs(ex4):
    for sem in SEMANTICS:
        assert isinstance(extensions(ex4, sem), list)
    with pytest.raises(AdfError):
        extensions(ex4, "semi-stable")


def test_grounded_iteration_matches(ex4):
    assert grounded_by_iteration(ex4) == set("ad")
    assert grounded_by_iteration(ex4, "acyclic") == set("adeg")


def test_no_least_extension_is_reported():
    with pytest.raises(NoLeastExtension) as info:
        _least("grounded", sets("a", "b"))
    assert info.value.semantics == "grounded" and len(info.value.candidates) == 2


def test_classification(ex4):
    cl = classify(ex4)
    assert cl.polarity[("a", "b")] == "attacking"
    assert cl.polarity[("c", "b")] == "supporting"
    assert cl.is_badf and not cl.is_aadf_plus
    xor = Adf(("a", "b"), {"b": (Atom("a") & ~Atom("b")) | (~Atom("a") & Atom("b"))})
    assert link_polarity(xor, "a", "b") == "neither" and not classify(xor).is_badf
    redundant = Adf(("a", "b"), {"b": Atom("a") | ~Atom("a")})
    assert link_polarity(redundant, "a", "b") == "both"
    with pytest.raises(AdfError):
        link_polarity(ex4, "g", "a")


def test_self_support_is_cyclic():
    adf = Adf(("a",), {"a": Atom("a")})
    (ev,) = partially_acyclic_evaluations(adf, "a")
    assert ev.pd_set == {"a"} and not ev.acyclic
    assert acyclic_evaluations(adf, "a") == ()
    assert discarded(adf, set(), "acyclic") == {"a"}
    assert extensions(adf, "stable") == [frozenset()]
    assert extensions(adf, "model") == sets("", "a")


def test_unsatisfiable_condition_has_no_evaluation():
    adf = Adf(("a", "b"), {"a": Atom("a") & ~Atom("a")})
    assert partially_acyclic_evaluations(adf, "a") == ()
    assert "a" in discarded(adf, set(), "standard")
