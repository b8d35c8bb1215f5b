import pytest
from hypothesis import given, settings, strategies as st

from adftrans.core import Adf, AdfError, Atom
from adftrans.frameworks import Af, Eafc, eafc_defeat_pairs, eafc_has_reinstatement
from adftrans.harness import (
    SUITES,
    DiffReport,
    GenParams,
    afn_discarded_by_quantifier,
    blocking_sequence,
    check_lemma_suite,
    correspondence_table,
    difftest,
    gen,
    pd_function_evaluations,
    reinstatement_bruteforce,
    valid_blocking_sequence,
)
from adftrans.semantics import partially_acyclic_evaluations
from adftrans.translate import check_consistency

F = frozenset


def test_gen_is_deterministic():
    for kind in ("af", "setaf", "eafc", "afn", "adf"):
        p = GenParams(seed=42, n_args=6)
        assert gen(kind, p) == gen(kind, p)
    assert gen("af", GenParams(n_args=0)) == Af((), ())
    with pytest.raises(AdfError):
        gen("graph", GenParams())


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**64 - 1), st.integers(0, 8), st.floats(0, 1))
def test_generated_frameworks_are_strongly_consistent(seed, n, prob):
    for kind in ("eafc", "afn"):
        p = GenParams(seed=seed, n_args=n, edge_prob=prob, datt_prob=prob, nec_prob=prob)
        assert check_consistency(gen(kind, p)).consistent


def test_report_behaviour():
    r = DiffReport()
    assert r.expect("af", "same", [F("a")], [F("a")])
    assert not r.expect("af", "diff", [F("a")], [F("b")], GenParams(seed=9))
    assert not r.ok and r.checks == 2
    assert "seed=9" in str(r.failures[0]) and "FAIL" in r.summary()


def test_tables():
    assert ("grounded", "acyclic-grounded") in correspondence_table("eafc")
    assert ("admissible", "ca2-admissible") in correspondence_table("eafc")
    assert ("strongly-coherent", "pd-acyclic-conflict-free") in correspondence_table("afn")
    assert len(correspondence_table("af")) == 15


@pytest.mark.parametrize("kind", ["af", "setaf", "eafc", "afn"])
def test_small_difftest(kind):
    report = difftest(kind, GenParams(seed=7, n_args=5), 25)
    assert report.ok, report.summary()
    assert report.trials == 25


def test_difftest_rejects_adf_kind():
    with pytest.raises(AdfError):
        difftest("adf", GenParams(), 1)


def test_eafc_witness_or_warning():
    report = difftest("eafc", GenParams(seed=0, n_args=7), 200)
    assert report.ok
    assert report.stats.get("grounded_not_least_witness") or report.warnings


def test_reinstatement_oracles_on_example(ex2):
    x = F("ade")
    # (a,b) and (d,c) protect each other's defense attackers
    assert reinstatement_bruteforce(ex2, x, ("a", "b"))
    assert blocking_sequence(ex2, x, ("a", "b")) is None
    assert reinstatement_bruteforce(ex2, F(), ("a", "b")) is False


def test_blocking_sequence_for_unreinstated_defeat():
    eafc = Eafc("abcd", {("a", "b"), ("d", "c")}, {(F("c"), ("a", "b"))})
    assert not eafc_has_reinstatement(eafc, {"a"}, ("a", "b"))
    seq = blocking_sequence(eafc, {"a"}, ("a", "b"))
    assert seq == [(F("c"), ("a", "b"))]
    assert valid_blocking_sequence(eafc, {"a"}, ("a", "b"), seq)
    # once d defeats c, the protection falls and the defeat is reinstated
    assert eafc_has_reinstatement(eafc, {"a", "d"}, ("a", "b"))
    assert blocking_sequence(eafc, {"a", "d"}, ("a", "b")) is None
    assert not valid_blocking_sequence(eafc, {"a", "d"}, ("a", "b"), seq)


def test_bruteforce_refuses_large_instances():
    names = [f"a{i}" for i in range(14)]
    att = {("a0", n) for n in names[1:]}
    with pytest.raises(AdfError):
        reinstatement_bruteforce(Eafc(names, att, set()), {"a0"}, ("a0", "a1"))


def test_oracles_agree_on_chain():
    eafc = Eafc("abcd", {("a", "b"), ("d", "c"), ("b", "d")}, {(F("c"), ("a", "b")), (F("b"), ("d", "c"))})
    for x in (F("a"), F("ad"), F("d")):
        for pair in eafc_defeat_pairs(eafc, x):
            fix = eafc_has_reinstatement(eafc, x, pair)
            assert fix == reinstatement_bruteforce(eafc, x, pair)
            assert fix == (blocking_sequence(eafc, x, pair) is None)


def test_quantifier_definition_on_example(ex3):
    assert afn_discarded_by_quantifier(ex3, {"d"}) == {"b", "f"}


def test_pd_functions_literal_reading():
    adf = Adf(("a", "b", "c"), {"a": Atom("b"), "b": Atom("a") | Atom("c"), "c": ~Atom("a")})
    lit = pd_function_evaluations(adf, "a")
    assert {e.key for e in partially_acyclic_evaluations(adf, "a")} <= lit
    assert (F("ab"), F(), F()) in lit


def test_pd_functions_size_limit(ex4):
    with pytest.raises(AdfError):
        pd_function_evaluations(ex4, "b")


def test_suites_on_examples(ex1, ex2, ex3, ex4):
    cases = {
        ex4: ["discarded-chain", "grounded-iteration", "adf-order"],
        ex1: ["setaf-order", "setaf-discarded", "discarded-chain", "collapse"],
        ex2: ["eafc-order", "reinstatement-sequence", "eafc-stable", "eafc-discarded", "discarded-chain"],
        ex3: ["afn-order", "afn-stable", "afn-discarded", "afn-acyclic-discarded", "afn-powerful", "discarded-chain"],
    }
    for obj, ids in cases.items():
        for sid in ids:
            r = check_lemma_suite(obj, sid)
            assert r.ok and r.checks > 0, (sid, r.summary())


def test_example_ledger_facts(ex4, ex2):
    r = check_lemma_suite(ex4, "collapse")
    assert r.stats == {"not_aadf_plus": 1} and r.checks == 0
    # the worked EAFC's grounded set is minimal but not least among complete sets
    assert check_lemma_suite(ex2, "eafc-order").stats.get("grounded_not_least") == 1


def test_unknown_suite():
    with pytest.raises(AdfError):
        check_lemma_suite(Af("a", set()), "no-such-suite")
    assert "reinstatement-sequence" in SUITES


def test_difftest_detects_broken_translation(monkeypatch):
    from adftrans import harness
    from adftrans.translate import translate_af

    # dropping defense attacks turns every EAFC into its underlying AF
    monkeypatch.setattr(harness, "translate", lambda e: translate_af(Af(e.args, e.attacks)))
    report = difftest("eafc", GenParams(seed=1, n_args=6), 60)
    assert not report.ok
    assert any(f.label.startswith("eafc-correspondence:") for f in report.failures)
