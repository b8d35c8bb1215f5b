"""Seeded instance generation and executable checks of the correspondence results.

Every check compares exact sets of extensions; mismatches are collected as
data in a :class:`DiffReport` together with the parameters needed to rebuild
the instance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from typing import Optional

from . import frameworks as fw
from .core import (
    BOT,
    IN,
    TOP,
    Adf,
    AdfError,
    ArgId,
    Atom,
    Formula,
    PartialAssignment,
    conj,
    disj,
    format_set,
    iter_subsets,
    parents,
)
from .frameworks import Af, Afn, Eafc, Setaf
from .semantics import (
    NoLeastExtension,
    Decision,
    acyclic_evaluations,
    classify,
    decide,
    discarded,
    extensions,
    grounded_by_iteration,
    is_conflict_free,
    is_pd_acyclic_conflict_free,
    min_dec,
    partially_acyclic_evaluations,
)
from .translate import translate

KINDS = ("af", "setaf", "eafc", "afn", "adf")


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    n_args: int = 5
    edge_prob: float = 0.3
    max_set_size: int = 2  # SETAF attacking sets and EAFC defense-attacking sets
    datt_prob: float = 0.4  # chance an EAFC attack is defense-attacked
    nec_prob: float = 0.4  # chance an AFN argument receives a necessity set (tried twice)
    nec_size: int = 2
    cycle_bias: float = 0.5  # preference for members that close support / defense chains
    min_args: int = 2  # lower end of per-trial sizes in difftest


@dataclass
class Failure:
    kind: str
    label: str
    native: object
    adf: object
    params: Optional[GenParams] = None

    def __str__(self):
        def show(v):
            if isinstance(v, list):
                return "[" + ", ".join(format_set(s) for s in v) + "]"
            return str(v)

        where = f" (seed={self.params.seed}, n_args={self.params.n_args})" if self.params else ""
        return f"{self.kind}{where} {self.label}: expected {show(self.native)}, got {show(self.adf)}"


@dataclass
class DiffReport:
    trials: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "DiffReport") -> None:
        self.trials += other.trials
        self.checks += other.checks
        self.failures.extend(other.failures)
        self.warnings.extend(other.warnings)
        for k, v in other.stats.items():
            self.stats[k] = self.stats.get(k, 0) + v

    def bump(self, key: str, n: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + n

    def expect(self, kind, label, native, got, params=None) -> bool:
        self.checks += 1
        if _normal(native) != _normal(got):
            self.failures.append(Failure(kind, label, native, got, params))
            return False
        return True

    def summary(self) -> str:
        lines = [f"trials: {self.trials}", f"checks: {self.checks}", f"failures: {len(self.failures)}"]
        lines += [f"{k}: {v}" for k, v in sorted(self.stats.items())]
        lines += [f"warning: {w}" for w in self.warnings]
        lines += [f"FAIL {f}" for f in self.failures]
        return "\n".join(lines)


def _normal(v):
    if isinstance(v, (list, tuple, set, frozenset)) and all(isinstance(s, frozenset) for s in v):
        return frozenset(v)
    return v


# --------------------------------------------------------------------------
# generators


def arg_names(n: int) -> list[ArgId]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    if n <= len(letters):
        return list(letters[:n])
    return [f"a{i}" for i in range(n)]


def _sample(rng: random.Random, pool, k: int) -> frozenset:
    pool = sorted(pool)
    return frozenset(rng.sample(pool, min(k, len(pool))))


def _attacks(rng: random.Random, names, p: float) -> set:
    return {(a, b) for a in names for b in names if rng.random() < p}


def _formula(rng: random.Random, atoms: list, depth: int) -> Formula:
    if not atoms:
        return TOP if rng.random() < 0.85 else BOT
    if depth == 0 or len(atoms) == 1 or rng.random() < 0.25:
        lit = Atom(rng.choice(atoms))
        return ~lit if rng.random() < 0.5 else lit
    k = rng.randint(2, min(3, len(atoms)))
    subs = []
    for _ in range(k):
        subs.append(_formula(rng, rng.sample(atoms, rng.randint(1, len(atoms))), depth - 1))
    f = conj(subs) if rng.random() < 0.5 else disj(subs)
    return ~f if rng.random() < 0.2 else f


def gen(kind: str, p: GenParams):
    """Random framework of the given kind; EAFC and AFN output is strongly consistent."""
    if kind not in KINDS:
        raise AdfError(f"unknown kind {kind!r}")
    rng = random.Random(p.seed)
    names = arg_names(max(p.n_args, 0))
    if kind == "af":
        return Af(names, _attacks(rng, names, p.edge_prob))
    if kind == "setaf":
        att = set()
        for b in names:
            for a in names:
                if rng.random() < p.edge_prob:
                    size = rng.randint(1, max(1, p.max_set_size))
                    att.add((frozenset({a}) | _sample(rng, set(names) - {a}, size - 1), b))
        return Setaf(names, att)
    if kind == "eafc":
        att = _attacks(rng, names, p.edge_prob)
        targets = sorted({y for _, y in att})
        datt = set()
        for z, y in sorted(att):
            if rng.random() >= p.datt_prob:
                continue
            allowed = {x for x in names if (x, y) not in att}
            if not allowed:
                continue
            size = rng.randint(1, max(1, p.max_set_size))
            chain = sorted(allowed & set(targets))
            if chain and rng.random() < p.cycle_bias:
                first = frozenset({rng.choice(chain)})
            else:
                first = frozenset({rng.choice(sorted(allowed))})
            datt.add((first | _sample(rng, allowed - first, size - 1), (z, y)))
        return Eafc(names, att, datt)
    if kind == "afn":
        att = _attacks(rng, names, p.edge_prob)
        nec = set()
        supported: list = []
        for a in names:
            for _ in range(2):
                if rng.random() >= p.nec_prob:
                    continue
                allowed = {x for x in names if (x, a) not in att}
                if not allowed:
                    continue
                size = rng.randint(1, max(1, p.nec_size))
                chain = sorted(allowed & set(supported))
                if chain and rng.random() < p.cycle_bias:
                    first = frozenset({rng.choice(chain)})
                else:
                    first = frozenset({rng.choice(sorted(allowed))})
                nec.add((first | _sample(rng, allowed - first, size - 1), a))
                supported.append(a)
        return Afn(names, att, nec)
    cond = {}
    for a in names:
        par = [x for x in names if rng.random() < p.edge_prob + 0.1]
        cond[a] = _formula(rng, par, 2)
    return Adf(tuple(names), cond)


def _trial_params(p: GenParams, i: int) -> GenParams:
    rng = random.Random(p.seed + i)
    hi = max(p.n_args, p.min_args)
    return replace(p, seed=p.seed + i, n_args=rng.randint(p.min_args, hi))


# --------------------------------------------------------------------------
# correspondence tables

FAMILY_KINDS = ("admissible", "complete", "preferred")

_TABLES = {
    "af": [("conflict-free", "conflict-free"), ("conflict-free", "pd-acyclic-conflict-free"),
           ("stable", "model"), ("stable", "stable"),
           ("grounded", "grounded"), ("grounded", "acyclic-grounded")]
    + [(s, f"{xy}-{s}") for s in FAMILY_KINDS for xy in ("cc", "aa", "ca2")],
    "eafc": [("conflict-free", "conflict-free"), ("stable", "model"), ("grounded", "acyclic-grounded")]
    + [(s, f"ca2-{s}") for s in FAMILY_KINDS],
    "afn": [("strongly-coherent", "pd-acyclic-conflict-free"), ("stable", "stable"),
            ("grounded", "acyclic-grounded")]
    + [(s, f"aa-{s}") for s in FAMILY_KINDS],
}
_TABLES["setaf"] = _TABLES["af"]
CORRESPONDENCE = {k: f"{k}-correspondence" for k in _TABLES}


def correspondence_table(kind: str) -> list[tuple[str, str]]:
    return list(_TABLES[kind])


def _adf_ext(adf: Adf, sem: str):
    try:
        return extensions(adf, sem)
    except NoLeastExtension as e:
        return f"no least element among {len(e.candidates)} complete sets"


def compare_translation(source, report: DiffReport, params=None) -> Adf:
    """Check one instance against its translation: semantics, subclass, collapse."""
    kind = fw.kind_of(source)
    adf = translate(source)
    for native_sem, adf_sem in _TABLES[kind]:
        report.expect(kind, f"{CORRESPONDENCE[kind]}:{native_sem}~{adf_sem}",
                      fw.source_extensions(source, native_sem), _adf_ext(adf, adf_sem), params)
    cl = classify(adf)
    report.expect(kind, "subclass:badf", True, cl.is_badf, params)
    if kind in ("af", "setaf"):
        report.expect(kind, "subclass:aadf+", True, cl.is_aadf_plus, params)
    if kind == "eafc" and fw.eafc_is_bounded_hierarchical(source):
        report.bump("bounded_hierarchical")
        report.expect(kind, "subclass:bounded-hierarchical->aadf+", True, cl.is_aadf_plus, params)
    if cl.is_aadf_plus:
        report.bump("aadf_plus")
        _collapse(adf, report, kind, params)
    return adf


def difftest(kind: str, p: GenParams = GenParams(n_args=7), trials: int = 200) -> DiffReport:
    if kind not in _TABLES:
        raise AdfError(f"difftest kind must be one of {', '.join(_TABLES)}")
    report = DiffReport()
    witness = False
    for i in range(trials):
        tp = _trial_params(p, i)
        source = gen(kind, tp)
        report.trials += 1
        compare_translation(source, report, tp)
        if kind == "eafc":
            witness |= _grounded_not_least(source)
    if kind == "eafc":
        if witness:
            report.bump("grounded_not_least_witness")
        else:
            report.warnings.append("witness not found: no EAFC with a grounded extension that is not the least complete one")
    return report


def _grounded_not_least(eafc: Eafc) -> bool:
    g = fw.eafc_extensions(eafc, "grounded")[0]
    return any(not g <= c for c in fw.eafc_extensions(eafc, "complete"))


# --------------------------------------------------------------------------
# property suites

SUITES = (
    "discarded-chain",
    "collapse",
    "grounded-iteration",
    "pd-functions",
    "adf-order",
    "af-order",
    "setaf-order",
    "eafc-order",
    "afn-order",
    "reinstatement-sequence",
    "eafc-stable",
    "afn-stable",
    "afn-discarded",
    "setaf-discarded",
    "eafc-discarded",
    "afn-acyclic-discarded",
    "afn-powerful",
)


def check_lemma_suite(obj, suite_id: str) -> DiffReport:
    if suite_id not in SUITES:
        raise AdfError(f"unknown suite {suite_id!r}")
    report = DiffReport(trials=1)
    _SUITE_FUNCS[suite_id](obj, report)
    return report


def _adf_of(obj) -> Adf:
    return obj if isinstance(obj, Adf) else translate(obj)


def _discarded_chain(obj, r: DiffReport) -> None:
    adf = _adf_of(obj)
    for x in iter_subsets(adf.args):
        if not is_conflict_free(adf, x):
            continue
        std, par, acy = (discarded(adf, x, m) for m in ("standard", "partial", "acyclic"))
        lbl = f"discarded-chain X={format_set(x)}"
        r.expect("adf", lbl + " X+⊆Xp+", True, std <= par)
        r.expect("adf", lbl + " Xp+⊆Xa+", True, par <= acy)
        r.expect("adf", lbl + " X∩X+=∅", frozenset(), x & std)
        r.expect("adf", lbl + " X∩Xp+=∅", frozenset(), x & par)
        if is_pd_acyclic_conflict_free(adf, x):
            r.expect("adf", lbl + " Xp+=Xa+", par, acy)
            r.expect("adf", lbl + " X∩Xa+=∅", frozenset(), x & acy)


def _collapse(adf: Adf, r: DiffReport, kind="adf", params=None) -> None:
    lbl = "collapse:"
    r.expect(kind, lbl + "cf=pd-acyclic-cf", extensions(adf, "conflict-free"),
             extensions(adf, "pd-acyclic-conflict-free"), params)
    r.expect(kind, lbl + "model=stable", extensions(adf, "model"), extensions(adf, "stable"), params)
    for s in FAMILY_KINDS:
        cc = extensions(adf, f"cc-{s}")
        r.expect(kind, f"{lbl}cc-{s}=aa-{s}", cc, extensions(adf, f"aa-{s}"), params)
        r.expect(kind, f"{lbl}cc-{s}=ca2-{s}", cc, extensions(adf, f"ca2-{s}"), params)
    r.expect(kind, lbl + "grounded=acyclic-grounded", _adf_ext(adf, "grounded"),
             _adf_ext(adf, "acyclic-grounded"), params)


def _collapse_suite(obj, r: DiffReport) -> None:
    adf = _adf_of(obj)
    if classify(adf).is_aadf_plus:
        r.bump("aadf_plus")
        _collapse(adf, r)
    else:
        r.bump("not_aadf_plus")


def _grounded_iteration(obj, r: DiffReport) -> None:
    adf = _adf_of(obj)
    for sem, mode in (("grounded", "standard"), ("acyclic-grounded", "acyclic")):
        try:
            it = [grounded_by_iteration(adf, mode)]
        except NoLeastExtension:
            it = "iteration cycles"
        r.expect("adf", f"{sem} least = iteration", _adf_ext(adf, sem), it)


def _adf_order(obj, r: DiffReport) -> None:
    adf = _adf_of(obj)
    for xy in ("cc", "aa", "ca2"):
        adm = extensions(adf, f"{xy}-admissible")
        pref = extensions(adf, f"{xy}-preferred")
        maximal = [x for x in adm if not any(x < y for y in adm)]
        r.expect("adf", f"{xy}-preferred = maximal admissible", maximal, pref)
        comp = extensions(adf, f"{xy}-complete")
        r.expect("adf", f"{xy}-complete ⊆ admissible", True, set(comp) <= set(adm))
    models = set(extensions(adf, "model"))
    r.expect("adf", "stable ⊆ model", True, set(extensions(adf, "stable")) <= models)
    r.expect("adf", "model ⊆ conflict-free", True, models <= set(extensions(adf, "conflict-free")))
    r.expect("adf", "pd-acyclic-cf ⊆ cf", True,
             set(extensions(adf, "pd-acyclic-conflict-free")) <= set(extensions(adf, "conflict-free")))
    for a in adf.args:
        for t in iter_subsets(parents(adf, a)):
            v = PartialAssignment(t, parents(adf, a) - t)
            r.expect("adf", f"decide({a}) total", True, decide(adf, a, v) is not Decision.UNDECIDED)


def _af_order(obj, r: DiffReport) -> None:
    ext = lambda s: fw.af_extensions(obj, s)  # noqa: E731
    st, pr, co = set(ext("stable")), set(ext("preferred")), set(ext("complete"))
    r.expect("af", "order: stable⊆preferred", True, st <= pr)
    r.expect("af", "order: preferred⊆complete", True, pr <= co)
    r.expect("af", "order: grounded least complete", ext("grounded"), [_least(co)])
    r.bump("preferred_not_stable", int(bool(pr - st)))
    r.bump("complete_not_preferred", int(bool(co - pr)))


def _least(family):
    for x in family:
        if all(x <= y for y in family):
            return x
    return None


def _setaf_order(obj, r: DiffReport) -> None:
    ext = lambda s: fw.setaf_extensions(obj, s)  # noqa: E731
    pr, co = set(ext("preferred")), set(ext("complete"))
    r.expect("setaf", "preferred⊆complete", True, pr <= co)
    r.expect("setaf", "grounded least complete", ext("grounded"), [_least(co)])
    # complete semilattice: any two complete sets have a greatest complete lower bound
    for x, y in itertools.combinations(sorted(co, key=sorted), 2):
        lower = [z for z in co if z <= x and z <= y]
        r.expect("setaf", f"glb({format_set(x)},{format_set(y)})", True,
                 any(all(w <= z for w in lower) for z in lower))


def _eafc_order(obj, r: DiffReport) -> None:
    ext = lambda s: fw.eafc_extensions(obj, s)  # noqa: E731
    pr, co, st = set(ext("preferred")), set(ext("complete")), set(ext("stable"))
    g = ext("grounded")[0]
    r.expect("eafc", "preferred⊆complete", True, pr <= co)
    r.expect("eafc", "stable⊆complete", True, st <= co)
    r.expect("eafc", "grounded complete", True, g in co)
    r.expect("eafc", "grounded minimal complete", True, not any(c < g for c in co))
    r.bump("grounded_not_least", int(any(not g <= c for c in co)))


def _afn_order(obj, r: DiffReport) -> None:
    ext = lambda s: fw.afn_extensions(obj, s)  # noqa: E731
    co, pr, st = set(ext("complete")), set(ext("preferred")), set(ext("stable"))
    r.expect("afn", "grounded least complete", ext("grounded"), [_least(co)])
    r.expect("afn", "preferred = maximal complete", pr, {x for x in co if not any(x < y for y in co)})
    r.expect("afn", "stable⊆preferred", True, st <= pr)


# --- EAFC reinstatement oracles


def reinstatement_bruteforce(eafc: Eafc, x, defeat, limit: int = 12) -> bool:
    """Literal search for a reinstatement set containing ``defeat``."""
    x = frozenset(x)
    pairs = sorted(fw.eafc_defeat_pairs(eafc, x))
    if len(pairs) > limit:
        raise AdfError(f"{len(pairs)} defeat pairs exceed the brute-force limit of {limit}")
    if defeat not in pairs:
        return False
    others = [p for p in pairs if p != defeat]
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            cand = {defeat, *extra}
            targets = {y for _, y in cand}
            if all(c & targets for pair in cand for c in eafc.datt(pair)):
                return True
    return False


def blocking_sequence(eafc: Eafc, x, defeat) -> Optional[list]:
    """Witness that ``defeat`` has no reinstatement set on ``x``.

    Returns distinct defense attacks ending on ``defeat`` where every set's
    members are defeated only by pairs listed earlier (the first set not at
    all), or ``None`` when ``defeat`` is reinstated.
    """
    x = frozenset(x)
    defeats = fw.eafc_defeat_pairs(eafc, x)
    seq: list = []
    listed: set = set()
    progress = True
    while progress and defeat not in listed:
        progress = False
        for z, pair in sorted(eafc.dattacks, key=lambda d: (d[1], sorted(d[0]))):
            if pair in listed or pair not in defeats:
                continue
            hits = [(h, t) for h, t in defeats if t in z]
            if all(hit in listed for hit in hits):
                seq.append((z, pair))
                listed.add(pair)
                progress = True
                if pair == defeat:
                    break
    if defeat not in listed:
        return None
    return seq[: seq.index(next(s for s in seq if s[1] == defeat)) + 1]


def valid_blocking_sequence(eafc: Eafc, x, defeat, seq) -> bool:
    x = frozenset(x)
    if not seq or seq[-1][1] != defeat:
        return False
    pairs = [p for _, p in seq]
    if len(set(pairs)) != len(pairs) or len(set(seq)) != len(seq):
        return False
    for i, (z, pair) in enumerate(seq):
        if z not in eafc.datt(pair):
            return False
        hits = [(h, t) for h, t in fw.eafc_defeat_pairs(eafc, x) if t in z]
        if i == 0 and hits:
            return False
        if not all(any(p == hit for _, p in seq[:i]) for hit in hits):
            return False
    return True


def _reinstatement_sequence(obj: Eafc, r: DiffReport) -> None:
    for x in iter_subsets(obj.args):
        if not fw.eafc_conflict_free(obj, x):
            continue
        pairs = sorted(fw.eafc_defeat_pairs(obj, x))
        for d in pairs:
            fix = fw.eafc_has_reinstatement(obj, x, d)
            seq = blocking_sequence(obj, x, d)
            lbl = f"reinstatement X={format_set(x)} ({d[0]},{d[1]})"
            r.expect("eafc", lbl + " fixpoint=sequence", fix, seq is None)
            if seq is not None:
                r.expect("eafc", lbl + " sequence valid", True, valid_blocking_sequence(obj, x, d, seq))
            if len(pairs) <= 12:
                r.expect("eafc", lbl + " fixpoint=bruteforce", fix, reinstatement_bruteforce(obj, x, d))
            else:
                r.bump("bruteforce_skipped")


def _eafc_stable(obj: Eafc, r: DiffReport) -> None:
    cf = [x for x in iter_subsets(obj.args) if fw.eafc_conflict_free(obj, x)]
    a = [x for x in cf if fw.eafc_discarded(obj, x) == obj.args - x]
    b = [x for x in cf if fw.eafc_stable_by_defeat(obj, x)]
    r.expect("eafc", "stable: reinstated discarded = defeat-based", a, b)


def _afn_stable(obj: Afn, r: DiffReport) -> None:
    sc = [x for x in iter_subsets(obj.args) if fw.afn_strongly_coherent(obj, x)]
    a = [x for x in sc if fw.afn_discarded(obj, x) == obj.args - x]
    r.expect("afn", "stable: strongly coherent + X^att = complete + X+", a, fw.afn_stable_by_deactivation(obj))


def afn_discarded_by_quantifier(afn: Afn, x) -> frozenset[ArgId]:
    coherent = [c for c in iter_subsets(afn.args) if fw.afn_coherent(afn, c)]
    hit = afn.attacked_by(x)
    return frozenset(a for a in afn.args if all(c & hit for c in coherent if a in c))


def _afn_discarded(obj: Afn, r: DiffReport) -> None:
    for x in iter_subsets(obj.args):
        att = fw.afn_discarded(obj, x)
        r.expect("afn", f"X^att X={format_set(x)}", afn_discarded_by_quantifier(obj, x), att)
        if fw.afn_strongly_coherent(obj, x):
            r.expect("afn", f"X^att⊆X+ X={format_set(x)}", True, att <= fw.afn_deactivated(obj, x))


def _setaf_discarded(obj, r: DiffReport) -> None:
    src = obj if isinstance(obj, Setaf) else Setaf(obj.args, {(frozenset({a}), b) for a, b in obj.attacks})
    adf = translate(src)
    for x in iter_subsets(src.args):
        if fw.setaf_conflict_free(src, x):
            r.expect("setaf", f"discarded X={format_set(x)}", src.attacked_by(x), discarded(adf, x, "standard"))


def _eafc_discarded(obj: Eafc, r: DiffReport) -> None:
    adf = translate(obj)
    for x in iter_subsets(obj.args):
        if fw.eafc_conflict_free(obj, x):
            r.expect("eafc", f"discarded X={format_set(x)}", fw.eafc_discarded(obj, x), discarded(adf, x, "partial"))


def _afn_acyclic_discarded(obj: Afn, r: DiffReport) -> None:
    adf = translate(obj)
    for x in iter_subsets(obj.args):
        if fw.afn_strongly_coherent(obj, x):
            r.expect("afn", f"discarded X={format_set(x)}", fw.afn_discarded(obj, x), discarded(adf, x, "acyclic"))


def _afn_powerful(obj: Afn, r: DiffReport) -> None:
    adf = translate(obj)
    for x in iter_subsets(obj.args):
        via_adf = frozenset(a for a in x if any(set(e.pd_seq) <= x for e in acyclic_evaluations(adf, a)))
        r.expect("afn", f"powerful X={format_set(x)}", fw.afn_powerful_members(obj, x), via_adf)


# --- independent pd-function based enumerator


def pd_function_evaluations(adf: Adf, x: ArgId, limit: int = 5) -> set:
    """Evaluations for ``x`` read off every maximally sound pd-function, literally.

    Unlike the direct search this includes evaluations padded with arguments
    ``x`` does not depend on, and pd-sets that contain ``x`` merely because
    another member depends on it.
    """
    if len(adf.args) > limit:
        raise AdfError(f"pd-function enumeration is limited to {limit} arguments")
    sound = []  # (domain, {arg: interpretation})
    for dom in iter_subsets(adf.args):
        options = [[v for v in min_dec(adf, a, IN) if v.true <= dom] for a in sorted(dom)]
        for combo in itertools.product(*options):
            sound.append((dom, dict(zip(sorted(dom), combo))))

    def extended(dom, pd):
        return any(
            dom < d2 and all(pd2[a] == pd[a] for a in dom) for d2, pd2 in sound
        )

    out = set()
    for dom, pd in sound:
        if x not in dom or extended(dom, pd):
            continue
        for fset in iter_subsets(dom):
            if any(not pd[a].true <= fset for a in fset):
                continue
            if any(not any(a in pd[b].true for b in fset) for a in fset):
                continue
            blocked_f = frozenset().union(*(pd[a].false for a in fset))
            if x in fset:
                out.add((fset, frozenset(), blocked_f))
                continue
            for seq in _sequences(dom, pd, fset, x):
                b = blocked_f.union(*(pd[a].false for a in seq))
                out.add((fset, frozenset(seq), b))
    return out


def _sequences(dom, pd, fset, x):
    def walk(seq, used):
        for a in sorted(dom - fset - used):
            if pd[a].true <= fset | used:
                if a == x:
                    yield seq + [a]
                else:
                    yield from walk(seq + [a], used | {a})

    yield from walk([], frozenset())


def _pd_functions(obj, r: DiffReport) -> None:
    adf = _adf_of(obj)
    if len(adf.args) > 5:
        r.bump("pd_functions_skipped")
        return
    literal = {a: pd_function_evaluations(adf, a) for a in adf.args}
    direct = {a: {e.key for e in partially_acyclic_evaluations(adf, a)} for a in adf.args}
    for a in adf.args:
        r.expect("adf", f"pd-fn {a}: direct ⊆ literal", True, direct[a] <= literal[a])
        # padded cyclic triples may contain x without x depending on F; acyclic ones are dominated
        covered = all(
            any(not f2 and g2 <= g and b2 <= b for f2, g2, b2 in direct[a]) for f, g, b in literal[a] if not f
        )
        r.expect("adf", f"pd-fn {a}: acyclic literal dominated by direct", True, covered)
    r.expect("adf", "pd-fn aadf+", all(not f for ev in literal.values() for f, _, _ in ev),
             all(not f for ev in direct.values() for f, _, _ in ev))
    for xs in iter_subsets(adf.args):
        for a in adf.args:
            lit, dct = literal[a], direct[a]
            r.expect("adf", f"pd-fn standard {a} X={format_set(xs)}",
                     all(b & xs for _, _, b in dct), all(b & xs for _, _, b in lit))
            r.expect("adf", f"pd-fn partial {a} X={format_set(xs)}",
                     any(f <= xs and not b & xs for f, _, b in dct),
                     any(f <= xs and not b & xs for f, _, b in lit))
            r.expect("adf", f"pd-fn acyclic {a} X={format_set(xs)}",
                     all(b & xs for f, _, b in dct if not f), all(b & xs for f, _, b in lit if not f))


_SUITE_FUNCS = {
    "discarded-chain": _discarded_chain,
    "collapse": _collapse_suite,
    "grounded-iteration": _grounded_iteration,
    "pd-functions": _pd_functions,
    "adf-order": _adf_order,
    "af-order": _af_order,
    "setaf-order": _setaf_order,
    "eafc-order": _eafc_order,
    "afn-order": _afn_order,
    "reinstatement-sequence": _reinstatement_sequence,
    "eafc-stable": _eafc_stable,
    "afn-stable": _afn_stable,
    "afn-discarded": _afn_discarded,
    "setaf-discarded": _setaf_discarded,
    "eafc-discarded": _eafc_discarded,
    "afn-acyclic-discarded": _afn_acyclic_discarded,
    "afn-powerful": _afn_powerful,
}
