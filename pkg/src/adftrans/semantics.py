"""Extension-based ADF semantics.

Everything here is brute force over the subset lattice and over partial
interpretations of parent sets; intended for frameworks of a dozen or so
arguments.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import (
    IN,
    OUT,
    Adf,
    AdfError,
    ArgId,
    PartialAssignment,
    _check,
    _table,
    eval_condition,
    format_set,
    iter_subsets,
    parents,
)


class Decision(enum.Enum):
    DECISIVELY_IN = "in"
    DECISIVELY_OUT = "out"
    UNDECIDED = "undec"


class NoLeastExtension(LookupError):
    """The complete family has no ⊆-least member, so there is no grounded set."""

    def __init__(self, semantics: str, candidates):
        self.semantics = semantics
        self.candidates = list(candidates)
        super().__init__(
            f"{semantics}: no least element among "
            + ", ".join(format_set(c) for c in self.candidates)
        )


SEMANTICS = (
    "conflict-free",
    "pd-acyclic-conflict-free",
    "model",
    "stable",
    "grounded",
    "acyclic-grounded",
    "cc-admissible",
    "cc-complete",
    "cc-preferred",
    "aa-admissible",
    "aa-complete",
    "aa-preferred",
    "ca2-admissible",
    "ca2-complete",
    "ca2-preferred",
)

DISCARD_MODES = ("standard", "partial", "acyclic")

# family -> (conflict-freeness flavour, range used for decisiveness)
FAMILIES = {
    "cc": ("conflict-free", "standard"),
    "ca2": ("conflict-free", "partial"),
    "aa": ("pd-acyclic-conflict-free", "acyclic"),
}


# --------------------------------------------------------------------------
# decisiveness


def _status(adf: Adf, a: ArgId, t: int, f: int) -> Decision:
    """Decision for ``a`` under the parent assignment given as bitmasks."""
    memo = adf._cache.setdefault(("status", a), {})
    key = (t, f)
    hit = memo.get(key)
    if hit is not None:
        return hit
    _, order, table = _table(adf, a)
    full = (1 << len(order)) - 1
    free = full & ~(t | f)
    if not free:
        res = Decision.DECISIVELY_IN if table[t] else Decision.DECISIVELY_OUT
    else:
        bit = free & -free
        hi = _status(adf, a, t | bit, f)
        lo = _status(adf, a, t, f | bit)
        res = hi if hi is lo and hi is not Decision.UNDECIDED else Decision.UNDECIDED
    memo[key] = res
    return res


def _masks(order, v: PartialAssignment) -> tuple[int, int]:
    t = f = 0
    for i, p in enumerate(order):
        if p in v.true:
            t |= 1 << i
        elif p in v.false:
            f |= 1 << i
    return t, f


def decide(adf: Adf, a: ArgId, v: PartialAssignment) -> Decision:
    """Whether every completion of ``v`` to its domain plus ``par(a)`` agrees on ``a``."""
    _check(adf, a)
    unknown = v.domain - adf.arg_set
    if unknown:
        raise AdfError(f"unknown argument(s) {format_set(unknown)}")
    order = _table(adf, a)[1]
    return _status(adf, a, *_masks(order, v))


def _from_masks(order, t: int, f: int) -> PartialAssignment:
    return PartialAssignment(
        frozenset(p for i, p in enumerate(order) if t >> i & 1),
        frozenset(p for i, p in enumerate(order) if f >> i & 1),
    )


def _assignment_key(v: PartialAssignment):
    return (len(v.domain), sorted(v.true), sorted(v.false))


def min_dec(adf: Adf, a: ArgId, polarity: str) -> tuple[PartialAssignment, ...]:
    """Minimal interpretations (componentwise on t- and f-parts) decisively ``polarity`` for ``a``."""
    _check(adf, a)
    if polarity not in (IN, OUT):
        raise AdfError(f"polarity must be 'in' or 'out', not {polarity!r}")
    key = ("min_dec", a, polarity)
    hit = adf._cache.get(key)
    if hit is not None:
        return hit
    want = Decision.DECISIVELY_IN if polarity == IN else Decision.DECISIVELY_OUT
    order = _table(adf, a)[1]
    found = []
    # Decisiveness is upward closed, so a decisive assignment is minimal iff
    # dropping any single assigned parent breaks it.
    for states in itertools.product((0, 1, 2), repeat=len(order)):
        t = f = 0
        for i, s in enumerate(states):
            if s == 1:
                t |= 1 << i
            elif s == 2:
                f |= 1 << i
        if _status(adf, a, t, f) is not want:
            continue
        minimal = True
        for i in range(len(order)):
            bit = 1 << i
            if (t & bit and _status(adf, a, t & ~bit, f) is want) or (
                f & bit and _status(adf, a, t, f & ~bit) is want
            ):
                minimal = False
                break
        if minimal:
            found.append(_from_masks(order, t, f))
    hit = adf._cache[key] = tuple(sorted(found, key=_assignment_key))
    return hit


# --------------------------------------------------------------------------
# evaluations


@dataclass(frozen=True)
class Evaluation:
    """Partially acyclic positive dependency evaluation (pd-set, pd-sequence, blocking set)."""

    pd_set: frozenset[ArgId]
    pd_seq: tuple[ArgId, ...]
    blocking: frozenset[ArgId]

    @property
    def acyclic(self) -> bool:
        return not self.pd_set

    @property
    def key(self):
        return (self.pd_set, frozenset(self.pd_seq), self.blocking)

    def __str__(self):
        seq = "(" + ",".join(self.pd_seq) + ")"
        if self.acyclic:
            return f"({seq}, {format_set(self.blocking)})"
        return f"({format_set(self.pd_set)}, {seq}, {format_set(self.blocking)})"


def _choices(adf: Adf, x: ArgId):
    """Every assignment of a minimal decisively-in interpretation to ``x`` and,
    transitively, to each argument in a chosen t-part."""

    def extend(chosen, pending):
        if not pending:
            yield chosen
            return
        a = min(pending)
        rest = pending - {a}
        for v in min_dec(adf, a, IN):
            new = v.true - chosen.keys() - rest - {a}
            yield from extend({**chosen, a: v}, rest | new)

    yield from extend({}, frozenset((x,)))


def _on_cycle(nodes, deps) -> set:
    cyclic = set()
    for start in nodes:
        stack = list(deps[start])
        seen = set()
        while stack:
            n = stack.pop()
            if n == start:
                cyclic.add(start)
                break
            if n in seen:
                continue
            seen.add(n)
            stack.extend(deps[n])
    return cyclic


def _closure(seed, deps) -> set:
    out = set(seed)
    stack = list(seed)
    while stack:
        for m in deps[stack.pop()]:
            if m not in out:
                out.add(m)
                stack.append(m)
    return out


def _topological(nodes, deps, last: ArgId) -> tuple[ArgId, ...]:
    order: list[ArgId] = []
    placed: set = set()
    remaining = set(nodes)
    while remaining:
        ready = sorted(n for n in remaining if n != last and deps[n] & remaining <= placed)
        if not ready:
            ready = [last]
        n = ready[0]
        order.append(n)
        placed.add(n)
        remaining.discard(n)
    return tuple(order)


def partially_acyclic_evaluations(adf: Adf, x: ArgId) -> tuple[Evaluation, ...]:
    """Evaluations for ``x`` built from exactly the arguments ``x`` depends on.

    For a fixed choice of interpretations the pd-set is forced: it is the set
    of arguments on a positive dependency cycle together with everything they
    depend on; the remaining arguments form the sequence, ending in ``x``.
    """
    _check(adf, x)
    key = ("evals", x)
    hit = adf._cache.get(key)
    if hit is not None:
        return hit
    found = {}
    for chosen in _choices(adf, x):
        deps = {a: v.true for a, v in chosen.items()}
        cyclic = _on_cycle(chosen, deps)
        pd_set = frozenset(_closure(cyclic, deps))
        seq_nodes = set(chosen) - pd_set
        seq = _topological(seq_nodes, {a: deps[a] - pd_set for a in seq_nodes}, x) if seq_nodes else ()
        blocking = frozenset().union(*(v.false for v in chosen.values()))
        ev = Evaluation(pd_set, seq, blocking)
        found.setdefault(ev.key, ev)
    hit = adf._cache[key] = tuple(
        sorted(found.values(), key=lambda e: (len(e.pd_set), sorted(e.pd_set), len(e.pd_seq), e.pd_seq, sorted(e.blocking)))
    )
    return hit


def acyclic_evaluations(adf: Adf, x: ArgId) -> tuple[Evaluation, ...]:
    return tuple(e for e in partially_acyclic_evaluations(adf, x) if e.acyclic)


# --------------------------------------------------------------------------
# discarded sets, ranges, conflict-freeness


def _as_set(adf: Adf, x: Iterable[ArgId]) -> frozenset[ArgId]:
    x = frozenset(x)
    unknown = x - adf.arg_set
    if unknown:
        raise AdfError(f"unknown argument(s) {format_set(unknown)}")
    return x


def discarded(adf: Adf, x: Iterable[ArgId], mode: str = "standard") -> frozenset[ArgId]:
    x = _as_set(adf, x)
    if mode not in DISCARD_MODES:
        raise AdfError(f"unknown discarded-set mode {mode!r}")
    key = ("discarded", mode, x)
    hit = adf._cache.get(key)
    if hit is not None:
        return hit
    out = set()
    for a in adf.args:
        evs = partially_acyclic_evaluations(adf, a)
        if mode == "standard":
            gone = all(e.blocking & x for e in evs)
        elif mode == "partial":
            gone = not any(e.pd_set <= x and not e.blocking & x for e in evs)
        else:
            gone = all(e.blocking & x for e in evs if e.acyclic)
        if gone:
            out.add(a)
    hit = adf._cache[key] = frozenset(out)
    return hit


def range_of(x: Iterable[ArgId], discarded_set: Iterable[ArgId]) -> PartialAssignment:
    """Interpretation with ``x`` true and the rest of ``discarded_set`` false."""
    x = frozenset(x)
    return PartialAssignment(x, frozenset(discarded_set) - x)


def adf_range(adf: Adf, x: Iterable[ArgId], mode: str = "standard") -> PartialAssignment:
    x = _as_set(adf, x)
    return range_of(x, discarded(adf, x, mode))


def is_conflict_free(adf: Adf, x: Iterable[ArgId]) -> bool:
    x = _as_set(adf, x)
    return all(eval_condition(adf, s, x) == IN for s in x)


def is_pd_acyclic_conflict_free(adf: Adf, x: Iterable[ArgId]) -> bool:
    x = _as_set(adf, x)
    return all(
        any(set(e.pd_seq) <= x and not e.blocking & x for e in acyclic_evaluations(adf, a))
        for a in x
    )


def decisively_in(adf: Adf, v: PartialAssignment) -> frozenset[ArgId]:
    return frozenset(a for a in adf.args if decide(adf, a, v) is Decision.DECISIVELY_IN)


# --------------------------------------------------------------------------
# extension families


def _order(sets) -> list[frozenset[ArgId]]:
    return sorted(set(sets), key=lambda s: (len(s), sorted(s)))


def _cf_test(adf: Adf, flavour: str):
    return is_conflict_free if flavour == "conflict-free" else is_pd_acyclic_conflict_free


def _admissible_and_complete(adf: Adf, family: str, x: frozenset) -> tuple[bool, bool]:
    flavour, mode = FAMILIES[family]
    if not _cf_test(adf, flavour)(adf, x):
        return False, False
    accepted = decisively_in(adf, adf_range(adf, x, mode))
    admissible = x <= accepted
    return admissible, admissible and accepted <= x


def _family(adf: Adf, family: str, kind: str) -> list[frozenset[ArgId]]:
    key = ("family", family, kind)
    hit = adf._cache.get(key)
    if hit is not None:
        return hit
    if kind == "preferred":
        adm = _family(adf, family, "admissible")
        res = [x for x in adm if not any(x < y for y in adm)]
    else:
        res = []
        for x in iter_subsets(adf.args):
            adm, comp = _admissible_and_complete(adf, family, x)
            if (adm, comp)[kind == "complete"]:
                res.append(x)
    hit = adf._cache[key] = _order(res)
    return hit


def _least(name: str, family: list) -> frozenset[ArgId]:
    for x in family:
        if all(x <= y for y in family):
            return x
    raise NoLeastExtension(name, family)


def extensions(adf: Adf, sem: str) -> list[frozenset[ArgId]]:
    """All ``sem``-extensions, ordered by size and then by sorted member names.

    Grounded variants raise :class:`NoLeastExtension` if the complete family
    has no least element.
    """
    if sem not in SEMANTICS:
        raise AdfError(f"unknown ADF semantics {sem!r}")
    if sem == "grounded":
        return [_least(sem, _family(adf, "cc", "complete"))]
    if sem == "acyclic-grounded":
        return [_least(sem, _family(adf, "aa", "complete"))]
    if "-" in sem and sem.split("-", 1)[0] in FAMILIES:
        family, kind = sem.split("-", 1)
        return list(_family(adf, family, kind))
    subsets = iter_subsets(adf.args)
    if sem == "conflict-free":
        return _order(x for x in subsets if is_conflict_free(adf, x))
    if sem == "pd-acyclic-conflict-free":
        return _order(x for x in subsets if is_pd_acyclic_conflict_free(adf, x))
    if sem == "model":
        return _order(
            x
            for x in subsets
            if is_conflict_free(adf, x)
            and all(eval_condition(adf, a, x) == OUT for a in adf.arg_set - x)
        )
    assert sem == "stable"
    return _order(
        x
        for x in subsets
        if is_pd_acyclic_conflict_free(adf, x) and discarded(adf, x, "acyclic") == adf.arg_set - x
    )


def grounded_by_iteration(adf: Adf, mode: str = "standard") -> frozenset[ArgId]:
    """Iterate "accept everything decisively in w.r.t. the current range" from ∅."""
    x: frozenset[ArgId] = frozenset()
    seen = set()
    while x not in seen:
        seen.add(x)
        nxt = decisively_in(adf, adf_range(adf, x, mode))
        if nxt == x:
            return x
        x = nxt
    raise NoLeastExtension(f"iteration ({mode})", sorted(seen, key=sorted))


# --------------------------------------------------------------------------
# subclasses


@dataclass(frozen=True)
class Classification:
    polarity: dict  # (parent, child) -> supporting | attacking | both | neither
    is_badf: bool
    is_aadf_plus: bool


def link_polarity(adf: Adf, r: ArgId, s: ArgId) -> str:
    par = parents(adf, s)
    if r not in par:
        raise AdfError(f"no link ({r},{s})")
    supporting = attacking = True
    for sub in iter_subsets(par - {r}):
        before = eval_condition(adf, s, sub)
        after = eval_condition(adf, s, sub | {r})
        if before == IN and after == OUT:
            supporting = False
        if before == OUT and after == IN:
            attacking = False
    if supporting and attacking:
        return "both"
    if supporting:
        return "supporting"
    if attacking:
        return "attacking"
    return "neither"


def is_aadf_plus(adf: Adf) -> bool:
    return all(e.acyclic for a in adf.args for e in partially_acyclic_evaluations(adf, a))


def classify(adf: Adf) -> Classification:
    polarity = {
        (p, s): link_polarity(adf, p, s) for s in adf.args for p in sorted(parents(adf, s))
    }
    return Classification(
        polarity=polarity,
        is_badf=all(v != "neither" for v in polarity.values()),
        is_aadf_plus=is_aadf_plus(adf),
    )
