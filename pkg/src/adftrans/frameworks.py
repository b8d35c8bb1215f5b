"""Native AF, SETAF, EAFC and AFN structures with brute-force semantics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .core import AdfError, ArgId, check_arg_id, format_set, iter_subsets

Pair = tuple[ArgId, ArgId]

SOURCE_SEMANTICS = ("conflict-free", "admissible", "complete", "preferred", "grounded", "stable")
AFN_SEMANTICS = SOURCE_SEMANTICS + ("coherent", "strongly-coherent")


def _args(args) -> frozenset[ArgId]:
    return frozenset(check_arg_id(a) for a in args)


def _need(args: frozenset, xs: Iterable[ArgId], what: str) -> None:
    missing = set(xs) - args
    if missing:
        raise AdfError(f"{what} mentions undeclared argument(s) {format_set(missing)}")


def _nonempty(s, what: str) -> frozenset:
    s = frozenset(s)
    if not s:
        raise AdfError(f"empty {what} set")
    return s


def _order(sets) -> list[frozenset[ArgId]]:
    return sorted(set(sets), key=lambda s: (len(s), sorted(s)))


def _maximal(family) -> list[frozenset[ArgId]]:
    return _order(x for x in family if not any(x < y for y in family))


def _check_semantics(sem: str, allowed) -> None:
    if sem not in allowed:
        raise AdfError(f"unknown semantics {sem!r}")


def _iterate_union(step) -> frozenset[ArgId]:
    """Union of ∅, step(∅), step(step(∅)), ... (finite, so eventually periodic)."""
    x: frozenset[ArgId] = frozenset()
    seen: list[frozenset] = []
    while x not in seen:
        seen.append(x)
        x = step(x)
    return frozenset().union(*seen)


# --------------------------------------------------------------------------
# AF


@dataclass(frozen=True)
class Af:
    args: frozenset[ArgId]
    attacks: frozenset[Pair] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "args", _args(self.args))
        object.__setattr__(self, "attacks", frozenset((a, b) for a, b in self.attacks))
        for a, b in self.attacks:
            _need(self.args, (a, b), "attack")

    def attacked_by(self, x) -> frozenset[ArgId]:
        return frozenset(b for a, b in self.attacks if a in x)

    def attackers(self, b: ArgId) -> frozenset[ArgId]:
        return frozenset(a for a, t in self.attacks if t == b)


def af_conflict_free(af: Af, x) -> bool:
    return not any(a in x and b in x for a, b in af.attacks)


def af_defends(af: Af, x, a: ArgId) -> bool:
    plus = af.attacked_by(x)
    return af.attackers(a) <= plus


def af_extensions(af: Af, sem: str) -> list[frozenset[ArgId]]:
    _check_semantics(sem, SOURCE_SEMANTICS)
    subsets = list(iter_subsets(af.args))
    cf = [x for x in subsets if af_conflict_free(af, x)]
    if sem == "conflict-free":
        return _order(cf)
    if sem == "stable":
        return _order(x for x in cf if af.attacked_by(x) == af.args - x)
    if sem == "grounded":
        return [_iterate_union(lambda x: frozenset(a for a in af.args if af_defends(af, x, a)))]
    adm = [x for x in cf if all(af_defends(af, x, a) for a in x)]
    if sem == "admissible":
        return _order(adm)
    if sem == "preferred":
        return _maximal(adm)
    return _order(x for x in adm if all(a in x for a in af.args if af_defends(af, x, a)))


# --------------------------------------------------------------------------
# SETAF


@dataclass(frozen=True)
class Setaf:
    args: frozenset[ArgId]
    attacks: frozenset[tuple[frozenset[ArgId], ArgId]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "args", _args(self.args))
        attacks = frozenset((_nonempty(s, "attacking"), b) for s, b in self.attacks)
        for s, b in attacks:
            _need(self.args, s | {b}, "attack")
        object.__setattr__(self, "attacks", attacks)

    def attacked_by(self, x) -> frozenset[ArgId]:
        return frozenset(b for s, b in self.attacks if s <= x)

    def attacking_sets(self, b: ArgId) -> list[frozenset[ArgId]]:
        return [s for s, t in self.attacks if t == b]


def setaf_conflict_free(sf: Setaf, x) -> bool:
    return not (sf.attacked_by(x) & x)


def setaf_defends(sf: Setaf, x, a: ArgId) -> bool:
    plus = sf.attacked_by(x)
    return all(s & plus for s in sf.attacking_sets(a))


def setaf_extensions(sf: Setaf, sem: str) -> list[frozenset[ArgId]]:
    _check_semantics(sem, SOURCE_SEMANTICS)
    cf = [x for x in iter_subsets(sf.args) if setaf_conflict_free(sf, x)]
    if sem == "conflict-free":
        return _order(cf)
    if sem == "stable":
        return _order(x for x in cf if sf.attacked_by(x) == sf.args - x)
    if sem == "grounded":
        return [_iterate_union(lambda x: frozenset(a for a in sf.args if setaf_defends(sf, x, a)))]
    adm = [x for x in cf if all(setaf_defends(sf, x, a) for a in x)]
    if sem == "admissible":
        return _order(adm)
    if sem == "preferred":
        return _maximal(adm)
    return _order(x for x in adm if all(a in x for a in sf.args if setaf_defends(sf, x, a)))


# --------------------------------------------------------------------------
# EAFC


@dataclass(frozen=True)
class Eafc:
    args: frozenset[ArgId]
    attacks: frozenset[Pair] = frozenset()
    dattacks: frozenset[tuple[frozenset[ArgId], Pair]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "args", _args(self.args))
        attacks = frozenset((a, b) for a, b in self.attacks)
        for a, b in attacks:
            _need(self.args, (a, b), "attack")
        dattacks = frozenset((_nonempty(c, "defense-attacking"), (p[0], p[1])) for c, p in self.dattacks)
        for c, p in dattacks:
            _need(self.args, c, "defense attack")
            if p not in attacks:
                raise AdfError(f"defense attack on ({p[0]},{p[1]}), which is not an attack")
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "dattacks", dattacks)

    def datt(self, pair: Pair) -> list[frozenset[ArgId]]:
        """Sets carrying out a defense attack on ``pair``."""
        return [c for c, p in self.dattacks if p == pair]


def eafc_defeats(eafc: Eafc, x, a: ArgId, b: ArgId) -> bool:
    """``a`` defeats ``b`` w.r.t. ``x``: an attack not defense-attacked from inside ``x``."""
    x = frozenset(x)
    return (a, b) in eafc.attacks and not any(c <= x for c in eafc.datt((a, b)))


def eafc_defeat_pairs(eafc: Eafc, x) -> frozenset[Pair]:
    """All defeats w.r.t. ``x`` carried out by members of ``x``."""
    x = frozenset(x)
    return frozenset((a, b) for a, b in eafc.attacks if a in x and eafc_defeats(eafc, x, a, b))


def eafc_reinstated(eafc: Eafc, x) -> frozenset[Pair]:
    """Greatest set of defeats from ``x`` closed under protection against defense attacks.

    A pair survives while each defense-attacking set on it has a member that is
    itself the target of a surviving pair. Reinstatement sets are closed under
    union, so a defeat has one iff it survives.
    """
    alive = set(eafc_defeat_pairs(eafc, x))
    changed = True
    while changed:
        changed = False
        targets = {y for _, y in alive}
        for pair in sorted(alive):
            if any(not (c & targets) for c in eafc.datt(pair)):
                alive.discard(pair)
                changed = True
                break
    return frozenset(alive)


def eafc_has_reinstatement(eafc: Eafc, x, defeat: Pair) -> bool:
    x = frozenset(x)
    if defeat not in eafc_defeat_pairs(eafc, x):
        raise AdfError(f"({defeat[0]},{defeat[1]}) is not a defeat by a member of {format_set(x)}")
    return defeat in eafc_reinstated(eafc, x)


def eafc_discarded(eafc: Eafc, x) -> frozenset[ArgId]:
    return frozenset(b for _, b in eafc_reinstated(eafc, x))


def eafc_conflict_free(eafc: Eafc, x) -> bool:
    x = frozenset(x)
    return not any(b in x for _, b in eafc_defeat_pairs(eafc, x))


def eafc_defends(eafc: Eafc, x, a: ArgId, plus=None) -> bool:
    x = frozenset(x)
    if plus is None:
        plus = eafc_discarded(eafc, x)
    return all(b in plus for b, t in eafc.attacks if t == a and eafc_defeats(eafc, x, b, a))


def eafc_characteristic(eafc: Eafc, x) -> frozenset[ArgId]:
    plus = eafc_discarded(eafc, x)
    return frozenset(a for a in eafc.args if eafc_defends(eafc, x, a, plus))


def eafc_stable_by_defeat(eafc: Eafc, x) -> bool:
    """Alternative stability: every outsider is defeated w.r.t. ``x`` by a member."""
    x = frozenset(x)
    defeated = {b for _, b in eafc_defeat_pairs(eafc, x)}
    return eafc_conflict_free(eafc, x) and eafc.args - x <= defeated


def eafc_extensions(eafc: Eafc, sem: str) -> list[frozenset[ArgId]]:
    _check_semantics(sem, SOURCE_SEMANTICS)
    cf = [x for x in iter_subsets(eafc.args) if eafc_conflict_free(eafc, x)]
    if sem == "conflict-free":
        return _order(cf)
    if sem == "grounded":
        return [_iterate_union(lambda x: eafc_characteristic(eafc, x))]
    if sem == "stable":
        res = _order(x for x in cf if eafc_discarded(eafc, x) == eafc.args - x)
        alt = _order(x for x in cf if eafc_stable_by_defeat(eafc, x))
        assert res == alt, "stable characterisations disagree"
        return res
    adm, comp = [], []
    for x in cf:
        acc = eafc_characteristic(eafc, x)
        if x <= acc:
            adm.append(x)
            if acc <= x:
                comp.append(x)
    if sem == "admissible":
        return _order(adm)
    if sem == "preferred":
        return _maximal(adm)
    return _order(comp)


def eafc_is_bounded_hierarchical(eafc: Eafc) -> bool:
    """Satisfiability of level(a) = level(b) per attack and level(c) = level(a) + 1
    per defense attack, solved with an offset union-find."""
    parent = {a: a for a in eafc.args}
    offset = {a: 0 for a in eafc.args}  # level(a) - level(parent[a])

    def find(a):
        if parent[a] == a:
            return a, 0
        root, off = find(parent[a])
        parent[a] = root
        offset[a] += off
        return root, offset[a]

    def unite(a, b, diff) -> bool:
        # require level(b) - level(a) == diff
        ra, oa = find(a)
        rb, ob = find(b)
        if ra == rb:
            return ob - oa == diff
        parent[rb] = ra
        offset[rb] = oa + diff - ob
        return True

    for a, b in eafc.attacks:
        if not unite(a, b, 0):
            return False
    for c, (a, _) in eafc.dattacks:
        for m in c:
            if not unite(a, m, 1):
                return False
    return True


# --------------------------------------------------------------------------
# AFN


@dataclass(frozen=True)
class Afn:
    args: frozenset[ArgId]
    attacks: frozenset[Pair] = frozenset()
    necessities: frozenset[tuple[frozenset[ArgId], ArgId]] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "args", _args(self.args))
        attacks = frozenset((a, b) for a, b in self.attacks)
        for a, b in attacks:
            _need(self.args, (a, b), "attack")
        nec = frozenset((_nonempty(s, "necessity"), b) for s, b in self.necessities)
        for s, b in nec:
            _need(self.args, s | {b}, "necessity")
        object.__setattr__(self, "attacks", attacks)
        object.__setattr__(self, "necessities", nec)

    def supports(self, a: ArgId) -> list[frozenset[ArgId]]:
        return [s for s, t in self.necessities if t == a]

    def attacked_by(self, x) -> frozenset[ArgId]:
        return frozenset(b for a, b in self.attacks if a in x)


def afn_powerful_members(afn: Afn, x) -> frozenset[ArgId]:
    """Members of ``x`` with a powerful sequence inside ``x``."""
    x = frozenset(x)
    got: set[ArgId] = set()
    changed = True
    while changed:
        changed = False
        for a in x - got:
            if all(s & got for s in afn.supports(a)):
                got.add(a)
                changed = True
    return frozenset(got)


def afn_coherent(afn: Afn, x) -> bool:
    x = frozenset(x)
    return afn_powerful_members(afn, x) == x


def afn_conflict_free(afn: Afn, x) -> bool:
    return not any(a in x and b in x for a, b in afn.attacks)


def afn_discarded(afn: Afn, x) -> frozenset[ArgId]:
    """Arguments every coherent host set of which is attacked by ``x``.

    The union of coherent sets is coherent, so the largest coherent set
    avoiding the arguments attacked by ``x`` decides membership.
    """
    free = afn.args - afn.attacked_by(x)
    return afn.args - afn_powerful_members(afn, free)


def afn_deactivated(afn: Afn, x) -> frozenset[ArgId]:
    x = frozenset(x)
    return frozenset(
        a for a in afn.args if a in afn.attacked_by(x) or any(not (s & x) for s in afn.supports(a))
    )


def afn_defends(afn: Afn, x, a: ArgId, att=None) -> bool:
    x = frozenset(x)
    if att is None:
        att = afn_discarded(afn, x)
    if not afn_coherent(afn, x | {a}):
        return False
    return all(b in att for b, t in afn.attacks if t == a)


def afn_characteristic(afn: Afn, x) -> frozenset[ArgId]:
    att = afn_discarded(afn, x)
    return frozenset(a for a in afn.args if afn_defends(afn, x, a, att))


def afn_strongly_coherent(afn: Afn, x) -> bool:
    return afn_conflict_free(afn, x) and afn_coherent(afn, x)


def _afn_complete(afn: Afn) -> list[frozenset[ArgId]]:
    out = []
    for x in iter_subsets(afn.args):
        if afn_strongly_coherent(afn, x) and afn_characteristic(afn, x) == x:
            out.append(x)
    return out


def afn_stable_by_deactivation(afn: Afn) -> list[frozenset[ArgId]]:
    """Stable as complete with deactivated set equal to the complement."""
    return _order(x for x in _afn_complete(afn) if afn_deactivated(afn, x) == afn.args - x)


def afn_extensions(afn: Afn, sem: str) -> list[frozenset[ArgId]]:
    _check_semantics(sem, AFN_SEMANTICS)
    subsets = list(iter_subsets(afn.args))
    if sem == "conflict-free":
        return _order(x for x in subsets if afn_conflict_free(afn, x))
    if sem == "coherent":
        return _order(x for x in subsets if afn_coherent(afn, x))
    sc = [x for x in subsets if afn_strongly_coherent(afn, x)]
    if sem == "strongly-coherent":
        return _order(sc)
    if sem == "stable":
        res = _order(x for x in sc if afn_discarded(afn, x) == afn.args - x)
        assert res == afn_stable_by_deactivation(afn), "stable characterisations disagree"
        return res
    if sem == "grounded":
        return [_iterate_union(lambda x: afn_characteristic(afn, x))]
    adm, comp = [], []
    for x in sc:
        acc = afn_characteristic(afn, x)
        if x <= acc:
            adm.append(x)
            if acc <= x:
                comp.append(x)
    if sem == "admissible":
        return _order(adm)
    if sem == "preferred":
        return _maximal(adm)
    return _order(comp)


SourceFramework = Union[Af, Setaf, Eafc, Afn]


def source_extensions(fw: SourceFramework, sem: str) -> list[frozenset[ArgId]]:
    if isinstance(fw, Af):
        return af_extensions(fw, sem)
    if isinstance(fw, Setaf):
        return setaf_extensions(fw, sem)
    if isinstance(fw, Eafc):
        return eafc_extensions(fw, sem)
    if isinstance(fw, Afn):
        return afn_extensions(fw, sem)
    raise TypeError(f"not a source framework: {type(fw).__name__}")


def kind_of(fw) -> str:
    return {Af: "af", Setaf: "setaf", Eafc: "eafc", Afn: "afn"}[type(fw)]
