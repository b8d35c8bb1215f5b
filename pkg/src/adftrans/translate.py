"""Translations of AF, SETAF, EAFC and AFN into ADFs, plus strong consistency."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .core import TOP, Adf, AdfError, Atom, conj, disj
from .frameworks import Af, Afn, Eafc, Setaf


@dataclass(frozen=True)
class ConsistencyReport:
    """Violations of strong consistency.

    AFN witnesses are ``(argument, overlap)``: arguments both supporting and
    attacking it.  EAFC witnesses are ``(x, y, z, X)``: ``x`` attacks ``y`` and
    belongs to ``X``, which defense-attacks ``(z, y)``.
    """

    witnesses: tuple = field(default_factory=tuple)

    @property
    def consistent(self) -> bool:
        return not self.witnesses

    def __str__(self):
        if self.consistent:
            return "strongly consistent"
        lines = ["not strongly consistent:"]
        for w in self.witnesses:
            if len(w) == 2:
                lines.append(f"  {w[0]} is supported and attacked by {','.join(sorted(w[1]))}")
            else:
                x, y, z, s = w
                lines.append(
                    f"  {x} attacks {y} and is in {{{','.join(sorted(s))}}}, which defense-attacks ({z},{y})"
                )
        return "\n".join(lines)


class InconsistentFramework(AdfError):
    def __init__(self, report: ConsistencyReport):
        self.report = report
        super().__init__(str(report))


def check_consistency(fw: Union[Afn, Eafc]) -> ConsistencyReport:
    if isinstance(fw, Afn):
        out = []
        for a in sorted(fw.args):
            supporters = frozenset().union(*fw.supports(a))
            attackers = {b for b, t in fw.attacks if t == a}
            overlap = supporters & attackers
            if overlap:
                out.append((a, frozenset(overlap)))
        return ConsistencyReport(tuple(out))
    if isinstance(fw, Eafc):
        out = set()
        for x, y in fw.attacks:
            for s, (z, y2) in fw.dattacks:
                if y2 == y and x in s:
                    out.add((x, y, z, s))
        return ConsistencyReport(tuple(sorted(out, key=lambda w: (w[0], w[1], w[2], sorted(w[3])))))
    raise TypeError("strong consistency is defined for AFNs and EAFCs only")


def _neg_all(xs):
    return conj(~Atom(x) for x in sorted(xs))


def translate_af(af: Af) -> Adf:
    cond = {a: _neg_all(af.attackers(a)) for a in sorted(af.args)}
    return Adf(tuple(sorted(af.args)), cond)


def translate_setaf(sf: Setaf) -> Adf:
    cond = {}
    for a in sorted(sf.args):
        sets = sorted(sf.attacking_sets(a), key=sorted)
        cond[a] = conj(disj(~Atom(x) for x in sorted(s)) for s in sets)
    return Adf(tuple(sorted(sf.args)), cond)


def translate_eafc(eafc: Eafc) -> Adf:
    report = check_consistency(eafc)
    if not report.consistent:
        raise InconsistentFramework(report)
    cond = {}
    for a in sorted(eafc.args):
        parts = []
        for b in sorted({b for b, t in eafc.attacks if t == a}):
            protectors = sorted(eafc.datt((b, a)), key=sorted)
            parts.append(disj([~Atom(b)] + [conj(Atom(c) for c in sorted(s)) for s in protectors]))
        cond[a] = conj(parts)
    return Adf(tuple(sorted(eafc.args)), cond)


def translate_afn(afn: Afn) -> Adf:
    report = check_consistency(afn)
    if not report.consistent:
        raise InconsistentFramework(report)
    cond = {}
    for a in sorted(afn.args):
        att = _neg_all({b for b, t in afn.attacks if t == a})
        sup = conj(disj(Atom(z) for z in sorted(s)) for s in sorted(afn.supports(a), key=sorted))
        cond[a] = conj(p for p in (att, sup) if p != TOP)
    return Adf(tuple(sorted(afn.args)), cond)


def translate(fw) -> Adf:
    if isinstance(fw, Af):
        return translate_af(fw)
    if isinstance(fw, Setaf):
        return translate_setaf(fw)
    if isinstance(fw, Eafc):
        return translate_eafc(fw)
    if isinstance(fw, Afn):
        return translate_afn(fw)
    raise TypeError(f"cannot translate {type(fw).__name__}")
