"""Arguments, propositional acceptance conditions, ADFs and partial interpretations."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

ArgId = str

_ARG_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

IN = "in"
OUT = "out"


class AdfError(ValueError):
    """Malformed framework or query (unknown argument, bad formula, ...)."""


def check_arg_id(name: str) -> str:
    if not isinstance(name, str) or not _ARG_RE.match(name):
        raise AdfError(f"invalid argument id {name!r}")
    return name


def sorted_names(xs: Iterable[ArgId]) -> list[ArgId]:
    return sorted(xs)


def format_set(xs: Iterable[ArgId]) -> str:
    return "{" + ",".join(sorted(xs)) + "}"


# --------------------------------------------------------------------------
# Formulas


class Formula:
    """Base class of propositional acceptance conditions."""

    __slots__ = ()

    def atoms(self) -> frozenset[ArgId]:
        raise NotImplementedError

    def holds(self, true: Container) -> bool:
        """Truth value when exactly the atoms in ``true`` are true."""
        raise NotImplementedError

    def __invert__(self) -> "Formula":
        return Neg(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And((self, other))

    def __or__(self, other: "Formula") -> "Formula":
        return Or((self, other))


Container = Union[set, frozenset, Mapping]


@dataclass(frozen=True)
class Top(Formula):
    def atoms(self):
        return frozenset()

    def holds(self, true):
        return True

    def __str__(self):
        return "⊤"


@dataclass(frozen=True)
class Bot(Formula):
    def atoms(self):
        return frozenset()

    def holds(self, true):
        return False

    def __str__(self):
        return "⊥"


@dataclass(frozen=True)
class Atom(Formula):
    arg: ArgId

    def atoms(self):
        return frozenset((self.arg,))

    def holds(self, true):
        return self.arg in true

    def __str__(self):
        return self.arg


@dataclass(frozen=True)
class Neg(Formula):
    sub: Formula

    def atoms(self):
        return self.sub.atoms()

    def holds(self, true):
        return not self.sub.holds(true)

    def __str__(self):
        return f"¬{self.sub}"


def _flatten(kind: type, subs: Iterable[Formula]) -> tuple[Formula, ...]:
    out: list[Formula] = []
    for s in subs:
        if not isinstance(s, Formula):
            raise AdfError(f"not a formula: {s!r}")
        if type(s) is kind:
            out.extend(s.subs)
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class And(Formula):
    # Nested conjunctions are flattened on construction, so structural
    # equality is insensitive to associativity.
    subs: tuple[Formula, ...]

    def __post_init__(self):
        subs = _flatten(And, self.subs)
        if not subs:
            raise AdfError("conjunction needs at least one operand")
        object.__setattr__(self, "subs", subs)

    def atoms(self):
        return frozenset().union(*(s.atoms() for s in self.subs))

    def holds(self, true):
        return all(s.holds(true) for s in self.subs)

    def __str__(self):
        return "(" + " ∧ ".join(map(str, self.subs)) + ")"


@dataclass(frozen=True)
class Or(Formula):
    subs: tuple[Formula, ...]

    def __post_init__(self):
        subs = _flatten(Or, self.subs)
        if not subs:
            raise AdfError("disjunction needs at least one operand")
        object.__setattr__(self, "subs", subs)

    def atoms(self):
        return frozenset().union(*(s.atoms() for s in self.subs))

    def holds(self, true):
        return any(s.holds(true) for s in self.subs)

    def __str__(self):
        return "(" + " ∨ ".join(map(str, self.subs)) + ")"


TOP = Top()
BOT = Bot()


def conj(items: Iterable[Formula]) -> Formula:
    """Conjunction of ``items``; ⊤ when empty, the item itself when single."""
    items = tuple(items)
    if not items:
        return TOP
    if len(items) == 1:
        return items[0]
    return And(items)


def disj(items: Iterable[Formula]) -> Formula:
    """Disjunction of ``items``; ⊥ when empty, the item itself when single."""
    items = tuple(items)
    if not items:
        return BOT
    if len(items) == 1:
        return items[0]
    return Or(items)


def simplify(f: Formula) -> Formula:
    """Constant folding and double-negation removal; preserves truth value."""
    if isinstance(f, Neg):
        sub = simplify(f.sub)
        if isinstance(sub, Neg):
            return sub.sub
        if isinstance(sub, Top):
            return BOT
        if isinstance(sub, Bot):
            return TOP
        return Neg(sub)
    if isinstance(f, And):
        subs = [simplify(s) for s in f.subs]
        if any(isinstance(s, Bot) for s in subs):
            return BOT
        return conj(s for s in subs if not isinstance(s, Top))
    if isinstance(f, Or):
        subs = [simplify(s) for s in f.subs]
        if any(isinstance(s, Top) for s in subs):
            return TOP
        return disj(s for s in subs if not isinstance(s, Bot))
    return f


# --------------------------------------------------------------------------
# Partial two-valued interpretations


@dataclass(frozen=True)
class PartialAssignment:
    """Two-valued interpretation on a finite set of arguments."""

    true: frozenset[ArgId] = frozenset()
    false: frozenset[ArgId] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "true", frozenset(self.true))
        object.__setattr__(self, "false", frozenset(self.false))
        overlap = self.true & self.false
        if overlap:
            raise AdfError(f"arguments assigned both t and f: {format_set(overlap)}")

    @classmethod
    def from_mapping(cls, m: Mapping[ArgId, bool]) -> "PartialAssignment":
        return cls(
            frozenset(a for a, b in m.items() if b),
            frozenset(a for a, b in m.items() if not b),
        )

    @property
    def domain(self) -> frozenset[ArgId]:
        return self.true | self.false

    def as_dict(self) -> dict[ArgId, bool]:
        d = {a: True for a in self.true}
        d.update({a: False for a in self.false})
        return d

    def dominates(self, other: "PartialAssignment") -> bool:
        """True if ``self`` is strictly smaller than ``other`` componentwise."""
        return self != other and self.true <= other.true and self.false <= other.false

    def __str__(self):
        parts = [f"{a}↦t" for a in sorted(self.true)] + [f"{a}↦f" for a in sorted(self.false)]
        return "{" + ", ".join(parts) + "}"


EMPTY = PartialAssignment()


def completions(v: PartialAssignment, z: Iterable[ArgId]) -> list[PartialAssignment]:
    """All extensions of ``v`` to the domain ``z``; the f-completion comes first."""
    z = frozenset(z)
    if not v.domain <= z:
        raise AdfError("domain of the interpretation is not contained in the target set")
    free = sorted(z - v.domain)
    out = []
    for bits in itertools.product((False, True), repeat=len(free)):
        extra_t = frozenset(a for a, b in zip(free, bits) if b)
        out.append(PartialAssignment(v.true | extra_t, v.false | (frozenset(free) - extra_t)))
    return out


# --------------------------------------------------------------------------
# ADFs


@dataclass(frozen=True, eq=False)
class Adf:
    """Abstract dialectical framework given by one formula per argument.

    Links are implicit: the parents of ``a`` are the atoms of ``cond[a]``.
    Equality ignores declaration order.
    """

    args: tuple[ArgId, ...]
    cond: Mapping[ArgId, Formula]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        args = tuple(check_arg_id(a) for a in self.args)
        if len(set(args)) != len(args):
            raise AdfError("duplicate argument")
        cond = dict(self.cond)
        extra = set(cond) - set(args)
        if extra:
            raise AdfError(f"condition for undeclared argument(s) {format_set(extra)}")
        for a in args:
            f = cond.setdefault(a, TOP)
            unknown = f.atoms() - set(args)
            if unknown:
                raise AdfError(f"condition of {a} mentions undeclared {format_set(unknown)}")
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "cond", cond)

    @classmethod
    def from_conditions(cls, cond: Mapping[ArgId, Formula]) -> "Adf":
        return cls(tuple(cond), cond)

    @property
    def arg_set(self) -> frozenset[ArgId]:
        s = self._cache.get("arg_set")
        if s is None:
            s = self._cache["arg_set"] = frozenset(self.args)
        return s

    def links(self) -> set[tuple[ArgId, ArgId]]:
        return {(p, a) for a in self.args for p in parents(self, a)}

    def __eq__(self, other):
        if not isinstance(other, Adf):
            return NotImplemented
        return self.arg_set == other.arg_set and self.cond == other.cond

    def __hash__(self):
        return hash((self.arg_set, frozenset(self.cond.items())))

    def __len__(self):
        return len(self.args)


def _check(adf: Adf, a: ArgId) -> None:
    if a not in adf.cond:
        raise AdfError(f"unknown argument {a!r}")


def parents(adf: Adf, a: ArgId) -> frozenset[ArgId]:
    _check(adf, a)
    return _table(adf, a)[0]


def eval_condition(adf: Adf, a: ArgId, s: Iterable[ArgId]) -> str:
    """``in`` iff the condition of ``a`` holds when exactly ``s ∩ par(a)`` is true."""
    _check(adf, a)
    par, order, table = _table(adf, a)
    s = set(s)
    mask = 0
    for i, p in enumerate(order):
        if p in s:
            mask |= 1 << i
    return IN if table[mask] else OUT


def _table(adf: Adf, a: ArgId):
    """(parents, parent order, truth table indexed by bitmask over that order)."""
    key = ("table", a)
    hit = adf._cache.get(key)
    if hit is not None:
        return hit
    f = adf.cond[a]
    order = tuple(sorted(f.atoms()))
    table = []
    for mask in range(1 << len(order)):
        true = {p for i, p in enumerate(order) if mask >> i & 1}
        table.append(f.holds(true))
    hit = adf._cache[key] = (frozenset(order), order, tuple(table))
    return hit


def iter_subsets(xs: Iterable[ArgId]) -> Iterator[frozenset[ArgId]]:
    xs = sorted(xs)
    for r in range(len(xs) + 1):
        for combo in itertools.combinations(xs, r):
            yield frozenset(combo)


def semantically_equal(f: Formula, g: Formula) -> bool:
    """Agreement of two formulas on every assignment to their joint atoms."""
    atoms = sorted(f.atoms() | g.atoms())
    return all(f.holds(s) == g.holds(s) for s in iter_subsets(atoms))
