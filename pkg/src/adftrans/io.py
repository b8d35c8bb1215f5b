"""Fact-style text formats for AF, SETAF, EAFC, AFN and ADF documents.

    af     arg(X).  att(X,Y).
    setaf  arg(X).  satt([X1,...,Xk],Y).
    eafc   arg(X).  att(X,Y).  datt([X1,...,Xk],Y,Z).   % {X1..Xk} attacks (Y,Z)
    afn    arg(X).  att(X,Y).  nec([X1,...,Xk],Y).
    adf    s(X).    ac(X,F).   F ::= c(v) | c(f) | atom | neg(F) | and(F,...) | or(F,...)

``%`` starts a line comment.  An ADF argument without an ``ac`` fact gets ``c(v)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .core import BOT, TOP, Adf, AdfError, And, Atom, Bot, Formula, Neg, Or, Top
from .frameworks import Af, Afn, Eafc, Setaf

KINDS = ("af", "setaf", "eafc", "afn", "adf")

Body = Union[Af, Setaf, Eafc, Afn, Adf]


class ParseError(AdfError):
    def __init__(self, msg: str, line: int, col: int):
        self.line, self.col = line, col
        super().__init__(f"line {line}, column {col}: {msg}")


@dataclass(frozen=True)
class Document:
    kind: str
    body: Body


# --------------------------------------------------------------------------
# tokenizer / term reader

_TOKEN = re.compile(r"\s+|%[^\n]*|([A-Za-z][A-Za-z0-9_]*)|([(),.\[\]])|(.)")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


@dataclass
class _Term:
    name: str
    args: list  # of _Term | list[_Term]
    line: int
    col: int


def _tokens(text: str) -> list[_Tok]:
    out = []
    line, start = 1, 0
    for m in _TOKEN.finditer(text):
        col = m.start() - start + 1
        if m.group(3) is not None:
            raise ParseError(f"unexpected character {m.group(3)!r}", line, col)
        tok = m.group(1) or m.group(2)
        if tok:
            out.append(_Tok(tok, line, col))
        chunk = m.group(0)
        nl = chunk.count("\n")
        if nl:
            line += nl
            start = m.start() + chunk.rindex("\n") + 1
    return out


class _Reader:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0
        lines = text.split("\n")
        self.end = (len(lines), len(lines[-1]) + 1)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self, expect=None) -> _Tok:
        tok = self.peek()
        if tok is None:
            want = f"{expect!r}" if expect else "more input"
            raise ParseError(f"unexpected end of input, expected {want}", *self.end)
        if expect is not None and tok.text != expect:
            raise ParseError(f"expected {expect!r}, found {tok.text!r}", tok.line, tok.col)
        self.i += 1
        return tok

    def term(self):
        tok = self.next()
        if tok.text == "[":
            items = []
            if self.peek() and self.peek().text == "]":
                self.next()
                return _Term("[]", items, tok.line, tok.col)
            while True:
                items.append(self.term())
                sep = self.next()
                if sep.text == "]":
                    return _Term("[]", items, tok.line, tok.col)
                if sep.text != ",":
                    raise ParseError(f"expected ',' or ']', found {sep.text!r}", sep.line, sep.col)
        if not tok.text[0].isalpha():
            raise ParseError(f"expected a name, found {tok.text!r}", tok.line, tok.col)
        args = []
        if self.peek() and self.peek().text == "(":
            self.next()
            while True:
                args.append(self.term())
                sep = self.next()
                if sep.text == ")":
                    break
                if sep.text != ",":
                    raise ParseError(f"expected ',' or ')', found {sep.text!r}", sep.line, sep.col)
        return _Term(tok.text, args, tok.line, tok.col)

    def facts(self) -> list[_Term]:
        out = []
        while self.peek() is not None:
            t = self.term()
            if t.name == "[]":
                raise ParseError("a fact cannot be a list", t.line, t.col)
            self.next(".")
            out.append(t)
        return out


# --------------------------------------------------------------------------
# parsing


def _name(t, declared=None) -> str:
    if isinstance(t, _Term) and t.name != "[]" and not t.args:
        if declared is not None and t.name not in declared:
            raise ParseError(f"undeclared argument {t.name}", t.line, t.col)
        return t.name
    raise ParseError("expected an argument name", t.line, t.col)


def _names(t, declared, what) -> frozenset[str]:
    if t.name != "[]":
        raise ParseError(f"expected a list of arguments for the {what} set", t.line, t.col)
    if not t.args:
        raise ParseError(f"empty {what} set", t.line, t.col)
    return frozenset(_name(x, declared) for x in t.args)


def _formula(t: _Term, declared) -> Formula:
    if t.name == "[]":
        raise ParseError("expected a formula", t.line, t.col)
    if not t.args:
        return Atom(_name(t, declared))
    if t.name == "c" and len(t.args) == 1 and t.args[0].name in ("v", "f") and not t.args[0].args:
        return TOP if t.args[0].name == "v" else BOT
    if t.name == "neg" and len(t.args) == 1:
        return Neg(_formula(t.args[0], declared))
    if t.name in ("and", "or"):
        subs = tuple(_formula(x, declared) for x in t.args)
        return And(subs) if t.name == "and" else Or(subs)
    raise ParseError(f"unknown connective {t.name}/{len(t.args)}", t.line, t.col)


_SCHEMA = {
    "af": {"arg": 1, "att": 2},
    "setaf": {"arg": 1, "satt": 2},
    "eafc": {"arg": 1, "att": 2, "datt": 3},
    "afn": {"arg": 1, "att": 2, "nec": 2},
    "adf": {"s": 1, "ac": 2},
}


def parse(text: str, kind: str) -> Document:
    if kind not in KINDS:
        raise AdfError(f"unknown document kind {kind!r}")
    facts = _Reader(text).facts()
    schema = _SCHEMA[kind]
    decl_pred = "s" if kind == "adf" else "arg"
    declared: dict[str, None] = {}
    for t in facts:
        if t.name not in schema or len(t.args) != schema[t.name]:
            raise ParseError(f"unexpected fact {t.name}/{len(t.args)} in {kind} document", t.line, t.col)
        if t.name == decl_pred:
            declared.setdefault(_name(t.args[0]), None)
    rel = [t for t in facts if t.name != decl_pred]

    try:
        if kind == "adf":
            cond = {}
            for t in rel:
                a = _name(t.args[0], declared)
                if a in cond:
                    raise ParseError(f"duplicate condition for {a}", t.line, t.col)
                cond[a] = _formula(t.args[1], declared)
            return Document(kind, Adf(tuple(declared), cond))
        args = frozenset(declared)
        if kind == "af":
            att = {(_name(t.args[0], declared), _name(t.args[1], declared)) for t in rel}
            return Document(kind, Af(args, att))
        if kind == "setaf":
            att = {(_names(t.args[0], declared, "attacking"), _name(t.args[1], declared)) for t in rel}
            return Document(kind, Setaf(args, att))
        if kind == "eafc":
            att = {(_name(t.args[0], declared), _name(t.args[1], declared)) for t in rel if t.name == "att"}
            datt = set()
            for t in rel:
                if t.name == "datt":
                    pair = (_name(t.args[1], declared), _name(t.args[2], declared))
                    if pair not in att:
                        raise ParseError(f"datt targets ({pair[0]},{pair[1]}), which is not an attack", t.line, t.col)
                    datt.add((_names(t.args[0], declared, "defense-attacking"), pair))
            return Document(kind, Eafc(args, att, datt))
        att = {(_name(t.args[0], declared), _name(t.args[1], declared)) for t in rel if t.name == "att"}
        nec = {(_names(t.args[0], declared, "necessity"), _name(t.args[1], declared)) for t in rel if t.name == "nec"}
        return Document(kind, Afn(args, att, nec))
    except ParseError:
        raise
    except AdfError as e:
        raise ParseError(str(e), 1, 1) from None


def parse_file(path: str, kind: str) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), kind)


# --------------------------------------------------------------------------
# serialization


def render_formula(f: Formula) -> str:
    if isinstance(f, Top):
        return "c(v)"
    if isinstance(f, Bot):
        return "c(f)"
    if isinstance(f, Atom):
        return f.arg
    if isinstance(f, Neg):
        return f"neg({render_formula(f.sub)})"
    op = "and" if isinstance(f, And) else "or"
    subs = [render_formula(s) for s in f.subs]
    if len(subs) == 1:
        return f"{op}({subs[0]})"
    out = subs[0]
    for s in subs[1:]:
        out = f"{op}({out},{s})"
    return out


def _lst(s) -> str:
    return "[" + ",".join(sorted(s)) + "]"


def serialize(doc: Document) -> str:
    body = doc.body
    if doc.kind == "adf":
        lines = [f"s({a})." for a in sorted(body.args)]
        lines += [f"ac({a},{render_formula(body.cond[a])})." for a in sorted(body.args)]
        return "\n".join(lines) + "\n"
    lines = [f"arg({a})." for a in sorted(body.args)]
    rel = []
    if doc.kind == "setaf":
        rel += [(("satt", sorted(s), b), f"satt({_lst(s)},{b}).") for s, b in body.attacks]
    else:
        rel += [(("att", [a], b), f"att({a},{b}).") for a, b in body.attacks]
    if doc.kind == "eafc":
        rel += [(("datt", sorted(s), y, z), f"datt({_lst(s)},{y},{z}).") for s, (y, z) in body.dattacks]
    if doc.kind == "afn":
        rel += [(("nec", sorted(s), b), f"nec({_lst(s)},{b}).") for s, b in body.necessities]
    lines += [text for _, text in sorted(rel)]
    return "\n".join(lines) + "\n"


def document_for(body: Body) -> Document:
    kind = {Af: "af", Setaf: "setaf", Eafc: "eafc", Afn: "afn", Adf: "adf"}[type(body)]
    return Document(kind, body)
