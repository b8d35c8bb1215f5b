"""Command-line entry point.

Exit codes: 0 success, 1 difftest/suite failure, 2 no least grounded
extension, 3 translation refused, 64 usage error, 65 malformed input,
66 unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import frameworks as fw
from .core import format_set
from .harness import SUITES, GenParams, check_lemma_suite, difftest
from .io import KINDS, Document, ParseError, parse_file, serialize
from .semantics import SEMANTICS, NoLeastExtension, classify, extensions
from .translate import InconsistentFramework, translate

EX_USAGE, EX_DATAERR, EX_NOINPUT = 64, 65, 66
SOURCE_KINDS = ("af", "setaf", "eafc", "afn")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def semantics_for(kind: str) -> tuple[str, ...]:
    if kind == "adf":
        return SEMANTICS
    return fw.AFN_SEMANTICS if kind == "afn" else fw.SOURCE_SEMANTICS


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="adftrans", description="ADF semantics and translations of argumentation frameworks.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="enumerate extensions")
    s.add_argument("--format", required=True, choices=KINDS)
    s.add_argument("--semantics", required=True)
    s.add_argument("file")

    t = sub.add_parser("translate", help="translate a framework into an ADF")
    t.add_argument("--from", dest="source", required=True, choices=SOURCE_KINDS)
    t.add_argument("file")

    c = sub.add_parser("classify", help="BADF / AADF+ flags and link polarities")
    c.add_argument("--format", default="adf", choices=KINDS, help="translate source kinds first (default: adf)")
    c.add_argument("file")

    d = sub.add_parser("difftest", help="differential test of native semantics against translations")
    d.add_argument("--kind", required=True, choices=SOURCE_KINDS)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--trials", type=int, default=200)
    d.add_argument("--min-args", type=int, default=2)
    d.add_argument("--max-args", type=int, default=7)
    d.add_argument("--edge-prob", type=float, default=GenParams.edge_prob)
    d.add_argument("--max-set-size", type=int, default=GenParams.max_set_size)
    d.add_argument("--datt-prob", type=float, default=GenParams.datt_prob)
    d.add_argument("--nec-prob", type=float, default=GenParams.nec_prob)
    d.add_argument("--nec-size", type=int, default=GenParams.nec_size)
    d.add_argument("--cycle-bias", type=float, default=GenParams.cycle_bias)

    u = sub.add_parser("suite", help="run one property suite on a file")
    u.add_argument("--format", required=True, choices=KINDS)
    u.add_argument("--id", required=True, choices=SUITES)
    u.add_argument("file")
    return p


def _load(path: str, kind: str) -> Document:
    try:
        return parse_file(path, kind)
    except OSError as e:
        raise _Exit(EX_NOINPUT, f"cannot read {path}: {e.strerror or e}") from None
    except ParseError as e:
        raise _Exit(EX_DATAERR, f"{path}: {e}") from None


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code, self.message = code, message


def _body_as_adf(doc: Document):
    if doc.kind == "adf":
        return doc.body
    try:
        return translate(doc.body)
    except InconsistentFramework as e:
        raise _Exit(3, str(e.report)) from None


def _solve(ns, out) -> int:
    if ns.semantics not in semantics_for(ns.format):
        raise UsageError(
            f"unknown semantics {ns.semantics!r} for {ns.format}; choose from {', '.join(semantics_for(ns.format))}"
        )
    doc = _load(ns.file, ns.format)
    try:
        if ns.format == "adf":
            result = extensions(doc.body, ns.semantics)
        else:
            result = fw.source_extensions(doc.body, ns.semantics)
    except NoLeastExtension as e:
        raise _Exit(2, str(e)) from None
    for x in result:
        out.write(format_set(x) + "\n")
    return 0


def _translate(ns, out) -> int:
    doc = _load(ns.file, ns.source)
    out.write(serialize(Document("adf", _body_as_adf(doc))))
    return 0


def _classify(ns, out) -> int:
    adf = _body_as_adf(_load(ns.file, ns.format))
    cl = classify(adf)
    out.write(f"badf: {str(cl.is_badf).lower()}\n")
    out.write(f"aadf+: {str(cl.is_aadf_plus).lower()}\n")
    for (r, s), pol in sorted(cl.polarity.items()):
        out.write(f"{r} -> {s}: {pol}\n")
    return 0


def _difftest(ns, out) -> int:
    if ns.trials < 0 or ns.min_args < 0 or ns.max_args < ns.min_args:
        raise UsageError("need trials >= 0 and 0 <= min-args <= max-args")
    p = GenParams(
        seed=ns.seed,
        n_args=ns.max_args,
        edge_prob=ns.edge_prob,
        max_set_size=ns.max_set_size,
        datt_prob=ns.datt_prob,
        nec_prob=ns.nec_prob,
        nec_size=ns.nec_size,
        cycle_bias=ns.cycle_bias,
        min_args=ns.min_args,
    )
    report = difftest(ns.kind, p, ns.trials)
    out.write(f"kind: {ns.kind}\n{report.summary()}\n")
    return 0 if report.ok else 1


def _suite(ns, out) -> int:
    doc = _load(ns.file, ns.format)
    try:
        report = check_lemma_suite(doc.body, ns.id)
    except InconsistentFramework as e:
        raise _Exit(3, str(e.report)) from None
    except (AttributeError, TypeError):
        raise UsageError(f"suite {ns.id} does not apply to {ns.format} documents") from None
    out.write(f"suite: {ns.id}\n{report.summary()}\n")
    return 0 if report.ok else 1


_COMMANDS = {"solve": _solve, "translate": _translate, "classify": _classify, "difftest": _difftest, "suite": _suite}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _COMMANDS[ns.cmd](ns, out)
    except UsageError as e:
        err.write(f"adftrans {ns.cmd}: error: {e}\n")
        return EX_USAGE
    except _Exit as e:
        if e.message:
            err.write(e.message.rstrip("\n") + "\n")
        return e.code


def run() -> None:
    sys.exit(main())
