"""Abstract dialectical frameworks, four source argumentation formalisms and
their translations into ADFs."""

from .core import BOT, TOP, Adf, AdfError, And, Atom, Formula, Neg, Or, PartialAssignment, conj, disj
from .frameworks import Af, Afn, Eafc, Setaf, source_extensions
from .harness import DiffReport, GenParams, check_lemma_suite, difftest, gen
from .io import Document, ParseError, parse, parse_file, serialize
from .semantics import (
    SEMANTICS,
    Decision,
    Evaluation,
    NoLeastExtension,
    acyclic_evaluations,
    classify,
    decide,
    discarded,
    extensions,
    min_dec,
    partially_acyclic_evaluations,
)
from .translate import ConsistencyReport, InconsistentFramework, check_consistency, translate

__all__ = [
    "BOT", "TOP", "Adf", "AdfError", "And", "Atom", "Formula", "Neg", "Or", "PartialAssignment",
    "conj", "disj", "Af", "Afn", "Eafc", "Setaf", "source_extensions", "DiffReport", "GenParams",
    "check_lemma_suite", "difftest", "gen", "Document", "ParseError", "parse", "parse_file",
    "serialize", "SEMANTICS", "Decision", "Evaluation", "NoLeastExtension", "acyclic_evaluations",
    "classify", "decide", "discarded", "extensions", "min_dec", "partially_acyclic_evaluations",
    "ConsistencyReport", "InconsistentFramework", "check_consistency", "translate",
]
__version__ = "0.1.0"
