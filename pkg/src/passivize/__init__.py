"""Rule-based active-to-passive transformation of simple English SVO clauses."""
from .errors import (
    KernelForm,
    LexiconError,
    MissingObject,
    NotSVO,
    ParseError,
    PassivizeError,
    StructuralError,
    UnknownVerbForm,
)
from .lexicon import Lexicon, NounPhrase, PronounElement, default_lexicon, load_lexicon
from .morphology import MorphFeature, Number, classify_verb_token, participle_of, regular_inflect
from .parser import ClauseSVO, VerbGroup, parse_clause, tokenize
from .transformer import AGREEMENT_TABLE, PassiveClause, kernel_check, render, transform

__version__ = "0.1.0"


def passivize(text, lexicon=None, number=None):
    """Parse, transform and render one sentence; raises on kernel/parse failures."""
    lexicon = lexicon or default_lexicon()
    clause = parse_clause(lexicon, text, number=number)
    return render(transform(lexicon, AGREEMENT_TABLE, clause))


__all__ = [
    "AGREEMENT_TABLE",
    "ClauseSVO",
    "KernelForm",
    "Lexicon",
    "LexiconError",
    "MissingObject",
    "MorphFeature",
    "NotSVO",
    "NounPhrase",
    "Number",
    "ParseError",
    "PassiveClause",
    "PassivizeError",
    "PronounElement",
    "StructuralError",
    "UnknownVerbForm",
    "VerbGroup",
    "classify_verb_token",
    "default_lexicon",
    "kernel_check",
    "load_lexicon",
    "parse_clause",
    "participle_of",
    "passivize",
    "regular_inflect",
    "render",
    "tokenize",
    "transform",
]
