"""Tokenizer and SVO clause parser.

A clause is subject NP, verb group, object NP, optional terminal punctuation.
The verb group is classified into one of twelve tense/form cells ``v_ij``
(i: 1 present, 2 past, 3 future; j: 1 simple, 2 continuous, 3 perfect,
4 perfect continuous) by longest match over the auxiliary patterns below.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import MissingObject, NotSVO, ParseError, UnknownVerbForm
from .lexicon import CaseRole, Lexicon, NounPhrase
from .morphology import MorphFeature, Number, Source, best_analysis, classify_verb_token

TERMINAL_PUNCT = ".!?"
_WORD = re.compile(r"^[A-Za-z][A-Za-z'-]*$")
_TRAILING_PUNCT = re.compile(r"^(.*?)([.!?]+)$")

BASE = MorphFeature.BASE
THIRD = MorphFeature.THIRD_SINGULAR
PAST = MorphFeature.PAST
EN = MorphFeature.PAST_PARTICIPLE
ING = MorphFeature.PRESENT_PARTICIPLE

BE_PRESENT = frozenset({"am", "is", "are"})
BE_PAST = frozenset({"was", "were"})
HAVE_PRESENT = frozenset({"have", "has"})
MODALS = frozenset({"shall", "will"})

# (tense, form) -> auxiliary slots followed by the lexical head's features.
# Each auxiliary slot is a set of accepted words.
PATTERNS = {
    (1, 1): ((), (BASE, THIRD)),
    (1, 2): ((BE_PRESENT,), (ING,)),
    (1, 3): ((HAVE_PRESENT,), (EN,)),
    (1, 4): ((HAVE_PRESENT, {"been"}), (ING,)),
    (2, 1): ((), (PAST,)),
    (2, 2): ((BE_PAST,), (ING,)),
    (2, 3): (({"had"},), (EN,)),
    (2, 4): (({"had"}, {"been"}), (ING,)),
    (3, 1): ((MODALS,), (BASE,)),
    (3, 2): ((MODALS, {"be"}), (ING,)),
    (3, 3): ((MODALS, {"have"}), (EN,)),
    (3, 4): ((MODALS, {"have"}, {"been"}), (ING,)),
}


@dataclass(frozen=True)
class Token:
    surface: str
    lowered: str
    position: int
    sentence_initial: bool = False

    @property
    def is_punct(self) -> bool:
        return bool(self.surface) and set(self.surface) <= set(TERMINAL_PUNCT)

    @property
    def is_word(self) -> bool:
        return bool(_WORD.match(self.surface))


@dataclass(frozen=True)
class VerbGroup:
    tense: int
    form: int
    lemma: str
    aux_tokens: Tuple[str, ...]
    head_token: str
    modal: Optional[str] = None
    source: Source = Source.LEXICON

    def __post_init__(self):
        if (self.tense, self.form) not in PATTERNS:
            raise ValueError(f"no verb form v{self.tense}{self.form}")
        if (self.modal is not None) != (self.tense == 3):
            raise ValueError("modal must be present exactly for the future tense")

    @property
    def trust(self) -> Source:
        """Auxiliaries pin the analysis down regardless of how the head was found."""
        return Source.LEXICON if self.aux_tokens else self.source

    @property
    def cell(self) -> Tuple[int, int]:
        return (self.tense, self.form)

    @property
    def name(self) -> str:
        return f"v{self.tense}{self.form}"

    @property
    def tokens(self) -> Tuple[str, ...]:
        return self.aux_tokens + (self.head_token,)


@dataclass(frozen=True)
class ClauseSVO:
    subject: NounPhrase
    verb: VerbGroup
    object: NounPhrase
    terminal_punct: Optional[str] = None
    source_tokens: Tuple[str, ...] = ()

    def tokens(self) -> List[str]:
        out = list(self.subject.tokens) + list(self.verb.tokens) + list(self.object.tokens)
        if self.terminal_punct:
            out.append(self.terminal_punct)
        return out


def tokenize(text: str) -> List[Token]:
    words = text.split()
    if not words:
        raise ParseError("empty sentence", 0)
    m = _TRAILING_PUNCT.match(words[-1])
    if m:
        stem, punct = m.groups()
        words[-1:] = [stem, punct] if stem else [punct]
    return [
        Token(surface=w, lowered=w.lower(), position=i, sentence_initial=(i == 0))
        for i, w in enumerate(words)
    ]


def _as_tokens(tokens):
    if isinstance(tokens, str):
        return tokenize(tokens)
    return list(tokens)


# -- noun phrases -----------------------------------------------------------


def _head_eligible(lexicon: Lexicon, tok: Token) -> bool:
    return tok.is_word and not lexicon.is_function_word(tok.lowered) and tok.lowered not in ("have", "has", "had")


def _display(lexicon, tok: Token, bare: bool, number: Number) -> str:
    # Sentence-initial capitals are only kept for bare singular heads (likely
    # proper nouns such as "John"); everything else reverts to lower case.
    if tok.sentence_initial and not (bare and number is Number.SINGULAR):
        return tok.lowered
    return tok.surface


def _nominal(lexicon, det: Optional[Token], heads: Sequence[Token], number_override=None) -> NounPhrase:
    number = number_override or lexicon.noun_number(det.lowered if det else None, [t.lowered for t in heads])
    surfaces = [_display(lexicon, t, det is None, number) for t in heads]
    return lexicon.compound_np(det.lowered if det else None, surfaces, number)


def _np_candidates(lexicon, tokens, start, role, number_override=None):
    """Every NP that starts at ``start``, as (np, next_index) pairs, longest first."""
    out = []
    if start >= len(tokens):
        return out
    first = tokens[start]
    pron = lexicon.lookup_pronoun(first.lowered, role) if first.is_word else None
    det = first if lexicon.is_article(first.lowered) and first.is_word else None
    head_start = start + 1 if det else start
    end = head_start
    while end < len(tokens) and _head_eligible(lexicon, tokens[end]):
        end += 1
    for stop in range(end, head_start, -1):
        out.append((_nominal(lexicon, det, tokens[head_start:stop], number_override), stop))
    if pron is not None:
        out.append((lexicon.pronoun_np(pron), start + 1))
    return out


def _starts_verb_group(lexicon, tokens, i) -> bool:
    tok = tokens[i]
    if tok.lowered in BE_PRESENT | BE_PAST | MODALS | {"have", "has", "had"}:
        return True
    return any(a.source > Source.GUESS for a in classify_verb_token(lexicon, tok.lowered))


def parse_np(lexicon: Lexicon, tokens, start: int = 0, role: Optional[CaseRole] = None,
             number: Optional[Number] = None) -> Tuple[NounPhrase, int]:
    """Greedy NP at ``start``: a single pronoun, or [determiner] + heads.

    Heads extend until a token that could begin a verb group (an auxiliary or
    a recognised inflected verb form); the first head is always taken.
    """
    tokens = _as_tokens(tokens)
    if start >= len(tokens):
        raise NotSVO("expected a noun phrase, found end of sentence", start)
    first = tokens[start]
    if first.is_word and not lexicon.is_article(first.lowered):
        pron = lexicon.lookup_pronoun(first.lowered, role)
        if pron is not None:
            return lexicon.pronoun_np(pron), start + 1
    det = first if first.is_word and lexicon.is_article(first.lowered) else None
    i = start + 1 if det else start
    if i >= len(tokens) or not _head_eligible(lexicon, tokens[i]):
        if det is not None and lexicon.lookup_pronoun(det.lowered, role) is not None:
            return lexicon.pronoun_np(lexicon.lookup_pronoun(det.lowered, role)), start + 1
        raise NotSVO(f"no noun phrase at {first.surface!r}", start)
    stop = i + 1
    while stop < len(tokens) and _head_eligible(lexicon, tokens[stop]) and not _starts_verb_group(lexicon, tokens, stop):
        stop += 1
    return _nominal(lexicon, det, tokens[i:stop], number), stop


# -- verb groups ------------------------------------------------------------


def _match(lexicon, tokens, start, cell) -> Optional[VerbGroup]:
    aux_slots, head_feats = PATTERNS[cell]
    n = len(aux_slots)
    if start + n >= len(tokens):
        return None
    for slot, tok in zip(aux_slots, tokens[start:start + n]):
        if tok.lowered not in slot:
            return None
    head = tokens[start + n]
    analyses = [a for a in classify_verb_token(lexicon, head.lowered) if a.feature in head_feats]
    if not analyses:
        return None
    best = best_analysis(analyses)
    aux = tuple(t.lowered for t in tokens[start:start + n])
    return VerbGroup(
        tense=cell[0],
        form=cell[1],
        lemma=best.lemma,
        aux_tokens=aux,
        head_token=head.lowered,
        modal=aux[0] if cell[0] == 3 else None,
        source=best.source,
    )


def verb_group_candidates(lexicon: Lexicon, tokens, start: int) -> List[VerbGroup]:
    """All patterns matching at ``start``, ranked: longest, then most trusted.

    Among one-word groups a past reading beats a present one at equal trust,
    so "They read the book" is taken as past (v21).
    """
    tokens = _as_tokens(tokens)
    found = [vg for cell in PATTERNS if (vg := _match(lexicon, tokens, start, cell)) is not None]
    found.sort(key=lambda vg: (-len(vg.aux_tokens), -vg.trust, -vg.tense, vg.form))
    return found


def parse_verb_group(lexicon: Lexicon, tokens, start: int = 0) -> Tuple[VerbGroup, int]:
    tokens = _as_tokens(tokens)
    found = verb_group_candidates(lexicon, tokens, start)
    if not found:
        where = tokens[start].surface if start < len(tokens) else "end of sentence"
        raise UnknownVerbForm(f"no verb pattern matches at {where!r}", start)
    vg = found[0]
    return vg, start + len(vg.tokens)


# -- clauses ----------------------------------------------------------------


def parse_clause(lexicon: Lexicon, text: str, number: Optional[Number] = None) -> ClauseSVO:
    """Parse one active SVO sentence.

    Subject spans are tried from every admissible length; the winning parse
    has the most trusted verb analysis, then the shortest subject. ``number``
    forces the grammatical number of every nominal NP.
    """
    tokens = tokenize(text)
    punct = None
    if tokens[-1].is_punct:
        punct = tokens[-1].surface
        tokens = tokens[:-1]
        if not tokens:
            raise NotSVO("sentence has no words", 0)
    if punct is not None and "?" in punct:
        raise NotSVO("questions are not transformable", len(tokens))

    subjects = _np_candidates(lexicon, tokens, 0, CaseRole.SUBJECTIVE, number)
    if not subjects:
        raise NotSVO(f"no subject noun phrase at {tokens[0].surface!r}", 0)

    parses = []
    missing_object = None
    verb_seen = False
    for subject, v_start in subjects:
        if v_start >= len(tokens):
            continue
        found = verb_group_candidates(lexicon, tokens, v_start)
        if not found:
            continue
        verb_seen = True
        vg = found[0]  # longest match only; shorter readings never rescue a parse
        o_start = v_start + len(vg.tokens)
        if o_start >= len(tokens):
            missing_object = o_start if missing_object is None else missing_object
            continue
        for obj, o_end in _np_candidates(lexicon, tokens, o_start, CaseRole.OBJECTIVE, number):
            if o_end == len(tokens):
                parses.append((subject, vg, obj))

    if not parses:
        if missing_object is not None:
            raise MissingObject("verb group reaches the end of the sentence; no object", missing_object)
        if not verb_seen:
            _, v_start = subjects[-1]
            raise UnknownVerbForm(
                f"no verb pattern matches at {tokens[v_start].surface!r}"
                if v_start < len(tokens) else "no verb group", v_start)
        raise NotSVO("sentence is not a simple subject-verb-object clause", 0)

    subject, vg, obj = min(parses, key=lambda p: (-p[1].trust, len(p[0].tokens)))
    return ClauseSVO(
        subject=subject,
        verb=vg,
        object=obj,
        terminal_punct=punct,
        source_tokens=tuple(t.lowered for t in tokenize(text)),
    )
