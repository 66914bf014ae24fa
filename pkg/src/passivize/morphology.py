"""English verb inflection: generation and recognition.

Regular forms are produced by a handful of spelling rules; everything else
comes from the lexicon file. Recognition runs the rules backwards and keeps
every analysis that regenerates the token, so syncretic forms such as
``looked`` (past and past participle) stay ambiguous until the parser sees
the auxiliary context.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, FrozenSet, Iterable

from .errors import StructuralError

if TYPE_CHECKING:
    from .lexicon import Lexicon, NounPhrase

VOWELS = frozenset("aeiou")
SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


class MorphFeature(str, enum.Enum):
    BASE = "base"
    THIRD_SINGULAR = "third_singular"
    PAST = "past"
    PAST_PARTICIPLE = "past_participle"
    PRESENT_PARTICIPLE = "present_participle"


class Number(str, enum.Enum):
    SINGULAR = "singular"
    PLURAL = "plural"


class Source(enum.IntEnum):
    """How an analysis was obtained; higher is more trustworthy."""

    GUESS = 0
    RULE = 1
    LEXICON = 2


@dataclass(frozen=True, order=True)
class Analysis:
    lemma: str
    feature: MorphFeature
    source: Source = Source.LEXICON

    @property
    def pair(self):
        return (self.lemma, self.feature)


def _consonant_y(word):
    return len(word) >= 2 and word.endswith("y") and word[-2] not in VOWELS


def regular_inflect(lemma: str, feature: MorphFeature) -> str:
    if not lemma:
        raise StructuralError("cannot inflect an empty lemma")
    feature = MorphFeature(feature)
    if feature is MorphFeature.BASE:
        return lemma
    if feature in (MorphFeature.PAST, MorphFeature.PAST_PARTICIPLE):
        if lemma.endswith("e"):
            return lemma + "d"
        if _consonant_y(lemma):
            return lemma[:-1] + "ied"
        return lemma + "ed"
    if feature is MorphFeature.PRESENT_PARTICIPLE:
        # "ee" keeps its e: agree -> agreeing
        if lemma.endswith("e") and not lemma.endswith("ee") and len(lemma) > 1:
            return lemma[:-1] + "ing"
        return lemma + "ing"
    # third singular
    if lemma.endswith(SIBILANT_ENDINGS):
        return lemma + "es"
    if _consonant_y(lemma):
        return lemma[:-1] + "ies"
    return lemma + "s"


def _reverse_candidates(token, feature):
    if feature in (MorphFeature.PAST, MorphFeature.PAST_PARTICIPLE):
        if token.endswith("ied"):
            yield token[:-3] + "y"
        if token.endswith("ed"):
            yield token[:-2]
            yield token[:-1]
    elif feature is MorphFeature.PRESENT_PARTICIPLE:
        if token.endswith("ing"):
            yield token[:-3]
            yield token[:-3] + "e"
    elif feature is MorphFeature.THIRD_SINGULAR:
        if token.endswith("ies"):
            yield token[:-3] + "y"
        if token.endswith("es"):
            yield token[:-2]
        if token.endswith("s"):
            yield token[:-1]


def reverse_regular(token: str) -> FrozenSet[Analysis]:
    """All (lemma, feature) pairs whose regular inflection is ``token``."""
    found = set()
    for feature in MorphFeature:
        if feature is MorphFeature.BASE:
            continue
        for lemma in _reverse_candidates(token, feature):
            # one-letter stems produce junk like "s" from "sing"
            if len(lemma) < 2 or not lemma.isalpha():
                continue
            if regular_inflect(lemma, feature) == token:
                found.add(Analysis(lemma, feature, Source.RULE))
    return frozenset(found)


def classify_verb_token(lexicon: "Lexicon", token: str) -> FrozenSet[Analysis]:
    """Candidate analyses of ``token`` as a lexical verb form.

    Index hits win outright. Otherwise the regular rules are run backwards
    (lemmas already in the lexicon are skipped, since their real forms are
    indexed), and the token itself is offered as an unknown base form.
    Function words (auxiliaries, pronouns, articles) get no analysis.
    """
    token = token.lower()
    hits = lexicon.inflection_index.get(token)
    if hits:
        return frozenset(Analysis(lemma, feat, Source.LEXICON) for lemma, feat in hits)
    if lexicon.is_function_word(token) or not token.isalpha():
        return frozenset()
    found = {a for a in reverse_regular(token) if a.lemma not in lexicon.verbs}
    found.add(Analysis(token, MorphFeature.BASE, Source.GUESS))
    return frozenset(found)


def _lemma_preference(lemma):
    """Sort key for picking one lemma among rule-derived candidates.

    Regular rules merge a final e, so ``liked`` could come from ``lik`` or
    ``like``; both give the same participle, so the choice only affects what
    diagnostics print. An e-final lemma is preferred after v/c/z/u, after
    consonant+g/s (change, rinse), and in one-syllable consonant-vowel-consonant
    stems (hope, smile).
    """
    if lemma.endswith("e"):
        stem = lemma[:-1]
        cvc = (
            len(stem) >= 3
            and stem[-1] not in VOWELS | set("wxy")
            and stem[-2] in VOWELS
            and stem[-3] not in VOWELS
            and not VOWELS & set(stem[:-2])
        )
        likely = (
            stem.endswith(("v", "c", "z", "u"))
            or (len(stem) >= 3 and stem[-1] in "gs" and stem[-2] not in VOWELS and stem[-2] != stem[-1])
            or cvc
        )
        return (0 if likely else 2, lemma)
    return (3 if lemma.endswith(("v", "c", "z", "u")) else 1, lemma)


def best_analysis(analyses: Iterable[Analysis]) -> Analysis:
    """Most trustworthy analysis; ties broken by lemma plausibility."""
    return min(analyses, key=lambda a: (-a.source, _lemma_preference(a.lemma), a.feature.value))


def participle_of(lexicon: "Lexicon", lemma: str) -> str:
    entry = lexicon.verbs.get(lemma.lower())
    if entry is not None:
        return entry.past_participle
    return regular_inflect(lemma.lower(), MorphFeature.PAST_PARTICIPLE)


def np_number(np: "NounPhrase") -> Number:
    if np.pronoun is not None:
        return np.pronoun.number
    return np.number
