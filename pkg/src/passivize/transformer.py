"""Active -> passive transformation.

    T(S # V * O) = (O^-1 (x) V''' * S^-1)

The object is inverted and promoted, the subject inverted and demoted behind
"by", the verb replaced by its passive core, and the auxiliary in front of
the core is looked up from the agreement table keyed on the verb cell and the
*new* subject. Four verb cells have no passive image at all (the kernel).
"""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from .errors import KernelForm
from .lexicon import Lexicon, NounPhrase
from .morphology import Number, np_number, participle_of
from .parser import ClauseSVO, VerbGroup

KERNEL = frozenset({(1, 4), (2, 4), (3, 2), (3, 4)})

SUBJECT_CLASSES = ("I", "we", "you", "he", "she", "they", "noun-singular", "noun-plural")

_PRONOUN_CLASS = {1: "I", 2: "we", 3: "you", 4: "he", 5: "she", 6: "they"}

_ROWS = {
    #        I        we       you      he       she      they     noun-sg  noun-pl
    (1, 1): ("am",   "are",   "are",   "is",    "is",    "are",   "is",    "are"),
    (1, 2): ("am",   "are",   "are",   "is",    "is",    "are",   "is",    "are"),
    (1, 3): ("have", "have",  "have",  "has",   "has",   "have",  "has",   "have"),
    (2, 1): ("was",  "were",  "were",  "was",   "was",   "were",  "was",   "were"),
    (2, 2): ("was",  "were",  "were",  "was",   "was",   "were",  "was",   "were"),
    (2, 3): ("had",  "had",   "had",   "had",   "had",   "had",   "had",   "had"),
    (3, 1): ("shall", "will", "will",  "will",  "will",  "will",  "will",  "will"),
    (3, 3): ("shall have", "will have", "will have", "will have", "will have",
             "will have", "will have", "will have"),
}

AgreementTable = Mapping[Tuple[int, int, str], Tuple[str, ...]]


def build_agreement_table() -> AgreementTable:
    table = {}
    for (tense, form), cells in _ROWS.items():
        for cls, cell in zip(SUBJECT_CLASSES, cells):
            table[(tense, form, cls)] = tuple(cell.split())
    return MappingProxyType(table)


AGREEMENT_TABLE = build_agreement_table()


@dataclass(frozen=True)
class PassiveClause:
    promoted_subject: NounPhrase
    auxiliary: Tuple[str, ...]
    core: Tuple[str, ...]
    agent: NounPhrase
    terminal_punct: Optional[str] = None
    cell: Optional[Tuple[int, int, str]] = None

    def tokens(self):
        return [*self.promoted_subject.tokens, *self.auxiliary, *self.core, "by", *self.agent.tokens]

    def render(self) -> str:
        return render(self)


def kernel_check(v) -> bool:
    cell = v.cell if isinstance(v, VerbGroup) else tuple(v)
    return cell in KERNEL


def subject_class(np: NounPhrase) -> str:
    """Agreement column for a (new) subject: pronoun by |exponent|, nouns by number."""
    if np.pronoun is not None:
        return _PRONOUN_CLASS[abs(np.pronoun.exponent)]
    return "noun-plural" if np_number(np) is Number.PLURAL else "noun-singular"


def passive_core(lexicon: Lexicon, v: VerbGroup) -> Tuple[str, ...]:
    if kernel_check(v):
        raise KernelForm(v.tense, v.form)
    p = participle_of(lexicon, v.lemma)
    if v.form == 1:
        return ("be", p) if v.tense == 3 else (p,)
    if v.form == 2:
        return ("being", p)
    return ("been", p)


def passive_auxiliary(table: AgreementTable, v: VerbGroup, new_subject: NounPhrase) -> Tuple[str, ...]:
    if kernel_check(v):
        raise KernelForm(v.tense, v.form)
    return table[(v.tense, v.form, subject_class(new_subject))]


def transform(lexicon: Lexicon, table: AgreementTable, clause: ClauseSVO) -> PassiveClause:
    v = clause.verb
    if kernel_check(v):
        raise KernelForm(v.tense, v.form)
    promoted = lexicon.np_invert(clause.object)
    agent = lexicon.np_invert(clause.subject)
    return PassiveClause(
        promoted_subject=promoted,
        auxiliary=passive_auxiliary(table, v, promoted),
        core=passive_core(lexicon, v),
        agent=agent,
        terminal_punct=clause.terminal_punct,
        cell=(v.tense, v.form, subject_class(promoted)),
    )


def render(p: PassiveClause) -> str:
    text = " ".join(p.tokens())
    text = text[:1].upper() + text[1:]
    return text + (p.terminal_punct or "")


def render_swapped(p: PassiveClause) -> str:
    """The same pieces with promoted subject and agent exchanged."""
    return render(PassiveClause(p.agent, p.auxiliary, p.core, p.promoted_subject, p.terminal_punct))

