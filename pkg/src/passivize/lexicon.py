"""Pronoun group, determiners, noun-number hints and the verb lexicon.

The pronoun set is a cyclic group of order 13: subjective forms carry
exponents +1..+6, their objective counterparts -1..-6, and every noun is the
identity element (exponent 0). Inversion negates the exponent, which swaps
case: ``i`` <-> ``me``, ``they`` <-> ``them``.
"""
from __future__ import annotations

import enum
import io
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Dict, FrozenSet, Mapping, Optional, Sequence, Tuple, Union

from .errors import LexiconError, StructuralError
from .morphology import MorphFeature, Number, regular_inflect


class CaseRole(str, enum.Enum):
    SUBJECTIVE = "subjective"
    OBJECTIVE = "objective"
    NEUTRAL = "neutral"


class Person(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    THIRD = "third"


@dataclass(frozen=True)
class PronounElement:
    surface: str
    exponent: int
    case_role: CaseRole
    person: Person
    number: Number

    def __post_init__(self):
        if not -6 <= self.exponent <= 6:
            raise StructuralError(f"exponent {self.exponent} outside -6..6")
        expected = (
            CaseRole.NEUTRAL if self.exponent == 0
            else CaseRole.SUBJECTIVE if self.exponent > 0
            else CaseRole.OBJECTIVE
        )
        if self.case_role is not expected:
            raise StructuralError(f"{self.surface!r}: exponent {self.exponent} requires {expected.value} case")

    @property
    def display(self) -> str:
        return "I" if self.surface == "i" else self.surface


# (surface, exponent, person, number); "you" fills both +3 and -3.
# Second person is filed as plural because it agrees like one (you are/were).
_PRONOUN_ROWS = [
    ("i", 1, Person.FIRST, Number.SINGULAR),
    ("we", 2, Person.FIRST, Number.PLURAL),
    ("you", 3, Person.SECOND, Number.PLURAL),
    ("he", 4, Person.THIRD, Number.SINGULAR),
    ("she", 5, Person.THIRD, Number.SINGULAR),
    ("they", 6, Person.THIRD, Number.PLURAL),
    ("them", -6, Person.THIRD, Number.PLURAL),
    ("her", -5, Person.THIRD, Number.SINGULAR),
    ("him", -4, Person.THIRD, Number.SINGULAR),
    ("you", -3, Person.SECOND, Number.PLURAL),
    ("us", -2, Person.FIRST, Number.PLURAL),
    ("me", -1, Person.FIRST, Number.SINGULAR),
    ("noun", 0, Person.THIRD, Number.SINGULAR),
]


def _role_for(exponent):
    if exponent == 0:
        return CaseRole.NEUTRAL
    return CaseRole.SUBJECTIVE if exponent > 0 else CaseRole.OBJECTIVE


def builtin_pronouns() -> Tuple[PronounElement, ...]:
    return tuple(
        PronounElement(surface, exp, _role_for(exp), person, number)
        for surface, exp, person, number in _PRONOUN_ROWS
    )


DEFAULT_ARTICLES = frozenset(
    "the a an this that these those my our your his her their its".split()
)
SINGULAR_DETERMINERS = frozenset({"a", "an", "this", "that"})
PLURAL_DETERMINERS = frozenset({"these", "those"})

# Nouns ending in "s" that are not plurals.
DEFAULT_INVARIANT_NOUNS = frozenset(
    """news bus gas lens series species physics mathematics economics politics
    analysis basis crisis thesis axis chaos bias atlas virus status campus bonus
    focus census iris octopus cactus canvas walrus corpus genus radius apparatus
    christmas diabetes measles""".split()
)
# Plurals that do not end in "s".
DEFAULT_PLURAL_NOUNS = frozenset(
    "men women children people police mice geese feet teeth oxen cattle data".split()
)

AUXILIARIES = frozenset(
    "am is are was were be been being shall will".split()
)
NEGATORS = frozenset({"not", "never", "no"})
# Closed-class words that can head neither a noun phrase nor a verb group;
# their presence takes a sentence outside the simple SVO shape.
PREPOSITIONS = frozenset(
    """about above across after against along among around at before behind below
    beneath beside between beyond by down during except for from in inside into
    near of off on onto out outside over past since through to toward towards
    under until up upon with within without""".split()
)
CONJUNCTIONS = frozenset("and or but nor so yet because although if when while".split())


@dataclass(frozen=True)
class NounPhrase:
    """A subject/object unit: one pronoun, or an optional determiner plus nominal head."""

    kind: str  # "pronoun" or "nominal"
    head_tokens: Tuple[str, ...]
    number: Number
    determiner: Optional[str] = None
    pronoun: Optional[PronounElement] = None

    def __post_init__(self):
        if self.kind == "pronoun":
            if self.pronoun is None or self.determiner is not None or len(self.head_tokens) != 1:
                raise StructuralError("pronoun NP needs exactly one head token, a table element and no determiner")
        elif self.kind == "nominal":
            if self.pronoun is not None or not self.head_tokens:
                raise StructuralError("nominal NP needs at least one head token and no pronoun element")
        else:
            raise StructuralError(f"unknown NP kind {self.kind!r}")

    @property
    def exponent(self) -> int:
        return self.pronoun.exponent if self.pronoun is not None else 0

    @property
    def tokens(self) -> Tuple[str, ...]:
        """Display tokens (pronoun ``i`` rendered as ``I``)."""
        if self.pronoun is not None:
            return (self.pronoun.display,)
        det = (self.determiner.lower(),) if self.determiner else ()
        return det + tuple(self.head_tokens)

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class VerbLemmaEntry:
    lemma: str
    past: str
    past_participle: str
    present_participle: str
    third_singular: str
    regular: bool = False

    def form(self, feature: MorphFeature) -> str:
        if feature is MorphFeature.BASE:
            return self.lemma
        return getattr(self, MorphFeature(feature).value)

    @classmethod
    def from_lemma(cls, lemma):
        """Entry built entirely by the regular rules."""
        forms = {f: regular_inflect(lemma, f) for f in MorphFeature}
        return cls(
            lemma,
            forms[MorphFeature.PAST],
            forms[MorphFeature.PAST_PARTICIPLE],
            forms[MorphFeature.PRESENT_PARTICIPLE],
            forms[MorphFeature.THIRD_SINGULAR],
            regular=True,
        )


def _is_regular(lemma, past, pp, ing, third):
    return (past, pp, ing, third) == tuple(
        regular_inflect(lemma, f)
        for f in (
            MorphFeature.PAST,
            MorphFeature.PAST_PARTICIPLE,
            MorphFeature.PRESENT_PARTICIPLE,
            MorphFeature.THIRD_SINGULAR,
        )
    )


@dataclass(frozen=True, eq=False)
class Lexicon:
    pronouns: Tuple[PronounElement, ...]
    articles: FrozenSet[str]
    verbs: Mapping[str, VerbLemmaEntry]
    inflection_index: Mapping[str, FrozenSet[Tuple[str, MorphFeature]]]
    invariant_nouns: FrozenSet[str] = DEFAULT_INVARIANT_NOUNS
    plural_nouns: FrozenSet[str] = DEFAULT_PLURAL_NOUNS
    _by_surface: Mapping[Tuple[str, CaseRole], PronounElement] = field(default=None, repr=False, compare=False)
    _by_exponent: Mapping[int, PronounElement] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        exponents = sorted(p.exponent for p in self.pronouns)
        if exponents != list(range(-6, 7)):
            raise LexiconError("pronoun table must use each exponent -6..6 exactly once")
        by_surface = {}
        for p in self.pronouns:
            by_surface.setdefault((p.surface, p.case_role), p)
        object.__setattr__(self, "_by_surface", MappingProxyType(by_surface))
        object.__setattr__(self, "_by_exponent", MappingProxyType({p.exponent: p for p in self.pronouns}))

    @property
    def identity(self) -> PronounElement:
        return self._by_exponent[0]

    def element(self, exponent: int) -> PronounElement:
        return self._by_exponent[exponent]

    def lookup_pronoun(self, token: str, role: Optional[CaseRole] = None) -> Optional[PronounElement]:
        token = token.lower()
        if token == self.identity.surface:
            return None
        if role is not None:
            hit = self._by_surface.get((token, CaseRole(role)))
            if hit is not None:
                return hit
        return self._by_surface.get((token, CaseRole.SUBJECTIVE)) or self._by_surface.get(
            (token, CaseRole.OBJECTIVE)
        )

    def is_pronoun(self, token: str) -> bool:
        return self.lookup_pronoun(token) is not None

    def invert_pronoun(self, p: PronounElement) -> PronounElement:
        return self._by_exponent[-p.exponent]

    def is_article(self, token: str) -> bool:
        return token.lower() in self.articles

    def is_function_word(self, token: str) -> bool:
        token = token.lower()
        return (
            token in AUXILIARIES
            or token in NEGATORS
            or token in PREPOSITIONS
            or token in CONJUNCTIONS
            or token in self.articles
            or self.is_pronoun(token)
        )

    def compound_np(self, determiner: Optional[str], head: Sequence[str], number: Union[Number, str]) -> NounPhrase:
        if determiner is not None and not self.is_article(determiner):
            raise StructuralError(f"{determiner!r} is not a determiner")
        if isinstance(head, str):
            head = head.split()
        return NounPhrase(
            kind="nominal",
            head_tokens=tuple(head),
            number=Number(number),
            determiner=determiner.lower() if determiner is not None else None,
        )

    def pronoun_np(self, p: PronounElement) -> NounPhrase:
        if p.exponent == 0:
            raise StructuralError("the identity element is not a pronoun")
        return NounPhrase(kind="pronoun", head_tokens=(p.surface,), number=p.number, pronoun=p)

    def np_invert(self, np: NounPhrase) -> NounPhrase:
        if np.pronoun is None:
            return np
        return self.pronoun_np(self.invert_pronoun(np.pronoun))

    def noun_number(self, determiner: Optional[str], head: Sequence[str]) -> Number:
        """Plural iff the last head word ends in "s" and is not a known invariant."""
        if determiner is not None:
            det = determiner.lower()
            if det in PLURAL_DETERMINERS:
                return Number.PLURAL
            if det in SINGULAR_DETERMINERS:
                return Number.SINGULAR
        last = head[-1].lower()
        if last in self.plural_nouns:
            return Number.PLURAL
        if last.endswith("s") and not last.endswith("ss") and last not in self.invariant_nouns:
            return Number.PLURAL
        return Number.SINGULAR

    def dump_pronouns(self) -> str:
        lines = ["# surface\texponent\tcase_role\tperson\tnumber"]
        for p in self.pronouns:
            lines.append(f"{p.surface}\t{p.exponent}\t{p.case_role.value}\t{p.person.value}\t{p.number.value}")
        return "\n".join(lines) + "\n"


def _read_text(source) -> str:
    if source is None:
        return ""
    if hasattr(source, "read"):
        return source.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _rows(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, [cell.strip() for cell in line.split("\t")]


def parse_pronoun_table(text: str) -> Tuple[PronounElement, ...]:
    out = []
    for lineno, cells in _rows(text):
        if len(cells) != 5:
            raise LexiconError(f"expected 5 tab-separated fields, got {len(cells)}", lineno)
        surface, exponent, role, person, number = cells
        try:
            out.append(PronounElement(surface.lower(), int(exponent), CaseRole(role), Person(person), Number(number)))
        except (ValueError, StructuralError) as exc:
            raise LexiconError(str(exc), lineno) from None
    return tuple(out)


def _build_index(verbs: Mapping[str, VerbLemmaEntry]):
    index: Dict[str, set] = defaultdict(set)
    for entry in verbs.values():
        for feature in MorphFeature:
            index[entry.form(feature)].add((entry.lemma, feature))
    return {form: frozenset(pairs) for form, pairs in index.items()}


def load_lexicon(pronoun_source=None, verb_source=None) -> Lexicon:
    """Build a :class:`Lexicon` from a pronoun table and a verb file.

    Either argument may be a path, a file object, or ``None`` (built-in
    pronoun table / no verbs). Verb rows are
    ``lemma past past_participle present_participle third_singular``;
    ``@article``, ``@invariant`` and ``@plural`` directive rows extend the
    determiner set and the noun-number hints.
    """
    if pronoun_source is None:
        pronouns = builtin_pronouns()
    else:
        pronouns = parse_pronoun_table(_read_text(pronoun_source))

    articles = set(DEFAULT_ARTICLES)
    invariant = set(DEFAULT_INVARIANT_NOUNS)
    plurals = set(DEFAULT_PLURAL_NOUNS)
    verbs: Dict[str, VerbLemmaEntry] = {}
    directives = {"@article": articles, "@invariant": invariant, "@plural": plurals}

    for lineno, cells in _rows(_read_text(verb_source)):
        if cells[0] in directives:
            if len(cells) != 2 or not cells[1].isalpha():
                raise LexiconError(f"{cells[0]} takes exactly one word", lineno)
            directives[cells[0]].add(cells[1].lower())
            continue
        if len(cells) != 5:
            raise LexiconError(f"expected 5 tab-separated fields, got {len(cells)}", lineno)
        cells = [c.lower() for c in cells]
        if not all(c.isalpha() for c in cells):
            raise LexiconError(f"non-alphabetic verb form in {cells!r}", lineno)
        lemma = cells[0]
        if lemma in verbs:
            raise LexiconError(f"duplicate lemma {lemma!r}", lineno)
        if lemma in AUXILIARIES:
            raise LexiconError(f"{lemma!r} is an auxiliary and cannot be a lexical verb", lineno)
        verbs[lemma] = VerbLemmaEntry(*cells, regular=_is_regular(*cells))

    try:
        return Lexicon(
            pronouns=pronouns,
            articles=frozenset(articles),
            verbs=MappingProxyType(verbs),
            inflection_index=MappingProxyType(_build_index(verbs)),
            invariant_nouns=frozenset(invariant),
            plural_nouns=frozenset(plurals),
        )
    except StructuralError as exc:
        raise LexiconError(str(exc)) from None


def builtin_verbs_text() -> str:
    return resources.files("passivize").joinpath("data/verbs.tsv").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    """Built-in pronoun table plus the bundled verb file (cached)."""
    return load_lexicon(None, io.StringIO(builtin_verbs_text()))
