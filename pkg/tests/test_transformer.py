import pytest

from passivize import KernelForm, kernel_check, parse_clause, render, transform
from passivize.morphology import Number, np_number
from passivize.parser import PATTERNS
from passivize.transformer import (
    KERNEL,
    SUBJECT_CLASSES,
    passive_auxiliary,
    passive_core,
    render_swapped,
    subject_class,
)

from oracle import generate_corpus, oracle_passive

CORPUS = generate_corpus()


def _vg(lexicon, text):
    return parse_clause(lexicon, text).verb


def test_kernel_membership():
    assert kernel_check((1, 4))
    assert not kernel_check((1, 2))
    assert sum(kernel_check(cell) for cell in PATTERNS) == 4
    assert KERNEL == {(1, 4), (2, 4), (3, 2), (3, 4)}


@pytest.mark.parametrize(
    "sentence, core",
    [
        ("They are looking the movie.", ("being", "looked")),
        ("John ate the bagel.", ("eaten",)),
        ("He will have written the letter.", ("been", "written")),
        ("He will write the letter.", ("be", "written")),
        ("He had written the letter.", ("been", "written")),
        ("He writes the letter.", ("written",)),
    ],
)
def test_passive_core(lexicon, sentence, core):
    assert passive_core(lexicon, _vg(lexicon, sentence)) == core


def test_passive_core_refuses_kernel(lexicon):
    with pytest.raises(KernelForm):
        passive_core(lexicon, _vg(lexicon, "He has been writing the letter."))


def test_passive_auxiliary_cells(lexicon, table):
    movie = parse_clause(lexicon, "They saw the movie.").object
    assert passive_auxiliary(table, _vg(lexicon, "They are looking it."), movie) == ("is",)
    i = lexicon.pronoun_np(lexicon.lookup_pronoun("i"))
    assert passive_auxiliary(table, _vg(lexicon, "They will write it."), i) == ("shall",)
    they = lexicon.pronoun_np(lexicon.lookup_pronoun("they"))
    assert passive_auxiliary(table, _vg(lexicon, "He had written it."), they) == ("had",)
    assert passive_auxiliary(table, _vg(lexicon, "He will have written it."), they) == ("will", "have")


def test_table_shape(table):
    non_kernel = set(PATTERNS) - KERNEL
    assert {(t, f) for t, f, _ in table} == non_kernel
    assert len(table) == 8 * len(SUBJECT_CLASSES)
    assert all(table[(t, f, c)] for t, f in non_kernel for c in SUBJECT_CLASSES)
    assert {table[(2, 3, c)] for c in SUBJECT_CLASSES} == {("had",)}
    for c in SUBJECT_CLASSES:
        assert table[(1, 1, c)] == table[(1, 2, c)]
        assert table[(2, 1, c)] == table[(2, 2, c)]


@pytest.mark.parametrize(
    "active, passive",
    [
        ("They are looking the movie.", "The movie is being looked by them."),
        ("John ate the bagel.", "The bagel was eaten by John."),
        ("The policeman has caught the thief.", "The thief has been caught by the policeman."),
        ("I wrote the letter.", "The letter was written by me."),
        ("They watch the dogs.", "The dogs are watched by them."),
        ("We will take you.", "You will be taken by us."),
        ("She saw me.", "I was seen by her."),
        ("Mary will catch the thieves!", "The thieves will be caught by Mary!"),
    ],
)
def test_transform_render(lexicon, table, active, passive):
    assert render(transform(lexicon, table, parse_clause(lexicon, active))) == passive


@pytest.mark.parametrize(
    "sentence, cell",
    [
        ("She had been writing a letter.", (2, 4)),
        ("He has been writing a letter.", (1, 4)),
        ("She will be writing a letter.", (3, 2)),
        ("We will have been writing a letter.", (3, 4)),
    ],
)
def test_kernel_form(lexicon, table, sentence, cell):
    with pytest.raises(KernelForm) as info:
        transform(lexicon, table, parse_clause(lexicon, sentence))
    assert (info.value.tense, info.value.form) == cell


def _outcome(lexicon, table, text):
    try:
        return transform(lexicon, table, parse_clause(lexicon, text))
    except KernelForm:
        return None


@pytest.fixture(scope="module")
def results(lexicon, table):
    return [(case, _outcome(lexicon, table, case.active)) for case in CORPUS]


def test_totality_and_kernel_soundness(results):
    for case, passive in results:
        assert (passive is None) == (case.cell in KERNEL)


def test_ovs_word_order(results):
    for case, passive in results:
        if passive is None:
            continue
        words = passive.tokens()
        assert words.count("by") == 1
        n_subj = len(passive.promoted_subject.tokens)
        assert words[n_subj:n_subj + len(passive.auxiliary)] == list(passive.auxiliary)
        assert words[-len(passive.agent.tokens):] == list(passive.agent.tokens)


def test_object_preservation(lexicon, results):
    for case, passive in results:
        if passive is None:
            continue
        clause = parse_clause(lexicon, case.active)
        if clause.object.pronoun is None:
            assert passive.promoted_subject.head_tokens == clause.object.head_tokens
        else:
            assert passive.promoted_subject.exponent == -clause.object.exponent
        assert passive.agent.exponent == -clause.subject.exponent


SINGULAR_AUX, PLURAL_AUX = {"is", "has", "was"}, {"are", "have", "were"}


def test_auxiliary_agrees_in_number(results):
    for case, passive in results:
        if passive is None or case.cell[0] == 3 or case.cell == (2, 3):
            continue
        if subject_class(passive.promoted_subject) in ("I", "you"):
            continue
        aux = passive.auxiliary[0]
        expected = SINGULAR_AUX if np_number(passive.promoted_subject) is Number.SINGULAR else PLURAL_AUX
        assert aux in expected, (case.active, aux)


def test_non_commutative(results):
    for case, passive in results:
        if passive is not None and case.subject != case.object:
            assert render(passive) != render_swapped(passive)


def test_matches_oracle(results):
    for case, passive in results:
        expected = oracle_passive(case)
        assert (None if passive is None else render(passive)) == expected, case.active
