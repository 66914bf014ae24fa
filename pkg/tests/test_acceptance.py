"""Exit criteria. Each test is one criterion; a PASS/FAIL line per test is
printed in the "acceptance criteria" section of the pytest summary."""
import io
import time

from passivize import KernelForm, parse_clause, render, transform
from passivize.cli import main
from passivize.lexicon import builtin_pronouns
from passivize.transformer import KERNEL, SUBJECT_CLASSES

from oracle import generate_corpus, oracle_cell, oracle_passive


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    return main(argv, out=out, err=err), out.getvalue(), err.getvalue()


def test_ac1_golden_worked_example(lexicon, table):
    code, out, _ = _run(["transform", "They are looking the movie."])
    assert code == 0
    assert out == "The movie is being looked by them.\n"

    text = "They are looking the movie."
    render(transform(lexicon, table, parse_clause(lexicon, text)))  # warm-up
    start = time.perf_counter()
    result = render(transform(lexicon, table, parse_clause(lexicon, text)))
    elapsed = time.perf_counter() - start
    assert result == "The movie is being looked by them."
    assert elapsed < 0.010, f"{elapsed * 1000:.2f} ms"


def test_ac2_introduction_example(lexicon, table):
    result = render(transform(lexicon, table, parse_clause(lexicon, "John ate the bagel.")))
    assert result == "The bagel was eaten by John."


KERNEL_SENTENCES = {
    (1, 4): "He has been writing a letter.",
    (2, 4): "They had been writing a letter.",
    (3, 2): "She will be writing a letter.",
    (3, 4): "We will have been writing a letter.",
}


def test_ac3_kernel_suite(lexicon, table, tmp_path):
    assert set(KERNEL_SENTENCES) == KERNEL
    for cell, sentence in KERNEL_SENTENCES.items():
        try:
            transform(lexicon, table, parse_clause(lexicon, sentence))
        except KernelForm as exc:
            assert (exc.tense, exc.form) == cell
        else:
            raise AssertionError(f"{sentence!r} was transformed")
    path = tmp_path / "kernel.txt"
    path.write_text("\n".join(KERNEL_SENTENCES.values()) + "\n", encoding="utf-8")
    code, _, err = _run(["batch", str(path)])
    assert code == 0
    assert "0/4/0" in err


def test_ac4_pronoun_group_properties(lexicon):
    table = builtin_pronouns()
    assert len(table) == 13
    for p in table:
        q = lexicon.invert_pronoun(p)
        assert lexicon.invert_pronoun(q) == p
        assert q.exponent == -p.exponent
    identities = [p for p in table if p.exponent == 0]
    assert len(identities) == 1
    assert lexicon.invert_pronoun(identities[0]) == identities[0]


def test_ac5_agreement_table_totality(lexicon, table):
    non_kernel = {(i, j) for i in (1, 2, 3) for j in (1, 2, 3, 4)} - KERNEL
    assert len(non_kernel) == 8 and len(SUBJECT_CLASSES) == 8
    for tense, form in non_kernel:
        for cls in SUBJECT_CLASSES:
            assert table[(tense, form, cls)], (tense, form, cls)

    exercised = set()
    for case in generate_corpus():
        try:
            exercised.add(transform(lexicon, table, parse_clause(lexicon, case.active)).cell)
        except KernelForm:
            pass
    missing = {(t, f, c) for t, f in non_kernel for c in SUBJECT_CLASSES} - exercised
    assert not missing, sorted(missing)


def test_ac6_oracle_equivalence(lexicon, table):
    start = time.perf_counter()
    corpus = generate_corpus()
    assert len(corpus) == 12 * 8 * 5 * 3
    mismatches = []
    for case in corpus:
        expected = oracle_passive(case)
        try:
            passive = transform(lexicon, table, parse_clause(lexicon, case.active))
        except KernelForm:
            got = None
        else:
            got = render(passive)
            if passive.cell != oracle_cell(case):
                mismatches.append((case.active, passive.cell, oracle_cell(case)))
        if got != expected:
            mismatches.append((case.active, got, expected))
    elapsed = time.perf_counter() - start
    assert not mismatches, mismatches[:5]
    assert elapsed < 5.0, f"{elapsed:.2f} s"


def test_ac7_parser_determinism_and_rerender(lexicon):
    for case in generate_corpus():
        first = parse_clause(lexicon, case.active)
        assert parse_clause(lexicon, case.active) == first
        normalized = case.active[:-1].lower().split() + ["."]
        assert [t.lower() for t in first.tokens()] == normalized
