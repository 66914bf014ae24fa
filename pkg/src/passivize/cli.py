"""Command-line front end.

    passivize transform "They are looking the movie."
    passivize batch corpus.txt --format json-lines --jobs 4
    passivize explain "They are looking the movie."
    passivize pronouns

Exit codes: 0 ok, 1 parse error, 2 kernel form (single sentence only),
3 unreadable input or lexicon file.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional

from .errors import KernelForm, LexiconError, ParseError
from .lexicon import default_lexicon, load_lexicon
from .morphology import Number
from .parser import parse_clause
from .transformer import AGREEMENT_TABLE, KERNEL, render, subject_class, transform

EXIT_OK, EXIT_PARSE, EXIT_KERNEL, EXIT_IO = 0, 1, 2, 3

STATUS_OK, STATUS_KERNEL, STATUS_ERROR = "ok", "kernel", "parse_error"


@dataclass
class TransformRecord:
    input: str
    status: str
    output: Optional[str] = None
    analysis: Optional[dict] = None
    error_detail: Optional[dict] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    @classmethod
    def from_json(cls, line: str) -> "TransformRecord":
        return cls(**json.loads(line))

    def to_text(self) -> str:
        if self.status == STATUS_OK:
            return self.output
        if self.status == STATUS_KERNEL:
            return f"kernel: {self.error_detail['message']}: {self.input}"
        return f"error: {self.error_detail['message']} (token {self.error_detail['position']}): {self.input}"


def _analysis(lexicon, clause):
    return {
        "subject_exponent": clause.subject.exponent,
        "tense": clause.verb.tense,
        "form": clause.verb.form,
        "lemma": clause.verb.lemma,
        "object_class": subject_class(lexicon.np_invert(clause.object)),
    }


def process(sentence: str, lexicon=None, number: Optional[Number] = None) -> TransformRecord:
    """Run one sentence through the engine; never raises for bad input text."""
    lexicon = lexicon or default_lexicon()
    try:
        clause = parse_clause(lexicon, sentence, number=number)
    except ParseError as exc:
        return TransformRecord(sentence, STATUS_ERROR, error_detail={"message": exc.detail, "position": exc.position})
    analysis = _analysis(lexicon, clause)
    try:
        passive = transform(lexicon, AGREEMENT_TABLE, clause)
    except KernelForm as exc:
        return TransformRecord(
            sentence, STATUS_KERNEL, analysis=analysis,
            error_detail={"message": str(exc), "position": 0},
        )
    return TransformRecord(sentence, STATUS_OK, output=render(passive), analysis=analysis)


def explain(sentence: str, lexicon=None, number: Optional[Number] = None) -> List[str]:
    """Step-by-step account of the transformation, one line per step."""
    lexicon = lexicon or default_lexicon()
    clause = parse_clause(lexicon, sentence, number=number)
    subj, verb, obj = clause.subject, clause.verb, clause.object

    def element(np):
        if np.pronoun is None:
            return f"a^0 = e (noun, {np.number.value})"
        p = np.pronoun
        return f"a^{p.exponent} ({p.case_role.value}, {p.person.value} {p.number.value})"

    kernel_names = ", ".join(f"v{i}{j}" for i, j in sorted(KERNEL))
    lines = [
        f"subject : {subj.text} -> {element(subj)}",
        f"verb    : {' '.join(verb.tokens)} -> {verb.name} (tense {verb.tense}, form {verb.form}), lemma {verb.lemma}",
        f"object  : {obj.text} -> {element(obj)}",
        f"active  : a = S # V * O = a^{subj.exponent} # {verb.name} * a^{obj.exponent}",
    ]
    if verb.cell in KERNEL:
        lines.append(f"kernel  : {verb.name} in K(g) = {{{kernel_names}}}; no passive form")
        return lines
    passive = transform(lexicon, AGREEMENT_TABLE, clause)
    new_subj, agent = passive.promoted_subject, passive.agent
    tense, form, cls = passive.cell
    lines += [
        f"kernel  : {verb.name} not in K(g) = {{{kernel_names}}}",
        f"invert  : object {obj.text} -> {new_subj.text} (a^{new_subj.exponent}); "
        f"subject {subj.text} -> {agent.text} (a^{agent.exponent})",
        f"T(a)    : (a^{new_subj.exponent} (x) {verb.name}''' * a^{agent.exponent})",
        f"table   : A[{tense}{form}, {cls}] = {' '.join(passive.auxiliary)}",
        f"core    : {' '.join(passive.core)}",
        f"passive : {render(passive)}",
    ]
    return lines


def _read_corpus(path) -> List[str]:
    with open(path, encoding="utf-8") as fh:
        return fh.read().splitlines()


def run_batch(lines: Iterable[str], lexicon=None, number=None, jobs: int = 1):
    """Process corpus lines in order; returns (records, skipped_count)."""
    lexicon = lexicon or default_lexicon()
    sentences = []
    skipped = 0
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            skipped += 1
            continue
        sentences.append(stripped)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda s: process(s, lexicon, number), sentences))
    else:
        records = [process(s, lexicon, number) for s in sentences]
    return records, skipped


def summarize(records) -> dict:
    counts = {STATUS_OK: 0, STATUS_KERNEL: 0, STATUS_ERROR: 0}
    for r in records:
        counts[r.status] += 1
    return counts


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json-lines"], default="text",
                        help="output format (default: text)")
    common.add_argument("--lexicon", metavar="PATH", help="verb lexicon file (TSV); default: bundled list")
    common.add_argument("--number", choices=["singular", "plural", "auto"], default="auto",
                        help="force the number of noun phrases (default: auto)")

    parser = argparse.ArgumentParser(prog="passivize", description="Turn simple active SVO sentences into the passive voice.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common], help="transform one sentence")
    p.add_argument("sentence")
    p.add_argument("--explain", action="store_true", help="print the step-by-step analysis")

    p = sub.add_parser("batch", parents=[common], help="transform a corpus, one sentence per line")
    p.add_argument("corpus")
    p.add_argument("--jobs", type=int, default=1, help="worker threads (output order is preserved)")

    p = sub.add_parser("explain", parents=[common], help="show the analysis behind one transformation")
    p.add_argument("sentence")

    sub.add_parser("pronouns", parents=[common], help="dump the pronoun table")
    return parser


def _emit_single(record, fmt, out, err):
    if fmt == "json-lines":
        print(record.to_json(), file=out)
    elif record.status == STATUS_OK:
        print(record.output, file=out)
    else:
        print(record.to_text(), file=err)
    return {STATUS_OK: EXIT_OK, STATUS_KERNEL: EXIT_KERNEL, STATUS_ERROR: EXIT_PARSE}[record.status]


def _explain(sentence, lexicon, number, out, err):
    record = process(sentence, lexicon, number)
    if record.status == STATUS_ERROR:
        print(record.to_text(), file=err)
        return EXIT_PARSE
    for line in explain(sentence, lexicon, number):
        print(line, file=out)
    return EXIT_OK if record.status == STATUS_OK else EXIT_KERNEL


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)

    try:
        lexicon = load_lexicon(None, args.lexicon) if args.lexicon else default_lexicon()
    except (OSError, LexiconError) as exc:
        print(f"error: cannot load lexicon: {exc}", file=err)
        return EXIT_IO
    number = None if args.number == "auto" else Number(args.number)

    if args.command == "pronouns":
        out.write(lexicon.dump_pronouns())
        return EXIT_OK

    if args.command == "explain" or (args.command == "transform" and args.explain):
        return _explain(args.sentence, lexicon, number, out, err)

    if args.command == "transform":
        return _emit_single(process(args.sentence, lexicon, number), args.format, out, err)

    try:
        lines = _read_corpus(args.corpus)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read corpus: {exc}", file=err)
        return EXIT_IO
    records, skipped = run_batch(lines, lexicon, number, jobs=max(1, args.jobs))
    for record in records:
        print(record.to_json() if args.format == "json-lines" else record.to_text(), file=out)
    counts = summarize(records)
    print(
        f"summary: {counts[STATUS_OK]}/{counts[STATUS_KERNEL]}/{counts[STATUS_ERROR]} "
        f"(ok/kernel/error), {skipped} blank or comment lines skipped",
        file=err,
    )
    return EXIT_PARSE if counts[STATUS_ERROR] else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
