"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import io
import json
import os
import sys
import tempfile
from contextlib import contextmanager

from . import __version__
from .augment import AugmentScheme, augment_corpus
from .corpus import DEFAULT_COLUMNS, CorpusError, dumps_csv, load_csv, split
from .engine import transliterate_text
from .harness import EvaluationError, bench, evaluate, score_predictions
from .metrics import MetricError
from .rules import RuleFileError, load_default_rules, load_rules

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextmanager
def atomic_output(path: str, newline: str | None = None):
    """Write to a temp file next to ``path``; rename over it only on success."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with open(fd, "w", encoding="utf-8", newline=newline) as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _write_text(path: str | None, text: str, newline: str | None = None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with atomic_output(path, newline=newline) as fh:
        fh.write(text)


def _table(path):
    return load_default_rules() if path is None else load_rules(path)


def _columns(value: str | None):
    if value is None:
        return DEFAULT_COLUMNS
    cols = tuple(c.strip() for c in value.split(","))
    if len(cols) != 2 or not all(cols):
        raise UsageError("--columns takes exactly two comma-separated names")
    return cols


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8-sig", newline="") as fh:
        text = fh.read()
    if not text:
        return []
    if text.endswith("\n"):
        text = text[:-1]
    return [line.rstrip("\r") for line in text.split("\n")]


def cmd_transliterate(args) -> int:
    table = _table(args.rules)
    fold = not args.no_fold_case
    if args.input in (None, "-"):
        src = io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8-sig", newline="")
    else:
        src = open(args.input, encoding="utf-8-sig", newline="")
    with src:
        if args.output in (None, "-"):
            out = sys.stdout
            for line in src:
                out.write(transliterate_text(line, table, fold))
            out.flush()
        else:
            with atomic_output(args.output, newline="") as out:
                for line in src:
                    out.write(transliterate_text(line, table, fold))
    return EXIT_OK


def cmd_evaluate(args) -> int:
    table = _table(args.rules)
    corpus = load_csv(args.test, _columns(args.columns))
    report = evaluate(table, corpus, fold_case=not args.no_fold_case,
                      corpus_path=args.test, rules_path=args.rules or "<bundled fixture>", jobs=args.jobs)
    _write_text(args.report, report.dumps())
    _summary(report)
    return EXIT_OK


def cmd_score(args) -> int:
    corpus = load_csv(args.test, _columns(args.columns))
    hyps = _read_lines(args.hyp)
    report = score_predictions(corpus, hyps, corpus_path=args.test, hypothesis_path=args.hyp, jobs=args.jobs)
    _write_text(args.report, report.dumps())
    _summary(report)
    return EXIT_OK


def _summary(report) -> None:
    agg = report.aggregate
    print(f"sentences={len(report.per_sentence)} mean_wer={agg['mean_wer']:.4f} "
          f"mean_cer={agg['mean_cer']:.4f} bleu={agg['corpus_bleu']:.4f}", file=sys.stderr)


def cmd_augment(args) -> int:
    try:
        schemes = AugmentScheme.parse(args.schemes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not schemes:
        raise UsageError("--schemes must name at least one scheme")
    if args.limit < 1:
        raise UsageError("--limit must be >= 1")
    corpus = load_csv(args.input, _columns(args.columns))
    out = augment_corpus(corpus, schemes, seed=args.seed, per_pair_limit=args.limit)
    _write_text(args.output, dumps_csv(out, _columns(args.columns)), newline="")
    print(f"{len(corpus)} pairs in, {len(out)} pairs out", file=sys.stderr)
    return EXIT_OK


def cmd_split(args) -> int:
    if not 0 < args.fraction < 1:
        raise UsageError("--fraction must be in (0, 1)")
    cols = _columns(args.columns)
    corpus = load_csv(args.input, cols)
    train, valid = split(corpus, args.fraction, args.seed)
    _write_text(args.train, dumps_csv(train, cols), newline="")
    _write_text(args.valid, dumps_csv(valid, cols), newline="")
    print(f"train={len(train)} validation={len(valid)}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.iterations < 1:
        raise UsageError("--iterations must be >= 1")
    table = _table(args.rules)
    corpus = load_csv(args.corpus, _columns(args.columns))
    if not len(corpus):
        raise CorpusError("benchmark corpus is empty", path=args.corpus)
    result = bench(table, corpus, args.iterations, fold_case=not args.no_fold_case)
    text = json.dumps(result.to_dict(), indent=2) + "\n"
    _write_text(args.report, text)
    print(f"{result.tps:,.0f} TPS ({result.tokens_emitted} scalars in {result.wall_seconds:.3f}s)", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="singlish-translit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def rules_arg(p):
        p.add_argument("--rules", help="rule table TSV (default: bundled fixture table)")

    def columns_arg(p):
        p.add_argument("--columns", help="CSV header names, default 'romanized,sinhala'")

    p = sub.add_parser("transliterate", help="transliterate text line by line")
    rules_arg(p)
    p.add_argument("--in", dest="input", default="-")
    p.add_argument("--out", dest="output", default="-")
    p.add_argument("--no-fold-case", action="store_true")
    p.set_defaults(func=cmd_transliterate)

    p = sub.add_parser("evaluate", help="run the rule engine over a test CSV and write a report")
    rules_arg(p)
    columns_arg(p)
    p.add_argument("--test", required=True)
    p.add_argument("--report", default="-")
    p.add_argument("--no-fold-case", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("score", help="score a hypothesis file (one sentence per line)")
    columns_arg(p)
    p.add_argument("--test", required=True)
    p.add_argument("--hyp", required=True)
    p.add_argument("--report", default="-")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("augment", help="append ad-hoc spelling variants to a corpus")
    columns_arg(p)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--schemes", default=",".join(s.value for s in AugmentScheme))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, default=3)
    p.set_defaults(func=cmd_augment)

    p = sub.add_parser("split", help="seeded train/validation split")
    columns_arg(p)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--train", required=True)
    p.add_argument("--valid", required=True)
    p.add_argument("--fraction", type=float, default=0.9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("bench", help="measure throughput in output scalars per second")
    rules_arg(p)
    columns_arg(p)
    p.add_argument("--corpus", required=True)
    p.add_argument("--iterations", type=int, default=5)
    p.add_argument("--report", default="-")
    p.add_argument("--no-fold-case", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RuleFileError, CorpusError, EvaluationError, MetricError, UnicodeDecodeError) as exc:
        print(f"{parser.prog}: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"{parser.prog}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
