"""Evaluation, scoring of external predictions, and throughput benchmarking."""
from __future__ import annotations

import json
import os
import platform
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Sequence

from . import __version__
from .corpus import ParallelCorpus
from .engine import transliterate_text
from .metrics import EditCounts, MetricError, char_edits, corpus_bleu, word_edits
from .rules import RuleTable

TOKENIZATION = "whitespace (WER, BLEU); NFC Unicode scalars (CER)"


class EvaluationError(ValueError):
    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(f"sentence {index}: {message}" if index is not None else message)


@dataclass(frozen=True)
class SentenceScore:
    index: int
    wer: float
    cer: float


@dataclass
class EvalReport:
    per_sentence: list[SentenceScore]
    aggregate: dict
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "metadata": self.metadata,
            "aggregate": self.aggregate,
            "per_sentence": [asdict(s) for s in self.per_sentence],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvalReport":
        rows = [SentenceScore(int(r["index"]), float(r["wer"]), float(r["cer"])) for r in data["per_sentence"]]
        return cls(rows, dict(data["aggregate"]), dict(data.get("metadata", {})))

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    def check_consistency(self, tol: float = 1e-12) -> list[str]:
        """Recompute the macro aggregates from the per-sentence rows."""
        problems = []
        if self.per_sentence:
            for name, attr in (("mean_wer", "wer"), ("mean_cer", "cer")):
                mean = statistics.fmean(getattr(s, attr) for s in self.per_sentence)
                if abs(mean - self.aggregate[name]) > tol:
                    problems.append(f"{name}={self.aggregate[name]} but rows average to {mean}")
        if [s.index for s in self.per_sentence] != list(range(len(self.per_sentence))):
            problems.append("per-sentence indices are not 0..N-1 in order")
        return problems


def read_report(path: str | os.PathLike) -> EvalReport:
    with open(path, encoding="utf-8") as fh:
        return EvalReport.from_dict(json.load(fh))


@dataclass(frozen=True)
class BenchResult:
    tokens_emitted: int
    wall_seconds: float
    iterations: int
    environment: str

    @property
    def tps(self) -> float:
        return self.tokens_emitted / self.wall_seconds

    def to_dict(self) -> dict:
        return {**asdict(self), "tps": self.tps}


def _score_pair(args) -> tuple[EditCounts, EditCounts]:
    index, reference, hypothesis = args
    w, c = word_edits(reference, hypothesis), char_edits(reference, hypothesis)
    if w.ref_len == 0:
        raise EvaluationError("WER undefined for an empty reference", index)
    if c.ref_len == 0:
        raise EvaluationError("CER undefined for an empty reference", index)
    return w, c


def _score(references: Sequence[str], hypotheses: Sequence[str], jobs: int = 1) -> tuple[list, dict]:
    work = list(zip(range(len(references)), references, hypotheses))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            edits = list(pool.map(_score_pair, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        edits = [_score_pair(item) for item in work]

    rows = [SentenceScore(i, w.distance / w.ref_len, c.distance / c.ref_len) for i, (w, c) in enumerate(edits)]
    pooled_w = sum((w for w, _ in edits), EditCounts(0, 0, 0, 0))
    pooled_c = sum((c for _, c in edits), EditCounts(0, 0, 0, 0))
    try:
        bleu = corpus_bleu(list(references), list(hypotheses))
    except MetricError as exc:
        raise EvaluationError(str(exc)) from None
    aggregate = {
        "mean_wer": statistics.fmean(r.wer for r in rows),
        "mean_cer": statistics.fmean(r.cer for r in rows),
        "corpus_bleu": bleu,
        "pooled_wer": pooled_w.distance / pooled_w.ref_len,
        "pooled_cer": pooled_c.distance / pooled_c.ref_len,
    }
    return rows, aggregate


def _metadata(**extra) -> dict:
    meta = {
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "tokenization": TOKENIZATION,
        "averaging": "mean_* are macro (per-sentence mean); pooled_* divide summed edits by summed reference length",
    }
    meta.update(extra)
    return meta


def evaluate(table: RuleTable, corpus: ParallelCorpus, fold_case: bool = True, *,
             corpus_path: str | None = None, rules_path: str | None = None, jobs: int = 1) -> EvalReport:
    """Transliterate the romanized side and score it against the native side."""
    if not len(corpus):
        raise EvaluationError("cannot evaluate an empty corpus")
    hypotheses = [transliterate_text(p.romanized, table, fold_case) for p in corpus]
    rows, aggregate = _score(corpus.native, hypotheses, jobs)
    meta = _metadata(rule_table_sha256=table.fingerprint(), rules_path=rules_path,
                     corpus_path=corpus_path, fold_case=fold_case, system="rule-based")
    return EvalReport(rows, aggregate, meta)


def score_predictions(references: ParallelCorpus, hypotheses: Sequence[str], *,
                      corpus_path: str | None = None, hypothesis_path: str | None = None,
                      jobs: int = 1) -> EvalReport:
    """Score externally produced hypotheses with the same metric pipeline as :func:`evaluate`."""
    hypotheses = list(hypotheses)
    if len(hypotheses) != len(references):
        raise EvaluationError(f"{len(references)} references but {len(hypotheses)} hypotheses")
    if not len(references):
        raise EvaluationError("cannot score an empty corpus")
    rows, aggregate = _score(references.native, hypotheses, jobs)
    meta = _metadata(corpus_path=corpus_path, hypothesis_path=hypothesis_path, system="external")
    return EvalReport(rows, aggregate, meta)


def bench(table: RuleTable, corpus: ParallelCorpus, iterations: int, fold_case: bool = True) -> BenchResult:
    """Single-threaded throughput in output Unicode scalars per second."""
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    if not len(corpus):
        raise ValueError("cannot benchmark an empty corpus")
    sentences = corpus.romanized
    for s in sentences:
        transliterate_text(s, table, fold_case)

    tokens = 0
    start = time.perf_counter()
    for _ in range(iterations):
        for s in sentences:
            tokens += len(transliterate_text(s, table, fold_case))
    elapsed = time.perf_counter() - start

    env = (f"{platform.python_implementation()} {platform.python_version()} on "
           f"{platform.machine() or 'unknown'} ({platform.system()}); single thread; "
           f"token = output Unicode scalar")
    return BenchResult(tokens, max(elapsed, 1e-9), iterations, env)
