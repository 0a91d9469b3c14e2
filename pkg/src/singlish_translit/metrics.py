"""WER, CER and corpus BLEU, implemented from scratch.

WER and BLEU tokenize on whitespace. CER compares NFC-normalized Unicode scalars.
"""
from __future__ import annotations

import math
import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence


class MetricError(ValueError):
    """Raised when a rate is undefined (e.g. empty reference)."""


@dataclass(frozen=True)
class EditCounts:
    substitutions: int
    deletions: int
    insertions: int
    ref_len: int

    @property
    def distance(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    def __add__(self, other: "EditCounts") -> "EditCounts":
        return EditCounts(
            self.substitutions + other.substitutions,
            self.deletions + other.deletions,
            self.insertions + other.insertions,
            self.ref_len + other.ref_len,
        )


def edit_distance(reference: Sequence[Hashable], hypothesis: Sequence[Hashable]) -> EditCounts:
    """Minimal substitution/deletion/insertion counts turning ``hypothesis`` into ``reference``.

    Deletions are reference tokens missing from the hypothesis, insertions are extra
    hypothesis tokens. Backtrace ties prefer match/substitution, then deletion, then
    insertion.
    """
    ref, hyp = list(reference), list(hypothesis)
    n, m = len(ref), len(hyp)
    if n == 0:
        return EditCounts(0, 0, m, 0)
    if m == 0:
        return EditCounts(0, n, 0, n)

    # dp[i][j] = distance between ref[:i] and hyp[:j]
    dp = [list(range(m + 1))]
    for i in range(1, n + 1):
        prev = dp[-1]
        row = [i] + [0] * m
        r = ref[i - 1]
        for j in range(1, m + 1):
            diag = prev[j - 1] + (r != hyp[j - 1])
            up = prev[j] + 1
            left = row[j - 1] + 1
            row[j] = min(diag, up, left)
        dp.append(row)

    subs = dels = ins = 0
    i, j = n, m
    while i > 0 or j > 0:
        cur = dp[i][j]
        if i > 0 and j > 0 and cur == dp[i - 1][j - 1] + (ref[i - 1] != hyp[j - 1]):
            subs += ref[i - 1] != hyp[j - 1]
            i, j = i - 1, j - 1
        elif i > 0 and cur == dp[i - 1][j] + 1:
            dels += 1
            i -= 1
        else:
            ins += 1
            j -= 1
    return EditCounts(subs, dels, ins, n)


def word_edits(reference: str, hypothesis: str) -> EditCounts:
    return edit_distance(reference.split(), hypothesis.split())


def char_edits(reference: str, hypothesis: str) -> EditCounts:
    return edit_distance(unicodedata.normalize("NFC", reference), unicodedata.normalize("NFC", hypothesis))


def wer(reference: str, hypothesis: str) -> float:
    counts = word_edits(reference, hypothesis)
    if counts.ref_len == 0:
        raise MetricError("WER undefined for an empty reference")
    return counts.distance / counts.ref_len


def cer(reference: str, hypothesis: str) -> float:
    counts = char_edits(reference, hypothesis)
    if counts.ref_len == 0:
        raise MetricError("CER undefined for an empty reference")
    return counts.distance / counts.ref_len


def _ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(references: Sequence[str], hypotheses: Sequence[str], max_n: int = 4) -> float:
    """Unsmoothed corpus BLEU with one reference per hypothesis and uniform weights.

    n-gram counts are pooled over the corpus before taking precisions. Any order
    with zero clipped matches makes the score 0.
    """
    if len(references) != len(hypotheses):
        raise MetricError(f"{len(references)} references but {len(hypotheses)} hypotheses")
    if not references:
        raise MetricError("BLEU undefined for an empty corpus")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")

    matches = [0] * max_n
    totals = [0] * max_n
    ref_totals = [0] * max_n
    ref_len = hyp_len = 0
    for ref_text, hyp_text in zip(references, hypotheses):
        ref, hyp = ref_text.split(), hyp_text.split()
        ref_len += len(ref)
        hyp_len += len(hyp)
        for n in range(1, max_n + 1):
            hyp_counts = _ngrams(hyp, n)
            ref_counts = _ngrams(ref, n)
            matches[n - 1] += sum(min(c, ref_counts[g]) for g, c in hyp_counts.items())
            totals[n - 1] += max(len(hyp) - n + 1, 0)
            ref_totals[n - 1] += max(len(ref) - n + 1, 0)

    if hyp_len == 0:
        return 0.0
    # An order with no n-grams on either side carries no evidence and is left out,
    # so a corpus of one-word sentences copied exactly still scores 1.
    orders = [n for n in range(max_n) if totals[n] or ref_totals[n]]
    if any(matches[n] == 0 for n in orders):
        return 0.0
    log_precision = math.fsum(math.log(matches[n] / totals[n]) for n in orders) / len(orders)
    bp = 1.0 if hyp_len >= ref_len else math.exp(1 - ref_len / hyp_len)
    return bp * math.exp(log_precision)
