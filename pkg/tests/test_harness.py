import json

import pytest

from singlish_translit.augment import AugmentScheme, augment_corpus
from singlish_translit.corpus import ParallelCorpus
from singlish_translit.harness import (
    EvaluationError,
    SentenceScore,
    _score,
    bench,
    evaluate,
    read_report,
    score_predictions,
)


def test_canonical_lexicon_is_perfect(table, lexicon):
    report = evaluate(table, lexicon)
    assert report.aggregate["mean_wer"] == 0.0
    assert report.aggregate["mean_cer"] == 0.0
    assert report.aggregate["corpus_bleu"] == pytest.approx(1.0)
    assert len(report.per_sentence) == len(lexicon)
    assert report.check_consistency() == []


def test_single_pair(table):
    report = evaluate(table, ParallelCorpus.from_pairs([("mama", "මම")]))
    assert report.per_sentence == [SentenceScore(0, 0.0, 0.0)]


def test_vowel_dropped_corpus_is_worse(table, lexicon):
    dropped = augment_corpus(lexicon, [AugmentScheme.VOWEL_DROP], seed=0, per_pair_limit=1)
    variants = ParallelCorpus(dropped.pairs[len(lexicon):])
    assert len(variants) > 0
    assert evaluate(table, variants).aggregate["mean_wer"] > evaluate(table, lexicon).aggregate["mean_wer"]


def test_metadata(table, lexicon):
    meta = evaluate(table, lexicon, fold_case=False, corpus_path="x.csv").metadata
    assert meta["rule_table_sha256"] == table.fingerprint()
    assert meta["corpus_path"] == "x.csv"
    assert meta["fold_case"] is False
    assert {"timestamp", "tool_version", "tokenization"} <= meta.keys()


def test_evaluate_deterministic_modulo_timestamp(table, lexicon):
    a, b = evaluate(table, lexicon), evaluate(table, lexicon)
    assert a.per_sentence == b.per_sentence and a.aggregate == b.aggregate


def test_parallel_matches_serial(table, lexicon):
    noisy = augment_corpus(lexicon, list(AugmentScheme), seed=2, per_pair_limit=3)
    serial = evaluate(table, noisy, jobs=1)
    parallel = evaluate(table, noisy, jobs=3)
    assert serial.per_sentence == parallel.per_sentence
    assert serial.aggregate == parallel.aggregate


def test_evaluate_empty(table):
    with pytest.raises(EvaluationError):
        evaluate(table, ParallelCorpus())


def test_empty_reference_annotated_with_index():
    # ParallelPair forbids empty sides, so drive the scoring step directly
    with pytest.raises(EvaluationError) as err:
        _score(["මම", ""], ["මම", "x"])
    assert err.value.index == 1


def test_score_identity(lexicon):
    report = score_predictions(lexicon, lexicon.native)
    assert report.aggregate["mean_wer"] == report.aggregate["mean_cer"] == 0.0
    assert report.aggregate["corpus_bleu"] == pytest.approx(1.0)


def test_score_one_substitution():
    refs = ParallelCorpus.from_pairs([("a", "මම ඔබ"), ("b", "අපි ගෙදර")])
    report = score_predictions(refs, ["මම ඔබ", "අපි ගහ"])
    assert report.aggregate["mean_wer"] == pytest.approx(0.25)
    assert report.aggregate["pooled_wer"] == pytest.approx(0.25)


def test_score_length_mismatch(lexicon):
    with pytest.raises(EvaluationError, match="hypotheses"):
        score_predictions(lexicon, lexicon.native[:-1])


def test_macro_and_pooled_differ():
    refs = ParallelCorpus.from_pairs([("a", "මම"), ("b", "අ ආ ඇ ඈ")])
    report = score_predictions(refs, ["ඔබ", "අ ආ ඇ ඈ"])
    assert report.aggregate["mean_wer"] == pytest.approx(0.5)
    assert report.aggregate["pooled_wer"] == pytest.approx(1 / 5)


def test_report_round_trip(tmp_path, table, lexicon):
    report = evaluate(table, lexicon)
    path = tmp_path / "r.json"
    path.write_text(report.dumps(), encoding="utf-8")
    loaded = read_report(path)
    assert loaded.per_sentence == report.per_sentence
    assert loaded.aggregate == report.aggregate
    assert json.loads(path.read_text(encoding="utf-8"))["metadata"]["system"] == "rule-based"


def test_consistency_check_flags_tampering(table, lexicon):
    report = evaluate(table, lexicon)
    report.aggregate["mean_wer"] = 0.5
    assert report.check_consistency()


def test_bench_counts_native_scalars(table, lexicon):
    result = bench(table, lexicon, iterations=1)
    assert result.tokens_emitted == sum(len(n) for n in lexicon.native)
    assert result.tps > 0
    assert "Unicode scalar" in result.environment


def test_bench_doubling(table, lexicon):
    assert bench(table, lexicon, 2).tokens_emitted == 2 * bench(table, lexicon, 1).tokens_emitted


def test_bench_rejects_zero_iterations(table, lexicon):
    with pytest.raises(ValueError):
        bench(table, lexicon, 0)
