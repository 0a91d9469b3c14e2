"""Rule-based Romanized Sinhala (Singlish) to Sinhala transliteration."""

__version__ = "0.1.0"

from .rules import (  # noqa: E402
    Diagnostic,
    EntryClass,
    RuleEntry,
    RuleFileError,
    RuleTable,
    load_default_rules,
    load_rules,
    validate,
    write_rules,
)
from .engine import Segment, Segmentation, render, segment, transliterate_text, transliterate_word  # noqa: E402
from .metrics import EditCounts, MetricError, cer, corpus_bleu, edit_distance, wer  # noqa: E402
from .corpus import CorpusError, ParallelCorpus, ParallelPair, load_csv, split, write_csv  # noqa: E402
from .augment import AugmentScheme, apply_scheme, augment_corpus, augment_pair  # noqa: E402
from .harness import BenchResult, EvalReport, bench, evaluate, score_predictions  # noqa: E402


def __getattr__(name):
    # sklearn is only imported when the estimator is actually used
    if name == "SinglishTransliterator":
        from .estimator import SinglishTransliterator
        return SinglishTransliterator
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "AugmentScheme", "BenchResult", "CorpusError", "Diagnostic", "EditCounts", "EntryClass",
    "EvalReport", "MetricError", "ParallelCorpus", "ParallelPair", "RuleEntry", "RuleFileError",
    "RuleTable", "Segment", "Segmentation", "SinglishTransliterator", "apply_scheme",
    "augment_corpus", "augment_pair", "bench", "cer", "corpus_bleu", "edit_distance", "evaluate",
    "load_csv", "load_default_rules", "load_rules", "render", "score_predictions", "segment",
    "split", "transliterate_text", "transliterate_word", "validate", "wer", "write_csv", "write_rules",
]
