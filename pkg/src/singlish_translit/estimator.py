"""scikit-learn compatible wrapper around the rule engine."""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_consistent_length, check_text_array
from .engine import transliterate_text
from .metrics import cer, corpus_bleu, wer
from .rules import RuleTable, load_default_rules, load_rules, validate


class SinglishTransliterator(TransformerMixin, BaseEstimator):
    """Romanized Sinhala to Sinhala script, as a stateless sklearn transformer.

    ``fit`` only loads and validates the rule table; nothing is learned from ``X``.

    Parameters
    ----------
    rules : str, path-like, RuleTable or None
        Rule file or prebuilt table. ``None`` uses the bundled fixture table.
    fold_case : bool
        Lower-case each Latin run before matching.
    metric : {"bleu", "wer", "cer"}
        What :meth:`score` reports. Error rates are negated so higher is better.
    """

    def __init__(self, rules=None, fold_case=True, metric="bleu"):
        self.rules = rules
        self.fold_case = fold_case
        self.metric = metric

    def fit(self, X=None, y=None):
        if X is not None:
            check_text_array(X)
        if self.rules is None:
            table = load_default_rules()
        elif isinstance(self.rules, RuleTable):
            table = self.rules
        else:
            table = load_rules(self.rules)
        problems = validate(table)
        if problems:
            raise ValueError("invalid rule table: " + "; ".join(map(str, problems)))
        if self.metric not in ("bleu", "wer", "cer"):
            raise ValueError(f"metric must be 'bleu', 'wer' or 'cer', got {self.metric!r}")
        self.table_ = table
        self.n_rules_ = len(table)
        return self

    def transform(self, X):
        check_is_fitted(self, "table_")
        texts = check_text_array(X)
        return [transliterate_text(t, self.table_, self.fold_case) for t in texts]

    def predict(self, X):
        return self.transform(X)

    def score(self, X, y):
        references = check_text_array(y, "y")
        hypotheses = self.transform(X)
        check_consistent_length(hypotheses, references)
        if self.metric == "bleu":
            return corpus_bleu(references, hypotheses)
        fn = wer if self.metric == "wer" else cer
        return -sum(fn(r, h) for r, h in zip(references, hypotheses)) / len(references)

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.string = True
        tags.input_tags.two_d_array = False
        tags.requires_fit = True
        return tags
