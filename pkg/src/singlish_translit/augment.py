"""Ad-hoc Romanized spelling variants (vowel dropping, long-vowel shortening, ...)."""
from __future__ import annotations

import enum
import itertools
import random
import re
from typing import Iterable

from .corpus import ParallelCorpus, ParallelPair

_LATIN_RUN = re.compile(r"[A-Za-z]+")
_VOWELS = frozenset("aeiou")
_LONG_VOWEL = re.compile(r"(aa|ee|ii|oo|uu)")
_ASPIRATE = re.compile(r"([tdbgkp])h")
_WV = str.maketrans("wvWV", "vwVW")


class AugmentScheme(enum.Enum):
    # declaration order is the composition order
    VOWEL_DROP = "vowel_drop"
    LONG_VOWEL_FLATTEN = "long_vowel_flatten"
    ASPIRATION_FLATTEN = "aspiration_flatten"
    WV_SWAP = "wv_swap"

    @classmethod
    def parse(cls, names: str | Iterable[str]) -> list["AugmentScheme"]:
        if isinstance(names, str):
            names = [n for n in names.split(",") if n.strip()]
        try:
            return [cls(n.strip()) for n in names]
        except ValueError as exc:
            valid = ", ".join(s.value for s in cls)
            raise ValueError(f"{exc}; valid schemes: {valid}") from None


SCHEME_ORDER = tuple(AugmentScheme)


def apply_scheme(word: str, scheme: AugmentScheme) -> str:
    if scheme is AugmentScheme.VOWEL_DROP:
        return word[:1] + "".join(ch for ch in word[1:] if ch not in _VOWELS)
    if scheme is AugmentScheme.LONG_VOWEL_FLATTEN:
        return _LONG_VOWEL.sub(lambda m: m.group()[0], word)
    if scheme is AugmentScheme.ASPIRATION_FLATTEN:
        return _ASPIRATE.sub(r"\1", word)
    if scheme is AugmentScheme.WV_SWAP:
        return word.translate(_WV)
    raise ValueError(f"unknown scheme {scheme!r}")


def _subsets(schemes: Iterable[AugmentScheme]) -> list[tuple[AugmentScheme, ...]]:
    chosen = [s for s in SCHEME_ORDER if s in set(schemes)]
    return [c for r in range(1, len(chosen) + 1) for c in itertools.combinations(chosen, r)]


def _compose(text: str, subset: tuple[AugmentScheme, ...]) -> str:
    def per_word(m):
        word = m.group()
        for scheme in subset:
            word = apply_scheme(word, scheme)
        return word
    return _LATIN_RUN.sub(per_word, text)


def _variants(romanized: str, schemes) -> list[str]:
    seen = {romanized}
    out = []
    for subset in _subsets(schemes):
        variant = _compose(romanized, subset)
        if variant not in seen:
            seen.add(variant)
            out.append(variant)
    return out


def augment_pair(pair: tuple[str, str], schemes: Iterable[AugmentScheme]) -> list[tuple[str, str]]:
    """Apply every non-empty subset of ``schemes`` (composed in canonical order).

    Duplicates and variants identical to the original are dropped; the native side
    is copied unchanged.
    """
    schemes = list(schemes)
    if not schemes:
        raise ValueError("at least one augmentation scheme is required")
    romanized, native = pair
    return [(v, native) for v in _variants(romanized, schemes)]


def augment_corpus(corpus: ParallelCorpus, schemes: Iterable[AugmentScheme], seed: int,
                   per_pair_limit: int) -> ParallelCorpus:
    """Originals first, then at most ``per_pair_limit`` sampled variants per pair."""
    if per_pair_limit < 1:
        raise ValueError(f"per_pair_limit must be >= 1, got {per_pair_limit}")
    schemes = list(schemes)
    if not schemes:
        raise ValueError("at least one augmentation scheme is required")
    rng = random.Random(seed)
    extra = []
    for idx, pair in enumerate(corpus):
        variants = _variants(pair.romanized, schemes)
        if len(variants) > per_pair_limit:
            variants = rng.sample(variants, per_pair_limit)
        origin = pair.source_id or f"pair{idx}"
        for v in variants:
            extra.append(ParallelPair(v, pair.native, f"{origin}+aug"))
    return ParallelCorpus(corpus.pairs + tuple(extra))
