"""Greedy longest-match segmentation and Sinhala abugida rendering.

Segmentation scans left to right and, at each position, tries substrings of
length 3, 2, 1 against the rule table; the first hit wins. Characters that match
nothing pass through unchanged.

Rendering walks the segments with a single "pending consonant" flag:

* consonant: close a pending consonant with a virama, emit the letter, mark pending
* vowel: after a pending consonant emit the dependent sign (empty for the inherent
  vowel), otherwise the independent letter
* literal / passthrough: close a pending consonant with a virama, emit as is
* end of input: close a pending consonant with a virama
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .rules import EntryClass, RuleEntry, RuleTable

_LATIN_RUN = re.compile(r"[A-Za-z]+")


@dataclass(frozen=True)
class Segment:
    source: str
    entry: RuleEntry | None = None

    @property
    def is_passthrough(self) -> bool:
        return self.entry is None


@dataclass(frozen=True)
class Segmentation:
    segments: tuple[Segment, ...]

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __getitem__(self, idx):
        return self.segments[idx]

    @property
    def source(self) -> str:
        return "".join(s.source for s in self.segments)

    def keys(self) -> list[str]:
        return [s.source for s in self.segments]


def segment(word: str, table: RuleTable) -> Segmentation:
    entries = table.entries
    longest = table.max_key_len
    out = []
    i, n = 0, len(word)
    while i < n:
        for length in range(min(longest, n - i), 0, -1):
            sub = word[i:i + length]
            entry = entries.get(sub)
            if entry is not None:
                out.append(Segment(sub, entry))
                i += length
                break
        else:
            out.append(Segment(word[i]))
            i += 1
    return Segmentation(tuple(out))


def render(segmentation: Segmentation, table: RuleTable) -> str:
    virama = table.virama
    parts = []
    pending = False
    for seg in segmentation:
        entry = seg.entry
        if entry is None:
            if pending:
                parts.append(virama)
                pending = False
            parts.append(seg.source)
        elif entry.kind is EntryClass.CONSONANT:
            if pending:
                parts.append(virama)
            parts.append(entry.base)
            pending = True
        elif entry.kind is EntryClass.VOWEL:
            if pending:
                parts.append(entry.dependent or "")
                pending = False
            else:
                parts.append(entry.base)
        else:
            if pending:
                parts.append(virama)
                pending = False
            parts.append(entry.base)
    if pending:
        parts.append(virama)
    return "".join(parts)


def transliterate_word(word: str, table: RuleTable) -> str:
    """Transliterate one word; equivalent to ``render(segment(word, table), table)``.

    Segmentation and rendering are fused here so no Segment objects are built.
    """
    lookup = table._lookup
    virama = table.virama
    longest = table.max_key_len
    parts = []
    pending = False
    i, n = 0, len(word)
    while i < n:
        hit = None
        for length in range(min(longest, n - i), 0, -1):
            hit = lookup.get(word[i:i + length])
            if hit is not None:
                i += length
                break
        if hit is None:
            if pending:
                parts.append(virama)
                pending = False
            parts.append(word[i])
            i += 1
            continue
        is_consonant, is_vowel, base, dependent = hit
        if is_consonant:
            if pending:
                parts.append(virama)
            parts.append(base)
            pending = True
        elif is_vowel:
            if pending:
                parts.append(dependent)
                pending = False
            else:
                parts.append(base)
        else:
            if pending:
                parts.append(virama)
                pending = False
            parts.append(base)
    if pending:
        parts.append(virama)
    return "".join(parts)


def transliterate_text(text: str, table: RuleTable, fold_case: bool = True) -> str:
    """Transliterate every maximal run of ASCII letters; copy everything else verbatim."""
    if fold_case:
        return _LATIN_RUN.sub(lambda m: transliterate_word(m.group().lower(), table), text)
    return _LATIN_RUN.sub(lambda m: transliterate_word(m.group(), table), text)
