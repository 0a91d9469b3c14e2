"""Parallel (romanized, Sinhala) corpora: CSV I/O and deterministic splitting."""
from __future__ import annotations

import csv
import io
import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Iterator, Sequence

DEFAULT_COLUMNS = ("romanized", "sinhala")
SOURCE_COLUMN = "source_id"


class CorpusError(ValueError):
    def __init__(self, message: str, row: int | None = None, path: str | None = None):
        self.row = row
        self.path = path
        prefix = f"{path}: " if path else ""
        if row is not None:
            prefix += f"row {row}: "
        super().__init__(prefix + message)


@dataclass(frozen=True)
class ParallelPair:
    romanized: str
    native: str
    source_id: str | None = None

    def __post_init__(self):
        if not self.romanized:
            raise CorpusError("romanized field is empty")
        if not self.native:
            raise CorpusError("native field is empty")


@dataclass(frozen=True)
class ParallelCorpus:
    pairs: tuple[ParallelPair, ...] = ()

    def __post_init__(self):
        if not isinstance(self.pairs, tuple):
            object.__setattr__(self, "pairs", tuple(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[ParallelPair]:
        return iter(self.pairs)

    def __getitem__(self, idx):
        return self.pairs[idx]

    @property
    def romanized(self) -> list[str]:
        return [p.romanized for p in self.pairs]

    @property
    def native(self) -> list[str]:
        return [p.native for p in self.pairs]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "ParallelCorpus":
        return cls(tuple(ParallelPair(r, s) for r, s in pairs))


def read_csv_text(text: str, columns: Sequence[str] = DEFAULT_COLUMNS, path: str | None = None) -> ParallelCorpus:
    """Parse CSV text. Row numbers in errors count the header as row 1."""
    if text.startswith("﻿"):
        text = text[1:]
    reader = csv.reader(io.StringIO(text, newline=""), strict=True)
    try:
        header = next(reader)
    except StopIteration:
        raise CorpusError("missing header", path=path) from None
    except csv.Error as exc:
        raise CorpusError(f"malformed CSV: {exc}", row=1, path=path) from None
    header = [h.strip() for h in header]
    expected = list(columns)
    if header == expected:
        width = 2
    elif header == expected + [SOURCE_COLUMN]:
        width = 3
    else:
        raise CorpusError(f"missing header: expected {','.join(expected)}, got {','.join(header)}", row=1, path=path)

    pairs = []
    rowno = 1
    while True:
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            raise CorpusError(f"malformed CSV: {exc}", row=rowno + 1, path=path) from None
        rowno += 1
        if not row:
            continue
        if len(row) != width:
            raise CorpusError(f"expected {width} fields, got {len(row)}", row=rowno, path=path)
        romanized, native = row[0].strip(), row[1].strip()
        if not romanized:
            raise CorpusError("empty romanized field", row=rowno, path=path)
        if not native:
            raise CorpusError("empty native field", row=rowno, path=path)
        source_id = (row[2] or None) if width == 3 else None
        pairs.append(ParallelPair(romanized, native, source_id))
    return ParallelCorpus(tuple(pairs))


def load_csv(path: str | os.PathLike, columns: Sequence[str] = DEFAULT_COLUMNS) -> ParallelCorpus:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusError(f"not valid UTF-8 ({exc.reason} at byte {exc.start})", path=str(path)) from None
    return read_csv_text(text, columns, path=str(path))


def dumps_csv(corpus: ParallelCorpus, columns: Sequence[str] = DEFAULT_COLUMNS) -> str:
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\r\n")
    with_source = any(p.source_id is not None for p in corpus)
    writer.writerow(list(columns) + ([SOURCE_COLUMN] if with_source else []))
    for p in corpus:
        row = [p.romanized, p.native]
        if with_source:
            row.append(p.source_id or "")
        writer.writerow(row)
    return buf.getvalue()


def write_csv(corpus: ParallelCorpus, path: str | os.PathLike, columns: Sequence[str] = DEFAULT_COLUMNS) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps_csv(corpus, columns))


def split(corpus: ParallelCorpus, train_fraction: float, seed: int) -> tuple[ParallelCorpus, ParallelCorpus]:
    """Seeded shuffle, then the first ``floor(train_fraction * N)`` pairs go to train."""
    if not 0 < train_fraction < 1:
        raise ValueError(f"train_fraction must be in (0, 1), got {train_fraction}")
    if not len(corpus):
        raise CorpusError("cannot split an empty corpus")
    order = list(range(len(corpus)))
    random.Random(seed).shuffle(order)
    # decimal-exact so 0.29 * 100 gives 29, not 28
    n_train = math.floor(Fraction(str(train_fraction)) * len(corpus))
    train = tuple(corpus[i] for i in order[:n_train])
    valid = tuple(corpus[i] for i in order[n_train:])
    return ParallelCorpus(train), ParallelCorpus(valid)


def synthesize(lexicon: ParallelCorpus, n_words: int, seed: int,
               min_len: int = 5, max_len: int = 12) -> ParallelCorpus:
    """Random sentences of lexicon words totalling exactly ``n_words`` words."""
    rng = random.Random(seed)
    words = lexicon.pairs
    pairs = []
    remaining = n_words
    while remaining > 0:
        k = min(rng.randint(min_len, max_len), remaining)
        picks = [rng.choice(words) for _ in range(k)]
        pairs.append(ParallelPair(" ".join(p.romanized for p in picks), " ".join(p.native for p in picks)))
        remaining -= k
    return ParallelCorpus(tuple(pairs))


def fixture_lexicon() -> ParallelCorpus:
    """The bundled canonical (romanized, native) word lexicon."""
    path = resources.files("singlish_translit").joinpath("data/fixture_lexicon.csv")
    return read_csv_text(path.read_text(encoding="utf-8"), path="fixture_lexicon.csv")
