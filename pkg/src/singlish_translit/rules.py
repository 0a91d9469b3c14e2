"""Rule tables mapping Latin substrings to Sinhala output.

A rule file is UTF-8 TSV with one entry per line::

    latin_key <TAB> class <TAB> base [<TAB> dependent]

``class`` is one of ``consonant``, ``vowel`` or ``literal``. Vowel lines must
carry the fourth column, which may be empty (the inherent vowel). Blank lines
and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import enum
import hashlib
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping

MAX_KEY_LEN = 3
VIRAMA = "්"
SINHALA_BLOCK = (0x0D80, 0x0DFF)

_LATIN_KEY = re.compile(r"[A-Za-z]+")


class EntryClass(enum.Enum):
    CONSONANT = "consonant"
    VOWEL = "vowel"
    LITERAL = "literal"


class RuleFileError(ValueError):
    """A rule file line could not be parsed or violates a table invariant."""

    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}: "
        elif where:
            where += " "
        super().__init__(where + message)


@dataclass(frozen=True)
class RuleEntry:
    latin_key: str
    kind: EntryClass
    base: str
    dependent: str | None = None


@dataclass(frozen=True)
class Diagnostic:
    key: str
    message: str

    def __str__(self) -> str:
        return f"{self.key!r}: {self.message}"


@dataclass(frozen=True, eq=False)
class RuleTable:
    """Immutable mapping from Latin keys to :class:`RuleEntry`.

    Build one with :meth:`from_entries` or :func:`load_rules`.
    """

    entries: Mapping[str, RuleEntry]
    max_key_len: int
    virama: str = VIRAMA
    # key -> (is_consonant, is_vowel, base, dependent); hot path for the engine
    _lookup: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.entries, MappingProxyType):
            object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        lookup = {
            k: (e.kind is EntryClass.CONSONANT, e.kind is EntryClass.VOWEL, e.base, e.dependent or "")
            for k, e in self.entries.items()
        }
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_entries(cls, entries: Iterable[RuleEntry], virama: str = VIRAMA) -> "RuleTable":
        table: dict[str, RuleEntry] = {}
        for entry in entries:
            if entry.latin_key in table:
                raise ValueError(f"duplicate key {entry.latin_key!r}")
            table[entry.latin_key] = entry
        max_len = max((len(k) for k in table), default=0)
        return cls(entries=table, max_key_len=max_len, virama=virama)

    def __eq__(self, other):
        if not isinstance(other, RuleTable):
            return NotImplemented
        return (
            dict(self.entries) == dict(other.entries)
            and self.max_key_len == other.max_key_len
            and self.virama == other.virama
        )

    def __hash__(self):
        return hash(self.fingerprint())

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __getitem__(self, key: str) -> RuleEntry:
        return self.entries[key]

    def fingerprint(self) -> str:
        """SHA-256 of the canonical TSV serialization."""
        return hashlib.sha256(dumps_rules(self).encode("utf-8")).hexdigest()


def _in_sinhala_block(text: str) -> bool:
    lo, hi = SINHALA_BLOCK
    return all(lo <= ord(ch) <= hi for ch in text)


def _entry_problems(entry: RuleEntry) -> list[str]:
    problems = []
    key = entry.latin_key
    if not key:
        problems.append("empty key")
    elif len(key) > MAX_KEY_LEN:
        problems.append(f"key length > {MAX_KEY_LEN}")
    if key and not _LATIN_KEY.fullmatch(key):
        problems.append("non-Latin key character")
    if not entry.base:
        problems.append("empty base")
    if entry.kind is EntryClass.VOWEL and entry.dependent is None:
        problems.append("vowel entry missing dependent")
    if entry.kind is not EntryClass.VOWEL and entry.dependent is not None:
        problems.append("non-vowel entry has dependent")
    if entry.kind in (EntryClass.CONSONANT, EntryClass.VOWEL):
        if not _in_sinhala_block(entry.base) or not _in_sinhala_block(entry.dependent or ""):
            problems.append("non-Sinhala scalar")
    return problems


def validate(table: RuleTable) -> list[Diagnostic]:
    """Check every entry and table invariant; an empty list means valid."""
    diagnostics = []
    for key, entry in table.entries.items():
        if key != entry.latin_key:
            diagnostics.append(Diagnostic(key, "map key differs from entry latin_key"))
        diagnostics.extend(Diagnostic(key, p) for p in _entry_problems(entry))
    longest = max((len(k) for k in table.entries), default=0)
    if table.max_key_len != longest:
        diagnostics.append(Diagnostic("", f"max_key_len {table.max_key_len} != longest key {longest}"))
    if table.max_key_len > MAX_KEY_LEN:
        diagnostics.append(Diagnostic("", f"max_key_len > {MAX_KEY_LEN}"))
    if len(table.virama) != 1:
        diagnostics.append(Diagnostic("", "virama must be a single scalar"))
    return diagnostics


def parse_rules(text: str, path: str | None = None) -> RuleTable:
    """Parse rule-file text, raising :class:`RuleFileError` on the first bad line."""
    entries: dict[str, RuleEntry] = {}
    seen_at: dict[str, int] = {}
    if text.startswith("﻿"):
        text = text[1:]
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (3, 4):
            raise RuleFileError(f"expected 3 or 4 tab-separated columns, got {len(cols)}", lineno, path)
        key, kind_token, base = cols[0], cols[1], cols[2]
        try:
            kind = EntryClass(kind_token)
        except ValueError:
            raise RuleFileError(f"invalid class {kind_token!r}", lineno, path) from None
        if kind is EntryClass.VOWEL:
            if len(cols) != 4:
                raise RuleFileError("vowel entry needs a dependent column (may be empty)", lineno, path)
            dependent = cols[3]
        else:
            if len(cols) == 4 and cols[3] != "":
                raise RuleFileError(f"{kind.value} entry cannot have a dependent form", lineno, path)
            dependent = None
        if key in entries:
            raise RuleFileError(f"duplicate key {key!r} (first defined on line {seen_at[key]})", lineno, path)
        entry = RuleEntry(key, kind, base, dependent)
        problems = _entry_problems(entry)
        if problems:
            raise RuleFileError(f"key {key!r}: {problems[0]}", lineno, path)
        entries[key] = entry
        seen_at[key] = lineno
    return RuleTable.from_entries(entries.values())


def load_rules(path: str | os.PathLike) -> RuleTable:
    """Load and validate a rule table from a TSV file."""
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise RuleFileError(f"not valid UTF-8 ({exc.reason} at byte {exc.start})", path=str(path)) from None
    return parse_rules(text, path=str(path))


def dumps_rules(table: RuleTable) -> str:
    lines = []
    for key in sorted(table.entries, key=lambda k: (len(k), k)):
        e = table.entries[key]
        cols = [e.latin_key, e.kind.value, e.base]
        if e.kind is EntryClass.VOWEL:
            cols.append(e.dependent or "")
        lines.append("\t".join(cols))
    return "".join(line + "\n" for line in lines)


def write_rules(table: RuleTable, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_rules(table))


def default_rules_path():
    """Path-like handle to the bundled 30-entry fixture table."""
    return resources.files("singlish_translit").joinpath("data/fixture_rules.tsv")


def load_default_rules() -> RuleTable:
    return parse_rules(default_rules_path().read_text(encoding="utf-8"), path="fixture_rules.tsv")
