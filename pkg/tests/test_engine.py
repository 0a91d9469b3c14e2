import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singlish_translit.engine import render, segment, transliterate_text, transliterate_word
from singlish_translit.rules import EntryClass, RuleEntry, RuleTable

from oracles import algorithm1


def cps(text):
    return [f"U+{ord(c):04X}" for c in text]


@pytest.mark.parametrize("word, keys", [
    ("mama", ["m", "a", "m", "a"]),
    ("thaa", ["th", "aa"]),
    ("ammaa", ["a", "m", "m", "aa"]),
    ("kaaema", ["k", "aae", "m", "a"]),
])
def test_segment_examples(table, word, keys):
    seg = segment(word, table)
    assert seg.keys() == keys
    assert not any(s.is_passthrough for s in seg)


def test_unmatched_char_passes_through(table):
    seg = segment("x", table)
    assert len(seg) == 1 and seg[0].is_passthrough and seg[0].source == "x"


@pytest.mark.parametrize("word, expected", [
    ("mama", ["U+0DB8", "U+0DB8"]),
    ("ammaa", ["U+0D85", "U+0DB8", "U+0DCA", "U+0DB8", "U+0DCF"]),
    ("ek", ["U+0D91", "U+0D9A", "U+0DCA"]),
])
def test_render_examples(table, word, expected):
    assert cps(render(segment(word, table), table)) == expected


@pytest.mark.parametrize("word, expected", [("mama", "මම"), ("", ""), ("123", "123")])
def test_transliterate_word(table, word, expected):
    assert transliterate_word(word, table) == expected


def test_passthrough_closes_pending_consonant(table):
    # k then x: virama before the passthrough char
    assert cps(transliterate_word("kx", table)) == ["U+0D9A", "U+0DCA", "U+0078"]


def test_literal_entry_closes_pending_consonant():
    tbl = RuleTable.from_entries([
        RuleEntry("k", EntryClass.CONSONANT, "ක"),
        RuleEntry("q", EntryClass.LITERAL, "?"),
    ])
    assert transliterate_word("kq", tbl) == "ක්?"


def test_word_api_does_not_fold_case(table):
    # uppercase M is not a key: it passes through and the next 'a' is word-initial
    assert transliterate_word("Mama", table) == "Mඅම"


@pytest.mark.parametrize("text, expected", [
    ("mama, ammaa!", "මම, අම්මා!"),
    ("මම", "මම"),
    ("ek 2 ek", "එක් 2 එක්"),
    ("MAMA", "මම"),
    ("", ""),
])
def test_transliterate_text(table, text, expected):
    assert transliterate_text(text, table) == expected


def test_text_without_folding(table):
    assert transliterate_text("Mama mama", table, fold_case=False) == "Mඅම මම"


def test_lexicon_round_trip(table, lexicon):
    assert len(lexicon) >= 30
    for pair in lexicon:
        assert transliterate_word(pair.romanized, table) == pair.native, pair.romanized


latin_text = st.text(st.sampled_from("abcdeghiklmnoprstuvwyzxAT"), max_size=40)
any_text = st.text(max_size=30)


@given(any_text)
def test_coverage(table, text):
    assert segment(text, table).source == text


@given(latin_text)
def test_greedy_no_longer_key(table, word):
    pos = 0
    for seg in segment(word, table):
        for longer in range(len(seg.source) + 1, table.max_key_len + 1):
            assert word[pos:pos + longer] not in table or pos + longer > len(word)
        pos += len(seg.source)


@given(any_text)
def test_fused_path_matches_segment_render(table, text):
    assert transliterate_word(text, table) == render(segment(text, table), table)


@given(latin_text, st.booleans())
def test_deterministic(table, text, fold):
    assert transliterate_text(text, table, fold) == transliterate_text(text, table, fold)


@given(st.text(st.sampled_from("abdeghikmnoprstuwy"), min_size=1, max_size=20))
def test_no_dangling_consonant(table, word):
    out = transliterate_word(word, table)
    last = segment(word, table)[-1]
    if last.entry is not None and last.entry.kind is EntryClass.CONSONANT:
        assert out.endswith(last.entry.base + table.virama)


literal_tables = st.dictionaries(
    st.text("abcdefgh", min_size=1, max_size=3), st.text(min_size=1, max_size=3), min_size=1, max_size=20)


@settings(max_examples=200)
@given(literal_tables, st.text("abcdefghxyz", max_size=30))
def test_literal_table_degenerates_to_flat_algorithm(mapping, word):
    tbl = RuleTable.from_entries(RuleEntry(k, EntryClass.LITERAL, v) for k, v in mapping.items())
    assert transliterate_word(word, tbl) == algorithm1(word, mapping)
