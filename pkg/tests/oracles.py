"""Independent reference implementations used only by the tests."""
from functools import lru_cache


@lru_cache(maxsize=None)
def recursive_edit_distance(a: tuple, b: tuple) -> int:
    """Textbook recursive definition; no DP table, no backtrace."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    if a[0] == b[0]:
        return recursive_edit_distance(a[1:], b[1:])
    return 1 + min(
        recursive_edit_distance(a[1:], b),
        recursive_edit_distance(a, b[1:]),
        recursive_edit_distance(a[1:], b[1:]),
    )


def algorithm1(word: str, transliteration_table: dict) -> str:
    """Direct transcription of the published greedy pseudocode (flat string map)."""
    result = ""
    i = 0
    while i < len(word):
        matched = False
        for length in (3, 2, 1):
            substring = word[i:i + length]
            if substring in transliteration_table:
                result = result + transliteration_table[substring]
                i = i + length
                matched = True
                break
        if not matched:
            result = result + word[i]
            i = i + 1
    return result
