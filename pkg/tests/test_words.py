"""Letter and word force model, with oracle equivalence checks."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from dipolecodes import words
from dipolecodes.words import (
    LengthMismatch,
    alignment_violations,
    complement,
    is_aligned,
    is_attracted,
    letter_force,
    offset_forces,
    parse_letter,
    reverse,
    word_force,
)

from helpers import (
    naive_alignment_violations,
    naive_force,
    naive_is_aligned,
    naive_offset_forces,
)

ALPHA = ".01"

letters = st.sampled_from(ALPHA)


@st.composite
def equal_words(draw, min_len=0, max_len=10):
    n = draw(st.integers(min_len, max_len))
    x = "".join(draw(st.lists(letters, min_size=n, max_size=n)))
    y = "".join(draw(st.lists(letters, min_size=n, max_size=n)))
    return x, y


@pytest.mark.parametrize(
    "x,y,expected",
    [
        ("0", "1", 1),
        ("1", "0", 1),
        ("0", "0", -1),
        ("1", "1", -1),
        (".", ".", 0),
        (".", "0", 0),
        (".", "1", 0),
        ("0", ".", 0),
        ("1", ".", 0),
    ],
)
def test_letter_force_table(x, y, expected):
    assert letter_force(x, y) == expected


def test_letter_force_rejects_non_letters():
    with pytest.raises(ValueError):
        letter_force("a", "1")


def test_parse_letter_bijection():
    for ch in ALPHA:
        assert parse_letter(ch) == ch
    for bad in ("", "01", "x", "2"):
        with pytest.raises(ValueError):
            parse_letter(bad)


def test_word_force_examples():
    assert word_force("110", "011") == 1
    assert word_force("...", "111") == 0
    assert word_force("10", "01") == 2
    assert word_force("", "") == 0


def test_word_force_length_mismatch():
    with pytest.raises(LengthMismatch) as exc:
        word_force("10", "100")
    assert exc.value.lengths == (2, 3)


def test_is_attracted_examples():
    assert is_attracted("10", "01")
    assert not is_attracted("11", "11")
    assert not is_attracted("..", "..")


def test_reverse_examples():
    assert reverse("10.") == ".01"
    assert reverse("") == ""
    assert reverse("1111111101...1111111") == "1111111...1011111111"


def test_complement_examples():
    assert complement("10.") == "01."
    assert complement("...") == "..."
    assert complement(complement("0.1")) == "0.1"


def test_offset_forces_examples():
    assert offset_forces("1.", ".0") == [(1, 1, 0)]
    assert offset_forces("..", "..") == [(1, 0, 0)]
    # Direct expansion: both sides pair a '1' against a '0'.
    assert offset_forces("10", "10") == [(1, 1, 1)]
    assert offset_forces("1", "0") == []


def test_offset_forces_errors():
    with pytest.raises(LengthMismatch):
        offset_forces("10", "1")
    with pytest.raises(ValueError):
        offset_forces("", "")


def test_is_aligned_examples():
    assert is_aligned("..", "..")
    assert alignment_violations("..", "..") == []
    assert not is_aligned("1.", ".0")
    assert alignment_violations("1.", ".0") == [("Y", 1, 1)]


def test_alignment_full_overlap_marker():
    # "10" on "01": the reflected full overlap attracts with force 2.
    viols = alignment_violations("10", "01")
    assert ("full", 0, 2) in viols


def test_length_one_alignment_reduces_to_full_overlap():
    assert is_aligned("0", "0")
    assert not is_aligned("0", "1")
    assert alignment_violations("0", "1") == [("full", 0, 1)]


def test_alignment_needs_nonempty_words():
    with pytest.raises(ValueError):
        is_aligned("", "")


@given(equal_words(min_len=0, max_len=12))
def test_force_symmetry(pair):
    x, y = pair
    assert word_force(x, y) == word_force(y, x)
    assert word_force(x, reverse(y)) == word_force(y, reverse(x))


@given(equal_words(min_len=0, max_len=12))
def test_complement_and_reversal_invariance(pair):
    x, y = pair
    f = word_force(x, y)
    assert word_force(complement(x), complement(y)) == f
    assert word_force(reverse(x), reverse(y)) == f


@given(equal_words(min_len=0, max_len=12))
def test_force_bound(pair):
    x, y = pair
    overlap = sum(1 for a, b in zip(x, y) if a != "." and b != ".")
    assert abs(word_force(x, y)) <= overlap


@given(equal_words(min_len=1, max_len=12))
def test_alignment_invariant_under_complement(pair):
    x, y = pair
    assert is_aligned(x, y) == is_aligned(complement(x), complement(y))


@given(equal_words(min_len=1, max_len=10))
def test_alignment_is_symmetric(pair):
    x, y = pair
    assert is_aligned(x, y) == is_aligned(y, x)


@given(equal_words(min_len=0, max_len=12))
def test_word_force_matches_oracle(pair):
    x, y = pair
    assert word_force(x, y) == naive_force(x, y)


@given(equal_words(min_len=1, max_len=10))
def test_offset_forces_match_oracle(pair):
    x, y = pair
    assert offset_forces(x, y) == naive_offset_forces(x, y)


@given(equal_words(min_len=1, max_len=10))
def test_alignment_matches_oracle(pair):
    x, y = pair
    assert is_aligned(x, y) == naive_is_aligned(x, y)
    assert alignment_violations(x, y) == naive_alignment_violations(x, y)


def test_alignment_matches_oracle_exhaustively_to_length_4():
    """Every word pair up to length 4, against the naive re-derivation."""
    for n in range(1, 5):
        for xs in product(ALPHA, repeat=n):
            x = "".join(xs)
            for ys in product(ALPHA, repeat=n):
                y = "".join(ys)
                assert is_aligned(x, y) == naive_is_aligned(x, y)
                assert alignment_violations(x, y) == naive_alignment_violations(x, y)


def test_is_aligned_agrees_with_violation_list():
    import random

    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(1, 14)
        x = "".join(rng.choice(ALPHA) for _ in range(n))
        y = "".join(rng.choice(ALPHA) for _ in range(n))
        assert is_aligned(x, y) == (not alignment_violations(x, y))


def test_enumeration_order_is_ascii():
    assert sorted("10.") == list(words.ALPHABET)
