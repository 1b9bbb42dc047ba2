"""Tests for ordo.word_path: word parsing, path encoding and board extraction."""

import pytest

from ordo.utils import words_up_to
from ordo.word_path import (
    FerrersBoard,
    LatticePath,
    Letter,
    Step,
    Word,
    board_of,
    decode_word,
    encode_path,
    excess_counts,
    inversion_count,
    is_normally_ordered,
    raw_column_heights,
    reduce_step,
    step_positions,
)

GOLDEN = "aAaAAAaAa"


def test_encode_golden_word():
    assert str(encode_path(Word.parse(GOLDEN))) == "U,R,U,R,R,R,U,R,U"


def test_encode_trivial_words():
    assert len(encode_path(Word.parse(""))) == 0
    assert str(encode_path(Word.parse("Aa"))) == "R,U"


def test_decode_examples():
    assert str(decode_word(LatticePath((Step.UP, Step.RIGHT)))) == "aA"
    assert str(decode_word(LatticePath())) == ""
    path = LatticePath((Step.RIGHT, Step.UP, Step.RIGHT, Step.UP))
    assert str(decode_word(path)) == "AaAa"


def test_path_round_trip_exhaustive():
    """decode(encode(w)) == w for every word up to length 12, and lengths match."""
    for word in words_up_to(12):
        path = encode_path(word)
        assert len(path) == len(word)
        assert decode_word(path) == word


def test_board_of_golden_word():
    board = board_of(Word.parse(GOLDEN))
    assert board.heights == (1, 2, 2, 2, 3)
    assert board.cell_count == 10
    assert excess_counts(Word.parse(GOLDEN)) == (5, 4)


def test_board_of_ordered_words_is_empty():
    assert board_of(Word.parse("AAAA")).is_empty
    assert board_of(Word.parse("aaa")).is_empty
    assert excess_counts(Word.parse("")) == (0, 0)
    assert excess_counts(Word.parse("aA")) == (1, 1)


def test_board_is_many_to_one():
    """Words differing only in a trailing annihilator run, or a leading creator run, share a board."""
    assert board_of(Word.parse("aAa")) == board_of(Word.parse("aAaaa"))
    assert board_of(Word.parse("AAaA")) == board_of(Word.parse("aA"))
    assert raw_column_heights(Word.parse("AAaA")) == [0, 0, 1]


def test_board_heights_are_canonical_for_all_words():
    for word in words_up_to(10):
        heights = board_of(word).heights
        assert all(h > 0 for h in heights)
        assert list(heights) == sorted(heights)


def test_ferrers_board_canonicalizes_and_validates():
    assert FerrersBoard((3, 0, 1, 2)).heights == (1, 2, 3)
    assert FerrersBoard.parse("2,2") == FerrersBoard.rectangle(2, 2)
    assert FerrersBoard.parse("") == FerrersBoard()
    with pytest.raises(ValueError):
        FerrersBoard((1, -1))
    with pytest.raises(ValueError, match="malformed"):
        FerrersBoard.parse("1,x")


def test_board_cells_are_zero_based():
    assert list(FerrersBoard((1, 2)).cells()) == [(0, 0), (1, 0), (1, 1)]


def test_word_parse_accepts_creator_aliases():
    assert Word.parse("a†") == Word.parse("A") == Word.parse("ad")
    assert Word.parse("a a† a") == Word.parse("aAa")
    assert Word.parse(GOLDEN)[0] is Letter.ANNIHILATOR


def test_word_parse_reports_byte_offset():
    # '†' is three bytes in UTF-8, so 'x' sits at byte 4.
    with pytest.raises(ValueError, match="byte 4"):
        Word.parse("a†x")


def test_word_concat_and_repeat():
    assert Word.parse("aA") + Word.parse("Aa") == Word.parse("aAAa")
    assert str(Word.parse("aA") * 3) == "aAaAaA"


def test_inversion_count_equals_cell_count():
    for word in words_up_to(8):
        assert inversion_count(word) == board_of(word).cell_count
    assert is_normally_ordered(Word.parse("AAaa"))
    assert not is_normally_ordered(Word.parse("aA"))


def test_reduce_step_splits_into_swapped_and_contracted():
    word = Word.parse("AaAa")
    assert step_positions(word) == [1]
    swapped, contracted = reduce_step(word, 1)
    assert str(swapped) == "AAaa"
    assert str(contracted) == "Aa"


def test_reduce_step_rejects_non_step():
    with pytest.raises(ValueError, match="no 'aA' factor"):
        reduce_step(Word.parse("Aa"), 0)
