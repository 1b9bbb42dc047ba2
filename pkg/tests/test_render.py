"""Golden-output tests for ordo.render."""

from ordo.render import EMPTY_WORD_MESSAGE, render_board, render_gammas, render_rook
from ordo.word_path import FerrersBoard, Word

GOLDEN_BOARD_TEXT = "\n".join(
    [
        "             __|",
        "    __ __ __|[]",
        " __|[] [] [] []",
        "|[] [] [] [] []",
        "board: 1,2,2,2,3 (10 cells)",
    ]
)


def test_render_golden_board():
    assert render_board(Word.parse("aAaAAAaAa")) == GOLDEN_BOARD_TEXT


def test_render_single_cell():
    assert render_board(Word.parse("aA")) == " __\n|[]\nboard: 1 (1 cell)"


def test_render_empty_word():
    assert render_board(Word.parse("")) == EMPTY_WORD_MESSAGE == "empty word: empty board"


def test_render_ordered_word_has_no_cells():
    text = render_board(Word.parse("Aa"))
    assert "[]" not in text
    assert text.endswith("board: empty")


def test_render_is_deterministic():
    word = Word.parse("aaAaAA")
    assert render_board(word) == render_board(word)


def test_render_rook_text():
    counts, text = render_rook(FerrersBoard((1, 2, 2, 2, 3)))
    assert list(counts) == [1, 10, 23, 9]
    assert text == "1, 10, 23, 9\n1 + 10x + 23x^2 + 9x^3"
    assert render_rook(FerrersBoard((1,)))[1].splitlines()[0] == "1, 1"


def test_render_gammas_table():
    lines = render_gammas((0, 2), (2, 0)).splitlines()
    assert lines[0].split() == ["i", "gamma", "value", "term"]
    assert len(lines) == 4
    assert lines[1].split() == ["0", "gamma[0,2;2,0]^(2,2)", "1", "A^2", "a^2"]
    assert lines[2].split() == ["1", "gamma[0,2;2,0]^(1,1)", "4", "4", "A", "a"]
    assert lines[3].split() == ["2", "gamma[0,2;2,0]^(0,0)", "2", "2", "I"]
