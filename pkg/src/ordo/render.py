"""Text renderings used by the command-line front end.

Board drawings put the path's start (0, 0) at the bottom left: a creator is a
step to the right, an annihilator a step up, and lines are printed from the
top of the path down.
"""

from typing import List, Tuple

from .algebra import NormalForm, structure_constants
from .rook import RookVector, rook_numbers
from .word_path import FerrersBoard, Letter, Word, board_of, raw_column_heights

EMPTY_WORD_MESSAGE = "empty word: empty board"


def _climbs(word: Word) -> set:
    """Lattice points (x, y) from which the path steps up."""
    points = set()
    x = y = 0
    for letter in word:
        if letter is Letter.CREATOR:
            x += 1
        else:
            points.add((x, y))
            y += 1
    return points


def render_board(word: Word) -> str:
    """Draw the staircase path of ``word`` and the board cells beneath it.

    Each column is three characters wide: a boundary character ('|' where the
    path climbs) followed by "[]" for a cell below the path, "__" where the
    path runs along the top of the column, or blanks above it.
    """
    if len(word) == 0:
        return EMPTY_WORD_MESSAGE

    heights = raw_column_heights(word)
    climbs = _climbs(word)
    top = word.annihilator_count
    lines: List[str] = []
    for y in range(top, -1, -1):
        chars = []
        for x in range(len(heights) + 1):
            chars.append("|" if (x, y) in climbs else " ")
            if x == len(heights):
                break
            if y < heights[x]:
                chars.append("[]")
            elif y == heights[x]:
                chars.append("__")
            else:
                chars.append("  ")
        lines.append("".join(chars).rstrip())

    while lines and not lines[0]:
        lines.pop(0)

    board = board_of(word)
    if board.is_empty:
        lines.append("board: empty")
    else:
        noun = "cell" if board.cell_count == 1 else "cells"
        lines.append(f"board: {board} ({board.cell_count} {noun})")
    return "\n".join(lines)


def render_rook(board: FerrersBoard) -> Tuple[RookVector, str]:
    counts = rook_numbers(board)
    text = ", ".join(str(c) for c in counts) + "\n" + counts.polynomial_text()
    return counts, text


def render_gammas(x: Tuple[int, int], y: Tuple[int, int]) -> str:
    """One aligned row per non-vanishing structure constant of b(x) * b(y)."""
    gammas = sorted(
        structure_constants(x, y).items(), key=lambda item: (-(item[0].r + item[0].s), -item[0].r)
    )
    rows = []
    for i, (index, gamma) in enumerate(gammas):
        rows.append(
            {
                "i": str(i),
                "label": f"gamma[{x[0]},{x[1]};{y[0]},{y[1]}]^({index.r},{index.s})",
                "value": str(gamma),
                "term": NormalForm.monomial(index.r, index.s, gamma).to_text(),
            }
        )

    i_w = max(len("i"), max(len(r["i"]) for r in rows))
    label_w = max(len("gamma"), max(len(r["label"]) for r in rows))
    value_w = max(len("value"), max(len(r["value"]) for r in rows))

    lines = [f"{'i':>{i_w}}  {'gamma':<{label_w}}  {'value':>{value_w}}  term"]
    for r in rows:
        lines.append(
            f"{r['i']:>{i_w}}  {r['label']:<{label_w}}  {r['value']:>{value_w}}  {r['term']}"
        )
    return "\n".join(lines)
