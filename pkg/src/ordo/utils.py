from itertools import product
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .word_path import FerrersBoard, Letter, Word, board_of

HEIGHTS_PREFIX = "heights:"


def parse_rook_spec(spec: str) -> FerrersBoard:
    """Resolve a ``rook`` command argument to a board.

    Accepts either ``heights:h1,h2,...`` or a generator string such as
    ``aAaAAAaAa`` (whose board is then taken).

    Raises:
        ValueError: If the spec is neither form.
    """
    text = spec.strip()
    if text.startswith(HEIGHTS_PREFIX):
        return FerrersBoard.parse(text[len(HEIGHTS_PREFIX):])
    try:
        return board_of(Word.parse(text))
    except ValueError as e:
        raise ValueError(
            f"malformed rook spec {spec!r}: expected a word or '{HEIGHTS_PREFIX}h1,h2,...' ({e})"
        ) from None


def words_of_length(length: int) -> Iterator[Word]:
    """All 2**length words, in lexicographic order with ``a`` before ``A``."""
    for letters in product((Letter.ANNIHILATOR, Letter.CREATOR), repeat=length):
        yield Word(letters)


def words_up_to(max_len: int) -> Iterator[Word]:
    for length in range(max_len + 1):
        yield from words_of_length(length)


def random_word(rng: np.random.Generator, length: int) -> Word:
    bits = rng.integers(0, 2, size=length)
    return Word(Letter.CREATOR if bit else Letter.ANNIHILATOR for bit in bits)


def random_words(rng: np.random.Generator, count: int, max_len: int) -> List[Word]:
    lengths = rng.integers(0, max_len + 1, size=count)
    return [random_word(rng, int(length)) for length in lengths]


def _partitions(total: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    # Nonincreasing parts, each at most max_part.
    if total == 0:
        yield ()
        return
    for part in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def boards_up_to(max_cells: int) -> Iterator[FerrersBoard]:
    """Every canonical board with at most ``max_cells`` cells (one per partition)."""
    for total in range(max_cells + 1):
        for parts in _partitions(total, total):
            yield FerrersBoard(parts)


def random_board(
    rng: np.random.Generator, max_cells: int, max_columns: Optional[int] = None
) -> FerrersBoard:
    """A random board with 1..max_cells cells, built by cutting a random total into columns."""
    total = int(rng.integers(1, max_cells + 1))
    heights = []
    remaining = total
    while remaining > 0 and (max_columns is None or len(heights) < max_columns):
        h = int(rng.integers(1, remaining + 1))
        heights.append(h)
        remaining -= h
    return FerrersBoard(heights)
