"""Words over {a, a†}, their staircase lattice paths, and Ferrers boards.

A word is read left to right; every creator (a†, written ``A``) is a step to
the right and every annihilator (``a``) a step up. The cells lying below the
resulting path form the word's Ferrers board, stored as a nondecreasing tuple
of positive column heights.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple

from .config import ANNIHILATOR_SYMBOL, CREATOR_SYMBOL


class Letter(Enum):
    ANNIHILATOR = ANNIHILATOR_SYMBOL
    CREATOR = CREATOR_SYMBOL

    def __str__(self) -> str:
        return self.value


class Step(Enum):
    RIGHT = "R"
    UP = "U"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Word:
    """Immutable word in the two-letter alphabet; the empty word is the unit."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        # Accept any iterable of letters but store a tuple so words hash.
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse ``a`` as an annihilator and ``A``, ``a†`` or ``ad`` as a creator.

        Whitespace between letters is ignored.

        Raises:
            ValueError: On any other character; the message carries the
                0-based UTF-8 byte offset of the offending character.
        """
        letters: List[Letter] = []
        i = 0
        offset = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                pass
            elif ch == CREATOR_SYMBOL:
                letters.append(Letter.CREATOR)
            elif ch == ANNIHILATOR_SYMBOL:
                nxt = text[i + 1] if i + 1 < len(text) else ""
                if nxt in ("†", "d"):
                    letters.append(Letter.CREATOR)
                    offset += len(ch.encode("utf-8"))
                    i += 1
                    ch = nxt
                else:
                    letters.append(Letter.ANNIHILATOR)
            else:
                raise ValueError(f"invalid letter {ch!r} at byte {offset}")
            offset += len(ch.encode("utf-8"))
            i += 1
        return cls(tuple(letters))

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __mul__(self, times: int) -> "Word":
        if not isinstance(times, int):
            return NotImplemented
        return Word(self.letters * times)

    @property
    def creator_count(self) -> int:
        return sum(1 for letter in self.letters if letter is Letter.CREATOR)

    @property
    def annihilator_count(self) -> int:
        return sum(1 for letter in self.letters if letter is Letter.ANNIHILATOR)


@dataclass(frozen=True)
class LatticePath:
    steps: Tuple[Step, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __str__(self) -> str:
        return ",".join(str(step) for step in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class FerrersBoard:
    """Ferrers board as column heights, canonical: nondecreasing, no zeros.

    Any height sequence is accepted at construction and canonicalized, so two
    boards compare equal exactly when they have the same rook numbers by
    column permutation.
    """

    heights: Tuple[int, ...] = ()

    def __post_init__(self):
        heights = tuple(int(h) for h in self.heights)
        if any(h < 0 for h in heights):
            raise ValueError(f"column heights must be nonnegative, got {heights}")
        object.__setattr__(self, "heights", tuple(sorted(h for h in heights if h > 0)))

    @classmethod
    def rectangle(cls, height: int, columns: int) -> "FerrersBoard":
        """``columns`` columns of height ``height`` (the board of A^r a^s A^k a^l)."""
        if height < 0 or columns < 0:
            raise ValueError("rectangle dimensions must be nonnegative")
        return cls((height,) * columns)

    @classmethod
    def parse(cls, text: str) -> "FerrersBoard":
        """Parse comma-separated heights, e.g. ``"1,2,2,2,3"``; empty text is the empty board."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            heights = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"malformed board heights: {text!r}") from None
        return cls(heights)

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.heights)

    def __len__(self) -> int:
        return len(self.heights)

    @property
    def cell_count(self) -> int:
        return sum(self.heights)

    @property
    def max_height(self) -> int:
        return self.heights[-1] if self.heights else 0

    @property
    def is_empty(self) -> bool:
        return not self.heights

    def cells(self) -> Iterable[Tuple[int, int]]:
        """Yield (column, row) pairs, both 0-based, rows counted from the bottom."""
        for column, height in enumerate(self.heights):
            for row in range(height):
                yield column, row


# --- OPERATIONS ---


def encode_path(word: Word) -> LatticePath:
    return LatticePath(
        Step.RIGHT if letter is Letter.CREATOR else Step.UP for letter in word
    )


def decode_word(path: LatticePath) -> Word:
    return Word(
        Letter.CREATOR if step is Step.RIGHT else Letter.ANNIHILATOR for step in path.steps
    )


def raw_column_heights(word: Word) -> List[int]:
    """Height of the path under each creator, in word order (zeros kept)."""
    heights = []
    seen_annihilators = 0
    for letter in word:
        if letter is Letter.ANNIHILATOR:
            seen_annihilators += 1
        else:
            heights.append(seen_annihilators)
    return heights


def board_of(word: Word) -> FerrersBoard:
    return FerrersBoard(raw_column_heights(word))


def excess_counts(word: Word) -> Tuple[int, int]:
    """Return (creators, annihilators): the exponents of the leading monomial."""
    return word.creator_count, word.annihilator_count


def inversion_count(word: Word) -> int:
    """Number of (annihilator, later creator) pairs; the board's cell count."""
    return sum(raw_column_heights(word))


def is_normally_ordered(word: Word) -> bool:
    return inversion_count(word) == 0


def step_positions(word: Word) -> List[int]:
    """Indices i where the factor ``aA`` starts, i.e. where the path has a step."""
    letters = word.letters
    return [
        i
        for i in range(len(letters) - 1)
        if letters[i] is Letter.ANNIHILATOR and letters[i + 1] is Letter.CREATOR
    ]


def reduce_step(word: Word, index: int) -> Tuple[Word, Word]:
    """Split ``word`` at the step ``aA`` starting at ``index``.

    Returns the word with that factor swapped to ``Aa`` and the word with the
    factor deleted; in the algebra, ``word`` equals their sum.

    Raises:
        ValueError: If no ``aA`` factor starts at ``index``.
    """
    if index not in step_positions(word):
        raise ValueError(f"no 'aA' factor at index {index} of {str(word)!r}")
    letters = word.letters
    swapped = letters[:index] + (Letter.CREATOR, Letter.ANNIHILATOR) + letters[index + 2:]
    contracted = letters[:index] + letters[index + 2:]
    return Word(swapped), Word(contracted)
