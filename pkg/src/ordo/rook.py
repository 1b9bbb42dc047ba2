"""Rook numbers of Ferrers boards.

``rook_numbers`` evaluates the step-cell recursion

    R_B(x) = R_B'(x) + x * R_B''(x),    R_empty(x) = 1,

where B' is B with a step-forming cell removed and B'' is B with that cell's
row and column removed. Results are memoized on the canonical height tuple.
The reduced chain B -> B' -> B'' ... is walked iteratively, so the Python
recursion depth is bounded by the number of columns rather than the number
of cells.
"""

import bisect
import threading
from dataclasses import dataclass
from enum import Enum
from itertools import groupby
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .config import DEFAULT_BRUTE_FORCE_LIMIT
from .word_path import FerrersBoard

Heights = Tuple[int, ...]
Cell = Tuple[int, int]


@dataclass(frozen=True)
class RookVector:
    """Rook numbers r_B(0), r_B(1), ... with trailing zeros trimmed."""

    counts: Tuple[int, ...] = (1,)

    def __post_init__(self):
        counts = [int(c) for c in self.counts]
        if any(c < 0 for c in counts):
            raise ValueError(f"rook numbers must be nonnegative, got {counts}")
        while counts and counts[-1] == 0:
            counts.pop()
        object.__setattr__(self, "counts", tuple(counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __iter__(self):
        return iter(self.counts)

    @property
    def max_rooks(self) -> int:
        return len(self.counts) - 1

    def polynomial_text(self) -> str:
        """Render as ``1 + 10x + 23x^2 + 9x^3``."""
        parts = []
        for k, c in enumerate(self.counts):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            coeff = "" if c == 1 else str(c)
            power = "x" if k == 1 else f"x^{k}"
            parts.append(f"{coeff}{power}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> List[str]:
        # Decimal strings keep arbitrary precision through JSON consumers.
        return [str(c) for c in self.counts]


@dataclass(frozen=True)
class BoardSplit:
    reduced: FerrersBoard
    collapsed: FerrersBoard
    cell: Cell


class StepRule(Enum):
    # Top cell of the leftmost column of maximal height.
    LEFTMOST_MAX = "leftmost-max"
    # Top cell of the first (shortest) column.
    LEFTMOST_STEP = "leftmost-step"


# --- DECOMPOSITION ---


def _step_columns(heights: Heights) -> List[int]:
    return [j for j in range(len(heights)) if j == 0 or heights[j - 1] < heights[j]]


def _rule_column(heights: Heights, rule: StepRule) -> int:
    if rule is StepRule.LEFTMOST_MAX:
        return bisect.bisect_left(heights, heights[-1])
    return 0


def _split(heights: Heights, column: int) -> Tuple[Heights, Heights]:
    h = heights[column]
    reduced = heights[:column] + ((h - 1,) if h > 1 else ()) + heights[column + 1:]
    collapsed = tuple(
        height - 1 if height >= h else height
        for j, height in enumerate(heights)
        if j != column
    )
    return (
        tuple(sorted(x for x in reduced if x > 0)),
        tuple(sorted(x for x in collapsed if x > 0)),
    )


def step_cells(board: FerrersBoard) -> List[Cell]:
    """All step-forming cells: the top of the leftmost column of each height level."""
    return [(j, board.heights[j] - 1) for j in _step_columns(board.heights)]


def decompose_at(board: FerrersBoard, column: int) -> BoardSplit:
    """Split ``board`` on the step-forming cell at the top of ``column``.

    Raises:
        ValueError: If the board is empty or the cell on top of ``column``
            has a neighbour to its left.
    """
    if board.is_empty:
        raise ValueError("nothing to decompose")
    if column not in _step_columns(board.heights):
        raise ValueError(
            f"column {column} of board {board} does not carry a step-forming cell"
        )
    reduced, collapsed = _split(board.heights, column)
    return BoardSplit(
        reduced=FerrersBoard(reduced),
        collapsed=FerrersBoard(collapsed),
        cell=(column, board.heights[column] - 1),
    )


def decompose_step(board: FerrersBoard, rule: StepRule = StepRule.LEFTMOST_MAX) -> BoardSplit:
    if board.is_empty:
        raise ValueError("nothing to decompose")
    return decompose_at(board, _rule_column(board.heights, rule))


# --- RECURSION ---


class _RookCache:
    """Process-wide memo of rook numbers keyed on canonical heights."""

    def __init__(self):
        self._lock = threading.Lock()
        self._table: Dict[Heights, Tuple[int, ...]] = {(): (1,)}
        self.hits = 0
        self.misses = 0

    def get(self, heights: Heights) -> Optional[Tuple[int, ...]]:
        with self._lock:
            counts = self._table.get(heights)
            if counts is None:
                self.misses += 1
            else:
                self.hits += 1
            return counts

    def __setitem__(self, heights: Heights, counts: Tuple[int, ...]) -> None:
        with self._lock:
            self._table[heights] = counts

    def clear(self) -> None:
        with self._lock:
            self._table = {(): (1,)}
            self.hits = 0
            self.misses = 0

    def info(self) -> Dict[str, int]:
        with self._lock:
            return {"entries": len(self._table), "hits": self.hits, "misses": self.misses}


_CACHE = _RookCache()


def _add_shifted(base: Tuple[int, ...], shifted: Tuple[int, ...]) -> Tuple[int, ...]:
    out = list(base) + [0] * max(0, len(shifted) + 1 - len(base))
    for k, c in enumerate(shifted):
        out[k + 1] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _rook_counts(heights: Heights, rule: StepRule, memo) -> Tuple[int, ...]:
    # Walk the reduced chain until a known board, then unwind it. One get per
    # lookup: clear_rook_cache may run between any two calls.
    chain: List[Tuple[Heights, Heights]] = []
    board = heights
    counts = memo.get(board)
    while counts is None:
        reduced, collapsed = _split(board, _rule_column(board, rule))
        chain.append((board, collapsed))
        board = reduced
        counts = memo.get(board)

    for current, collapsed in reversed(chain):
        counts = _add_shifted(counts, _rook_counts(collapsed, rule, memo))
        memo[current] = counts
    return counts


def rook_numbers(board: FerrersBoard, rule: StepRule = StepRule.LEFTMOST_MAX) -> RookVector:
    """Exact rook numbers of ``board``.

    The default rule shares a process-wide memo; any other rule uses a fresh
    memo per call so the two routes never read each other's entries.
    """
    if rule is StepRule.LEFTMOST_MAX:
        cached = _CACHE.get(board.heights)
        if cached is not None:
            return RookVector(cached)
        return RookVector(_rook_counts(board.heights, rule, _CACHE))
    return RookVector(_rook_counts(board.heights, rule, {(): (1,)}))


def rook_cache_info() -> Dict[str, int]:
    return _CACHE.info()


def clear_rook_cache() -> None:
    _CACHE.clear()


def rook_numbers_rect(s: int, k: int) -> RookVector:
    """Closed form for ``k`` columns of height ``s``: i! * C(s, i) * C(k, i)."""
    if s < 0 or k < 0:
        raise ValueError("rectangle dimensions must be nonnegative")
    return RookVector(tuple(factorial(i) * comb(s, i) * comb(k, i) for i in range(min(s, k) + 1)))


# --- BRUTE FORCE ORACLE ---


def count_placements(cells: Iterable[Cell]) -> RookVector:
    """Count non-attacking rook placements on an arbitrary set of cells.

    Columns are scanned one at a time; each either stays empty or takes a
    rook on a row not used so far, so every placement is visited once.
    """
    ordered = sorted(set(cells))
    columns: List[Sequence[int]] = [
        [row for _, row in group] for _, group in groupby(ordered, key=lambda cell: cell[0])
    ]
    counts = [0] * (len(columns) + 1)
    used_rows = set()

    def place(index: int, rooks: int) -> None:
        if index == len(columns):
            counts[rooks] += 1
            return
        place(index + 1, rooks)
        for row in columns[index]:
            if row not in used_rows:
                used_rows.add(row)
                place(index + 1, rooks + 1)
                used_rows.remove(row)

    place(0, 0)
    return RookVector(tuple(counts))


def rook_brute_force(board: FerrersBoard, limit: int = DEFAULT_BRUTE_FORCE_LIMIT) -> RookVector:
    """Rook numbers by direct enumeration; a test oracle for ``rook_numbers``.

    Raises:
        ValueError: If the board has more than ``limit`` cells.
    """
    if board.cell_count > limit:
        raise ValueError(
            f"board too large for brute force: {board.cell_count} cells exceeds limit {limit}"
        )
    return count_placements(board.cells())
