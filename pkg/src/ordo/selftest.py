import argparse
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Set, Tuple

from .algebra import NormalForm, normal_order_word
from .config import EXIT_MISMATCH, EXIT_OK, Config
from .oracle import equal_by_action, rewrite_normal
from .rook import RookVector, rook_brute_force, rook_numbers
from .utils import words_up_to
from .word_path import FerrersBoard, Word, board_of

GOLDEN_WORD = "aAaAAAaAa"
GOLDEN_ROOK_NUMBERS = (1, 10, 23, 9)
GOLDEN_NORMAL_FORM = {(5, 4): 1, (4, 3): 10, (3, 2): 23, (2, 1): 9}


@dataclass(frozen=True)
class SelftestResult:
    passed: bool
    words_checked: int
    golden_cases: int
    first_failure: Optional[str] = None
    boards_checked: int = 0

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({self.words_checked} words, {self.golden_cases} golden cases)"
        return f"FAIL: {self.first_failure}"


def _check_word(
    word: Word,
    cfg: Config,
    rook_fn: Callable[[FerrersBoard], RookVector],
    seen_boards: Set[FerrersBoard],
) -> Optional[str]:
    board = board_of(word)
    if board not in seen_boards and board.cell_count <= cfg.brute_force_limit:
        seen_boards.add(board)
        counts, expected = rook_fn(board), rook_brute_force(board, cfg.brute_force_limit)
        if tuple(counts) != tuple(expected):
            return f"rook numbers {list(counts)} != brute force {list(expected)} on board {board}"

    via_rooks = normal_order_word(word, rook_fn=rook_fn)
    via_rewriting = rewrite_normal(word, cfg.rewrite_limit)
    if via_rooks != via_rewriting:
        return f"rook route gives {via_rooks}, rewriting gives {via_rewriting}"
    if not equal_by_action(via_rooks, via_rewriting):
        return "polynomial action disagrees"
    return None


def _check_golden(rook_fn: Callable[[FerrersBoard], RookVector]) -> Tuple[int, Optional[str]]:
    golden = Word.parse(GOLDEN_WORD)
    counts = rook_fn(board_of(golden))
    if tuple(counts) != GOLDEN_ROOK_NUMBERS:
        return 0, f"rook numbers {list(counts)} != {list(GOLDEN_ROOK_NUMBERS)}"
    ordered = normal_order_word(golden, rook_fn=rook_fn)
    if ordered != NormalForm(GOLDEN_NORMAL_FORM):
        return 1, f"normal form {ordered}"
    return 2, None


def run(
    cfg: Config,
    max_len: int = 10,
    rook_fn: Callable[[FerrersBoard], RookVector] = rook_numbers,
) -> SelftestResult:
    """Cross-check the rook route against the oracles.

    Every word of length 0..max_len is normal-ordered through ``rook_fn`` and
    compared with the naive rewriter, then confirmed by the polynomial
    action. Each distinct board met on the way with at most
    ``cfg.brute_force_limit`` cells also has its rook numbers compared with
    brute-force enumeration. The two golden cases (the rook numbers and the
    normal form of ``aAaAAAaAa``) are checked afterwards.

    Stops at the first failure. An exception raised while checking a word,
    for instance by a broken ``rook_fn``, is reported as that word's failure.
    """
    if max_len > cfg.rewrite_limit:
        raise ValueError(f"max_len {max_len} exceeds rewrite limit {cfg.rewrite_limit}")

    checked = 0
    seen_boards: Set[FerrersBoard] = set()
    for word in words_up_to(max_len):
        checked += 1
        try:
            failure = _check_word(word, cfg, rook_fn, seen_boards)
        except Exception as e:
            failure = f"{type(e).__name__}: {e}"
        if failure is not None:
            return SelftestResult(
                passed=False,
                words_checked=checked,
                golden_cases=0,
                first_failure=f"word {str(word)!r}: {failure}",
                boards_checked=len(seen_boards),
            )

    try:
        golden_cases, failure = _check_golden(rook_fn)
    except Exception as e:
        golden_cases, failure = 0, f"{type(e).__name__}: {e}"
    return SelftestResult(
        passed=failure is None,
        words_checked=checked,
        golden_cases=golden_cases,
        first_failure=None if failure is None else f"word {GOLDEN_WORD!r}: {failure}",
        boards_checked=len(seen_boards),
    )


def main():
    from .config import load_config_from_env

    parser = argparse.ArgumentParser(description="ordo - oracle selftest")
    parser.add_argument("-m", "--max-len", dest="max_len", type=int, default=10, help="Sweep all words up to this length (Default: 10)")
    args = parser.parse_args()

    result = run(load_config_from_env(), max_len=args.max_len)
    print(result.summary())
    sys.exit(EXIT_OK if result.passed else EXIT_MISMATCH)


if __name__ == "__main__":
    main()
