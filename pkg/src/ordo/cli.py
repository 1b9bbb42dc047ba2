import argparse
from typing import List, Optional

from .commands import run_command


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        help="Emit JSON instead of text.",
    )
    common.add_argument(
        "--limit",
        type=int,
        default=None,
        help="Word-length cap for the naive rewriter (Default: ORDO_REWRITE_LIMIT or 20)",
    )

    parser = argparse.ArgumentParser(
        prog="ordo",
        description="ordo - normal ordering in the Heisenberg-Weyl algebra via rook numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="Normal-order an expression.")
    p.add_argument("expr", help='Expression, e.g. "aAaAAAaAa" or "(a+A)^2"')

    p = sub.add_parser("rook", parents=[common], help="Rook numbers and rook polynomial of a board.")
    p.add_argument("spec", help='A word, or "heights:h1,h2,..."')

    p = sub.add_parser("board", parents=[common], help="Draw a word's path and Ferrers board.")
    p.add_argument("word", help='Generator string, e.g. "aAaAAAaAa"')

    p = sub.add_parser("mul", parents=[common], help="Product of basis elements A^r a^s * A^k a^l.")
    for name in ("r", "s", "k", "l"):
        p.add_argument(name, type=int)

    p = sub.add_parser("bench", parents=[common], help="Time the rook route against naive rewriting.")
    p.add_argument("-m", "--max-len", dest="max_len", type=int, default=10, help="Longest word length (Default: 10)")
    p.add_argument("-t", "--trials", type=int, default=50, help="Random words per length (Default: 50)")
    p.add_argument("-w", "--workers", type=int, default=None, help="Worker processes (0 = all cores, 1 = inline)")
    p.add_argument("--csv", action="store_true", help="Emit the report as CSV.")
    p.add_argument(
        "--alternating",
        action="store_true",
        help="Report on (aA)^n for n = 8..12 instead; add --limit 24 to time the naive route for n = 11, 12 too.",
    )

    p = sub.add_parser("selftest", parents=[common], help="Exhaustive oracle sweep plus golden cases.")
    p.add_argument("-m", "--max-len", dest="max_len", type=int, default=10, help="Sweep all words up to this length (Default: 10)")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    return run_command(parser.parse_args(argv))
