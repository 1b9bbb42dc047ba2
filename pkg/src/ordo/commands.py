import json
import sys
import traceback
from dataclasses import replace
from enum import Enum

from . import bench, selftest
from .algebra import multiply_basis
from .config import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, Config, load_config_from_env
from .parser import ParseError, normalize
from .render import render_board, render_gammas, render_rook
from .utils import parse_rook_spec
from .word_path import Word


class OutputMode(Enum):
    TEXT = "text"
    JSON = "json"


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _caret_line(text: str, byte_offset: int) -> str:
    column = len(text.encode("utf-8")[:byte_offset].decode("utf-8", errors="ignore"))
    return " " * column + "^"


def cmd_normalize(cfg: Config, expr: str, mode: OutputMode = OutputMode.TEXT) -> int:
    try:
        result = normalize(expr, cfg.exponent_limit)
    except ParseError as e:
        print(f"Error: {e}", file=sys.stderr)
        print(f"  {expr}", file=sys.stderr)
        print(f"  {_caret_line(expr, e.offset)}", file=sys.stderr)
        return EXIT_USAGE
    if mode is OutputMode.JSON:
        _print_json(result.to_json())
    else:
        print(result.to_text())
    return EXIT_OK


def cmd_rook(cfg: Config, spec: str, mode: OutputMode = OutputMode.TEXT) -> int:
    board = parse_rook_spec(spec)
    counts, text = render_rook(board)
    if mode is OutputMode.JSON:
        _print_json(
            {
                "board": str(board),
                "counts": counts.to_json(),
                "polynomial": counts.polynomial_text(),
            }
        )
    else:
        print(text)
    return EXIT_OK


def cmd_board(cfg: Config, word_text: str) -> int:
    print(render_board(Word.parse(word_text)))
    return EXIT_OK


def cmd_mul(cfg: Config, r: int, s: int, k: int, l: int, mode: OutputMode = OutputMode.TEXT) -> int:
    if min(r, s, k, l) < 0:
        raise ValueError(f"exponents must be nonnegative, got {r} {s} {k} {l}")
    product = multiply_basis((r, s), (k, l))
    if mode is OutputMode.JSON:
        payload = product.to_json()
        payload["factors"] = [[r, s], [k, l]]
        _print_json(payload)
    else:
        print(product.to_text())
        print(render_gammas((r, s), (k, l)))
    return EXIT_OK


def cmd_bench(
    cfg: Config,
    max_len: int,
    trials: int,
    csv: bool = False,
    alternating: bool = False,
    mode: OutputMode = OutputMode.TEXT,
) -> int:
    quiet = csv or mode is OutputMode.JSON
    if alternating:
        df_report = bench.alternating_report(cfg)
        mismatches = int(df_report["match"].eq(False).sum())
    else:
        report = bench.run(cfg, max_len=max_len, trials=trials, verbose=not quiet)
        df_report = report.summary
        mismatches = report.mismatches

    if csv:
        print(df_report.to_csv(index=False), end="")
    elif mode is OutputMode.JSON:
        print(df_report.to_json(orient="records", indent=2))
    elif df_report.empty:
        print("Empty report: no trials requested.")
    else:
        print(df_report.to_string(index=False))
        note = bench.skipped_naive_note(df_report, cfg) if alternating else None
        if note:
            print(note)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_selftest(cfg: Config, max_len: int = 10, mode: OutputMode = OutputMode.TEXT) -> int:
    result = selftest.run(cfg, max_len=max_len)
    if mode is OutputMode.JSON:
        _print_json(
            {
                "passed": result.passed,
                "words_checked": result.words_checked,
                "golden_cases": result.golden_cases,
                "boards_checked": result.boards_checked,
                "first_failure": result.first_failure,
            }
        )
    else:
        print(result.summary())
    return EXIT_OK if result.passed else EXIT_MISMATCH


def run_command(args, config: Config = None) -> int:
    """Dispatch a parsed command line; returns the process exit code."""
    try:
        # Load base configuration from environment
        if config is None:
            config = load_config_from_env()

        # Override configuration with CLI arguments
        if getattr(args, "limit", None) is not None:
            config = replace(config, rewrite_limit=args.limit)
        if getattr(args, "workers", None) is not None:
            config = replace(config, bench_workers=args.workers)

        mode = OutputMode.JSON if getattr(args, "json", False) else OutputMode.TEXT

        if args.command == "normalize":
            return cmd_normalize(config, args.expr, mode)
        if args.command == "rook":
            return cmd_rook(config, args.spec, mode)
        if args.command == "board":
            return cmd_board(config, args.word)
        if args.command == "mul":
            return cmd_mul(config, args.r, args.s, args.k, args.l, mode)
        if args.command == "bench":
            return cmd_bench(
                config,
                max_len=args.max_len,
                trials=args.trials,
                csv=args.csv,
                alternating=args.alternating,
                mode=mode,
            )
        if args.command == "selftest":
            return cmd_selftest(config, max_len=args.max_len, mode=mode)
        raise ValueError(f"unknown command {args.command!r}")

    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        traceback.print_exc()
        return EXIT_MISMATCH
