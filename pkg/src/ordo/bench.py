import argparse
import concurrent.futures
import math
import multiprocessing
import time
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional

import numpy as np
import pandas as pd

from .algebra import normal_order_word
from .config import Config
from .oracle import rewrite_normal_with_stats
from .rook import clear_rook_cache
from .utils import random_word
from .word_path import Word, board_of

TRIAL_COLUMNS = [
    "length",
    "word",
    "board_cells",
    "rook_ms",
    "naive_ms",
    "naive_peak_terms",
    "naive_rewrites",
    "match",
]
SUMMARY_COLUMNS = [
    "length",
    "trials",
    "board_cells_median",
    "rook_ms_median",
    "naive_ms_median",
    "naive_peak_terms_median",
    "naive_rewrites_median",
    "mismatches",
]


@dataclass
class BenchReport:
    summary: pd.DataFrame
    trials: pd.DataFrame

    @property
    def mismatches(self) -> int:
        if self.trials.empty:
            return 0
        return int((~self.trials["match"].astype(bool)).sum())


# --- WORKER FUNCTION (MUST BE TOP-LEVEL) ---
def time_trial(word_text: str, rewrite_limit: int) -> Dict[str, object]:
    """Normal-order one word by both routes and time each.

    The rook cache is cleared first so every trial pays for its own board.
    """
    word = Word.parse(word_text)
    clear_rook_cache()

    start = time.perf_counter()
    via_rooks = normal_order_word(word)
    rook_ms = (time.perf_counter() - start) * 1000.0

    start = time.perf_counter()
    via_rewriting, stats = rewrite_normal_with_stats(word, rewrite_limit)
    naive_ms = (time.perf_counter() - start) * 1000.0

    return {
        "length": len(word),
        "word": word_text,
        "board_cells": board_of(word).cell_count,
        "rook_ms": rook_ms,
        "naive_ms": naive_ms,
        "naive_peak_terms": stats.peak_terms,
        "naive_rewrites": stats.rewrites,
        "match": via_rooks == via_rewriting,
    }


def _corpus(cfg: Config, max_len: int, trials: int) -> List[str]:
    rng = np.random.default_rng(cfg.bench_seed)
    return [
        str(random_word(rng, length))
        for length in range(1, max_len + 1)
        for _ in range(trials)
    ]


def _run_trials(cfg: Config, corpus: List[str], verbose: bool) -> List[Dict[str, object]]:
    total = len(corpus)
    interval = max(1, total // 5)
    results = []

    def report(done: int) -> None:
        if verbose and (done % interval == 0 or done == total):
            print(f"Trials completed: {int(done / total * 100)}%")

    if cfg.bench_workers == 1:
        for i, text in enumerate(corpus):
            results.append(time_trial(text, cfg.rewrite_limit))
            report(i + 1)
        return results

    workers = cfg.bench_workers or None
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        # map() yields in submission order, so aggregation does not depend on scheduling
        for i, row in enumerate(
            executor.map(time_trial, corpus, [cfg.rewrite_limit] * total)
        ):
            results.append(row)
            report(i + 1)
    return results


def summarize(df_trials: pd.DataFrame) -> pd.DataFrame:
    if df_trials.empty:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)
    df_summary = (
        df_trials.groupby("length")
        .agg(
            trials=("word", "size"),
            board_cells_median=("board_cells", "median"),
            rook_ms_median=("rook_ms", "median"),
            naive_ms_median=("naive_ms", "median"),
            naive_peak_terms_median=("naive_peak_terms", "median"),
            naive_rewrites_median=("naive_rewrites", "median"),
            mismatches=("match", lambda s: int((~s.astype(bool)).sum())),
        )
        .reset_index()
    )
    return df_summary[SUMMARY_COLUMNS]


def run(cfg: Config, max_len: int = 10, trials: int = 50, verbose: bool = True) -> BenchReport:
    """Benchmark rook-route normalization against naive rewriting.

    Args:
        cfg: Engine configuration (rewrite limit, seed, worker count).
        max_len: Longest random word length; one group per length 1..max_len.
        trials: Random words per length.
        verbose: Print progress lines; off for machine-readable output.

    Returns:
        BenchReport with per-length medians and the raw, sorted trial table.

    Raises:
        ValueError: If ``max_len`` exceeds the naive rewriter's limit.
    """
    if max_len > cfg.rewrite_limit:
        raise ValueError(
            f"max_len {max_len} exceeds rewrite limit {cfg.rewrite_limit} (raise it with --limit)"
        )
    if max_len < 0 or trials < 0:
        raise ValueError("max_len and trials must be nonnegative")

    corpus = _corpus(cfg, max_len, trials)
    if not corpus:
        return BenchReport(
            summary=pd.DataFrame(columns=SUMMARY_COLUMNS),
            trials=pd.DataFrame(columns=TRIAL_COLUMNS),
        )

    if verbose:
        print("Starting ordo bench...")
        print(f"Settings: lengths 1..{max_len}, {trials} trials each, seed {cfg.bench_seed}")
        if cfg.bench_workers != 1:
            print(f"Spinning up pool with {cfg.bench_workers or multiprocessing.cpu_count()} workers...")

    start_time = time.perf_counter()
    rows = _run_trials(cfg, corpus, verbose)
    execution_time = time.perf_counter() - start_time

    df_trials = (
        pd.DataFrame(rows, columns=TRIAL_COLUMNS)
        .sort_values(["length", "word"], kind="stable")
        .reset_index(drop=True)
    )
    report = BenchReport(summary=summarize(df_trials), trials=df_trials)

    if verbose:
        print(f"Total trials: {len(df_trials)}; Total bench time: {execution_time:.2f} seconds")
        print(f"Mismatches between routes: {report.mismatches}")
    return report


def alternating_report(cfg: Config, n_values: Iterable[int] = range(8, 13)) -> pd.DataFrame:
    """Both routes on (aA)^n; the naive route is skipped past the rewrite limit.

    With the default limit of 20 that leaves n = 11, 12 rook-only; a limit of
    24 covers the whole default range.
    """
    rows = []
    for n in n_values:
        word = Word.parse("aA") * n
        clear_rook_cache()
        start = time.perf_counter()
        via_rooks = normal_order_word(word)
        rook_ms = (time.perf_counter() - start) * 1000.0

        row = {
            "n": n,
            "length": len(word),
            "board_cells": board_of(word).cell_count,
            "terms": len(via_rooks),
            "rook_ms": rook_ms,
            "naive_ms": math.nan,
            "naive_peak_terms": math.nan,
            "naive_rewrites": math.nan,
            "match": None,
        }
        if len(word) <= cfg.rewrite_limit:
            start = time.perf_counter()
            via_rewriting, stats = rewrite_normal_with_stats(word, cfg.rewrite_limit)
            row["naive_ms"] = (time.perf_counter() - start) * 1000.0
            row["naive_peak_terms"] = stats.peak_terms
            row["naive_rewrites"] = stats.rewrites
            row["match"] = via_rooks == via_rewriting
        rows.append(row)
    return pd.DataFrame(rows)


def skipped_naive_note(df_report: pd.DataFrame, cfg: Config) -> Optional[str]:
    """One-line hint naming the alternating rows whose naive route was skipped."""
    skipped = df_report[df_report["length"] > cfg.rewrite_limit]
    if skipped.empty:
        return None
    n_values = ", ".join(str(n) for n in skipped["n"])
    return (
        f"Naive route skipped for n = {n_values}: word length exceeds rewrite limit "
        f"{cfg.rewrite_limit} (rerun with --limit {int(skipped['length'].max())})."
    )


def main():
    from .config import load_config_from_env

    parser = argparse.ArgumentParser(description="ordo - rook route vs naive rewriting benchmark")
    parser.add_argument("-m", "--max-len", dest="max_len", type=int, default=10, help="Longest word length (Default: 10)")
    parser.add_argument("-t", "--trials", type=int, default=50, help="Random words per length (Default: 50)")
    parser.add_argument("-w", "--workers", type=int, default=None, help="Worker processes (0 = all cores, 1 = inline)")
    args = parser.parse_args()

    cfg = load_config_from_env()
    if args.workers is not None:
        cfg = replace(cfg, bench_workers=args.workers)

    report = run(cfg, max_len=args.max_len, trials=args.trials)
    print(report.summary.to_string(index=False))


if __name__ == "__main__":
    multiprocessing.freeze_support()
    main()
