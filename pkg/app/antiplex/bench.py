"""
Benchmark sweeps over (dataset, sample, k, t, algo) cells.

Each cell gets one untimed warm-up run followed by ``repetitions`` timed runs.
Rows go into a pandas DataFrame that is written as CSV; a cell whose run hits
the timeout reports ``INF``.
"""
import time
from dataclasses import dataclass, field
from typing import IO, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from app.antiplex.core.config import AppConfig, get_config
from app.antiplex.core.exceptions import EnumerationTimeoutError, ParameterError
from app.antiplex.core.logger import get_logger
from app.antiplex.graph import SignedGraph
from app.antiplex.models import Algorithm, OutputMode, Params
from app.antiplex.runner import run_enumeration

logger = get_logger("bench")

BENCH_COLUMNS = ["dataset", "k", "t", "algo", "run", "elapsed_ms", "results", "vr_removed", "dr_candidate_total"]
INF = "INF"


def parse_int_range(text: str) -> List[int]:
    """Parse ``"3"``, ``"2-4"`` or ``"1,3,5"`` (parts may mix) into a sorted list of non-negative ints."""
    values = set()
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                lo, hi = part.split("-", 1)
                values.update(range(int(lo), int(hi) + 1))
            else:
                values.add(int(part))
        except ValueError as e:
            raise ParameterError(f"cannot parse integer range {text!r}") from e
    if not values:
        raise ParameterError(f"empty integer range {text!r}")
    return sorted(values)


@dataclass
class BenchPlan:
    """What to sweep."""
    ks: Sequence[int]
    ts: Sequence[int]
    algos: Sequence[Algorithm] = (Algorithm.BAPE, Algorithm.SANC, Algorithm.SAPE)
    repetitions: int = 3
    warmup: bool = True
    timeout: Optional[float] = None
    workers: int = 1
    samples: Sequence[float] = (1.0,)
    sample_seed: int = 0
    config: Optional[AppConfig] = field(default=None, repr=False)

    def cells(self) -> Iterable[Tuple[Params, Algorithm]]:
        for k in self.ks:
            for t in self.ts:
                if t < 2 * k - 1:
                    logger.warning(f"skipping k={k} t={t}: t must be at least 2k-1")
                    continue
                params = Params.of(k, t)
                for algo in self.algos:
                    yield params, algo


def _dataset_label(name: str, fraction: float) -> str:
    return name if fraction == 1.0 else f"{name}@{fraction:g}"


def _timed(g: SignedGraph, params: Params, algo: Algorithm, plan: BenchPlan, config: AppConfig):
    started = time.perf_counter()
    outcome = run_enumeration(
        g, params, algo, mode=OutputMode.COUNT, workers=plan.workers, timeout=plan.timeout, config=config
    )
    return round((time.perf_counter() - started) * 1000.0, 3), outcome.stats


def run_bench(datasets: Sequence[Tuple[str, SignedGraph]], plan: BenchPlan) -> pd.DataFrame:
    """Run every cell of ``plan`` on every dataset and sample fraction."""
    config = plan.config or get_config()
    rows = []
    for name, full in datasets:
        for fraction in plan.samples:
            g = full.sample(fraction, seed=plan.sample_seed)
            label = _dataset_label(name, fraction)
            for params, algo in plan.cells():
                rows.extend(_run_cell(label, g, params, algo, plan, config))
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)


def _run_cell(label: str, g: SignedGraph, params: Params, algo: Algorithm, plan: BenchPlan, config: AppConfig) -> List[dict]:
    base = {"dataset": label, "k": params.k, "t": params.t, "algo": algo.value}
    timed_out = False
    if plan.warmup:
        try:
            _timed(g, params, algo, plan, config)
        except EnumerationTimeoutError:
            timed_out = True
    rows = []
    for run in range(1, plan.repetitions + 1):
        if not timed_out:
            try:
                elapsed, stats = _timed(g, params, algo, plan, config)
                rows.append({
                    **base,
                    "run": run,
                    "elapsed_ms": elapsed,
                    "results": stats.results,
                    "vr_removed": stats.vr_removed,
                    "dr_candidate_total": stats.dr_candidate_total,
                })
                continue
            except EnumerationTimeoutError:
                timed_out = True
        rows.append({**base, "run": run, "elapsed_ms": INF, "results": INF, "vr_removed": "", "dr_candidate_total": ""})
    if timed_out:
        logger.warning(f"{label} k={params.k} t={params.t} {algo.value} timed out after {plan.timeout}s")
    return rows


def write_csv(frame: pd.DataFrame, stream: IO[str]) -> None:
    frame.to_csv(stream, index=False, lineterminator="\n")


def share_of_cells_faster(frame: pd.DataFrame, fast: str = "sape", slow: str = "bape") -> float:
    """Fraction of (dataset, k, t) cells whose median ``fast`` time is at most the median ``slow`` time.

    Timed-out runs count as infinitely slow.
    """
    data = frame[frame["algo"].isin([fast, slow])].copy()
    data["elapsed_ms"] = pd.to_numeric(data["elapsed_ms"].replace(INF, float("inf")))
    medians = data.groupby(["dataset", "k", "t", "algo"])["elapsed_ms"].median().unstack("algo")
    if fast not in medians.columns or slow not in medians.columns:
        return 1.0
    medians = medians.dropna(subset=[fast, slow])
    if medians.empty:
        return 1.0
    return float((medians[fast] <= medians[slow]).mean())


def vr_removed_by_t(frame: pd.DataFrame) -> pd.DataFrame:
    """One vr_removed value per (dataset, k, t), ordered by t, skipping timed-out rows."""
    data = frame[frame["vr_removed"] != ""].copy()
    data["vr_removed"] = pd.to_numeric(data["vr_removed"])
    return data.groupby(["dataset", "k", "t"], as_index=False)["vr_removed"].max().sort_values(["dataset", "k", "t"])
