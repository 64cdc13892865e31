"""
Run orchestration: vertex reduction, per-seed roots, then the search.

Seeds are independent once the reduced graph exists, so with more than one
worker the roots are farmed out to a process pool that receives the graph
once through its initializer. Results are merged and sorted afterwards.
"""
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import IO, Dict, List, Optional, Sequence, Tuple

from app.antiplex.core.config import AppConfig, get_config
from app.antiplex.core.exceptions import EnumerationTimeoutError, ParameterError
from app.antiplex.core.logger import get_logger
from app.antiplex.enumeration import (
    CollectingSink,
    CountingSink,
    ResultSink,
    SearchNode,
    SearchOptions,
    WritingSink,
    bape_root,
    bapeutil,
    format_plex,
    rank_of,
    sape_root,
    sapeutil,
)
from app.antiplex.graph import SignedGraph, enumeration_order
from app.antiplex.models import Algorithm, AntagonisticPlex, OutputMode, Params, ReductionReport, RunStats
from app.antiplex.oracle import enumerate_bruteforce
from app.antiplex.preprocess import vertex_reduction

logger = get_logger("runner")


@dataclass
class RunOutcome:
    """Everything one run produced."""
    stats: RunStats
    report: ReductionReport
    plexes: List[AntagonisticPlex] = field(default_factory=list)

    def lines(self, labels: Optional[Sequence[int]] = None) -> List[str]:
        return sorted(format_plex(p, labels) for p in self.plexes)


def _ms(seconds: float) -> float:
    return round(seconds * 1000.0, 3)


def peak_memory_bytes() -> Optional[int]:
    """Peak resident set size of this process and its workers, if the platform reports it."""
    try:
        import resource
    except ImportError:
        return None
    scale = 1 if sys.platform == "darwin" else 1024
    own = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    children = resource.getrusage(resource.RUSAGE_CHILDREN).ru_maxrss
    peak = max(own, children) * scale
    return peak or None


def search_options(algo: Algorithm, config: AppConfig, deadline: Optional[float] = None) -> SearchOptions:
    """Engine switches for ``algo``; colour bounds only run for sape."""
    return SearchOptions(
        color_bound=algo is Algorithm.SAPE and config.search.color_bound,
        pivot=algo is not Algorithm.BAPE and config.search.pivot,
        debug_checks=config.search.debug_checks,
        deadline=deadline,
    )


def _check_deadline(deadline: Optional[float]) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise EnumerationTimeoutError("deadline exceeded while building seed roots")


# Worker pool state, set once per process by the initializer.
_worker: Dict[str, object] = {}


def _init_worker(g: SignedGraph, params: Params, algo: Algorithm, options: SearchOptions) -> None:
    _worker.update(g=g, params=params, algo=algo, options=options)


def _search(root: SearchNode, g: SignedGraph, params: Params, algo: Algorithm, sink: ResultSink, options: SearchOptions) -> int:
    if algo is Algorithm.BAPE:
        return bapeutil(root, g, params, sink, options)
    return sapeutil(root, g, params, sink, options)


def _search_in_worker(root: SearchNode) -> Tuple[List[AntagonisticPlex], int]:
    sink = CollectingSink()
    nodes = _search(root, _worker["g"], _worker["params"], _worker["algo"], sink, _worker["options"])
    return sink.results, nodes


def _make_sink(mode: OutputMode, stream: Optional[IO[str]], labels: Sequence[int]) -> ResultSink:
    if mode is OutputMode.COUNT:
        return CountingSink()
    if mode is OutputMode.STREAM:
        if stream is None:
            raise ParameterError("stream mode needs an output stream")
        return WritingSink(stream, labels)
    return CollectingSink()


def run_enumeration(
    g: SignedGraph,
    params: Params,
    algo: Algorithm = Algorithm.SAPE,
    mode: OutputMode = OutputMode.LIST,
    workers: Optional[int] = None,
    timeout: Optional[float] = None,
    stream: Optional[IO[str]] = None,
    config: Optional[AppConfig] = None,
    load_ms: Optional[float] = None,
) -> RunOutcome:
    """VR, then one root per surviving seed (with DR for sanc/sape), then the search.

    Raises EnumerationTimeoutError once ``timeout`` seconds have passed.
    """
    config = config or get_config()
    workers = workers or config.workers
    timeout = timeout if timeout is not None else config.timeout
    if workers < 1:
        raise ParameterError("workers must be at least 1")
    started = time.perf_counter()
    deadline = time.monotonic() + timeout if timeout else None
    phase_times: Dict[str, float] = {}
    if load_ms is not None:
        phase_times["load"] = load_ms

    tick = time.perf_counter()
    reduced, report = vertex_reduction(g, params)
    phase_times["vr"] = _ms(time.perf_counter() - tick)

    tick = time.perf_counter()
    order = enumeration_order(reduced, report.survivors)
    rank = rank_of(order)
    roots: List[SearchNode] = []
    per_seed: Dict[int, int] = {}
    for seed in order:
        _check_deadline(deadline)
        if algo is Algorithm.BAPE:
            roots.append(bape_root(reduced, seed, rank))
        else:
            root, hop = sape_root(reduced, seed, rank, params)
            roots.append(root)
            per_seed[seed] = hop.size
    report = report.model_copy(update={"per_seed_candidates": per_seed})
    if algo is not Algorithm.BAPE:
        phase_times["dr"] = _ms(time.perf_counter() - tick)
        tick = time.perf_counter()

    options = search_options(algo, config, deadline)
    sink = _make_sink(mode, stream, g.labels)
    nodes = 0
    if workers == 1 or len(roots) < 2:
        for root in roots:
            nodes += _search(root, reduced, params, algo, sink, options)
    else:
        logger.info(f"searching {len(roots)} seeds on {workers} workers")
        chunksize = max(1, len(roots) // (workers * 8))
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_worker,
            initargs=(reduced, params, algo, replace(options, trace=None)),
        ) as executor:
            try:
                for results, seen in executor.map(_search_in_worker, roots, chunksize=chunksize):
                    nodes += seen
                    for plex in results:
                        sink.emit(plex)
            except BaseException:
                executor.shutdown(wait=False, cancel_futures=True)
                raise
    phase_times["enumerate"] = _ms(time.perf_counter() - tick)
    phase_times["total"] = _ms(time.perf_counter() - started) + (load_ms or 0.0)

    stats = RunStats(
        algo=algo,
        k=params.k,
        t=params.t,
        n=g.n,
        m_pos=g.m_pos,
        m_neg=g.m_neg,
        vr_removed=report.removed_vr,
        dr_candidate_total=report.dr_candidate_total,
        seeds=len(order),
        results=sink.count,
        phase_times=phase_times,
        peak_memory=peak_memory_bytes(),
    )
    logger.info(f"{algo.value} k={params.k} t={params.t}: {sink.count} results, {nodes} nodes, {phase_times['total']} ms")
    plexes = sorted(sink.results) if isinstance(sink, CollectingSink) else []
    return RunOutcome(stats=stats, report=report, plexes=plexes)


def run_oracle(g: SignedGraph, params: Params, config: Optional[AppConfig] = None) -> List[AntagonisticPlex]:
    """Brute-force results under the configured vertex limit."""
    config = config or get_config()
    return enumerate_bruteforce(g, params, max_vertices=config.oracle.max_vertices)
