"""
Graph reduction before enumeration.

Vertex reduction (VR) peels every vertex whose signed degrees are too low to
belong to any qualified plex. Dichromatic reduction (DR) then narrows the
candidate sets of a single seed using its conflict-free ego network (one hop)
and the positive/negative support of two-hop vertices in it.
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Set, Tuple

from app.antiplex.core.logger import get_logger
from app.antiplex.graph import SignedGraph, dichromatic_ego
from app.antiplex.models import Params, ReductionReport

logger = get_logger("preprocess")


@dataclass(frozen=True)
class HopCandidates:
    """Candidate sets of one seed after one-hop and two-hop reduction."""
    l1: FrozenSet[int]
    r1: FrozenSet[int]
    l2: FrozenSet[int]
    r2: FrozenSet[int]
    ln: FrozenSet[int]
    rn: FrozenSet[int]

    @property
    def size(self) -> int:
        """|Ln| + |Rn|."""
        return len(self.ln) + len(self.rn)


def vr_thresholds(params: Params) -> Tuple[int, int, int]:
    """Minimum (d⁺, d⁻, d) a vertex of any qualified plex must have."""
    k, t = params.k, params.t
    return t - k, t - k + 1, 2 * t - k


def vertex_reduction(
    g: SignedGraph,
    params: Params,
    order: Optional[Iterable[int]] = None,
) -> Tuple[SignedGraph, ReductionReport]:
    """Peel vertices violating the signed degree thresholds until none is left.

    The reduced graph keeps the id space of ``g``; removed vertices become
    isolated. ``order`` only changes the initial scan, never the result.
    """
    min_pos, min_neg, min_total = vr_thresholds(params)
    d_pos = [len(a) for a in g.pos_adj]
    d_neg = [len(a) for a in g.neg_adj]
    removed = [False] * g.n
    queued = [False] * g.n
    queue: deque = deque()
    edge_visits = 0

    def violates(v: int) -> bool:
        return d_pos[v] < min_pos or d_neg[v] < min_neg or d_pos[v] + d_neg[v] < min_total

    for v in (range(g.n) if order is None else order):
        if not queued[v] and violates(v):
            queued[v] = True
            queue.append(v)

    while queue:
        u = queue.popleft()
        removed[u] = True
        for w in g.pos_adj[u]:
            edge_visits += 1
            if removed[w]:
                continue
            d_pos[w] -= 1
            if not queued[w] and violates(w):
                queued[w] = True
                queue.append(w)
        for w in g.neg_adj[u]:
            edge_visits += 1
            if removed[w]:
                continue
            d_neg[w] -= 1
            if not queued[w] and violates(w):
                queued[w] = True
                queue.append(w)

    survivors = frozenset(v for v in range(g.n) if not removed[v])
    report = ReductionReport(
        n=g.n,
        removed_vr=g.n - len(survivors),
        survivors=survivors,
        edge_visits=edge_visits,
    )
    logger.info(f"VR (k={params.k}, t={params.t}) removed {report.removed_vr} of {g.n} vertices")
    reduced = g if len(survivors) == g.n else g.induced(survivors)
    return reduced, report


def dichromatic_onehop(g: SignedGraph, seed: int, params: Params) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Peel the dichromatic ego of ``seed`` with thresholds t-2k (d⁺) and 2t-2k (d⁺ + d⁻).

    Degrees are measured inside the shrinking ego network.
    """
    ego = dichromatic_ego(g, seed)
    min_pos = params.t - 2 * params.k
    min_total = 2 * params.t - 2 * params.k
    if min_pos <= 0 and min_total <= 0:
        return ego.left, ego.right

    d_pos: Dict[int, int] = {u: len(ego.pos_adj[u]) for u in ego.members}
    d_neg: Dict[int, int] = {u: len(ego.neg_adj[u]) for u in ego.members}
    alive: Set[int] = set(ego.members)
    queued: Set[int] = set()
    queue: deque = deque()

    def violates(u: int) -> bool:
        return d_pos[u] < min_pos or d_pos[u] + d_neg[u] < min_total

    for u in sorted(ego.members):
        if violates(u):
            queued.add(u)
            queue.append(u)

    while queue:
        u = queue.popleft()
        alive.discard(u)
        for w in ego.pos_adj[u]:
            if w in alive:
                d_pos[w] -= 1
                if w not in queued and violates(w):
                    queued.add(w)
                    queue.append(w)
        for w in ego.neg_adj[u]:
            if w in alive:
                d_neg[w] -= 1
                if w not in queued and violates(w):
                    queued.add(w)
                    queue.append(w)

    if queued:
        logger.debug_prune(f"one-hop pruning of seed {seed} removed {sorted(queued)}")
    return ego.left & alive, ego.right & alive


def two_hop_raw(
    g: SignedGraph,
    seed: int,
    l1: FrozenSet[int],
    r1: FrozenSet[int],
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Raw two-hop friend (L₂) and foe (R₂) candidates of ``seed`` through l1/r1."""
    l2: Set[int] = set()
    r2: Set[int] = set()
    for x in l1:
        l2.update(g.pos_adj[x])
        r2.update(g.neg_adj[x])
    for x in r1:
        r2.update(g.pos_adj[x])
        l2.update(g.neg_adj[x])
    l2.discard(seed)
    r2.discard(seed)
    return frozenset(l2), frozenset(r2)


def dichromatic_twohop(
    g: SignedGraph,
    seed: int,
    l1: FrozenSet[int],
    r1: FrozenSet[int],
    params: Params,
) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Keep two-hop vertices with enough same-side (a) and total (a + b) support.

    A vertex w outside N(seed) is kept iff a >= t-2k+2 and a+b >= 2t-2k+2;
    the results are united with l1 and r1.
    """
    l2, r2 = two_hop_raw(g, seed, l1, r1)
    return _filter_twohop(g, seed, l1, r1, l2, r2, params)


def _filter_twohop(g, seed, l1, r1, l2, r2, params):
    min_a = max(params.t - 2 * params.k + 2, 0)
    min_ab = 2 * params.t - 2 * params.k + 2
    near = g.adj_set[seed]
    ln: Set[int] = set()
    rn: Set[int] = set()
    rejected = []
    for w in l2 - near:
        a = len(g.pos_set[w] & l1)
        b = len(g.neg_set[w] & r1)
        if a >= min_a and a + b >= min_ab:
            ln.add(w)
        else:
            rejected.append(w)
    for w in r2 - near:
        a = len(g.pos_set[w] & r1)
        b = len(g.neg_set[w] & l1)
        if a >= min_a and a + b >= min_ab:
            rn.add(w)
        else:
            rejected.append(w)
    if rejected:
        logger.debug_prune(f"two-hop pruning of seed {seed} rejected {sorted(set(rejected))}")
    return frozenset(ln) | l1, frozenset(rn) | r1


def dichromatic_reduction(g: SignedGraph, seed: int, params: Params) -> HopCandidates:
    """Run one-hop then two-hop reduction for ``seed`` and keep every intermediate set."""
    l1, r1 = dichromatic_onehop(g, seed, params)
    l2, r2 = two_hop_raw(g, seed, l1, r1)
    ln, rn = _filter_twohop(g, seed, l1, r1, l2, r2, params)
    return HopCandidates(l1=l1, r1=r1, l2=l2, r2=r2, ln=ln, rn=rn)
