"""
Set-enumeration engines for maximal antagonistic k-plexes.

Every search node holds six vertex sets: the growing sides C_L/C_R, the
forward candidates P_L/P_R and the already processed candidates Q_L/Q_R.
A node is emitted when no candidate of either kind can extend it and both
sides reach t.

Three engines share this state:

* ``bape``: plain branching on every candidate.
* ``sape``: vertex reduction, per-seed dichromatic reduction, early
  termination, signed pivoting and colour bounds.
* ``sanc``: ``sape`` without the colour bounds.
"""
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import IO, AbstractSet, Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from app.antiplex.colorbound import NodeColoring, color_candidates, color_degree
from app.antiplex.core.exceptions import EnumerationError, EnumerationTimeoutError
from app.antiplex.core.logger import get_logger
from app.antiplex.graph import SignedGraph, enumeration_order, two_hop_signed
from app.antiplex.models import AntagonisticPlex, Params, Side
from app.antiplex.oracle import check_sides, validate_plex
from app.antiplex.preprocess import HopCandidates, dichromatic_reduction, vertex_reduction

logger = get_logger("enumeration")

EMPTY: FrozenSet[int] = frozenset()


class Role(str, Enum):
    """Which candidate set a vertex set is refreshed as."""
    P_L = "p_l"
    Q_L = "q_l"
    P_R = "p_r"
    Q_R = "q_r"

    @property
    def side(self) -> Side:
        return Side.LEFT if self in (Role.P_L, Role.Q_L) else Side.RIGHT


@dataclass(frozen=True)
class SearchNode:
    """Six-set state of one node of the enumeration tree.

    ``parity`` selects the side whose branches run first (True: left) and is
    flipped for every child.
    """
    c_l: FrozenSet[int] = EMPTY
    c_r: FrozenSet[int] = EMPTY
    p_l: FrozenSet[int] = EMPTY
    p_r: FrozenSet[int] = EMPTY
    q_l: FrozenSet[int] = EMPTY
    q_r: FrozenSet[int] = EMPTY
    parity: bool = True
    depth: int = 0

    @property
    def members(self) -> FrozenSet[int]:
        return self.c_l | self.c_r

    def c_of(self, side: Side) -> FrozenSet[int]:
        return self.c_l if side is Side.LEFT else self.c_r

    def p_of(self, side: Side) -> FrozenSet[int]:
        return self.p_l if side is Side.LEFT else self.p_r

    def q_of(self, side: Side) -> FrozenSet[int]:
        return self.q_l if side is Side.LEFT else self.q_r

    @property
    def exhausted(self) -> bool:
        return not (self.p_l or self.p_r or self.q_l or self.q_r)

    def qualifies(self, t: int) -> bool:
        return len(self.c_l) >= t and len(self.c_r) >= t


@dataclass(frozen=True)
class PivotSets:
    """Pivot u with the candidates A (no common non-neighbour in C_L) and B (none in C_R)."""
    pivot: int
    a_side: FrozenSet[int]
    b_side: FrozenSet[int]


TraceHook = Callable[[SearchNode, Side], None]


@dataclass
class SearchOptions:
    """Switches for the optimized engine and the debugging hooks shared by all engines.

    ``deadline`` is an absolute ``time.monotonic()`` value.
    """
    color_bound: bool = True
    pivot: bool = True
    debug_checks: bool = False
    deadline: Optional[float] = None
    trace: Optional[TraceHook] = None


# Sinks


class ResultSink(ABC):
    """Consumer of emitted plexes."""

    def __init__(self):
        self.count = 0

    def emit(self, plex: AntagonisticPlex) -> None:
        self.count += 1
        self.accept(plex)

    @abstractmethod
    def accept(self, plex: AntagonisticPlex) -> None:
        pass


class CollectingSink(ResultSink):
    """Keeps every plex in memory."""

    def __init__(self):
        super().__init__()
        self.results: List[AntagonisticPlex] = []

    def accept(self, plex: AntagonisticPlex) -> None:
        self.results.append(plex)

    def lines(self, labels: Optional[Sequence[int]] = None) -> List[str]:
        """Formatted results in lexicographic line order."""
        return sorted(format_plex(p, labels) for p in self.results)


class CountingSink(ResultSink):
    """Only counts."""

    def accept(self, plex: AntagonisticPlex) -> None:
        pass


class WritingSink(ResultSink):
    """Writes each plex as a result line as soon as it is found."""

    def __init__(self, stream: IO[str], labels: Optional[Sequence[int]] = None):
        super().__init__()
        self.stream = stream
        self.labels = labels

    def accept(self, plex: AntagonisticPlex) -> None:
        self.stream.write(format_plex(plex, self.labels) + "\n")
        self.stream.flush()


def format_plex(plex: AntagonisticPlex, labels: Optional[Sequence[int]] = None) -> str:
    """Render ``L=[a,b,...] R=[c,d,...]`` with original labels."""
    def render(side: Tuple[int, ...]) -> str:
        values = side if labels is None else (labels[v] for v in side)
        return ",".join(str(v) for v in values)

    return f"L=[{render(plex.left)}] R=[{render(plex.right)}]"


# Expansion conditions


def _saturated(node: SearchNode, g: SignedGraph, k: int) -> FrozenSet[int]:
    members = node.members
    limit = len(members) - k
    return frozenset(u for u in members if len(g.adj_set[u] & members) <= limit)


def _extends(v: int, side: Side, node: SearchNode, saturated: FrozenSet[int], g: SignedGraph, k: int) -> bool:
    same = node.c_of(side)
    other = node.c_of(side.other)
    pos = g.pos_set[v]
    neg = g.neg_set[v]
    if not neg.isdisjoint(same) or not pos.isdisjoint(other):
        return False
    for u in saturated:
        if u in same:
            if u not in pos:
                return False
        elif u not in neg:
            return False
    members = len(same) + len(other)
    return len(g.adj_set[v] & same) + len(g.adj_set[v] & other) >= members + 1 - k


def can_extend(v: int, side: Side, node: SearchNode, g: SignedGraph, k: int) -> bool:
    """True iff C plus v on ``side`` is still an antagonistic k-plex."""
    return _extends(v, side, node, _saturated(node, g, k), g, k)


def update_candidates(x: AbstractSet[int], role: Role, node: SearchNode, g: SignedGraph, k: int) -> FrozenSet[int]:
    """Keep the members of ``x`` that can extend the node on the side of ``role``."""
    if not x:
        return EMPTY
    if not node.members:
        return frozenset(x)
    saturated = _saturated(node, g, k)
    return frozenset(v for v in x if _extends(v, role.side, node, saturated, g, k))


def refresh(node: SearchNode, g: SignedGraph, k: int) -> SearchNode:
    """Apply ``update_candidates`` to all four candidate sets of ``node``."""
    if not node.members:
        return node
    saturated = _saturated(node, g, k)

    def keep(x: FrozenSet[int], side: Side) -> FrozenSet[int]:
        return frozenset(v for v in x if _extends(v, side, node, saturated, g, k))

    return replace(
        node,
        p_l=keep(node.p_l, Side.LEFT),
        p_r=keep(node.p_r, Side.RIGHT),
        q_l=keep(node.q_l, Side.LEFT),
        q_r=keep(node.q_r, Side.RIGHT),
    )


def _child(node: SearchNode, side: Side, v: int, p: Dict[Side, Set[int]], q: Dict[Side, Set[int]]) -> SearchNode:
    strip = frozenset((v,))
    c_l = node.c_l | strip if side is Side.LEFT else node.c_l
    c_r = node.c_r | strip if side is Side.RIGHT else node.c_r
    return SearchNode(
        c_l=c_l,
        c_r=c_r,
        p_l=frozenset(p[Side.LEFT]) - strip,
        p_r=frozenset(p[Side.RIGHT]) - strip,
        q_l=frozenset(q[Side.LEFT]) - strip,
        q_r=frozenset(q[Side.RIGHT]) - strip,
        parity=not node.parity,
        depth=node.depth + 1,
    )


# Pivoting


def choose_pivot(node: SearchNode, side: Side, g: SignedGraph) -> Optional[int]:
    """Vertex of P ∪ Q on ``side`` covering most candidates with the right sign.

    Returns None when the pool is empty. Ties go to the smallest id.
    """
    pool = node.p_of(side) | node.q_of(side)
    if not pool:
        return None
    same = node.p_of(side)
    other = node.p_of(side.other)

    def score(u: int) -> int:
        return len(g.pos_set[u] & same) + len(g.neg_set[u] & other)

    return min(pool, key=lambda u: (-score(u), u))


def pivot_sets(
    node: SearchNode,
    side: Side,
    pivot: int,
    g: SignedGraph,
    pivot_side: Optional[Side] = None,
) -> PivotSets:
    """A and B over the candidates of ``side`` that are sign-consistent neighbours of the pivot.

    A candidate on the pivot's side must be a positive neighbour, one on the
    other side a negative neighbour.
    """
    pivot_side = side if pivot_side is None else pivot_side
    linked = g.pos_set[pivot] if side is pivot_side else g.neg_set[pivot]
    neighbors = node.p_of(side) & linked
    pivot_adj = g.adj_set[pivot]

    def covers(c: int, members: FrozenSet[int]) -> bool:
        return all(w in pivot_adj or w in g.adj_set[c] for w in members)

    return PivotSets(
        pivot=pivot,
        a_side=frozenset(c for c in neighbors if covers(c, node.c_l)),
        b_side=frozenset(c for c in neighbors if covers(c, node.c_r)),
    )


def pivot_branch_set(
    node: SearchNode,
    side: Side,
    pivot: int,
    g: SignedGraph,
    pivot_side: Optional[Side] = None,
) -> List[int]:
    """Candidates of ``side`` that must still be branched on, ascending."""
    sets = pivot_sets(node, side, pivot, g, pivot_side)
    return sorted(node.p_of(side) - (sets.a_side & sets.b_side))


# Search


@dataclass
class _Search:
    g: SignedGraph
    params: Params
    sink: ResultSink
    options: SearchOptions = field(default_factory=SearchOptions)
    nodes: int = 0

    def tick(self, node: SearchNode) -> None:
        self.nodes += 1
        deadline = self.options.deadline
        if deadline is not None and time.monotonic() > deadline:
            raise EnumerationTimeoutError(f"deadline exceeded after {self.nodes} search nodes")
        if self.options.debug_checks and node.members:
            violation = check_sides(node.c_l, node.c_r, self.g, self.params.k)
            if violation is not None:
                raise EnumerationError(f"search node is not an antagonistic k-plex ({violation.value}): {node}")

    def emit(self, node: SearchNode) -> None:
        plex = AntagonisticPlex.canonical(node.c_l, node.c_r)
        if self.options.debug_checks:
            report = validate_plex(plex, self.g, self.params)
            if not report:
                raise EnumerationError(f"emitted plex failed validation: {report.message}")
        self.sink.emit(plex)

    def trace(self, node: SearchNode, first: Side) -> None:
        if self.options.trace is not None:
            self.options.trace(node, first)


def _bapeutil(search: _Search, node: SearchNode) -> None:
    search.tick(node)
    g, k, t = search.g, search.params.k, search.params.t
    node = refresh(node, g, k)
    if node.exhausted:
        if node.qualifies(t):
            search.emit(node)
        return

    first = Side.LEFT if node.parity else Side.RIGHT
    search.trace(node, first)
    p = {side: set(node.p_of(side)) for side in Side}
    q = {side: set(node.q_of(side)) for side in Side}
    for side in (first, first.other):
        for v in sorted(node.p_of(side)):
            _bapeutil(search, _child(node, side, v, p, q))
            p[side].discard(v)
            q[side].add(v)


def _sapeutil(search: _Search, node: SearchNode) -> None:
    search.tick(node)
    g, k, t = search.g, search.params.k, search.params.t
    options = search.options
    node = refresh(node, g, k)
    if node.exhausted:
        if node.qualifies(t):
            search.emit(node)
        return
    if len(node.c_l) + len(node.p_l) < t or len(node.c_r) + len(node.p_r) < t:
        return

    coloring: Optional[NodeColoring] = None
    if options.color_bound:
        coloring = color_candidates(node.c_l, node.c_r, node.p_l, node.p_r, g, k)
        if coloring.bounds.prunes(t):
            logger.debug_prune(f"colornum bounds {coloring.bounds} prune node at depth {node.depth}")
            return

    first = Side.LEFT if node.parity else Side.RIGHT
    search.trace(node, first)
    pivot = choose_pivot(node, first, g) if options.pivot else None
    if pivot is None:
        branches = {side: sorted(node.p_of(side)) for side in Side}
    else:
        branches = {side: pivot_branch_set(node, side, pivot, g, pivot_side=first) for side in Side}

    p = {side: set(node.p_of(side)) for side in Side}
    q = {side: set(node.q_of(side)) for side in Side}
    for side in (first, first.other):
        for v in branches[side]:
            if coloring is not None:
                cd_side, cd_all = color_degree(v, side, coloring, node.c_l, node.c_r, g, k)
                if cd_side < t or cd_all < 2 * t:
                    p[side].discard(v)
                    continue
            _sapeutil(search, _child(node, side, v, p, q))
            p[side].discard(v)
            q[side].add(v)
            if len(node.c_l) + len(p[Side.LEFT]) < t or len(node.c_r) + len(p[Side.RIGHT]) < t:
                return


def bapeutil(node: SearchNode, g: SignedGraph, params: Params, sink: ResultSink, options: Optional[SearchOptions] = None) -> int:
    """Run the baseline search below ``node``; returns the number of nodes visited."""
    search = _Search(g, params, sink, options or SearchOptions())
    _bapeutil(search, node)
    return search.nodes


def sapeutil(node: SearchNode, g: SignedGraph, params: Params, sink: ResultSink, options: Optional[SearchOptions] = None) -> int:
    """Run the optimized search below ``node``; returns the number of nodes visited."""
    search = _Search(g, params, sink, options or SearchOptions())
    _sapeutil(search, node)
    return search.nodes


# Seeds


def rank_of(order: Sequence[int]) -> Dict[int, int]:
    return {v: i for i, v in enumerate(order)}


def _split(pool: AbstractSet[int], seed: int, rank: Dict[int, int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    own = rank[seed]
    later = frozenset(v for v in pool if v != seed and rank[v] > own)
    earlier = frozenset(v for v in pool if v != seed and rank[v] < own)
    return later, earlier


def bape_root(g: SignedGraph, seed: int, rank: Dict[int, int]) -> SearchNode:
    """Root node of ``seed`` with candidates drawn from its signed one- and two-hop sets."""
    two = two_hop_signed(g, seed)
    p_l, q_l = _split(g.pos_set[seed] | two.n2plus, seed, rank)
    p_r, q_r = _split(g.neg_set[seed] | two.n2minus, seed, rank)
    return SearchNode(c_l=frozenset((seed,)), p_l=p_l, p_r=p_r, q_l=q_l, q_r=q_r)


def sape_root(g: SignedGraph, seed: int, rank: Dict[int, int], params: Params) -> Tuple[SearchNode, HopCandidates]:
    """Root node of ``seed`` with candidates narrowed by dichromatic reduction."""
    hop = dichromatic_reduction(g, seed, params)
    p_l, q_l = _split(hop.ln, seed, rank)
    p_r, q_r = _split(hop.rn, seed, rank)
    node = SearchNode(c_l=frozenset((seed,)), p_l=p_l, p_r=p_r, q_l=q_l, q_r=q_r)
    return node, hop


def _collect(sink: Optional[ResultSink]) -> Tuple[ResultSink, bool]:
    if sink is None:
        return CollectingSink(), True
    return sink, False


def bape(
    g: SignedGraph,
    params: Params,
    options: Optional[SearchOptions] = None,
    sink: Optional[ResultSink] = None,
) -> List[AntagonisticPlex]:
    """Baseline enumeration over every vertex of ``g`` as seed.

    Results go to ``sink``; without one they are collected and returned sorted.
    """
    options = options or SearchOptions()
    target, collecting = _collect(sink)
    order = enumeration_order(g)
    rank = rank_of(order)
    nodes = 0
    for seed in order:
        nodes += bapeutil(bape_root(g, seed, rank), g, params, target, options)
    logger.debug_search(f"bape visited {nodes} nodes over {len(order)} seeds")
    return sorted(target.results) if collecting else []


def sape(
    g: SignedGraph,
    params: Params,
    options: Optional[SearchOptions] = None,
    sink: Optional[ResultSink] = None,
) -> List[AntagonisticPlex]:
    """Optimized enumeration: vertex reduction, dichromatic reduction per seed, then ``sapeutil``."""
    options = options or SearchOptions()
    target, collecting = _collect(sink)
    reduced, report = vertex_reduction(g, params)
    order = enumeration_order(reduced, report.survivors)
    rank = rank_of(order)
    nodes = 0
    for seed in order:
        root, _ = sape_root(reduced, seed, rank, params)
        nodes += sapeutil(root, reduced, params, target, options)
    logger.debug_search(f"sape visited {nodes} nodes over {len(order)} seeds")
    return sorted(target.results) if collecting else []


def sanc(
    g: SignedGraph,
    params: Params,
    options: Optional[SearchOptions] = None,
    sink: Optional[ResultSink] = None,
) -> List[AntagonisticPlex]:
    """``sape`` with colornum and colour-degree pruning switched off."""
    options = replace(options or SearchOptions(), color_bound=False)
    return sape(g, params, options, sink)
