"""
Brute-force ground truth for small signed graphs.

Nothing here shares code with the enumerators: the scan walks every vertex
subset as a bitmask and the validator re-derives every property from the
graph. Keep it that way.
"""
from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from app.antiplex.core.config import ORACLE_HARD_LIMIT
from app.antiplex.core.exceptions import OracleRefusalError
from app.antiplex.core.logger import get_logger
from app.antiplex.graph import SignedGraph
from app.antiplex.models import AntagonisticPlex, Params

logger = get_logger("oracle")


class EdgeFilter(str, Enum):
    ALL = "all"
    POSITIVE = "positive"


class Violation(str, Enum):
    """Conditions ``validate_plex`` checks, in the order it checks them."""
    OVERLAP = "sides overlap"
    POSITIVE_ACROSS = "positive edge across sides"
    NEGATIVE_INSIDE = "negative edge inside a side"
    NOT_KPLEX = "not a k-plex"
    SIDE_NOT_KPLEX = "side is not a positive k-plex"
    NOT_MAXIMAL = "not maximal"
    SIDE_TOO_SMALL = "side smaller than t"
    DIAMETER = "diameter larger than 2"


@dataclass(frozen=True)
class ValidationReport:
    violation: Optional[Violation] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.violation is None

    @property
    def message(self) -> str:
        if self.violation is None:
            return "valid"
        return f"{self.violation.value}: {self.detail}" if self.detail else self.violation.value


def is_kplex(s: AbstractSet[int], g: SignedGraph, k: int, edges: EdgeFilter = EdgeFilter.ALL) -> bool:
    """Every member has at least |s| - k neighbours inside s."""
    table = g.adj_set if edges is EdgeFilter.ALL else g.pos_set
    need = len(s) - k
    members = frozenset(s)
    return all(len(table[v] & members) >= need for v in members)


def antagonistic_bipartition(s: AbstractSet[int], g: SignedGraph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Two-colour s so positive edges join equal and negative edges different colours.

    Components are coloured in order of their smallest vertex, which always
    goes left. Returns None on an unbalanced cycle.
    """
    members = frozenset(s)
    color: Dict[int, int] = {}
    for start in sorted(members):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.pos_set[u] & members:
                if w not in color:
                    color[w] = color[u]
                    stack.append(w)
                elif color[w] != color[u]:
                    return None
            for w in g.neg_set[u] & members:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    left = frozenset(v for v, c in color.items() if c == 0)
    return left, members - left


def is_antagonistic_kplex(s: AbstractSet[int], g: SignedGraph, k: int) -> bool:
    """k-plex over all edges that splits into two positive k-plexes joined by negative edges."""
    if not is_kplex(s, g, k):
        return False
    split = antagonistic_bipartition(s, g)
    if split is None:
        return False
    left, right = split
    return is_kplex(left, g, k, EdgeFilter.POSITIVE) and is_kplex(right, g, k, EdgeFilter.POSITIVE)


def check_sides(left: AbstractSet[int], right: AbstractSet[int], g: SignedGraph, k: int) -> Optional[Violation]:
    """First structural violation of the given sides, or None."""
    left = frozenset(left)
    right = frozenset(right)
    if left & right:
        return Violation.OVERLAP
    for a, b in ((left, right), (right, left)):
        if any(g.pos_set[v] & b for v in a):
            return Violation.POSITIVE_ACROSS
    for side in (left, right):
        if any(g.neg_set[v] & side for v in side):
            return Violation.NEGATIVE_INSIDE
    if not is_kplex(left | right, g, k):
        return Violation.NOT_KPLEX
    if not (is_kplex(left, g, k, EdgeFilter.POSITIVE) and is_kplex(right, g, k, EdgeFilter.POSITIVE)):
        return Violation.SIDE_NOT_KPLEX
    return None


def _induced_nx(members: FrozenSet[int], g: SignedGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for u in members:
        for w in g.adj_set[u] & members:
            if u < w:
                graph.add_edge(u, w)
    return graph


def validate_plex(p: AntagonisticPlex, g: SignedGraph, params: Params) -> ValidationReport:
    """Check one result against g and report the first violated condition."""
    left, right = frozenset(p.left), frozenset(p.right)
    violation = check_sides(left, right, g, params.k)
    if violation is not None:
        return ValidationReport(violation, f"L={sorted(left)} R={sorted(right)}")

    members = left | right
    for v in range(g.n):
        if v not in members and is_antagonistic_kplex(members | {v}, g, params.k):
            return ValidationReport(Violation.NOT_MAXIMAL, f"vertex {v} extends it")

    if len(left) < params.t or len(right) < params.t:
        return ValidationReport(Violation.SIDE_TOO_SMALL, f"|L|={len(left)} |R|={len(right)} t={params.t}")

    graph = _induced_nx(members, g)
    if not nx.is_connected(graph) or nx.diameter(graph) > 2:
        return ValidationReport(Violation.DIAMETER)
    return ValidationReport()


# Subset scan


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> List[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _split_mask(s: int, pos: List[int], neg: List[int]) -> Optional[Tuple[int, int]]:
    color: Dict[int, int] = {}
    left = 0
    for start in _bits(s):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            if color[u] == 0:
                left |= 1 << u
            for same, mask in ((True, pos[u] & s), (False, neg[u] & s)):
                for w in _bits(mask):
                    want = color[u] if same else 1 - color[u]
                    if w not in color:
                        color[w] = want
                        stack.append(w)
                    elif color[w] != want:
                        return None
    return left, s & ~left


def _structural(s: int, k: int, adj: List[int], pos: List[int], neg: List[int]) -> bool:
    size = _popcount(s)
    members = _bits(s)
    if any(_popcount(adj[v] & s) < size - k for v in members):
        return False
    split = _split_mask(s, pos, neg)
    if split is None:
        return False
    for side in split:
        side_size = _popcount(side)
        if any(_popcount(pos[v] & side) < side_size - k for v in _bits(side)):
            return False
    return True


def enumerate_bruteforce(g: SignedGraph, params: Params, max_vertices: int = ORACLE_HARD_LIMIT) -> List[AntagonisticPlex]:
    """All qualified maximal antagonistic k-plexes of g by scanning every vertex subset.

    Raises OracleRefusalError when g has more than ``max_vertices`` (at most 20) vertices.
    """
    limit = min(max_vertices, ORACLE_HARD_LIMIT)
    if g.n > limit:
        raise OracleRefusalError(f"oracle refuses n={g.n} (limit {limit})")

    n, k, t = g.n, params.k, params.t
    pos = [sum(1 << w for w in g.pos_adj[v]) for v in range(n)]
    neg = [sum(1 << w for w in g.neg_adj[v]) for v in range(n)]
    adj = [p | q for p, q in zip(pos, neg)]

    # The property is hereditary: a subset is only worth testing if it is
    # valid without its highest vertex.
    valid = bytearray(1 << n)
    valid[0] = 1
    for s in range(1, 1 << n):
        if valid[s ^ (1 << (s.bit_length() - 1))] and _structural(s, k, adj, pos, neg):
            valid[s] = 1

    results = []
    full = (1 << n) - 1
    for s in range(1, 1 << n):
        if not valid[s]:
            continue
        left, right = _split_mask(s, pos, neg)
        if _popcount(left) < t or _popcount(right) < t:
            continue
        if any(valid[s | (1 << v)] for v in _bits(full & ~s)):
            continue
        results.append(AntagonisticPlex.canonical(_bits(left), _bits(right)))
    logger.debug(f"oracle found {len(results)} plexes on n={n} (k={k}, t={t})")
    return sorted(results)
