"""
Signed graph representation and neighbourhood queries.

Vertices are dense integer ids ``0..n-1`` assigned in ascending order of the
original integer labels. Adjacency is split by sign; every list is sorted and
duplicate free, and each list has a frozenset twin for O(1) membership tests.
"""
import io
import os
from dataclasses import dataclass, field
from typing import BinaryIO, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, TextIO, Tuple, Union

import networkx as nx
import numpy as np

from app.antiplex.core.exceptions import GraphError, GraphParseError
from app.antiplex.core.logger import get_logger
from app.antiplex.models import LoadReport

logger = get_logger("graph")

POSITIVE_TOKENS = frozenset({"+", "1"})
NEGATIVE_TOKENS = frozenset({"-", "-1"})

Source = Union[str, bytes, BinaryIO, TextIO]


@dataclass(frozen=True)
class SignedGraph:
    """Immutable undirected signed graph with sign-partitioned adjacency."""
    n: int
    pos_adj: Tuple[Tuple[int, ...], ...]
    neg_adj: Tuple[Tuple[int, ...], ...]
    labels: Tuple[int, ...]
    pos_set: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    neg_set: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    adj_set: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.pos_adj) != self.n or len(self.neg_adj) != self.n or len(self.labels) != self.n:
            raise GraphError("adjacency and label tables must have exactly n entries")
        pos_set = tuple(frozenset(a) for a in self.pos_adj)
        neg_set = tuple(frozenset(a) for a in self.neg_adj)
        object.__setattr__(self, "pos_set", pos_set)
        object.__setattr__(self, "neg_set", neg_set)
        object.__setattr__(self, "adj_set", tuple(p | q for p, q in zip(pos_set, neg_set)))

    @classmethod
    def from_edges(
        cls,
        n: int,
        pos_edges: Iterable[Tuple[int, int]] = (),
        neg_edges: Iterable[Tuple[int, int]] = (),
        labels: Optional[Sequence[int]] = None,
    ) -> "SignedGraph":
        """Build a graph from clean edge lists over dense ids.

        Raises GraphError on self-loops, out-of-range ids or a pair carrying both signs.
        """
        pos: List[Set[int]] = [set() for _ in range(n)]
        neg: List[Set[int]] = [set() for _ in range(n)]
        for adj, edges in ((pos, pos_edges), (neg, neg_edges)):
            for u, v in edges:
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
                if u == v:
                    raise GraphError(f"self-loop on {u}")
                adj[u].add(v)
                adj[v].add(u)
        for v in range(n):
            clash = pos[v] & neg[v]
            if clash:
                raise GraphError(f"pair ({v}, {min(clash)}) carries both signs")
        return cls(
            n=n,
            pos_adj=tuple(tuple(sorted(a)) for a in pos),
            neg_adj=tuple(tuple(sorted(a)) for a in neg),
            labels=tuple(labels) if labels is not None else tuple(range(n)),
        )

    # Degrees

    def degree_pos(self, v: int) -> int:
        return len(self.pos_adj[v])

    def degree_neg(self, v: int) -> int:
        return len(self.neg_adj[v])

    def degree(self, v: int) -> int:
        return len(self.pos_adj[v]) + len(self.neg_adj[v])

    @property
    def max_degree(self) -> int:
        """Δ, the maximum total degree."""
        return max((self.degree(v) for v in range(self.n)), default=0)

    @property
    def m_pos(self) -> int:
        return sum(len(a) for a in self.pos_adj) // 2

    @property
    def m_neg(self) -> int:
        return sum(len(a) for a in self.neg_adj) // 2

    @property
    def m(self) -> int:
        return self.m_pos + self.m_neg

    # Adjacency

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adj_set[v]

    def pos_neighbors(self, v: int) -> FrozenSet[int]:
        return self.pos_set[v]

    def is_pos(self, u: int, v: int) -> bool:
        return v in self.pos_set[u]

    def is_neg(self, u: int, v: int) -> bool:
        return v in self.neg_set[u]

    def is_adjacent(self, u: int, v: int) -> bool:
        return v in self.adj_set[u]

    def edges(self) -> Iterator[Tuple[int, int, int]]:
        """Yield each edge once as ``(u, v, sign)`` with ``u < v``."""
        for u in range(self.n):
            for v in self.pos_adj[u]:
                if u < v:
                    yield u, v, 1
            for v in self.neg_adj[u]:
                if u < v:
                    yield u, v, -1

    # Derived graphs

    def induced(self, vertices: Iterable[int]) -> "SignedGraph":
        """Restrict edges to ``vertices``; ids and labels are unchanged."""
        keep = frozenset(vertices)
        pos = tuple(tuple(w for w in self.pos_adj[v] if w in keep) if v in keep else () for v in range(self.n))
        neg = tuple(tuple(w for w in self.neg_adj[v] if w in keep) if v in keep else () for v in range(self.n))
        return SignedGraph(n=self.n, pos_adj=pos, neg_adj=neg, labels=self.labels)

    def sample(self, fraction: float, seed: int = 0) -> "SignedGraph":
        """Induced subgraph on a uniform random ``fraction`` of the vertices."""
        if not 0.0 < fraction <= 1.0:
            raise GraphError(f"sample fraction must be in (0, 1], got {fraction}")
        if fraction == 1.0:
            return self
        rng = np.random.default_rng(seed)
        size = int(round(fraction * self.n))
        chosen = rng.choice(self.n, size=size, replace=False) if size else []
        return self.induced(int(v) for v in chosen)

    def to_networkx(self) -> nx.Graph:
        """Unsigned view with a ``sign`` edge attribute (+1 / -1)."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v, sign in self.edges():
            graph.add_edge(u, v, sign=sign)
        return graph


@dataclass(frozen=True)
class TwoHopSets:
    """Signed two-hop neighbourhoods N²⁺ and N²⁻ of a vertex."""
    n2plus: FrozenSet[int]
    n2minus: FrozenSet[int]


@dataclass(frozen=True)
class DichromaticEgo:
    """Ego network of ``center`` with conflicting edges removed."""
    center: int
    left: FrozenSet[int]
    right: FrozenSet[int]
    pos_adj: Dict[int, FrozenSet[int]]
    neg_adj: Dict[int, FrozenSet[int]]

    @property
    def members(self) -> FrozenSet[int]:
        return self.left | self.right


def _decode(raw: bytes, line_number: int) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise GraphParseError(f"invalid UTF-8 at byte {e.start}", line_number) from e


def _iter_lines(source: Source) -> Iterator[str]:
    """Yield text lines, decoding byte input one line at a time."""
    if isinstance(source, str):
        yield from io.StringIO(source)
        return
    if isinstance(source, io.TextIOBase):
        line_number = 0
        try:
            for line in source:
                line_number += 1
                yield line
        except UnicodeDecodeError as e:
            raise GraphParseError("invalid UTF-8", line_number + 1) from e
        return
    if isinstance(source, bytes):
        source = io.BytesIO(source)
    for line_number, raw in enumerate(source, start=1):
        yield _decode(raw, line_number)


def _parse_sign(token: str, line_number: int) -> int:
    if token in POSITIVE_TOKENS:
        return 1
    if token in NEGATIVE_TOKENS:
        return -1
    raise GraphParseError(f"unknown sign {token!r} (expected one of 1, -1, +, -)", line_number)


def load_signed_edge_list(source: Source) -> Tuple[SignedGraph, LoadReport]:
    """Parse ``u v s`` lines into a SignedGraph.

    Exact duplicates are collapsed, pairs seen with both signs are dropped,
    self-loops are dropped; every label that appears becomes a vertex. The
    counts are returned in the LoadReport.
    """
    report = LoadReport()
    signs: Dict[Tuple[int, int], Set[int]] = {}
    label_set: Set[int] = set()

    for line_number, raw in enumerate(_iter_lines(source), start=1):
        report.lines += 1
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            report.comments += 1
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise GraphParseError(f"expected 3 tokens 'u v sign', got {len(tokens)}", line_number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as e:
            raise GraphParseError(f"vertex ids must be integers: {line!r}", line_number) from e
        sign = _parse_sign(tokens[2], line_number)
        report.edges_read += 1
        label_set.update((u, v))
        if u == v:
            report.self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        seen = signs.setdefault(key, set())
        if sign in seen:
            report.duplicates += 1
        seen.add(sign)

    labels = sorted(label_set)
    dense = {label: i for i, label in enumerate(labels)}
    pos_edges: List[Tuple[int, int]] = []
    neg_edges: List[Tuple[int, int]] = []
    for (u, v), seen in signs.items():
        if len(seen) > 1:
            report.conflicts += 1
            continue
        edge = (dense[u], dense[v])
        (pos_edges if 1 in seen else neg_edges).append(edge)

    graph = SignedGraph.from_edges(len(labels), pos_edges, neg_edges, labels)
    if report.duplicates or report.conflicts or report.self_loops:
        logger.info(
            f"Loaded n={graph.n} m+={graph.m_pos} m-={graph.m_neg}; dropped "
            f"{report.duplicates} duplicates, {report.conflicts} conflicting pairs, "
            f"{report.self_loops} self-loops"
        )
    return graph, report


def load_signed_edge_file(path: Union[str, os.PathLike]) -> Tuple[SignedGraph, LoadReport]:
    """Load a signed edge list from a file path."""
    with open(path, "rb") as f:
        return load_signed_edge_list(f)


def two_hop_signed(g: SignedGraph, v: int) -> TwoHopSets:
    """N²⁺(v) = N⁺⁺ ∪ N⁻⁻ and N²⁻(v) = N⁻⁺ ∪ N⁺⁻, without v itself.

    One-hop neighbours are not excluded; callers union or filter as needed.
    """
    n2plus: Set[int] = set()
    n2minus: Set[int] = set()
    for w in g.pos_adj[v]:
        n2plus.update(g.pos_adj[w])
        n2minus.update(g.neg_adj[w])
    for w in g.neg_adj[v]:
        n2plus.update(g.neg_adj[w])
        n2minus.update(g.pos_adj[w])
    n2plus.discard(v)
    n2minus.discard(v)
    return TwoHopSets(n2plus=frozenset(n2plus), n2minus=frozenset(n2minus))


def dichromatic_ego(g: SignedGraph, v: int) -> DichromaticEgo:
    """Ego network of v keeping only positive edges within a side and negative edges across."""
    left = g.pos_set[v]
    right = g.neg_set[v]
    pos_adj: Dict[int, FrozenSet[int]] = {}
    neg_adj: Dict[int, FrozenSet[int]] = {}
    for u in left:
        pos_adj[u] = g.pos_set[u] & left
        neg_adj[u] = g.neg_set[u] & right
    for u in right:
        pos_adj[u] = g.pos_set[u] & right
        neg_adj[u] = g.neg_set[u] & left
    return DichromaticEgo(center=v, left=left, right=right, pos_adj=pos_adj, neg_adj=neg_adj)


def enumeration_order(g: SignedGraph, vertices: Optional[Iterable[int]] = None) -> List[int]:
    """Vertices by ascending min(d⁺, d⁻), ties by id."""
    pool = range(g.n) if vertices is None else vertices
    return sorted(pool, key=lambda v: (min(len(g.pos_adj[v]), len(g.neg_adj[v])), v))
