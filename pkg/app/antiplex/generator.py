"""
Seeded synthetic signed graphs.

``generate_planted`` plants antagonistic community pairs (dense positive
edges inside each side, dense negative edges across) in a sparse signed
background. ``random_signed_graph`` draws an unstructured G(n, p) graph with
random signs; the test suite uses it against the oracle.
"""
from typing import IO, List, Tuple

import numpy as np

from app.antiplex.core.logger import get_logger
from app.antiplex.graph import SignedGraph
from app.antiplex.models import GenSpec

logger = get_logger("generator")


def _upper_pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, k=1)


def generate_planted(spec: GenSpec) -> SignedGraph:
    """Build the graph described by ``spec``; identical specs give identical graphs.

    Community i occupies ids ``[2is, 2is+s)`` (left) and ``[2is+s, 2(i+1)s)``
    (right) for side size s. Every remaining pair gets a noise edge with
    probability ``p_noise`` and a fair random sign.
    """
    rng = np.random.default_rng(spec.seed)
    n, s = spec.n, spec.side
    block = np.full(n, -1, dtype=np.int64)
    side_of = np.zeros(n, dtype=np.int64)
    for i in range(spec.planted):
        start = 2 * i * s
        block[start:start + 2 * s] = i
        side_of[start + s:start + 2 * s] = 1

    us, vs = _upper_pairs(n)
    draw = rng.random(len(us))
    signs = rng.random(len(us))

    same_block = (block[us] >= 0) & (block[us] == block[vs])
    same_side = side_of[us] == side_of[vs]
    planted_pos = same_block & same_side & (draw < spec.p_pos_in)
    planted_neg = same_block & ~same_side & (draw < spec.p_neg_cross)
    noise = ~same_block & (draw < spec.p_noise)
    noise_pos = noise & (signs < 0.5)
    noise_neg = noise & ~(signs < 0.5)

    pos_mask = planted_pos | noise_pos
    neg_mask = planted_neg | noise_neg
    pos_edges = list(zip(us[pos_mask].tolist(), vs[pos_mask].tolist()))
    neg_edges = list(zip(us[neg_mask].tolist(), vs[neg_mask].tolist()))
    graph = SignedGraph.from_edges(n, pos_edges, neg_edges)
    logger.info(f"generated n={n} m+={graph.m_pos} m-={graph.m_neg} with {spec.planted} planted pairs")
    return graph


def random_signed_graph(n: int, density: float, neg_fraction: float, seed: int) -> SignedGraph:
    """G(n, density) with each edge negative with probability ``neg_fraction``."""
    rng = np.random.default_rng(seed)
    us, vs = _upper_pairs(n)
    present = rng.random(len(us)) < density
    negative = rng.random(len(us)) < neg_fraction
    pos_mask = present & ~negative
    neg_mask = present & negative
    return SignedGraph.from_edges(
        n,
        list(zip(us[pos_mask].tolist(), vs[pos_mask].tolist())),
        list(zip(us[neg_mask].tolist(), vs[neg_mask].tolist())),
    )


def edge_lines(g: SignedGraph) -> List[str]:
    """``u v 1`` / ``u v -1`` lines in original labels, ordered by (u, v)."""
    return [f"{g.labels[u]} {g.labels[v]} {sign}" for u, v, sign in sorted(g.edges())]


def write_edge_list(g: SignedGraph, stream: IO[str]) -> int:
    """Write g as a signed edge list; returns the number of edges written."""
    lines = edge_lines(g)
    for line in lines:
        stream.write(line + "\n")
    return len(lines)
