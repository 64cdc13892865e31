"""Shared helpers for the test suite: seeded instances and an independent subset scan."""
from itertools import combinations
from typing import List, Tuple

import numpy as np

from app.antiplex.generator import generate_planted, random_signed_graph
from app.antiplex.graph import SignedGraph
from app.antiplex.models import AntagonisticPlex, GenSpec, Params
from app.antiplex.oracle import antagonistic_bipartition, is_antagonistic_kplex

DENSITIES = (0.2, 0.4, 0.6)
NEG_FRACTIONS = (0.3, 0.5)


def random_instance(index: int) -> Tuple[SignedGraph, Params]:
    """Instance ``index`` of the seeded grid: n in [6, 12], three densities, two sign mixes, k in 1..3, t in {2k-1, 2k}."""
    rng = np.random.default_rng(10_000 + index)
    n = int(rng.integers(6, 13))
    density = DENSITIES[index % 3]
    neg_fraction = NEG_FRACTIONS[(index // 3) % 2]
    k = 1 + (index // 6) % 3
    t = 2 * k - 1 + (index // 18) % 2
    return random_signed_graph(n, density, neg_fraction, seed=index), Params.of(k, t)


def planted_instance(index: int) -> Tuple[SignedGraph, Params]:
    """Small graph with one noisy planted community pair, so results are rarely empty."""
    rng = np.random.default_rng(20_000 + index)
    side = int(rng.integers(3, 6))
    n = int(rng.integers(2 * side, 13))
    spec = GenSpec(n=n, planted=1, side=side, p_pos_in=0.85, p_neg_cross=0.85, p_noise=0.25, seed=index)
    k = 1 + index % 2
    t = 2 * k - 1
    return generate_planted(spec), Params.of(k, t)


def subset_scan(g: SignedGraph, params: Params) -> List[AntagonisticPlex]:
    """Second brute force: largest subsets first, maximality by superset lookup."""
    found = []
    kept = []
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            members = frozenset(combo)
            if not is_antagonistic_kplex(members, g, params.k):
                continue
            if any(members < bigger for bigger in kept):
                continue
            kept.append(members)
            left, right = antagonistic_bipartition(members, g)
            if len(left) >= params.t and len(right) >= params.t:
                found.append(AntagonisticPlex.canonical(left, right))
    return sorted(found)


def plex(left, right) -> AntagonisticPlex:
    return AntagonisticPlex.canonical(left, right)
