"""
Colour-based upper bounds for the optimized enumerator.

An independent set contributes at most k vertices to any k-plex, so greedily
colouring a candidate set and summing min(|class|, k) over the classes bounds
how far a partial plex can still grow.
"""
from dataclasses import dataclass, field
from typing import AbstractSet, Callable, Dict, FrozenSet, Iterable, List, Tuple

from app.antiplex.graph import SignedGraph
from app.antiplex.models import Side

Neighbourhood = Callable[[int], AbstractSet[int]]


@dataclass
class ColorPartition:
    """Disjoint independent classes over a coloured vertex set."""
    classes: List[List[int]] = field(default_factory=list)
    class_of: Dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    def colornum(self, k: int) -> int:
        """Sum over classes of min(|class|, k)."""
        return sum(min(len(c), k) for c in self.classes)


@dataclass(frozen=True)
class ColorBounds:
    cd_l: int
    cd_r: int
    cd_a: int

    def prunes(self, t: int) -> bool:
        """True when no qualified plex can be reached under these bounds."""
        return self.cd_l < t or self.cd_r < t or self.cd_a < 2 * t


@dataclass
class NodeColoring:
    """The three partitions of one search node and the bounds derived from them."""
    left: ColorPartition
    right: ColorPartition
    combined: ColorPartition
    bounds: ColorBounds


def greedy_color(vertices: Iterable[int], neighbors: Neighbourhood) -> ColorPartition:
    """Colour vertices in ascending id order, each into the lowest class with no neighbour.

    Only the neighbours of each vertex are inspected, so one call costs
    O(sum of degrees) rather than O(|vertices|^2).
    """
    partition = ColorPartition()
    class_of = partition.class_of
    for v in sorted(set(vertices)):
        used = {class_of[w] for w in neighbors(v) if w in class_of}
        color = 0
        while color in used:
            color += 1
        if color == len(partition.classes):
            partition.classes.append([])
        partition.classes[color].append(v)
        class_of[v] = color
    return partition


def _partitions(p_l: AbstractSet[int], p_r: AbstractSet[int], g: SignedGraph) -> Tuple[ColorPartition, ColorPartition, ColorPartition]:
    left = greedy_color(p_l, g.pos_neighbors)
    right = greedy_color(p_r, g.pos_neighbors)
    combined = greedy_color(set(p_l) | set(p_r), g.neighbors)
    return left, right, combined


def colornum_bounds(
    c_l: AbstractSet[int],
    c_r: AbstractSet[int],
    p_l: AbstractSet[int],
    p_r: AbstractSet[int],
    g: SignedGraph,
    k: int,
) -> ColorBounds:
    """cd^L, cd^R over positive edges of P_L, P_R and cd^A over all edges of P_L ∪ P_R."""
    return color_candidates(c_l, c_r, p_l, p_r, g, k).bounds


def color_candidates(
    c_l: AbstractSet[int],
    c_r: AbstractSet[int],
    p_l: AbstractSet[int],
    p_r: AbstractSet[int],
    g: SignedGraph,
    k: int,
) -> NodeColoring:
    left, right, combined = _partitions(p_l, p_r, g)
    bounds = ColorBounds(
        cd_l=left.colornum(k) + len(c_l),
        cd_r=right.colornum(k) + len(c_r),
        cd_a=combined.colornum(k) + len(c_l) + len(c_r),
    )
    return NodeColoring(left=left, right=right, combined=combined, bounds=bounds)


def _class_support(partition: ColorPartition, v: int, neighbors: FrozenSet[int], k: int) -> int:
    own = partition.class_of.get(v)
    total = 0
    for index, members in enumerate(partition.classes):
        if index == own:
            continue
        total += min(sum(1 for w in members if w in neighbors), k)
    return total


def color_degree(
    v: int,
    side: Side,
    coloring: NodeColoring,
    c_l: AbstractSet[int],
    c_r: AbstractSet[int],
    g: SignedGraph,
    k: int,
) -> Tuple[int, int]:
    """Per-vertex bounds (cd^side_v, cd^A_v) for plexes extending C with v on ``side``.

    Each bound counts at most k supporting neighbours per colour class other
    than v's own, plus the non-neighbour budget v has left, plus C.
    """
    c_side = c_l if side is Side.LEFT else c_r
    side_partition = coloring.left if side is Side.LEFT else coloring.right
    pos = g.pos_set[v]
    adj = g.adj_set[v]
    c_all = set(c_l) | set(c_r)

    cd_side = (
        _class_support(side_partition, v, pos, k)
        + (k - sum(1 for u in c_side if u not in pos))
        + len(c_side)
    )
    cd_all = (
        _class_support(coloring.combined, v, adj, k)
        + (k - sum(1 for u in c_all if u not in adj))
        + len(c_all)
    )
    return cd_side, cd_all
