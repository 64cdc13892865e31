"""
Small hand-built graphs with known answers.

Each fixture is an edge list under ``fixtures/`` plus the parameters and the
expected result set. ``load_fixtures`` re-derives every expected set with the
brute-force oracle and refuses to hand out a fixture that drifted.
"""
import os
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from app.antiplex.core.exceptions import FixtureError
from app.antiplex.core.logger import get_logger
from app.antiplex.graph import SignedGraph, load_signed_edge_file
from app.antiplex.models import AntagonisticPlex, Params
from app.antiplex.oracle import enumerate_bruteforce

logger = get_logger("fixtures")

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")

Sides = Tuple[Sequence[int], Sequence[int]]

# name -> (file, k, t, expected sides)
CATALOG: Dict[str, Tuple[str, int, int, List[Sides]]] = {
    "balanced_camps": ("balanced_camps.txt", 2, 3, [((0, 1, 2), (3, 4, 5))]),
    "example_plex": ("example_plex.txt", 2, 4, [((0, 1, 2, 3), (4, 5, 6, 7))]),
    "color_bound": ("color_bound.txt", 2, 3, []),
    "onehop": ("onehop.txt", 2, 4, [((0, 1, 2, 3, 4), (6, 7, 8, 9))]),
    "twohop": ("twohop.txt", 2, 4, [((0, 1, 2, 3, 4, 10), (6, 7, 8, 9))]),
}


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: SignedGraph
    params: Params
    expected: Tuple[AntagonisticPlex, ...]

    @property
    def path(self) -> str:
        return os.path.join(FIXTURE_DIR, CATALOG[self.name][0])


def fixture_path(name: str) -> str:
    if name not in CATALOG:
        raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(sorted(CATALOG))}")
    return os.path.join(FIXTURE_DIR, CATALOG[name][0])


def load_fixture(name: str, validate: bool = True) -> Fixture:
    """Load one fixture; with ``validate`` the oracle must reproduce its expected set."""
    path = fixture_path(name)
    _, k, t, sides = CATALOG[name]
    graph, _ = load_signed_edge_file(path)
    params = Params.of(k, t)
    expected = tuple(sorted(AntagonisticPlex.canonical(a, b) for a, b in sides))
    if validate:
        found = tuple(enumerate_bruteforce(graph, params))
        if found != expected:
            raise FixtureError(f"fixture {name!r} drifted: oracle found {list(found)}, expected {list(expected)}")
    return Fixture(name=name, graph=graph, params=params, expected=expected)


def load_fixtures(validate: bool = True) -> Dict[str, Fixture]:
    """Load every fixture in the catalog."""
    fixtures = {name: load_fixture(name, validate) for name in CATALOG}
    logger.debug(f"loaded {len(fixtures)} fixtures")
    return fixtures
