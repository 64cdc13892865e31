import os

import pytest

from app.antiplex import fixtures as fixture_module
from app.antiplex.core.exceptions import FixtureError
from app.antiplex.fixtures import CATALOG, fixture_path, load_fixture
from tests.plex_testing_utils import plex


def test_every_catalog_entry_has_a_file():
    for name in CATALOG:
        assert os.path.isfile(fixture_path(name))


def test_unknown_fixture():
    with pytest.raises(FixtureError, match="unknown fixture"):
        fixture_path("nope")


def test_loaded_fixtures_carry_parameters(fixtures):
    example = fixtures["example_plex"]
    assert (example.params.k, example.params.t) == (2, 4)
    assert example.graph.n == 9
    assert example.expected == (plex((0, 1, 2, 3), (4, 5, 6, 7)),)
    assert example.path == fixture_path("example_plex")
    assert fixtures["color_bound"].expected == ()


def test_twohop_fixture_includes_far_vertex(fixtures):
    assert fixtures["twohop"].expected == (plex((0, 1, 2, 3, 4, 10), (6, 7, 8, 9)),)


def test_drifted_fixture_is_refused(mocker):
    mocker.patch.dict(CATALOG, {"example_plex": ("example_plex.txt", 2, 4, [])})
    with pytest.raises(FixtureError, match="drifted"):
        load_fixture("example_plex")
    assert load_fixture("example_plex", validate=False).expected == ()


def test_fixture_dir_is_inside_package():
    assert os.path.basename(fixture_module.FIXTURE_DIR) == "fixtures"
    assert os.path.dirname(fixture_module.FIXTURE_DIR) == os.path.dirname(os.path.abspath(fixture_module.__file__))
