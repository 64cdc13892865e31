import os

import pytest
from click.testing import CliRunner

from app.antiplex.core.config import AppConfig
from app.antiplex.fixtures import load_fixtures


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Tests never see ANTIPLEX_* settings from the developer's shell."""
    for name in list(os.environ):
        if name.startswith("ANTIPLEX_"):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


@pytest.fixture
def example_plex(fixtures):
    return fixtures["example_plex"]


@pytest.fixture
def config():
    return AppConfig()


@pytest.fixture
def debug_config():
    config = AppConfig()
    config.search.debug_checks = True
    return config


@pytest.fixture
def app():
    from app import create_app

    return create_app({"TESTING": True})


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def cli_runner():
    # click < 8.2 mixes stderr into output unless asked not to
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()
