import logging

import pytest

from app.antiplex.core.config import ORACLE_HARD_LIMIT, AppConfig, get_config
from app.antiplex.core.exceptions import ConfigError, GraphParseError, PlexError
from app.antiplex.core.logger import DEBUG_PRUNE, DEBUG_SEARCH, PlexLogger, configure_logging, get_logger


def test_defaults():
    config = AppConfig()
    assert config.log_level == "WARNING"
    assert config.workers == 1
    assert config.timeout is None
    assert config.search.color_bound and config.search.pivot
    assert not config.search.debug_checks
    assert config.oracle.max_vertices == ORACLE_HARD_LIMIT
    assert config.bench.repetitions == 3


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("ANTIPLEX_LOG_LEVEL", "debug")
    monkeypatch.setenv("ANTIPLEX_WORKERS", "4")
    monkeypatch.setenv("ANTIPLEX_TIMEOUT", "2.5")
    monkeypatch.setenv("ANTIPLEX_DEBUG_CHECKS", "yes")
    monkeypatch.setenv("ANTIPLEX_ORACLE_MAX_N", "12")
    monkeypatch.setenv("ANTIPLEX_BENCH_REPS", "5")
    config = get_config()
    assert config.log_level == "DEBUG"
    assert config.workers == 4
    assert config.timeout == 2.5
    assert config.search.debug_checks is True
    assert config.oracle.max_vertices == 12
    assert config.bench.repetitions == 5


@pytest.mark.parametrize(
    "name, value",
    [
        ("ANTIPLEX_WORKERS", "many"),
        ("ANTIPLEX_WORKERS", "0"),
        ("ANTIPLEX_TIMEOUT", "-1"),
        ("ANTIPLEX_DEBUG_CHECKS", "maybe"),
        ("ANTIPLEX_ORACLE_MAX_N", "21"),
        ("ANTIPLEX_BENCH_REPS", "0"),
    ],
)
def test_invalid_environment(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        AppConfig()


def test_config_error_is_plex_error():
    assert issubclass(ConfigError, PlexError)


def test_parse_error_carries_line_number():
    err = GraphParseError("bad sign", 7)
    assert err.line_number == 7
    assert str(err) == "line 7: bad sign"


def test_child_loggers_use_custom_class():
    logger = get_logger("tests")
    assert isinstance(logger, PlexLogger)
    assert logger.name == "antiplex.tests"


def test_custom_levels_reach_handlers(caplog):
    configure_logging("DEBUG_SEARCH")
    logger = get_logger("tests")
    with caplog.at_level(DEBUG_SEARCH, logger="antiplex"):
        logger.debug_search("searching")
        logger.debug_prune("pruning")
        logger.debug("hidden")
    levels = [r.levelno for r in caplog.records if r.name == "antiplex.tests"]
    assert levels == [DEBUG_SEARCH, DEBUG_PRUNE]
    configure_logging("WARNING")


def test_configure_logging_replaces_handlers(tmp_path):
    log_file = tmp_path / "logs" / "antiplex.log"
    logger = configure_logging("INFO", str(log_file))
    assert len(logger.handlers) == 2
    get_logger("tests").info("to file")
    for handler in logger.handlers:
        handler.flush()
    assert "to file" in log_file.read_text()

    logger = configure_logging("WARNING")
    assert len(logger.handlers) == 1
    assert logger.level == logging.WARNING
