"""
Configuration module for antiplex.

Defaults live on the dataclasses; environment variables (optionally read from a
.env file) override them in ``AppConfig.__post_init__``.
"""
import os
from dataclasses import dataclass, field
from typing import Optional

from dotenv import load_dotenv

from app.antiplex.core.exceptions import ConfigError

ORACLE_HARD_LIMIT = 20


def _env_bool(name: str, default: bool) -> bool:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{name} must be a boolean, got {raw!r}")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e


def _env_float(name: str, default: Optional[float]) -> Optional[float]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from e


@dataclass
class SearchConfig:
    """Configuration for the set-enumeration engines."""
    color_bound: bool = True
    pivot: bool = True
    debug_checks: bool = False


@dataclass
class OracleConfig:
    """Configuration for the brute-force oracle."""
    max_vertices: int = ORACLE_HARD_LIMIT


@dataclass
class BenchConfig:
    """Configuration for benchmark sweeps."""
    repetitions: int = 3
    warmup: bool = True


@dataclass
class AppConfig:
    """Configuration for the antiplex tool."""
    env: str = "production"
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    workers: int = 1
    timeout: Optional[float] = None
    search: SearchConfig = field(default_factory=SearchConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)

    def __post_init__(self):
        """Initialize configuration from environment variables."""
        # App config
        self.env = os.environ.get("ANTIPLEX_ENV", self.env)
        self.log_level = os.environ.get("ANTIPLEX_LOG_LEVEL", self.log_level).upper()
        self.log_file = os.environ.get("ANTIPLEX_LOG_FILE", self.log_file) or None
        self.workers = _env_int("ANTIPLEX_WORKERS", self.workers)
        self.timeout = _env_float("ANTIPLEX_TIMEOUT", self.timeout)

        # Search config
        self.search.debug_checks = _env_bool("ANTIPLEX_DEBUG_CHECKS", self.search.debug_checks)

        # Oracle config
        self.oracle.max_vertices = _env_int("ANTIPLEX_ORACLE_MAX_N", self.oracle.max_vertices)

        # Bench config
        self.bench.repetitions = _env_int("ANTIPLEX_BENCH_REPS", self.bench.repetitions)

        if self.workers < 1:
            raise ConfigError("ANTIPLEX_WORKERS must be at least 1")
        if self.timeout is not None and self.timeout <= 0:
            raise ConfigError("ANTIPLEX_TIMEOUT must be positive")
        if not 0 <= self.oracle.max_vertices <= ORACLE_HARD_LIMIT:
            raise ConfigError(f"ANTIPLEX_ORACLE_MAX_N must be within [0, {ORACLE_HARD_LIMIT}]")
        if self.bench.repetitions < 1:
            raise ConfigError("ANTIPLEX_BENCH_REPS must be at least 1")


def get_config() -> AppConfig:
    """Get the application configuration."""
    load_dotenv()
    return AppConfig()
