"""
Logger module for antiplex.
"""
import logging
import os
import sys
from typing import Optional

# Define log levels
DEBUG = logging.DEBUG
INFO = logging.INFO
WARNING = logging.WARNING
ERROR = logging.ERROR
CRITICAL = logging.CRITICAL

# Custom log levels
DEBUG_SEARCH = 15
DEBUG_PRUNE = 16

# Register custom log levels
logging.addLevelName(DEBUG_SEARCH, "DEBUG_SEARCH")
logging.addLevelName(DEBUG_PRUNE, "DEBUG_PRUNE")

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

log_level_map = {
    "DEBUG": DEBUG,
    "DEBUG_SEARCH": DEBUG_SEARCH,
    "DEBUG_PRUNE": DEBUG_PRUNE,
    "INFO": INFO,
    "WARNING": WARNING,
    "ERROR": ERROR,
    "CRITICAL": CRITICAL,
}


class PlexLogger(logging.Logger):
    """Custom logger for antiplex."""

    def debug_search(self, msg, *args, **kwargs):
        """Log a message with DEBUG_SEARCH level."""
        if self.isEnabledFor(DEBUG_SEARCH):
            self._log(DEBUG_SEARCH, msg, args, **kwargs)

    def debug_prune(self, msg, *args, **kwargs):
        """Log a message with DEBUG_PRUNE level."""
        if self.isEnabledFor(DEBUG_PRUNE):
            self._log(DEBUG_PRUNE, msg, args, **kwargs)


# Create and configure the logger
logging.setLoggerClass(PlexLogger)
plex_logger = logging.getLogger("antiplex")
plex_logger.setLevel(log_level_map.get(os.environ.get("ANTIPLEX_LOG_LEVEL", "WARNING").upper(), WARNING))


def configure_logging(level: str = "WARNING", log_file: Optional[str] = None) -> PlexLogger:
    """Attach handlers to the package logger.

    Standard output carries results, so console records go to standard error.
    Calling this again replaces the previous handlers.

    Args:
        level: Name of the log level.
        log_file: Optional path of a file that receives a copy of every record.

    Returns:
        The package logger.
    """
    for handler in list(plex_logger.handlers):
        plex_logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    plex_logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        plex_logger.addHandler(file_handler)

    plex_logger.setLevel(log_level_map.get(level.upper(), WARNING))
    return plex_logger


def get_logger(name: Optional[str] = None) -> PlexLogger:
    """Get a logger instance.

    Args:
        name: The name of the logger. If None, returns the package logger.

    Returns:
        A logger instance.
    """
    if name:
        return logging.getLogger(f"antiplex.{name}")
    return plex_logger
