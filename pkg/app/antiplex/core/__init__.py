"""
Core module for antiplex.
"""
from app.antiplex.core.config import AppConfig, get_config
from app.antiplex.core.exceptions import PlexError
from app.antiplex.core.logger import configure_logging, get_logger, plex_logger

__all__ = [
    'AppConfig',
    'get_config',
    'PlexError',
    'configure_logging',
    'plex_logger',
    'get_logger',
]
