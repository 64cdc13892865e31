"""
antiplex: maximal antagonistic k-plex enumeration in signed graphs.
"""
from app.antiplex.core.config import AppConfig, get_config
from app.antiplex.core.logger import get_logger
from app.antiplex.enumeration import bape, sanc, sape
from app.antiplex.graph import SignedGraph, load_signed_edge_file, load_signed_edge_list
from app.antiplex.models import Algorithm, AntagonisticPlex, Params
from app.antiplex.oracle import enumerate_bruteforce, validate_plex

__version__ = "1.0.0"

# Initialize logger
logger = get_logger()
logger.debug(f"antiplex v{__version__} loaded")

__all__ = [
    "AppConfig",
    "get_config",
    "get_logger",
    "logger",
    "SignedGraph",
    "load_signed_edge_list",
    "load_signed_edge_file",
    "Params",
    "Algorithm",
    "AntagonisticPlex",
    "bape",
    "sanc",
    "sape",
    "enumerate_bruteforce",
    "validate_plex",
]
