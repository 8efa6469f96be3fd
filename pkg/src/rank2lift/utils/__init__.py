"""Logging, file and seeding helpers."""

from .file_ops import FileManager
from .logger import get_logger, setup_logging
from .seeding import substream

__all__ = ["get_logger", "setup_logging", "FileManager", "substream"]
