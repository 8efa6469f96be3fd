"""JSON file I/O for family and report files."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ..errors import FamilyFileError, OutputFileError
from .logger import get_logger

logger = get_logger(__name__)


@dataclass
class FileManager:
    """Reads and writes the toolkit's JSON files with a size limit."""

    max_file_size_mb: int = 50

    @property
    def max_file_size_bytes(self) -> int:
        return self.max_file_size_mb * 1024 * 1024

    def read_json(self, file_path: Path) -> Any:
        """Parse a JSON file.

        Raises:
            FamilyFileError: file missing, unreadable, too large, not UTF-8
                or not valid JSON.
        """
        file_path = Path(file_path)
        if not file_path.is_file():
            raise FamilyFileError(f"file not found: {file_path}")

        file_size = file_path.stat().st_size
        if file_size > self.max_file_size_bytes:
            raise FamilyFileError(f"file too large ({file_size} bytes): {file_path}")

        try:
            data = json.loads(file_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise FamilyFileError(f"invalid JSON in {file_path}: {e}") from e
        except UnicodeDecodeError as e:
            raise FamilyFileError(f"{file_path} is not UTF-8 text: {e}") from e
        except OSError as e:
            raise FamilyFileError(f"cannot read {file_path}: {e}") from e
        logger.debug(f"Read {file_size} bytes from {file_path}")
        return data

    def write_json(self, file_path: Path, data: Any) -> Path:
        """Write ``data`` as indented JSON, creating parent directories.

        Raises:
            OutputFileError: the directory or file could not be written.
        """
        file_path = Path(file_path)
        content = json.dumps(data, indent=2, ensure_ascii=False)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            file_path.write_text(content + "\n", encoding="utf-8")
        except OSError as e:
            raise OutputFileError(f"cannot write {file_path}: {e}") from e
        logger.debug(f"Wrote {len(content)} bytes to {file_path}")
        return file_path
