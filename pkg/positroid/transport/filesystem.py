# positroid/transport/filesystem.py
"""
Filesystem transport writing records as line-delimited JSON.

The target file is ``path`` from the transport node; a relative path lands
under ``base_dir`` (default: the working directory). The file is truncated on
``connect`` so a rerun never appends to an older catalog.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, TextIO

from positroid.core.exceptions import TransportError
from positroid.transport.base import BaseTransport, TransportFactory

logger = logging.getLogger(__name__)


class FilesystemTransport(BaseTransport):
    """One JSON object per line in a local file."""

    def __init__(self, config: Mapping[str, Any]):
        """
        Args:
            config: Transport node (expects 'path'; optional 'base_dir', 'create_dir')

        Raises:
            TransportError: no path configured
        """
        super().__init__(config)
        if not self.config.get("path"):
            raise TransportError("filesystem transport needs a 'path'")
        target = Path(self.config["path"])
        if not target.is_absolute():
            target = Path(self.config.get("base_dir") or Path.cwd()) / target
        self.path = str(target)
        self.create_dir = bool(self.config.get("create_dir", True))
        self._handle: Optional[TextIO] = None

    def _open(self) -> None:
        parent = Path(self.path).parent
        try:
            if self.create_dir and not parent.exists():
                parent.mkdir(parents=True)
                logger.info(f"Created output directory: {parent}")
            self._handle = open(self.path, "w", encoding="utf-8")
        except OSError as e:
            raise TransportError(f"cannot open {self.path}: {e}") from e
        logger.info(f"Writing records to {self.path}")

    def _close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None

    def _write(self, record: Dict[str, Any]) -> str:
        if self._handle is None:
            raise TransportError("file is closed")
        line = json.dumps(record, separators=(",", ":"))
        self._handle.write(line + "\n")
        return self.path

    def read_records(self) -> List[Dict[str, Any]]:
        """Load every record back from the file."""
        with open(self.path, "r", encoding="utf-8") as f:
            return [json.loads(line) for line in f if line.strip()]


TransportFactory.register("filesystem", FilesystemTransport)
