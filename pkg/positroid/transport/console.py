# positroid/transport/console.py
import json
import sys
from typing import Any, Dict, Mapping, TextIO

from positroid.transport.base import BaseTransport, TransportFactory


class ConsoleTransport(BaseTransport):
    """
    Writes records to stdout.

    A record with a ``body`` string is written as-is; any other record is
    written as one compact JSON line.
    """

    def __init__(self, config: Mapping[str, Any]):
        super().__init__(config)
        self.stream: TextIO = self.config.get("stream") or sys.stdout

    def _open(self) -> None:
        pass

    def _close(self) -> None:
        self.stream.flush()

    def _write(self, record: Dict[str, Any]) -> str:
        body = record.get("body")
        if not isinstance(body, str):
            body = json.dumps(record, separators=(",", ":"))
        if body:
            self.stream.write(body if body.endswith("\n") else body + "\n")
        return "console"


TransportFactory.register("console", ConsoleTransport)
