# positroid/transport/base.py
"""
Output transports for command payloads and catalog records.

A record is a JSON-ready dict. Transports are synchronous: every command
except ``verify`` runs on one thread, and ``verify`` only reports once.
Subclasses implement ``_open``, ``_close`` and ``_write``; the base class owns
the connection flag, the failure handling and the counters.
"""

from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Type
import logging

from positroid.core.exceptions import TransportError

logger = logging.getLogger(__name__)


class TransportStatus(str, Enum):
    WRITTEN = "written"
    FAILED = "failed"


@dataclass(frozen=True)
class TransportResult:
    """Outcome of writing one record"""

    status: TransportStatus
    record_id: str
    destination: Optional[str] = None
    error_message: Optional[str] = None

    @property
    def is_success(self) -> bool:
        return self.status is TransportStatus.WRITTEN

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["status"] = self.status.value
        return data


@dataclass
class TransportMetrics:
    written: int = 0
    failed: int = 0
    last_error: Optional[str] = None

    @property
    def sent(self) -> int:
        return self.written + self.failed

    def observe(self, result: TransportResult) -> None:
        if result.is_success:
            self.written += 1
        else:
            self.failed += 1
            self.last_error = result.error_message

    def to_dict(self) -> Dict[str, Any]:
        return {"sent": self.sent, **asdict(self)}


class BaseTransport(ABC):
    """
    Base class for record sinks.

    Usable as a context manager: ``connect`` on enter, ``disconnect`` on exit.
    A record that cannot be written yields a FAILED result instead of an
    exception; only opening the destination raises.
    """

    def __init__(self, config: Mapping[str, Any]):
        """
        Args:
            config: Transport node (``type`` plus transport-specific keys)
        """
        self.config = dict(config)
        self.metrics = TransportMetrics()
        self._connected = False

    @property
    def is_connected(self) -> bool:
        return self._connected

    @abstractmethod
    def _open(self) -> None:
        """
        Prepare the destination.

        Raises:
            TransportError: the destination cannot be opened
        """

    @abstractmethod
    def _close(self) -> None: ...

    @abstractmethod
    def _write(self, record: Dict[str, Any]) -> str:
        """Write one record and return where it went."""

    def connect(self) -> None:
        self._open()
        self._connected = True

    def disconnect(self) -> None:
        if self._connected:
            self._close()
        self._connected = False

    def send(self, record: Dict[str, Any]) -> TransportResult:
        record_id = str(record.get("id", "-"))
        if not self._connected:
            result = TransportResult(
                TransportStatus.FAILED,
                record_id,
                error_message="transport is not connected",
            )
        else:
            try:
                destination = self._write(record)
            except (TransportError, OSError, TypeError, ValueError) as e:
                logger.error(f"{type(self).__name__} dropped record {record_id}: {e}")
                result = TransportResult(
                    TransportStatus.FAILED,
                    record_id,
                    error_message=f"record {record_id}: {e}",
                )
            else:
                result = TransportResult(
                    TransportStatus.WRITTEN, record_id, destination
                )
        self.metrics.observe(result)
        return result

    def send_batch(self, records: List[Dict[str, Any]]) -> List[TransportResult]:
        logger.debug(f"{type(self).__name__}: sending {len(records)} records")
        return [self.send(record) for record in records]

    def __enter__(self) -> "BaseTransport":
        self.connect()
        return self

    def __exit__(self, *exc_info: Any) -> None:
        self.disconnect()

    def __repr__(self) -> str:
        return (
            f"<{type(self).__name__} connected={self._connected} "
            f"sent={self.metrics.sent} failed={self.metrics.failed}>"
        )


class NullTransport(BaseTransport):
    """Accepts every record and keeps nothing; used by tests and dry runs."""

    def _open(self) -> None:
        pass

    def _close(self) -> None:
        pass

    def _write(self, record: Dict[str, Any]) -> str:
        return "null"


class TransportFactory:
    """Builds transports from an ``output`` settings node."""

    _registry: Dict[str, Type[BaseTransport]] = {}

    @classmethod
    def register(cls, name: str, transport_class: type) -> None:
        """
        Raises:
            ValueError: transport_class is not a BaseTransport
        """
        is_transport = isinstance(transport_class, type) and issubclass(
            transport_class, BaseTransport
        )
        if not is_transport:
            raise ValueError(f"{transport_class!r} is not a BaseTransport subclass")
        cls._registry[name.lower()] = transport_class
        logger.debug(f"Registered transport: {name}")

    @classmethod
    def create(cls, node: Mapping[str, Any]) -> BaseTransport:
        """
        Args:
            node: Mapping with a ``type`` key; the whole node is passed on

        Raises:
            TransportError: transport type not registered
        """
        kind = str(node.get("type", "console")).lower()
        try:
            transport_class = cls._registry[kind]
        except KeyError:
            available = ", ".join(cls.available())
            raise TransportError(
                f"Unknown transport type: {kind}. Available: {available}"
            ) from None
        return transport_class(node)

    @classmethod
    def available(cls) -> List[str]:
        return sorted(cls._registry)


TransportFactory.register("null", NullTransport)
