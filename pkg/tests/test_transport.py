import io
import json

import pytest

from positroid.core.exceptions import TransportError
from positroid.transport.base import (
    BaseTransport,
    NullTransport,
    TransportFactory,
    TransportStatus,
)
from positroid.transport.console import ConsoleTransport
from positroid.transport.filesystem import FilesystemTransport


def test_factory_lists_registered_transports():
    available = TransportFactory.available()
    for name in ("null", "console", "filesystem"):
        assert name in available
    assert available == sorted(available)


def test_factory_creates_from_output_node():
    assert isinstance(TransportFactory.create({"type": "CONSOLE"}), ConsoleTransport)
    assert isinstance(TransportFactory.create({}), ConsoleTransport)
    assert isinstance(TransportFactory.create({"type": "null"}), NullTransport)


def test_factory_rejects_unknown_type():
    with pytest.raises(TransportError) as exc_info:
        TransportFactory.create({"type": "carrier-pigeon"})
    assert "Available" in str(exc_info.value)


def test_factory_rejects_non_transport_class():
    with pytest.raises(ValueError):
        TransportFactory.register("dict", dict)


def test_null_transport_counts_records():
    transport = NullTransport({})
    with transport:
        assert transport.is_connected
        results = transport.send_batch([{"id": 1}, {"id": 2}])

    assert not transport.is_connected
    assert [r.record_id for r in results] == ["1", "2"]
    assert transport.metrics.to_dict() == {
        "sent": 2,
        "written": 2,
        "failed": 0,
        "last_error": None,
    }
    assert "sent=2" in repr(transport)


def test_send_before_connect_fails():
    transport = NullTransport({})
    result = transport.send({"id": "early"})

    assert result.status == TransportStatus.FAILED
    assert transport.metrics.failed == 1
    assert transport.metrics.last_error == "transport is not connected"


def test_console_transport_writes_body_verbatim():
    stream = io.StringIO()
    transport = ConsoleTransport({"stream": stream})
    with transport:
        result = transport.send({"body": "line one\nline two"})
        transport.send({"body": "done\n"})

    assert result.is_success
    assert result.destination == "console"
    assert stream.getvalue() == "line one\nline two\ndone\n"


def test_console_transport_defaults_to_stdout(capsys):
    transport = ConsoleTransport({})
    with transport:
        transport.send({"n": 3, "bases": ["0x6"]})

    assert capsys.readouterr().out == '{"n":3,"bases":["0x6"]}\n'
    assert transport.metrics.written == 1


def test_filesystem_transport_writes_jsonl(tmp_path):
    transport = FilesystemTransport(
        {"path": "out/catalog.jsonl", "base_dir": str(tmp_path)}
    )
    records = [{"id": "a", "value": 1}, {"id": "b", "value": [1, 2]}]
    with transport:
        results = transport.send_batch(records)

    assert all(r.is_success for r in results)
    assert transport.path == str(tmp_path / "out" / "catalog.jsonl")
    assert results[0].destination == transport.path
    assert transport.read_records() == records
    lines = (tmp_path / "out" / "catalog.jsonl").read_text().splitlines()
    assert json.loads(lines[1]) == records[1]


def test_filesystem_transport_truncates_on_connect(tmp_path):
    config = {"path": str(tmp_path / "catalog.jsonl")}
    with FilesystemTransport(config) as first:
        first.send({"id": "old"})
    with FilesystemTransport(config) as second:
        second.send({"id": "new"})
        records_path = second.path

    assert FilesystemTransport({"path": records_path}).read_records() == [{"id": "new"}]


def test_filesystem_transport_needs_a_path():
    with pytest.raises(TransportError):
        FilesystemTransport({"type": "filesystem"})


def test_filesystem_send_rejects_unserializable_record(tmp_path):
    transport = FilesystemTransport({"path": str(tmp_path / "x.jsonl")})
    with transport:
        result = transport.send({"id": "bad", "value": object()})
        transport.send({"id": "good"})
    assert not transport.is_connected

    assert not result.is_success
    assert "bad" in result.error_message
    assert result.to_dict()["status"] == "failed"
    assert transport.read_records() == [{"id": "good"}]
    assert transport.metrics.sent == 2


def test_filesystem_without_create_dir(tmp_path):
    transport = FilesystemTransport(
        {"path": str(tmp_path / "missing" / "x.jsonl"), "create_dir": False}
    )
    with pytest.raises(TransportError):
        transport.connect()
    assert not transport.is_connected


def test_base_transport_is_abstract():
    with pytest.raises(TypeError):
        BaseTransport({})
