"""Tests for reading and writing Le-diagrams"""

import pytest

from conftest import sample_path
from positroid.core.exceptions import DiagramError, LePropertyError
from positroid.diagram.fixtures import fixture_names, get_fixture
from positroid.diagram.parser import (
    build_diagram,
    dump_le_json,
    format_le_diagram,
    load_diagram,
    load_le_json,
    parse_le_diagram,
    validate_le_property,
)
from positroid.models.diagram import LeDiagram, LeViolation

FIG2_TEXT = """\
# comment line
7 3
hvvhvhh   # lower case is accepted
2 6
3 4
3 6
3 7
5 6
"""


def test_parse_fig2(fig2):
    d = parse_le_diagram(FIG2_TEXT)

    assert d == fig2
    assert d.n == 7
    assert d.r == 3
    assert d.path == "HVVHVHH"
    assert d.dots == ((2, 6), (3, 4), (3, 6), (3, 7), (5, 6))


def test_format_round_trip(fig5):
    text = format_le_diagram(fig5)

    assert text.splitlines()[:2] == ["8 4", "VVHVHHVH"]
    assert parse_le_diagram(text) == fig5


def test_json_round_trip(fig7):
    assert load_le_json(dump_le_json(fig7)) == fig7
    assert load_diagram(dump_le_json(fig7)) == fig7


@pytest.mark.parametrize("name", fixture_names())
def test_sample_files_match_fixtures(name):
    with open(sample_path(name.lower())) as f:
        assert load_diagram(f.read()) == get_fixture(name)


@pytest.mark.parametrize(
    "text,message",
    [
        ("7 3\n", "header line"),
        ("7\nHVVHVHH\n", "header"),
        ("7 3\nHVVHVH\n", "path length mismatch"),
        ("3 1\nVHH\n1 2\n1 x\n", "dot"),
        ("3 1\nVHH\n1 2\n1 2\n", "duplicate dot"),
        ("3 1\nVHH\n2 3\n", "not a sink"),
        ("3 1\nVHH\n1 1\n", "not a source"),
        ("3 2\nVHH\n", "vertical steps"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(DiagramError) as exc_info:
        parse_le_diagram(text)
    assert message in str(exc_info.value)


def test_le_property_violation_is_reported():
    with pytest.raises(LePropertyError) as exc_info:
        parse_le_diagram("4 2\nVVHH\n1 3\n2 4\n")

    assert "(2,3)" in str(exc_info.value)
    assert exc_info.value.violations == [LeViolation((2, 3), (1, 3), (2, 4))]


def test_validate_le_property_lists_every_violation():
    # structurally valid but breaks the Le-property in two boxes
    d = LeDiagram(
        n=5, r=2, path="VVHHH", dots=[(1, 3), (1, 4), (2, 5)]
    )
    assert validate_le_property(d) == [
        LeViolation((2, 3), (1, 3), (2, 5)),
        LeViolation((2, 4), (1, 4), (2, 5)),
    ]


def test_validate_le_property_accepts_fixtures():
    for name in fixture_names():
        assert validate_le_property(get_fixture(name)) == []


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        "[1, 2]",
        '{"n": 2, "path": "VH"}',
        '{"n": 2, "r": 1, "path": "VH", "dots": [["a", 2]]}',
    ],
)
def test_json_errors(text):
    with pytest.raises(DiagramError):
        load_le_json(text)


def test_build_diagram_checks_length():
    with pytest.raises(DiagramError):
        build_diagram(3, 1, "VH", [])


def test_unknown_fixture():
    with pytest.raises(DiagramError) as exc_info:
        get_fixture("FIG9")
    assert "Available" in str(exc_info.value)
