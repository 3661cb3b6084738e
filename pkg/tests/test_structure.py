"""Tests for levels, isolated blocks and direct-sum decomposition"""

import pytest

from conftest import matroid_of
from positroid.core.exceptions import PreconditionError
from positroid.diagram.parser import build_diagram
from positroid.models.subset import GroundSubset
from positroid.structure.blocks import (
    decompose,
    decompose_components,
    has_spanning_circuit,
    is_connected,
    is_connected_by_circuits,
    isolated_blocks,
    leading_sources,
    levels,
    restrict_diagram,
)


def block_labels(report):
    return [block.labels() for block in report.blocks]


def test_levels_and_leading_sources(fig2, fig7):
    assert [level.to_json() for level in levels(fig7)] == [[1, 2, 3], [4, 5], [6, 7]]
    assert leading_sources(fig7) == GroundSubset()

    assert [level.to_json() for level in levels(fig2)] == [[2, 3, 4], [5, 6, 7]]
    assert leading_sources(fig2) == GroundSubset.of(1)


def test_levels_of_all_sources_path():
    d = build_diagram(3, 0, "HHH", [])
    assert levels(d) == []
    assert leading_sources(d) == GroundSubset.full(3)


def test_isolated_blocks_blocks1(blocks1):
    report = isolated_blocks(blocks1)

    assert block_labels(report) == [[1, 2, 3, 8, 9], [4, 5, 6, 7]]
    assert report.block_levels == ((0, 2), (1,))
    assert not report.connected
    assert report.to_json() == {
        "blocks": [[1, 2, 3, 8, 9], [4, 5, 6, 7]],
        "connected": False,
    }


def test_isolated_blocks_blocks2(blocks2):
    assert block_labels(isolated_blocks(blocks2)) == [[1, 2, 8, 9], [3, 4, 5, 6, 7]]


def test_loops_and_coloops_are_singleton_blocks(fig3):
    assert block_labels(isolated_blocks(fig3)) == [[1], [2, 3, 6, 7], [4], [5]]


def test_connected_fixtures(fig5, fig7):
    for d in (fig5, fig7):
        assert isolated_blocks(d).connected
        m = matroid_of(d)
        assert is_connected(m)
        assert is_connected_by_circuits(m)


def test_disconnected_fixtures(blocks1, fig3):
    for d in (blocks1, fig3):
        m = matroid_of(d)
        assert not is_connected(m)
        assert not is_connected_by_circuits(m)


def test_spanning_circuit(fig7):
    assert not has_spanning_circuit(matroid_of(fig7))
    # U(2,4): every 3-set is a circuit
    u24 = build_diagram(4, 2, "VVHH", [(1, 3), (1, 4), (2, 3), (2, 4)])
    assert has_spanning_circuit(matroid_of(u24))


def test_restrict_diagram(blocks1):
    first = restrict_diagram(blocks1, GroundSubset.of(1, 2, 3, 8, 9))
    assert first.path == "VVHVH"
    assert first.dots == ((1, 3), (2, 3), (2, 5), (4, 5))

    second = restrict_diagram(blocks1, GroundSubset.of(4, 5, 6, 7))
    assert second.path == "VVHH"
    assert second.dots == ((1, 3), (1, 4), (2, 3), (2, 4))


def test_restrict_diagram_preconditions(fig7):
    with pytest.raises(PreconditionError):
        restrict_diagram(fig7, GroundSubset())
    with pytest.raises(PreconditionError):
        restrict_diagram(fig7, GroundSubset.of(1, 8))


def test_decompose_components(blocks1):
    m = matroid_of(blocks1)
    parts = decompose_components(m, blocks1)

    assert [part.labels.labels() for part in parts] == [[1, 2, 3, 8, 9], [4, 5, 6, 7]]
    assert [part.diagram.path for part in parts] == ["VVHVH", "VVHH"]
    assert parts[1].matroid.num_bases == 6
    assert parts[0].matroid.num_bases * parts[1].matroid.num_bases == m.num_bases
    for part in parts:
        assert matroid_of(part.diagram) == part.matroid

    assert decompose(m, blocks1) == [part.matroid for part in parts]


def test_decompose_connected_is_identity(fig7):
    m = matroid_of(fig7)
    assert decompose(m, fig7) == [m]


def test_decompose_rejects_foreign_diagram(blocks1, blocks2):
    with pytest.raises(PreconditionError):
        decompose_components(matroid_of(blocks2), blocks1)
