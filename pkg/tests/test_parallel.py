"""Graph-level loop, coloop and parallel-pair detectors against the basis-level ones"""

import pytest

from conftest import matroid_of
from positroid.diagram.fixtures import fixture_names, get_fixture
from positroid.matroid.kernel import loops_coloops, parallel_pairs
from positroid.matroid.parallel import graph_loops_coloops, graph_parallel_pairs
from positroid.models.subset import GroundSubset
from positroid.services.enumeration import gen_le_diagrams


def test_fig3_loops_and_coloops(fig3):
    loops, coloops = graph_loops_coloops(fig3)
    assert loops == GroundSubset.of(1, 4)
    assert coloops == GroundSubset.of(5)


def test_fig4_parallel_pairs(fig4):
    assert graph_parallel_pairs(fig4) == [(3, 4), (6, 7)]
    assert parallel_pairs(matroid_of(fig4)) == [(3, 4), (6, 7)]


@pytest.mark.parametrize("name", fixture_names())
def test_detectors_agree_on_fixtures(name):
    d = get_fixture(name)
    m = matroid_of(d)
    assert graph_loops_coloops(d) == loops_coloops(m)
    assert graph_parallel_pairs(d) == parallel_pairs(m)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_detectors_agree_on_every_small_diagram(n):
    for d in gen_le_diagrams(n):
        m = matroid_of(d)
        assert graph_loops_coloops(d) == loops_coloops(m), d
        assert graph_parallel_pairs(d) == parallel_pairs(m), d
