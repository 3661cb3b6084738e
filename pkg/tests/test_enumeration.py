"""Tests for lattice paths, Le-fillings and positroid catalogs"""

import pytest

from conftest import matroid_of
from positroid.core.exceptions import PreconditionError
from positroid.diagram.fixtures import get_fixture
from positroid.diagram.parser import validate_le_property
from positroid.services.enumeration import (
    catalog,
    fillings,
    gen_le_diagrams,
    lattice_paths,
)

# decorated permutations of 1..n
COUNTS = {1: 2, 2: 5, 3: 16, 4: 65, 5: 326}


def test_lattice_paths_order():
    assert list(lattice_paths(2)) == ["HH", "HV", "VH", "VV"]
    assert list(lattice_paths(3, r=1)) == ["HHV", "HVH", "VHH"]
    assert len(list(lattice_paths(6))) == 64


def test_fillings_start_with_the_empty_diagram():
    assert list(fillings("VH")) == [(), ((1, 2),)]
    assert list(fillings("HV")) == [()]
    assert next(fillings("VVHH")) == ()


def test_fillings_skip_forced_boxes():
    # the 2x2 square: 16 subsets, two of which leave (2,3) empty
    # under a dot above and a dot to its left
    found = list(fillings("VVHH"))
    assert len(found) == 14
    assert ((1, 3), (2, 4)) not in found
    assert ((1, 3), (2, 3), (2, 4)) in found


def test_diagrams_of_size_two():
    found = [(d.path, d.dots) for d in gen_le_diagrams(2)]
    assert found == [
        ("HH", ()),
        ("HV", ()),
        ("VH", ()),
        ("VH", ((1, 2),)),
        ("VV", ()),
    ]


@pytest.mark.parametrize("n,expected", sorted(COUNTS.items()))
def test_diagram_counts(n, expected):
    assert sum(1 for _ in gen_le_diagrams(n)) == expected


def test_rank_restricted_counts():
    # positroid cells of the Grassmannian of 2-planes in 4-space
    assert sum(1 for _ in gen_le_diagrams(4, r=2)) == 33
    assert all(d.r == 2 for d in gen_le_diagrams(4, r=2))


def test_generated_diagrams_are_valid():
    for d in gen_le_diagrams(5):
        assert validate_le_property(d) == []
        assert d.r == d.path.count("V")


@pytest.mark.parametrize("n", [0, 65])
def test_size_out_of_range(n):
    with pytest.raises(PreconditionError):
        next(gen_le_diagrams(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_catalog_has_one_entry_per_diagram(n):
    found = catalog(n)

    assert found.diagrams_seen == COUNTS[n]
    assert len(found) == COUNTS[n]
    assert len({entry.matroid.basis_set for entry in found.entries}) == COUNTS[n]


def test_catalog_lookup():
    found = catalog(2)
    u12 = matroid_of(get_fixture("U12"))

    entry = found.lookup(u12)
    assert entry is not None
    assert entry.diagram.path == "VH"
    assert u12 in found
    assert "VH" not in found
    assert found.lookup(matroid_of(get_fixture("FIG7"))) is None


def test_catalog_entry_json():
    entry = catalog(1).entries[0]
    assert entry.to_json() == {
        "diagram": {"n": 1, "r": 0, "path": "H", "dots": []},
        "bases": ["0x0"],
    }
