# positroid/diagram/fixtures.py
"""Named diagrams used throughout the tests and shipped as ``sample_diagrams/*.led``."""

from typing import Dict, List, Tuple

from positroid.core.exceptions import DiagramError
from positroid.diagram.parser import build_diagram
from positroid.models.diagram import LeDiagram

_FIXTURES: Dict[str, Tuple[str, List[Tuple[int, int]]]] = {
    "FIG2": ("HVVHVHH", [(2, 6), (3, 4), (3, 6), (3, 7), (5, 6)]),
    "FIG3": ("HVVHVHH", [(2, 6), (2, 7), (3, 6), (3, 7)]),
    "FIG4": ("HVVHVHH", [(2, 6), (3, 4), (5, 6), (5, 7)]),
    "FIG5": (
        "VVHVHHVH",
        [(1, 3), (2, 3), (1, 8), (2, 5), (2, 6), (4, 5), (4, 6), (7, 8)],
    ),
    "FIG7": ("VVHVHVH", [(1, 3), (2, 3), (1, 5), (4, 5), (1, 7), (6, 7)]),
    "BLOCKS1": (
        "VVHVVHHVH",
        [(1, 3), (2, 3), (2, 9), (4, 6), (4, 7), (5, 6), (5, 7), (8, 9)],
    ),
    "BLOCKS2": (
        "VHVVHVHVH",
        [(1, 2), (1, 9), (3, 5), (4, 5), (4, 7), (6, 7), (8, 9)],
    ),
    "POSSIBILITY1": (
        "VVVHHHH",
        [(2, 4), (3, 4), (2, 5), (3, 5), (3, 6), (1, 6), (3, 7), (1, 7)],
    ),
    "POSSIBILITY2": (
        "VVVHHHH",
        [(2, 4), (3, 4), (2, 5), (3, 5), (1, 6), (2, 6), (1, 7), (2, 7)],
    ),
    "POSSIBILITY3": (
        "VVVHHH",
        [(2, 4), (3, 4), (2, 5), (3, 5), (1, 6), (2, 6), (3, 6)],
    ),
    "U12": ("VH", [(1, 2)]),
}


def fixture_names() -> List[str]:
    return sorted(_FIXTURES)


def get_fixture(name: str) -> LeDiagram:
    try:
        path, dots = _FIXTURES[name.upper()]
    except KeyError:
        raise DiagramError(
            f"Unknown fixture: {name}. Available: {', '.join(fixture_names())}"
        )
    return build_diagram(len(path), path.count("V"), path, dots)
