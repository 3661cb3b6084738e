import os
import sys

import pytest

# Add positroid to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from positroid.core.config import Settings, get_settings  # noqa: E402
from positroid.diagram.fixtures import get_fixture  # noqa: E402
from positroid.diagram.graph import build_le_graph  # noqa: E402
from positroid.diagram.parser import build_diagram  # noqa: E402
from positroid.routing.paths import bases  # noqa: E402

SAMPLE_DIR = os.path.join(os.path.dirname(__file__), "..", "sample_diagrams")


def sample_path(name):
    return os.path.join(SAMPLE_DIR, f"{name}.led")


def matroid_of(diagram):
    return bases(build_le_graph(diagram))


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from default settings"""
    monkeypatch.delenv("CONFIG_FILE", raising=False)
    for key in list(os.environ):
        if key.startswith("POSITROID_"):
            monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings():
    return Settings(verify_workers=1)


@pytest.fixture
def fig2():
    return get_fixture("FIG2")


@pytest.fixture
def fig3():
    return get_fixture("FIG3")


@pytest.fixture
def fig4():
    return get_fixture("FIG4")


@pytest.fixture
def fig5():
    return get_fixture("FIG5")


@pytest.fixture
def fig7():
    return get_fixture("FIG7")


@pytest.fixture
def blocks1():
    return get_fixture("BLOCKS1")


@pytest.fixture
def blocks2():
    return get_fixture("BLOCKS2")


# connected simple rank-4 positroid on which neither sink candidate is positive
NO_CANDIDATE = (
    8,
    4,
    "VVHVHVHH",
    [(1, 3), (1, 7), (2, 3), (2, 5), (4, 5), (4, 7), (4, 8), (6, 7)],
)


@pytest.fixture
def no_candidate():
    return build_diagram(*NO_CANDIDATE)
