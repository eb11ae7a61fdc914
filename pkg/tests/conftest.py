from pathlib import Path

import pytest

from dualnet.netfile import load_network

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

POLYHEDRA = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron",
             "rhombic_dodecahedron", "cuboctahedron"]
WHEELS = [f"wheel{n}" for n in range(4, 9)]
SMALL = ["triangle", "example_s3", "theta3", "pendant", "path3"]
ALL_FIXTURES = SMALL + POLYHEDRA + WHEELS
BRIDGED = {"pendant", "path3"}
BRIDGELESS = [n for n in ALL_FIXTURES if n not in BRIDGED]

_cache = {}


def fixture_graph(name):
    if name not in _cache:
        _cache[name] = load_network(FIXTURES / f"{name}.json")
    return _cache[name]


@pytest.fixture
def cube():
    return fixture_graph("cube")


@pytest.fixture
def triangle():
    return fixture_graph("triangle")


@pytest.fixture
def example_s3():
    return fixture_graph("example_s3")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
