import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualnet.errors import (
    BadRotation,
    Disconnected,
    GraphError,
    LoopEdge,
    NonPositiveResistance,
    NotPlanarEmbedding,
)
from dualnet.generators import random_plane_graph
from dualnet.graph import Dart, bridges, build_graph, contract, faces
from dualnet.oracle import enumerate_spanning_trees

from .conftest import ALL_FIXTURES, fixture_graph

TRI_ROT = {"1": ["a:t", "c:h"], "2": ["b:t", "a:h"], "3": ["c:t", "b:h"]}
TRI_EDGES = [("a", "1", "2", 1), ("b", "2", "3", 1), ("c", "3", "1", 1)]


def test_triangle_builds():
    g = build_graph(["1", "2", "3"], TRI_EDGES, TRI_ROT)
    assert g.n_vertices == 3 and g.n_edges == 3
    fs = faces(g)
    assert len(fs) == 2
    assert fs.lengths() == [3, 3]


def test_cube_faces(cube):
    assert cube.n_vertices == 8 and cube.n_edges == 12
    assert faces(cube).lengths() == [4] * 6


def test_theta_faces():
    g = fixture_graph("theta3")
    assert faces(g).lengths() == [2, 2, 2]


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        build_graph(["a", "b"], [("x", "a", "a", 1), ("y", "a", "b", 1)],
                    {"a": ["x:t", "x:h", "y:t"], "b": ["y:h"]})


@pytest.mark.parametrize("r", [0, -1, "0", "-1/2"])
def test_nonpositive_resistance(r):
    edges = [("a", "1", "2", r), ("b", "2", "3", 1), ("c", "3", "1", 1)]
    with pytest.raises(NonPositiveResistance):
        build_graph(["1", "2", "3"], edges, TRI_ROT)


def test_float_resistance_rejected():
    edges = [("a", "1", "2", 0.5), ("b", "2", "3", 1), ("c", "3", "1", 1)]
    with pytest.raises(GraphError):
        build_graph(["1", "2", "3"], edges, TRI_ROT)


def test_disconnected():
    edges = [("a", "1", "2", 1), ("b", "3", "4", 1)]
    rot = {"1": ["a:t"], "2": ["a:h"], "3": ["b:t"], "4": ["b:h"]}
    with pytest.raises(Disconnected):
        build_graph(["1", "2", "3", "4"], edges, rot)


def test_single_vertex_rejected():
    with pytest.raises(GraphError):
        build_graph(["1"], [], {"1": []})


@pytest.mark.parametrize(
    "rotation",
    [
        {"1": ["a:t"], "2": ["b:t", "a:h"], "3": ["c:t", "b:h"]},  # c:h missing
        {"1": ["a:t", "c:h", "a:t"], "2": ["b:t", "a:h"], "3": ["c:t", "b:h"]},  # duplicate
        {"1": ["a:t", "b:h"], "2": ["b:t", "a:h"], "3": ["c:t", "c:h"]},  # wrong vertex
        {"1": ["a:t", "c:h"], "2": ["b:t", "a:h"], "3": ["c:t", "z:h"]},  # unknown edge
        {"1": ["a:t", "c:x"], "2": ["b:t", "a:h"], "3": ["c:t", "b:h"]},  # bad end
        {"1": ["a:t", "c:h"], "2": ["b:t", "a:h"], "3": ["c:t", "b:h"], "9": []},  # unknown vertex
    ],
)
def test_bad_rotation(rotation):
    with pytest.raises(BadRotation):
        build_graph(["1", "2", "3"], TRI_EDGES, rotation)


def test_non_planar_rotation():
    # K4 with rotations that put it on a torus: F = 2 instead of 4.
    g = fixture_graph("tetrahedron")
    rot = {v: list(ds) for v, ds in g.rotation.items()}
    v = g.vertices[0]
    rot[v] = [rot[v][0], rot[v][2], rot[v][1]]
    with pytest.raises(NotPlanarEmbedding):
        build_graph(g.vertices, g.edges, rot)


def test_either_orientation_accepted(cube):
    mirrored = {v: list(reversed(ds)) for v, ds in cube.rotation.items()}
    g = build_graph(cube.vertices, cube.edges, mirrored)
    assert sorted(faces(g).lengths()) == sorted(faces(cube).lengths())


def test_vertices_sorted_naturally():
    g = fixture_graph("dodecahedron")
    assert g.vertices[:3] == ("v0", "v1", "v2")
    assert g.vertices.index("v10") == 10


def test_dart_parse_and_twin():
    d = Dart.parse("e12:t")
    assert d == Dart("e12", "t")
    assert d.twin.twin == d
    assert str(d.twin) == "e12:h"
    assert Dart.parse("a:b:h") == Dart("a:b", "h")


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_faces_partition_darts(name):
    g = fixture_graph(name)
    fs = faces(g)
    assert sum(fs.lengths()) == 2 * g.n_edges
    all_darts = [d for f in fs.faces for d in f]
    assert len(set(all_darts)) == len(all_darts) == 2 * g.n_edges
    for k, f in enumerate(fs.faces):
        for d in f:
            assert fs.face_of_dart[d] == k
    assert g.n_vertices - g.n_edges + len(fs) == 2


@pytest.mark.parametrize("name", ["cube", "example_s3", "wheel5"])
def test_faces_invariant_under_relabeling(name):
    g = fixture_graph(name)
    rng = random.Random(1)
    new_ids = [f"x{k}" for k in range(g.n_vertices)]
    rng.shuffle(new_ids)
    rename = dict(zip(g.vertices, new_ids))
    edges = [(e.id, rename[e.tail], rename[e.head], e.resistance) for e in g.edges]
    rot = {rename[v]: ds for v, ds in g.rotation.items()}
    h = build_graph(new_ids, edges, rot)
    assert sorted(faces(h).lengths()) == sorted(faces(g).lengths())


def test_bridges_examples(triangle, cube):
    assert bridges(triangle) == frozenset()
    assert bridges(cube) == frozenset()
    assert bridges(fixture_graph("path3")) == {"e1", "e2"}
    assert bridges(fixture_graph("pendant")) == {"e4"}
    assert bridges(fixture_graph("theta3")) == frozenset()


def _disconnects(g, eid):
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        if e.id != eid:
            adj[e.tail].add(e.head)
            adj[e.head].add(e.tail)
    seen, stack = {g.vertices[0]}, [g.vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) < g.n_vertices


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_bridges_by_removal(name):
    g = fixture_graph(name)
    assert bridges(g) == {e.id for e in g.edges if _disconnects(g, e.id)}


@pytest.mark.parametrize("name", ["triangle", "example_s3", "pendant", "path3", "theta3", "wheel4", "cube"])
def test_bridges_are_in_every_spanning_tree(name):
    g = fixture_graph(name)
    trees = enumerate_spanning_trees(g)
    in_all = {e.id for e in g.edges if all(e.id in t for t in trees.trees)}
    assert bridges(g) == in_all


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(4, 9))
def test_random_plane_graphs_with_bridges(seed, n):
    g = random_plane_graph(np.random.default_rng(seed), n, keep=0.5, bridgeless=False)
    assert g.n_vertices - g.n_edges + len(faces(g)) == 2
    assert bridges(g) == {e.id for e in g.edges if _disconnects(g, e.id)}


def test_contract_pendant():
    g = fixture_graph("pendant")
    h = contract(g, ["e4"])
    assert h.n_vertices == 3 and h.n_edges == 3
    assert sorted(faces(h).lengths()) == [3, 3]


def test_contract_keeps_euler():
    g = fixture_graph("cube")
    for eid in ("e0", "e5"):
        h = contract(g, [eid])
        assert h.n_vertices - h.n_edges + len(faces(h)) == 2
