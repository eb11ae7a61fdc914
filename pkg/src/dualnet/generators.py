"""Embedded test networks: convex polyhedra, wheels, random plane graphs.

Rotations are read off coordinates: around a polyhedron vertex the
neighbours are sorted by angle in the tangent plane seen from outside, in the
plane by ordinary polar angle. Polyhedron edges are the vertex pairs at
minimum distance, which is correct for every solid listed here.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from dualnet.graph import EmbeddedMultigraph, build_graph

PHI = (1 + math.sqrt(5)) / 2


def _signs(*coords):
    # all sign patterns, skipping duplicates from zero coordinates
    out = set()
    for s in itertools.product((1, -1), repeat=len(coords)):
        out.add(tuple(c * k for c, k in zip(coords, s)))
    return sorted(out)


def _cyclic(points):
    out = []
    for p in points:
        for k in range(3):
            out.append(p[k:] + p[:k])
    return out


def _cube_points():
    return _signs(1.0, 1.0, 1.0)


def _polyhedron_points(name: str):
    if name == "tetrahedron":
        return [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    if name == "cube":
        return _cube_points()
    if name == "octahedron":
        return _cyclic(_signs(1.0, 0.0, 0.0))
    if name == "icosahedron":
        return _cyclic(_signs(0.0, 1.0, PHI))
    if name == "dodecahedron":
        return _cube_points() + _cyclic(_signs(0.0, 1 / PHI, PHI))
    if name == "cuboctahedron":
        return _cyclic(_signs(1.0, 1.0, 0.0))
    if name == "rhombic_dodecahedron":
        return _cube_points() + _cyclic(_signs(2.0, 0.0, 0.0))
    raise KeyError(f"unknown polyhedron {name!r}")


POLYHEDRA = (
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "rhombic_dodecahedron",
    "cuboctahedron",
)


def _nearest_pairs(pts: np.ndarray) -> list[tuple[int, int]]:
    d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    n = len(pts)
    dmin = min(d[i, j] for i in range(n) for j in range(i + 1, n))
    return [(i, j) for i in range(n) for j in range(i + 1, n) if abs(d[i, j] - dmin) < 1e-9]


def _assemble(
    name: str,
    n: int,
    pairs: Sequence[tuple[int, int]],
    angle: Callable[[int, int], float],
    resistances: Iterable | None = None,
) -> EmbeddedMultigraph:
    vids = [f"v{k}" for k in range(n)]
    res = list(resistances) if resistances is not None else [1] * len(pairs)
    edges = [(f"e{k}", vids[i], vids[j], Fraction(r)) for k, ((i, j), r) in enumerate(zip(pairs, res))]
    around: dict[int, list[tuple[float, str]]] = {k: [] for k in range(n)}
    for k, (i, j) in enumerate(pairs):
        around[i].append((angle(i, j), f"e{k}:t"))
        around[j].append((angle(j, i), f"e{k}:h"))
    rotation = {vids[v]: [d for _, d in sorted(lst)] for v, lst in around.items()}
    return build_graph(vids, edges, rotation, name)


def embed_3d(name: str, points, pairs, resistances=None) -> EmbeddedMultigraph:
    """Embed a convex polytope's edge graph, centred at the origin."""
    pts = np.asarray(points, dtype=float)
    pts = pts - pts.mean(axis=0)

    def angle(i, j):
        normal = pts[i] / np.linalg.norm(pts[i])
        helper = np.eye(3)[np.argmin(np.abs(normal))]
        u = np.cross(normal, helper)
        u /= np.linalg.norm(u)
        w = np.cross(normal, u)
        d = pts[j] - pts[i]
        return math.atan2(float(d @ w), float(d @ u))

    return _assemble(name, len(pts), pairs, angle, resistances)


def embed_2d(name: str, points, pairs, resistances=None) -> EmbeddedMultigraph:
    """Embed a straight-line plane drawing."""
    pts = np.asarray(points, dtype=float)

    def angle(i, j):
        d = pts[j] - pts[i]
        return math.atan2(float(d[1]), float(d[0]))

    return _assemble(name, len(pts), pairs, angle, resistances)


def polyhedron(name: str, resistances=None) -> EmbeddedMultigraph:
    pts = np.asarray(_polyhedron_points(name), dtype=float)
    return embed_3d(name, pts, _nearest_pairs(pts), resistances)


def wheel(n: int, resistances=None) -> EmbeddedMultigraph:
    """Hub ``v0`` joined to every vertex of an ``n``-cycle rim."""
    if n < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    pts = [(0.0, 0.0)] + [(math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k in range(n)]
    spokes = [(0, k) for k in range(1, n + 1)]
    rim = [(k, k % n + 1) for k in range(1, n + 1)]
    return embed_2d(f"wheel{n}", pts, spokes + rim, resistances)


def random_plane_graph(
    rng: np.random.Generator,
    n_points: int = 8,
    keep: float = 0.75,
    bridgeless: bool = True,
) -> EmbeddedMultigraph:
    """Delaunay triangulation of random points with some edges dropped.

    Edges are removed in random order as long as the graph stays connected
    (and, with ``bridgeless``, 2-edge-connected).
    """
    from scipy.spatial import Delaunay

    from dualnet.graph import bridges

    pts = rng.random((n_points, 2))
    tri = Delaunay(pts)
    pairs = sorted({tuple(sorted((int(s[a]), int(s[b])))) for s in tri.simplices for a, b in ((0, 1), (1, 2), (0, 2))})
    target = max(n_points - 1, int(round(keep * len(pairs))))
    order = rng.permutation(len(pairs))
    current = list(pairs)
    for k in order:
        if len(current) <= target:
            break
        trial = [p for p in current if p != pairs[k]]
        try:
            g = embed_2d("trial", pts, trial)
        except ValueError:
            continue
        if bridgeless and bridges(g):
            continue
        current = trial
    res = [Fraction(int(rng.integers(1, 11)), int(rng.integers(1, 11))) for _ in current]
    return embed_2d("random", pts, current, res)


def random_resistances(rng, count: int, bound: int = 10) -> list[Fraction]:
    """Positive rationals with numerator and denominator in 1..bound."""
    return [Fraction(int(rng.integers(1, bound + 1)), int(rng.integers(1, bound + 1))) for _ in range(count)]


def with_resistances(g: EmbeddedMultigraph, resistances: Sequence) -> EmbeddedMultigraph:
    """Same embedding, new resistances in edge order."""
    edges = [(e.id, e.tail, e.head, Fraction(r)) for e, r in zip(g.edges, resistances, strict=True)]
    return build_graph(g.vertices, edges, g.rotation, g.name)
