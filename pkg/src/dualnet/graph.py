"""Embedded planar multigraphs described by rotation systems.

An edge ``e`` from ``tail`` to ``head`` owns two darts, ``e:t`` sitting at the
tail and ``e:h`` sitting at the head. The embedding is the cyclic order of
darts around each vertex. Faces are the orbits of

    next(d) = successor of twin(d) in the rotation at twin(d)'s vertex

and the embedding is accepted as planar exactly when V - E + F = 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from dualnet.errors import (
    BadRotation,
    Disconnected,
    GraphError,
    LoopEdge,
    NonPositiveResistance,
    NotPlanarEmbedding,
    UnknownEdge,
)

TAIL = "t"
HEAD = "h"

_DIGITS = re.compile(r"(\d+)")


def id_key(ident: str):
    """Natural sort key, so ``v2`` sorts before ``v10``."""
    parts = _DIGITS.split(ident)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts)), ident


class Dart(NamedTuple):
    edge: str
    end: str

    def __str__(self) -> str:
        return f"{self.edge}:{self.end}"

    @property
    def twin(self) -> Dart:
        return Dart(self.edge, HEAD if self.end == TAIL else TAIL)

    @classmethod
    def parse(cls, text: str) -> Dart:
        edge, sep, end = str(text).rpartition(":")
        if not sep or not edge or end not in (TAIL, HEAD):
            raise BadRotation(f"malformed dart {text!r}; expected 'EDGE:t' or 'EDGE:h'")
        return cls(edge, end)


def dart_key(d: Dart):
    return id_key(d.edge), d.end == HEAD


class Edge(NamedTuple):
    id: str
    tail: str
    head: str
    resistance: Fraction

    def endpoint(self, end: str) -> str:
        return self.tail if end == TAIL else self.head


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]
    face_of_dart: Mapping[Dart, int]

    def __len__(self) -> int:
        return len(self.faces)

    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


@dataclass(frozen=True, eq=False)
class EmbeddedMultigraph:
    """Validated, immutable graph; construct it through :func:`build_graph`."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    rotation: Mapping[str, tuple[Dart, ...]]
    name: str = ""

    @cached_property
    def _edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def _succ(self) -> dict[Dart, Dart]:
        succ = {}
        for darts in self.rotation.values():
            for k, d in enumerate(darts):
                succ[d] = darts[(k + 1) % len(darts)]
        return succ

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge_by_id[edge_id]
        except KeyError:
            raise UnknownEdge(f"unknown edge {edge_id!r}") from None

    def resistance(self, edge_id: str) -> Fraction:
        return self.edge(edge_id).resistance

    def vertex_of(self, d: Dart) -> str:
        return self.edge(d.edge).endpoint(d.end)

    def rotation_successor(self, d: Dart) -> Dart:
        return self._succ[d]

    def face_successor(self, d: Dart) -> Dart:
        return self._succ[d.twin]

    def darts(self) -> Iterator[Dart]:
        for e in self.edges:
            yield Dart(e.id, TAIL)
            yield Dart(e.id, HEAD)

    def weighted_edges(self) -> Iterator[tuple[str, str, Fraction]]:
        for e in self.edges:
            yield e.tail, e.head, e.resistance

    @cached_property
    def faces(self) -> FaceSet:
        return _trace_faces(self)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<EmbeddedMultigraph{label} V={self.n_vertices} E={self.n_edges}>"


def _as_edge(item) -> tuple[str, str, str, object]:
    if isinstance(item, Mapping):
        try:
            return item["id"], item["tail"], item["head"], item["resistance"]
        except KeyError as exc:
            raise GraphError(f"edge record missing field {exc.args[0]!r}") from None
    ident, tail, head, res = item
    return ident, tail, head, res


def _as_resistance(value, edge_id: str) -> Fraction:
    from dualnet.exact import rational_parse

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise GraphError(f"edge {edge_id!r}: resistance must be exact, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    try:
        return rational_parse(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise GraphError(f"edge {edge_id!r}: bad resistance: {exc}") from None


def build_graph(
    vertices: Iterable[str],
    edges: Iterable,
    rotation: Mapping[str, Sequence],
    name: str = "",
) -> EmbeddedMultigraph:
    """Validate a vertex/edge/rotation description and freeze it.

    ``edges`` holds ``(id, tail, head, resistance)`` tuples or mappings with
    those keys; resistances may be Fractions, ints or rational strings.
    ``rotation`` maps each vertex to its cyclic list of darts, given as
    :class:`Dart` or ``"edge:t"`` / ``"edge:h"`` strings.
    """
    vlist = [str(v) for v in vertices]
    if len(set(vlist)) != len(vlist):
        raise GraphError("duplicate vertex identifiers")
    vset = set(vlist)
    if len(vlist) < 2:
        raise GraphError(f"need at least 2 vertices, got {len(vlist)}")

    elist: list[Edge] = []
    seen: set[str] = set()
    for item in edges:
        ident, tail, head, res = _as_edge(item)
        ident, tail, head = str(ident), str(tail), str(head)
        if ident in seen:
            raise GraphError(f"duplicate edge identifier {ident!r}")
        seen.add(ident)
        for v in (tail, head):
            if v not in vset:
                raise GraphError(f"edge {ident!r} references unknown vertex {v!r}")
        if tail == head:
            raise LoopEdge(f"edge {ident!r} is a loop at vertex {tail!r}")
        r = _as_resistance(res, ident)
        if r <= 0:
            raise NonPositiveResistance(f"edge {ident!r} has resistance {r} <= 0")
        elist.append(Edge(ident, tail, head, r))
    elist.sort(key=lambda e: id_key(e.id))
    by_id = {e.id: e for e in elist}

    extra = set(rotation) - vset
    if extra:
        raise BadRotation(f"rotation given for unknown vertices {sorted(extra, key=id_key)}")
    rot: dict[str, tuple[Dart, ...]] = {}
    for v in vlist:
        raw = rotation.get(v, ())
        darts = tuple(d if isinstance(d, Dart) else Dart.parse(d) for d in raw)
        for d in darts:
            e = by_id.get(d.edge)
            if e is None:
                raise BadRotation(f"rotation at {v!r} names unknown edge {d.edge!r}")
            if e.endpoint(d.end) != v:
                raise BadRotation(f"dart {d} is not incident to vertex {v!r}")
        if len(set(darts)) != len(darts):
            raise BadRotation(f"rotation at {v!r} repeats a dart")
        rot[v] = darts
    placed = {d for darts in rot.values() for d in darts}
    for e in elist:
        for end in (TAIL, HEAD):
            d = Dart(e.id, end)
            if d not in placed:
                raise BadRotation(f"dart {d} missing from rotation at {e.endpoint(end)!r}")

    vsorted = tuple(sorted(vlist, key=id_key))
    if not _connected(vsorted, elist):
        raise Disconnected("graph is not connected")

    g = EmbeddedMultigraph(vsorted, tuple(elist), {v: rot[v] for v in vsorted}, name)
    euler = g.n_vertices - g.n_edges + len(g.faces)
    if euler != 2:
        raise NotPlanarEmbedding(
            f"V - E + F = {g.n_vertices} - {g.n_edges} + {len(g.faces)} = {euler}, expected 2"
        )
    return g


def _connected(vertices: Sequence[str], edges: Iterable[Edge]) -> bool:
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for e in edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    stack = [vertices[0]]
    seen = {vertices[0]}
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _trace_faces(g: EmbeddedMultigraph) -> FaceSet:
    cycles = []
    visited: set[Dart] = set()
    for start in sorted(g.darts(), key=dart_key):
        if start in visited:
            continue
        cyc = []
        d = start
        while d not in visited:
            visited.add(d)
            cyc.append(d)
            d = g.face_successor(d)
        cycles.append(tuple(cyc))
    # Darts are visited in key order, so each cycle already starts at its
    # smallest dart and cycles come out sorted by that dart.
    face_of = {d: k for k, cyc in enumerate(cycles) for d in cyc}
    return FaceSet(tuple(cycles), face_of)


def faces(g: EmbeddedMultigraph) -> FaceSet:
    return g.faces


def bridges(g: EmbeddedMultigraph) -> frozenset[str]:
    """Edges whose removal disconnects ``g`` (parallel edges are never bridges)."""
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.tail].append((e.head, e.id))
        adj[e.head].append((e.tail, e.id))
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    found: set[str] = set()
    clock = 0
    root = g.vertices[0]
    disc[root] = low[root] = clock
    # frames: (vertex, edge used to enter it, iterator over neighbours)
    stack = [(root, None, iter(adj[root]))]
    while stack:
        v, via, it = stack[-1]
        for w, eid in it:
            if eid == via:
                continue
            if w in disc:
                low[v] = min(low[v], disc[w])
            else:
                clock += 1
                disc[w] = low[w] = clock
                stack.append((w, eid, iter(adj[w])))
                break
        else:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.add(via)
    return frozenset(found)


def contract(g: EmbeddedMultigraph, edge_ids: Iterable[str]) -> EmbeddedMultigraph:
    """Contract the given non-loop edges one at a time, merging rotations.

    The surviving vertex of each contraction is the endpoint with the smaller
    identifier. Fails if a contraction would turn another edge into a loop.
    """
    vertices = list(g.vertices)
    edges = {e.id: e for e in g.edges}
    rot = {v: list(ds) for v, ds in g.rotation.items()}
    for eid in sorted(set(edge_ids), key=id_key):
        e = edges.pop(eid, None)
        if e is None:
            raise UnknownEdge(f"unknown edge {eid!r}")
        u, v = sorted((e.tail, e.head), key=id_key)
        du = Dart(eid, TAIL if e.tail == u else HEAD)
        dv = du.twin
        ru, rv = rot.pop(u), rot.pop(v)
        ku, kv = ru.index(du), rv.index(dv)
        rot[u] = ru[ku + 1:] + ru[:ku] + rv[kv + 1:] + rv[:kv]
        vertices.remove(v)
        for k, other in list(edges.items()):
            if v in (other.tail, other.head):
                edges[k] = other._replace(
                    tail=u if other.tail == v else other.tail,
                    head=u if other.head == v else other.head,
                )
    return build_graph(vertices, edges.values(), rot, g.name)
