"""Dual electrical networks and the tree-complement bijection.

The dual has one vertex per face and one edge ``e'`` per primal edge ``e``,
carrying resistance ``1/R_e``. Dart ``e:t`` of the primal becomes dart
``e':t`` of the dual, placed at the dual vertex of the face containing
``e:t``; the rotation at a dual vertex is the face cycle itself. With that
choice the faces of the dual are the primal vertices again, so dualizing
twice gives back the original network.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from dualnet.errors import BridgePresent, GraphError
from dualnet.graph import Dart, EmbeddedMultigraph, bridges, build_graph, id_key


def dual_vertex_id(k: int) -> str:
    return f"f{k}"


def dual_edge_id(edge_id: str) -> str:
    return edge_id + "'"


@dataclass(frozen=True)
class DualCorrespondence:
    primal: EmbeddedMultigraph
    dual: EmbeddedMultigraph
    edge_map: Mapping[str, str]
    face_map: Mapping[int, str]

    def dual_edge(self, edge_id: str) -> str:
        return self.edge_map[edge_id]

    @property
    def inverse_edge_map(self) -> dict[str, str]:
        return {v: k for k, v in self.edge_map.items()}


@dataclass(frozen=True)
class SpanningTree:
    """A set of edge ids that forms a spanning tree of its host graph."""

    edges: frozenset[str]

    def __contains__(self, edge_id: str) -> bool:
        return edge_id in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def sorted(self) -> list[str]:
        return sorted(self.edges, key=id_key)


def is_spanning_tree(g: EmbeddedMultigraph, edge_ids: Iterable[str]) -> bool:
    ids = set(edge_ids)
    if len(ids) != g.n_vertices - 1:
        return False
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for eid in ids:
        if eid not in g._edge_by_id:
            return False
        e = g.edge(eid)
        a, b = find(e.tail), find(e.head)
        if a == b:
            return False
        parent[a] = b
    return True


def dual(g: EmbeddedMultigraph) -> tuple[EmbeddedMultigraph, DualCorrespondence]:
    """Build the dual electrical network of a bridgeless embedded graph."""
    bad = bridges(g)
    if bad:
        raise BridgePresent(sorted(bad, key=id_key))
    fs = g.faces
    vids = [dual_vertex_id(k) for k in range(len(fs))]
    edges = []
    edge_map = {}
    for e in g.edges:
        de = dual_edge_id(e.id)
        edge_map[e.id] = de
        tail = vids[fs.face_of_dart[Dart(e.id, "t")]]
        head = vids[fs.face_of_dart[Dart(e.id, "h")]]
        edges.append((de, tail, head, 1 / e.resistance))
    rotation = {
        vids[k]: [Dart(dual_edge_id(d.edge), d.end) for d in cyc] for k, cyc in enumerate(fs.faces)
    }
    name = f"dual of {g.name}" if g.name else "dual"
    gd = build_graph(vids, edges, rotation, name)
    return gd, DualCorrespondence(g, gd, edge_map, dict(enumerate(vids)))


def psi_complement(corr: DualCorrespondence, t_dual: SpanningTree | Iterable[str]) -> SpanningTree:
    """Primal edges whose dual edges are absent from the dual spanning tree."""
    ids = t_dual.edges if isinstance(t_dual, SpanningTree) else frozenset(t_dual)
    if not is_spanning_tree(corr.dual, ids):
        raise GraphError("input is not a spanning tree of the dual network")
    return SpanningTree(frozenset(e for e, de in corr.edge_map.items() if de not in ids))
