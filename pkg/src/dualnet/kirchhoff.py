"""Weighted Laplacians, their minors, and effective resistance over an edge."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Protocol

from dualnet.duality import DualCorrespondence, dual, dual_edge_id
from dualnet.exact import RationalMatrix, det, minor_matrix
from dualnet.graph import EmbeddedMultigraph, bridges, contract, id_key


class _Network(Protocol):
    vertices: tuple[str, ...]

    def weighted_edges(self) -> Iterator[tuple[str, str, Fraction]]: ...


@dataclass(frozen=True)
class LaplacianMatrix:
    matrix: RationalMatrix
    vertex_index: Mapping[str, int]

    def __getitem__(self, ij: tuple[str, str]) -> Fraction:
        i, j = ij
        return self.matrix[self.vertex_index[i], self.vertex_index[j]]

    def index(self, v: str) -> int:
        try:
            return self.vertex_index[v]
        except KeyError:
            raise IndexError(f"unknown vertex {v!r}") from None

    @property
    def size(self) -> int:
        return self.matrix.n_rows


@dataclass(frozen=True)
class WeightedGraph:
    """Simple weighted graph without an embedding.

    ``edges`` maps an ordered vertex pair to the resistance of the single
    edge between them.
    """

    vertices: tuple[str, ...]
    edges: Mapping[tuple[str, str], Fraction]

    def weighted_edges(self) -> Iterator[tuple[str, str, Fraction]]:
        for (u, v), r in self.edges.items():
            yield u, v, r


@dataclass(frozen=True)
class DualityRecord:
    edge_id: str
    dual_edge_id: str
    R_e: Fraction
    r_e: Fraction
    R_dual: Fraction
    r_dual: Fraction
    bridge: bool = False

    @property
    def sum(self) -> Fraction:
        return self.r_e / self.R_e + self.r_dual / self.R_dual


def laplacian(g: _Network) -> LaplacianMatrix:
    """Weighted Laplacian with vertices indexed in the graph's vertex order."""
    index = {v: k for k, v in enumerate(g.vertices)}
    n = len(index)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u, v, r in g.weighted_edges():
        c = 1 / Fraction(r)
        a, b = index[u], index[v]
        rows[a][b] -= c
        rows[b][a] -= c
        rows[a][a] += c
        rows[b][b] += c
    return LaplacianMatrix(RationalMatrix(tuple(map(tuple, rows)), n), index)


def cofactor(L: LaplacianMatrix, i: str, j: str) -> Fraction:
    """Signed cofactor (-1)^(i+j) det(L without row i and column j)."""
    a, b = L.index(i), L.index(j)
    sign = -1 if (a + b) % 2 else 1
    return sign * det(minor_matrix(L.matrix, [a], [b]))


def double_minor(L: LaplacianMatrix, i: str, j: str) -> Fraction:
    """det of L with rows and columns i and j removed; det([]) = 1."""
    if i == j:
        raise ValueError("double minor needs two distinct vertices")
    a, b = L.index(i), L.index(j)
    return det(minor_matrix(L.matrix, [a, b], [a, b]))


def tree_weight_total(g: _Network, L: LaplacianMatrix | None = None) -> Fraction:
    """Total spanning-tree weight, taken as the cofactor at the first vertex."""
    L = laplacian(g) if L is None else L
    v0 = g.vertices[0]
    return cofactor(L, v0, v0)


class _UnitResistances:
    def __init__(self, g: _Network):
        self.g = g
        self.vertices = g.vertices

    def weighted_edges(self) -> Iterator[tuple[str, str, Fraction]]:
        for u, v, _ in self.g.weighted_edges():
            yield u, v, Fraction(1)


def tree_count(g: _Network) -> int:
    """Number of spanning trees: the cofactor of the unit-resistance Laplacian."""
    return int(tree_weight_total(_UnitResistances(g)))


def effective_resistances(g: EmbeddedMultigraph) -> dict[str, Fraction]:
    L = laplacian(g)
    total = tree_weight_total(g, L)
    return {e.id: double_minor(L, e.tail, e.head) / total for e in g.edges}


def effective_resistance(g: EmbeddedMultigraph, edge_id: str) -> Fraction:
    e = g.edge(edge_id)
    L = laplacian(g)
    return double_minor(L, e.tail, e.head) / tree_weight_total(g, L)


def collapse_parallel(g: _Network) -> WeightedGraph:
    """Merge each class of parallel resistors into one equivalent resistor."""
    conductance: dict[tuple[str, str], Fraction] = {}
    for u, v, r in g.weighted_edges():
        key = (u, v) if id_key(u) <= id_key(v) else (v, u)
        conductance[key] = conductance.get(key, Fraction(0)) + 1 / Fraction(r)
    edges = {k: 1 / c for k, c in sorted(conductance.items(), key=lambda kv: (id_key(kv[0][0]), id_key(kv[0][1])))}
    return WeightedGraph(tuple(g.vertices), edges)


def dual_minor_identities(
    g: EmbeddedMultigraph, corr: DualCorrespondence
) -> dict[str, tuple[Fraction, Fraction]]:
    """Both sides of L'_{ij,ij} = (Pi(G')/R_e) * (L_ii - L_{ij,ij}/R_e), per edge.

    ``i, j`` on the left are the endpoints of the dual edge; on the right the
    endpoints of the primal edge. ``Pi(G')`` is the product of all primal
    resistances.
    """
    L, Ld = laplacian(g), laplacian(corr.dual)
    pi_dual = Fraction(1)
    for e in g.edges:
        pi_dual *= e.resistance
    sides = {}
    for e in g.edges:
        de = corr.dual.edge(corr.edge_map[e.id])
        lhs = double_minor(Ld, de.tail, de.head)
        rhs = pi_dual / e.resistance * (cofactor(L, e.tail, e.tail) - double_minor(L, e.tail, e.head) / e.resistance)
        sides[e.id] = (lhs, rhs)
    return sides


def dual_minor_identity(
    g: EmbeddedMultigraph, corr: DualCorrespondence, edge_id: str
) -> tuple[Fraction, Fraction]:
    g.edge(edge_id)
    return dual_minor_identities(g, corr)[edge_id]


def duality_report(g: EmbeddedMultigraph) -> list[DualityRecord]:
    """One record per edge of ``g`` in edge-id order.

    Bridges would dualize to loops; for them r_e = R_e and the dual
    resistance is taken as 0, and the record is flagged. The remaining dual
    resistances are computed on the dual of ``g`` with its bridges contracted,
    which is the true dual with its loops removed.
    """
    r = effective_resistances(g)
    bridge_ids = bridges(g)
    r_dual: dict[str, Fraction] = {}
    if len(bridge_ids) < g.n_edges:
        core = contract(g, bridge_ids) if bridge_ids else g
        gd, corr = dual(core)
        rd = effective_resistances(gd)
        r_dual = {e: rd[de] for e, de in corr.edge_map.items()}
    records = []
    for e in g.edges:
        is_bridge = e.id in bridge_ids
        records.append(
            DualityRecord(
                edge_id=e.id,
                dual_edge_id=dual_edge_id(e.id),
                R_e=e.resistance,
                r_e=r[e.id],
                R_dual=1 / e.resistance,
                r_dual=Fraction(0) if is_bridge else r_dual[e.id],
                bridge=is_bridge,
            )
        )
    return records
