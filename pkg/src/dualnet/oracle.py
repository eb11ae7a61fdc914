"""Brute-force spanning-tree enumeration.

This is the ground truth the determinant formulas are checked against, so it
deliberately shares no code with :mod:`dualnet.exact` or
:mod:`dualnet.kirchhoff` on the enumeration path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from dualnet.duality import SpanningTree, dual, psi_complement
from dualnet.errors import CapExceeded
from dualnet.graph import EmbeddedMultigraph, bridges, id_key

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class SpanningTreeSet:
    graph: EmbeddedMultigraph
    trees: tuple[SpanningTree, ...]
    weights: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.trees)

    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def weight_containing(self, edge_id: str) -> Fraction:
        return sum((w for t, w in zip(self.trees, self.weights) if edge_id in t), Fraction(0))


def subgraph_weight(g: EmbeddedMultigraph, edge_ids: Iterable[str]) -> Fraction:
    """Product of the conductances 1/R_e over the given edges."""
    w = Fraction(1)
    for eid in edge_ids:
        w /= g.resistance(eid)
    return w


def _connected(vertices: set, edges: list) -> bool:
    if len(vertices) <= 1:
        return True
    adj: dict = {v: [] for v in vertices}
    for _, a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _expand(vertices: set, edges: list, chosen: tuple) -> Iterator[tuple]:
    # Contracted parallels show up as loops and can never join the tree.
    edges = [x for x in edges if x[1] != x[2]]
    if len(vertices) == 1:
        yield chosen
        return
    if not edges or not _connected(vertices, edges):
        return
    (eid, a, b), rest = edges[0], edges[1:]
    merged = [(k, a if x == b else x, a if y == b else y) for k, x, y in rest]
    yield from _expand(vertices - {b}, merged, chosen + (eid,))
    yield from _expand(vertices, rest, chosen)


def enumerate_spanning_trees(g: EmbeddedMultigraph, cap: int = DEFAULT_CAP) -> SpanningTreeSet:
    """All spanning trees by deletion-contraction on edges in id order.

    Raises :class:`CapExceeded` as soon as more than ``cap`` trees are found.
    """
    edges = [(e.id, e.tail, e.head) for e in sorted(g.edges, key=lambda e: id_key(e.id))]
    trees = []
    for chosen in _expand(set(g.vertices), edges, ()):
        if len(trees) >= cap:
            raise CapExceeded(cap)
        trees.append(SpanningTree(frozenset(chosen)))
    weights = tuple(subgraph_weight(g, t.edges) for t in trees)
    return SpanningTreeSet(g, tuple(trees), weights)


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class OracleReport:
    graph_name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, "pass" if passed else "fail", detail))

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, "skip", reason))


def oracle_report(g: EmbeddedMultigraph, cap: int = DEFAULT_CAP) -> OracleReport:
    """Compare every determinant identity against explicit enumeration.

    Checks, in order: total tree weight vs. cofactor; per edge, weight of the
    trees through it vs. double minor / R_e; dual cofactor transfer; per dual
    tree weight transfer under the complement map; bijectivity of that map;
    per edge, the dual double-minor identity.
    """
    # Imported here: kirchhoff pulls in the determinant code this module is
    # meant to be independent of.
    from dualnet.exact import format_rational as fmt
    from dualnet.kirchhoff import cofactor, double_minor, dual_minor_identities, laplacian, tree_count

    # Fail fast instead of enumerating up to the cap.
    if tree_count(g) > cap:
        raise CapExceeded(cap)
    report = OracleReport(g.name)
    trees = enumerate_spanning_trees(g, cap)
    L = laplacian(g)
    v0 = g.vertices[0]
    c11 = cofactor(L, v0, v0)
    total = trees.total_weight()
    report.add(
        "tree-sum",
        total == c11,
        f"{len(trees)} trees, sum {fmt(total)}, cofactor {fmt(c11)}",
    )
    for e in g.edges:
        through = trees.weight_containing(e.id)
        via_minor = double_minor(L, e.tail, e.head) / e.resistance
        report.add(f"edge-trees {e.id}", through == via_minor, f"{fmt(through)} vs {fmt(via_minor)}")

    dual_checks = ("cofactor-transfer", "tree-weight-transfer", "psi-bijection", "dual-minor")
    if bridges(g):
        for name in dual_checks:
            report.skip(name, "graph has bridges; dual would contain loops")
        return report

    gd, corr = dual(g)
    dual_trees = enumerate_spanning_trees(gd, cap)
    pi_dual = Fraction(1)
    for e in g.edges:
        pi_dual *= e.resistance
    Ld = laplacian(gd)
    cd = cofactor(Ld, gd.vertices[0], gd.vertices[0])
    report.add("cofactor-transfer", cd == c11 * pi_dual, f"L'11 {fmt(cd)}, L11*Pi(G') {fmt(c11 * pi_dual)}")

    images = []
    bad = 0
    for t, w in zip(dual_trees.trees, dual_trees.weights):
        image = psi_complement(corr, t)
        images.append(image.edges)
        if w != pi_dual * subgraph_weight(g, image.edges):
            bad += 1
    report.add("tree-weight-transfer", bad == 0, f"{len(dual_trees) - bad}/{len(dual_trees)} dual trees agree")

    primal_set = {t.edges for t in trees.trees}
    distinct = set(images)
    report.add(
        "psi-bijection",
        len(distinct) == len(images) and distinct == primal_set,
        f"|S(G')| = {len(dual_trees)}, |S(G)| = {len(trees)}, distinct images {len(distinct)}",
    )
    sides = dual_minor_identities(g, corr)
    bad_edges = [e for e, (lhs, rhs) in sides.items() if lhs != rhs]
    report.add(
        "dual-minor",
        not bad_edges,
        "all edges" if not bad_edges else "fails on " + ", ".join(bad_edges),
    )
    return report
