"""Partition of the compatible set into regions and the finite quotient graph.

V (the union of all compatible order ideals) is cut into finitely many
regions by the divisibility signature against Y = {first components of the
minimal mixed pairs} + {0}: two points land in the same region iff the same
subset of Y lies below them.  Non-adjacency between regions is decided by
the minimal mixed pairs alone, evaluated at representatives.  Maximal
cliques of the quotient graph, unioned back to point sets, are exactly the
maximal compatible order ideals.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice_core import Lattice
from .lattice_minimals import XPair, compute_A1, compute_X1
from .staircase import RectUnion, complement_of_cones, leq, upset

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Region:
    """A signature class of V: lexicographically least member, bits over Y, point set."""

    representative: Vec
    signature: tuple[int, ...]
    points: RectUnion


@dataclass(frozen=True)
class QuotientGraph:
    regions: tuple[Region, ...]
    adjacency: tuple[tuple[bool, ...], ...]
    x1: tuple[XPair, ...]
    y: tuple[Vec, ...]


def signature_basis(x1) -> tuple[Vec, ...]:
    """Y: the sorted first components of the pairs, with the origin in front."""
    if not x1:
        return ()
    zero = (0,) * len(x1[0][0])
    return tuple(sorted({a0 for a0, _ in x1} | {zero}))


def signature(u, y) -> tuple[int, ...]:
    return tuple(int(leq(c, u)) for c in y)


def compute_regions(V: RectUnion, x1) -> tuple[Region, ...]:
    """Split V by each signature bit; one region per realized signature."""
    if V.is_empty():
        return ()
    n = V.dim
    y = signature_basis(x1) or ((0,) * n,)
    parts = [((), V)]
    for c in y:
        cone = RectUnion([upset(c)])
        nxt = []
        for bits, pts in parts:
            inside = pts.intersect(cone)
            outside = pts.subtract(cone)
            if not inside.is_empty():
                nxt.append((bits + (1,), inside))
            if not outside.is_empty():
                nxt.append((bits + (0,), outside))
        parts = nxt
    regions = [
        Region(representative=pts.lex_min(), signature=bits, points=pts)
        for bits, pts in parts
    ]
    regions.sort(key=lambda r: r.representative)
    return tuple(regions)


def adjacent(ru: Region, rv: Region, x1) -> bool:
    """Regions are adjacent unless some pair splits across their representatives."""
    if ru is rv or ru.representative == rv.representative:
        return True
    u, v = ru.representative, rv.representative
    return not any(leq(a0, u) and leq(a1, v) for a0, a1 in x1)


def quotient_graph(V: RectUnion, x1) -> QuotientGraph:
    regions = compute_regions(V, x1)
    adj = tuple(
        tuple(adjacent(ru, rv, x1) for rv in regions) for ru in regions
    )
    return QuotientGraph(
        regions=regions, adjacency=adj, x1=tuple(x1), y=signature_basis(x1)
    )


def maximal_cliques(graph: QuotientGraph) -> tuple[tuple[int, ...], ...]:
    """All maximal cliques as sorted index tuples, in lexicographic order."""
    k = len(graph.regions)
    neighbors = [
        {j for j in range(k) if j != i and graph.adjacency[i][j]}
        for i in range(k)
    ]
    out: list[tuple[int, ...]] = []

    def walk(clique, candidates, excluded):
        if not candidates and not excluded:
            out.append(tuple(sorted(clique)))
            return
        pivot = max(sorted(candidates | excluded), key=lambda v: len(candidates & neighbors[v]))
        for v in sorted(candidates - neighbors[pivot]):
            walk(clique | {v}, candidates & neighbors[v], excluded & neighbors[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    walk(set(), set(range(k)), set())
    return tuple(sorted(out))


def order_ideals_from_cliques(graph: QuotientGraph, cliques) -> tuple[RectUnion, ...]:
    """Union the regions of each maximal clique into a canonical point set."""
    out = []
    for clique in cliques:
        pts = graph.regions[clique[0]].points
        for i in clique[1:]:
            pts = pts.union(graph.regions[i].points)
        out.append(pts)
    return tuple(out)


def maximal_order_ideals(L: Lattice):
    """Full pipeline: returns (graph, cliques, ideals) for the lattice."""
    a1 = compute_A1(L)
    V = complement_of_cones(a1, L.n)
    x1 = compute_X1(L)
    graph = quotient_graph(V, x1)
    cliques = maximal_cliques(graph)
    ideals = order_ideals_from_cliques(graph, cliques)
    return graph, cliques, ideals
