"""Brute-force reference implementations; test-only, element-level, no shortcuts.

Builds the element graph on the compatible set directly (one vertex per
point, edges by scanning both down-sets for a repeated class label) and
enumerates its maximal cliques.  Deliberately independent of the region
machinery so the two pipelines can check each other.
"""

from __future__ import annotations

import os
from itertools import product

from .lattice_core import Lattice, RankError, label, member
from .lattice_minimals import compute_A1
from .staircase import INF, complement_of_cones, downset

DEFAULT_CAP = 500


class OracleCapExceeded(RuntimeError):
    """The compatible set is larger than the configured brute-force cap."""


def oracle_cap(cap=None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("LATTICEBB_ORACLE_CAP")
    return int(env) if env else DEFAULT_CAP


def compatible_points(L: Lattice, cap=None):
    """All points of the compatible set, sorted; rank n only."""
    if L.m != L.n:
        raise RankError("element-level enumeration needs a finite compatible set")
    V = complement_of_cones(compute_A1(L), L.n)
    size = V.cardinality()
    limit = oracle_cap(cap)
    if size == INF or size > limit:
        raise OracleCapExceeded(f"|V| = {size} exceeds cap {limit}")
    return V.points()


def direct_maximal_ideals(L: Lattice, cap=None):
    """Maximal compatible order ideals as frozensets of points, via the element graph."""
    pts = compatible_points(L, cap)
    index = {p: i for i, p in enumerate(pts)}
    labels = {p: label(p, L) for p in pts}

    down = {}
    for p in pts:
        down[p] = [q for q in downset(p).points()]

    k = len(pts)
    neighbors = [set() for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            seen = {}
            ok = True
            for q in set(down[pts[i]]) | set(down[pts[j]]):
                lab = labels[q]
                if lab in seen:
                    ok = False
                    break
                seen[lab] = q
            if ok:
                neighbors[i].add(j)
                neighbors[j].add(i)

    cliques = []

    def walk(clique, candidates, excluded):
        if not candidates and not excluded:
            cliques.append(clique)
            return
        pivot = max(sorted(candidates | excluded), key=lambda v: len(candidates & neighbors[v]))
        for v in sorted(candidates - neighbors[pivot]):
            walk(clique | {v}, candidates & neighbors[v], excluded & neighbors[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    walk(set(), set(range(k)), set())
    return sorted(
        (frozenset(pts[i] for i in c) for c in cliques), key=lambda s: sorted(s)
    )


def naive_equivalent(u, v, L: Lattice, radius: int) -> bool:
    """Is u - v a generator combination with coefficients in [-radius, radius]?"""
    if radius < 1:
        raise ValueError("radius must be at least 1")
    target = tuple(a - b for a, b in zip(u, v))
    gens = L.generators
    for combo in product(range(-radius, radius + 1), repeat=len(gens)):
        acc = tuple(
            sum(c * g[j] for c, g in zip(combo, gens)) for j in range(L.n)
        )
        if acc == target:
            return True
    return False
