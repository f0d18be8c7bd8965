"""Shared helpers for the test suite: random lattices and brute-force oracles."""

import random

from latticebb import complement_of_cones, compute_A1, hnf, minimal_elements
from latticebb.lattice_core import LatticeInputError


def random_fullrank_lattice(rng: random.Random, n, max_entry=4, max_det=60, max_v=400):
    """A full-rank lattice with small entries, bounded determinant and bounded
    compatible set; the generator matrix is returned as sampled (not in HNF)."""
    while True:
        rows = [
            tuple(rng.randint(-max_entry, max_entry) for _ in range(n))
            for _ in range(n)
        ]
        try:
            L = hnf(rows)
        except LatticeInputError:
            continue
        if L.m != n or L.determinant > max_det:
            continue
        V = complement_of_cones(compute_A1(L), n)
        if V.cardinality() > max_v:
            continue
        return L


def random_planar_lattice(rng: random.Random, max_det=100):
    """A full-rank planar lattice with |det| <= max_det, given by scrambled generators."""
    a1 = rng.randint(1, 10)
    a3 = rng.randint(1, max(1, max_det // a1))
    a2 = rng.randint(0, a3 - 1) if a3 > 1 else 0
    g1, g2 = [a1, a2], [0, a3]
    for _ in range(4):
        k = rng.randint(-2, 2)
        g1 = [x + k * y for x, y in zip(g1, g2)]
        k = rng.randint(-2, 2)
        g2 = [x + k * y for x, y in zip(g2, g1)]
    if rng.random() < 0.5:
        g1, g2 = g2, g1
    if rng.random() < 0.5:
        g1 = [-x for x in g1]
    L = hnf([tuple(g1), tuple(g2)])
    assert L.hnf == ((a1, a2), (0, a3))
    return L


def lattice_vectors_in_box(L, radius):
    """All lattice vectors with every coordinate in [-radius, radius].

    Complete by the echelon structure: later rows leave earlier pivot
    columns untouched, so each row coefficient is pinned to an interval by
    its own pivot column.
    """
    out = set()

    def rec(r, partial):
        if r == L.m:
            v = tuple(partial)
            if all(abs(x) <= radius for x in v):
                out.add(v)
            return
        c = L.pivot_cols[r]
        d = L.pivots[r]
        lo = -((radius + partial[c]) // d)
        hi = (radius - partial[c]) // d
        for t in range(lo, hi + 1):
            rec(r + 1, [a + t * b for a, b in zip(partial, L.hnf[r])])

    rec(0, [0] * L.n)
    return out


def brute_minimal_abs(L, radius):
    """Minimal absolute values of nonzero lattice vectors inside a box."""
    pts = {
        tuple(abs(x) for x in v)
        for v in lattice_vectors_in_box(L, radius)
        if any(v)
    }
    return minimal_elements(pts)


def brute_mixed_pairs(L, radius):
    """Minimal mixed-sign pairs from a boxed enumeration of lattice vectors.

    Pairs are scanned by total degree, so a strict dominator always comes
    earlier and one antichain pass suffices.
    """
    from latticebb import decompose, sq_leq

    zero = (0,) * L.n
    pairs = set()
    for v in lattice_vectors_in_box(L, radius):
        d = decompose(v)
        if d.plus != zero and d.minus != zero:
            pairs.add((d.plus, d.minus))
    kept = []
    for c in sorted(pairs, key=lambda p: (sum(p[0]) + sum(p[1]), p)):
        if not any(sq_leq(k, c) and not sq_leq(c, k) for k in kept):
            kept.append(c)
    return tuple(sorted(kept))


def points_of(S):
    return frozenset(S.points())
