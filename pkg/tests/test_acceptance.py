"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`; the scan in criterion 6 is
opt-in via --runslow.  All values are exact integers; the time limits are
asserted as stated.
"""

import functools
import random
import time

import pytest

from latticebb import (
    HyperRect,
    INF,
    RectUnion,
    border,
    border_families,
    compute_A1,
    compute_B2,
    compute_X1,
    consecutive_pairs,
    downset,
    expand_binomials,
    groebner_realizable,
    hnf,
    ideals_2d,
    is_max_compatible,
    is_order_ideal,
    maximal_cliques,
    maximal_order_ideals,
    member,
    quotient_graph,
    representative_in,
    complement_of_cones,
)
from latticebb.compatibility import reduction_image
from latticebb.oracle import direct_maximal_ideals

from util import points_of, random_fullrank_lattice, random_planar_lattice

H1 = HyperRect((0, 0, 0), (INF, 1, 15))
H2 = HyperRect((0, 0, 15), (6, 1, INF))


def criterion(num, desc, limit):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"CRITERION {num} [{desc}]: FAIL")
                raise
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"criterion {num} took {elapsed:.2f}s (limit {limit}s)"
            print(f"CRITERION {num} [{desc}]: PASS ({elapsed:.2f}s)")

        return wrapper

    return deco


@criterion(1, "planar golden example", 1.0)
def test_criterion_1():
    L = hnf([(2, 6), (0, 10)])
    assert L.hnf == ((2, 6), (0, 10))
    assert compute_A1(L) == ((0, 10), (2, 4), (4, 2), (10, 0))
    assert set(compute_X1(L)) == {
        ((2, 0), (0, 4)), ((6, 0), (0, 2)), ((0, 4), (2, 0)), ((0, 2), (6, 0))
    }
    graph, cliques, ideals = maximal_order_ideals(L)
    assert [r.representative for r in graph.regions] == [
        (0, 0), (0, 2), (0, 4), (2, 0), (2, 2), (6, 0)
    ]
    non_edges = {
        (i, j)
        for i in range(6)
        for j in range(i + 1, 6)
        if not graph.adjacency[i][j]
    }
    # letters A..F in representative order: BF, CD, CE, CF, EF
    assert non_edges == {(1, 5), (2, 3), (2, 4), (2, 5), (4, 5)}
    assert cliques == ((0, 1, 2), (0, 1, 3, 4), (0, 3, 5))
    assert [I.cardinality() for I in ideals] == [20, 20, 20]
    assert all(is_max_compatible(I, L) for I in ideals)
    box = RectUnion([HyperRect((0, 0), (2, 10))])
    binomials = expand_binomials(border_families(box, L))
    expected = sorted(
        [((2, i), (0, 4 + i)) for i in range(6)]
        + [((2, 6 + j), (0, j)) for j in range(4)]
        + [((k, 10), (k, 0)) for k in range(2)]
    )
    assert binomials == expected


@criterion(2, "rank-2 in Z^3 golden example", 5.0)
def test_criterion_2():
    L = hnf([(2, 1, 4), (0, 3, -3)])
    assert len(compute_A1(L)) == 5
    assert len(compute_X1(L)) == 10
    graph, cliques, ideals = maximal_order_ideals(L)
    assert len(graph.regions) == 19
    by_rep = {r.representative: r.points for r in graph.regions}
    assert by_rep[(0, 0, 0)] == RectUnion([HyperRect((0, 0, 0), (INF, 1, 1))])
    assert by_rep[(4, 0, 11)] == RectUnion(
        [HyperRect((4, 0, 11), (INF, 1, 15)), HyperRect((4, 0, 15), (6, 1, INF))]
    )
    assert len(ideals) == 6
    assert all(is_order_ideal(I) for I in ideals)
    assert all(is_max_compatible(I, L) for I in ideals)
    line = lambda lo, hi: RectUnion([HyperRect((lo,), (hi,))])
    assert reduction_image(RectUnion([H1]), L) == {
        (i, j): line(-INF, hi)
        for i in (0, 1)
        for j, hi in [(0, 15), (1, 4), (2, 8)]
    }
    assert reduction_image(RectUnion([H2]), L) == {
        (i, j): line(lo, INF)
        for i in (0, 1)
        for j, lo in [(0, 15), (1, 4), (2, 8)]
    }


@criterion(3, "infinite border and reduction table", 5.0)
def test_criterion_3():
    L = hnf([(2, 1, 4), (0, 3, -3)])
    O = RectUnion([H1, H2])
    b1 = HyperRect((6, 0, 15), (INF, 1, 16))
    b2 = HyperRect((6, 0, 16), (7, 1, INF))
    b3 = HyperRect((0, 1, 15), (6, 2, INF))
    b4 = HyperRect((0, 1, 0), (INF, 2, 15))
    assert border(O) == RectUnion([b1, b2, b3, b4])
    rng = random.Random(2024)
    samples = 0
    while samples < 50:
        i = rng.randint(0, 9)
        j = rng.randint(0, 1)
        h = rng.randint(0, 3)
        k = rng.randint(0, 10)
        table = [
            ((6 + i, 0, 15), (i, 0, 0)),
            ((6, 0, 16 + i), (0, 0, 1 + i)),
            ((j, 1, 15 + i), (4 + j, 0, 26 + i)),
            ((2 + h, 1, 15 + i), (h, 0, 11 + i)),
            ((i, 1, h), (4 + i, 0, 11 + h)),
            ((j, 1, 4 + k), (4 + j, 0, 15 + k)),  # corrected row
            ((2 + i, 1, 4 + k), (i, 0, k)),
        ]
        for b, expected in table:
            got = representative_in(b, O, L)
            assert got == expected
            assert member(tuple(x - y for x, y in zip(b, got)), L)
        samples += 1


@criterion(4, "35 ideals, 33 realizable", 30.0)
def test_criterion_4():
    L = hnf([(1, -2, -1), (1, -1, 2), (-2, -1, 1)])
    assert L.hnf == ((1, 0, 5), (0, 1, 3), (0, 0, 14))
    _, _, ideals = maximal_order_ideals(L)
    mc = [I for I in ideals if is_max_compatible(I, L)]
    assert len(mc) == 35
    assert all(I.cardinality() == 14 for I in mc)
    o1 = RectUnion(
        [downset((1, 2, 0)), downset((2, 0, 1)), downset((0, 1, 2)), downset((1, 1, 1))]
    )
    o2 = RectUnion(
        [downset((3, 0, 0)), downset((0, 3, 0)), downset((0, 0, 3)), downset((1, 1, 1))]
    )
    failing = []
    for I in mc:
        fams = border_families(I, L)
        res = groebner_realizable(fams)
        if not res.realizable:
            failing.append(I)
            assert res.certificate is not None
        else:
            w = res.witness
            assert all(x > 0 for x in w)
            for b, r in expand_binomials(fams):
                delta = tuple(x - y for x, y in zip(b, r))
                assert sum(a * d for a, d in zip(w, delta)) > 0
    assert sorted(failing, key=repr) == sorted([o1, o2], key=repr)


@criterion(5, "maximal but not maximum ideals", 10.0)
def test_criterion_5():
    L = hnf([(1, 1, 2), (0, 3, 1), (0, 0, 4)])
    _, _, ideals = maximal_order_ideals(L)
    sizes = sorted(I.cardinality() for I in ideals)
    assert len(ideals) == 23
    assert sizes.count(12) == 19 and sizes.count(9) == 2 and sizes.count(8) == 2
    special = RectUnion([downset((2, 0, 0)), downset((0, 2, 0)), downset((0, 0, 3))])
    found = [I for I in ideals if I == special]
    assert len(found) == 1
    assert not is_max_compatible(found[0], L)


@pytest.mark.slow
@criterion(6, "minimality scan of echelon matrices", 600.0)
def test_criterion_6():
    for c in range(1, 15):
        for a in range(0, min(5, c - 1) + 1):
            for b in range(0, min(3, c - 1) + 1):
                if (a, b, c) == (5, 3, 14):
                    continue
                L = hnf([(1, 0, a), (0, 1, b), (0, 0, c)])
                _, _, ideals = maximal_order_ideals(L)
                for I in ideals:
                    if not is_max_compatible(I, L):
                        continue
                    res = groebner_realizable(border_families(I, L))
                    assert res.realizable, (a, b, c)


@criterion(7, "planar fast path equals pipeline", 30.0)
def test_criterion_7():
    cases = [hnf([(2, 6), (0, 10)])]
    rng = random.Random(1234)
    while len(cases) < 31:
        cases.append(random_planar_lattice(rng, max_det=100))
    for L in cases:
        fast = ideals_2d(L)
        _, _, ideals = maximal_order_ideals(L)
        assert {frozenset(d.points.points()) for d in fast} == {
            points_of(I) for I in ideals
        }
        for d in fast:
            assert d.points.cardinality() == L.determinant
            res = groebner_realizable(border_families(d.points, L))
            assert res.realizable


@criterion(8, "property suites and oracle sweep", 120.0)
def test_criterion_8():
    # algebra laws, reduction soundness, antichain/domination, border checks
    import test_border_basis
    import test_compatibility
    import test_lattice_core
    import test_lattice_minimals
    import test_staircase

    test_staircase.test_algebra_laws()
    test_staircase.test_canonical_uniqueness()
    test_lattice_core.test_rho_soundness_planar()
    test_lattice_core.test_rho_label_random()
    test_lattice_minimals.test_domination_properties()
    L22 = hnf([(2, 6), (0, 10)])
    L312 = hnf([(2, 1, 4), (0, 3, -3)])
    test_border_basis.test_families_412_table(L312)
    test_border_basis.test_families_delta_in_lattice_sampled(L312, L22)
    # element-level oracle equivalence on 50 random small lattices
    rng = random.Random(101)
    for _ in range(50):
        n = rng.choice([2, 3])
        L = random_fullrank_lattice(rng, n, max_det=60, max_v=260)
        brute = {frozenset(s) for s in direct_maximal_ideals(L, cap=500)}
        _, _, ideals = maximal_order_ideals(L)
        assert {points_of(I) for I in ideals} == brute
