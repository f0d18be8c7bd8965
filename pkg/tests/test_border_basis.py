import random

import pytest

from latticebb import (
    ContractViolationError,
    HyperRect,
    INF,
    RectUnion,
    border,
    border_families,
    downset,
    expand_binomials,
    groebner_realizable,
    hnf,
    is_max_compatible,
    maximal_order_ideals,
    member,
    representative_in,
)

from util import random_fullrank_lattice

H1 = HyperRect((0, 0, 0), (INF, 1, 15))
H2 = HyperRect((0, 0, 15), (6, 1, INF))


def test_border_planar_box(ex22):
    O = RectUnion([HyperRect((0, 0), (2, 10))])
    expected = RectUnion(
        [HyperRect((2, 0), (3, 10)), HyperRect((0, 10), (2, 11))]
    )
    assert border(O) == expected


def test_border_origin():
    O = RectUnion([HyperRect((0, 0, 0), (1, 1, 1))])
    pts = border(O).points()
    assert pts == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_border_412():
    O = RectUnion([H1, H2])
    b1 = HyperRect((6, 0, 15), (INF, 1, 16))
    b2 = HyperRect((6, 0, 16), (7, 1, INF))
    b3 = HyperRect((0, 1, 15), (6, 2, INF))
    b4 = HyperRect((0, 1, 0), (INF, 2, 15))
    assert border(O) == RectUnion([b1, b2, b3, b4])


def test_families_planar_box(ex22):
    O = RectUnion([HyperRect((0, 0), (2, 10))])
    fams = border_families(O, ex22)
    assert len(fams) == 3
    got = expand_binomials(fams)
    expected = sorted(
        [((2, i), (0, 4 + i)) for i in range(6)]
        + [((2, 6 + j), (0, j)) for j in range(4)]
        + [((k, 10), (k, 0)) for k in range(2)]
    )
    assert got == expected


def test_families_412_table(ex312):
    O = RectUnion([H1, H2])
    fams = border_families(O, ex312)
    # border images partition the border (bounded truncation check)
    bd = border(O)
    cover = RectUnion.empty(3)
    for fam in fams:
        piece = RectUnion([fam.params])  # border_map is the identity here
        assert fam.border_map.matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert cover.intersect(piece).is_empty()
        cover = cover.union(piece)
    assert cover == bd
    # per-point agreement with the one-shot representative solver
    rng = random.Random(12)
    for fam in fams:
        los = fam.params.lo
        his = [
            lo + 9 if hi == INF else hi for lo, hi in zip(los, fam.params.hi)
        ]
        for _ in range(12):
            t = tuple(rng.randint(lo, hi - 1) for lo, hi in zip(los, his))
            b = fam.border_map(t)
            r = fam.rep_map(t)
            assert representative_in(b, O, ex312) == r
            assert member(tuple(x - y for x, y in zip(b, r)), ex312)
            assert O.contains(r) and not O.contains(b)


def test_families_delta_in_lattice_sampled(ex312, ex22):
    cases = [
        (RectUnion([H1, H2]), ex312),
        (RectUnion([HyperRect((0, 0), (2, 10))]), ex22),
    ]
    rng = random.Random(77)
    for O, L in cases:
        count = 0
        for fam in border_families(O, L):
            los = fam.params.lo
            his = [
                lo + 8 if hi == INF else hi
                for lo, hi in zip(los, fam.params.hi)
            ]
            for _ in range(40):
                t = tuple(rng.randint(lo, hi - 1) for lo, hi in zip(los, his))
                assert member(fam.delta(t), L)
                count += 1
        assert count >= 100


def test_families_reject_non_max(ex22):
    with pytest.raises(ContractViolationError):
        border_families(RectUnion([HyperRect((0, 0), (1, 10))]), ex22)


def test_neighbor_consistency(ex22):
    # reductions of b+e_i and rep(b)+e_i coincide: reduction is well defined
    O = RectUnion([HyperRect((0, 0), (2, 10))])
    fams = border_families(O, ex22)
    bd = border(O)
    pairs = dict(expand_binomials(fams))
    for b, r in pairs.items():
        for i in range(2):
            e = tuple(int(j == i) for j in range(2))
            b2 = tuple(x + y for x, y in zip(b, e))
            if not bd.contains(b2):
                continue
            r2 = tuple(x + y for x, y in zip(r, e))
            lhs = pairs[b2]
            rhs = r2 if O.contains(r2) else pairs.get(r2, representative_in(r2, O, ex22))
            assert lhs == rhs


def test_realizable_rectangle(ex22):
    O = RectUnion([HyperRect((0, 0), (2, 10))])
    res = groebner_realizable(border_families(O, ex22))
    assert res.realizable and res.witness is not None
    # the derived example witness also passes
    for fam in border_families(O, ex22):
        d = fam.delta.offset
        assert 3 * d[0] + 1 * d[1] > 0


def test_not_realizable_counterexamples(z3x):
    O1 = RectUnion(
        [downset((1, 2, 0)), downset((2, 0, 1)), downset((0, 1, 2)), downset((1, 1, 1))]
    )
    O2 = RectUnion(
        [downset((3, 0, 0)), downset((0, 3, 0)), downset((0, 0, 3)), downset((1, 1, 1))]
    )
    for O in (O1, O2):
        assert is_max_compatible(O, z3x)
        res = groebner_realizable(border_families(O, z3x))
        assert not res.realizable
        assert res.certificate is not None
        lam, kap, strict_rows, recession_rows = res.certificate
        combo = [0] * 3
        for mult, row in list(zip(lam, strict_rows)) + list(
            zip(kap, recession_rows)
        ):
            for j in range(3):
                combo[j] += mult * row[j]
        assert all(x <= 0 for x in combo)
        assert any(lam) or any(x < 0 for x in combo)
    # the corner binomials force the contradiction for O1
    fams = border_families(O1, z3x)
    deltas = {f.delta.offset for f in fams if f.params.cardinality() == 1} | {
        f.delta(t) for f in fams for t in f.params.points()
    }
    assert {(3, -1, -2), (-2, 3, -1), (-1, -2, 3)} <= deltas


def test_infinite_families_realizable(ex312):
    O = RectUnion([H1, H2])
    res = groebner_realizable(border_families(O, ex312))
    # this ideal comes from a lex order, so weights exist
    assert res.realizable
    w = res.witness
    for fam in border_families(O, ex312):
        d0 = fam.delta.offset
        assert sum(a * b for a, b in zip(w, d0)) > 0


def test_counts_z3(z3x):
    _, _, ideals = maximal_order_ideals(z3x)
    mc = [I for I in ideals if is_max_compatible(I, z3x)]
    assert len(mc) == 35
    flags = [
        groebner_realizable(border_families(I, z3x)).realizable for I in mc
    ]
    assert flags.count(False) == 2
    assert flags.count(True) == 33
