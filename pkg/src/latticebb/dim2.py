"""Closed-form pipeline for full-rank lattices in Z^2.

Two echelon forms of the same lattice, one per column order, pin the whole
picture: the mixed-sign minimal antichain B2 runs from (0, a3) down to
(b3, 0), consecutive antichain members span one maximal ideal each (a
difference of two rectangles with exactly a1*a3 points), and every such
ideal carries a reduced basis read off its two or three corners.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice_core import Lattice, LatticeInputError, RankError, member, rho
from .lattice_minimals import hilbert_basis_orthant
from .staircase import HyperRect, RectUnion, lcm, leq, upset

Vec = tuple[int, ...]


@dataclass(frozen=True)
class TwoHNF:
    """Echelon data (a1, a2 / 0, a3) and (b1, b2 / b3, 0) for one rank-2 lattice."""

    a1: int
    a2: int
    a3: int
    b1: int
    b2: int
    b3: int


@dataclass(frozen=True)
class CornerData:
    """Corners of the complement staircase and their in-ideal representatives.

    Two corners for rectangles, three when the ideal is a difference of
    rectangles; the third corner is a lattice point, so its representative
    is the origin and is not stored.
    """

    corners: tuple[Vec, ...]
    reps: tuple[Vec, ...]


@dataclass(frozen=True)
class Dim2Ideal:
    pair: tuple[Vec, Vec]
    points: RectUnion
    corner_data: CornerData
    groebner_basis: tuple[tuple[Vec, Vec], ...]


def _require_rank2(L: Lattice):
    if L.n != 2 or L.m != 2:
        raise RankError("this pipeline needs a rank-2 lattice in Z^2")


def second_hnf(L: Lattice) -> TwoHNF:
    """Both echelon forms; b2 = gcd(a2, a3), b3 = a1*a3/b2, b1 from the least
    nonnegative lambda with lambda*a2 = b2 modulo a3."""
    _require_rank2(L)
    a1, a2 = L.hnf[0]
    a3 = L.hnf[1][1]
    b2 = math.gcd(a2, a3)
    b3 = a1 * a3 // b2
    lam = pow(a2 // b2, -1, a3 // b2) % (a3 // b2) if a3 // b2 > 1 else 0
    b1 = a1 * lam
    out = TwoHNF(a1=a1, a2=a2, a3=a3, b1=b1, b2=b2, b3=b3)
    assert member((b1, b2), L) and member((b3, 0), L)
    return out


def compute_B2(L: Lattice) -> tuple[Vec, ...]:
    """Minimal points (p, q) with (p, -q) in the lattice, both coordinates counted >= 0."""
    _require_rank2(L)
    return hilbert_basis_orthant(L, (1, -1))


def consecutive_pairs(b2) -> tuple[tuple[Vec, Vec], ...]:
    """Pairs P, Q with no third antichain member below lcm(P, Q); sorted by first coordinate."""
    pts = sorted(b2)
    out = []
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            box = lcm(p, q)
            inside = [r for r in pts if leq(r, box)]
            if sorted(inside) == sorted([p, q]):
                out.append((p, q))
    return tuple(sorted(out))


def ideals_2d(L: Lattice) -> tuple[Dim2Ideal, ...]:
    """One maximal compatible ideal per consecutive pair, with corners and reduced basis."""
    _require_rank2(L)
    out = []
    for p, q in consecutive_pairs(compute_B2(L)):
        p1, p2 = p
        q1, q2 = q
        top = (q1, p2)
        r = (q1 - p1, p2 - q2)
        box = RectUnion([HyperRect((0, 0), top)])
        points = box.subtract(RectUnion([upset(r)]))
        a = (q1, 0)
        b = (0, p2)
        a_rep = (0, q2)
        b_rep = (p1, 0)
        three = r[0] < q1 and r[1] < p2
        corners = (a, b, r) if three else (a, b)
        gb = [(a, a_rep), (b, b_rep)]
        if three:
            gb.append((r, (0, 0)))
        assert points.contains(a_rep) and points.contains(b_rep)
        assert member((a[0] - a_rep[0], a[1] - a_rep[1]), L)
        assert member((b[0] - b_rep[0], b[1] - b_rep[1]), L)
        out.append(
            Dim2Ideal(
                pair=(p, q),
                points=points,
                corner_data=CornerData(corners=corners, reps=(a_rep, b_rep)),
                groebner_basis=tuple(gb),
            )
        )
    return tuple(out)
