"""Exact set algebra on finite unions of half-open integer boxes.

Points live in Z^n (usually N^n).  A HyperRect is a product of half-open
intervals [lo_j, hi_j) where hi_j may be +inf (and, for internal uses such
as image comparisons against the fundamental domain, lo_j may be -inf).
A RectUnion keeps a canonical decomposition of an arbitrary finite union:
slabs along coordinate 0 between breakpoints, each slab's cross-section
canonicalized recursively, adjacent slabs with equal cross-sections merged.
The canonical form depends only on the point set, so equality is structural.

Also here: the componentwise order on N^n, its down-sets D(u) and up-sets
C(u), lcm, antichain extraction, and the complement-of-cones construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

INF = math.inf

Vec = tuple[int, ...]


def leq(u, v) -> bool:
    """Componentwise order: u divides v on the monomial side."""
    return all(a <= b for a, b in zip(u, v))


def lcm(u, v) -> Vec:
    return tuple(max(a, b) for a, b in zip(u, v))


def minimal_elements(points) -> tuple[Vec, ...]:
    """The componentwise-minimal subset of a finite point set, deduplicated and sorted."""
    pts = sorted(set(tuple(p) for p in points))
    out = []
    for p in pts:
        if not any(leq(q, p) for q in out):
            out = [q for q in out if not leq(p, q)] + [p]
    return tuple(sorted(out))


def is_antichain(points) -> bool:
    pts = list(points)
    return not any(
        i != j and leq(pts[i], pts[j]) for i in range(len(pts)) for j in range(len(pts))
    )


def _key(x):
    # Sort key tolerating +-inf alongside ints without float conversion loss.
    if x == INF:
        return (1, 0)
    if x == -INF:
        return (-1, 0)
    return (0, x)


@dataclass(frozen=True)
class HyperRect:
    """Half-open box: points p with lo_j <= p_j < hi_j for every coordinate."""

    lo: tuple
    hi: tuple

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ValueError("lo/hi length mismatch")
        for a, b in zip(self.lo, self.hi):
            if not a < b:
                raise ValueError(f"empty or inverted bound [{a}, {b})")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def contains(self, p) -> bool:
        return all(a <= x < b for a, x, b in zip(self.lo, p, self.hi))

    def cardinality(self):
        card = 1
        for a, b in zip(self.lo, self.hi):
            if b == INF or a == -INF:
                return INF
            card *= b - a
        return card

    def shift(self, v) -> "HyperRect":
        lo = tuple(a if a == -INF else a + x for a, x in zip(self.lo, v))
        hi = tuple(b if b == INF else b + x for b, x in zip(self.hi, v))
        return HyperRect(lo, hi)

    def points(self):
        """All points of the box; requires finite bounds."""
        if self.cardinality() == INF:
            raise ValueError("cannot enumerate an infinite box")
        return list(product(*(range(a, b) for a, b in zip(self.lo, self.hi))))


def downset(u) -> HyperRect:
    """D(u): the finite box [0, u+1) of points below u."""
    return HyperRect(tuple(0 for _ in u), tuple(x + 1 for x in u))


def upset(u) -> HyperRect:
    """C(u): the box [u, inf) of points above u."""
    return HyperRect(tuple(u), tuple(INF for _ in u))


# Canonicalization works on raw (lo, hi) tuple pairs for speed.


def _canon(boxes, n):
    if not boxes:
        return []
    if n == 1:
        ivals = sorted(((lo[0], hi[0]) for lo, hi in boxes), key=lambda t: (_key(t[0]), _key(t[1])))
        merged = []
        for a, b in ivals:
            if merged and a <= merged[-1][1]:
                if b > merged[-1][1]:
                    merged[-1][1] = b
            else:
                merged.append([a, b])
        return [((a,), (b,)) for a, b in merged]

    cuts = sorted({lo[0] for lo, hi in boxes} | {hi[0] for lo, hi in boxes}, key=_key)
    slabs = []
    for a, b in zip(cuts, cuts[1:]):
        cross = [(lo[1:], hi[1:]) for lo, hi in boxes if lo[0] <= a and b <= hi[0]]
        if not cross:
            continue
        cross = _canon(cross, n - 1)
        if slabs and slabs[-1][1] == a and slabs[-1][2] == cross:
            slabs[-1] = (slabs[-1][0], b, cross)
        else:
            slabs.append((a, b, cross))
    out = []
    for a, b, cross in slabs:
        for lo, hi in cross:
            out.append(((a,) + lo, (b,) + hi))
    return out


def _isect(box1, box2):
    lo = tuple(max(a, c) for a, c in zip(box1[0], box2[0]))
    hi = tuple(min(b, d) for b, d in zip(box1[1], box2[1]))
    if all(a < b for a, b in zip(lo, hi)):
        return lo, hi
    return None


def _subtract_box(box, cut):
    """box minus cut as a list of disjoint boxes (coordinate sweep)."""
    if _isect(box, cut) is None:
        return [box]
    out = []
    lo, hi = list(box[0]), list(box[1])
    for j in range(len(lo)):
        a, b = lo[j], hi[j]
        ca, cb = cut[0][j], cut[1][j]
        if a < ca:
            left_lo, left_hi = lo.copy(), hi.copy()
            left_hi[j] = ca
            out.append((tuple(left_lo), tuple(left_hi)))
            lo[j] = ca
        if cb < b:
            right_lo, right_hi = lo.copy(), hi.copy()
            right_lo[j] = cb
            out.append((tuple(right_lo), tuple(right_hi)))
            hi[j] = cb
    return out


class RectUnion:
    """Canonical finite union of disjoint half-open boxes; immutable value type."""

    __slots__ = ("_rects", "_dim")

    def __init__(self, rects, dim=None, _canonical=False):
        rects = list(rects)
        if dim is None:
            if not rects:
                raise ValueError("dimension required for an empty union")
            dim = rects[0].dim
        raw = [(r.lo, r.hi) for r in rects]
        if not _canonical:
            raw = _canon(raw, dim) if raw else []
        self._rects = tuple(HyperRect(lo, hi) for lo, hi in raw)
        self._dim = dim

    @classmethod
    def empty(cls, dim) -> "RectUnion":
        return cls([], dim=dim)

    @classmethod
    def full(cls, dim) -> "RectUnion":
        """All of N^dim."""
        return cls([HyperRect((0,) * dim, (INF,) * dim)])

    @classmethod
    def of_points(cls, points, dim=None) -> "RectUnion":
        pts = list(points)
        if dim is None:
            dim = len(pts[0])
        one = tuple(1 for _ in range(dim))
        return cls(
            [HyperRect(tuple(p), tuple(x + 1 for x in p)) for p in pts], dim=dim
        )

    @property
    def rects(self) -> tuple[HyperRect, ...]:
        return self._rects

    @property
    def dim(self) -> int:
        return self._dim

    def is_empty(self) -> bool:
        return not self._rects

    def __eq__(self, other):
        return (
            isinstance(other, RectUnion)
            and self._dim == other._dim
            and self._rects == other._rects
        )

    def __hash__(self):
        return hash((self._dim, self._rects))

    def __repr__(self):
        body = ", ".join(f"[{r.lo}..{r.hi})" for r in self._rects)
        return f"RectUnion({body or 'empty'})"

    def union(self, other) -> "RectUnion":
        return RectUnion(self._rects + other._rects, dim=self._dim)

    def intersect(self, other) -> "RectUnion":
        out = []
        for r in self._rects:
            for s in other._rects:
                got = _isect((r.lo, r.hi), (s.lo, s.hi))
                if got is not None:
                    out.append(HyperRect(*got))
        return RectUnion(out, dim=self._dim)

    def subtract(self, other) -> "RectUnion":
        pieces = [(r.lo, r.hi) for r in self._rects]
        for s in other._rects:
            nxt = []
            for box in pieces:
                nxt.extend(_subtract_box(box, (s.lo, s.hi)))
            pieces = nxt
        return RectUnion([HyperRect(lo, hi) for lo, hi in pieces], dim=self._dim)

    def shift(self, v) -> "RectUnion":
        return RectUnion([r.shift(v) for r in self._rects], dim=self._dim)

    def clamp_nonnegative(self) -> "RectUnion":
        """Intersection with N^n (drops the part with any negative coordinate)."""
        return self.intersect(RectUnion.full(self._dim))

    def contains(self, p) -> bool:
        return any(r.contains(p) for r in self._rects)

    def cardinality(self):
        """Number of points, or math.inf."""
        total = 0
        for r in self._rects:
            c = r.cardinality()
            if c == INF:
                return INF
            total += c
        return total

    def points(self):
        """All points in sorted order; requires a finite union."""
        pts = []
        for r in self._rects:
            pts.extend(r.points())
        return sorted(pts)

    def lex_min(self) -> Vec:
        """Lexicographically least point (canonical form makes this the least rect lo)."""
        if not self._rects:
            raise ValueError("empty union has no points")
        return min((r.lo for r in self._rects), key=lambda lo: tuple(map(_key, lo)))

    def bounding_hi(self) -> tuple:
        return tuple(
            max(r.hi[j] for r in self._rects) if self._rects else 0
            for j in range(self._dim)
        )

    def truncate(self, hi) -> "RectUnion":
        """Intersection with the box [0, hi)."""
        return self.intersect(RectUnion([HyperRect((0,) * self._dim, tuple(hi))]))


def is_order_ideal(S: RectUnion) -> bool:
    """True iff S is downward closed: equal to the union of [0, hi) over its rects."""
    if S.is_empty():
        return True
    if any(a != 0 for r in S.rects for a in r.lo):
        closure = RectUnion(
            [HyperRect((0,) * S.dim, r.hi) for r in S.rects], dim=S.dim
        )
        return S == closure
    return True


def complement_of_cones(antichain, n: int) -> RectUnion:
    """N^n minus the union of up-sets C(a) over the antichain."""
    out = RectUnion.full(n)
    cones = RectUnion([upset(a) for a in antichain], dim=n) if antichain else None
    if cones is not None:
        out = out.subtract(cones)
    return out


def rect_union_to_json(S: RectUnion) -> dict:
    rects = []
    for r in S.rects:
        rects.append(
            {
                "lo": [int(a) for a in r.lo],
                "hi": [None if b == INF else int(b) for b in r.hi],
            }
        )
    return {"rects": rects}


def rect_union_from_json(obj, dim=None) -> RectUnion:
    """Parse {"rects": [{"lo": [...], "hi": [int-or-null, ...]}, ...]}."""
    if not isinstance(obj, dict) or "rects" not in obj:
        raise ValueError('rect union object needs field "rects"')
    rects = []
    for item in obj["rects"]:
        lo = item.get("lo")
        hi = item.get("hi")
        if not isinstance(lo, list) or not isinstance(hi, list) or len(lo) != len(hi):
            raise ValueError(f"malformed rect {item!r}")
        for x in lo:
            if type(x) is not int or x < 0:
                raise ValueError(f"lo entries must be naturals, got {x!r}")
        for x in hi:
            if x is not None and type(x) is not int:
                raise ValueError(f"hi entries must be int or null, got {x!r}")
        rects.append(
            HyperRect(tuple(lo), tuple(INF if x is None else x for x in hi))
        )
    if not rects and dim is None:
        raise ValueError("empty rect union needs explicit dimension")
    return RectUnion(rects, dim=dim)
