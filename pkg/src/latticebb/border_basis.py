"""Borders of order ideals, border bases in finite terms, term-order realizability.

The border basis of a max-compatible ideal pairs every border point b with
its unique representative inside the ideal.  Border points are grouped
into parametrized binomial families: each refined border piece gets an
affine representative map, fitted from a few anchor evaluations and then
verified exactly (the difference stays in the lattice by construction; the
image is checked against the ideal's complement by integer feasibility, so
a passing family is proven correct, not sampled).  When every family's
difference vector Delta is constant, families are merged into the maximal
boxes of border intersect (ideal + Delta), which reproduces compact
reduction tables.

Realizability asks for a strictly positive weight vector scoring every
border exponent above its representative; with affine families this is a
finite exact LP: strict constraints at the bounded corners of each
parameter box plus nonnegativity along unbounded parameter directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .compatibility import (
    AffineFamily,
    AffineMap,
    ContractViolationError,
    _affine_range,
    _symbolic_reduce,
    is_max_compatible,
    representative_in,
)
from .feasibility import (
    UnboundedSearchError,
    integer_point,
    integer_witness,
    max_margin,
)
from .lattice_core import Lattice, hnf_coefficients
from .staircase import INF, HyperRect, RectUnion, _key

Vec = tuple[int, ...]

_MAX_SPLIT_DEPTH = 32


@dataclass(frozen=True)
class BinomialFamily:
    """A parametrized slice of a border basis: border exponent and its representative."""

    params: HyperRect
    border_map: AffineMap
    rep_map: AffineMap

    @property
    def delta(self) -> AffineMap:
        """border - representative; always a lattice vector at integer parameters."""
        return self.border_map.minus(self.rep_map)


@dataclass(frozen=True)
class RealizabilityResult:
    """Outcome of the weight-vector test.

    witness: primitive strictly positive integer weights when realizable.
    certificate: (lambdas, kappas, strict_rows, recession_rows) with
        nonnegative multipliers whose weighted row sum is <= 0
        componentwise, refuting any positive weight vector.
    """

    realizable: bool
    witness: Vec | None
    margin: Fraction
    certificate: tuple | None


def border(O: RectUnion) -> RectUnion:
    """Points outside O reachable from O by one unit step: (union of O+e_i) minus O."""
    n = O.dim
    shifted = []
    for i in range(n):
        e = tuple(int(j == i) for j in range(n))
        shifted.extend(r.shift(e) for r in O.rects)
    if not shifted:
        return RectUnion.empty(n)
    return RectUnion(shifted, dim=n).subtract(O)


def _delta_from_coeff_map(c_matrix, c_offset, L: Lattice) -> AffineMap:
    """Compose HNF-row coefficients (affine in params) into the lattice offset map."""
    nparams = len(c_matrix[0]) if c_matrix else 0
    matrix = []
    offset = []
    for j in range(L.n):
        row = [
            sum(c_matrix[r][k] * L.hnf[r][j] for r in range(L.m))
            for k in range(nparams)
        ]
        matrix.append(tuple(row))
        offset.append(sum(c_offset[r] * L.hnf[r][j] for r in range(L.m)))
    return AffineMap(matrix=tuple(matrix), offset=tuple(offset))


def _fit_rep_map(piece: AffineFamily, O: RectUnion, L: Lattice) -> AffineMap:
    """Affine representative map from anchor evaluations at the box corner."""
    t0 = piece.params.lo
    nparams = len(t0)
    b0 = piece.source_map(t0)
    r0 = representative_in(b0, O, L)
    c0 = hnf_coefficients(tuple(a - b for a, b in zip(b0, r0)), L)
    cols = []
    for k in range(nparams):
        hi = piece.params.hi[k]
        if hi != INF and hi - t0[k] <= 1:
            cols.append((0,) * L.m)
            continue
        tk = tuple(x + int(i == k) for i, x in enumerate(t0))
        bk = piece.source_map(tk)
        rk = representative_in(bk, O, L)
        ck = hnf_coefficients(tuple(a - b for a, b in zip(bk, rk)), L)
        cols.append(tuple(a - b for a, b in zip(ck, c0)))
    c_matrix = tuple(
        tuple(cols[k][r] for k in range(nparams)) for r in range(L.m)
    )
    c_offset = tuple(
        c0[r] - sum(cols[k][r] * t0[k] for k in range(nparams))
        for r in range(L.m)
    )
    delta = _delta_from_coeff_map(c_matrix, c_offset, L)
    return piece.source_map.minus(delta)


_UNKNOWN = object()


def _negativity_witness(row, off, bounds):
    """A parameter point where the affine form goes negative, or None."""
    t = []
    val = off
    unbounded_neg = []
    for k, (cf, (lo, hi)) in enumerate(zip(row, bounds)):
        if cf >= 0:
            t.append(lo)
            val += cf * lo
        elif hi == INF:
            t.append(lo)
            val += cf * lo
            unbounded_neg.append((k, cf))
        else:
            t.append(hi - 1)
            val += cf * (hi - 1)
    if val < 0:
        return tuple(t)
    for k, cf in unbounded_neg:
        t2 = list(t)
        t2[k] += -((val + 1) // cf)
        return tuple(t2)
    return None


def _verify_rep_map(params: HyperRect, rep_map: AffineMap, complement: RectUnion, L: Lattice):
    """Prove rep(t) lies in the ideal for every parameter point.

    Nonnegativity by affine range analysis, then emptiness of the preimage
    of every complement box by exact integer feasibility.  Returns None on
    success, a violating parameter point on failure (or an opaque marker
    when no concrete point is available).
    """
    bounds = list(zip(params.lo, params.hi))
    nparams = len(bounds)
    for j in range(L.n):
        witness = _negativity_witness(rep_map.matrix[j], rep_map.offset[j], bounds)
        if witness is not None:
            return witness
    box_rows = []
    for k, (lo, hi) in enumerate(bounds):
        unit = tuple(int(i == k) for i in range(nparams))
        box_rows.append((unit, lo))
        if hi != INF:
            box_rows.append((tuple(-x for x in unit), -(hi - 1)))
    for crect in complement.rects:
        pairs = list(box_rows)
        for j in range(L.n):
            row = rep_map.matrix[j]
            off = rep_map.offset[j]
            pairs.append((row, crect.lo[j] - off))
            if crect.hi[j] != INF:
                pairs.append((tuple(-x for x in row), -(crect.hi[j] - 1 - off)))
        try:
            got = integer_point(pairs, nparams)
        except UnboundedSearchError:
            return _UNKNOWN
        if got is not None:
            return got
    return None


def _split_params(params: HyperRect):
    """Halve the widest bounded direction, or cut a first slice off an unbounded one."""
    widths = []
    for k, (lo, hi) in enumerate(zip(params.lo, params.hi)):
        widths.append((hi - lo if hi != INF else INF, k))
    width, k = max(widths)
    if width <= 1:
        return None
    lo, hi = params.lo[k], params.hi[k]
    mid = lo + 2 if hi == INF else lo + (hi - lo) // 2
    first = HyperRect(
        params.lo, tuple(mid if i == k else h for i, h in enumerate(params.hi))
    )
    second = HyperRect(
        tuple(mid if i == k else l for i, l in enumerate(params.lo)), params.hi
    )
    return first, second


def _families_for_piece(piece, O, complement, L, depth) -> list[BinomialFamily]:
    rep_map = _fit_rep_map(piece, O, L)
    bad = _verify_rep_map(piece.params, rep_map, complement, L)
    if bad is None:
        return [
            BinomialFamily(
                params=piece.params, border_map=piece.source_map, rep_map=rep_map
            )
        ]
    if depth >= _MAX_SPLIT_DEPTH:
        raise ContractViolationError(
            "could not fit an affine representative map on a border piece"
        )
    split = None
    if bad is not _UNKNOWN:
        # cut the box right at the violating point: the fit is exact at the
        # low corner, so the violation marks a branch boundary on its axis
        lo, hi = piece.params.lo, piece.params.hi
        cuts = [k for k in range(len(lo)) if bad[k] > lo[k]]
        if cuts:
            k = min(cuts, key=lambda i: bad[i] - lo[i])
            first = HyperRect(
                lo, tuple(bad[k] if i == k else h for i, h in enumerate(hi))
            )
            second = HyperRect(
                tuple(bad[k] if i == k else l for i, l in enumerate(lo)), hi
            )
            split = (first, second)
    if split is None:
        split = _split_params(piece.params)
    if split is None:
        raise ContractViolationError(
            "representative map is not affine on a single border point"
        )
    out = []
    for sub in split:
        out.extend(
            _families_for_piece(
                AffineFamily(sub, piece.point_map, piece.source_map),
                O,
                complement,
                L,
                depth + 1,
            )
        )
    return out


def _family_sort_key(fam: BinomialFamily):
    return (
        tuple(map(_key, fam.params.lo)),
        tuple(map(_key, fam.params.hi)),
        fam.border_map.offset,
        fam.rep_map.offset,
    )


def border_families(O: RectUnion, L: Lattice) -> tuple[BinomialFamily, ...]:
    """The border basis of a max-compatible ideal as finitely many binomial families.

    Family border images partition the border exactly.  Raises
    ContractViolationError when O is not max-compatible.
    """
    if not is_max_compatible(O, L):
        raise ContractViolationError("ideal is not max-compatible")
    bd = border(O)
    complement = RectUnion.full(L.n).subtract(O)
    raw: list[BinomialFamily] = []
    for rect in bd.rects:
        for piece in _symbolic_reduce(rect, L):
            raw.extend(_families_for_piece(piece, O, complement, L, depth=0))

    deltas = set()
    all_constant = True
    for fam in raw:
        dm = fam.delta
        if any(any(x != 0 for x in row) for row in dm.matrix):
            all_constant = False
            break
        deltas.add(dm.offset)

    if all_constant:
        merged = []
        covered = RectUnion.empty(L.n)
        disjoint = True
        for dlt in sorted(deltas):
            region = bd.intersect(O.shift(dlt))
            if region.is_empty():
                continue
            if not covered.intersect(region).is_empty():
                disjoint = False
                break
            covered = covered.union(region)
            ident = AffineMap.identity(L.n)
            rep = AffineMap(ident.matrix, tuple(-x for x in dlt))
            for rect in region.rects:
                merged.append(
                    BinomialFamily(params=rect, border_map=ident, rep_map=rep)
                )
        if disjoint and covered == bd:
            return tuple(sorted(merged, key=_family_sort_key))

    return tuple(sorted(raw, key=_family_sort_key))


def expand_binomials(families) -> list[tuple[Vec, Vec]]:
    """All (border, representative) pairs of finite families, sorted; for finite ideals."""
    out = set()
    for fam in families:
        for t in fam.params.points():
            out.add((fam.border_map(t), fam.rep_map(t)))
    return sorted(out)


def groebner_realizable(families) -> RealizabilityResult:
    """Can these border binomials come from a term order?

    Realizable iff some strictly positive rational weight vector w has
    w . (border - rep) > 0 over every family and parameter point; reduced
    to strict constraints at bounded corners plus recession constraints,
    and decided by exact rational margin maximization.  Witnesses and
    non-realizability certificates are re-verified exactly before return.
    """
    families = list(families)
    if not families:
        raise ValueError("no border families given")
    n = families[0].border_map.n_out
    strict: set[Vec] = set()
    recession: set[Vec] = set()
    for fam in families:
        delta = fam.delta
        lo, hi = fam.params.lo, fam.params.hi
        bounded = [k for k in range(len(lo)) if hi[k] != INF]
        for combo in product(*(((lo[k], hi[k] - 1)) for k in bounded)):
            t = list(lo)
            for k, val in zip(bounded, combo):
                t[k] = val
            row = delta(t)
            assert any(row), "zero binomial in a border family"
            strict.add(row)
        for k in range(len(lo)):
            if hi[k] == INF:
                col = delta.column(k)
                if any(col):
                    recession.add(col)

    strict_rows = sorted(strict)
    recession_rows = sorted(recession)
    sup, witness, cert = max_margin(strict_rows, recession_rows, n)

    if sup > 0:
        w = integer_witness(witness)
        assert all(x > 0 for x in w)
        assert all(sum(a * b for a, b in zip(w, row)) > 0 for row in strict_rows)
        assert all(sum(a * b for a, b in zip(w, row)) >= 0 for row in recession_rows)
        return RealizabilityResult(
            realizable=True, witness=w, margin=sup, certificate=None
        )

    lam, kap = cert
    assert all(x >= 0 for x in lam) and all(x >= 0 for x in kap)
    combo = [Fraction(0)] * n
    for mult, row in list(zip(lam, strict_rows)) + list(zip(kap, recession_rows)):
        for j in range(n):
            combo[j] += mult * row[j]
    assert all(x <= 0 for x in combo)
    assert any(x > 0 for x in lam) or any(x < 0 for x in combo)
    return RealizabilityResult(
        realizable=False,
        witness=None,
        margin=sup,
        certificate=(lam, kap, tuple(strict_rows), tuple(recession_rows)),
    )
