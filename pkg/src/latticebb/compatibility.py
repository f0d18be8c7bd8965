"""Reduction images of boxes, the max-compatibility test, and in-ideal representatives.

Reducing a half-open box through the HNF rows symbolically: the box's
coordinates become integer parameters, and each division step needs its
quotient to be an affine function of the parameters.  Parameters whose
coefficient is not divisible by the pivot are split, either into segments
on which the quotient is constant (bounded, single-parameter forms) or
into residue classes modulo pivot/gcd (which introduces a quotient
parameter).  The result is a finite list of parametrized affine families
whose images partition the reduction image of the box.

Max-compatibility (does the ideal hit every class of Z^n modulo M?) is a
cardinality check at full rank; below full rank the family images are
compared classwise against the fundamental domain: for each assignment of
the bounded pivot coordinates, the free-coordinate sets, built as exact
unions of shifted boxes over Z, must cover all of Z^(n-m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .feasibility import UnboundedSearchError, integer_point
from .lattice_core import Lattice
from .staircase import INF, HyperRect, RectUnion, is_order_ideal

Vec = tuple[int, ...]

_MAX_PIECES = 20000
_MAX_ENUM = 4096


class ContractViolationError(RuntimeError):
    """A caller-supplied object violates its contract (e.g. ideal not max-compatible)."""


class UnsupportedGeometryError(RuntimeError):
    """An image set is not a finite union of boxes; out of scope at desk scale."""


@dataclass(frozen=True)
class AffineMap:
    """Integer affine map t -> offset + matrix . t (one matrix row per output coordinate)."""

    matrix: tuple[tuple[int, ...], ...]
    offset: Vec

    def __call__(self, t) -> Vec:
        return tuple(
            o + sum(c * x for c, x in zip(row, t))
            for row, o in zip(self.matrix, self.offset)
        )

    @property
    def n_out(self) -> int:
        return len(self.offset)

    @property
    def n_params(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def minus(self, other: "AffineMap") -> "AffineMap":
        return AffineMap(
            matrix=tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.matrix, other.matrix)
            ),
            offset=tuple(a - b for a, b in zip(self.offset, other.offset)),
        )

    def column(self, k) -> Vec:
        return tuple(row[k] for row in self.matrix)

    @classmethod
    def identity(cls, n) -> "AffineMap":
        return cls(
            matrix=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)),
            offset=(0,) * n,
        )


@dataclass(frozen=True)
class AffineFamily:
    """A parametrized piece of a reduction image.

    point_map sends each integer point of the parameter box to an image
    point; source_map sends it to the pre-image inside the reduced box.
    """

    params: HyperRect
    point_map: AffineMap
    source_map: AffineMap


def _ceil_div(p, q):
    return -((-p) // q)


def _affine_range(coeffs, const, bounds):
    """Exact [min, max] of const + coeffs . t over the parameter box (inf allowed)."""
    mn = mx = const
    for cf, (lo, hi) in zip(coeffs, bounds):
        if cf == 0:
            continue
        top = hi - 1 if hi != INF else INF
        if cf > 0:
            mn += cf * lo
            mx = INF if (top == INF or mx == INF) else mx + cf * top
        else:
            mn = -INF if (top == INF or mn == -INF) else mn + cf * top
            mx += cf * lo
    return mn, mx


def _subst_rows(rows, k, mu, j):
    """Substitute parameter k := mu * s + j in a list of (coeffs, const) rows."""
    out = []
    for coeffs, const in rows:
        cf = coeffs[k]
        if cf == 0:
            out.append((coeffs.copy(), const))
        else:
            nc = coeffs.copy()
            nc[k] = mu * cf
            out.append((nc, const + j * cf))
    return out


def _subtract_row_multiple(rows, hrow, q_coeffs, q_const):
    for i, h in enumerate(hrow):
        if h == 0:
            continue
        coeffs, const = rows[i]
        rows[i] = (
            [a - h * qc for a, qc in zip(coeffs, q_coeffs)],
            const - h * q_const,
        )


def _copy_rows(rows):
    return [(coeffs.copy(), const) for coeffs, const in rows]


def _symbolic_reduce(rect: HyperRect, L: Lattice) -> list[AffineFamily]:
    n = L.n
    bounds0 = [(rect.lo[j], rect.hi[j]) for j in range(n)]
    ident = [([int(i == j) for j in range(n)], 0) for i in range(n)]
    pieces = [(bounds0, _copy_rows(ident), _copy_rows(ident))]

    for r in range(L.m):
        c = L.pivot_cols[r]
        d = L.pivots[r]
        hrow = L.hnf[r]
        done = []
        stack = pieces
        while stack:
            if len(stack) + len(done) > _MAX_PIECES:
                raise UnsupportedGeometryError("reduction split blow-up")
            bounds, src, cur = stack.pop()
            coeffs, const = cur[c]
            mn, mx = _affine_range(coeffs, const, bounds)
            if mn != -INF and mx != INF and mn // d == mx // d:
                _subtract_row_multiple(cur, hrow, [0] * len(coeffs), mn // d)
                done.append((bounds, src, cur))
                continue
            nondiv = [k for k, cf in enumerate(coeffs) if cf % d != 0]
            if not nondiv:
                qc = [cf // d for cf in coeffs]
                _subtract_row_multiple(cur, hrow, qc, const // d)
                done.append((bounds, src, cur))
                continue
            k = nondiv[0]
            lo, hi = bounds[k]
            cf = coeffs[k]
            mu = d // math.gcd(abs(cf), d)
            only_param = sum(1 for x in coeffs if x != 0) == 1
            if only_param and hi != INF:
                qlo = (const + cf * lo) // d
                qhi = (const + cf * (hi - 1)) // d
                if qlo > qhi:
                    qlo, qhi = qhi, qlo
                if qhi - qlo + 1 <= mu:
                    for q in range(qlo, qhi + 1):
                        if cf > 0:
                            t_lo = _ceil_div(q * d - const, cf)
                            t_hi = (q * d + d - 1 - const) // cf
                        else:
                            t_lo = _ceil_div(q * d + d - 1 - const, cf)
                            t_hi = (q * d - const) // cf
                        t_lo = max(t_lo, lo)
                        t_hi = min(t_hi, hi - 1)
                        if t_lo > t_hi:
                            continue
                        nb = bounds.copy()
                        nb[k] = (t_lo, t_hi + 1)
                        stack.append((nb, _copy_rows(src), _copy_rows(cur)))
                    continue
            for j in range(mu):
                s_lo = _ceil_div(lo - j, mu)
                s_hi = INF if hi == INF else _ceil_div(hi - j, mu)
                if s_hi != INF and s_lo >= s_hi:
                    continue
                nb = bounds.copy()
                nb[k] = (s_lo, s_hi)
                stack.append(
                    (nb, _subst_rows(src, k, mu, j), _subst_rows(cur, k, mu, j))
                )
        pieces = done

    out = []
    for bounds, src, cur in pieces:
        params = HyperRect(tuple(b[0] for b in bounds), tuple(b[1] for b in bounds))
        out.append(
            AffineFamily(
                params=params,
                point_map=AffineMap(
                    matrix=tuple(tuple(cf for cf in coeffs) for coeffs, _ in cur),
                    offset=tuple(const for _, const in cur),
                ),
                source_map=AffineMap(
                    matrix=tuple(tuple(cf for cf in coeffs) for coeffs, _ in src),
                    offset=tuple(const for _, const in src),
                ),
            )
        )
    out.sort(key=lambda f: (f.params.lo, f.point_map.offset))
    return out


def rho_image(rect: HyperRect, L: Lattice) -> list[AffineFamily]:
    """Decompose the reduction image of a box in N^n into affine families.

    The family images are pairwise disjoint whenever the box contains no
    two equivalent points (always true for boxes of a compatible ideal).
    """
    if any(a < 0 for a in rect.lo):
        raise ValueError("box must lie in N^n")
    return _symbolic_reduce(rect, L)


def _absorb(box: HyperRect, v, count):
    """Replace the translate union box + [0, count)*v by one box, or None if inexact.

    Exact when v moves a single coordinate whose width is at least |step|:
    consecutive translates then overlap into one half-open interval.
    """
    nz = [i for i, x in enumerate(v) if x != 0]
    if not nz or count == 1:
        return box
    if len(nz) != 1:
        return None
    i = nz[0]
    step = v[i]
    if box.hi[i] - box.lo[i] < abs(step):
        return None
    lo, hi = list(box.lo), list(box.hi)
    if step > 0:
        hi[i] = INF if (count == INF or hi[i] == INF) else hi[i] + (count - 1) * step
    else:
        lo[i] = -INF if (count == INF or lo[i] == -INF) else lo[i] + (count - 1) * step
    return HyperRect(tuple(lo), tuple(hi))


def _family_pieces(fam: AffineFamily, L: Lattice):
    """Split a family into (pivot pattern, free-coordinate box, leftover strides).

    Bounded parameters feeding the pivot coordinates are enumerated; each
    free coordinate contributes a box direction.  Remaining parameters act
    as translations of the box by multiples of a stride vector; strides are
    absorbed into the box when the union telescopes exactly, expanded when
    short, and otherwise reported as leftovers (infinite count, gap-leaving)
    for the caller's periodic analysis.
    """
    mat = fam.point_map.matrix
    off = fam.point_map.offset
    bounds = list(zip(fam.params.lo, fam.params.hi))
    nparams = len(bounds)
    free_cols = L.free_cols

    enum_params = sorted(
        {k for c in L.pivot_cols for k in range(nparams) if mat[c][k] != 0}
    )
    total = 1
    for k in enum_params:
        lo, hi = bounds[k]
        if hi == INF:
            raise UnsupportedGeometryError(
                "pivot coordinate depends on an unbounded parameter"
            )
        total *= hi - lo
        if total > _MAX_ENUM:
            raise UnsupportedGeometryError("pivot pattern enumeration blow-up")

    box_param = {}
    shifts = []
    for k in range(nparams):
        if k in enum_params:
            continue
        col = tuple(mat[f][k] for f in free_cols)
        if all(x == 0 for x in col):
            continue
        claimed = next(
            (
                f_idx
                for f_idx, x in enumerate(col)
                if x == 1
                and all(y == 0 for j, y in enumerate(col) if j != f_idx)
                and f_idx not in box_param
            ),
            None,
        )
        if claimed is not None:
            box_param[claimed] = k
        else:
            shifts.append((k, col))

    out = []
    ranges = [range(bounds[k][0], bounds[k][1]) for k in enum_params]
    for combo in product(*ranges):
        assign = dict(zip(enum_params, combo))
        pattern = tuple(
            off[c] + sum(mat[c][k] * assign[k] for k in enum_params)
            for c in L.pivot_cols
        )
        lo_f, hi_f = [], []
        for f_idx, f in enumerate(free_cols):
            base = off[f] + sum(mat[f][k] * assign[k] for k in enum_params)
            if f_idx in box_param:
                blo, bhi = bounds[box_param[f_idx]]
                lo_f.append(base + blo)
                hi_f.append(INF if bhi == INF else base + bhi)
            else:
                lo_f.append(base)
                hi_f.append(base + 1)
        boxes = [HyperRect(tuple(lo_f), tuple(hi_f))]
        leftovers = []
        for k, v in shifts:
            blo, bhi = bounds[k]
            count = INF if bhi == INF else bhi - blo
            boxes = [b.shift(tuple(x * blo for x in v)) for b in boxes]
            if count == 1:
                continue
            absorbed = [_absorb(b, v, count) for b in boxes]
            if all(b is not None for b in absorbed):
                boxes = absorbed
            elif count != INF and count * len(boxes) <= 512:
                boxes = [
                    b.shift(tuple(x * j for x in v))
                    for b in boxes
                    for j in range(count)
                ]
            else:
                leftovers.append(tuple(v))
        for b in boxes:
            out.append((pattern, b, tuple(leftovers)))
    return out


def _covers_line(plain, strided) -> bool:
    """Does a union of intervals and descending/ascending strided interval
    families cover all of Z?

    plain: 1-dim boxes.  strided: (lo, hi, step) with hi - lo < |step|, one
    translate per nonnegative multiple of step.  Work modulo the lcm of the
    steps: on each residue class every piece traces an interval or a
    half-line, so coverage reduces to interval algebra.
    """
    if not strided:
        return RectUnion(plain, dim=1) == RectUnion(
            [HyperRect((-INF,), (INF,))]
        )
    period = 1
    for _, _, step in strided:
        g = abs(step)
        period = period * g // math.gcd(period, g)
    full_t = RectUnion([HyperRect((-INF,), (INF,))])
    for r in range(period):
        cover = []
        for box in plain:
            lo, hi = box.lo[0], box.hi[0]
            tlo = -INF if lo == -INF else _ceil_div(lo - r, period)
            thi = INF if hi == INF else _ceil_div(hi - r, period)
            if tlo < thi:
                cover.append(HyperRect((tlo,), (thi,)))
        for lo, hi, step in strided:
            g = abs(step)
            i = lo + ((r - lo) % g)
            if i >= hi:
                continue
            m0 = ((r - i) // step) % (period // g)
            x0 = i + m0 * step
            t0 = (x0 - r) // period
            if step > 0:
                cover.append(HyperRect((t0,), (INF,)))
            else:
                cover.append(HyperRect((-INF,), (t0 + 1,)))
        if RectUnion(cover, dim=1) != full_t:
            return False
    return True


def reduction_image(source, L: Lattice) -> dict:
    """Image of a box or union under the reduction map, grouped by pivot pattern.

    Returns {pattern over pivot columns: RectUnion over the free
    coordinates (over Z, lower bounds may be -inf)}.  Raises
    UnsupportedGeometryError when some image is not a finite union of
    boxes; a full-rank lattice yields one singleton set per class hit.
    """
    rects = source.rects if isinstance(source, RectUnion) else [source]
    agg: dict[tuple, list] = {}
    for rect in rects:
        for fam in _symbolic_reduce(rect, L):
            for pattern, box, leftovers in _family_pieces(fam, L):
                if leftovers:
                    raise UnsupportedGeometryError(
                        "image of a box is not a finite union of boxes"
                    )
                agg.setdefault(pattern, []).append(box)
    kfree = L.n - L.m
    return {
        pattern: RectUnion(boxes, dim=kfree) for pattern, boxes in sorted(agg.items())
    }


def is_max_compatible(O: RectUnion, L: Lattice) -> bool:
    """Does the compatible order ideal represent every class of Z^n modulo M?

    Full rank: compare the cardinality with the pivot product.  Lower rank:
    compare reduction images classwise against the fundamental domain,
    whose only unbounded directions are the free coordinates.
    Raises ContractViolationError when O is not downward closed.
    """
    if O.dim != L.n:
        raise ContractViolationError("ideal dimension does not match the lattice")
    if not is_order_ideal(O):
        raise ContractViolationError("point set is not an order ideal")
    if L.m == L.n:
        return O.cardinality() == L.determinant

    kfree = L.n - L.m
    plain: dict[tuple, list] = {}
    strided: dict[tuple, list] = {}
    for rect in O.rects:
        for fam in _symbolic_reduce(rect, L):
            for pattern, box, leftovers in _family_pieces(fam, L):
                if not leftovers:
                    plain.setdefault(pattern, []).append(box)
                    continue
                if kfree != 1 or len(leftovers) != 1:
                    raise UnsupportedGeometryError(
                        "gapped image strides beyond the one-dimensional case"
                    )
                step = leftovers[0][0]
                strided.setdefault(pattern, []).append(
                    (box.lo[0], box.hi[0], step)
                )

    full = RectUnion([HyperRect((-INF,) * kfree, (INF,) * kfree)])
    for pattern in product(*(range(d) for d in L.pivots)):
        boxes = plain.get(pattern, [])
        runs = strided.get(pattern, [])
        if kfree == 1:
            if not _covers_line(boxes, runs):
                return False
        else:
            if not boxes or RectUnion(boxes, dim=kfree) != full:
                return False
    return True


def representative_in(z, O: RectUnion, L: Lattice) -> Vec:
    """The unique point of the max-compatible ideal O congruent to z modulo M.

    Solves, rect by rect, the integer feasibility problem
    {b in rect, b - z in M} over the HNF-row coefficients.
    """
    if len(z) != L.n:
        raise ContractViolationError("vector dimension mismatch")
    for rect in O.rects:
        pairs = []
        for j in range(L.n):
            col = tuple(L.hnf[r][j] for r in range(L.m))
            pairs.append((col, rect.lo[j] - z[j]))
            if rect.hi[j] != INF:
                pairs.append((tuple(-x for x in col), -(rect.hi[j] - 1 - z[j])))
        try:
            t = integer_point(pairs, L.m)
        except UnboundedSearchError as e:
            raise ContractViolationError(
                "infinitely many representatives; the ideal is not compatible"
            ) from e
        if t is not None:
            return tuple(
                z[j] + sum(t[r] * L.hnf[r][j] for r in range(L.m))
                for j in range(L.n)
            )
    raise ContractViolationError(
        "no representative in the ideal; it is not max-compatible"
    )
