"""Exact rational linear feasibility via Fourier-Motzkin elimination.

Rows encode constraints a . x >= b over a handful of variables, with all
arithmetic in Fractions (no tolerances anywhere).  Three clients:

* integer_point: find an integer solution of a small system (coset meets
  box problems); enumerates a variable whose exact rational projection is
  a bounded interval, recursing on the rest.
* max_margin: maximize s subject to a . w >= s for strict rows, b . w >= 0
  for recession rows and w_j >= s, s <= 1; the term-order realizability
  test.  Multipliers are tracked through every combination, so an
  infeasibility (margin <= 0) comes with an exact nonnegative-combination
  certificate.
"""

from __future__ import annotations

import math
from fractions import Fraction

INF = math.inf


class UnboundedSearchError(RuntimeError):
    """Every variable's rational projection is unbounded; enumeration impossible."""


def _scaled(row):
    """Normalize (a, b, mult) so a is a primitive integer vector."""
    a, b, mult = row
    den = 1
    for x in a:
        if isinstance(x, Fraction):
            den = den * x.denominator // math.gcd(den, x.denominator)
    if isinstance(b, Fraction):
        den = den * b.denominator // math.gcd(den, b.denominator)
    a = tuple(int(x * den) for x in a)
    b = b * den
    if den != 1:
        mult = tuple(m * den for m in mult)
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
    if g > 1:
        a = tuple(x // g for x in a)
        b = Fraction(b, g)
        mult = tuple(m / g for m in mult)
    return a, Fraction(b), mult


def make_rows(pairs, track=False):
    """Build rows from (coeffs, rhs) pairs; with track=True attach unit multipliers."""
    rows = []
    k = len(pairs)
    for i, (a, b) in enumerate(pairs):
        mult = tuple(Fraction(int(i == j)) for j in range(k)) if track else ()
        rows.append(_scaled((tuple(a), Fraction(b), mult)))
    return rows


def _dedup(rows):
    best = {}
    for a, b, mult in rows:
        if all(x == 0 for x in a):
            if b <= 0:
                continue
        prev = best.get(a)
        if prev is None or b > prev[0]:
            best[a] = (b, mult)
    return [(a, b, mult) for a, (b, mult) in best.items()]


def eliminate(rows, var):
    """Fourier-Motzkin step removing one variable, combining bound pairs."""
    pos, neg, rest = [], [], []
    for row in rows:
        c = row[0][var]
        if c > 0:
            pos.append(row)
        elif c < 0:
            neg.append(row)
        else:
            rest.append(row)
    out = list(rest)
    for ap, bp, mp in pos:
        cp = ap[var]
        for an, bn, mn in neg:
            cn = -an[var]
            a = tuple(
                Fraction(x, cp) + Fraction(y, cn) for x, y in zip(ap, an)
            )
            b = Fraction(bp, cp) + Fraction(bn, cn)
            mult = tuple(
                x / cp + y / cn for x, y in zip(mp, mn)
            ) if mp or mn else ()
            out.append(_scaled((a, b, mult)))
    return _dedup(out)


def _feasible_const(rows):
    for a, b, _ in rows:
        if all(x == 0 for x in a) and b > 0:
            return False
    return True


def projection_interval(rows, var, nvars):
    """Exact rational projection of the solution set onto one variable.

    Returns (feasible, lo, hi) where lo may be -inf and hi may be +inf.
    """
    cur = rows
    for j in range(nvars):
        if j == var:
            continue
        cur = eliminate(cur, j)
        if not _feasible_const(cur):
            return False, None, None
    lo, hi = -INF, INF
    for a, b, _ in cur:
        c = a[var]
        if c > 0:
            lo = max(lo, Fraction(b, c)) if lo != -INF else Fraction(b, c)
        elif c < 0:
            bound = Fraction(b, c)
            hi = min(hi, bound) if hi != INF else bound
        elif b > 0:
            return False, None, None
    if lo != -INF and hi != INF and lo > hi:
        return False, None, None
    return True, lo, hi


def _substitute(rows, var, value):
    out = []
    for a, b, mult in rows:
        c = a[var]
        if c == 0:
            out.append((a, b, mult))
        else:
            a2 = tuple(0 if j == var else x for j, x in enumerate(a))
            out.append((a2, b - c * value, mult))
    return _dedup(out)


def integer_point(pairs, nvars):
    """An integer solution of {a . x >= b}, or None.

    Raises UnboundedSearchError if no variable has a bounded rational
    projection (the polyhedron then contains an integer ray, so it has
    either no integer point or infinitely many).
    """
    rows = make_rows(pairs)
    return _integer_point(rows, list(range(nvars)), [None] * nvars)


def _integer_point(rows, free, partial):
    if not _feasible_const(rows):
        return None
    if not free:
        return tuple(partial)
    nvars = len(partial)
    if len(free) == 1:
        # one variable left: its exact projection interval settles existence
        var = free[0]
        ok, lo, hi = projection_interval(rows, var, nvars)
        if not ok:
            return None
        ilo = None if lo == -INF else math.ceil(lo)
        ihi = None if hi == INF else math.floor(hi)
        if ilo is not None and ihi is not None and ilo > ihi:
            return None
        partial[var] = ilo if ilo is not None else (ihi if ihi is not None else 0)
        return tuple(partial)
    best = None
    for var in free:
        ok, lo, hi = projection_interval(rows, var, nvars)
        if not ok:
            return None
        if lo != -INF and hi != INF:
            width = hi - lo
            if best is None or width < best[1]:
                best = (var, width, lo, hi)
    if best is None:
        raise UnboundedSearchError(
            "solution polyhedron unbounded in every variable"
        )
    var, _, lo, hi = best
    rest = [v for v in free if v != var]
    for value in range(math.ceil(lo), math.floor(hi) + 1):
        sub = _substitute(rows, var, value)
        partial[var] = value
        got = _integer_point(sub, rest, partial)
        if got is not None:
            return got
        partial[var] = None
    return None


def max_margin(strict_rows, recession_rows, n):
    """Maximize the margin s of a strictly positive weight vector.

    Variables are w_0..w_{n-1} and s; constraints a . w >= s for every
    strict row, b . w >= 0 for recession rows, w_j >= s, and s <= 1 as a
    scale cap.  Returns (sup, witness, certificate):

    * sup: the exact rational maximum of s (always finite, system never
      infeasible since s may go to -inf).
    * witness: a rational w with every strict constraint >= sup, present
      when sup > 0, else None.
    * certificate: when sup <= 0, nonnegative multipliers over
      strict_rows + recession_rows proving infeasibility of the strict
      system (their weighted sum is <= 0 componentwise), else None.
    """
    strict = [tuple(r) for r in strict_rows]
    recession = [tuple(r) for r in recession_rows]
    pairs = []
    for a in strict:
        pairs.append((a + (-1,), 0))
    for j in range(n):
        unit = tuple(int(i == j) for i in range(n)) + (-1,)
        pairs.append((unit, 0))
    for b in recession:
        pairs.append((b + (0,), 0))
    cap = (0,) * n + (-1,)
    pairs.append((cap, -1))
    rows = make_rows(pairs, track=True)

    cur = rows
    for j in range(n):
        cur = eliminate(cur, j)
    sup, sup_mult = None, None
    for a, b, mult in cur:
        c = a[n]
        if c < 0:
            bound = Fraction(b, c)
            if sup is None or bound < sup:
                sup, sup_mult = bound, mult
    assert sup is not None  # the cap row guarantees a finite upper bound

    if sup <= 0:
        lam = sup_mult[: len(strict)]
        kap = sup_mult[len(strict) + n : len(strict) + n + len(recession)]
        return sup, None, (lam, kap)

    # Back-substitute a witness at s = sup through exact projections.
    assigned = [None] * (n + 1)
    assigned[n] = sup
    work = _substitute(rows, n, sup)
    for j in range(n):
        ok, lo, hi = projection_interval(work, j, n + 1)
        assert ok
        if lo != -INF and hi != INF:
            val = (lo + hi) / 2
        elif lo != -INF:
            val = lo + 1
        elif hi != INF:
            val = hi - 1
        else:
            val = Fraction(0)
        assigned[j] = val
        work = _substitute(work, j, val)
    return sup, tuple(assigned[:n]), None


def integer_witness(witness):
    """Scale a rational weight vector to a primitive positive integer vector."""
    den = 1
    for x in witness:
        den = den * x.denominator // math.gcd(den, x.denominator)
    vals = [int(x * den) for x in witness]
    g = 0
    for v in vals:
        g = math.gcd(g, abs(v))
    if g > 1:
        vals = [v // g for v in vals]
    return tuple(vals)
