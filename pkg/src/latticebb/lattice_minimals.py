"""Minimal lattice data: orthant Hilbert bases, minimal absolute values, minimal mixed pairs.

Everything is derived from the Graver basis of the lattice, i.e. the set of
conformally minimal nonzero lattice vectors (g conforms to z when they agree
in sign and |g| <= |z| componentwise).  Standard facts used here:

* the irreducible elements of the monoid {x in N^n : eps*x in M} are exactly
  the Graver elements lying in the orthant eps;
* a minimal absolute value abs(a), a in M, is attained at a Graver element;
* a minimal mixed-sign pair (c+, c-) is either a mixed Graver element or a
  sum of two one-signed Graver elements with disjoint supports (a mixed
  vector may sit above one-signed lattice vectors without losing minimality
  among mixed ones, so the orthant restriction alone is not enough).

The completion procedure is Pottier's: close a symmetric generating set
under pairwise sums reduced to conformal normal form, then keep the
conformally minimal elements.
"""

from __future__ import annotations

from functools import lru_cache

from .lattice_core import Lattice, decompose
from .staircase import leq, minimal_elements

Vec = tuple[int, ...]
XPair = tuple[Vec, Vec]


def _conforms(g, z) -> bool:
    """g lies in the same orthant as z with componentwise |g| <= |z|."""
    return all(gi * zi >= 0 and abs(gi) <= abs(zi) for gi, zi in zip(g, z))


def _normal_form(s, basis):
    reduced = True
    while reduced and any(s):
        reduced = False
        for g in basis:
            if _conforms(g, s):
                s = tuple(a - b for a, b in zip(s, g))
                reduced = True
                break
    return s


@lru_cache(maxsize=None)
def graver_basis(L: Lattice) -> tuple[Vec, ...]:
    """All conformally minimal nonzero lattice vectors, sorted; closed under negation."""
    gens = [tuple(r) for r in L.hnf]
    basis: list[Vec] = []
    for g in gens:
        basis.append(g)
        basis.append(tuple(-x for x in g))
    queue = [
        tuple(a + b for a, b in zip(f, g))
        for i, f in enumerate(basis)
        for g in basis[i:]
    ]
    while queue:
        s = queue.pop()
        r = _normal_form(s, basis)
        if not any(r):
            continue
        minus_r = tuple(-x for x in r)
        for g in basis + [r, minus_r]:
            queue.append(tuple(a + b for a, b in zip(r, g)))
            queue.append(tuple(a + b for a, b in zip(minus_r, g)))
        basis.append(r)
        basis.append(minus_r)
    out = [
        g
        for g in basis
        if not any(h != g and _conforms(h, g) for h in basis)
    ]
    return tuple(sorted(set(out)))


def hilbert_basis_orthant(L: Lattice, eps) -> tuple[Vec, ...]:
    """Minimal nonzero points of {x in N^n : eps*x in M} under the componentwise order.

    Every nonzero point of that monoid dominates a returned point.  The
    result may be empty when the orthant meets the lattice only at 0.
    """
    pts = {
        tuple(abs(x) for x in g)
        for g in graver_basis(L)
        if all(e * x >= 0 for e, x in zip(eps, g))
    }
    return minimal_elements(pts)


def compute_A1(L: Lattice) -> tuple[Vec, ...]:
    """Minimal elements of {abs(a) : a in M, a != 0}; finite by Dickson."""
    return minimal_elements(
        tuple(abs(x) for x in g) for g in graver_basis(L)
    )


def sq_leq(a: XPair, b: XPair) -> bool:
    """Pair order: a below b directly or after swapping b's components."""
    return (leq(a[0], b[0]) and leq(a[1], b[1])) or (
        leq(a[0], b[1]) and leq(a[1], b[0])
    )


def compute_X1(L: Lattice) -> tuple[XPair, ...]:
    """Minimal mixed-sign pairs (c+, c-) over c in M; closed under component swap.

    Candidates are the mixed Graver elements plus sums of one-signed Graver
    absolute values with disjoint supports; minimization under the pair
    order then yields exactly the minimal mixed pairs.
    """
    zero = (0,) * L.n
    mixed: set[XPair] = set()
    ones: set[Vec] = set()
    for g in graver_basis(L):
        d = decompose(g)
        if d.plus != zero and d.minus != zero:
            mixed.add((d.plus, d.minus))
        else:
            ones.add(d.abs)
    for p in ones:
        for q in ones:
            if all(a == 0 or b == 0 for a, b in zip(p, q)):
                mixed.add((p, q))
    out = [
        c
        for c in mixed
        if not any(sq_leq(other, c) and not sq_leq(c, other) for other in mixed)
    ]
    return tuple(sorted(out))
