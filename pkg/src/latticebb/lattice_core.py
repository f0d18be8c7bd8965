"""Integer lattices in Z^n: Hermite normal form, membership, canonical representatives.

A lattice M is stored through a row-style Hermite normal form H of its
generators: pivots d_1..d_m are positive, every entry above a pivot is
reduced into [0, d_j), and rows are in echelon order of their pivot
columns.  The box

    B = { v in Z^n : 0 <= v[c] < d_j for every pivot column c, v free elsewhere }

is a fundamental domain for Z^n / M; ``rho`` reduces any vector into it by
repeated division against the pivot rows.

All arithmetic is exact (Python big integers).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

Vec = tuple[int, ...]


class LatticeInputError(ValueError):
    """Malformed lattice description (dimensions, non-integers, empty input)."""


class RankError(ValueError):
    """Operation requires full rank n."""


@dataclass(frozen=True)
class SignDecomp:
    """Componentwise split a = plus - minus with disjoint supports."""

    plus: Vec
    minus: Vec
    abs: Vec


def decompose(a) -> SignDecomp:
    """Split an integer vector into positive part, negative part and their sum."""
    plus = tuple(x if x > 0 else 0 for x in a)
    minus = tuple(-x if x < 0 else 0 for x in a)
    return SignDecomp(plus, minus, tuple(p + m for p, m in zip(plus, minus)))


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n given by generators and their row HNF.

    Attributes:
        n: ambient dimension.
        m: rank (number of nonzero HNF rows).
        generators: the user-supplied generators.
        hnf: m x n matrix, rows in echelon order, pivots positive, entries
            above each pivot reduced into [0, pivot).
        pivots: the pivot values d_1..d_m.
        pivot_cols: columns of the pivots (strictly increasing).
    """

    n: int
    m: int
    generators: tuple[Vec, ...]
    hnf: tuple[Vec, ...]
    pivots: Vec
    pivot_cols: Vec

    @property
    def free_cols(self) -> Vec:
        return tuple(c for c in range(self.n) if c not in self.pivot_cols)

    @property
    def determinant(self) -> int:
        """Product of the pivots; the group order of Z^n/M when m = n."""
        d = 1
        for p in self.pivots:
            d *= p
        return d


def hnf(generators) -> Lattice:
    """Build a Lattice from generators, computing the row-style HNF.

    Raises LatticeInputError on ragged/empty input or all-zero generators.
    """
    gens = [tuple(g) for g in generators]
    if not gens:
        raise LatticeInputError("no generators given")
    n = len(gens[0])
    if n == 0:
        raise LatticeInputError("generators must have positive length")
    for g in gens:
        if len(g) != n:
            raise LatticeInputError("generators of unequal length")
        for x in g:
            if type(x) is not int:
                raise LatticeInputError(f"non-integer entry {x!r}")
    if all(all(x == 0 for x in g) for g in gens):
        raise LatticeInputError("all generators are zero")

    rows = [list(g) for g in gens]
    pivot_cols = []
    r = 0
    for c in range(n):
        # Reduce column c below row r to a single nonzero entry via row gcd steps.
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(rows[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                q = rows[i][c] // rows[i0][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[i0])]
        nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
        if not nz:
            continue
        i0 = nz[0]
        rows[r], rows[i0] = rows[i0], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        pivot_cols.append(c)
        r += 1
    m = r
    rows = rows[:m]

    # Reduce entries above each pivot into [0, d).  Processing pivots left to
    # right is safe: row k has zeros in every earlier pivot column.
    for i in range(m):
        for k in range(i + 1, m):
            c = pivot_cols[k]
            d = rows[k][c]
            q = rows[i][c] // d
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[k])]

    hrows = tuple(tuple(row) for row in rows)
    pivots = tuple(hrows[i][pivot_cols[i]] for i in range(m))
    return Lattice(
        n=n,
        m=m,
        generators=tuple(gens),
        hnf=hrows,
        pivots=pivots,
        pivot_cols=tuple(pivot_cols),
    )


def _check_len(v, L: Lattice):
    if len(v) != L.n:
        raise LatticeInputError(f"vector of length {len(v)}, expected {L.n}")


def member(v, L: Lattice) -> bool:
    """True iff v lies in the lattice (back-substitution against the HNF rows)."""
    _check_len(v, L)
    w = list(v)
    for r in range(L.m):
        c = L.pivot_cols[r]
        d = L.pivots[r]
        if w[c] % d != 0:
            return False
        q = w[c] // d
        if q:
            w = [a - q * b for a, b in zip(w, L.hnf[r])]
    return all(x == 0 for x in w)


def rho(b, L: Lattice) -> Vec:
    """Canonical representative of b modulo the lattice, inside the box B.

    Repeated floor division against the pivot rows; free coordinates are
    only shifted, never divided.  Idempotent.
    """
    _check_len(b, L)
    w = list(b)
    for r in range(L.m):
        c = L.pivot_cols[r]
        q = w[c] // L.pivots[r]
        if q:
            w = [a - q * h for a, h in zip(w, L.hnf[r])]
    return tuple(w)


def hnf_coefficients(v, L: Lattice):
    """Coefficients c with c . hnf = v, or None when v is not in the lattice."""
    _check_len(v, L)
    w = list(v)
    coeffs = []
    for r in range(L.m):
        c = L.pivot_cols[r]
        d = L.pivots[r]
        if w[c] % d != 0:
            return None
        q = w[c] // d
        coeffs.append(q)
        if q:
            w = [a - q * b for a, b in zip(w, L.hnf[r])]
    if any(x != 0 for x in w):
        return None
    return tuple(coeffs)


def label(b, L: Lattice) -> int:
    """Mixed-radix label of the class of b; defined only for rank n.

    The representative (a_1, .., a_n) gets a_n + d_n*a_{n-1} + ... +
    d_n*...*d_2*a_1, so labels run over 0 .. d_1*...*d_n - 1 and two vectors
    share a label iff they are congruent modulo the lattice.
    """
    if L.m != L.n:
        raise RankError(f"labels need rank n = {L.n}, lattice has rank {L.m}")
    v = rho(b, L)
    lab = 0
    for j in range(L.n):
        lab = lab * L.pivots[j] + v[j]
    return lab


def lattice_from_json(obj) -> Lattice:
    """Parse {"n": int, "generators": [[int, ...], ...]} into a Lattice."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise LatticeInputError(f"invalid JSON: {e}") from e
    if not isinstance(obj, dict):
        raise LatticeInputError("lattice file must contain a JSON object")
    if "n" not in obj or "generators" not in obj:
        raise LatticeInputError('lattice object needs fields "n" and "generators"')
    n = obj["n"]
    if type(n) is not int or n <= 0:
        raise LatticeInputError('field "n" must be a positive integer')
    gens = obj["generators"]
    if not isinstance(gens, list) or not gens:
        raise LatticeInputError('field "generators" must be a non-empty list')
    rows = []
    for g in gens:
        if not isinstance(g, list) or len(g) != n:
            raise LatticeInputError(f'generator {g!r} does not have length n={n}')
        for x in g:
            if type(x) is not int:
                raise LatticeInputError(f'non-integer generator entry {x!r}')
        rows.append(tuple(g))
    return hnf(rows)


def lattice_to_json(L: Lattice) -> dict:
    return {"n": L.n, "generators": [list(g) for g in L.generators]}
