"""Exact linear algebra: integer Hermite normal form, kernels and spans over
Z/dZ, rank and solving over Q."""
from __future__ import annotations

from fractions import Fraction

from .numtheory import xgcd


def hermite_normal_form(rows, ncols: int) -> list[list[int]]:
    """Row-style HNF of the lattice spanned by ``rows``.

    Returns the nonzero rows, in echelon order, with positive pivots and
    every entry above a pivot reduced into [0, pivot).
    """
    a = [list(r) for r in rows]
    m = len(a)
    pr = 0
    for col in range(ncols):
        if pr == m:
            break
        for i in range(pr + 1, m):
            b = a[i][col]
            if b == 0:
                continue
            p = a[pr][col]
            g, s, t = xgcd(p, b)
            u, v = p // g, b // g
            top, other = a[pr], a[i]
            a[pr] = [s * x + t * y for x, y in zip(top, other)]
            a[i] = [v * x - u * y for x, y in zip(top, other)]
        piv = a[pr][col]
        if piv == 0:
            continue
        if piv < 0:
            a[pr] = [-x for x in a[pr]]
            piv = -piv
        for i in range(pr):
            q = a[i][col] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pr])]
        pr += 1
    return a[:pr]


def _pivot(row) -> int:
    return next(i for i, x in enumerate(row) if x)


def _canonical_from_lattice(basis, modulus: int) -> list[tuple[int, ...]]:
    # Full-rank lattice containing d*Z^c: pivots divide d, rows with pivot d
    # vanish modulo d up to later rows.
    out = []
    for row in basis:
        if row[_pivot(row)] != modulus:
            out.append(tuple(x % modulus for x in row))
    return out


def kernel_mod_d(a, rows: int, cols: int, modulus: int) -> list[tuple[int, ...]]:
    """Canonical generators of {v in (Z/dZ)^cols : a v = 0}.

    ``a`` is a rows x cols residue matrix.  The lattice of integer lifts is
    read off the HNF of [[a^T | I_cols], [d*I_rows | 0]]; generators come
    out sorted by pivot position with pivots dividing d.
    """
    aug = []
    for j in range(cols):
        aug.append([a[i][j] for i in range(rows)] + [1 if k == j else 0 for k in range(cols)])
    for i in range(rows):
        aug.append([modulus if k == i else 0 for k in range(rows)] + [0] * cols)
    h = hermite_normal_form(aug, rows + cols)
    lattice = [r[rows:] for r in h if not any(r[:rows])]
    return _canonical_from_lattice(lattice, modulus)


def span_mod_d(vectors, cols: int, modulus: int) -> list[tuple[int, ...]]:
    """Canonical generators of the Z/dZ-span of ``vectors`` (same normal form as kernel_mod_d)."""
    gens = [list(v) + [0] * (cols - len(v)) for v in vectors]
    gens += [[modulus if k == j else 0 for k in range(cols)] for j in range(cols)]
    return _canonical_from_lattice(hermite_normal_form(gens, cols), modulus)


def _row_echelon(rows) -> list[list[Fraction]]:
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    out, pr = a, 0
    for col in range(ncols):
        piv = next((i for i in range(pr, len(out)) if out[i][col]), None)
        if piv is None:
            continue
        out[pr], out[piv] = out[piv], out[pr]
        inv = 1 / out[pr][col]
        out[pr] = [x * inv for x in out[pr]]
        for i in range(len(out)):
            if i != pr and out[i][col]:
                f = out[i][col]
                out[i] = [x - f * y for x, y in zip(out[i], out[pr])]
        pr += 1
    return out[:pr]


def rank_rational(rows) -> int:
    return len(_row_echelon(rows))


def solve_rational(a, b) -> tuple[Fraction, ...] | None:
    """One solution x of a x = b over Q, or None if inconsistent.

    Free variables are set to zero.
    """
    ncols = len(a[0])
    rref = _row_echelon([list(r) + [y] for r, y in zip(a, b)])
    x = [Fraction(0)] * ncols
    for row in rref:
        p = _pivot(row)
        if p == ncols:
            return None
        x[p] = row[ncols]
    return tuple(x)
