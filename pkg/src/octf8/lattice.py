"""Exact integer lattices: row-style Hermite normal form, membership, determinant."""

from __future__ import annotations

from typing import Sequence

Vector = tuple[int, ...]


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[Vector]:
    """Canonical basis of the Z-span of ``rows``.

    The result is upper triangular with positive pivots, and every entry above
    a pivot lies in [0, pivot).  Two generating sets span the same lattice iff
    their normal forms are equal.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    basis: list[list[int]] = []
    for col in range(ncols):
        active = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        # Euclid on column entries until a single row keeps a nonzero entry
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            for r in active[1:]:
                q = r[col] // p[col]
                for i in range(col, ncols):
                    r[i] -= q * p[i]
            rest += [r for r in active[1:] if not r[col]]
            active = [p] + [r for r in active[1:] if r[col]]
        work = [r for r in rest if any(r)]
        if active:
            p = active[0]
            if p[col] < 0:
                p[:] = [-v for v in p]
            basis.append(p)
    # reduce entries above each pivot
    for k, p in enumerate(basis):
        col = next(i for i, v in enumerate(p) if v)
        for r in basis[:k]:
            q = r[col] // p[col]
            if q:
                for i in range(col, ncols):
                    r[i] -= q * p[i]
    return [tuple(r) for r in basis]


def solve(basis: Sequence[Vector], v: Sequence[int]) -> list[int] | None:
    """Integer coordinates of ``v`` in an HNF basis, or ``None`` if v is not in the lattice."""
    v = list(v)
    coords = []
    for p in basis:
        col = next(i for i, x in enumerate(p) if x)
        if any(v[:col]):
            return None
        q, rem = divmod(v[col], p[col])
        if rem:
            return None
        coords.append(q)
        for i in range(col, len(v)):
            v[i] -= q * p[i]
    return coords if not any(v) else None


def contains(basis: Sequence[Vector], v: Sequence[int]) -> bool:
    return solve(basis, v) is not None


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    m = [list(r) for r in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1
