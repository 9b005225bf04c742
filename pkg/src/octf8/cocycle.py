"""The sign function phi(x, y) = tr(y * x^6) on F8 and the indicator ind_n.

All F2 quantities are ints in {0, 1}; sums are taken as parity.  ``PHI`` and
``SIGN`` are the precomputed 8x8 tables every other module reads; they are
mutated in place only by :func:`flipped_phi`, a negative-control hook.
"""

from __future__ import annotations

from contextlib import contextmanager
from itertools import product
from typing import Iterator, Sequence

from . import gf8


def _phi_direct(x: int, y: int) -> int:
    return gf8.trace(gf8.mul(y, gf8.bar(x)))


PHI: list[list[int]] = [[_phi_direct(x, y) for y in gf8.ELEMENTS] for x in gf8.ELEMENTS]
SIGN: list[list[int]] = [[-1 if b else 1 for b in row] for row in PHI]


def phi(x: int, y: int) -> int:
    return PHI[x][y]


def sigma(x: int, y: int) -> int:
    """(-1)**phi(x, y) as +1 or -1."""
    return SIGN[x][y]


def _check_length(xs: Sequence[int]) -> None:
    if not 1 <= len(xs) <= 3:
        raise ValueError(f"ind is defined here for 1 to 3 vectors, got {len(xs)}")


def f2_rank(xs: Sequence[int]) -> int:
    """Rank over F2 of 3-bit vectors, by elimination on leading bits."""
    pivots: list[int] = []  # kept descending, so leading bits stay distinct
    for v in xs:
        for p in pivots:
            v = min(v, v ^ p)
        if v:
            pivots.append(v)
            pivots.sort(reverse=True)
    return len(pivots)


def ind_rank(xs: Sequence[int]) -> int:
    """1 iff the vectors are F2-linearly independent."""
    _check_length(xs)
    return int(f2_rank(xs) == len(xs))


def ind_sum(xs: Sequence[int]) -> int:
    """Parity of #{eps in F2^n : sum eps_i x_i == 0}; equals ind_rank."""
    _check_length(xs)
    hits = 0
    for eps in product((0, 1), repeat=len(xs)):
        s = 0
        for e, x in zip(eps, xs):
            if e:
                s ^= x
        hits += s == 0
    return hits % 2


ind = ind_rank


def delta_phi(x: int, y: int, z: int) -> int:
    """Coboundary phi(y,z) + phi(x+y,z) + phi(x,y+z) + phi(x,y) mod 2."""
    return (phi(y, z) + phi(x ^ y, z) + phi(x, y ^ z) + phi(x, y)) % 2


@contextmanager
def flipped_phi(x: int, y: int) -> Iterator[None]:
    """Temporarily flip the single table entry phi(x, y).

    Test hook: lets a suite prove its checks are not vacuous.
    """
    PHI[x][y] ^= 1
    SIGN[x][y] = -SIGN[x][y]
    try:
        yield
    finally:
        PHI[x][y] ^= 1
        SIGN[x][y] = -SIGN[x][y]
