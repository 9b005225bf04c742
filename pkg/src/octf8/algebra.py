"""The octonions O(R) as the twisted group algebra of F8.

An :class:`Octonion` holds 8 exact :class:`~fractions.Fraction` coefficients
indexed by the field elements 0..7, and basis vectors multiply by

    e^x e^y = sigma(x, y) e^(x + y).

Index 0 is the identity e^0 (written e_inf in the named basis), and
e_j = e^(a^j) with j read modulo 7.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from . import cocycle, gf8

Scalar = int | Fraction


class Octonion:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        c = tuple(v if type(v) is Fraction else Fraction(v) for v in coeffs)
        if len(c) != 8:
            raise ValueError(f"an octonion has 8 coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def from_map(cls, coeffs: Mapping[int, Scalar]) -> "Octonion":
        c = [Fraction(0)] * 8
        for x, v in coeffs.items():
            c[x] += v
        return cls(c)

    def __getitem__(self, x: int) -> Fraction:
        return self.coeffs[x]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Octonion):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Octonion.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"{v}*e^{gf8.label(x)}" for x, v in enumerate(self.coeffs) if v]
        return f"Octonion({' + '.join(terms) or '0'})"

    @classmethod
    def scalar(cls, r: Scalar) -> "Octonion":
        return cls([r, 0, 0, 0, 0, 0, 0, 0])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Octonion.scalar(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Octonion(-a for a in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Octonion.scalar(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return Octonion(a * other for a in self.coeffs)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion(other * a for a in self.coeffs)
        return NotImplemented

    def __truediv__(self, r):
        if not isinstance(r, (int, Fraction)):
            return NotImplemented
        return Octonion(a / r for a in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


ZERO = Octonion([0] * 8)
ONE = Octonion.scalar(1)


def basis(x: int) -> Octonion:
    """The basis vector e^x."""
    c = [0] * 8
    c[x] = 1
    return Octonion(c)


def _integral(c: tuple[Fraction, ...]) -> tuple[list[int], int]:
    """Numerators over a common denominator."""
    den = math.lcm(*(v.denominator for v in c))
    return [v.numerator * (den // v.denominator) for v in c], den


def multiply(a: Octonion, b: Octonion) -> Octonion:
    sign = cocycle.SIGN
    ia, da = _integral(a.coeffs)
    ib, db = _integral(b.coeffs)
    out = [0] * 8
    bs = [(y, v) for y, v in enumerate(ib) if v]
    for x, u in enumerate(ia):
        if not u:
            continue
        row = sign[x]
        for y, v in bs:
            out[x ^ y] += row[y] * u * v
    d = da * db
    return Octonion(Fraction(v, d) for v in out)


def conjugate(a: Octonion) -> Octonion:
    c = a.coeffs
    return Octonion((c[0],) + tuple(-v for v in c[1:]))


def real_part(a: Octonion) -> Octonion:
    return Octonion.scalar(a.coeffs[0])


def imag_part(a: Octonion) -> Octonion:
    return a - real_part(a)


def trace_oct(a: Octonion) -> Fraction:
    """The scalar a + a* = 2 a_0."""
    return 2 * a.coeffs[0]


def norm(a: Octonion) -> Fraction:
    """Sum of squared coefficients; checked against a a*."""
    n = sum((v * v for v in a.coeffs), Fraction(0))
    if multiply(a, conjugate(a)) != Octonion.scalar(n):
        raise AssertionError(f"a a* is not the real scalar {n} for {a!r}")
    return n


def inverse(a: Octonion) -> Octonion:
    n = norm(a)
    if n == 0:
        raise ZeroDivisionError("zero octonion has no inverse")
    return conjugate(a) / n


def associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion:
    """[a, b, c] = (ab)c - a(bc)."""
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c))


def associator_formula(x: int, y: int, z: int) -> Octonion:
    """Closed form of [e^x, e^y, e^z] read off the cocycle, no products taken."""
    phi = cocycle.phi
    parity = phi(x, y) + phi(y, z) + phi(z, x)
    factor = 1 - (-1) ** cocycle.ind_rank([x, y, z])
    return basis(x ^ y ^ z) * ((-1) ** parity * factor)


# Named basis e_inf, e_1, ..., e_7.  Finite labels live in Z/7, so e_7 == e_0.

INF = -1
LABELS: tuple[int, ...] = (INF, 1, 2, 3, 4, 5, 6, 0)


def label_index(j: int) -> int:
    """Field element carrying the basis label j."""
    if j == INF:
        return 0
    return gf8.EXP[j % 7]


def index_label(x: int) -> int:
    if x == 0:
        return INF
    return gf8.log_alpha(x)


def label_name(j: int) -> str:
    return "e_∞" if j == INF else f"e_{j % 7}"


Table = dict[tuple[int, int], tuple[int, int]]


class TableMismatch(AssertionError):
    pass


def product_table() -> Table:
    """e_i e_j = s e_k for every pair of labels, read from :func:`multiply`."""
    table: Table = {}
    for i, j in product(LABELS, repeat=2):
        p = multiply(basis(label_index(i)), basis(label_index(j)))
        (k,) = [x for x in range(8) if p[x]]
        table[i, j] = (index_label(k), int(p[k]))
    return table


def seed_table() -> Table:
    """Regenerate the table from the identity laws, (e^x)^2 = -1, e_1 e_2 = e_4,
    anticommutation, the cyclic rule e^x e^y = e^y e^z = e^z e^x, and the
    index shift j -> j+1 and doubling j -> 2j of positive entries."""
    table: Table = {}

    def put(i, j, k, s):
        old = table.get((i, j))
        if old is None:
            table[i, j] = (k, s)
            return True
        if old != (k, s):
            raise TableMismatch(f"seed relations conflict at ({i}, {j}): {old} vs {(k, s)}")
        return False

    for j in LABELS:
        put(INF, j, j, 1)
        put(j, INF, j, 1)
        if j != INF:
            put(j, j, INF, -1)
    put(1, 2, 4, 1)

    changed = True
    while changed:
        changed = False
        for (i, j), (k, s) in list(table.items()):
            if INF in (i, j, k) or i == j:
                continue
            changed |= put(j, i, k, -s)
            changed |= put(j, k, i, s)
            changed |= put(k, i, j, s)
            if s == 1:
                changed |= put((i + 1) % 7, (j + 1) % 7, (k + 1) % 7, 1)
                changed |= put(2 * i % 7, 2 * j % 7, 2 * k % 7, 1)
    if len(table) != 64:
        raise TableMismatch(f"seed relations fix only {len(table)} of 64 entries")
    return table


def standard_table() -> Table:
    """The product table, certified equal to the seed-relation regeneration."""
    direct = product_table()
    seeded = seed_table()
    bad = sorted(k for k in direct if direct[k] != seeded[k])
    if bad:
        raise TableMismatch(f"product table differs from seed relations at {bad}")
    return direct


def cell_text(k: int, s: int) -> str:
    return ("-" if s < 0 else "") + label_name(k)


# Serialisation

JSON_KEYS = ("e0",) + tuple(f"e_a{j}" for j in range(1, 8))


def _key_index(key: str) -> int:
    return 0 if key == "e0" else gf8.EXP[int(key[3:]) % 7]


def fraction_text(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def to_json(a: Octonion) -> dict[str, str]:
    return {key: fraction_text(a[_key_index(key)]) for key in JSON_KEYS}


def from_json(obj: Mapping[str, str]) -> Octonion:
    return Octonion.from_map({_key_index(k): Fraction(v) for k, v in obj.items()})


# Random elements for property checks

DYADIC_HALVES = tuple(Fraction(n, 2) for n in range(-4, 5))


def random_octonion(rng: random.Random, values: Sequence[Scalar] = DYADIC_HALVES) -> Octonion:
    return Octonion(rng.choice(values) for _ in range(8))


def random_rational(rng: random.Random, bound: int = 5) -> Octonion:
    return Octonion(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(8))


# The analogous construction over F4 = F2[w]/(w^2 + w + 1)


def _f4_mul(x: int, y: int) -> int:
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & 0b100:
            x ^= 0b111
    return r


def _f4_trace(x: int) -> int:
    return x ^ _f4_mul(x, x)


def f4_sign(x: int, y: int) -> int:
    """(-1)**tr(y x^2) over F4."""
    return -1 if _f4_trace(_f4_mul(y, _f4_mul(x, x))) else 1


@dataclass
class F4Report:
    table: dict[tuple[int, int], tuple[int, int]]
    laws: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.laws.values())


def check_f4_remark() -> F4Report:
    """Twist Z[F4] by tr(y x^2) and test the laws of Z[x, y]/(x^2 - 1, y^2 - 1).

    Elements are dicts {index: coefficient}; the products needed are tiny.
    """
    F4 = range(4)

    def mul(a, b):
        out: dict[int, int] = {}
        for x, u in a.items():
            for y, v in b.items():
                out[x ^ y] = out.get(x ^ y, 0) + f4_sign(x, y) * u * v
        return {k: v for k, v in out.items() if v}

    e = {x: {x: 1} for x in F4}
    table = {(x, y): next(iter(mul(e[x], e[y]).items())) for x in F4 for y in F4}
    laws = {
        "identity": all(mul(e[0], e[x]) == e[x] == mul(e[x], e[0]) for x in F4),
        "commutative": all(mul(e[x], e[y]) == mul(e[y], e[x]) for x in F4 for y in F4),
        "associative": all(
            mul(mul(e[x], e[y]), e[z]) == mul(e[x], mul(e[y], e[z]))
            for x in F4 for y in F4 for z in F4
        ),
        "squares are identity": all(mul(e[x], e[x]) == e[0] for x in F4),
    }
    # e^w and e^(w^2) generate: 1, x, y and xy = +-e^1 cover the basis up to sign
    gx, gy = e[2], e[3]
    laws["generated by e^w, e^(w^2)"] = {
        next(iter(m)) for m in (e[0], gx, gy, mul(gx, gy))
    } == set(F4)
    return F4Report(table=table, laws=laws)
