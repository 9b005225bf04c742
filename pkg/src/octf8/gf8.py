"""Arithmetic in F8 = F2[t]/(t^3 + t + 1).

Elements are plain ints 0..7 in the polynomial basis {1, a, a^2}: bit i is
the coefficient of a^i, where the generator a (bits 0b010) satisfies
a^3 = a + 1.  Addition is XOR; multiplication goes through log/antilog
tables built once at import.
"""

from __future__ import annotations

ORDER = 8
MODULUS = 0b1011  # t^3 + t + 1
ZERO = 0
ONE = 1
ALPHA = 2

ELEMENTS = tuple(range(ORDER))
NONZERO = tuple(range(1, ORDER))


def _clmul(x: int, y: int) -> int:
    """Carry-less product reduced modulo t^3 + t + 1."""
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & 0b1000:
            x ^= MODULUS
    return r


def _build_tables() -> tuple[list[int], list[int | None]]:
    exp = [ONE] * 7
    for i in range(1, 7):
        exp[i] = _clmul(exp[i - 1], ALPHA)
    log: list[int | None] = [None] * ORDER
    for i, v in enumerate(exp):
        log[v] = i
    if sorted(exp) != list(NONZERO) or _clmul(exp[6], ALPHA) != ONE:
        raise RuntimeError("a does not generate F8*")
    if exp[3] != ALPHA ^ ONE:
        raise RuntimeError("table violates a^3 = a + 1")
    return exp, log


EXP, LOG = _build_tables()

MUL = tuple(tuple(_clmul(x, y) for y in ELEMENTS) for x in ELEMENTS)

if any(MUL[x][y] != EXP[(LOG[x] + LOG[y]) % 7] for x in NONZERO for y in NONZERO):
    raise RuntimeError("multiplication table disagrees with log/antilog tables")


def add(x: int, y: int) -> int:
    return x ^ y


def mul(x: int, y: int) -> int:
    return MUL[x][y]


def pow(x: int, n: int) -> int:
    """x**n for n >= 0, with pow(0, 0) == 1."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    if n == 0:
        return ONE
    if x == 0:
        return ZERO
    return EXP[(LOG[x] * n) % 7]


def frobenius(x: int) -> int:
    return mul(x, x)


def trace(x: int) -> int:
    """x + x^2 + x^4, returned as the bit 0 or 1."""
    t = x ^ frobenius(x) ^ frobenius(frobenius(x))
    if t not in (0, 1):
        raise ArithmeticError(f"trace of {x} left F2: {t}")
    return t


def bar(x: int) -> int:
    """x^6: the inverse of x for x != 0, and 0 at 0."""
    return pow(x, 6)


def inverse(x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in F8")
    return bar(x)


def log_alpha(x: int) -> int:
    """The exponent j in 0..6 with a^j == x."""
    if x == 0:
        raise ValueError("0 is not a power of a")
    return LOG[x]


def label(x: int) -> str:
    """Human label: "0" for zero, "a^j" (j = 1..7) otherwise; note a^7 = 1."""
    if x == 0:
        return "0"
    return f"a^{LOG[x] or 7}"
