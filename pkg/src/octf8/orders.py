"""The 16 orders of integral octonions containing the Gravesian integers O(Z).

Every order sits between O(Z) and 1/2 O(Z), so its elements are stored
doubled, as integer 8-vectors, and a lattice is its Hermite normal form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import product

from . import codes, gf8, lattice
from .algebra import Octonion, basis, conjugate, fraction_text, multiply, norm, trace_oct
from .codes import Code, Orbit

GENERATION_BOUND = 16


def doubled(a: Octonion) -> tuple[int, ...]:
    """2a as an integer vector; raises if a is not in 1/2 O(Z)."""
    out = []
    for v in a:
        w = 2 * v
        if w.denominator != 1:
            raise ValueError(f"{a!r} is not in 1/2 O(Z)")
        out.append(w.numerator)
    return tuple(out)


def halved(v) -> Octonion:
    return Octonion(Fraction(x, 2) for x in v)


def e_half(X: int) -> Octonion:
    """e^X / 2 for a subset X of size 0, 4 or 8."""
    if codes.size(X) not in (0, 4, 8):
        raise ValueError(f"subset {codes.hex_mask(X)} has size {codes.size(X)}, not 0, 4 or 8")
    return Octonion(Fraction(1, 2) if X >> x & 1 else 0 for x in range(8))


def halving_set(a: Octonion) -> int:
    """Mask of the indices whose coefficient is not an integer."""
    mask = 0
    for x, v in enumerate(a):
        if v.denominator not in (1, 2):
            raise ValueError(f"coefficient {v} of {a!r} is not a half-integer")
        if v.denominator == 2:
            mask |= 1 << x
    return mask


def conway_smith_name(orbit: Orbit) -> str:
    if orbit.kind == "empty":
        return "Gravesian"
    if orbit.kind == "full":
        return "Kleinian"
    if orbit.kind == "line-pair":
        return f"double Hurwitzian ({codes.line_label(orbit.label)})"
    return f"{gf8.log_alpha(orbit.label)}-integers"


def family(orbit: Orbit) -> str:
    return {
        "empty": "Gravesian",
        "full": "Kleinian",
        "line-pair": "double Hurwitzian",
        "outer": "octavian",
    }[orbit.kind]


def slug(name: str) -> str:
    return "-".join("".join(c if c.isalnum() else " " for c in name.lower()).split())


@dataclass(frozen=True)
class IntegralOrder:
    orbit: Orbit
    code: Code
    basis: tuple[tuple[int, ...], ...]  # HNF rows of the doubled lattice
    name: str

    @property
    def lattice_basis(self) -> list[Octonion]:
        return [halved(r) for r in self.basis]

    @property
    def slug(self) -> str:
        return slug(self.name)

    @property
    def family(self) -> str:
        return family(self.orbit)

    def __le__(self, other: "IntegralOrder") -> bool:
        return all(lattice.contains(other.basis, r) for r in self.basis)


def build_order(orbit: Orbit) -> IntegralOrder:
    """Z-span of the e^z and the e^X/2 for X in the orbit."""
    gens = [doubled(basis(z)) for z in range(8)]
    gens += [doubled(e_half(X)) for X in orbit]
    return IntegralOrder(
        orbit=orbit,
        code=codes.span(orbit),
        basis=tuple(lattice.hermite_normal_form(gens)),
        name=conway_smith_name(orbit),
    )


@cache
def all_orders() -> tuple[IntegralOrder, ...]:
    return tuple(build_order(o) for o in codes.orbit_decomposition())


def gravesian() -> IntegralOrder:
    return all_orders()[0]


def find_order(selector: str) -> IntegralOrder:
    """Look an order up by name, slug or orbit label (case-insensitive)."""
    key = slug(selector)
    for order in all_orders():
        label = order.orbit.label_text()
        if key in (order.slug, slug(label or "")):
            return order
    names = ", ".join(o.slug for o in all_orders())
    raise KeyError(f"unknown order {selector!r}; choose one of: {names}")


def in_lattice(order: IntegralOrder, a: Octonion) -> bool:
    try:
        v = doubled(a)
    except ValueError:
        return False
    return lattice.contains(order.basis, v)


def in_code(order: IntegralOrder, a: Octonion) -> bool:
    try:
        return halving_set(a) in order.code
    except ValueError:
        return False


def contains(order: IntegralOrder, a: Octonion) -> bool:
    """Halving-set membership, cross-checked against the lattice basis."""
    by_code = in_code(order, a)
    if by_code != in_lattice(order, a):
        raise AssertionError(f"code and lattice disagree on {a!r} in {order.name}")
    return by_code


@dataclass
class ClosureCertificate:
    order: str
    products: dict[tuple[int, int], bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return len(self.products) == 64 and all(self.products.values())


def verify_closed(order: IntegralOrder) -> ClosureCertificate:
    cert = ClosureCertificate(order.name)
    B = order.lattice_basis
    for i, j in product(range(8), repeat=2):
        cert.products[i, j] = contains(order, multiply(B[i], B[j]))
    return cert


@dataclass
class GenerationCertificate:
    order: str
    start: int
    iterations: int
    reached: tuple[tuple[int, ...], ...]
    passed: bool


def verify_generated(orbit: Orbit, X: int) -> GenerationCertificate:
    """Close O(Z) + Z e^X/2 under products until stable; compare with the order."""
    if X not in orbit:
        raise ValueError(f"{codes.hex_mask(X)} is not a member of the orbit")
    target = build_order(orbit)
    gens = [doubled(basis(z)) for z in range(8)] + [doubled(e_half(X))]
    current = lattice.hermite_normal_form(gens)
    for it in range(1, GENERATION_BOUND + 1):
        elems = [halved(r) for r in current]
        prods = [doubled(multiply(a, b)) for a in elems for b in elems]
        nxt = lattice.hermite_normal_form(list(current) + prods)
        if nxt == current:
            return GenerationCertificate(
                target.name, X, it, tuple(current), tuple(current) == target.basis
            )
        current = nxt
    raise RuntimeError(f"generation from {codes.hex_mask(X)} did not stabilise")


def description_equivalence(order: IntegralOrder) -> bool:
    """Lattice span and halving-set description define the same set.

    lattice <= code: every basis row has its halving set in the code.
    code <= lattice: 2 O(Z) and each e^w/2 (w in the code) lie in the lattice,
    and every code-described element differs from some e^w/2 by an element
    of O(Z).
    """
    rows_ok = all(halving_set(b) in order.code for b in order.lattice_basis)
    words_ok = all(in_lattice(order, e_half(w)) for w in order.code)
    integers_ok = all(in_lattice(order, basis(z)) for z in range(8))
    return rows_ok and words_ok and integers_ok


def units(order: IntegralOrder) -> list[tuple[int, ...]]:
    """All norm-1 elements, doubled.

    Norm is the sum of squared coefficients, so a unit has every |a_x| <= 1
    and the box {-1, -1/2, 0, 1/2, 1}^8 is exhaustive.  Coordinates in the
    halving set w are odd (+-1 doubled), the rest even (-2, 0, 2).
    """
    found = []
    for w in order.code:
        choices = [(-1, 1) if w >> x & 1 else (-2, 0, 2) for x in range(8)]
        for v in product(*choices):
            if sum(c * c for c in v) == 4:
                found.append(v)
    return found


def pairing(a: Octonion, b: Octonion) -> Fraction:
    """<a, b> = tr(a b*)."""
    return trace_oct(multiply(a, conjugate(b)))


@dataclass
class GramCertificate:
    gram: list[list[int]]
    determinant: int
    even: bool
    unit_count: int


def gram_certificate(order: IntegralOrder) -> GramCertificate:
    B = order.lattice_basis
    gram = []
    for a in B:
        row = []
        for b in B:
            p = pairing(a, b)
            if p.denominator != 1:
                raise ArithmeticError(f"pairing {p} is not an integer in {order.name}")
            row.append(p.numerator)
        gram.append(row)
    return GramCertificate(
        gram=gram,
        determinant=lattice.determinant(gram),
        even=all(gram[i][i] % 2 == 0 for i in range(8)),
        unit_count=len(units(order)),
    )


@dataclass
class Poset:
    orders: tuple[IntegralOrder, ...]
    leq: list[list[bool]]

    def maximal(self) -> list[IntegralOrder]:
        n = len(self.orders)
        return [
            self.orders[i]
            for i in range(n)
            if not any(self.leq[i][j] and not self.leq[j][i] for j in range(n))
        ]

    def minimum(self) -> IntegralOrder | None:
        n = len(self.orders)
        least = [self.orders[i] for i in range(n) if all(self.leq[i])]
        return least[0] if len(least) == 1 else None


def containment_poset() -> Poset:
    """Lattice containment, asserted equal to code containment."""
    orders = all_orders()
    leq = [[a <= b for b in orders] for a in orders]
    for i, a in enumerate(orders):
        for j, b in enumerate(orders):
            if leq[i][j] != (a.code <= b.code):
                raise AssertionError(f"lattice and code containment disagree: {a.name}, {b.name}")
    return Poset(orders, leq)


def trace_pairing_obstruction(a: Octonion, b: Octonion) -> int:
    """beta of the halving sets: 1 iff tr(ab) is a half-odd integer."""
    bit = codes.beta(halving_set(a), halving_set(b))
    t2 = 2 * trace_oct(multiply(a, b))
    if t2.denominator != 1 or t2.numerator % 2 != bit:
        raise AssertionError(f"tr(ab) = {t2 / 2} disagrees with beta = {bit}")
    return bit


def translation_identity(orbit: Orbit) -> bool:
    """(e^Y/2) e^z and e^z (e^Y/2) agree with e^(z+Y)/2 modulo O(Z)."""
    for Y in orbit:
        for z in range(8):
            target = e_half(codes.translate(Y, z))
            for p in (multiply(e_half(Y), basis(z)), multiply(basis(z), e_half(Y))):
                if halving_set(p - target) != 0:
                    return False
    return True


def stable_under_gravesian(order: IntegralOrder) -> bool:
    """E O(Z) and O(Z) E stay inside E."""
    for b in order.lattice_basis:
        for z in range(8):
            e = basis(z)
            if not (in_lattice(order, multiply(b, e)) and in_lattice(order, multiply(e, b))):
                return False
    return True


def integral_elements(order: IntegralOrder, rng: random.Random, samples: int = 200) -> bool:
    """Trace and norm are integers on the basis and on random combinations."""
    B = order.lattice_basis
    elems = list(B)
    for _ in range(samples):
        a = Octonion([0] * 8)
        for b in B:
            a = a + b * rng.randint(-3, 3)
        elems.append(a)
    return all(trace_oct(a).denominator == 1 and norm(a).denominator == 1 for a in elems)


def order_to_json(order: IntegralOrder, generated: GenerationCertificate | None = None) -> dict:
    gram = gram_certificate(order)
    if generated is None:
        generated = verify_generated(order.orbit, order.orbit.members[0])
    return {
        "name": order.name,
        "family": order.family,
        "orbit": order.orbit.to_json(),
        "code": order.code.to_json(),
        "basis": [[fraction_text(v) for v in b] for b in order.lattice_basis],
        "gram": gram.gram,
        "determinant": gram.determinant,
        "even": gram.even,
        "unit_count": gram.unit_count,
        "closure": "pass" if verify_closed(order).passed else "fail",
        "generated_check": "pass" if generated.passed else "fail",
    }
