"""Named exhaustive and seeded-random checks run by ``octf8 verify``.

Each check returns ``(passed, detail)``; exceptions raised inside a check
count as failures so a corrupted table cannot crash the whole run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable

from . import algebra, cocycle, codes, gf8, orders
from .algebra import Octonion, associator, basis, conjugate, multiply, norm

DEFAULT_SEED = 20170120

F8 = gf8.ELEMENTS
Result = tuple[bool, str]


def _count(pred, items) -> tuple[int, int]:
    n = bad = 0
    for it in items:
        n += 1
        bad += not pred(*it)
    return n, bad


def _verdict(n: int, bad: int) -> Result:
    return bad == 0, f"{n - bad}/{n}"


def phi_diagonal(seed: int) -> Result:
    return _verdict(*_count(lambda x: cocycle.phi(x, x) == cocycle.ind_rank([x]), ((x,) for x in F8)))


def phi_antisymmetry(seed: int) -> Result:
    return _verdict(*_count(
        lambda x, y: (cocycle.phi(x, y) + cocycle.phi(y, x)) % 2 == cocycle.ind_rank([x, y]),
        product(F8, repeat=2),
    ))


def phi_cyclic(seed: int) -> Result:
    triples = [(x, y, x ^ y) for x in gf8.NONZERO for y in gf8.NONZERO if x != y]
    return _verdict(*_count(
        lambda x, y, z: cocycle.phi(x, y) == cocycle.phi(y, z) == cocycle.phi(z, x), triples
    ))


def phi_symmetries(seed: int) -> Result:
    phi = cocycle.phi
    scale = _count(
        lambda a, x, y: phi(gf8.mul(a, x), gf8.mul(a, y)) == phi(x, y),
        product(gf8.NONZERO, F8, F8),
    )
    frob = _count(
        lambda x, y: phi(gf8.frobenius(x), gf8.frobenius(y)) == phi(x, y), product(F8, repeat=2)
    )
    return _verdict(scale[0] + frob[0], scale[1] + frob[1])


def ind_equivalence(seed: int) -> Result:
    inputs = [list(t) for n in (1, 2, 3) for t in product(F8, repeat=n)]
    return _verdict(*_count(lambda xs: cocycle.ind_sum(xs) == cocycle.ind_rank(xs), ((xs,) for xs in inputs)))


def coboundary(seed: int) -> Result:
    return _verdict(*_count(
        lambda x, y, z: cocycle.delta_phi(x, y, z) == cocycle.ind_rank([x, y, z]),
        product(F8, repeat=3),
    ))


def table_identification(seed: int) -> Result:
    algebra.standard_table()
    return True, "64/64"


def associator_closed_form(seed: int) -> Result:
    return _verdict(*_count(
        lambda x, y, z: associator(basis(x), basis(y), basis(z)) == algebra.associator_formula(x, y, z),
        product(F8, repeat=3),
    ))


def _parity(p) -> int:
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
    return -1 if inv % 2 else 1


def associator_antisymmetry(seed: int) -> Result:
    def ok(x, y, z):
        args = (basis(x), basis(y), basis(z))
        base = associator(*args)
        return all(associator(*(args[i] for i in p)) == base * _parity(p) for p in permutations(range(3)))

    return _verdict(*_count(ok, product(F8, repeat=3)))


def alternativity(seed: int) -> Result:
    rng = random.Random(seed)
    pairs = [(algebra.random_octonion(rng), algebra.random_octonion(rng)) for _ in range(500)]
    return _verdict(*_count(
        lambda a, b: associator(a, a, b).is_zero()
        and associator(b, a, a).is_zero()
        and associator(a, b, a).is_zero(),
        pairs,
    ))


def norm_multiplicative(seed: int) -> Result:
    rng = random.Random(seed)
    pairs = [(algebra.random_octonion(rng), algebra.random_octonion(rng)) for _ in range(1000)]

    def ok(a, b):
        return (
            norm(multiply(a, b)) == norm(a) * norm(b)
            and norm(a) == sum(v * v for v in a)
            and (norm(a) == 0) == a.is_zero()
        )

    return _verdict(*_count(ok, pairs))


def anti_automorphism(seed: int) -> Result:
    rng = random.Random(seed)
    pairs = [(basis(x), basis(y)) for x, y in product(F8, repeat=2)]
    pairs += [(algebra.random_octonion(rng), algebra.random_octonion(rng)) for _ in range(200)]
    return _verdict(*_count(
        lambda a, b: conjugate(multiply(a, b)) == multiply(conjugate(b), conjugate(a)), pairs
    ))


def moufang(seed: int) -> Result:
    rng = random.Random(seed)
    triples = [tuple(basis(t) for t in xyz) for xyz in product(F8, repeat=3)]
    triples += [tuple(algebra.random_octonion(rng) for _ in range(3)) for _ in range(200)]
    return _verdict(*_count(
        lambda a, b, c: multiply(multiply(multiply(a, b), a), c) == multiply(a, multiply(b, multiply(a, c))),
        triples,
    ))


def inverse_law(seed: int) -> Result:
    rng = random.Random(seed)
    elems = [algebra.random_rational(rng) for _ in range(100)]
    elems = [a for a in elems if not a.is_zero()]
    return _verdict(*_count(lambda a: multiply(a, algebra.inverse(a)) == algebra.ONE, ((a,) for a in elems)))


def relabelling_automorphisms(seed: int) -> Result:
    maps = [gf8.frobenius] + [lambda x, a=a: gf8.mul(a, x) for a in gf8.NONZERO]

    def ok(f, x, y):
        p = multiply(basis(x), basis(y))
        q = multiply(basis(f(x)), basis(f(y)))
        return q[f(x ^ y)] == p[x ^ y]

    return _verdict(*_count(ok, ((f, x, y) for f in maps for x, y in product(F8, repeat=2))))


def orbit_census(seed: int) -> Result:
    H = codes.enumerate_H()
    orbits = codes.orbit_decomposition()
    sizes = sorted(len(o) for o in orbits)
    union = sorted(m for o in orbits for m in o)
    four = [m for m in H if codes.size(m) == 4]
    line_like = set(codes.lines()) | {codes.complement(L) for L in codes.lines()}
    stab_ok = all((len(codes.stabilizer(m)) > 1) == (m in line_like) for m in four)
    ok = len(H) == 72 and len(orbits) == 16 and sizes == [1, 1] + [2] * 7 + [8] * 7
    ok = ok and union == H and stab_ok and len(four) == 70
    return ok, f"|H|={len(H)} orbits={len(orbits)} sizes={sizes}"


def code_structure(seed: int) -> Result:
    expected = {"empty": 1, "full": 2, "line-pair": 4, "outer": 16}
    ok = True
    for o in codes.orbit_decomposition():
        c = codes.span(o)
        ok &= len(c) == expected[o.kind]
        ok &= all(codes.size(w) in (0, 4, 8) for w in c)
        if o.kind == "outer":
            z = o.label
            through = codes.lines_through(z)
            words = set(o.members) | {codes.EMPTY, codes.FULL} | set(through)
            words |= {codes.complement(L) for L in through}
            ok &= set(c.words) == words and codes.dual(c) == c
            ok &= codes.check_intersection_lemma(z).passed
    return ok, "span sizes, contents and self-duality"


def order_closure(seed: int) -> Result:
    ok = True
    for order in orders.all_orders():
        ok &= orders.verify_closed(order).passed
        ok &= orders.description_equivalence(order)
        ok &= all(orders.verify_generated(order.orbit, X).passed for X in order.orbit)
        ok &= orders.stable_under_gravesian(order)
        ok &= orders.translation_identity(order.orbit)
    return ok, "16 orders"


def lattice_certificates(seed: int) -> Result:
    expected = {
        "Gravesian": (256, 16),
        "Kleinian": (64, 16),
        "double Hurwitzian": (16, 48),
        "octavian": (1, 240),
    }
    ok = True
    for order in orders.all_orders():
        g = orders.gram_certificate(order)
        ok &= g.even and (g.determinant, g.unit_count) == expected[order.family]
    return ok, "determinants and unit counts"


def containment(seed: int) -> Result:
    poset = orders.containment_poset()
    maximal = poset.maximal()
    least = poset.minimum()
    ok = len(maximal) == 7 and all(o.family == "octavian" for o in maximal)
    ok = ok and least is not None and least.family == "Gravesian"
    return ok, f"{len(maximal)} maximal"


def f4_remark(seed: int) -> Result:
    report = algebra.check_f4_remark()
    return report.passed, ", ".join(k for k, v in report.laws.items() if v)


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int], Result]


CHECKS: tuple[Check, ...] = (
    Check("phi(x,x) = ind1(x)", phi_diagonal),
    Check("phi(x,y) + phi(y,x) = ind2(x,y)", phi_antisymmetry),
    Check("phi(x,y) = phi(y,z) = phi(z,x) when x+y+z = 0", phi_cyclic),
    Check("phi(ax,ay) = phi(x,y) = phi(x^2,y^2)", phi_symmetries),
    Check("ind_sum = ind_rank", ind_equivalence),
    Check("delta_phi = ind3", coboundary),
    Check("product table = seed-relation table", table_identification),
    Check("associator closed form", associator_closed_form),
    Check("associator antisymmetric", associator_antisymmetry),
    Check("alternativity", alternativity),
    Check("N(ab) = N(a)N(b)", norm_multiplicative),
    Check("(ab)* = b*a*", anti_automorphism),
    Check("Moufang ((ab)a)c = a(b(ac))", moufang),
    Check("a a*/N(a) = 1", inverse_law),
    Check("x -> x^2 and x -> ax are automorphisms", relabelling_automorphisms),
    Check("orbit census", orbit_census),
    Check("orbit spans and self-duality", code_structure),
    Check("orders closed, three descriptions agree", order_closure),
    Check("lattice certificates", lattice_certificates),
    Check("containment poset", containment),
    Check("F4 twisted algebra commutative and associative", f4_remark),
)


@dataclass
class Outcome:
    name: str
    passed: bool
    detail: str


def run_checks(seed: int = DEFAULT_SEED, checks=CHECKS) -> list[Outcome]:
    out = []
    for check in checks:
        try:
            passed, detail = check.run(seed)
        except Exception as exc:  # noqa: BLE001 - a raising check is a failing check
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(Outcome(check.name, passed, detail))
    return out
