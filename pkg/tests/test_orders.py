import random
from fractions import Fraction
from itertools import product

import pytest

from octf8 import codes, gf8, orders
from octf8.algebra import ONE, Octonion, basis, multiply, norm, trace_oct
from octf8.codes import EMPTY, FULL, from_elements
from octf8.orders import e_half, halving_set

import oracles

half = Fraction(1, 2)

# (determinant, unit count) keyed by the smallest mask in the orbit, frozen
# from ``python tests/oracles.py`` (full-box scan + sympy lattice solve).
ORACLE_TABLE = {
    0x00: (256, 16),
    0xFF: (64, 16),
    0x0F: (16, 48), 0x33: (16, 48), 0x3C: (16, 48), 0x55: (16, 48),
    0x5A: (16, 48), 0x66: (16, 48), 0x69: (16, 48),
    0x17: (1, 240), 0x1B: (1, 240), 0x1D: (1, 240), 0x1E: (1, 240),
    0x35: (1, 240), 0x36: (1, 240), 0x56: (1, 240),
}


@pytest.fixture(scope="module")
def all_orders():
    return orders.all_orders()


def by_name(name):
    return orders.find_order(name)


def test_oracle_still_reproduces_frozen_table():
    computed = {orbit[0]: (det, units) for (_, _, det, units), orbit in
                zip(oracles.table(), oracles.orbits_by_translation())}
    assert computed == ORACLE_TABLE


def test_e_half():
    for X in codes.enumerate_H():
        a = e_half(X)
        assert halving_set(a) == X
        assert trace_oct(a).denominator == 1 and norm(a).denominator == 1
        if codes.size(X) == 4:
            assert norm(a) == 1
            square = multiply(a, a)
            assert square == (a - 1 if X & 1 else -ONE)
    with pytest.raises(ValueError):
        e_half(from_elements([0, 1, 2]))


def test_halving_set():
    assert all(halving_set(basis(x)) == 0 for x in range(8))
    with pytest.raises(ValueError):
        halving_set(Octonion([Fraction(1, 4), 0, 0, 0, 0, 0, 0, 0]))


def test_halving_sets_add_by_symmetric_difference():
    rng = random.Random(3)
    for _ in range(500):
        u = Octonion(Fraction(rng.randint(-6, 6), 2) for _ in range(8))
        v = Octonion(Fraction(rng.randint(-6, 6), 2) for _ in range(8))
        assert halving_set(u + v) == halving_set(u) ^ halving_set(v)


def test_named_orders(all_orders):
    assert len(all_orders) == 16
    assert [o.name for o in all_orders[:2]] == ["Gravesian", "Kleinian"]
    grav = by_name("gravesian")
    assert grav.basis == tuple(tuple(2 if i == j else 0 for j in range(8)) for i in range(8))
    assert by_name("Kleinian").code.words == {EMPTY, FULL}
    assert by_name("0-integers").orbit == codes.outer_family(1)
    assert by_name("3-integers").orbit == codes.outer_family(gf8.pow(gf8.ALPHA, 3))
    assert by_name("double-hurwitzian-124").orbit.label == from_elements([0, 2, 4, 6])
    assert by_name("a^3") == by_name("3-integers")
    with pytest.raises(KeyError, match="gravesian"):
        by_name("no-such-order")


def test_conway_smith_names(all_orders):
    names = [o.name for o in all_orders]
    assert names[:2] == ["Gravesian", "Kleinian"]
    assert all(n.startswith("double Hurwitzian (") for n in names[2:9])
    assert names[9:] == [f"{j}-integers" for j in range(7)]


def test_contains(all_orders):
    for order in all_orders:
        assert all(orders.contains(order, basis(x)) for x in range(8))
        assert all(orders.contains(order, e_half(X)) for X in order.orbit)
    grav = orders.gravesian()
    assert not orders.contains(grav, e_half(codes.lines()[0]))
    assert not orders.contains(grav, basis(3) / 3)


def test_contains_code_and_lattice_agree_on_half_box(all_orders):
    rng = random.Random(11)
    samples = [Octonion(Fraction(rng.randint(-3, 3), 2) for _ in range(8)) for _ in range(300)]
    for order in all_orders:
        for a in samples:
            assert orders.in_code(order, a) == orders.in_lattice(order, a)


def test_closure(all_orders):
    for order in all_orders:
        cert = orders.verify_closed(order)
        assert cert.passed and len(cert.products) == 64


def test_generation(all_orders):
    for order in all_orders:
        for X in order.orbit:
            cert = orders.verify_generated(order.orbit, X)
            assert cert.passed
            assert cert.reached == order.basis
    assert orders.verify_generated(all_orders[0].orbit, EMPTY).iterations == 1
    with pytest.raises(ValueError):
        orders.verify_generated(all_orders[0].orbit, FULL)


def test_descriptions_agree(all_orders):
    assert all(orders.description_equivalence(o) for o in all_orders)


def test_gravesian_stability_and_translation(all_orders):
    for order in all_orders:
        assert orders.stable_under_gravesian(order)
        assert orders.translation_identity(order.orbit)


def test_integrality(all_orders):
    rng = random.Random(5)
    assert all(orders.integral_elements(o, rng) for o in all_orders)


def test_gram_certificates_match_oracle(all_orders):
    for order in all_orders:
        g = orders.gram_certificate(order)
        assert (g.determinant, g.unit_count) == ORACLE_TABLE[order.orbit.members[0]]
        assert g.even
        assert all(g.gram[i][j] == g.gram[j][i] for i, j in product(range(8), repeat=2))
    grav = orders.gram_certificate(all_orders[0])
    assert grav.gram == [[2 if i == j else 0 for j in range(8)] for i in range(8)]


def test_units_have_norm_one(all_orders):
    order = by_name("5-integers")
    found = orders.units(order)
    assert len(set(found)) == len(found) == 240
    for v in found[::17]:
        a = orders.halved(v)
        assert norm(a) == 1 and orders.contains(order, a)


def test_containment_poset():
    poset = orders.containment_poset()
    maximal = poset.maximal()
    assert len(maximal) == 7
    assert {o.family for o in maximal} == {"octavian"}
    assert poset.minimum().name == "Gravesian"
    kleinian = by_name("kleinian")
    for o in maximal:
        assert kleinian <= o
        assert FULL in o.code


def test_trace_pairing_obstruction():
    assert orders.trace_pairing_obstruction(basis(3), basis(5) * 2) == 0
    fam = codes.outer_family(4).members
    assert orders.trace_pairing_obstruction(e_half(fam[0]), e_half(fam[1])) == 0
    line = from_elements([0, 1, 2, 3])
    meets_once = from_elements([3, 4, 5, 6])
    assert codes.size(line & meets_once) == 1
    assert orders.trace_pairing_obstruction(e_half(line), e_half(meets_once)) == 1
    assert trace_oct(multiply(e_half(line), e_half(meets_once))).denominator == 2


def test_order_json(all_orders):
    obj = orders.order_to_json(by_name("kleinian"))
    assert obj["code"] == ["00", "ff"]
    assert obj["determinant"] == 64 and obj["unit_count"] == 16
    assert obj["closure"] == obj["generated_check"] == "pass"
    assert len(obj["basis"]) == 8 and all(len(r) == 8 for r in obj["basis"])
    assert obj["orbit"]["kind"] == "full"
