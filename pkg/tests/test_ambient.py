import itertools

import pytest

from polyadic import (MPoly, Multiplier, Poly, build_ambient, parse_ring_spec,
                      standard_form_cardinality, standard_form_generator,
                      standard_form_single_generator)
from polyadic.polyring import poly_divmod
from polyadic import oracle as orc

Z4 = parse_ring_spec("Z/2^2")
Z8 = parse_ring_spec("Z/2^3")
Z9 = parse_ring_spec("Z/3^2")
GR42 = parse_ring_spec("GR(2^2,2;modulus=1,1,1)")


def idx_sets(amb):
    return [sorted(i[0] for i in s) for s in amb.classes_by_index]


def test_build_examples():
    amb = build_ambient(Z4, [7])
    assert idx_sets(amb) == [[0], [1, 2, 4], [3, 5, 6]]
    amb11 = build_ambient(Z9, [11])
    assert idx_sets(amb11) == [[0], [1, 3, 4, 5, 9], [2, 6, 7, 8, 10]]
    nega = build_ambient(Z9, [4], [-1])
    assert sorted(len(s) for s in nega.classes_by_index) == [2, 2]
    with pytest.raises(ValueError, match="coprime"):
        build_ambient(Z4, [6])
    with pytest.raises(ValueError, match="unit"):
        build_ambient(Z4, [7], [2])


def test_consta_orbits_invariant_under_beta_choice():
    # re-run the affine orbit computation from every alternative beta
    nega = build_ambient(Z9, [4], [-1])
    F = nega.alphabet.field
    q = Z9.q
    roots = nega.alphabet.root_lists[0]
    baseline = {frozenset(cl.members) for cl in nega.alphabet.classes}
    for beta in roots:
        xi = nega.xi[0]
        idx_of = {F.mul(beta, F.pow(xi, i)): i for i in range(4)}
        m = idx_of[F.pow(beta, q)]
        # orbits of i -> q*i + m on indices, pulled back to roots
        seen, parts = set(), set()
        for i0 in range(4):
            if i0 in seen:
                continue
            orb = []
            i = i0
            while i not in seen:
                seen.add(i)
                orb.append(i)
                i = (q * i + m) % 4
            parts.add(frozenset((F.mul(beta, F.pow(xi, k)),) for k in orb))
        assert parts == baseline


def test_cardinality_formula_examples():
    amb = build_ambient(Z4, [7])
    assert amb.code([2, 2, 2]).cardinality() == 1
    assert amb.code([0, 0, 0]).cardinality() == 4 ** 7
    assert amb.code([2, 0, 0]).cardinality() == 4 ** 6


def test_cardinality_vs_enumeration():
    amb = build_ambient(Z4, [7])
    for exps in itertools.product(range(3), repeat=3):
        code = amb.code(exps)
        if code.cardinality() <= 1 << 15:
            ideal = orc.enumerate_code(code, verify=True)
            assert len(ideal) == code.cardinality()


def test_code_ops_examples():
    amb = build_ambient(Z4, [7])
    whole, zero = amb.whole(), amb.zero_code()
    assert whole.dual() == zero
    c = amb.code_from_zero_classes({1})  # zero-classes {1,2,4}, exponent 2
    assert c.dual().zero_classes() == frozenset({0, 1})
    img = c.multiplier_image(Multiplier((3,)))
    assert img.zero_classes() == frozenset({2})
    # sum = min, intersect = max
    a, b = amb.code([2, 0, 1]), amb.code([1, 1, 0])
    assert a.sum(b).exps == (1, 0, 0)
    assert a.intersect(b).exps == (2, 1, 1)
    assert a.product(b).exps == (2, 1, 1)
    with pytest.raises(ValueError, match="ambient"):
        a.sum(build_ambient(Z4, [3]).code([0, 0]))
    with pytest.raises(ValueError, match="range"):
        amb.code([3, 0, 0])


def test_multiplier_roundtrip_is_identity():
    amb = build_ambient(Z9, [11])
    for u in (2, 6, 7, 8, 10):
        mu, mu_inv = Multiplier((u,)), Multiplier((pow(u, -1, 11),))
        c = amb.code([1, 2, 0])
        assert c.multiplier_image(mu).multiplier_image(mu_inv) == c


def brute_dual_of(code):
    amb = code.ambient
    gens = orc.code_generators(code)
    n = len(orc.ambient_indices(amb))
    return orc.brute_dual(amb.ring, gens, n)


def test_dual_rule_vs_exhaustive_z4_z7():
    amb = build_ambient(Z4, [7])
    for exps in itertools.product(range(3), repeat=3):
        code = amb.code(exps)
        dual = code.dual()
        bd = set(map(bytes, brute_dual_of(code)))
        expected = orc.enumerate_code(dual).as_set()
        assert bd == expected, exps


def test_dual_rule_vs_exhaustive_nega():
    nega = build_ambient(Z9, [4], [-1])
    assert nega.dual_ambient() is nega  # (-1)^2 = 1
    for exps in itertools.product(range(3), repeat=2):
        code = nega.code(exps)
        bd = set(map(bytes, brute_dual_of(code)))
        expected = orc.enumerate_code(code.dual()).as_set()
        assert bd == expected, exps


def test_free_code_size_product():
    amb = build_ambient(Z4, [7])
    n = 7
    for exps in itertools.product((0, 2), repeat=3):
        code = amb.code(exps)
        assert code.cardinality() * code.dual().cardinality() == Z4.size ** n


def test_sum_intersect_rules_vs_elementwise():
    # min/max exponent rules against explicit ideal sum (span of both
    # generator sets) and set intersection of the enumerated ideals
    import random
    rng = random.Random(7)
    for amb in (build_ambient(Z4, [7]), build_ambient(Z9, [4], [-1])):
        ring = amb.ring
        n = amb.orders[0]
        for _ in range(8):
            a = amb.code([rng.randrange(ring.t + 1) for _ in range(amb.num_classes)])
            b = amb.code([rng.randrange(ring.t + 1) for _ in range(amb.num_classes)])
            ea, eb = orc.enumerate_code(a), orc.enumerate_code(b)
            gens = orc.code_generators(a) + orc.code_generators(b)
            span = orc.span_module(ring, gens, n)
            assert set(map(bytes, span)) == orc.enumerate_code(a.sum(b)).as_set()
            assert ea.as_set() & eb.as_set() == \
                orc.enumerate_code(a.intersect(b)).as_set()


def test_membership():
    amb = build_ambient(Z4, [7])
    rep_gen = MPoly(Z4, 1, {(i,): Z4.one for i in range(7)})
    rep = amb.code([0, 2, 2])
    assert rep.membership(rep_gen)
    assert not amb.code([2, 2, 2]).membership(rep_gen)
    assert amb.whole().membership(rep_gen)


def test_idempotent_generator_generates():
    amb = build_ambient(Z4, [7])
    code = amb.code([1, 0, 2])
    gen = code.idempotent_generator()
    vec = orc.mpoly_vector(amb, gen)
    ideal = orc.enumerate_ideal(Z4, [vec], 7, orc.group_shift_maps(amb))
    assert ideal.as_set() == orc.enumerate_code(code).as_set()


def test_code_from_generator_matches():
    amb = build_ambient(Z4, [7])
    factors = amb.lifted_class_factors()
    assert amb.code_from_generator(factors[1]).exps == (0, 2, 0)
    g = factors[0] * factors[2]
    assert amb.code_from_generator(g).exps == (2, 0, 2)
    two_g = g.scale(Z4.from_int(2))
    assert amb.code_from_generator(two_g).exps == (2, 1, 2)


# ---------------------------------------------------------------------------
# standard form

def all_codes(amb):
    t = amb.ring.t
    for exps in itertools.product(range(t + 1), repeat=amb.num_classes):
        yield amb.code(exps)


@pytest.mark.parametrize("ring,orders,lam", [(Z4, [7], [1]), (Z9, [4], [-1])])
def test_standard_form_all_codes(ring, orders, lam):
    amb = build_ambient(ring, orders, lam)
    modulus = Poly.x_pow_minus(ring, orders[0], amb.lam[0])
    count = 0
    for code in all_codes(amb):
        chain = standard_form_generator(code)
        if not chain:
            assert code.cardinality() == 1
            continue
        count += 1
        bs = [b for b, _ in chain]
        assert bs == sorted(bs) and len(set(bs)) == len(bs) and bs[-1] < ring.t
        degs = [g.degree for _, g in chain]
        assert degs == sorted(degs, reverse=True)
        prev = modulus
        for _, g in chain:
            q, r = poly_divmod(prev, g)
            assert r.is_zero()
            assert g.is_monic() or g.degree == 0
            prev = g
        assert standard_form_cardinality(code) == code.cardinality()
        # the single generator generates the code (ideal equality by enumeration)
        gen = standard_form_single_generator(code)
        vec = orc.mpoly_vector(amb, gen)
        ideal = orc.enumerate_ideal(ring, [vec], orders[0],
                                    orc.group_shift_maps(amb))
        assert ideal.as_set() == orc.enumerate_code(code).as_set()
    assert count >= (3 ** amb.num_classes) - 1


def test_standard_form_edges():
    amb = build_ambient(Z4, [7])
    assert standard_form_generator(amb.zero_code()) == []
    whole = standard_form_generator(amb.whole())
    assert whole == [(0, Poly(Z4, [Z4.one]))]
    two = build_ambient(Z4, [3, 5])
    with pytest.raises(ValueError, match="univariate"):
        standard_form_generator(two.whole())
