import pytest

from polyadic import (MPoly, Poly, QuotientRing, factor_degrees,
                      hensel_lift_factor, hensel_lift_factorization,
                      lift_idempotent, parse_ring_spec, poly_divmod, poly_gcd,
                      residue_poly, roots_in_extension, squarefree_check)
from polyadic.polyring import poly_ext_gcd, poly_powmod

Z4 = parse_ring_spec("Z/2^2")
Z9 = parse_ring_spec("Z/3^2")
F2 = Z4.residue_field
F3 = Z9.residue_field


def ip(ring, ints):
    return Poly.from_ints(ring, ints)


def test_gcd_example():
    # derivative of X^3+1 over F_2 is X^2; gcd(X^3+1, X^2) = 1
    f = Poly(F2, [1, 0, 0, 1])
    d = f.derivative()
    assert d == Poly(F2, [0, 0, 1])
    assert poly_gcd(f, d).degree == 0


def test_mul_example_z4():
    # (X+1)(X+3) = X^2 + 3 over Z_4
    assert ip(Z4, [1, 1]) * ip(Z4, [3, 1]) == ip(Z4, [3, 0, 1])


def test_eval_cube_root():
    # X^2+X+1 vanishes at a primitive cube root of unity
    f = Poly(F2, [1, 1, 1])
    ext, roots, D = roots_in_extension(f)
    assert D == 2 and len(roots) == 2
    table = ext.embed_from(F2)
    for w in roots:
        assert ext.pow(w, 3) == ext.one and w != ext.one
        assert f.evaluate_embedded(ext, table, w) == 0


def test_squarefree_examples():
    assert squarefree_check(Poly(F2, [1, 0, 0, 1]))        # X^3 - 1
    assert not squarefree_check(Poly(F2, [1, 0, 1]))       # (X+1)^2
    assert squarefree_check(Poly(F2, [1, 1, 1]))
    # derivative-zero case: X^2 over... X^p-type
    assert not squarefree_check(Poly(F2, [1, 0, 0, 0, 1]))  # X^4+1=(X+1)^4


def test_divmod_monic_only_over_chain_ring():
    f = ip(Z4, [1, 2, 3, 1])
    g = ip(Z4, [1, 1])
    q, r = poly_divmod(f, g)
    assert q * g + r == f and r.degree < g.degree
    with pytest.raises(ValueError):
        poly_divmod(f, ip(Z4, [1, 2]))  # leading coeff 2 is not a unit


def test_roots_examples():
    f = Poly(F2, [1, 0, 0, 1])
    ext, roots, D = roots_in_extension(f)
    assert D == 2 and ext.size == 4
    assert roots[0] == ext.one  # dlog order, 1 first
    assert len(roots) == 3
    g = Poly(F3, [2, 1])  # X - 1 over F_3
    ext3, roots3, D3 = roots_in_extension(g)
    assert D3 == 1 and roots3 == [1]
    h = Poly(F3, [1, 0, 0, 0, 1])  # Y^4 + 1
    ext9, roots9, D9 = roots_in_extension(h)
    assert D9 == 2 and len(roots9) == 4
    assert factor_degrees(h) == [2, 2]


def test_factor_degrees_mixed():
    # X^3 - 1 = (X+1)(X^2+X+1) over F_2
    assert factor_degrees(Poly(F2, [1, 0, 0, 1])) == [1, 2]
    # X^7 - 1 over F_2: 1 + 3 + 3
    assert factor_degrees(Poly(F2, [1, 0, 0, 0, 0, 0, 0, 1])) == [1, 3, 3]


def test_hensel_example_z4():
    f = ip(Z4, [-1, 0, 0, 1])
    g, h = hensel_lift_factor(f, Poly(F2, [1, 1]), Poly(F2, [1, 1, 1]))
    assert g == ip(Z4, [3, 1])
    assert h == ip(Z4, [1, 1, 1])
    assert g * h == f


def test_hensel_exact_input_unchanged():
    f = ip(Z9, [-1, 0, 1])
    g, h = hensel_lift_factor(f, Poly(F3, [2, 1]), Poly(F3, [1, 1]))
    assert g == ip(Z9, [8, 1]) and h == ip(Z9, [1, 1])


def test_hensel_uniqueness_and_errors():
    Z8 = parse_ring_spec("Z/2^3")
    f = Poly.from_ints(Z8, [-1] + [0] * 6 + [1])  # X^7 - 1
    F = Z8.residue_field
    fbar = residue_poly(f)
    gbar = Poly(F, [1, 1])
    hbar, r = poly_divmod(fbar, gbar)
    assert r.is_zero()
    g1, h1 = hensel_lift_factor(f, gbar, hbar)
    assert g1 * h1 == f
    # "perturbed start" re-lift: lifting h-bar against g-bar instead
    h2, g2 = hensel_lift_factor(f, hbar, gbar)
    assert (g2, h2) == (g1, h1)  # unique given the residue pair, both monic
    with pytest.raises(ValueError, match="coprime"):
        hensel_lift_factor(Poly.from_ints(Z4, [1, 0, 1]), Poly(F2, [1, 1]),
                           Poly(F2, [1, 1]))


def test_hensel_full_factorization():
    Z8 = parse_ring_spec("Z/2^3")
    f = Poly.from_ints(Z8, [-1] + [0] * 6 + [1])
    fbar = residue_poly(f)
    res_parts = []
    g = fbar
    for cand in ([1, 1], [1, 1, 0, 1], [1, 0, 1, 1]):
        p = Poly(Z8.residue_field, cand)
        q, r = poly_divmod(g, p)
        assert r.is_zero()
        res_parts.append(p)
        g = q
    lifted = hensel_lift_factorization(f, res_parts)
    prod = lifted[0]
    for x in lifted[1:]:
        prod = prod * x
    assert prod == f


def test_ext_gcd_bezout():
    a = Poly(F3, [1, 0, 0, 0, 1])
    b = Poly(F3, [1, 1])
    d, s, t = poly_ext_gcd(a, b)
    assert s * a + t * b == d


def test_powmod():
    f = Poly(F2, [1, 1, 0, 1])
    x = Poly(F2, [0, 1])
    assert poly_powmod(x, 8, f) == poly_powmod(poly_powmod(x, 2, f), 4, f)


def test_lift_idempotent_examples():
    qr = QuotientRing(Z4, [ip(Z4, [-1, 0, 0, 1])])
    one = MPoly(F2, 1, {(0,): 1})
    assert lift_idempotent(qr, one) == qr.one
    e = lift_idempotent(qr, MPoly(F2, 1, {(0,): 1, (1,): 1, (2,): 1}))
    assert e == MPoly(Z4, 1, {(0,): Z4.from_int(3), (1,): Z4.from_int(3),
                              (2,): Z4.from_int(3)})
    e2 = lift_idempotent(qr, MPoly(F2, 1, {(1,): 1, (2,): 1}))
    assert e2 == MPoly(Z4, 1, {(0,): Z4.from_int(2), (1,): Z4.from_int(1),
                               (2,): Z4.from_int(1)})
    # oracle: square-and-reduce by hand
    assert qr.mul(e2, e2) == e2
    with pytest.raises(ValueError, match="idempotent"):
        lift_idempotent(qr, MPoly(F2, 1, {(1,): 1}))


def test_lift_idempotent_higher_nilpotency():
    Z8 = parse_ring_spec("Z/2^3")
    qr = QuotientRing(Z8, [Poly.from_ints(Z8, [-1, 0, 0, 1])])
    F = Z8.residue_field
    e = lift_idempotent(qr, MPoly(F, 1, {(0,): 1, (1,): 1, (2,): 1}))
    assert qr.mul(e, e) == e
    comp = qr.one - e
    assert qr.mul(comp, comp) == comp and qr.mul(e, comp).is_zero()


def test_quotient_reduction_multivariable():
    mods = [ip(Z4, [-1, 0, 0, 1]), ip(Z4, [1, 1, 1])]
    qr = QuotientRing(Z4, mods)
    x = MPoly.monomial(Z4, 2, (1, 0))
    y = MPoly.monomial(Z4, 2, (0, 1))
    x3 = qr.pow(x, 3)
    assert x3 == qr.one  # X^3 = 1
    y2 = qr.pow(y, 2)
    # Y^2 = -Y - 1 = 3Y + 3
    assert y2 == MPoly(Z4, 2, {(0, 0): Z4.from_int(3), (0, 1): Z4.from_int(3)})
    assert qr.rank == 6 and len(qr.monomials()) == 6
