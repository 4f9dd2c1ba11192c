import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from polyadic import MPoly, Poly, build_alphabet, parse_ring_spec, trivial_alphabet
from polyadic import oracle as orc

Z4 = parse_ring_spec("Z/2^2")
Z8 = parse_ring_spec("Z/2^3")
Z9 = parse_ring_spec("Z/3^2")
GR42 = parse_ring_spec("GR(2^2,2;modulus=1,1,1)")


def xnm1(ring, n):
    return Poly.x_pow_minus(ring, n, ring.one)


ALPHABETS = [
    (Z4, [xnm1(Z4, 3)], [1, 2]),
    (Z8, [xnm1(Z8, 7)], [1, 3, 3]),
    (Z9, [xnm1(Z9, 2)], [1, 1]),
    (GR42, [xnm1(GR42, 5)], [1, 2, 2]),
    (Z4, [xnm1(Z4, 3), Poly.from_ints(Z4, [1, 1, 1])], [2, 2, 2]),
]


@pytest.fixture(params=range(len(ALPHABETS)), scope="module",
                ids=["Z4-X3", "Z8-X7", "Z9-X2", "GR42-X5", "Z4-2var"])
def alphabet(request):
    ring, moduli, _ = ALPHABETS[request.param]
    al = build_alphabet(ring, moduli)
    al._expected_sizes = ALPHABETS[request.param][2]
    return al


def test_class_structure(alphabet):
    assert [c.size for c in alphabet.classes] == alphabet._expected_sizes
    # classes partition the root-tuple set; sizes are lcms of coordinate degrees
    total = sum(c.size for c in alphabet.classes)
    assert total == alphabet.quotient.rank
    # independent orbit count
    q = alphabet.ring.q
    assert orc.count_frobenius_orbits(alphabet.root_lists, alphabet.field, q) \
        == alphabet.num_classes


def test_idempotent_suite(alphabet):
    qr = alphabet.quotient
    total = qr.zero
    n = alphabet.num_classes
    for cid in range(n):
        e = alphabet.idempotents[cid]
        assert qr.mul(e, e) == e
        total = total + e
    assert qr.reduce(total) == qr.one
    for i in range(n):
        for j in range(i + 1, n):
            assert qr.mul(alphabet.idempotents[i], alphabet.idempotents[j]).is_zero()
    assert len(alphabet.idempotents) == n


def test_known_idempotents_z4():
    al = build_alphabet(Z4, [xnm1(Z4, 3)])
    e0 = MPoly(Z4, 1, {(0,): Z4.from_int(3), (1,): Z4.from_int(3), (2,): Z4.from_int(3)})
    e1 = MPoly(Z4, 1, {(0,): Z4.from_int(2), (1,): Z4.from_int(1), (2,): Z4.from_int(1)})
    assert al.idempotents[0] == e0   # class of the root 1
    assert al.idempotents[1] == e1   # class {w, w^2}


def test_known_idempotents_z9():
    al = build_alphabet(Z9, [xnm1(Z9, 2)])
    # CRT pair for (X-1)(X+1) over Z_9, computed via extended gcd: 5X+5, 4X+5
    assert al.idempotents[0] == MPoly(Z9, 1, {(0,): Z9.from_int(5), (1,): Z9.from_int(5)})
    assert al.idempotents[1] == MPoly(Z9, 1, {(0,): Z9.from_int(5), (1,): Z9.from_int(4)})


def test_non_squarefree_reports_offender():
    with pytest.raises(ValueError, match="modulus 1"):
        build_alphabet(Z4, [xnm1(Z4, 3), Poly.from_ints(Z4, [1, 0, 1])])


def test_decompose_examples(alphabet):
    qr = alphabet.quotient
    ring = alphabet.ring
    # x = 1: every component is the coordinate vector of e_C itself scaled by 1
    comp = alphabet.decompose([qr.one])
    back = alphabet.reconstruct(comp)
    assert back[0] == qr.one
    # x = e_C0: component 1 at C0, 0 elsewhere
    e0 = alphabet.idempotents[0]
    comp = alphabet.decompose([e0])
    for cid in range(alphabet.num_classes):
        coords = comp[cid][0]
        if cid == 0:
            assert any(c != ring.zero for c in coords)
        else:
            assert all(c == ring.zero for c in coords)


def test_decompose_roundtrip_random(alphabet):
    ring, qr = alphabet.ring, alphabet.quotient
    rng = random.Random(20240810)
    monos = qr.monomials()
    exhaustive = alphabet.size() <= 2 ** 16
    if exhaustive:
        universe = itertools.product(range(ring.size), repeat=len(monos))
        samples = [dict(zip(monos, (ring.decode(v) for v in tup))) for tup in universe]
    else:
        samples = [{m: ring.decode(rng.randrange(ring.size)) for m in monos}
                   for _ in range(200)]
    seen = set()
    for terms in samples:
        x = qr.reduce(MPoly(ring, qr.nvars, terms))
        comp = alphabet.decompose([x])
        back = alphabet.reconstruct(comp)
        assert back[0] == x
        seen.add(tuple((cid, tuple(ring.encode(c) for c in comp[cid][0]))
                       for cid in sorted(comp)))
    if exhaustive:
        assert len(seen) == alphabet.size()  # decompose is injective


def test_decompose_2x_example():
    al = build_alphabet(Z4, [xnm1(Z4, 3)])
    x = MPoly(Z4, 1, {(1,): Z4.from_int(2)})
    comp = al.decompose([x])
    back = al.reconstruct(comp)
    assert back[0] == x


def test_component_rings(alphabet):
    for cl in alphabet.classes:
        T, emb = alphabet.component_ring(cl.id)
        assert T.q == alphabet.ring.q ** cl.size
        assert T.t == alphabet.ring.t
        assert emb(alphabet.ring.one) == T.one


def test_trivial_alphabet():
    al = trivial_alphabet(Z4)
    assert al.num_classes == 1
    assert al.idempotents[0] == al.quotient.one
    comp = al.decompose([al.quotient.one])
    assert al.reconstruct(comp)[0] == al.quotient.one


def test_cache_roundtrip(tmp_path):
    path = str(tmp_path / "idem.cache")
    al1 = build_alphabet(Z8, [xnm1(Z8, 7)], cache_path=path)
    al2 = build_alphabet(Z8, [xnm1(Z8, 7)], cache_path=path)
    assert al1.idempotents == al2.idempotents
    with open(path) as fh:
        content = fh.read()
    assert "hash=" in content and "idem=0" in content
    # stale cache (different spec) is ignored and rebuilt
    path2 = str(tmp_path / "other.cache")
    with open(path2, "w") as fh:
        fh.write(content)
    al3 = build_alphabet(Z4, [xnm1(Z4, 3)], cache_path=path2)
    assert al3.num_classes == 2


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
       st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_decompose_is_linear(a, b):
    al = build_alphabet(Z4, [xnm1(Z4, 3)])
    qr = al.quotient
    x = qr.reduce(MPoly(Z4, 1, {(i,): Z4.from_int(v) for i, v in enumerate(a)}))
    y = qr.reduce(MPoly(Z4, 1, {(i,): Z4.from_int(v) for i, v in enumerate(b)}))
    cx, cy, cxy = al.decompose([x]), al.decompose([y]), al.decompose([x + y])
    for cid in cx:
        got = tuple(Z4.add(u, v) for u, v in zip(cx[cid][0], cy[cid][0]))
        assert got == cxy[cid][0]
