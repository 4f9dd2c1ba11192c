"""Group-algebra ambients R[A] and their consta twists over a chain ring.

An ambient is R[Y_1..Y_d]/(Y_1^r_1 - lam_1, ..., Y_d^r_d - lam_d) with every
gcd(r_i, q) = 1 and every lam_i a unit.  The residue roots of Y^r - lam-bar
are beta * xi^i (beta the smallest-dlog root, xi the canonical primitive
r-th root of unity), so the root set is indexed by the group A and the
q-power Frobenius acts on index space by the affine map i -> q*i + m with
beta^q = beta * xi^m.  Classes are the orbits of that map; for lam = 1 they
are the classical q-cyclotomic cosets.

Codes are held as defining-set data: one exponent in [0, t] per class
(component = m^j * e_C; 0 = full, t = zero).  Sums take cellwise minima,
intersections maxima, duals flip j -> t-j and permute classes by
coordinatewise root inversion (which lands in the lam^{-1} ambient).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chainring import ChainRing, RingElement
from .polyring import MPoly, Poly, hensel_lift_factorization, poly_divmod, residue_poly
from .alphabet import SerialAlphabet, build_alphabet


class AbelianAmbient:
    """R[Y..]/(Y_i^{r_i} - lam_i) with index-space class bookkeeping."""

    def __init__(self, ring: ChainRing, orders, lam):
        self.ring = ring
        self.orders = tuple(int(r) for r in orders)
        lam = [ring.from_int(v) if isinstance(v, int) else v for v in lam]
        if len(lam) != len(self.orders):
            raise ValueError("need one lambda per cyclic factor")
        for i, r in enumerate(self.orders):
            if r < 1 or math.gcd(r, ring.q) != 1:
                raise ValueError(f"order r_{i} = {r} is not coprime to q = {ring.q}")
        for i, lv in enumerate(lam):
            if not ring.is_unit(lv):
                raise ValueError(f"lambda_{i} is not a unit")
        self.lam = tuple(lam)
        self.is_plain = all(lv == ring.one for lv in lam)
        moduli = [Poly.x_pow_minus(ring, r, lv) for r, lv in zip(self.orders, lam)]
        self.alphabet = build_alphabet(ring, moduli)
        self._index_setup()
        self._dual_ambient = None
        self._neg_map = None
        self._lifted_factors = None
        self._component_cache: dict[int, "AbelianAmbient"] = {}

    # -- index bookkeeping --------------------------------------------------

    def _index_setup(self):
        F = self.alphabet.field
        q = self.ring.q
        self.beta = []
        self.xi = []
        self.frobenius_affine = []
        self._index_of_root = []
        for j, r in enumerate(self.orders):
            roots = self.alphabet.root_lists[j]
            beta = roots[0]  # smallest dlog
            xi = F.exp((F.size - 1) // r)
            assert F.pow(xi, r) == F.one and all(
                F.pow(xi, k) != F.one for k in range(1, r) if r > 1)
            idx = {}
            cur = beta
            for i in range(r):
                idx[cur] = i
                cur = F.mul(cur, xi)
            assert set(idx) == set(roots)
            # beta^q = beta * xi^m
            m = idx[F.pow(beta, q)]
            self.beta.append(beta)
            self.xi.append(xi)
            self.frobenius_affine.append((q % r, m))
            self._index_of_root.append(idx)
        self.classes_by_index = []
        self._class_of_index = {}
        for cl in self.alphabet.classes:
            idxs = frozenset(self.index_of_root_tuple(m) for m in cl.members)
            self.classes_by_index.append(idxs)
            for it in idxs:
                self._class_of_index[it] = cl.id
        # the affine Frobenius must reproduce the orbit partition
        for it, cid in self._class_of_index.items():
            assert self._class_of_index[self.frobenius_index(it)] == cid

    def index_of_root_tuple(self, member) -> tuple[int, ...]:
        return tuple(self._index_of_root[j][x] for j, x in enumerate(member))

    def root_of_index_tuple(self, idx) -> tuple[int, ...]:
        F = self.alphabet.field
        return tuple(F.mul(self.beta[j], F.pow(self.xi[j], i))
                     for j, i in enumerate(idx))

    def frobenius_index(self, idx) -> tuple[int, ...]:
        return tuple((a * i + b) % r for (a, b), i, r
                     in zip(self.frobenius_affine, idx, self.orders))

    @property
    def num_classes(self) -> int:
        return self.alphabet.num_classes

    def class_of_index(self, idx) -> int:
        return self._class_of_index[tuple(i % r for i, r in zip(idx, self.orders))]

    def class_index_set(self, cid: int) -> frozenset:
        return self.classes_by_index[cid]

    def zero_class(self) -> int:
        """Class of the all-zero index (the all-ones root for lam = 1)."""
        return self.class_of_index((0,) * len(self.orders))

    def content_hash(self) -> str:
        return self.alphabet.content_hash()

    # -- multiplier actions ---------------------------------------------------

    def apply_affine(self, maps, idx) -> tuple[int, ...]:
        return tuple((u * i + c) % r for (u, c), i, r in zip(maps, idx, self.orders))

    def class_perm(self, multiplier) -> dict[int, int] | None:
        """Forward permutation of class ids induced by an affine multiplier,
        or None if the map does not permute the orbit partition."""
        maps = multiplier.affine_maps(self)
        perm = {}
        for cid, idxs in enumerate(self.classes_by_index):
            images = {self.class_of_index(self.apply_affine(maps, it)) for it in idxs}
            if len(images) != 1:
                return None
            tgt = images.pop()
            if len(self.classes_by_index[tgt]) != len(idxs):
                return None
            perm[cid] = tgt
        if sorted(perm.values()) != list(range(self.num_classes)):
            return None
        return perm

    # -- duality ----------------------------------------------------------------

    def dual_ambient(self) -> "AbelianAmbient":
        """The lam^{-1} ambient the Euclidean dual lives in (self if lam^2=1)."""
        if self._dual_ambient is None:
            if all(self.ring.mul(lv, lv) == self.ring.one for lv in self.lam):
                self._dual_ambient = self
            else:
                self._dual_ambient = AbelianAmbient(
                    self.ring, self.orders, [self.ring.inv(lv) for lv in self.lam])
        return self._dual_ambient

    def negation_class_map(self) -> dict[int, int]:
        """Class permutation induced by coordinatewise root inversion,
        mapping this ambient's classes to the dual ambient's."""
        if self._neg_map is None:
            F = self.alphabet.field
            dual = self.dual_ambient()
            assert dual.alphabet.field is F, "dual ambient splits in a different field"
            out = {}
            for cl in self.alphabet.classes:
                inv_root = tuple(F.inv(x) for x in cl.members[0])
                out[cl.id] = dual.class_of_index(dual.index_of_root_tuple(inv_root))
            assert sorted(out.values()) == list(range(self.num_classes))
            self._neg_map = out
        return self._neg_map

    def negation_multiplier(self):
        """Root inversion as an affine multiplier (needs lam^2 = 1)."""
        from .splitting import Multiplier
        if self.dual_ambient() is not self:
            raise ValueError("root inversion leaves the ambient unless lambda^2 = 1")
        F = self.alphabet.field
        offs = []
        for j, r in enumerate(self.orders):
            inv_beta = F.inv(self.beta[j])
            offs.append(self._index_of_root[j][inv_beta])
        return Multiplier(tuple((-1) % r for r in self.orders), tuple(offs))

    # -- codes ---------------------------------------------------------------

    def code(self, exps) -> "DefiningSetCode":
        return DefiningSetCode(self, tuple(exps))

    def code_from_zero_classes(self, zero_classes) -> "DefiningSetCode":
        t = self.ring.t
        return self.code([t if cid in zero_classes else 0
                          for cid in range(self.num_classes)])

    def whole(self) -> "DefiningSetCode":
        return self.code([0] * self.num_classes)

    def zero_code(self) -> "DefiningSetCode":
        return self.code([self.ring.t] * self.num_classes)

    def code_from_generator(self, g) -> "DefiningSetCode":
        """Defining-set data of the ideal <g>: per class, the valuation of
        the e_C-component of g."""
        if isinstance(g, Poly):
            g = MPoly(self.ring, len(self.orders),
                      {(i,): c for i, c in enumerate(g.coeffs)})
        g = self.alphabet.quotient.reduce(g)
        return self.code([self.alphabet.component_valuation(g, cid)
                          for cid in range(self.num_classes)])

    # -- univariate factor chain ------------------------------------------------

    def lifted_class_factors(self) -> list[Poly]:
        """Per class, the Hensel-lifted monic factor of Y^n - lam (delta=1)."""
        if len(self.orders) != 1:
            raise ValueError("factor chain is univariate only")
        if self._lifted_factors is None:
            R = self.ring
            F = self.alphabet.field
            emb = F.embed_from(R.residue_field)
            inv_embed = {emb[y]: y for y in R.residue_field.elements()}
            res_factors = []
            for cl in self.alphabet.classes:
                f = Poly(F, [F.one])
                for member in cl.members:
                    f = f * Poly(F, [F.neg(member[0]), F.one])
                res_factors.append(Poly(R.residue_field,
                                        [inv_embed[c] for c in f.coeffs]))
            modulus = Poly.x_pow_minus(R, self.orders[0], self.lam[0])
            self._lifted_factors = hensel_lift_factorization(modulus, res_factors)
        return self._lifted_factors

    # -- components over extension rings ---------------------------------------

    def component_ambient(self, alphabet: SerialAlphabet, cid: int
                          ) -> tuple["AbelianAmbient", dict[int, int]]:
        """The same group ambient over T_C = component ring of a serial
        alphabet class, plus the map refining its classes into ours."""
        key = (id(alphabet), cid)
        if key not in self._component_cache:
            T, embed = alphabet.component_ring(cid)
            amb = AbelianAmbient(T, self.orders, [embed(lv) for lv in self.lam])
            refine = {}
            for sub_cid, idxs in enumerate(amb.classes_by_index):
                parents = {self.class_of_index(it) for it in idxs}
                assert len(parents) == 1, "refined class crosses a parent class"
                refine[sub_cid] = parents.pop()
            self._component_cache[key] = (amb, refine)
        return self._component_cache[key]

    def __repr__(self):
        lam = ",".join(str(self.ring.encode(lv)) for lv in self.lam)
        return (f"AbelianAmbient({self.ring.spec_string()}, "
                f"orders={self.orders}, lambda=[{lam}])")


_AMBIENT_CACHE: dict[tuple, AbelianAmbient] = {}


def build_ambient(ring: ChainRing, orders, lam=None) -> AbelianAmbient:
    orders = tuple(int(r) for r in orders)
    if lam is None:
        lam = [1] * len(orders)
    lam_els = tuple(ring.from_int(v) if isinstance(v, int) else v for v in lam)
    key = (id(ring), orders, tuple(ring.encode(v) for v in lam_els))
    if key not in _AMBIENT_CACHE:
        _AMBIENT_CACHE[key] = AbelianAmbient(ring, orders, lam_els)
    return _AMBIENT_CACHE[key]


# ---------------------------------------------------------------------------
# defining-set codes

@dataclass(frozen=True)
class DefiningSetCode:
    """Ideal of the ambient encoded as class id -> exponent in [0, t]."""
    ambient: AbelianAmbient
    exps: tuple[int, ...]

    def __post_init__(self):
        t = self.ambient.ring.t
        if len(self.exps) != self.ambient.num_classes:
            raise ValueError("need one exponent per class")
        for j in self.exps:
            if not 0 <= j <= t:
                raise ValueError(f"exponent {j} out of range [0, {t}]")

    def _check_same(self, other: "DefiningSetCode"):
        if self.ambient is not other.ambient:
            raise ValueError("codes live in different ambients")

    def cardinality(self) -> int:
        q, t = self.ambient.ring.q, self.ambient.ring.t
        e = sum((t - j) * self.ambient.alphabet.classes[cid].size
                for cid, j in enumerate(self.exps))
        return q ** e

    def sum(self, other) -> "DefiningSetCode":
        self._check_same(other)
        return DefiningSetCode(self.ambient,
                               tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def intersect(self, other) -> "DefiningSetCode":
        self._check_same(other)
        return DefiningSetCode(self.ambient,
                               tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def product(self, other) -> "DefiningSetCode":
        self._check_same(other)
        t = self.ambient.ring.t
        return DefiningSetCode(self.ambient,
                               tuple(min(t, a + b) for a, b in zip(self.exps, other.exps)))

    def dual(self) -> "DefiningSetCode":
        """Exponents j -> t - j composed with the root-inversion class map;
        lands in the lam^{-1} ambient."""
        t = self.ambient.ring.t
        target = self.ambient.dual_ambient()
        neg = self.ambient.negation_class_map()
        out = [0] * self.ambient.num_classes
        for cid, j in enumerate(self.exps):
            out[neg[cid]] = t - j
        return DefiningSetCode(target, tuple(out))

    def multiplier_image(self, multiplier) -> "DefiningSetCode":
        perm = self.ambient.class_perm(multiplier)
        if perm is None:
            raise ValueError("multiplier does not permute the classes")
        out = [0] * self.ambient.num_classes
        for cid, j in enumerate(self.exps):
            out[perm[cid]] = j
        return DefiningSetCode(self.ambient, tuple(out))

    def zero_classes(self) -> frozenset:
        t = self.ambient.ring.t
        return frozenset(cid for cid, j in enumerate(self.exps) if j == t)

    def membership(self, x) -> bool:
        """Does x (an MPoly in the group variables) lie in the ideal?"""
        amb = self.ambient
        if isinstance(x, Poly):
            x = MPoly(amb.ring, len(amb.orders),
                      {(i,): c for i, c in enumerate(x.coeffs)})
        x = amb.alphabet.quotient.reduce(x)
        return all(amb.alphabet.component_valuation(x, cid) >= j
                   for cid, j in enumerate(self.exps))

    def idempotent_generator(self) -> MPoly:
        """Sum over classes of a^{j_C} * e_C; equals the sum of the e_C with
        j_C = 0 when the exponent map is {0,t}-valued."""
        amb = self.ambient
        qr = amb.alphabet.quotient
        R = amb.ring
        acc = qr.zero
        for cid, j in enumerate(self.exps):
            if j >= R.t:
                continue
            scale = R.pow(R.a, j)
            acc = acc + amb.alphabet.idempotents[cid].scale(scale)
        return qr.reduce(acc)

    def descriptor(self) -> str:
        body = ",".join(f"{cid}:{j}" for cid, j in enumerate(self.exps))
        return f"{self.ambient.content_hash()[:12]}|{body}"


# ---------------------------------------------------------------------------
# standard-form generators (univariate constacyclic over a chain ring)

def standard_form_generator(code: DefiningSetCode):
    """Salagean-style standard form of a constacyclic defining-set code.

    Returns the list [(b_0, g_{b_0}), ..., (b_u, g_{b_u})] with strictly
    increasing b_i < t, strictly decreasing degrees, the divisibility chain
    g_{b_u} | ... | g_{b_0} | Y^n - lam, and g_{b_i} the Hensel-lifted
    product of the class factors with exponent > b_i.  The empty list is
    the zero code; the whole ring returns [(0, 1)].
    """
    amb = code.ambient
    if len(amb.orders) != 1:
        raise ValueError("standard form supported for univariate ambients only")
    R = amb.ring
    t = R.t
    bs = sorted({j for j in code.exps if j < t})
    if not bs:
        return []
    factors = amb.lifted_class_factors()
    chain = []
    for b in bs:
        g = Poly(R, [R.one])
        for cid, j in enumerate(code.exps):
            if j > b:
                g = g * factors[cid]
        chain.append((b, g))
    # divisibility chain and degree monotonicity, exact
    modulus = Poly.x_pow_minus(R, amb.orders[0], amb.lam[0])
    prev = modulus
    for b, g in chain:
        q, r = poly_divmod(prev, g)
        assert r.is_zero(), "divisibility chain broken"
        prev = g
    degs = [g.degree for _, g in chain]
    assert degs == sorted(degs, reverse=True) and len(set(degs)) == len(degs)
    return chain


def standard_form_single_generator(code: DefiningSetCode) -> MPoly:
    """The single generator sum of a^{b_i} g_{b_i} (zero MPoly for the
    zero code)."""
    amb = code.ambient
    R = amb.ring
    chain = standard_form_generator(code)
    qr = amb.alphabet.quotient
    acc = qr.zero
    for b, g in chain:
        scale = R.pow(R.a, b)
        gm = MPoly(R, 1, {(i,): c for i, c in enumerate(g.coeffs)})
        acc = acc + gm.scale(scale)
    return qr.reduce(acc)


def standard_form_cardinality(code: DefiningSetCode) -> int:
    """|K| from the standard-form exponent formula
    q^(sum_i (t - b_i)(d_{i-1} - d_i)), d_{-1} = n."""
    amb = code.ambient
    chain = standard_form_generator(code)
    if not chain:
        return 1
    q, t = amb.ring.q, amb.ring.t
    n = amb.orders[0]
    e = 0
    prev_deg = n
    for b, g in chain:
        e += (t - b) * (prev_deg - g.degree)
        prev_deg = g.degree
    return q ** e
