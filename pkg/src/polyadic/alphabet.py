"""The serial alphabet R[X_1..X_s]/(t_1,...,t_s) and its idempotents.

With every residue t_i-bar square-free the quotient is a finite direct sum
of chain rings, one per cyclotomic class: the Frobenius orbits of root
tuples in a common splitting field.  Primitive idempotents are computed by
Lagrange interpolation in the semisimple quotient (indicator of each class
on the root set) followed by the exact 3e^2 - 2e^3 lift, and validated
against every property they must satisfy: sum 1, pairwise products 0,
squares themselves, count = number of classes.

Class labels are stable across runs: classes are sorted by (size,
lexicographically smallest member dlog tuple) and labelled by rank.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import os
from dataclasses import dataclass

from .chainring import FF, ChainRing, get_field
from .polyring import (MPoly, Poly, QuotientRing, factor_degrees, lift_idempotent,
                       residue_poly, root_sort_key, squarefree_check)


@dataclass(frozen=True)
class CyclotomicClass:
    """Frobenius orbit of root tuples; indexes one chain-ring component."""
    id: int
    members: tuple[tuple[int, ...], ...]  # root tuples in the common field

    @property
    def size(self) -> int:
        return len(self.members)


def _dlog_key(field: FF, member: tuple[int, ...]):
    return tuple(root_sort_key(field, x) for x in member)


class SerialAlphabet:
    """R[X_1..X_s]/(t_1..t_s) with classes, idempotents and component data."""

    def __init__(self, ring: ChainRing, moduli: list[Poly], classes, idempotents,
                 field: FF, D: int, root_lists):
        self.ring = ring
        self.moduli = list(moduli)
        self.nvars = len(moduli)
        self.classes = list(classes)
        self.idempotents = dict(idempotents)  # class id -> MPoly over R
        self.field = field
        self.D = D
        self.root_lists = root_lists
        self.quotient = QuotientRing(ring, moduli)
        self._class_of_member = {m: cl.id for cl in self.classes for m in cl.members}
        self._bases: dict[int, tuple] = {}
        self._component_rings: dict[int, tuple] = {}

    # -- basic facts -------------------------------------------------------

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_by_id(self, cid: int) -> CyclotomicClass:
        return self.classes[cid]

    def class_of_member(self, member) -> int:
        return self._class_of_member[tuple(member)]

    def size(self) -> int:
        return self.ring.size ** self.quotient.rank

    def content_hash(self) -> str:
        blob = self.ring.spec_string() + "|" + ";".join(
            ",".join(str(self.ring.encode(c)) for c in m.coeffs) for m in self.moduli)
        return hashlib.sha256(blob.encode()).hexdigest()

    def validate_idempotents(self):
        qr = self.quotient
        total = qr.zero
        for cid in range(self.num_classes):
            e = self.idempotents[cid]
            assert qr.mul(e, e) == e, f"e_{cid} not idempotent"
            total = total + e
        assert qr.reduce(total) == qr.one, "idempotents do not sum to 1"
        for i in range(self.num_classes):
            for j in range(i + 1, self.num_classes):
                prod = qr.mul(self.idempotents[i], self.idempotents[j])
                assert prod.is_zero(), f"e_{i} * e_{j} != 0"

    # -- component decomposition --------------------------------------------

    def _class_basis(self, cid: int):
        """Reduced echelon basis (over R) of e_C * quotient, via Gaussian
        elimination with unit pivots in deterministic monomial order."""
        if cid in self._bases:
            return self._bases[cid]
        R, qr = self.ring, self.quotient
        monomials = qr.monomials()
        e = self.idempotents[cid]
        rows = []
        for m in monomials:
            prod = qr.mul(e, MPoly.monomial(R, qr.nvars, m))
            rows.append(qr.dense(prod, monomials))
        used = set()
        pivots = []
        ncols = len(monomials)
        for col in range(ncols):
            pr = None
            for ri in range(len(rows)):
                if ri not in used and R.is_unit(rows[ri][col]):
                    pr = ri
                    break
            if pr is None:
                continue
            used.add(pr)
            inv = R.inv(rows[pr][col])
            rows[pr] = [R.mul(inv, v) for v in rows[pr]]
            for ri in range(len(rows)):
                if ri != pr:
                    fac = rows[ri][col]
                    if fac != R.zero:
                        rows[ri] = [R.sub(rows[ri][k], R.mul(fac, rows[pr][k]))
                                    for k in range(ncols)]
            pivots.append((col, pr))
        for ri in range(len(rows)):
            if ri not in used:
                assert all(v == R.zero for v in rows[ri]), \
                    "component module is not free over R"
        expected = self.classes[cid].size
        assert len(pivots) == expected, "component rank mismatch"
        basis = tuple(tuple(rows[pr]) for _, pr in pivots)
        cols = tuple(col for col, _ in pivots)
        self._bases[cid] = (cols, basis, tuple(monomials))
        return self._bases[cid]

    def component_coords(self, x: MPoly, cid: int) -> tuple:
        """Coordinates of x*e_C in the class basis (tuple over R)."""
        qr = self.quotient
        cols, basis, monomials = self._class_basis(cid)
        v = qr.dense(qr.mul(x, self.idempotents[cid]), list(monomials))
        coords = tuple(v[c] for c in cols)
        # exactness: the projection really lies in the span
        R = self.ring
        recon = [R.zero] * len(monomials)
        for co, row in zip(coords, basis):
            for k in range(len(monomials)):
                recon[k] = R.add(recon[k], R.mul(co, row[k]))
        assert recon == v, "coordinate extraction failed"
        return coords

    def decompose(self, xs) -> dict[int, list[tuple]]:
        """Per-class coordinate vectors of a vector over the alphabet."""
        if isinstance(xs, MPoly):
            xs = [xs]
        return {cid: [self.component_coords(x, cid) for x in xs]
                for cid in range(self.num_classes)}

    def reconstruct(self, components: dict[int, list[tuple]]) -> list[MPoly]:
        R, qr = self.ring, self.quotient
        n = len(next(iter(components.values())))
        monomials = qr.monomials()
        out = []
        for pos in range(n):
            vec = [R.zero] * len(monomials)
            for cid, coord_list in components.items():
                cols, basis, _ = self._class_basis(cid)
                for co, row in zip(coord_list[pos], basis):
                    for k in range(len(monomials)):
                        vec[k] = R.add(vec[k], R.mul(co, row[k]))
            out.append(qr.from_dense(vec, monomials))
        return out

    def component_valuation(self, x: MPoly, cid: int) -> int:
        """Valuation of the e_C-component of x in the chain ring T_C."""
        R = self.ring
        return min((R.valuation(c) for c in self.component_coords(x, cid)),
                   default=R.t)

    # -- component chain rings ------------------------------------------------

    def component_ring(self, cid: int):
        """(T_C, embed R -> T_C): the unramified extension the class-C
        component is isomorphic to."""
        if cid not in self._component_rings:
            T = self.ring.extension_ring(self.classes[cid].size)
            self._component_rings[cid] = (T, self.ring.embed_into(T))
        return self._component_rings[cid]

    # -- serial generator assembly ---------------------------------------------

    def joint_quotient(self, group_moduli: list[Poly]) -> QuotientRing:
        """Quotient for R[X-vars, Y-vars]/(alphabet moduli, group moduli)."""
        return QuotientRing(self.ring, self.moduli + list(group_moduli))

    def extend_mpoly(self, x: MPoly, extra_vars: int, front: bool = False) -> MPoly:
        """View an alphabet element inside the joint quotient (pad exponents)."""
        pad = (0,) * extra_vars
        if front:
            terms = {pad + e: c for e, c in x.terms.items()}
        else:
            terms = {e + pad: c for e, c in x.terms.items()}
        return MPoly(self.ring, x.nvars + extra_vars, terms)

    def assemble_serial_generator(self, group_moduli: list[Poly],
                                  components: dict[int, MPoly]):
        """Sum of G_C * e_C inside R[X..,Y..]/(moduli, group moduli).

        ``components`` maps every class id to a generator polynomial in the
        group variables (zero allowed).  The generated ideal decomposes with
        per-class components <G_C> and multiplicative cardinality.
        """
        if sorted(components) != list(range(self.num_classes)):
            raise ValueError("need exactly one generator per class")
        jq = self.joint_quotient(group_moduli)
        delta = len(group_moduli)
        acc = jq.zero
        for cid in range(self.num_classes):
            e_ext = self.extend_mpoly(self.idempotents[cid], delta)
            g = components[cid]
            g_ext = MPoly(self.ring, self.nvars + delta,
                          {(0,) * self.nvars + tuple(e): c for e, c in g.terms.items()})
            acc = acc + jq.mul(g_ext, e_ext)
        return jq, jq.reduce(acc)


# ---------------------------------------------------------------------------
# construction

def _lagrange_basis(field: FF, roots: list[int]) -> dict[int, Poly]:
    """Univariate Lagrange polynomials l_r with l_r(r) = 1, 0 at the others."""
    out = {}
    for r in roots:
        num = Poly(field, [field.one])
        denom = field.one
        for s in roots:
            if s != r:
                num = num * Poly(field, [field.neg(s), field.one])
                denom = field.mul(denom, field.sub(r, s))
        out[r] = num.scale(field.inv(denom))
    return out


_ALPHABET_CACHE: dict[tuple, "SerialAlphabet"] = {}


def build_alphabet(ring: ChainRing, moduli: list[Poly], cache_path: str | None = None
                   ) -> SerialAlphabet:
    """Construct the alphabet: classes as Frobenius orbits on the product of
    root sets, idempotents by semisimple CRT plus lifting.

    Raises ValueError naming the offending modulus if some residue is not
    square-free.  ``cache_path`` stores/reloads the lifted idempotents keyed
    by a content hash of the ring spec and moduli.  In-process results are
    memoized per (ring, moduli) when no cache file is involved.
    """
    memo_key = None
    if cache_path is None:
        memo_key = (id(ring), tuple(tuple(ring.encode(c) for c in m.coeffs)
                                    for m in moduli))
        if memo_key in _ALPHABET_CACHE:
            return _ALPHABET_CACHE[memo_key]
    q = ring.q
    res_moduli = []
    for i, m in enumerate(moduli):
        if not m.is_monic():
            raise ValueError(f"modulus {i} is not monic")
        mbar = residue_poly(m)
        if not squarefree_check(mbar):
            raise ValueError(f"modulus {i} is not square-free mod the maximal ideal")
        res_moduli.append(mbar)

    if moduli:
        D = math.lcm(*[math.lcm(*factor_degrees(mb)) for mb in res_moduli])
    else:
        D = 1
    field = get_field(ring.p, ring.l * D)
    embed = field.embed_from(ring.residue_field)

    root_lists = []
    for mb in res_moduli:
        roots = [x for x in field.elements()
                 if mb.evaluate_embedded(field, embed, x) == 0]
        roots.sort(key=lambda x: root_sort_key(field, x))
        assert len(roots) == mb.degree
        root_lists.append(roots)

    # Frobenius orbits on the product of root sets
    seen = set()
    orbits = []
    for tup in itertools.product(*root_lists):
        if tup in seen:
            continue
        orbit = []
        cur = tup
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = tuple(field.pow(x, q) for x in cur)
        assert cur == tup, "orbit did not close on its start"
        orbits.append(orbit)
    orbits.sort(key=lambda orb: (len(orb), min(_dlog_key(field, m) for m in orb)))
    classes = [CyclotomicClass(i, tuple(sorted(orb, key=lambda m: _dlog_key(field, m))))
               for i, orb in enumerate(orbits)]
    for cl in classes:
        degs = [len({field.pow(x, q ** j) for j in range(field.n)}) for x in cl.members[0]]
        # |C| = lcm of coordinate degrees (checked; degenerate vars give 1)
        assert cl.size == math.lcm(*(degs or [1]))

    alphabet = SerialAlphabet(ring, moduli, classes, {}, field, D, root_lists)

    if cache_path and os.path.exists(cache_path):
        cached = _load_cache(cache_path, alphabet)
        if cached is not None:
            alphabet.idempotents.update(cached)
            alphabet.validate_idempotents()
            return alphabet

    # Lagrange indicators per class, in the splitting field
    lag = [_lagrange_basis(field, roots) for roots in root_lists]
    inv_embed = {embed[y]: y for y in ring.residue_field.elements()}
    qr = alphabet.quotient
    idems = {}
    for cl in classes:
        acc = MPoly(field, len(moduli), {})
        for member in cl.members:
            term = MPoly.constant(field, len(moduli), field.one)
            for var, rootval in enumerate(member):
                lp = lag[var][rootval]
                lp_m = MPoly(field, len(moduli),
                             {tuple(e if k == var else 0 for k in range(len(moduli))): c
                              for e, c in enumerate(lp.coeffs)})
                term = term.mul_raw(lp_m)
            acc = acc + term
        # coefficients are Frobenius-invariant, hence in F_q
        e0 = MPoly(ring.residue_field, len(moduli),
                   {e: inv_embed[c] for e, c in acc.terms.items()})
        if moduli:
            idems[cl.id] = lift_idempotent(qr, e0)
        else:
            idems[cl.id] = qr.one
    alphabet.idempotents.update(idems)
    alphabet.validate_idempotents()
    if cache_path:
        _save_cache(cache_path, alphabet)
    if memo_key is not None:
        _ALPHABET_CACHE[memo_key] = alphabet
    return alphabet


def trivial_alphabet(ring: ChainRing) -> SerialAlphabet:
    """The zero-variable alphabet: the chain ring itself, one class."""
    return build_alphabet(ring, [])


# ---------------------------------------------------------------------------
# idempotent cache (plain text; all integers decimal, exponents comma-separated)

def _save_cache(path: str, alphabet: SerialAlphabet):
    lines = ["# alphabet idempotent cache v1",
             f"hash={alphabet.content_hash()}",
             f"ring={alphabet.ring.spec_string()}"]
    for i, m in enumerate(alphabet.moduli):
        coeffs = ",".join(str(alphabet.ring.encode(c)) for c in m.coeffs)
        lines.append(f"modulus{i}={coeffs}")
    for cid in range(alphabet.num_classes):
        e = alphabet.idempotents[cid]
        parts = []
        for exps, c in e.sorted_terms():
            parts.append(",".join(map(str, exps)) + ":" + str(alphabet.ring.encode(c)))
        lines.append(f"idem={cid} " + ";".join(parts))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _load_cache(path: str, alphabet: SerialAlphabet):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    kv = dict(ln.split("=", 1) for ln in lines if not ln.startswith("idem="))
    if kv.get("hash") != alphabet.content_hash():
        return None
    R = alphabet.ring
    idems = {}
    for ln in lines:
        if not ln.startswith("idem="):
            continue
        head, body = ln.split(" ", 1)
        cid = int(head[len("idem="):])
        terms = {}
        for part in body.split(";"):
            epart, cpart = part.split(":")
            exps = tuple(int(x) for x in epart.split(",")) if epart else ()
            terms[exps] = R.decode(int(cpart))
        idems[cid] = MPoly(R, alphabet.nvars, terms)
    if sorted(idems) != list(range(alphabet.num_classes)):
        return None
    return idems
