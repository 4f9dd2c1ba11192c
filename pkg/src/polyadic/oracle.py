"""Independent brute-force ground truth.

Everything the analytic paths claim is re-checkable here at desk scale:
ideal enumeration by module-span closure, exhaustive Euclidean duals,
minimum distance, Frobenius orbit counts, and the ordered-partition census
behind the counting formulas.  Ring elements are integer-encoded and all
hot loops run through numpy table lookups; the default enumeration cap is
2^22 elements and every kernel raises CapExceeded instead of degrading.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .chainring import ChainRing

DEFAULT_CAP = 1 << 22
_TABLE_LIMIT = 1024


class CapExceeded(Exception):
    """Requested enumeration exceeds the configured element cap."""

    def __init__(self, predicted, cap):
        super().__init__(f"predicted size {predicted} exceeds cap {cap}")
        self.predicted = predicted
        self.cap = cap


_TABLES: dict[int, tuple] = {}


def ring_tables(ring: ChainRing):
    """(add, mul, neg) lookup tables over integer encodings."""
    key = id(ring)
    if key not in _TABLES:
        n = ring.size
        if n > _TABLE_LIMIT:
            raise CapExceeded(n, _TABLE_LIMIT)
        els = [ring.decode(v) for v in range(n)]
        dtype = np.uint8 if n <= 256 else np.uint16
        add = np.zeros((n, n), dtype=dtype)
        mul = np.zeros((n, n), dtype=dtype)
        neg = np.zeros(n, dtype=dtype)
        for i, x in enumerate(els):
            neg[i] = ring.encode(ring.neg(x))
            for j, y in enumerate(els):
                add[i, j] = ring.encode(ring.add(x, y))
                mul[i, j] = ring.encode(ring.mul(x, y))
        assert ring.encode(ring.zero) == 0
        _TABLES[key] = (add, mul, neg)
    return _TABLES[key]


def all_vectors(ring: ChainRing, n: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Every vector of R^n as an (|R|^n, n) array of encodings."""
    total = ring.size ** n
    if total > cap:
        raise CapExceeded(total, cap)
    dtype = np.uint8 if ring.size <= 256 else np.uint16
    out = np.zeros((total, n), dtype=dtype)
    idx = np.arange(total)
    for pos in range(n):
        out[:, pos] = (idx // (ring.size ** pos)) % ring.size
    return out


def _pack_rows(arr: np.ndarray, bits: int) -> np.ndarray:
    keys = np.zeros(arr.shape[0], dtype=np.uint64)
    for i in range(arr.shape[1]):
        keys |= arr[:, i].astype(np.uint64) << np.uint64(bits * i)
    return keys


def _unpack_rows(keys: np.ndarray, bits: int, n: int, dtype) -> np.ndarray:
    out = np.zeros((keys.shape[0], n), dtype=dtype)
    mask = np.uint64((1 << bits) - 1)
    for i in range(n):
        out[:, i] = ((keys >> np.uint64(bits * i)) & mask).astype(dtype)
    return out


def span_module(ring: ChainRing, generators, n: int, cap: int = DEFAULT_CAP,
                predicted: int | None = None) -> np.ndarray:
    """Closure of R-linear combinations of the generator vectors.

    ``generators`` is an iterable of length-n encoding sequences.  Result
    rows are sorted lexicographically (canonical element order).  Rows are
    packed into uint64 keys when they fit, so dedup is a 1-D sort.
    """
    if predicted is not None and predicted > cap:
        raise CapExceeded(predicted, cap)
    add, mul, _ = ring_tables(ring)
    dtype = add.dtype
    bits = max((ring.size - 1).bit_length(), 1)
    packable = bits * n <= 64
    span = np.zeros((1, n), dtype=dtype)
    for g in generators:
        g = np.asarray(g, dtype=dtype)
        if not g.any():
            continue
        multiples = mul[np.arange(ring.size)[:, None], g[None, :]]
        combined = add[span[:, None, :], multiples[None, :, :]]
        combined = combined.reshape(-1, n)
        if packable:
            keys = np.unique(_pack_rows(combined, bits))
            if keys.shape[0] > cap:
                raise CapExceeded(keys.shape[0], cap)
            span = _unpack_rows(keys, bits, n, dtype)
        else:
            span = np.unique(combined, axis=0)
            if span.shape[0] > cap:
                raise CapExceeded(span.shape[0], cap)
    if packable:
        # key order is little-endian in positions; re-sort rows lexicographically
        order = np.lexsort(span.T[::-1])
        span = span[order]
    return span


def _row_set(arr: np.ndarray) -> set:
    return set(map(bytes, np.ascontiguousarray(arr)))


class EnumeratedIdeal:
    """Explicit element list of an ideal, with closure checked on build."""

    def __init__(self, ring: ChainRing, elements: np.ndarray, shift_maps=None):
        self.ring = ring
        self.elements = elements
        self.n = elements.shape[1]
        if shift_maps is not None:
            self.verify_closure(shift_maps)

    def __len__(self):
        return self.elements.shape[0]

    def as_set(self) -> set:
        return _row_set(self.elements)

    def verify_closure(self, shift_maps):
        """Check closure under each ambient monomial-shift map.

        A shift map is (perm, factors): position j of Y*x picks up element
        x[perm[j]] times factors[j].
        """
        _, mul, _ = ring_tables(self.ring)
        universe = self.as_set()
        for perm, factors in shift_maps:
            shifted = self.elements[:, perm]
            for j, fenc in enumerate(factors):
                if fenc != self.ring.encode(self.ring.one):
                    shifted[:, j] = mul[shifted[:, j], fenc]
            assert _row_set(shifted) <= universe, "not closed under shifts"


def group_shift_maps(ambient) -> list:
    """Multiplication-by-Y_j maps on coefficient vectors of the group
    algebra R[A, lam], in the mixed-radix coefficient order of all_indices."""
    orders = ambient.orders
    ring = ambient.ring
    idxs = list(itertools.product(*[range(r) for r in orders]))
    pos = {ix: k for k, ix in enumerate(idxs)}
    maps = []
    one_enc = ring.encode(ring.one)
    for j, r in enumerate(orders):
        perm = np.zeros(len(idxs), dtype=np.int64)
        factors = [one_enc] * len(idxs)
        lam_enc = ring.encode(ambient.lam[j])
        for k, ix in enumerate(idxs):
            src = list(ix)
            src[j] = (ix[j] - 1) % r
            perm[k] = pos[tuple(src)]
            if ix[j] == 0:  # wrapped: Y^r = lam
                factors[k] = lam_enc
        maps.append((perm, factors))
    return maps


def ambient_indices(ambient) -> list[tuple[int, ...]]:
    return list(itertools.product(*[range(r) for r in ambient.orders]))


def mpoly_vector(ambient, x) -> list[int]:
    """Encoding vector of a group-algebra element (MPoly in the Y vars)."""
    ring = ambient.ring
    idxs = ambient_indices(ambient)
    vec = [0] * len(idxs)
    for e, c in x.terms.items():
        vec[idxs.index(tuple(e))] = ring.encode(c)
    return vec


def code_generators(code) -> list[list[int]]:
    """Module generators (all monomial shifts of a^j e_C) of a defining-set
    code, as encoding vectors."""
    amb = code.ambient
    ring = amb.ring
    qr = amb.alphabet.quotient
    gens = []
    for cid, j in enumerate(code.exps):
        if j >= ring.t:
            continue
        base = amb.alphabet.idempotents[cid].scale(ring.pow(ring.a, j))
        base = qr.reduce(base)
        for mono in qr.monomials():
            from .polyring import MPoly
            shifted = qr.mul(base, MPoly.monomial(ring, qr.nvars, mono))
            gens.append(mpoly_vector(amb, shifted))
    return gens


def enumerate_code(code, cap: int = DEFAULT_CAP, verify: bool = False) -> EnumeratedIdeal:
    """Explicit elements of a defining-set code over its group ambient."""
    amb = code.ambient
    predicted = code.cardinality()
    if predicted > cap:
        raise CapExceeded(predicted, cap)
    gens = code_generators(code)
    arr = span_module(amb.ring, gens, len(ambient_indices(amb)), cap, predicted)
    ideal = EnumeratedIdeal(amb.ring, arr,
                            group_shift_maps(amb) if verify else None)
    assert len(ideal) == predicted, \
        f"enumerated {len(ideal)} elements, cardinality formula says {predicted}"
    return ideal


def enumerate_ideal(ring: ChainRing, generators, n: int, shift_maps,
                    cap: int = DEFAULT_CAP) -> EnumeratedIdeal:
    """Closure of generator vectors under addition and the given ambient
    shift maps (exact, capped)."""
    _, mul, _ = ring_tables(ring)
    work = [np.asarray(g, dtype=np.uint16) for g in generators]
    seen = set()
    full = []
    while work:
        g = work.pop()
        key = g.tobytes()
        if key in seen:
            continue
        seen.add(key)
        full.append(g)
        for perm, factors in shift_maps:
            shifted = g[perm].copy()
            for j, fenc in enumerate(factors):
                if fenc != ring.encode(ring.one):
                    shifted[j] = mul[shifted[j], fenc]
            work.append(shifted)
    arr = span_module(ring, full, n, cap)
    return EnumeratedIdeal(ring, arr, shift_maps)


def brute_dual(ring: ChainRing, generators, n: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Exhaustive Euclidean orthogonal complement: all x in R^n with
    x . g = 0 for every module generator g."""
    add, mul, _ = ring_tables(ring)
    X = all_vectors(ring, n, cap)
    keep = np.ones(X.shape[0], dtype=bool)
    for g in generators:
        g = list(g)
        acc = mul[X[:, 0], g[0]]
        for pos in range(1, n):
            acc = add[acc, mul[X[:, pos], g[pos]]]
        keep &= (acc == 0)
    return X[keep]


def min_distance(elements: np.ndarray):
    """Minimum Hamming weight over nonzero codewords; None for the zero
    code (reported as 'infinite' by the CLI)."""
    weights = np.count_nonzero(elements, axis=1)
    nz = weights[weights > 0]
    if nz.size == 0:
        return None
    return int(nz.min())


# ---------------------------------------------------------------------------
# counting oracles

def ordered_partitions(m: int, c: int):
    """Ordered (A_1..A_m) partitions of c labelled classes: all parts
    nonempty when c >= m, else exactly c singleton parts and m-c empty."""
    classes = list(range(c))
    if c >= m:
        for assign in itertools.product(range(m), repeat=c):
            if len(set(assign)) == m:
                yield tuple(frozenset(i for i in classes if assign[i] == k)
                            for k in range(m))
    else:
        for positions in itertools.permutations(range(m), c):
            parts = [frozenset()] * m
            for cls, pos in zip(classes, positions):
                parts[pos] = frozenset([cls])
            yield tuple(parts)


def partition_census(m: int, c: int, flavor: str) -> int:
    """Count inequivalent polyadic families by direct enumeration:
    ordered partitions modulo cyclic part shift, doubled for the odd/even
    pair except in the consta Type I flavor."""
    if flavor not in ("abelian-II", "consta-I", "consta-II"):
        raise ValueError(f"unknown flavor {flavor!r}")
    seen = set()
    orbits = 0
    total = 0
    for parts in ordered_partitions(m, c):
        total += 1
        if parts in seen:
            continue
        orbits += 1
        for sh in range(m):
            seen.add(tuple(parts[(i + sh) % m] for i in range(m)))
    assert orbits * m == total, "cyclic shift action is not free"
    factor = 1 if flavor == "consta-I" else 2
    return factor * orbits


def count_frobenius_orbits(root_lists, field, q: int) -> int:
    """Independent orbit count on the product of root sets (no class
    machinery; plain orbit walking)."""
    seen = set()
    count = 0
    for tup in itertools.product(*root_lists):
        if tup in seen:
            continue
        count += 1
        cur = tup
        while cur not in seen:
            seen.add(cur)
            cur = tuple(field.pow(x, q) for x in cur)
    return count
