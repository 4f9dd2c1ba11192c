"""Finite chain rings and their residue / extension fields.

Three constructor kinds are supported, covering every alphabet this
library targets:

  * ``modular``       R = Z/p^t,        a = p,  residue field F_p
  * ``galois``        R = GR(p^t, l),   a = p,  residue field F_{p^l}
  * ``nilpotent-ext`` R = F_q[u]/(u^t), a = u,  residue field F_q, q = p^l

Each is local with principal maximal ideal <a> of nilpotency index t, so
the ideal chain is <a^0> > <a^1> > ... > <a^t> = 0 and |<a^j>| = q^(t-j).
Elements are immutable, canonically reduced coefficient tuples; equality
is coefficient-list equality.  Extension fields of the residue field are
flattened to a single level over F_p with a deterministically chosen
irreducible modulus (lowest lexicographic coefficient list), so discrete
logarithms and class labels are reproducible across runs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------------------
# number theory helpers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense polynomials over F_p (bootstrap arithmetic for field construction;
# coefficient lists lowest degree first, trailing zeros stripped)

def _fp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_add(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_divmod(a, b, p):
    """Divide with remainder; b need not be monic (leading coeff inverted)."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    if db < 0:
        raise ZeroDivisionError("division by zero polynomial")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(da - db + 1, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = (a[-1] * inv_lead) % p
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] = (a[k + j] - c * bj) % p
        _fp_trim(a)
    return _fp_trim(q), a


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _fp_powmod(base, e, mod, p):
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def fp_irreducible(coeffs, p) -> bool:
    """Rabin test: f irreducible over F_p iff x^(p^n) = x mod f and
    gcd(x^(p^(n/l)) - x, f) = 1 for every prime l | n."""
    f = _fp_trim(list(coeffs))
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    if _fp_sub(_fp_powmod(x, p ** n, f, p), _fp_divmod(x, f, p)[1], p):
        return False
    for ell in factorize(n):
        g = _fp_sub(_fp_powmod(x, p ** (n // ell), f, p), x, p)
        if len(_fp_gcd(g, f, p)) - 1 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def canonical_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Monic irreducible of degree n over F_p with the lexicographically
    smallest coefficient list (lowest degree first)."""
    for low in itertools.product(range(p), repeat=n):
        f = list(low) + [1]
        if fp_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible found")  # unreachable


# ---------------------------------------------------------------------------
# finite fields F_{p^n}, elements encoded as ints in [0, p^n)

_FF_CACHE: dict[tuple, "FF"] = {}


class FF:
    """F_{p^n} = F_p[x]/(modulus); elements are ints whose base-p digits
    are the polynomial coefficients, lowest degree first.

    A primitive generator (the smallest primitive encoding) is fixed at
    construction and multiplication runs off exp/log tables, so arithmetic
    is exact, O(1), and deterministic.
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = canonical_irreducible(p, n)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not fp_irreducible(modulus, p):
            raise ValueError("modulus is reducible over F_p")
        self.p = p
        self.n = n
        self.modulus = modulus
        self.size = p ** n
        self.zero = 0
        self.one = 1
        self._build_tables()
        self._embed_cache: dict[int, list[int]] = {}

    # -- construction helpers -------------------------------------------

    def _to_coeffs(self, x: int) -> list[int]:
        c = []
        for _ in range(self.n):
            c.append(x % self.p)
            x //= self.p
        return c

    def _from_coeffs(self, c) -> int:
        x = 0
        for ci in reversed(list(c)):
            x = x * self.p + (ci % self.p)
        return x

    def _mul_raw(self, a: int, b: int) -> int:
        prod = _fp_mul(self._to_coeffs(a), self._to_coeffs(b), self.p)
        rem = _fp_divmod(prod, list(self.modulus), self.p)[1]
        return self._from_coeffs(rem + [0] * (self.n - len(rem)))

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        order = self.size - 1
        fac = factorize(order) if order > 1 else {}
        gen = 1
        for cand in range(1, self.size):
            if all(self._pow_raw(cand, order // ell) != 1 for ell in fac):
                gen = cand
                break
        self.generator = gen
        self._exp = [0] * max(order, 1)
        self._log = [0] * self.size
        v = 1
        for k in range(order):
            self._exp[k] = v
            self._log[v] = k
            v = self._mul_raw(v, gen)
        assert v == 1, "generator order mismatch"

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._from_coeffs(_fp_add(self._to_coeffs(a), self._to_coeffs(b), self.p)
                                 + [0] * self.n)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self._from_coeffs([(-c) % self.p for c in self._to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self._exp[(self._log[a] * e) % (self.size - 1)]

    def is_unit(self, a: int) -> bool:
        return a != 0

    def dlog(self, a: int) -> int:
        """Discrete log w.r.t. the stored generator; undefined for 0."""
        if a == 0:
            raise ValueError("dlog of 0 is undefined")
        return self._log[a]

    def exp(self, k: int) -> int:
        if self.size == 2:
            return 1
        return self._exp[k % (self.size - 1)]

    def elements(self):
        return range(self.size)

    def from_int(self, k: int) -> int:
        return k % self.p

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        d = self._log[a]
        return (self.size - 1) // math.gcd(self.size - 1, d) if d else 1

    # -- subfield embeddings ----------------------------------------------

    def embed_from(self, src: "FF") -> list[int]:
        """Table mapping elements of ``src`` into this field.

        The image of src's generator-of-representation x is the root of
        src.modulus in this field with the smallest dlog; extended
        F_p-linearly.  Cached per source field.
        """
        key = id(src)
        if key in self._embed_cache:
            return self._embed_cache[key]
        if src.p != self.p or self.n % src.n != 0:
            raise ValueError("no embedding: degree mismatch")
        root = None
        if src.n == 1:
            root = 0 if src.modulus == (0, 1) else self.from_int((-src.modulus[0]) % self.p)
        else:
            # scan by ascending dlog; 0 cannot be a root of an irreducible of degree >= 2
            for k in range(self.size - 1):
                x = self._exp[k]
                acc = 0
                for c in reversed(src.modulus):
                    acc = self.add(self.mul(acc, x), c % self.p)
                if acc == 0:
                    root = x
                    break
        if root is None:
            raise AssertionError("modulus has no root in extension")
        powers = [1]
        for _ in range(src.n - 1):
            powers.append(self.mul(powers[-1], root))
        table = [0] * src.size
        for e in range(src.size):
            acc = 0
            for ci, pw in zip(src._to_coeffs(e), powers):
                acc = self.add(acc, self.mul(ci, pw))
            table[e] = acc
        # spot-check the homomorphism on a deterministic sample
        sample = list(range(min(src.size, 16)))
        for a in sample:
            for b in sample:
                assert table[src.mul(a, b)] == self.mul(table[a], table[b])
                assert table[src.add(a, b)] == self.add(table[a], table[b])
        self._embed_cache[key] = table
        return table

    def __repr__(self):
        return f"FF({self.p}^{self.n})"


def get_field(p: int, n: int, modulus: tuple[int, ...] | None = None) -> FF:
    key = (p, n, tuple(modulus) if modulus is not None else None)
    if key not in _FF_CACHE:
        _FF_CACHE[key] = FF(p, n, modulus)
    return _FF_CACHE[key]


def make_extension(q: int, D: int) -> FF:
    """The field of size q^D, flattened over the prime subfield."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    (p, l), = fac.items()
    return get_field(p, l * D)


def frobenius(field: FF, x: int, q: int) -> int:
    """The q-power map on ``field``; fixes exactly the subfield F_q."""
    return field.pow(x, q)


# ---------------------------------------------------------------------------
# chain rings

@dataclass(frozen=True)
class RingElement:
    """Canonically reduced element of a chain ring.

    ``coeffs`` is a tuple of length l over Z_{p^t} (modular / galois) or of
    length t over F_q encodings (nilpotent-ext).
    """
    ring: "ChainRing"
    coeffs: tuple[int, ...]

    def __add__(self, other):
        return self.ring.add(self, other)

    def __sub__(self, other):
        return self.ring.sub(self, other)

    def __mul__(self, other):
        return self.ring.mul(self, other)

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, e):
        return self.ring.pow(self, e)

    def __repr__(self):
        return f"<{','.join(map(str, self.coeffs))}>"


class ChainRing:
    """Finite commutative chain ring handle; see module docstring.

    Exposes the fixed data the construction guarantees: zero, one, the
    maximal-ideal generator ``a``, nilpotency index ``t``, the residue
    field and its size ``q``.
    """

    def __init__(self, kind: str, p: int, t: int, l: int = 1, modulus=None):
        if kind not in ("modular", "galois", "nilpotent-ext"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if t < 1 or l < 1:
            raise ValueError("need t >= 1 and l >= 1")
        if kind == "modular" and l != 1:
            raise ValueError("modular kind forces l = 1")
        self.kind = kind
        self.p = p
        self.t = t
        self.l = l
        self.q = p ** l
        self.size = p ** (t * l)
        self.pt = p ** t
        if kind == "modular":
            self.modulus = (0, 1) if modulus is None else tuple(modulus)
            self.residue_field = get_field(p, 1)
        elif kind == "galois":
            if modulus is None:
                modulus = tuple(c % (p ** t) for c in canonical_irreducible(p, l))
            modulus = tuple(c % self.pt for c in modulus)
            if len(modulus) != l + 1 or modulus[-1] != 1:
                raise ValueError("galois modulus must be monic of degree l")
            res = tuple(c % p for c in modulus)
            if not fp_irreducible(res, p):
                raise ValueError("galois modulus reducible mod p")
            self.modulus = modulus
            self.residue_field = get_field(p, l, res)
        else:  # nilpotent-ext
            if modulus is None:
                modulus = canonical_irreducible(p, l)
            modulus = tuple(c % p for c in modulus)
            if l > 1 and not fp_irreducible(modulus, p):
                raise ValueError("field modulus reducible over F_p")
            self.modulus = modulus
            self.residue_field = get_field(p, l, modulus if l > 1 else None)
        self._ncoeffs = l if kind in ("modular", "galois") else t
        self.zero = RingElement(self, (0,) * self._ncoeffs)
        if kind in ("modular", "galois"):
            self.one = RingElement(self, (1,) + (0,) * (l - 1))
            self.a = RingElement(self, (p % self.pt,) + (0,) * (l - 1))
            # reduction rows for z^k, k = l .. 2l-2
            self._zred = self._build_zred()
        else:
            self.one = RingElement(self, (1,) + (0,) * (t - 1))
            self.a = RingElement(self, ((0, 1) + (0,) * (t - 2)) if t > 1 else (0,))
            if t == 1:
                self.a = RingElement(self, (0,))
        self._embed_cache: dict[int, object] = {}

    # -- internals --------------------------------------------------------

    def _build_zred(self):
        # rows[k] = coefficients of z^(l+k) reduced mod the modulus, k = 0..l-2
        l, pt = self.l, self.pt
        if l == 1:
            return []
        zl = [(-c) % pt for c in self.modulus[:l]]
        rows = [zl]
        for _ in range(l - 2):
            prev = rows[-1]
            top = prev[-1]
            row = [0] + list(prev[:-1])
            if top:
                row = [(row[i] + top * zl[i]) % pt for i in range(l)]
            rows.append(row)
        return rows

    def element(self, coeffs) -> RingElement:
        coeffs = list(coeffs)
        if len(coeffs) != self._ncoeffs:
            raise ValueError("wrong coefficient count")
        if self.kind in ("modular", "galois"):
            return RingElement(self, tuple(c % self.pt for c in coeffs))
        F = self.residue_field
        return RingElement(self, tuple(c % F.size for c in coeffs))

    def from_int(self, k: int) -> RingElement:
        """Image of the integer k under Z -> R."""
        if self.kind in ("modular", "galois"):
            return RingElement(self, (k % self.pt,) + (0,) * (self.l - 1))
        return RingElement(self, (self.residue_field.from_int(k),) + (0,) * (self.t - 1))

    # -- arithmetic --------------------------------------------------------

    def add(self, x: RingElement, y: RingElement) -> RingElement:
        if self.kind in ("modular", "galois"):
            return RingElement(self, tuple((a + b) % self.pt for a, b in zip(x.coeffs, y.coeffs)))
        F = self.residue_field
        return RingElement(self, tuple(F.add(a, b) for a, b in zip(x.coeffs, y.coeffs)))

    def neg(self, x: RingElement) -> RingElement:
        if self.kind in ("modular", "galois"):
            return RingElement(self, tuple((-a) % self.pt for a in x.coeffs))
        F = self.residue_field
        return RingElement(self, tuple(F.neg(a) for a in x.coeffs))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x: RingElement, y: RingElement) -> RingElement:
        if self.kind in ("modular", "galois"):
            l, pt = self.l, self.pt
            if l == 1:
                return RingElement(self, ((x.coeffs[0] * y.coeffs[0]) % pt,))
            conv = [0] * (2 * l - 1)
            for i, xi in enumerate(x.coeffs):
                if xi:
                    for j, yj in enumerate(y.coeffs):
                        conv[i + j] = (conv[i + j] + xi * yj) % pt
            out = conv[:l]
            for k in range(l, 2 * l - 1):
                c = conv[k]
                if c:
                    row = self._zred[k - l]
                    out = [(out[i] + c * row[i]) % pt for i in range(l)]
            return RingElement(self, tuple(out))
        F, t = self.residue_field, self.t
        out = [0] * t
        for i, xi in enumerate(x.coeffs):
            if xi:
                for j, yj in enumerate(y.coeffs):
                    if i + j < t and yj:
                        out[i + j] = F.add(out[i + j], F.mul(xi, yj))
        return RingElement(self, tuple(out))

    def pow(self, x: RingElement, e: int) -> RingElement:
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def valuation(self, x: RingElement) -> int:
        """Largest j with x in <a^j>; valuation(0) = t by convention."""
        if self.kind in ("modular", "galois"):
            best = self.t
            for c in x.coeffs:
                if c:
                    v = 0
                    while c % self.p == 0:
                        c //= self.p
                        v += 1
                    best = min(best, v)
            return best
        for j, c in enumerate(x.coeffs):
            if c:
                return j
        return self.t

    def is_unit(self, x: RingElement) -> bool:
        return self.valuation(x) == 0

    def inv(self, x: RingElement) -> RingElement:
        """Inverse of a unit via Newton iteration from the residue inverse."""
        if not self.is_unit(x):
            raise ZeroDivisionError("non-unit (valuation >= 1)")
        y = self.lift(self.residue_field.inv(self.residue(x)))
        steps = (self.t - 1).bit_length()
        two = self.from_int(2)
        for _ in range(steps):
            y = self.mul(y, self.sub(two, self.mul(x, y)))
        assert self.mul(x, y) == self.one
        return y

    # -- residue / lift ----------------------------------------------------

    def residue(self, x: RingElement) -> int:
        """Image in the residue field (an FF encoding)."""
        F = self.residue_field
        if self.kind in ("modular", "galois"):
            return F._from_coeffs([c % self.p for c in x.coeffs])
        return x.coeffs[0]

    def lift(self, y: int) -> RingElement:
        """Canonical coefficientwise lift of a residue-field element."""
        F = self.residue_field
        if self.kind in ("modular", "galois"):
            return RingElement(self, tuple(F._to_coeffs(y)))
        return RingElement(self, (y,) + (0,) * (self.t - 1))

    # -- enumeration / encoding --------------------------------------------

    def encode(self, x: RingElement) -> int:
        if self.kind in ("modular", "galois"):
            base = self.pt
        else:
            base = self.q
        v = 0
        for c in reversed(x.coeffs):
            v = v * base + c
        return v

    def decode(self, v: int) -> RingElement:
        base = self.pt if self.kind in ("modular", "galois") else self.q
        coeffs = []
        for _ in range(self._ncoeffs):
            coeffs.append(v % base)
            v //= base
        return RingElement(self, tuple(coeffs))

    def elements(self):
        for v in range(self.size):
            yield self.decode(v)

    # -- textual form --------------------------------------------------------

    def spec_string(self) -> str:
        if self.kind == "modular":
            return f"Z/{self.p}^{self.t}"
        if self.kind == "galois":
            mod = ",".join(str(c) for c in self.modulus)
            return f"GR({self.p}^{self.t},{self.l};modulus={mod})"
        return f"Fq[u]/u^{self.t};q={self.p}^{self.l}"

    def __repr__(self):
        return f"ChainRing({self.spec_string()})"

    # -- embeddings into unramified extensions --------------------------------

    def extension_ring(self, k: int) -> "ChainRing":
        """The unramified extension of residue degree multiplied by k."""
        if k == 1:
            return self
        if self.kind == "modular":
            return make_ring("galois", self.p, self.t, k)
        if self.kind == "galois":
            return make_ring("galois", self.p, self.t, self.l * k)
        return make_ring("nilpotent-ext", self.p, self.t, self.l * k)

    def embed_into(self, T: "ChainRing"):
        """Ring homomorphism R -> T for T an unramified extension of R.

        Returns a callable RingElement -> RingElement.  Deterministic: the
        image of the galois generator is the Newton lift of the smallest
        dlog residue root of this ring's modulus.
        """
        key = id(T)
        if key in self._embed_cache:
            return self._embed_cache[key]
        if T is self:
            fn = lambda x: x
            self._embed_cache[key] = fn
            return fn
        allowed = {("modular", "modular"), ("modular", "galois"),
                   ("galois", "galois"), ("nilpotent-ext", "nilpotent-ext")}
        if (self.kind, T.kind) not in allowed:
            raise ValueError("unsupported embedding between kinds")
        if self.p != T.p or self.t != T.t or T.l % self.l != 0:
            raise ValueError("not an unramified extension")
        if self.kind == "nilpotent-ext":
            table = T.residue_field.embed_from(self.residue_field)

            def fn_nil(x, _table=table, _T=T):
                return RingElement(_T, tuple(_table[c] for c in x.coeffs))
            self._embed_cache[key] = fn_nil
            return fn_nil
        if self.kind == "modular":
            def fn_mod(x, _T=T):
                return _T.from_int(x.coeffs[0])
            self._embed_cache[key] = fn_mod
            return fn_mod
        # galois -> galois: Newton-lift a root of our modulus in T
        emb = T.residue_field.embed_from(self.residue_field)
        # root of the residue modulus in T's residue field: image of z
        zbar = emb[self.residue_field._from_coeffs([0, 1] + [0] * (self.l - 2))] \
            if self.l >= 2 else emb[0]
        z = T.lift(zbar)
        mod_T = [T.from_int(c) for c in self.modulus]

        def f_of(v):
            acc = T.zero
            for c in reversed(mod_T):
                acc = T.add(T.mul(acc, v), c)
            return acc

        def fprime_of(v):
            acc = T.zero
            for i in range(len(mod_T) - 1, 0, -1):
                acc = T.add(T.mul(acc, v), T.mul(T.from_int(i), mod_T[i]))
            return acc

        for _ in range((self.t - 1).bit_length() + 1):
            z = T.sub(z, T.mul(f_of(z), T.inv(fprime_of(z))))
        assert f_of(z) == T.zero
        powers = [T.one]
        for _ in range(self.l - 1):
            powers.append(T.mul(powers[-1], z))

        def fn_gal(x, _T=T, _pows=powers):
            acc = _T.zero
            for c, pw in zip(x.coeffs, _pows):
                acc = _T.add(acc, _T.mul(_T.from_int(c), pw))
            return acc
        # spot-check multiplicativity
        xs = [self.decode(v) for v in range(min(self.size, 8))]
        for u in xs:
            for w in xs:
                assert fn_gal(self.mul(u, w)) == T.mul(fn_gal(u), fn_gal(w))
        self._embed_cache[key] = fn_gal
        return fn_gal


_RING_CACHE: dict[str, ChainRing] = {}


def make_ring(kind: str, p: int, t: int, l: int = 1, modulus=None) -> ChainRing:
    R = ChainRing(kind, p, t, l, modulus)
    key = R.spec_string()
    if key not in _RING_CACHE:
        _RING_CACHE[key] = R
    return _RING_CACHE[key]


def parse_ring_spec(text: str) -> ChainRing:
    """Parse the textual ring forms:

    ``Z/p^t``, ``GR(p^t,l;modulus=c0,c1,...)``, ``Fq[u]/u^t;q=p^l``.
    Identical spec strings yield bit-identical canonical elements.
    """
    s = text.strip()
    if s.startswith("Z/"):
        body = s[2:]
        if "^" in body:
            p, t = body.split("^")
        else:
            p, t = body, "1"
        return make_ring("modular", int(p), int(t))
    if s.startswith("GR("):
        inner = s[3:].rstrip(")")
        if ";" in inner:
            head, modpart = inner.split(";", 1)
            if not modpart.startswith("modulus="):
                raise ValueError(f"bad ring spec {text!r}")
            modulus = tuple(int(c) for c in modpart[len("modulus="):].split(","))
        else:
            head, modulus = inner, None
        ptpart, lpart = head.split(",")
        p, t = ptpart.split("^") if "^" in ptpart else (ptpart, "1")
        return make_ring("galois", int(p), int(t), int(lpart), modulus)
    if s.startswith("Fq[u]/u^"):
        body = s[len("Fq[u]/u^"):]
        tpart, qpart = body.split(";")
        if not qpart.startswith("q="):
            raise ValueError(f"bad ring spec {text!r}")
        qs = qpart[2:]
        p, l = qs.split("^") if "^" in qs else (qs, "1")
        return make_ring("nilpotent-ext", int(p), int(tpart), int(l))
    raise ValueError(f"unrecognized ring spec {text!r}")
