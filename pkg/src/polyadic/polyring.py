"""Polynomial arithmetic over chain rings and finite fields.

Univariate ``Poly`` and multivariable ``MPoly`` values are generic over a
ring handle exposing ``add/sub/neg/mul/inv/is_unit`` plus ``zero``/``one``
values (both ``ChainRing`` and ``FF`` qualify).  On top of these:

  * square-free testing and distinct-degree factor data over F_q,
  * exhaustive root finding in the minimal splitting extension,
  * quadratic Hensel lifting of coprime residue factorizations,
  * quotient-ring reduction modulo one monic modulus per variable,
  * idempotent lifting by the 3e^2 - 2e^3 iteration.

Factorization over F_q is done by root search at desk scale rather than a
general-purpose algorithm: class computations only ever need the root sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .chainring import FF, ChainRing, get_field


# ---------------------------------------------------------------------------
# univariate polynomials

class Poly:
    """Dense univariate polynomial; coefficients lowest degree first,
    trailing zeros stripped.  The zero polynomial has degree -1."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == ring.zero:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    # -- basics ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring is other.ring \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        return "Poly[" + ",".join(repr(c) for c in self.coeffs) + "]"

    @staticmethod
    def from_ints(ring, ints) -> "Poly":
        return Poly(ring, [ring.from_int(c) for c in ints])

    @staticmethod
    def x_pow_minus(ring, n: int, const) -> "Poly":
        """X^n - const."""
        cs = [ring.neg(const)] + [ring.zero] * (n - 1) + [ring.one]
        return Poly(ring, cs)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i <= self.degree else self.ring.zero

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(R, [R.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other):
        R = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(R, [R.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self):
        return Poly(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        R = self.ring
        if self.is_zero() or other.is_zero():
            return Poly(R, [])
        out = [R.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a != R.zero:
                for j, b in enumerate(other.coeffs):
                    if b != R.zero:
                        out[i + j] = R.add(out[i + j], R.mul(a, b))
        return Poly(R, out)

    def scale(self, c) -> "Poly":
        R = self.ring
        return Poly(R, [R.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        return Poly(self.ring, [self.ring.zero] * k + list(self.coeffs))

    def monic(self) -> "Poly":
        R = self.ring
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(R.inv(self.coeffs[-1]))

    def derivative(self) -> "Poly":
        R = self.ring
        return Poly(R, [R.mul(R.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        """Horner evaluation at a point of the coefficient ring."""
        R = self.ring
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, x), c)
        return acc

    def evaluate_embedded(self, field: FF, table: Sequence[int], x: int) -> int:
        """Evaluate in an extension ``field``, mapping the FF coefficients
        through the embedding ``table``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = field.add(field.mul(acc, x), table[c])
        return acc


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Division with remainder.  Over a chain ring g must be monic; over a
    field any nonzero divisor is normalized through its leading unit."""
    R = f.ring
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lead = g.coeffs[-1]
    if lead != R.one:
        if not R.is_unit(lead):
            raise ValueError("divmod needs a monic (or unit-leading) divisor")
        inv = R.inv(lead)
    else:
        inv = None
    rem = list(f.coeffs)
    dg = g.degree
    q = [R.zero] * max(len(rem) - dg, 0)
    while len(rem) - 1 >= dg and rem:
        c = rem[-1] if inv is None else R.mul(rem[-1], inv)
        k = len(rem) - 1 - dg
        q[k] = c
        for j, b in enumerate(g.coeffs):
            rem[k + j] = R.sub(rem[k + j], R.mul(c, b))
        while rem and rem[-1] == R.zero:
            rem.pop()
    return Poly(R, q), Poly(R, rem)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_ext_gcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, s, t) with s*f + t*g = d = monic gcd, over a field."""
    R = f.ring
    r0, r1 = f, g
    s0, s1 = Poly(R, [R.one]), Poly(R, [])
    t0, t1 = Poly(R, []), Poly(R, [R.one])
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero() and r0.coeffs[-1] != R.one:
        c = R.inv(r0.coeffs[-1])
        r0, s0, t0 = r0.scale(c), s0.scale(c), t0.scale(c)
    return r0, s0, t0


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    R = base.ring
    result = Poly(R, [R.one])
    base = poly_divmod(base, mod)[1]
    while e:
        if e & 1:
            result = poly_divmod(result * base, mod)[1]
        base = poly_divmod(base * base, mod)[1]
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# square-free tests, factor degrees, roots (over FF)

def squarefree_check(f: Poly) -> bool:
    """True iff gcd(f, f') = 1 over the coefficient field."""
    if not isinstance(f.ring, FF):
        raise TypeError("squarefree_check expects a polynomial over a field")
    if f.degree < 1 or not f.is_monic():
        raise ValueError("need a monic polynomial of degree >= 1")
    fp = f.derivative()
    if fp.is_zero():
        return False
    return poly_gcd(f, fp).degree == 0


def factor_degrees(f: Poly) -> list[int]:
    """Multiset of irreducible-factor degrees of a square-free monic f
    over F_q, by distinct-degree gcds (no explicit factorization)."""
    F: FF = f.ring
    q = F.size
    g = f.monic()
    x = Poly(F, [0, 1])
    h = poly_divmod(x, g)[1]
    degs: list[int] = []
    d = 0
    while g.degree > 0:
        d += 1
        if d > g.degree // 2:
            degs.append(g.degree)
            break
        h = poly_powmod(h, q, g)
        w = poly_gcd(h - poly_divmod(x, g)[1], g)
        if w.degree > 0:
            degs.extend([d] * (w.degree // d))
            g = poly_divmod(g, w)[0]
            h = poly_divmod(h, g)[1]
    return sorted(degs)


def splitting_degree(f: Poly) -> int:
    return math.lcm(*factor_degrees(f))


def root_sort_key(field: FF, x: int):
    """Deterministic root order: 0 first, then ascending dlog."""
    return -1 if x == 0 else field.dlog(x)


def roots_in_extension(f: Poly) -> tuple[FF, list[int], int]:
    """All deg(f) roots of a square-free f over F_q, found in F_{q^D} with
    D = lcm of the irreducible factor degrees.

    Returns (extension field, roots ordered by dlog, D).
    """
    F: FF = f.ring
    if not squarefree_check(f):
        raise ValueError("roots_in_extension needs a square-free polynomial")
    D = splitting_degree(f)
    ext = get_field(F.p, F.n * D)
    table = ext.embed_from(F)
    roots = [x for x in ext.elements() if f.evaluate_embedded(ext, table, x) == 0]
    roots.sort(key=lambda x: root_sort_key(ext, x))
    if len(roots) != f.degree:
        raise AssertionError("root count mismatch in splitting field")
    return ext, roots, D


# ---------------------------------------------------------------------------
# Hensel lifting

def _lift_poly(R: ChainRing, fbar: Poly) -> Poly:
    return Poly(R, [R.lift(c) for c in fbar.coeffs])


def residue_poly(f: Poly) -> Poly:
    R: ChainRing = f.ring
    return Poly(R.residue_field, [R.residue(c) for c in f.coeffs])


def hensel_lift_factor(f: Poly, gbar: Poly, hbar: Poly) -> tuple[Poly, Poly]:
    """Lift a coprime monic residue factorization f-bar = g-bar * h-bar to
    an exact factorization f = g * h over the chain ring.

    Quadratic lifting: precision doubles each step, so ceil(log2 t) steps
    reach <a^t> = 0 and the result is exact (asserted).
    """
    R: ChainRing = f.ring
    F = R.residue_field
    if not f.is_monic():
        raise ValueError("f must be monic")
    if not (gbar.is_monic() and hbar.is_monic()):
        raise ValueError("residue factors must be monic")
    if gbar * hbar != residue_poly(f):
        raise ValueError("gbar * hbar != residue of f")
    d, s, t = poly_ext_gcd(gbar, hbar)
    if d.degree != 0:
        raise ValueError("residue factors are not coprime")
    g, h = _lift_poly(R, gbar), _lift_poly(R, hbar)
    A, B = _lift_poly(R, s), _lift_poly(R, t)
    one = Poly(R, [R.one])
    for _ in range((R.t - 1).bit_length()):
        e = f - g * h
        q, r = poly_divmod(B * e, g)
        g = g + r
        h = h + A * e + q * h
        b = A * g + B * h - one
        c, dd = poly_divmod(B * b, g)
        B = B - dd
        A = A - A * b - c * h
    q2, r2 = poly_divmod(f, g)
    if not r2.is_zero():
        raise AssertionError("Hensel lift failed to reach exactness")
    h = q2
    assert g * h == f
    assert residue_poly(g) == gbar and residue_poly(h) == hbar
    return g, h


def hensel_lift_factorization(f: Poly, residue_factors: list[Poly]) -> list[Poly]:
    """Lift a full pairwise-coprime monic residue factorization of f."""
    if len(residue_factors) == 1:
        assert residue_poly(f) == residue_factors[0]
        return [f]
    gbar = residue_factors[0]
    hbar = residue_factors[1]
    for fac in residue_factors[2:]:
        hbar = hbar * fac
    g, h = hensel_lift_factor(f, gbar, hbar)
    return [g] + hensel_lift_factorization(h, residue_factors[1:])


# ---------------------------------------------------------------------------
# multivariable polynomials and quotient rings

class MPoly:
    """Sparse multivariable polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring, nvars: int, terms: dict):
        clean = {}
        for e, c in terms.items():
            if c != ring.zero:
                clean[tuple(e)] = c
        self.ring = ring
        self.nvars = nvars
        self.terms = clean

    @staticmethod
    def constant(ring, nvars: int, c) -> "MPoly":
        return MPoly(ring, nvars, {(0,) * nvars: c})

    @staticmethod
    def monomial(ring, nvars: int, exps, c=None) -> "MPoly":
        return MPoly(ring, nvars, {tuple(exps): c if c is not None else ring.one})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.ring is other.ring \
            and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ring), tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        R = self.ring
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = R.add(out.get(e, R.zero), c)
        return MPoly(R, self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        R = self.ring
        return MPoly(R, self.nvars, {e: R.neg(c) for e, c in self.terms.items()})

    def scale(self, c) -> "MPoly":
        R = self.ring
        return MPoly(R, self.nvars, {e: R.mul(c, v) for e, v in self.terms.items()})

    def mul_raw(self, other) -> "MPoly":
        R = self.ring
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = R.mul(c1, c2)
                if e in out:
                    out[e] = R.add(out[e], prod)
                else:
                    out[e] = prod
        return MPoly(R, self.nvars, out)

    def coefficient_map(self) -> dict:
        return dict(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        return "MPoly{" + ", ".join(f"{e}:{c!r}" for e, c in self.sorted_terms()) + "}"


class QuotientRing:
    """R[X_1..X_k]/(m_1(X_1), ..., m_k(X_k)) with each m_i monic.

    Elements are MPoly values with per-variable exponents below deg m_i.
    Reduction substitutes X_i^e via cached rows of X_i^e mod m_i.
    """

    def __init__(self, ring, moduli: list[Poly]):
        self.ring = ring
        self.moduli = list(moduli)
        self.nvars = len(moduli)
        for m in moduli:
            if not m.is_monic() or m.degree < 1:
                raise ValueError("quotient moduli must be monic of degree >= 1")
        self.degrees = [m.degree for m in moduli]
        self._xpow: list[list[list]] = [[] for _ in moduli]
        self.one = MPoly.constant(ring, self.nvars, ring.one)
        self.zero = MPoly(ring, self.nvars, {})

    def monomials(self) -> list[tuple[int, ...]]:
        import itertools as _it
        ranges = [range(d) for d in self.degrees]
        return sorted(_it.product(*ranges))

    @property
    def rank(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def _xpow_row(self, var: int, e: int) -> list:
        """Coefficients (length deg) of X_var^e mod m_var."""
        R = self.ring
        d = self.degrees[var]
        rows = self._xpow[var]
        while len(rows) <= e:
            k = len(rows)
            if k < d:
                row = [R.zero] * d
                row[k] = R.one
            else:
                prev = rows[k - 1]
                row = [R.zero] + list(prev[:-1])
                top = prev[-1]
                if top != R.zero:
                    m = self.moduli[var]
                    for i in range(d):
                        row[i] = R.sub(row[i], R.mul(top, m.coeffs[i]))
            rows.append(row)
        return rows[e]

    def reduce(self, mp: MPoly) -> MPoly:
        R = self.ring
        out: dict = {}
        work = list(mp.terms.items())
        while work:
            e, c = work.pop()
            over = next((i for i in range(self.nvars) if e[i] >= self.degrees[i]), None)
            if over is None:
                out[e] = R.add(out.get(e, R.zero), c)
                continue
            row = self._xpow_row(over, e[over])
            for k, coeff in enumerate(row):
                if coeff != R.zero:
                    e2 = e[:over] + (k,) + e[over + 1:]
                    work.append((e2, R.mul(c, coeff)))
        return MPoly(R, self.nvars, out)

    def mul(self, a: MPoly, b: MPoly) -> MPoly:
        return self.reduce(a.mul_raw(b))

    def pow(self, a: MPoly, e: int) -> MPoly:
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def scale_int(self, a: MPoly, k: int) -> MPoly:
        return a.scale(self.ring.from_int(k))

    def dense(self, a: MPoly, monomials=None) -> list:
        ms = monomials if monomials is not None else self.monomials()
        R = self.ring
        return [a.terms.get(m, R.zero) for m in ms]

    def from_dense(self, vec, monomials=None) -> MPoly:
        ms = monomials if monomials is not None else self.monomials()
        return MPoly(self.ring, self.nvars, dict(zip(ms, vec)))

    def residue_quotient(self) -> "QuotientRing":
        """The semisimple quotient over the residue field (chain ring only)."""
        R: ChainRing = self.ring
        return QuotientRing(R.residue_field, [residue_poly(m) for m in self.moduli])

    def residue_mpoly(self, a: MPoly) -> MPoly:
        R: ChainRing = self.ring
        F = R.residue_field
        return MPoly(F, self.nvars, {e: R.residue(c) for e, c in a.terms.items()})

    def lift_mpoly(self, a: MPoly) -> MPoly:
        R: ChainRing = self.ring
        return MPoly(R, self.nvars, {e: R.lift(c) for e, c in a.terms.items()})


def lift_idempotent(qr: QuotientRing, e0: MPoly) -> MPoly:
    """Lift an idempotent of the semisimple quotient to an exact idempotent
    of the chain-ring quotient via e <- 3e^2 - 2e^3.

    The iteration squares the nilpotent error, so ceil(log2 t) + 1 rounds
    (the extra round is free margin) reach exactness; both e^2 = e and the
    residue condition are asserted.
    """
    R: ChainRing = qr.ring
    res_qr = qr.residue_quotient()
    if res_qr.mul(e0, e0) != res_qr.reduce(e0):
        raise ValueError("input is not idempotent modulo the maximal ideal")
    e = qr.reduce(qr.lift_mpoly(e0))
    rounds = (R.t - 1).bit_length() + 1 if R.t > 1 else 1
    for _ in range(rounds):
        e2 = qr.mul(e, e)
        e3 = qr.mul(e2, e)
        e = qr.scale_int(e2, 3) - qr.scale_int(e3, 2)
        e = qr.reduce(e)
    assert qr.mul(e, e) == e, "lifted element is not idempotent"
    assert qr.residue_mpoly(e) == res_qr.reduce(e0)
    return e
