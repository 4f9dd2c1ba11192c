"""Multipliers and m-splittings of cyclotomic class sets.

A splitting is (S_inf, S_0, ..., S_{m-1}): disjoint unions of classes
partitioning the full class set, with a multiplier u fixing S_inf and
cyclically advancing the parts.  Multipliers act on the index space; for
plain Abelian ambients they are the unit tuples u of the spec, for consta
ambients they carry an extra per-variable offset (affine maps i -> u*i + c)
because root-of-unity translations are what the classical constacyclic
multiplier group reduces to on index space.  Candidates are kept only when
they permute the orbit partition.

Search is exhaustive and deterministic: multipliers ascending, parts
canonicalized so the smallest non-fixed class id lands in S_0; splittings
equal up to cyclic part relabelling are one object, while the multiplier
stays part of the data.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Multiplier:
    """Per-variable slope u (coprime to the order) and offset c."""
    u: tuple[int, ...]
    offsets: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.offsets:
            object.__setattr__(self, "offsets", (0,) * len(self.u))
        if len(self.offsets) != len(self.u):
            raise ValueError("offsets length mismatch")

    def affine_maps(self, ambient=None):
        return list(zip(self.u, self.offsets))

    def is_linear(self) -> bool:
        return all(c == 0 for c in self.offsets)

    def descriptor(self) -> str:
        s = "u=(" + ",".join(map(str, self.u)) + ")"
        if not self.is_linear():
            s += ";c=(" + ",".join(map(str, self.offsets)) + ")"
        return s


@dataclass(frozen=True)
class Splitting:
    """(S_inf, S_0..S_{m-1}, u) over an ambient's class ids."""
    m: int
    multiplier: Multiplier
    s_inf: frozenset
    parts: tuple[frozenset, ...]
    consta: bool = False

    @property
    def type_flag(self) -> str | None:
        if not self.consta:
            return None
        return "I" if not self.s_inf else "II"

    def all_classes(self) -> frozenset:
        out = set(self.s_inf)
        for p in self.parts:
            out |= p
        return frozenset(out)

    def descriptor(self) -> str:
        def fmt(s):
            return "{" + ",".join(map(str, sorted(s))) + "}"
        bits = [str(self.m), self.multiplier.descriptor(), f"Sinf={fmt(self.s_inf)}"]
        bits += [f"S{i}={fmt(p)}" for i, p in enumerate(self.parts)]
        return ";".join(bits)


def parse_splitting(text: str, consta: bool = False) -> Splitting:
    """Parse the descriptor m;u=(..);[c=(..);]Sinf={..};S0={..};..."""
    fields = text.strip().split(";")
    m = int(fields[0])
    u = offsets = None
    s_inf = None
    parts = {}
    for f in fields[1:]:
        key, _, val = f.partition("=")
        if key == "u":
            u = tuple(int(x) for x in val.strip("()").split(",") if x)
        elif key == "c":
            offsets = tuple(int(x) for x in val.strip("()").split(",") if x)
        elif key == "Sinf":
            s_inf = frozenset(int(x) for x in val.strip("{}").split(",") if x)
        elif key.startswith("S"):
            parts[int(key[1:])] = frozenset(int(x) for x in val.strip("{}").split(",") if x)
        else:
            raise ValueError(f"bad splitting field {f!r}")
    if u is None or s_inf is None or sorted(parts) != list(range(m)):
        raise ValueError(f"malformed splitting descriptor {text!r}")
    mult = Multiplier(u, offsets if offsets else ())
    return Splitting(m, mult, s_inf, tuple(parts[i] for i in range(m)), consta)


# ---------------------------------------------------------------------------
# validation

def is_splitting(ambient, cand: Splitting) -> tuple[bool, list[str]]:
    """Check the splitting axioms; returns (ok, violation report)."""
    problems = []
    all_ids = set(range(ambient.num_classes))
    seen = []
    for name, s in [("Sinf", cand.s_inf)] + [(f"S{i}", p) for i, p in enumerate(cand.parts)]:
        if not s <= all_ids:
            problems.append(f"{name} contains unknown class ids")
        seen.append(set(s))
    union = set().union(*seen)
    total = sum(len(s) for s in seen)
    if len(union) != total:
        problems.append("not disjoint")
    if union != all_ids:
        problems.append("does not cover all classes")
    if len(cand.parts) != cand.m:
        problems.append("part count differs from m")
    if any(not p for p in cand.parts):
        problems.append("trivial splitting: empty part")
    perm = ambient.class_perm(cand.multiplier)
    if perm is None:
        problems.append("multiplier does not permute the classes")
    else:
        if {perm[c] for c in cand.s_inf} != set(cand.s_inf):
            problems.append("multiplier does not fix Sinf")
        for i, p in enumerate(cand.parts):
            nxt = cand.parts[(i + 1) % cand.m]
            if {perm[c] for c in p} != set(nxt):
                problems.append(f"multiplier does not map S{i} onto S{(i + 1) % cand.m}")
    if not cand.consta:
        if not cand.multiplier.is_linear():
            problems.append("plain Abelian multipliers carry no offsets")
        if ambient.zero_class() not in cand.s_inf:
            problems.append("the class of 0 must lie in Sinf")
    return (not problems, problems)


def multiplier_fixes(ambient, multiplier: Multiplier, sets) -> bool:
    """Does the multiplier's class permutation fix each given set of ids?"""
    perm = ambient.class_perm(multiplier)
    if perm is None:
        return False
    return all({perm[c] for c in s} == set(s) for s in sets)


# ---------------------------------------------------------------------------
# enumeration

def _candidate_multipliers(ambient, consta: bool):
    units = []
    for r in ambient.orders:
        units.append([u for u in range(1, r + 1) if math.gcd(u, r) == 1])
    if not consta:
        for u in itertools.product(*units):
            yield Multiplier(tuple(u))
        return
    offsets = [range(r) for r in ambient.orders]
    for u in itertools.product(*units):
        for c in itertools.product(*offsets):
            yield Multiplier(tuple(u), tuple(c))


def _perm_cycles(perm: dict[int, int]) -> list[list[int]]:
    seen = set()
    cycles = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = perm[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = perm[cur]
        cycles.append(cyc)
    return cycles


def enumerate_splittings(ambient, m: int, consta: bool = False,
                         progress=None) -> list[Splitting]:
    """All m-splittings, exhaustively over admissible multipliers and
    assignments of multiplier cycles to parts, deduplicated up to cyclic
    part relabelling.  Returns [] when none exist."""
    if m < 2:
        raise ValueError("m must be >= 2")
    found = {}
    zero_cid = ambient.zero_class() if not consta else None
    for mult in _candidate_multipliers(ambient, consta):
        perm = ambient.class_perm(mult)
        if perm is None:
            continue
        cycles = _perm_cycles(perm)
        eligible = [cyc for cyc in cycles
                    if len(cyc) % m == 0 and (consta or zero_cid not in cyc)]
        if not eligible:
            continue
        if progress is not None:
            progress(f"multiplier {mult.descriptor()}: {len(eligible)} eligible cycles")
        for k in range(1, len(eligible) + 1):
            for chosen in itertools.combinations(range(len(eligible)), k):
                for offs in itertools.product(range(m), repeat=k):
                    parts = [set() for _ in range(m)]
                    active = set()
                    for ci, off in zip(chosen, offs):
                        cyc = eligible[ci]
                        for step, cid in enumerate(cyc):
                            parts[(off + step) % m].add(cid)
                            active.add(cid)
                    if not consta and zero_cid in active:
                        continue
                    s_inf = frozenset(set(range(ambient.num_classes)) - active)
                    if not consta and zero_cid not in s_inf:
                        continue
                    # canonical rotation: smallest active class id into S_0
                    lead = min(active)
                    rot = next(i for i, p in enumerate(parts) if lead in p)
                    parts = parts[rot:] + parts[:rot]
                    cand = Splitting(m, mult, s_inf,
                                     tuple(frozenset(p) for p in parts), consta)
                    ok, _ = is_splitting(ambient, cand)
                    if ok:
                        key = (mult.u, mult.offsets, cand.s_inf, cand.parts)
                        found.setdefault(key, cand)
    out = sorted(found.values(),
                 key=lambda s: (s.multiplier.u, s.multiplier.offsets,
                                tuple(sorted(s.s_inf)),
                                tuple(tuple(sorted(p)) for p in s.parts)))
    return out


def brute_force_splittings(ambient, m: int, consta: bool = False) -> set:
    """Independent partition-level search: every assignment of classes to
    {inf, 0..m-1} crossed with every admissible multiplier.

    Returns canonical (u, offsets, s_inf, parts) keys for comparison with
    enumerate_splittings.  Exponential in the class count; <= 12 classes.
    """
    n = ambient.num_classes
    if n > 12:
        raise ValueError("brute-force splitting search capped at 12 classes")
    mults = [(mu, ambient.class_perm(mu)) for mu in _candidate_multipliers(ambient, consta)]
    mults = [(mu, pm) for mu, pm in mults if pm is not None]
    out = set()
    for assign in itertools.product(range(m + 1), repeat=n):  # m = inf
        parts = [frozenset(c for c in range(n) if assign[c] == i) for i in range(m)]
        s_inf = frozenset(c for c in range(n) if assign[c] == m)
        if any(not p for p in parts):
            continue
        lead = min(set(range(n)) - s_inf)
        rot = next(i for i, p in enumerate(parts) if lead in p)
        if rot != 0:
            continue  # count each cyclic orbit once, via its canonical rotation
        for mu, _ in mults:
            cand = Splitting(m, mu, s_inf, tuple(parts), consta)
            if is_splitting(ambient, cand)[0]:
                out.add((mu.u, mu.offsets, s_inf, tuple(parts)))
    return out
