"""Command-line front end.

Thin composition of the library modules: every subcommand parses a config,
delegates to module operations, and prints either human-aligned tables or
machine-readable ``key=value`` lines.  Output is deterministic and both
formats carry a hash of the effective config.  Long searches stream
progress to stderr; results go to stdout only.

Exit codes: 0 all requested checks pass, 1 verification failure,
2 parse/usage error, 3 hypothesis not met, 4 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import sys

from .chainring import ChainRing, parse_ring_spec
from .polyring import Poly
from .alphabet import SerialAlphabet, build_alphabet, trivial_alphabet
from .ambient import AbelianAmbient, build_ambient, standard_form_generator
from .splitting import enumerate_splittings, parse_splitting
from .families import (SUITES, build_chain_family, build_serial_family,
                       count_inequivalent, default_partition, verify_family)
from . import oracle as orc


class UsageError(Exception):
    pass


class HypothesisNotMet(Exception):
    pass


# ---------------------------------------------------------------------------
# config handling

FLAG_KEYS = ["ring", "moduli", "orders", "lam", "m", "type", "suite",
             "cap", "format", "seed_splitting", "flavor", "classes", "code",
             "partition", "with_census", "cache"]


def load_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line {line!r}")
            key, val = line.split("=", 1)
            key = key.strip().replace("-", "_")
            if key == "lambda":
                key = "lam"
            out[key] = val.strip()
    return out


def effective_config(args) -> dict:
    cfg = {}
    if getattr(args, "config", None):
        cfg.update(load_config_file(args.config))
    for key in FLAG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = str(val)
    return cfg


def config_hash(cfg: dict) -> str:
    blob = "\n".join(f"{k}={cfg[k]}" for k in sorted(cfg))
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def parse_moduli(ring: ChainRing, text: str) -> list[Poly]:
    out = []
    for part in text.split(";"):
        part = part.strip().strip("[]")
        coeffs = [int(c) for c in part.split(",")]
        out.append(Poly.from_ints(ring, coeffs))
    return out


def parse_lambda(ring: ChainRing, text: str, count: int):
    vals = [int(v) for v in text.split(",")]
    if len(vals) == 1 and count > 1:
        vals = vals * count
    if len(vals) != count:
        raise UsageError("lambda count does not match orders")
    return [ring.from_int(v) for v in vals]


def parse_partition(text: str, m: int):
    parts = []
    for piece in text.split("|"):
        piece = piece.strip().strip("{}")
        parts.append(frozenset(int(x) for x in piece.split(",") if x != ""))
    if len(parts) != m:
        raise UsageError("partition must have m parts (separated by '|')")
    return tuple(parts)


# ---------------------------------------------------------------------------
# output

class Emitter:
    def __init__(self, fmt: str, cfg: dict):
        self.fmt = fmt
        self.rows: list[tuple[str, str]] = []
        self.rows.append(("config-hash", config_hash(cfg)))

    def add(self, key: str, value):
        self.rows.append((key, str(value)))

    def dump(self):
        if self.fmt == "structured":
            for k, v in self.rows:
                print(f"{k}={v}")
        else:
            width = max(len(k) for k, _ in self.rows)
            for k, v in self.rows:
                print(f"{k.ljust(width)}  {v}")


def fmt_index_set(idxs, orders) -> str:
    def one(ix):
        return str(ix[0]) if len(orders) == 1 else "(" + ",".join(map(str, ix)) + ")"
    return "{" + ",".join(one(ix) for ix in sorted(idxs)) + "}"


# ---------------------------------------------------------------------------
# shared construction helpers

def require(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required here")


def get_ring(args) -> ChainRing:
    require(args, "ring")
    try:
        return parse_ring_spec(args.ring)
    except ValueError as exc:
        raise UsageError(str(exc))


def get_alphabet(args, ring: ChainRing) -> SerialAlphabet:
    if getattr(args, "moduli", None):
        return build_alphabet(ring, parse_moduli(ring, args.moduli),
                              cache_path=getattr(args, "cache", None))
    return trivial_alphabet(ring)


def get_ambient(args, ring: ChainRing) -> AbelianAmbient:
    require(args, "orders")
    orders = [int(r) for r in args.orders.split(",")]
    lam = parse_lambda(ring, getattr(args, "lam", None) or "1", len(orders))
    try:
        return build_ambient(ring, orders, lam)
    except ValueError as exc:
        raise UsageError(str(exc))


def get_splitting(args, ambient, consta: bool):
    if getattr(args, "seed_splitting", None):
        sp = parse_splitting(args.seed_splitting, consta)
        from .splitting import is_splitting
        ok, problems = is_splitting(ambient, sp)
        if not ok:
            raise UsageError("seed splitting invalid: " + "; ".join(problems))
        return sp
    m = int(args.m or 2)
    found = enumerate_splittings(ambient, m, consta,
                                 progress=lambda msg: print(msg, file=sys.stderr))
    if not found:
        raise UsageError(f"no {m}-splitting exists for this ambient")
    return found[0]


# ---------------------------------------------------------------------------
# subcommands

def cmd_ring(args) -> int:
    ring = get_ring(args)
    em = Emitter(args.format or "table", effective_config(args))
    em.add("ring", ring.spec_string())
    em.add("kind", ring.kind)
    em.add("p", ring.p)
    em.add("t", ring.t)
    em.add("l", ring.l)
    em.add("q", ring.q)
    em.add("size", ring.size)
    em.add("maximal-ideal-generator", ring.encode(ring.a))
    em.add("units", ring.size - ring.size // ring.q)
    em.add("ideal-chain", " > ".join(f"|a^{j}|={ring.q ** (ring.t - j)}"
                                     for j in range(ring.t + 1)))
    em.dump()
    return 0


def cmd_classes(args) -> int:
    ring = get_ring(args)
    em = Emitter(args.format or "table", effective_config(args))
    if args.orders:
        amb = get_ambient(args, ring)
        em.add("ambient", repr(amb))
        for cid, idxs in enumerate(amb.classes_by_index):
            em.add(f"class{cid}",
                   f"{fmt_index_set(idxs, amb.orders)}({len(idxs)})")
    else:
        alphabet = get_alphabet(args, ring)
        em.add("alphabet-hash", alphabet.content_hash()[:12])
        for cl in alphabet.classes:
            mem = ",".join("(" + ",".join(map(str, m)) + ")" for m in cl.members)
            em.add(f"class{cl.id}", f"[{mem}]({cl.size})")
    em.dump()
    return 0


def cmd_idempotents(args) -> int:
    ring = get_ring(args)
    em = Emitter(args.format or "table", effective_config(args))
    if args.orders:
        alphabet = get_ambient(args, ring).alphabet
    else:
        alphabet = get_alphabet(args, ring)
    for cid in range(alphabet.num_classes):
        e = alphabet.idempotents[cid]
        body = ";".join(",".join(map(str, exps)) + ":" + str(ring.encode(c))
                        for exps, c in e.sorted_terms())
        em.add(f"e{cid}", body)
    em.dump()
    return 0


def cmd_ambient(args) -> int:
    ring = get_ring(args)
    amb = get_ambient(args, ring)
    em = Emitter(args.format or "table", effective_config(args))
    em.add("ambient", repr(amb))
    em.add("num-classes", amb.num_classes)
    em.add("frobenius-affine", ";".join(f"i->{a}*i+{b}" for a, b in amb.frobenius_affine))
    for cid, idxs in enumerate(amb.classes_by_index):
        em.add(f"class{cid}", f"{fmt_index_set(idxs, amb.orders)}({len(idxs)})")
    if args.code:
        exps = [0] * amb.num_classes
        for pair in args.code.split(","):
            cid, j = pair.split(":")
            exps[int(cid)] = int(j)
        code = amb.code(exps)
        em.add("code", code.descriptor())
        em.add("cardinality", code.cardinality())
        if len(amb.orders) == 1:
            chain = standard_form_generator(code)
            em.add("standard-form", " + ".join(
                f"a^{b}*[{','.join(str(ring.encode(c)) for c in g.coeffs)}]"
                for b, g in chain) or "0")
    em.dump()
    return 0


def cmd_splittings(args) -> int:
    ring = get_ring(args)
    amb = get_ambient(args, ring)
    consta = (args.type is not None) or not amb.is_plain
    m = int(args.m or 2)
    found = enumerate_splittings(amb, m, consta,
                                 progress=lambda msg: print(msg, file=sys.stderr))
    if args.type:
        found = [s for s in found if s.type_flag == args.type]
    em = Emitter(args.format or "table", effective_config(args))
    em.add("count", len(found))
    for i, sp in enumerate(found):
        em.add(f"splitting{i}", sp.descriptor())
    em.dump()
    return 0


def cmd_family(args) -> int:
    ring = get_ring(args)
    amb = get_ambient(args, ring)
    consta = (args.type is not None) or not amb.is_plain
    sp = get_splitting(args, amb, consta)
    flavor = None
    if args.type:
        flavor = "consta-I" if args.type == "I" else "consta-II"
    chain = build_chain_family(amb, sp, flavor)
    em = Emitter(args.format or "table", effective_config(args))
    em.add("splitting", sp.descriptor())
    em.add("flavor", chain.flavor)
    named = [("L", chain.L), ("Lhat", chain.L_hat)]
    if chain.K is not None:
        named = [("K", chain.K), ("Khat", chain.K_hat)] + named
    for name, codes in named:
        for i, code in enumerate(codes):
            zc = ",".join(map(str, sorted(code.zero_classes())))
            em.add(f"{name}{i}", f"zero-classes={{{zc}}} size={code.cardinality()}")
    alphabet = get_alphabet(args, ring)
    partition = (parse_partition(args.partition, chain.m)
                 if args.partition else default_partition(alphabet, chain.m))
    serial = build_serial_family(alphabet, partition, chain)
    em.add("serial-classes", alphabet.num_classes)
    em.add("partition", "|".join("{" + ",".join(map(str, sorted(p))) + "}"
                                 for p in partition))
    for j in range(serial.m):
        em.add(f"P{j}-size", serial.P[j].cardinality())
        if serial.flavor != "consta-I":
            em.add(f"Q{j}-size", serial.Q[j].cardinality())
    em.dump()
    return 0


def cmd_count(args) -> int:
    require(args, "m", "classes")
    m, c = int(args.m), int(args.classes)
    flavor = args.flavor or "abelian-II"
    em = Emitter(args.format or "table", effective_config(args))
    value = count_inequivalent(m, c, flavor)
    em.add("m", m)
    em.add("classes", c)
    em.add("flavor", flavor)
    em.add("count", value)
    if args.with_census:
        census = orc.partition_census(m, c, flavor)
        em.add("census", census)
        em.dump()
        return 0 if census == value else 1
    em.dump()
    return 0


def cmd_verify(args) -> int:
    require(args, "suite")
    ring = get_ring(args)
    amb = get_ambient(args, ring)
    consta = (args.type is not None) or not amb.is_plain
    sp = get_splitting(args, amb, consta)
    flavor = None
    if args.type:
        flavor = "consta-I" if args.type == "I" else "consta-II"
    chain = build_chain_family(amb, sp, flavor)
    alphabet = get_alphabet(args, ring)
    partition = (parse_partition(args.partition, chain.m)
                 if args.partition else default_partition(alphabet, chain.m))
    serial = build_serial_family(alphabet, partition, chain)
    suites = sorted(SUITES) if args.suite == "all" else args.suite.split(",")
    cap = int(args.cap) if args.cap else orc.DEFAULT_CAP
    em = Emitter(args.format or "table", effective_config(args))
    worst = 0
    for name in suites:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}")
        try:
            report = verify_family(serial, name, oracle_cap=cap)
        except ValueError as exc:
            em.add(f"{name}.inapplicable", str(exc))
            continue
        for line in report.lines():
            key, _, rest = line.partition(": ")
            em.add(key, rest)
        for note in report.notes:
            em.add(f"{name}.note", note)
        statuses = {it.status for it in report.items}
        if "FAIL" in statuses:
            worst = max(worst, 1)
        if "HYPOTHESIS-NOT-MET" in statuses:
            worst = max(worst, 3)
    em.dump()
    return worst


def cmd_distance(args) -> int:
    ring = get_ring(args)
    amb = get_ambient(args, ring)
    require(args, "code")
    exps = [0] * amb.num_classes
    for pair in args.code.split(","):
        cid, j = pair.split(":")
        exps[int(cid)] = int(j)
    code = amb.code(exps)
    cap = int(args.cap) if args.cap else orc.DEFAULT_CAP
    em = Emitter(args.format or "table", effective_config(args))
    em.add("code", code.descriptor())
    em.add("cardinality", code.cardinality())
    ideal = orc.enumerate_code(code, cap, verify=True)
    d = orc.min_distance(ideal.elements)
    em.add("min-distance", "infinite" if d is None else d)
    em.dump()
    return 0


COMMANDS = {
    "ring": cmd_ring,
    "classes": cmd_classes,
    "idempotents": cmd_idempotents,
    "ambient": cmd_ambient,
    "splittings": cmd_splittings,
    "family": cmd_family,
    "count": cmd_count,
    "verify": cmd_verify,
    "distance": cmd_distance,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polyadic",
        description="Abelian / consta-Abelian polyadic codes over chain rings")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--ring", help="Z/p^t | GR(p^t,l;modulus=..) | Fq[u]/u^t;q=p^l")
        p.add_argument("--moduli", help="serial moduli, e.g. '-1,0,0,1' for X^3-1")
        p.add_argument("--orders", help="comma-separated cyclic orders of A")
        p.add_argument("--lambda", dest="lam", help="comma-separated unit images")
        p.add_argument("--m", help="number of parts of the splitting")
        p.add_argument("--type", choices=["I", "II"], help="consta splitting type")
        p.add_argument("--suite", help="verification suite(s), comma list or 'all'")
        p.add_argument("--cap", help="oracle enumeration cap")
        p.add_argument("--format", choices=["table", "structured"])
        p.add_argument("--seed-splitting", dest="seed_splitting",
                       help="splitting descriptor m;u=(..);Sinf={..};S0={..};..")
        p.add_argument("--flavor", choices=["abelian-II", "consta-I", "consta-II"])
        p.add_argument("--classes", help="class count c for counting formulas")
        p.add_argument("--code", help="defining-set data 'classId:exp,...'")
        p.add_argument("--partition", help="serial partition '{0,1}|{2}|..'")
        p.add_argument("--with-census", dest="with_census", action="store_true",
                       default=None, help="cross-check counts against the census")
        p.add_argument("--cache", help="idempotent cache file for the alphabet")
        p.add_argument("--config", help="key=value config file (same keys as flags)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cfg = (load_config_file(args.config) if getattr(args, "config", None) else {})
        for key, val in cfg.items():
            if getattr(args, key, None) is None:
                setattr(args, key, val)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except orc.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except HypothesisNotMet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
