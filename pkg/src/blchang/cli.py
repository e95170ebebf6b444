"""Command-line front end.

Every command prints its invocation line first (and the seed, when
randomness is involved), so any output can be replayed.  Exit codes:
0 pass, 1 property or equation failure, 2 usage or parse error.

Algebra arguments are either a ``blalg v1`` file or a builtin::

    lukasiewicz:N  lukasiewicz:q  godel:N  godel:q  product:q  boolean
    sum(A, B, ...)      ordinal sum, A at the bottom
    prod(A, B, ...)     direct product
    gamma(GROUP)        [0, u] of a unital l-group, e.g. gamma(Z(u=3))
"""
from __future__ import annotations

import argparse
import random
import shlex
import sys
from pathlib import Path

from .algebra import (GODEL, LUKASIEWICZ, PRODUCT, Algebra, DirectProduct, StandardChain, boolean,
                      is_cancellative_type, is_godel, is_product_chain, mv_center, ordinal_sum,
                      split_top_level, validate_bl_axioms)
from .blalg import format_blalg, read_blalg
from .chang import (ChainSearch, Decision, GroupElt, class_eq, elt, format_canonical, format_phi, godel_to_int,
                    group_scale, group_zero, product_iso, strategy_from_name, strong_unit, theta_decompose)
from .errors import BLError
from .goodseq import GoodSeq, enumerate_good_seqs, format_goodseq, parse_goodseq, random_good_seq
from .lgroups import (Integers, collapse_annotations, enumerate_homs, gamma_interval, parse_group, psi,
                      seq_total)
from .props.generators import GeneratorConfig
from .props.suites import ALL_IDS, run_suites, strategy_for

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- algebra descriptors ------------------------------------------------------------------
def _call(text: str):
    text = text.strip()
    if text.endswith(")") and "(" in text:
        head, body = text.split("(", 1)
        return head.strip().lower(), body[:-1]
    return None, None


def resolve_algebra(text: str, denominator: int = 64) -> Algebra:
    """A builtin descriptor or a path to a ``blalg v1`` file."""
    text = text.strip()
    head, body = _call(text)
    if head in ("sum", "prod"):
        parts = [resolve_algebra(p, denominator) for p in split_top_level(body) if p]
        if not parts:
            raise UsageError(f"{head}() needs at least one algebra")
        if head == "sum":
            return ordinal_sum(parts, name=f"sum({', '.join(p.name for p in parts)})")
        if len(parts) == 1:
            return parts[0]
        return DirectProduct(parts, name=f"prod({', '.join(p.name for p in parts)})")
    if head == "gamma":
        return gamma_interval(parse_group(body))
    if text == "boolean":
        return boolean()
    if ":" in text and not Path(text).exists():
        kind, arg = text.split(":", 1)
        kinds = {"lukasiewicz": LUKASIEWICZ, "godel": GODEL, "product": PRODUCT}
        if kind not in kinds:
            raise UsageError(f"unknown builtin {kind!r}; expected lukasiewicz, godel or product")
        if arg == "q":
            return StandardChain(kinds[kind], name=text, denominator_cap=denominator)
        if not arg.isdigit():
            raise UsageError(f"expected a size or 'q' after {kind}:, got {arg!r}")
        if kind == "product":
            raise UsageError("finite product chains do not exist beyond the Boolean one; use product:q")
        return StandardChain.finite(kinds[kind], int(arg))
    path = Path(text)
    if not path.exists():
        raise UsageError(f"no such file or builtin: {text}")
    return read_blalg(path)


def _header(argv, seed=None):
    print("# blchang " + " ".join(shlex.quote(a) for a in argv))
    if seed is not None:
        print(f"# seed={seed}")


# -- commands ---------------------------------------------------------------------------------
def cmd_validate(args) -> int:
    A = resolve_algebra(args.algebra, args.denominator)
    rep = validate_bl_axioms(A, budget=args.samples, seed=args.seed)
    print(rep.format(A))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_mv_center(args) -> int:
    A = resolve_algebra(args.algebra, args.denominator)
    M = mv_center(A)
    print(f"algebra: {A.name}")
    if A.is_finite:
        els = M.elements()
        print(f"MV-center ({len(els)} elements): {{{', '.join(A.fmt(x) for x in els)}}}")
    else:
        rng = random.Random(args.seed)
        pts = sorted({A.sample(rng) for _ in range(40)}, key=A.key)
        inside = [A.fmt(x) for x in pts if M.contains(x)]
        print(f"MV-center of an infinite algebra; sampled members: {{{', '.join(inside)}}}")
    return EXIT_OK


def cmd_good_seqs(args) -> int:
    A = resolve_algebra(args.algebra, args.denominator)
    if args.sum:
        a, b = (parse_goodseq(A, s) for s in args.sum)
        print(f"{format_goodseq(a)} + {format_goodseq(b)} = {format_goodseq(a + b)}")
        return EXIT_OK
    if not A.is_finite:
        rng = random.Random(args.seed)
        print(f"algebra: {A.name} (infinite; {args.limit} seeded samples)")
        for _ in range(args.limit):
            print(format_goodseq(random_good_seq(A, rng, args.max_len)))
        return EXIT_OK
    seqs = enumerate_good_seqs(A, args.max_len)
    print(f"algebra: {A.name}; good sequences of length <= {args.max_len}: {len(seqs)}")
    for s in seqs[:args.limit]:
        print(format_goodseq(s))
    if len(seqs) > args.limit:
        print(f"... {len(seqs) - args.limit} more (raise --limit)")
    return EXIT_OK


def _s_l_status(A: Algebra, strategy, rng, samples: int):
    """(status, evidence) with status trivial / nontrivial / unknown."""
    zero = group_zero(A)
    unknown = None
    els = A.elements() if A.is_finite else [A.parse_elt(v) for v in ("0", "1/4", "1/2", "1")]
    candidates = [elt(A, [a], [b]) for a in els for b in els if A._dneg(a) == A._dneg(b)]
    for _ in range(samples):
        candidates.append(theta_decompose(GroupElt(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3)))[1])
    for s in candidates:
        d = class_eq(s, zero, strategy)
        if d is Decision.NO:
            return "nontrivial", f"{s} is in S(L) and is not ~ 0"
        if d is Decision.UNKNOWN and unknown is None:
            unknown = s
    if unknown is not None:
        return "unknown", f"class_eq({unknown}, 0) is undecided under {strategy}"
    return "trivial", f"all {len(candidates)} checked members are ~ 0"


def cmd_chang(args) -> int:
    A = resolve_algebra(args.algebra, args.denominator)
    st = strategy_from_name(args.strategy, args.bound) if args.strategy else strategy_for(A)
    rng = random.Random(args.seed)
    print(f"algebra: {A.name}")
    print(f"strategy: {st}")
    M = mv_center(A)
    if A.is_finite:
        print(f"MV-center: {{{', '.join(A.fmt(x) for x in M.elements())}}}")
    print(f"strong unit: u = {strong_unit(A)}")
    verdict = is_cancellative_type(A)
    print(f"cancellative type: {verdict.holds} ({verdict.reason})")
    is_mv = getattr(A, "known_mv", False) or (isinstance(A, StandardChain) and A.kind == LUKASIEWICZ) or (
        A.is_finite and all(A._dneg(x) == x for x in A.elements()))
    status = EXIT_OK
    if is_mv:
        print("MV-algebra; S(L) = 0")
        if isinstance(A, StandardChain) and A.is_finite:
            status = _mv_round_trip(A)
    else:
        s_status, evidence = _s_l_status(A, st, rng, args.samples)
        print(f"S(L): {s_status} -- {evidence}")
        if s_status == "unknown":
            status = EXIT_FAIL
        if A.is_chain and is_godel(A):
            ok = s_status == "trivial" and godel_to_int(strong_unit(A)) == 1
            print("G_L ≅ Z; S(L) trivial" if ok else "G_L ≅ Z expected, but the checks above disagree")
            status = status if ok else EXIT_FAIL
        elif is_product_chain(A):
            ok = s_status == "nontrivial" and product_iso(strong_unit(A)) == (1, 1)
            print("G_L ≅ Z ×lex Q+ (desk-scale model of Z ×lex R+)" if ok
                  else "G_L ≅ Z ×lex Q+ expected, but the checks above disagree")
            status = status if ok else EXIT_FAIL
    if A.is_chain:
        print("sample elements (canonical form):")
        for _ in range(3):
            g = GroupElt(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3))
            line = f"  {g} = {format_canonical(g)}"
            if is_product_chain(A):
                line += f"  {format_phi(product_iso(g))}"
            elif is_godel(A):
                line += f"  int={godel_to_int(g)}"
            print(line)
    return status


def _mv_round_trip(A: StandardChain) -> int:
    """For the MV-chain with n+1 elements: psi over (Z, n), read in L via x -> x/n, is k atoms."""
    n = len(A.elements()) - 1
    G = Integers(n)
    atom = elt(A, [A.elements()[1]])
    st = ChainSearch()
    bad = 0
    for k in range(-10 * n, 10 * n + 1):
        g = psi(G, k)
        g_L = GroupElt(GoodSeq._raw(A, tuple(x / n for x in g.pos.entries)),
                       GoodSeq._raw(A, tuple(x / n for x in g.neg.entries)))
        if seq_total(G, g.pos) - seq_total(G, g.neg) != k or class_eq(g_L, group_scale(atom, k), st) is not Decision.YES:
            bad += 1
    u_image = n * sum(strong_unit(A).pos.entries)
    print(f"unit image n={u_image} data: Γ(Z, {n}) ≅ L via x ↦ x/{n}; "
          f"ψ round trip on [-{10 * n}, {10 * n}]: {'ok' if not bad else f'{bad} failures'}")
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_gamma(args) -> int:
    G = parse_group(args.group)
    A = gamma_interval(G)
    print(f"group: {G.name}; unit u = {G.fmt(G.unit)}")
    print("x * y = u - ((2u - x - y) ^ u);  x -> y = (u - x + y) ^ u")
    if A.is_finite:
        print(format_blalg(A), end="")
    else:
        rng = random.Random(args.seed)
        for _ in range(args.samples):
            x, y = A.sample(rng), A.sample(rng)
            print(f"{A.fmt(x)} * {A.fmt(y)} = {A.fmt(A._mul(x, y))};  "
                  f"{A.fmt(x)} -> {A.fmt(y)} = {A.fmt(A._imp(x, y))}")
    return EXIT_OK


def cmd_homs(args) -> int:
    A = resolve_algebra(args.source, args.denominator)
    B = resolve_algebra(args.target, args.denominator)
    homs = enumerate_homs(A, B, cap=args.cap)
    print(f"Hom({A.name}, {B.name}): {len(homs)}")
    mv_domain = all(A._dneg(x) == x for x in A.elements())
    two_center = len(mv_center(B).elements()) == 2
    status = EXIT_OK
    for h in homs:
        print(f"{h.name}: {h.format()}")
        if mv_domain and two_center:
            for a, forced, actual in collapse_annotations(h):
                if forced is None:
                    continue
                mark = "ok" if forced == actual else "VIOLATED"
                print(f"    {A.fmt(a)}: forced {B.fmt(forced)} by 2a vs u, image {B.fmt(actual)} [{mark}]")
                if forced != actual:
                    status = EXIT_FAIL
    return status


def cmd_suite(args) -> int:
    ids = args.ids or list(ALL_IDS)
    ids = [i.upper() for i in ids]
    unknown = [i for i in ids if i not in ALL_IDS]
    if unknown:
        raise UsageError(f"unknown suite id(s): {', '.join(unknown)}; known: {', '.join(ALL_IDS)}")
    cfg = GeneratorConfig(max_chain_size=args.sizes, samples=args.samples, seed=args.seed,
                          denominator_cap=args.denominator)
    report = run_suites(ids, cfg, jobs=args.jobs)
    print(report.format())
    if args.json:
        Path(args.json).write_text(report.to_json(timing=False) + "\n")
        print(f"report written to {args.json}")
    return EXIT_OK if report.status.startswith("PASS") else EXIT_FAIL


# -- argument parsing ----------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="blchang", description="BL-algebras, good sequences and Chang groups.")
    p.add_argument("--denominator", type=int, default=64, help="denominator cap for :q chains (default 64)")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, help_text):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("algebra", help="blalg file or builtin descriptor")
        c.add_argument("--seed", type=int, default=0)
        return c

    c = algebra_cmd("validate", "check the BL axioms and derived laws")
    c.add_argument("--samples", type=int, default=1000, help="tuples per axiom on infinite algebras")
    c.set_defaults(func=cmd_validate, seeded=True)

    c = algebra_cmd("mv-center", "print the MV-center (image of double negation)")
    c.set_defaults(func=cmd_mv_center, seeded=False)

    c = algebra_cmd("good-seqs", "list good sequences, or add two of them")
    c.add_argument("--max-len", type=int, default=3)
    c.add_argument("--limit", type=int, default=50)
    c.add_argument("--sum", nargs=2, metavar=("A", "B"), help="print A + B, e.g. --sum '(1/2)' '(1,1/3)'")
    c.set_defaults(func=cmd_good_seqs, seeded=True)

    c = algebra_cmd("chang", "structure report for the Chang l-group G_L")
    c.add_argument("--strategy", choices=["cancellative", "chain", "bounded", "componentwise"])
    c.add_argument("--bound", type=int, default=None, help="length bound for the bounded strategy")
    c.add_argument("--samples", type=int, default=30, help="sampled S(L) members to test")
    c.set_defaults(func=cmd_chang, seeded=True)

    c = sub.add_parser("gamma", help="tables of [0, u] for a unital l-group, e.g. 'Z(u=3)'")
    c.add_argument("group")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=8, help="sampled operations for infinite groups")
    c.set_defaults(func=cmd_gamma, seeded=False)

    c = sub.add_parser("homs", help="enumerate BL-morphisms between finite algebras")
    c.add_argument("source")
    c.add_argument("target")
    c.add_argument("--cap", type=int, default=16, help="largest carrier size to search")
    c.set_defaults(func=cmd_homs, seeded=False)

    c = sub.add_parser("suite", help="run verification suites " + ", ".join(ALL_IDS))
    c.add_argument("ids", nargs="*", help="suite ids (default: all)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--sizes", type=int, default=5, help="largest generated chain size (<= 8)")
    c.add_argument("--samples", type=int, default=10_000, help="samples per property on infinite chains")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--json", metavar="PATH", help="also write a structured report")
    c.set_defaults(func=cmd_suite, seeded=True)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    _header(argv, args.seed if args.seeded else None)
    try:
        return args.func(args)
    except (UsageError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BLError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
