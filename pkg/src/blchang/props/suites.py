"""The verification suites S1..S10.

Each suite is a function ``(ctx) -> None`` appending :class:`PropertyRecord`
objects to ``ctx.records``.  Randomness comes only from per-record
generators seeded with ``seed:suite:property:algebra``.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import (LUKASIEWICZ, PRODUCT, Algebra, DirectProduct, OrdinalSum, StandardChain, godel,
                       in_first_component, is_cancellative_type, lukasiewicz, mv_center, product_chain,
                       tabulate, validate_bl_axioms)
from ..chang import (BoundedGeneral, Cancellative, ChainSearch, Componentwise, Decision, GroupElt,
                     HGroup, class_eq, elt, godel_to_int, group_join, group_leq, group_meet, group_neg,
                     group_scale, group_zero, in_mv_image, in_S_L, lex_leq, positive_part, product_iso,
                     product_iso_inverse, strong_unit, support, theta_decompose)
from ..errors import BLError
from ..goodseq import (GoodSeq, _is_good_raw, chain_normal_form, dneg_seq, enumerate_good_seqs,
                       from_normal_form, gs_add_chain, gs_add_convolution, gs_join, gs_leq, gs_meet,
                       project_goodseq, random_good_seq, units, zero_seq)
from ..lgroups import (ChangGroup, Integers, ProductGroup, center_collapse, collapse_holds,
                       enumerate_homs, eta, extend_from_center, gamma_imp, gamma_interval, gamma_mul,
                       gamma_to_product_chain, good_seq_of_positive, lex_z_qpos,
                       product_chain_lmorphisms, psi, psi_inverse, restrict_to_center, xi_map)
from ..terms import find_counterexample
from .generators import Corpus, GeneratorConfig, build_corpus, godel_chains
from .runner import (PropertyRecord, RunReport, SuiteReport, check_elements, check_exists, check_flag,
                     check_items, rng_for, yes)
from .symbolic import no_half_from_quarter, ratio_map_is_additive


@dataclass
class Ctx:
    suite: str
    corpus: Corpus
    config: GeneratorConfig
    records: list = field(default_factory=list)

    def rec(self, prop: str, statement: str, algebra: str) -> PropertyRecord:
        r = PropertyRecord(self.suite, prop, statement, algebra)
        self.records.append(r)
        return r

    def rng(self, prop: str, algebra: str):
        return rng_for(self.config.seed, self.suite, prop, algebra)


def _imp(p, q):
    return (not p) or q


def _elem_props(ctx: Ctx, algebras, props):
    for A in algebras:
        for name, statement, arity, build in props:
            pred = build(A)
            if pred is None:
                continue
            check_elements(ctx.rec(name, statement, A.name), A, arity, pred,
                           ctx.config.samples, ctx.rng(name, A.name))


def strategy_for(A: Algebra):
    if isinstance(A, DirectProduct) and all(f.is_chain for f in A.factors):
        return Componentwise()
    return ChainSearch()


# -- S1 ----------------------------------------------------------------------------------
def suite_s1(ctx: Ctx):
    for A in ctx.corpus.all:
        rep = validate_bl_axioms(A, budget=min(ctx.config.samples, 2000), seed=ctx.config.seed)
        r = ctx.rec("BL axioms and derived laws", "hoop + BL axioms, order, negation, distributivity",
                    A.name)
        r.cases = sum(x.cases for x in rep.results)
        r.mode = "exhaustive" if rep.exhaustive else f"sampled seed={rep.seed}"
        bad = rep.failures()
        if bad:
            r.failures = len(bad)
            r.witness = "; ".join(x.format(A) for x in bad[:3])


# -- S2: pseudo-addition ----------------------------------------------------------------
S2_PROPS = [
    ("pseudo-addition associative", "(x // y) // z = x // (y // z)", 3,
     lambda A: lambda x, y, z: A._padd(A._padd(x, y), z) == A._padd(x, A._padd(y, z))),
    ("pseudo-addition monotone", "x <= y, z <= t => x // z <= y // t", 4,
     lambda A: lambda x, y, z, t: _imp(A._leq(x, y) and A._leq(z, t), A._leq(A._padd(x, z), A._padd(y, t)))),
    ("pseudo-addition distributes over join", "x // (y | z) = (x // y) | (x // z), (x | y) // z = ...", 3,
     lambda A: lambda x, y, z: A._padd(x, A._join(y, z)) == A._join(A._padd(x, y), A._padd(x, z))
     and A._padd(A._join(x, y), z) == A._join(A._padd(x, z), A._padd(y, z))),
    ("pseudo-addition distributes over meet", "x // (y & z) = (x // y) & (x // z), (x & y) // z = ...", 3,
     lambda A: lambda x, y, z: A._padd(x, A._meet(y, z)) == A._meet(A._padd(x, y), A._padd(x, z))
     and A._padd(A._meet(x, y), z) == A._meet(A._padd(x, z), A._padd(y, z))),
    ("pseudo-addition exchange", "x // (y // z) = y // (x // z)", 3,
     lambda A: lambda x, y, z: A._padd(x, A._padd(y, z)) == A._padd(y, A._padd(x, z))),
]


def suite_s2(ctx: Ctx):
    _elem_props(ctx, ctx.corpus.all, S2_PROPS)


# -- S3: addition -----------------------------------------------------------------------------
S3_PROPS = [
    ("addition associative", "(x + y) + z = x + (y + z)", 3,
     lambda A: lambda x, y, z: A._add(A._add(x, y), z) == A._add(x, A._add(y, z))),
    ("addition commutative", "x + y = y + x", 2, lambda A: lambda x, y: A._add(x, y) == A._add(y, x)),
    ("addition monotone", "x <= y, z <= t => x + z <= y + t", 4,
     lambda A: lambda x, y, z, t: _imp(A._leq(x, y) and A._leq(z, t), A._leq(A._add(x, z), A._add(y, t)))),
    ("zero is the identity", "x + 0 = x", 1, lambda A: lambda x: A._add(x, A.bottom) == x),
    ("one is absorbing", "x + 1 = 1", 1, lambda A: lambda x: A._add(x, A.top) == A.top),
    ("summands below the sum", "x <= x + y and y <= x + y", 2,
     lambda A: lambda x, y: A._leq(x, A._add(x, y)) and A._leq(y, A._add(x, y))),
    ("double negation of x + ~x", "~~(x + ~x) = 1", 1,
     lambda A: lambda x: A._dneg(A._add(x, A._neg(x))) == A.top),
    ("sum one bounds negation", "x + y = 1 => ~x <= y", 2,
     lambda A: lambda x, y: _imp(A._add(x, y) == A.top, A._leq(A._neg(x), y))),
    ("double negation respects addition", "~~(x + y) = ~~x + ~~y", 2,
     lambda A: lambda x, y: A._dneg(A._add(x, y)) == A._add(A._dneg(x), A._dneg(y))),
]


def suite_s3(ctx: Ctx):
    _elem_props(ctx, ctx.corpus.all, S3_PROPS)


# -- S4: addition in ordinal sums -------------------------------------------------------------
def tower_first(A: Algebra, x) -> bool:
    """Membership of x in the bottom component, read off the construction data."""
    if isinstance(A, OrdinalSum):
        return x == A.top or x[0] == 0
    if isinstance(A, StandardChain):
        return A.kind == LUKASIEWICZ or x in (0, 1)
    raise TypeError(A.name)


def tower_sum(A: Algebra, x, y):
    """x + y for nonzero x, y: truncated sum in the bottom MV-chain, else 1."""
    if not (tower_first(A, x) and tower_first(A, y)):
        return A.top
    if isinstance(A, OrdinalSum):
        c0 = A.components[0]
        vx = c0.top if x == A.top else x[1]
        vy = c0.top if y == A.top else y[1]
        return A._norm(0, min(c0.top, vx + vy))
    return min(Fraction(1), x + y)


def tower_neg(A: Algebra, x):
    if not tower_first(A, x):
        return A.bottom
    if isinstance(A, OrdinalSum):
        c0 = A.components[0]
        v = c0.top if x == A.top else x[1]
        return A._norm(0, c0.top - v)
    return 1 - x if A.kind == LUKASIEWICZ else (Fraction(1) if x == 0 else Fraction(0))


S4_PROPS = [
    ("addition in an ordinal sum", "x, y != 0 => x + y = x (+)_0 y if both in C0, else 1", 2,
     lambda A: lambda x, y: x == A.bottom or y == A.bottom or A._add(x, y) == tower_sum(A, x, y)),
    ("negation in an ordinal sum", "~x = ~_0 x on C0, 0 elsewhere", 1,
     lambda A: lambda x: A._neg(x) == tower_neg(A, x)),
    ("bottom component is {x : ~x != 0} plus 1", "in_first_component agrees with the tower data", 1,
     lambda A: lambda x: in_first_component(A, x) == tower_first(A, x)),
]


def _tower_chains(corpus: Corpus):
    return [A for A in corpus.all_chains if isinstance(A, (OrdinalSum, StandardChain))]


def suite_s4(ctx: Ctx):
    _elem_props(ctx, _tower_chains(ctx.corpus), S4_PROPS)


# -- S5: chain identities ------------------------------------------------------------------
def _chain_only(f):
    return lambda A: f(A) if A.is_chain else None


S5_PROPS = [
    ("sum below one kills the product", "x + y < 1 => x * y = 0", 2,
     _chain_only(lambda A: lambda x, y: _imp(A._add(x, y) != A.top, A._mul(x, y) == A.bottom))),
    ("sum and product determine the negation", "x + y = x + z, x * y = x * z => ~y = ~z", 3,
     _chain_only(lambda A: lambda x, y, z: _imp(A._add(x, y) == A._add(x, z) and A._mul(x, y) == A._mul(x, z),
                                                A._neg(y) == A._neg(z)))),
    ("equal sums below one determine the negation", "x + y = x + z < 1 => ~y = ~z", 3,
     _chain_only(lambda A: lambda x, y, z: _imp(A._add(x, y) == A._add(x, z) != A.top,
                                                A._neg(y) == A._neg(z)))),
    ("absorbing sum", "x + y = x => x = 1 or y = 0", 2,
     _chain_only(lambda A: lambda x, y: _imp(A._add(x, y) == x, x == A.top or y == A.bottom))),
    ("product absorbed by the sum", "x + y + (x * y) = x + y", 2,
     lambda A: lambda x, y: A._add(A._add(x, y), A._mul(x, y)) == A._add(x, y)),
    ("mixed distributivity", "(x*y) + ((x+y)*z) = (x+y) * ((x*y) + z)", 3,
     lambda A: lambda x, y, z: A._add(A._mul(x, y), A._mul(A._add(x, y), z))
     == A._mul(A._add(x, y), A._add(A._mul(x, y), z))),
    ("addition distributes over join and meet", "(x|y) + z = (x+z) | (y+z), (x&y) + z = (x+z) & (y+z)", 3,
     lambda A: lambda x, y, z: A._add(A._join(x, y), z) == A._join(A._add(x, z), A._add(y, z))
     and A._add(A._meet(x, y), z) == A._meet(A._add(x, z), A._add(y, z))),
    ("absorption mirrored by negations", "x + y = x => ~x + ~y = ~y", 2,
     _chain_only(lambda A: lambda x, y: _imp(A._add(x, y) == x, A._add(A._neg(x), A._neg(y)) == A._neg(y)))),
    ("absorption mirrored by negations, converse", "~x + ~y = ~y => x + y = x", 2,
     _chain_only(lambda A: lambda x, y: _imp(A._add(A._neg(x), A._neg(y)) == A._neg(y), A._add(x, y) == x))),
]


def suite_s5(ctx: Ctx):
    _elem_props(ctx, ctx.corpus.all, S5_PROPS)
    finite_chains = [A for A in ctx.corpus.chains]
    res = find_counterexample("x + y = x + z, x * y = x * z => y = z", finite_chains)
    check_flag(ctx.rec("negation conclusion cannot be strengthened", "x+y=x+z, x*y=x*z => y=z fails somewhere",
                       "finite chains"), res.found, res.cases,
               None if res.found else "no chain refutes y = z", "search", res.format())


def find_mutation_breaking(A: Algebra, prop: str = "absorbing sum", config: GeneratorConfig = GeneratorConfig()):
    """First single-cell corruption of A's tables that makes ``prop`` fail.

    Cells are tried in (table, row, column, value) order; returns the mutated
    table and the failing record, or None if every corruption keeps ``prop``.
    """
    name, statement, arity, build = next(p for p in S5_PROPS if p[0] == prop)
    T = tabulate(A)
    n = len(T.elements())
    for op in ("otimes", "imp"):
        for i, j, v in itertools.product(range(n), range(n), range(n)):
            if getattr(T, f"{op}_table")[i][j] == v:
                continue
            M = T.mutated(op, i, j, v)
            pred = _raw_pred(build, M)
            ctx = Ctx("S5", Corpus(), config)
            rec = check_elements(ctx.rec(name, statement, M.name), M, arity, pred, config.samples,
                                 ctx.rng(name, M.name))
            if rec.failures:
                return M, rec
    return None


def _raw_pred(build, M):
    """The predicate without its chain guard, for corrupted tables that are no longer chains."""
    class _AsChain:
        def __getattr__(self, attr):
            return getattr(M, attr)
        is_chain = True
    return build(_AsChain())


# -- S6: the key identity -----------------------------------------------------------------------
S6_PROPS = [
    ("key identity", "(x*y) + ((x+y)*z) = (x*z) + ((x+z)*y)", 3,
     lambda A: lambda x, y, z: A._add(A._mul(x, y), A._mul(A._add(x, y), z))
     == A._add(A._mul(x, z), A._mul(A._add(x, z), y))),
]


def suite_s6(ctx: Ctx):
    _elem_props(ctx, ctx.corpus.all, S6_PROPS)


# -- S7: good sequences ------------------------------------------------------------------------------
def _draws(A, rng, k, n, max_len):
    for _ in range(n):
        yield tuple(random_good_seq(A, rng, max_len) for _ in range(k))


def _seq_props(A: Algebra):
    props = [
        ("sum is good", "a + b is a good sequence", 2, lambda a, b: _is_good_raw(A, (a + b).entries)),
        ("sum commutative", "a + b = b + a", 2, lambda a, b: a + b == b + a),
        ("sum associative", "(a + b) + c = a + (b + c)", 3, lambda a, b, c: (a + b) + c == a + (b + c)),
        ("zero is the identity", "a + (0) = a", 1, lambda a: a + zero_seq(A) == a),
        ("conical and increasing", "a + b = (0) => a = b = (0); a <= a + b", 2,
         lambda a, b: _imp((a + b).is_zero(), a.is_zero() and b.is_zero()) and gs_leq(a, a + b)),
        ("lattice operations", "a | b and a & b are good; a & b <= a <= a | b", 2,
         lambda a, b: _is_good_raw(A, gs_join(a, b).entries) and _is_good_raw(A, gs_meet(a, b).entries)
         and gs_leq(gs_meet(a, b), a) and gs_leq(a, gs_join(a, b))),
        ("sum distributes over join and meet", "(a|b) + c = (a+c) | (b+c), (a&b) + c = (a+c) & (b+c)", 3,
         lambda a, b, c: gs_join(a, b) + c == gs_join(a + c, b + c) and gs_meet(a, b) + c == gs_meet(a + c, b + c)),
        ("support bound", "len(a + b) <= len(a) + len(b)", 2, lambda a, b: len(a + b) <= len(a) + len(b)),
        ("prepend law", "(1^m) + a = (1^m, a) by the convolution formula, m = 1..3", 1,
         lambda a: all(gs_add_convolution(units(A, m), a) == GoodSeq._raw(A, (A.top,) * m + a.entries)
                       for m in (1, 2, 3))),
        ("double negation respects sums", "~~(a + b) = ~~a + ~~b entrywise", 2,
         lambda a, b: dneg_seq(a + b) == dneg_seq(a) + dneg_seq(b)),
    ]
    if A.is_chain:
        props += [
            ("chain normal form round trip", "a = (1^p, tail)", 1,
             lambda a: from_normal_form(A, *chain_normal_form(a)) == a),
            ("chain fast path equals convolution", "(1^p,a)+(1^q,b) = (1^(p+q), a+b, a*b)", 2,
             lambda a, b: gs_add_chain(a, b) == gs_add_convolution(a, b)),
        ]
    if isinstance(A, DirectProduct):
        props.append(("projections respect sums", "pi_i(a + b) = pi_i(a) + pi_i(b)", 2,
                      lambda a, b: all(project_goodseq(a + b, i) == project_goodseq(a, i) + project_goodseq(b, i)
                                       for i in range(len(A.factors)))))
    if is_cancellative_type(A).holds:
        props.append(("cancellation", "a + c = b + c => a = b", 3,
                      lambda a, b, c: _imp(a + c == b + c, a == b)))
    return props


def _single_entry_values(A):
    if A.is_finite:
        return list(A.elements())
    return [Fraction(k, 8) for k in range(9)]


def suite_s7(ctx: Ctx):
    n, L = ctx.config.group_samples, ctx.config.seq_len
    for A in ctx.corpus.all:
        for name, statement, k, pred in _seq_props(A):
            rng = ctx.rng(name, A.name)
            check_items(ctx.rec(name, statement, A.name), _draws(A, rng, k, n, L), pred, f"sampled n={n}")
        verdict = is_cancellative_type(A)
        if verdict.holds is False and A.is_chain:
            vals = _single_entry_values(A)
            cands = itertools.product(vals, repeat=3)

            def cancels_not(t, A=A):
                a, b, c = (GoodSeq._raw(A, (v,)) for v in t)
                return a + c == b + c and a != b

            check_exists(ctx.rec("cancellation fails", "some a != b with a + c = b + c", A.name), cands,
                         cancels_not, lambda t, A=A: ", ".join(f"({A.fmt(v)})" for v in t), "search")


# -- S8: the Chang group -----------------------------------------------------------------------------
def _group_draws(A, rng, k, n):
    for _ in range(n):
        yield tuple(GroupElt(random_good_seq(A, rng, 4), random_good_seq(A, rng, 4)) for _ in range(k))


def _group_props(A: Algebra, st):
    z = group_zero(A)
    u = strong_unit(A)

    def eq(g, h):
        return yes(class_eq(g, h, st))

    def le(g, h):
        return yes(group_leq(g, h, st))

    props = [
        ("group laws", "associative, commutative, inverses, identity (mod ~)", 3,
         lambda g, h, m: eq((g + h) + m, g + (h + m)) and eq(g + h, h + g) and eq(g + group_neg(g), z)
         and eq(g + z, g)),
        ("order is a partial order", "reflexive, antisymmetric mod ~, transitive", 3,
         lambda g, h, m: le(g, g) and _imp(le(g, h) and le(h, g), eq(g, h))
         and _imp(le(g, h) and le(h, m), le(g, m))),
        ("translation invariance", "g <= h iff g + m <= h + m", 3, lambda g, h, m: le(g, h) == le(g + m, h + m)),
        ("join is the least upper bound", "g, h <= g|h <= every common upper bound", 3,
         lambda g, h, m: le(g, group_join(g, h)) and le(h, group_join(g, h))
         and le(group_join(g, h), group_join(group_join(g, h), m))
         and _imp(le(g, m) and le(h, m), le(group_join(g, h), m))),
        ("meet is the greatest lower bound", "g&h <= g, h; every common lower bound <= g&h", 3,
         lambda g, h, m: le(group_meet(g, h), g) and le(group_meet(g, h), h)
         and _imp(le(m, g) and le(m, h), le(m, group_meet(g, h)))),
        ("join with zero", "[a,b] | 0 = [a|b, b]", 1, lambda g: eq(group_join(g, z), positive_part(g))),
        ("lattice-group distributivity", "(g|h) + m = (g+m) | (h+m)", 3,
         lambda g, h, m: eq(group_join(g, h) + m, group_join(g + m, h + m))),
        ("join from positive part", "g | h = ((g - h) | 0) + h", 2,
         lambda g, h: eq(group_join(g, h), group_join(g - h, z) + h)),
        ("strong unit", "g <= n u with n = max(1, support of g)", 1,
         lambda g: le(g, group_scale(u, max(1, support(g))))),
        ("MV-centre decomposition", "g = mv + s, s in S(L), mv over MV(L), S(L) and MV part meet in 0", 1,
         lambda g: _theta_ok(g, eq)),
        ("decomposition additive", "theta(g + h) = theta(g) + theta(h)", 2,
         lambda g, h: all(eq(x, y + w) for x, y, w in zip(theta_decompose(g + h), theta_decompose(g),
                                                              theta_decompose(h)))),
        ("S(L) membership is a class invariant", "[a,b] in S(L) iff [a+k, b+k] in S(L)", 2,
         lambda g, k: in_S_L(g) == in_S_L(GroupElt(g.pos + k.pos, g.neg + k.pos))),
    ]
    if A.is_chain:
        props += [
            ("totally ordered", "g <= h or h <= g", 2, lambda g, h: le(g, h) or le(h, g)),
            ("decomposition preserves the lexicographic order", "g <= h => theta(g) <=_lex theta(h)", 2,
             lambda g, h: _imp(le(g, h), _lex_le(theta_decompose(g), theta_decompose(h), eq, le))),
        ]
    if is_cancellative_type(A).holds:
        props.append(("cancellative equality", "[a,b] ~ [c,d] iff a + d = b + c", 2,
                      lambda g, h: eq(g, h) == (g.pos + h.neg == g.neg + h.pos)))
    return props


def _theta_ok(g, eq):
    mv, s = theta_decompose(g)
    ok = eq(g, mv + s) and in_S_L(s) and in_mv_image(mv)
    if in_mv_image(s):
        ok = ok and eq(s, group_zero(g.algebra))
    if in_S_L(mv):
        ok = ok and eq(mv, group_zero(g.algebra))
    return ok


def _lex_le(tg, th, eq, le):
    (mg, sg), (mh, sh) = tg, th
    if not le(mg, mh):
        return False
    return _imp(eq(mg, mh), le(sg, sh))


def _sandwiches(A, rng, n):
    for _ in range(n):
        s1 = theta_decompose(GroupElt(random_good_seq(A, rng, 4), random_good_seq(A, rng, 4)))[1]
        s2 = theta_decompose(GroupElt(random_good_seq(A, rng, 4), random_good_seq(A, rng, 4)))[1]
        g = GroupElt(random_good_seq(A, rng, 4), random_good_seq(A, rng, 4))
        yield s1, s2, g


def _convex(A, st):
    def pred(s1, s2, g):
        top = group_join(s1, s2)
        mid = group_join(s1, group_meet(top, g))
        return (yes(group_leq(s1, mid, st)) and yes(group_leq(mid, top, st)) and in_S_L(top)
                and in_S_L(mid))
    return pred


def _incomparable(A, st):
    vals = [x for x in A.elements() if x not in (A.bottom,)]
    for x, y in itertools.combinations(vals, 2):
        g, h = elt(A, [x]), elt(A, [y])
        if not yes(group_leq(g, h, st)) and not yes(group_leq(h, g, st)):
            return g, h
    return None


def strategy_agreement(A: Algebra, rng, n: int):
    """(cases, disagreements, first disagreement) across the applicable strategies."""
    primary = strategy_for(A)
    licensed = is_cancellative_type(A).holds is True
    bounded = BoundedGeneral()
    cases, bad, first = 0, 0, None
    pool = []
    for _ in range(n):
        g = GroupElt(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3))
        h = GroupElt(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3))
        k = random_good_seq(A, rng, 3)
        pool.append((g, h))
        pool.append((g, GroupElt(g.pos + k, g.neg + k)))      # same class, different representative
    for g, h in pool:
        cases += 1
        d_main = class_eq(g, h, primary)
        d_bound = class_eq(g, h, bounded)
        ok = d_main is not Decision.UNKNOWN
        if d_bound is not Decision.UNKNOWN and d_bound is not d_main:
            ok = False
        if d_bound is Decision.NO:      # bounded search never proves a negative
            ok = False
        if licensed and class_eq(g, h, Cancellative()) is not d_main:
            ok = False
        if not ok:
            bad += 1
            if first is None:
                first = f"g={g}, h={h}: main={d_main.value}, bounded={d_bound.value}"
    return cases, bad, first


def suite_s8(ctx: Ctx):
    n = ctx.config.group_samples
    for A in ctx.corpus.all:
        st = strategy_for(A)
        for name, statement, k, pred in _group_props(A, st):
            rng = ctx.rng(name, A.name)
            check_items(ctx.rec(name, statement, A.name), _group_draws(A, rng, k, n), pred, f"sampled n={n}")
        m = ctx.config.sandwich_samples
        check_items(ctx.rec("S(L) is convex", "s1 <= g <= s2 with s1, s2 in S(L) => g in S(L)", A.name),
                    _sandwiches(A, ctx.rng("convex", A.name), m), _convex(A, st), f"sampled n={m}")
        verdict = is_cancellative_type(A)
        if verdict.holds is False and A.is_chain:
            vals = _single_entry_values(A)

            def witness(t, A=A, st=st):
                g, h = elt(A, [t[0]], [t[1]]), group_zero(A)
                return yes(class_eq(g, h, st)) and g.pos + h.neg != g.neg + h.pos

            check_exists(ctx.rec("equality needs a witness k", "some [a,b] ~ 0 with a != b", A.name),
                         itertools.product(vals, repeat=2), witness,
                         lambda t, A=A: f"[({A.fmt(t[0])}),({A.fmt(t[1])})] ~ 0", "search")
        if isinstance(A, DirectProduct) and verdict.holds and not A.is_chain:
            pair = _incomparable(A, st)
            check_flag(ctx.rec("non-chain product is not totally ordered", "some g, h incomparable", A.name),
                       pair is not None, witness=None if pair else "all single-entry pairs comparable",
                       mode="search", note=f"found {pair[0]} vs {pair[1]}" if pair else "")
        if A.is_finite:
            cases, bad, first = strategy_agreement(A, ctx.rng("agreement", A.name), n)
            r = ctx.rec("strategies agree", "search strategies agree with each other and with cancellation",
                        A.name)
            r.cases, r.failures, r.witness, r.mode = cases, bad, first, f"sampled pairs={cases}"
    P = next((A for A in ctx.corpus.rationals if isinstance(A, StandardChain) and A.kind == PRODUCT), None)
    if P is not None:
        proof = no_half_from_quarter()
        check_flag(ctx.rec("no a with (1/2) = (1/4) + a", proof.claim, P.name), proof.ok, len(proof.cases),
                   None if proof.ok else proof.format(), "symbolic", "; ".join(d for d, _ in proof.cases))


# -- S9: concrete isomorphisms ------------------------------------------------------------------
def _pairs(A, rng, n, max_len=4):
    for _ in range(n):
        yield (GroupElt(random_good_seq(A, rng, max_len), random_good_seq(A, rng, max_len)),
               GroupElt(random_good_seq(A, rng, max_len), random_good_seq(A, rng, max_len)))


def _random_nonzero(A, rng):
    while True:
        x = A.sample(rng)
        if x != A.bottom:
            return x


def suite_s9(ctx: Ctx):
    n = ctx.config.iso_samples
    st = ChainSearch()
    for A in godel_chains():
        z = group_zero(A)
        props = [
            ("integer map additive", "int(g + h) = int(g) + int(h)", 2,
             lambda g, h: godel_to_int(g + h) == godel_to_int(g) + godel_to_int(h)),
            ("integer map preserves and reflects order", "g <= h iff int(g) <= int(h)", 2,
             lambda g, h: yes(group_leq(g, h, st)) == (godel_to_int(g) <= godel_to_int(h))),
            ("integer map injective on classes", "int(g) = int(h) iff g ~ h", 2,
             lambda g, h: (godel_to_int(g) == godel_to_int(h)) == yes(class_eq(g, h, st))),
            ("S(L) is trivial", "the S(L) part of every g is ~ 0", 1,
             lambda g: yes(class_eq(theta_decompose(g)[1], z, st))),
        ]
        for name, statement, k, pred in props:
            rng = ctx.rng(name, A.name)
            draws = (p[:k] for p in _pairs(A, rng, n))
            check_items(ctx.rec(name, statement, A.name), draws, pred, f"sampled n={n}")
        ok = godel_to_int(strong_unit(A)) == 1 and all(
            godel_to_int(group_scale(strong_unit(A), m)) == m for m in range(-5, 6))
        check_flag(ctx.rec("unit maps to 1 and m u to m", "int(u) = 1; onto Z", A.name), ok, 11)

    P = product_chain()
    H = HGroup(P)
    props = [
        ("ratio map additive", "phi(g + h) = phi(g) + phi(h) in Z x (Q+, *)", 2,
         lambda g, h: _phi_add(product_iso(g), product_iso(h)) == product_iso(g + h)),
        ("ratio map preserves and reflects the lexicographic order", "g <= h iff phi(g) <=lex phi(h)", 2,
         lambda g, h: yes(group_leq(g, h, st)) == lex_leq(product_iso(g), product_iso(h))),
        ("ratio map injective on classes", "phi(g) = phi(h) iff g ~ h", 2,
         lambda g, h: (product_iso(g) == product_iso(h)) == yes(class_eq(g, h, st))),
        ("ratio map inverse", "phi(phi^-1(phi(g))) = phi(g) and phi^-1(phi(g)) ~ g", 1,
         lambda g: product_iso(product_iso_inverse(P, *product_iso(g))) == product_iso(g)
         and yes(class_eq(product_iso_inverse(P, *product_iso(g)), g, st))),
    ]
    for name, statement, k, pred in props:
        rng = ctx.rng(name, P.name)
        check_items(ctx.rec(name, statement, P.name), (p[:k] for p in _pairs(P, rng, n)), pred, f"sampled n={n}")
    rng = ctx.rng("single-entry ratio", P.name)
    pts = [(_random_nonzero(P, rng), _random_nonzero(P, rng)) for _ in range(n)]
    check_flag(ctx.rec("ratio of single entries", "phi([(a),(b)]) = (0, a/b)", P.name),
               all(product_iso(elt(P, [a], [b])) == (0, a / b) for a, b in pts), len(pts), mode=f"sampled n={n}")
    proof = ratio_map_is_additive()
    check_flag(ctx.rec("ratio map symbolic", proof.claim, P.name), proof.ok, len(proof.cases),
               None if proof.ok else proof.format(), "symbolic")
    check_flag(ctx.rec("ratio map on zero and unit", "phi(0) = (0, 1), phi(u) = (1, 1)", P.name),
               product_iso(group_zero(P)) == (0, 1) and product_iso(strong_unit(P)) == (1, 1))

    m = ctx.config.group_samples
    rng = ctx.rng("pair group", P.name)
    hp = [(H.make(_random_nonzero(P, rng), _random_nonzero(P, rng)),
           H.make(_random_nonzero(P, rng), _random_nonzero(P, rng))) for _ in range(m)]

    def h_ok(x, y):
        sx, sy = H.to_S(x), H.to_S(y)
        return (H.leq(x, y) == yes(group_leq(sx, sy, st)) and H.eq(x, y) == yes(class_eq(sx, sy, st))
                and yes(class_eq(H.to_S(H.add(x, y)), sx + sy, st)) and in_S_L(sx))

    r = ctx.rec("pair group embeds into S(L)", "[a,b] |-> [(a),(b)] is additive, order- and class-faithful",
                P.name)
    check_items(r, iter(hp), h_ok, f"sampled n={m}")
    cone = all(H.leq(H.make(a, 1), H.zero()) for a, _ in (p[0] for p in hp))
    check_flag(ctx.rec("negative cone", "[a,1] <= [1,1] for a <= 1", P.name), cone, m)

    for A in [P, godel()]:
        rng = ctx.rng("o-group", A.name)
        check_items(ctx.rec("chain gives an o-group", "g <= h or h <= g", A.name), _pairs(A, rng, m),
                    lambda g, h: yes(group_leq(g, h, st)) or yes(group_leq(h, g, st)), f"sampled n={m}")
    for A in ctx.corpus.products:
        if is_cancellative_type(A).holds:
            pair = _incomparable(A, Componentwise())
            check_flag(ctx.rec("cancellative non-chain gives no o-group", "some pair incomparable", A.name),
                       pair is not None, mode="search",
                       note=f"found {pair[0]} vs {pair[1]}" if pair else "")


def _phi_add(x, y):
    return (x[0] + y[0], x[1] * y[1])


# -- S10: the interval functor --------------------------------------------------------------------
def _gamma_groups():
    return ([Integers(n) for n in range(1, 6)]
            + [ProductGroup([Integers(1), Integers(1)]), ProductGroup([Integers(2), Integers(1)])])


def suite_s10(ctx: Ctx):
    cfg = ctx.config
    for G in _gamma_groups() + [lex_z_qpos()]:
        A = gamma_interval(G)
        rep = validate_bl_axioms(A, budget=1000, seed=cfg.seed)
        r = ctx.rec("interval algebra is MV", "BL axioms and ~~x = x on [0,u]", A.name)
        check_elements(r, A, 1, lambda x, A=A: A._dneg(x) == x, 1000, ctx.rng("mv", A.name))
        if not rep.ok:
            r.failures += len(rep.failures())
            r.witness = rep.failures()[0].format(A)
        check_elements(ctx.rec("truncated sum is the derived addition", "x + y = (x+y) & u", A.name), A, 2,
                       lambda x, y, A=A: A._add(x, y) == Algebra._add(A, x, y), 1000, ctx.rng("add", A.name))

    for n in range(1, 6):
        _psi_integers(ctx, n)
    for n in range(1, 5):
        _greedy_unique(ctx, n)
    _psi_lex(ctx)
    _eta_checks(ctx)
    _hom_checks(ctx)
    _example_checks(ctx)


def _psi_integers(ctx: Ctx, n: int):
    G = Integers(n)
    A = gamma_interval(G)
    st = ChainSearch()
    span = range(-10 * n, 10 * n + 1)
    vals = {a: psi(G, a, A) for a in span}
    u = strong_unit(A)
    r = ctx.rec("psi additive, order- and unit-preserving", "psi(a+b) ~ psi(a)+psi(b); a<=b iff psi(a)<=psi(b)",
                G.name)
    r.mode = f"exhaustive on [-{10 * n}, {10 * n}]"
    zero = group_zero(A)
    for a, b in itertools.product(span, repeat=2):
        r.cases += 1
        ok = (psi_inverse(G, vals[a] + vals[b]) == a + b
              and yes(group_leq(vals[a], vals[b], st)) == (a <= b)
              and yes(class_eq(vals[a], vals[b], st)) == (a == b))
        if a + b in vals:
            ok = ok and yes(class_eq(vals[a + b], vals[a] + vals[b], st))
        if not ok:
            r.failures += 1
            r.witness = r.witness or f"a={a}, b={b}"
    if not (yes(class_eq(vals[n], u, st)) and yes(class_eq(vals[0], zero, st))):
        r.failures += 1
        r.witness = r.witness or "psi(u) is not the strong unit"
    r2 = ctx.rec("psi bijective", "psi^-1(psi(a)) = a; every canonical class in range is hit", G.name)
    r2.mode = "exhaustive"
    for a in span:
        r2.cases += 1
        if psi_inverse(G, vals[a]) != a:
            r2.failures += 1
            r2.witness = r2.witness or f"a={a}"
    nonzero = [x for x in A.elements() if x != A.bottom]
    for p, q in itertools.product(range(10), repeat=2):
        for x, y in itertools.product(nonzero, repeat=2):
            g = GroupElt(GoodSeq._raw(A, (A.top,) * p + (x,)), GoodSeq._raw(A, (A.top,) * q + (y,)))
            v = psi_inverse(G, g)
            if v not in vals:
                continue
            r2.cases += 1
            if not yes(class_eq(vals[v], g, st)):
                r2.failures += 1
                r2.witness = r2.witness or f"{g} not hit"


def _greedy_unique(ctx: Ctx, n: int):
    G = Integers(n)
    A = gamma_interval(G)
    r = ctx.rec("good sequence of a positive element is unique", "exactly one good (a1..ak) sums to a",
                G.name)
    r.mode = f"brute force a <= {4 * n}"
    pool = enumerate_good_seqs(A, 4 * n)
    by_sum = {}
    for s in pool:
        by_sum.setdefault(sum(s.entries), []).append(s)
    for a in range(0, 4 * n + 1):
        r.cases += 1
        found = by_sum.get(a, [])
        g = good_seq_of_positive(G, a, A)
        if len(found) != 1 or found[0] != g:
            r.failures += 1
            r.witness = r.witness or f"a={a}: {len(found)} sequences, greedy {g}"


def _psi_lex(ctx: Ctx):
    G = lex_z_qpos()
    A = gamma_interval(G)
    st = Cancellative()
    n = ctx.config.iso_samples
    rng = ctx.rng("psi", G.name)
    draws = [(G.sample(rng), G.sample(rng)) for _ in range(n)]
    r = ctx.rec("psi additive, order- and unit-preserving", "as for Z, on sampled values", G.name)
    r.mode = f"sampled n={n}"
    u = strong_unit(A)
    for a, b in draws:
        r.cases += 1
        pa, pb = psi(G, a, A), psi(G, b, A)
        ok = (yes(class_eq(psi(G, G.add(a, b), A), pa + pb, st))
              and yes(group_leq(pa, pb, st)) == G.leq(a, b)
              and psi_inverse(G, pa) == a)
        if not ok:
            r.failures += 1
            r.witness = r.witness or f"a={G.fmt(a)}, b={G.fmt(b)}"
    if not yes(class_eq(psi(G, G.unit, A), u, st)):
        r.failures += 1
        r.witness = r.witness or "psi(u) is not the strong unit"


def _small_algebras(corpus: Corpus):
    return [A for A in corpus.finite if len(A.elements()) <= 6]


def _eta_checks(ctx: Ctx):
    for L in _small_algebras(ctx.corpus):
        st = strategy_for(L)
        CG = ChangGroup(L, st)
        r = ctx.rec("eta is a BL-morphism into [0, u]", "eta(x*y) ~ eta(x)*eta(y), same for ->, 0, 1", L.name)
        r.mode = "exhaustive"
        els = L.elements()
        if not (CG.eq(eta(L, L.bottom), group_zero(L)) and CG.eq(eta(L, L.top), strong_unit(L))):
            r.failures += 1
            r.witness = "0 or 1 not preserved"
        for x, y in itertools.product(els, repeat=2):
            r.cases += 1
            ex, ey = eta(L, x), eta(L, y)
            ok = (CG.eq(eta(L, L._mul(x, y)), gamma_mul(CG, ex, ey))
                  and CG.eq(eta(L, L._imp(x, y)), gamma_imp(CG, ex, ey))
                  and eta(L, x) == eta(L, L._dneg(x)) and in_mv_image(ex))
            if not ok:
                r.failures += 1
                r.witness = r.witness or f"x={L.fmt(x)}, y={L.fmt(y)}"

    small = [A for A in _small_algebras(ctx.corpus) if len(A.elements()) <= 4]
    r = ctx.rec("eta is natural", "Xi(f)(eta_X(x)) ~ eta_Y(f(x)) for every hom f: X -> Y", "small corpus")
    r.mode = "exhaustive over homs"
    homs_seen = 0
    for X, Y in itertools.product(small, repeat=2):
        st = strategy_for(Y)
        for f in enumerate_homs(X, Y):
            homs_seen += 1
            for x in X.elements():
                r.cases += 1
                if not yes(class_eq(xi_map(f, eta(X, x)), eta(Y, f(x)), st)):
                    r.failures += 1
                    r.witness = r.witness or f"{f.name}: {X.name} -> {Y.name} at {X.fmt(x)}"
            if not yes(class_eq(xi_map(f, strong_unit(X)), strong_unit(Y), st)):
                r.failures += 1
                r.witness = r.witness or f"{f.name} does not preserve the unit"
    r.note = f"{homs_seen} homomorphisms"


def _hom_checks(ctx: Ctx):
    L4, G3 = lukasiewicz(4), godel(3)
    homs = enumerate_homs(L4, G3)
    check_flag(ctx.rec("collapse on MV domains", "2a <= u => f(a) = 0; u <= 2a => f(a) = 1",
                       f"{L4.name} -> {G3.name}"), all(collapse_holds(f) for f in homs), max(1, len(homs)),
               mode="exhaustive", note=f"{len(homs)} homomorphisms")
    A = gamma_interval(ProductGroup([Integers(2), Integers(1)]))
    homs = enumerate_homs(A, G3)
    check_flag(ctx.rec("collapse on MV domains", "2a <= u => f(a) = 0; u <= 2a => f(a) = 1",
                       f"{A.name} -> {G3.name}"), bool(homs) and all(collapse_holds(f) for f in homs), len(homs),
               mode="exhaustive", note=f"{len(homs)} homomorphisms")

    targets = [lukasiewicz(k) for k in (2, 3, 4)] + [gamma_interval(ProductGroup([Integers(1), Integers(1)]))]
    for L in ctx.corpus.chains:
        if len(L.elements()) > 5:
            continue
        M = mv_center(L)
        for T in targets:
            from_L, from_M = enumerate_homs(L, T), enumerate_homs(M, T)
            ok = len(from_L) == len(from_M)
            ext = {extend_from_center(g, L).table() for g in from_M}
            ok = ok and ext == {h.table() for h in from_L}
            ok = ok and {restrict_to_center(h, M).table() for h in from_L} == {g.table() for g in from_M}
            if len(M.elements()) == 2:
                ok = ok and len(from_L) == 1
            check_flag(ctx.rec("homs from L match homs from MV(L)", "Hom(L, A) ~ Hom(MV(L), A) by restriction",
                               f"{L.name} -> {T.name}"), ok, len(from_L) + len(from_M), mode="exhaustive",
                       note=f"{len(from_L)} each")


def _example_checks(ctx: Ctx):
    P = product_chain()
    G = lex_z_qpos()
    n = ctx.config.group_samples
    try:
        phi, flat = product_chain_lmorphisms(P, samples=n, seed=ctx.config.seed)
        probe = elt(P, [Fraction(1, 2)])
        distinct = phi(probe) != flat(probe)
        check_flag(ctx.rec("two unital l-morphisms G_L -> Z x_lex Qpos", "phi and (m,x) |-> (m,1) after phi",
                           P.name), distinct, 2 * n, mode=f"sampled n={n}",
                   note=f"differ at {probe}: {phi(probe)} vs {flat(probe)}")
    except BLError as exc:
        check_flag(ctx.rec("two unital l-morphisms G_L -> Z x_lex Qpos", "validation", P.name), False,
                   witness=str(exc))
    for name, build in (("case split Gamma(G) -> L is a BL-morphism", lambda: gamma_to_product_chain(G, P)),
                        ("collapse L -> Gamma(G) is a BL-morphism", lambda: center_collapse(P, gamma_interval(G)))):
        try:
            f = build()
            check_flag(ctx.rec(name, "preserves 0, 1, *, -> on samples", P.name), f.validated,
                       f.certificate.cases, mode=f"sampled seed={f.certificate.seed}")
        except BLError as exc:
            check_flag(ctx.rec(name, "validation", P.name), False, witness=str(exc))


# -- registry -----------------------------------------------------------------------------------------
SUITES = {
    "S1": ("BL axioms and derived laws", suite_s1),
    "S2": ("pseudo-addition", suite_s2),
    "S3": ("addition", suite_s3),
    "S4": ("addition in ordinal sums", suite_s4),
    "S5": ("identities of BL-chains", suite_s5),
    "S6": ("the key identity", suite_s6),
    "S7": ("the monoid and lattice of good sequences", suite_s7),
    "S8": ("the Chang l-group", suite_s8),
    "S9": ("Goedel and product chains", suite_s9),
    "S10": ("the interval functor and its companions", suite_s10),
}
ALL_IDS = tuple(SUITES)


def run_suite(suite_id: str, corpus: Corpus = None, config: GeneratorConfig = GeneratorConfig()) -> SuiteReport:
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}; known: {', '.join(ALL_IDS)}")
    corpus = corpus or build_corpus(config)
    title, fn = SUITES[suite_id]
    ctx = Ctx(suite_id, corpus, config)
    t0 = time.perf_counter()
    fn(ctx)
    return SuiteReport(suite_id, title, ctx.records, time.perf_counter() - t0)


def _run_one(args):
    suite_id, config = args
    return run_suite(suite_id, None, config)


def run_suites(ids=ALL_IDS, config: GeneratorConfig = GeneratorConfig(), jobs: int = 1) -> RunReport:
    ids = [i for i in ALL_IDS if i in set(ids)] + [i for i in ids if i not in SUITES]
    for i in ids:
        if i not in SUITES:
            raise KeyError(f"unknown suite {i!r}; known: {', '.join(ALL_IDS)}")
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_run_one, [(i, config) for i in ids]))
    else:
        corpus = build_corpus(config)
        reports = [run_suite(i, corpus, config) for i in ids]
    return RunReport(config.seed, reports, ALL_IDS)
