"""The Chang l-group G_L of a BL-algebra.

Elements are formal differences ``[a, b]`` of good sequences.  Two pairs
name the same element when ``a + d + k = b + c + k`` for some good ``k``;
that existential is decided by an explicit strategy:

``Cancellative()``
    ``a + d = b + c``; only licensed on algebras verified to be of
    cancellative type.
``ChainSearch(cap)``
    Over a chain every ``k`` is ``(1^m) + (t)`` and prepending units is
    injective, so single-entry witnesses ``(t)`` suffice.  Finite chains
    try every ``t``; standard rational chains try a finite set of
    breakpoints (see :func:`threshold_witnesses`); other infinite chains
    try the closure of the entries under ``*``, ``+`` and ``^`` up to
    ``cap`` values.
``BoundedGeneral(bound)``
    Any algebra: try every good ``k`` of length <= bound whose first entry
    is not 1.  Can only answer YES or UNKNOWN.
``Componentwise(inner)``
    Finite direct products of chains: decide coordinate by coordinate.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .algebra import (Algebra, DirectProduct, StandardChain, is_cancellative_type, is_godel,
                      is_product_chain, mv_center)
from .errors import DomainError, StrategyError, UnsupportedShapeError
from .goodseq import (GoodSeq, chain_normal_form, dneg_seq, enumerate_good_seqs,
                      format_goodseq, gs_add, gs_join, gs_leq, gs_meet, project_goodseq,
                      units, zero_seq)


class Decision(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __bool__(self):
        if self is Decision.UNKNOWN:
            raise ValueError("undecided comparison has no truth value")
        return self is Decision.YES

    @classmethod
    def of(cls, flag: bool) -> "Decision":
        return cls.YES if flag else cls.NO


@dataclass(frozen=True)
class GroupElt:
    """The class of the pair [pos, neg].  ``==`` is structural only."""
    pos: GoodSeq
    neg: GoodSeq

    def __post_init__(self):
        if self.pos.algebra is not self.neg.algebra:
            raise DomainError("both sides of a group element must share an algebra")

    @property
    def algebra(self) -> Algebra:
        return self.pos.algebra

    def __add__(self, other):
        return group_add(self, other)

    def __neg__(self):
        return group_neg(self)

    def __sub__(self, other):
        return group_add(self, group_neg(other))

    def __str__(self):
        return f"[{format_goodseq(self.pos)},{format_goodseq(self.neg)}]"


def elt(A: Algebra, pos=(), neg=()) -> GroupElt:
    """Build [pos, neg] from entry lists (checked for goodness)."""
    return GroupElt(GoodSeq.of(A, pos), GoodSeq.of(A, neg))


# -- strategies -----------------------------------------------------------------
@dataclass(frozen=True)
class Cancellative:
    pass


@dataclass(frozen=True)
class ChainSearch:
    cap: int = 512


@dataclass(frozen=True)
class BoundedGeneral:
    bound: Optional[int] = None


@dataclass(frozen=True)
class Componentwise:
    inner: object = ChainSearch()


def strategy_from_name(name: str, bound: Optional[int] = None):
    name = name.lower()
    if name in ("cancellative", "cancel"):
        return Cancellative()
    if name in ("chain", "chainsearch", "chain-search"):
        return ChainSearch()
    if name in ("bounded", "boundedgeneral", "bounded-general"):
        return BoundedGeneral(bound)
    if name in ("componentwise", "product"):
        return Componentwise()
    raise ValueError(f"unknown strategy {name!r}")


_DECISIONS: "weakref.WeakKeyDictionary[Algebra, dict]" = weakref.WeakKeyDictionary()


def _cache(A: Algebra) -> dict:
    c = _DECISIONS.get(A)
    if c is None:
        c = _DECISIONS[A] = {}
    return c


def _rel(A, x: GoodSeq, y: GoodSeq, order: bool) -> bool:
    return gs_leq(x, y) if order else x == y


def witness_values(A: Algebra, seqs, cap: int = 512):
    """Closure of the entries of ``seqs`` with 0 and 1 under *, + and ^.

    Returns (values in discovery order, complete?).  Discovery order is
    breadth-first so 0 and the raw entries come first.
    """
    seen = {A.bottom: None, A.top: None}
    for s in seqs:
        for e in s.entries:
            seen.setdefault(e, None)
    frontier = list(seen)
    values = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for y in list(values):
                for z in (A._mul(x, y), A._add(x, y), A._meet(x, y)):
                    if z not in seen:
                        if len(values) >= cap:
                            return values, False
                        seen[z] = None
                        values.append(z)
                        new.append(z)
        frontier = new
    return values, True


def threshold_witnesses(A: Algebra, seqs) -> list:
    """A complete finite witness set for a standard rational chain.

    Every entry of ``X + (t)`` is 1, t, x + t or x * t.  On each of the
    three chains these pieces are monotone in t with breakpoints only at
    values ``v -> w`` or ``~(v -> w)`` for v, w among the entries, 0 and 1;
    between two breakpoints all (in)equalities between entries are
    constant, so each breakpoint (the right end of its interval) plus 0
    stands for every t.
    """
    base = {A.bottom, A.top}
    for s in seqs:
        base.update(s.entries)
    out = set(base)
    for v in base:
        for w in base:
            r = A._imp(v, w)
            out.add(r)
            out.add(A._neg(r))
    return sorted(out)


def _search(A: Algebra, X: GoodSeq, Y: GoodSeq, strategy, order: bool) -> Decision:
    if _rel(A, X, Y, order):
        return Decision.YES
    if isinstance(strategy, Cancellative):
        v = is_cancellative_type(A)
        if v.holds is not True:
            raise StrategyError(f"Cancellative strategy is not licensed on {A.name} ({v.reason or 'undecided'})")
        return Decision.NO
    if isinstance(strategy, ChainSearch):
        if not A.is_chain:
            raise UnsupportedShapeError(f"ChainSearch needs a chain; {A.name} is not one")
        if A.is_finite:
            candidates, complete = A.elements(), True
        elif isinstance(A, StandardChain):
            candidates, complete = threshold_witnesses(A, (X, Y)), True
        else:
            candidates, complete = witness_values(A, (X, Y), strategy.cap)
        for t in candidates:
            k = GoodSeq._raw(A, (t,))
            if _rel(A, gs_add(X, k), gs_add(Y, k), order):
                return Decision.YES
        return Decision.NO if complete else Decision.UNKNOWN
    if isinstance(strategy, BoundedGeneral):
        if A.is_finite:
            bound = strategy.bound if strategy.bound is not None else len(A.elements()) + 2
            pool = enumerate_good_seqs(A, bound, first_not_top=True)
        else:
            bound = strategy.bound if strategy.bound is not None else 3
            vals, _ = witness_values(A, (X, Y))
            pool = enumerate_good_seqs(A, bound, first_not_top=True, values=vals)
        for k in pool:
            if _rel(A, gs_add(X, k), gs_add(Y, k), order):
                return Decision.YES
        return Decision.UNKNOWN
    if isinstance(strategy, Componentwise):
        if not (isinstance(A, DirectProduct) and all(f.is_chain for f in A.factors)):
            raise UnsupportedShapeError(f"Componentwise needs a direct product of chains; got {A.name}")
        worst = Decision.YES
        for i, f in enumerate(A.factors):
            d = _search(f, project_goodseq(X, i), project_goodseq(Y, i), strategy.inner, order)
            if d is Decision.NO:
                return Decision.NO
            if d is Decision.UNKNOWN:
                worst = Decision.UNKNOWN
        return worst
    raise TypeError(f"unknown strategy {strategy!r}")


def _decide(g: GroupElt, h: GroupElt, strategy, order: bool) -> Decision:
    A = g.algebra
    if h.algebra is not A:
        raise DomainError(f"group elements over different algebras ({A.name} vs {h.algebra.name})")
    X = gs_add(g.pos, h.neg)
    Y = gs_add(g.neg, h.pos)
    key = (strategy, order, X.entries, Y.entries)
    cache = _cache(A)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = _search(A, X, Y, strategy, order)
    return hit


def class_eq(g: GroupElt, h: GroupElt, strategy) -> Decision:
    """Decide [a,b] ~ [c,d], i.e. a + d + k = b + c + k for some k."""
    return _decide(g, h, strategy, order=False)


def group_leq(g: GroupElt, h: GroupElt, strategy) -> Decision:
    """Decide [a,b] <= [c,d], i.e. a + d + k <= b + c + k for some k."""
    return _decide(g, h, strategy, order=True)


# -- group and lattice operations -------------------------------------------------
def group_zero(A: Algebra) -> GroupElt:
    z = zero_seq(A)
    return GroupElt(z, z)


def strong_unit(A: Algebra) -> GroupElt:
    return GroupElt(units(A, 1), zero_seq(A))


def group_add(g: GroupElt, h: GroupElt) -> GroupElt:
    return GroupElt(gs_add(g.pos, h.pos), gs_add(g.neg, h.neg))


def group_neg(g: GroupElt) -> GroupElt:
    return GroupElt(g.neg, g.pos)


def group_scale(g: GroupElt, n: int) -> GroupElt:
    if n < 0:
        return group_scale(group_neg(g), -n)
    acc = group_zero(g.algebra)
    for _ in range(n):
        acc = group_add(acc, g)
    return acc


def group_join(g: GroupElt, h: GroupElt) -> GroupElt:
    """[a,b] v [c,d] = [(a+d) v (b+c), b+d]."""
    return GroupElt(gs_join(gs_add(g.pos, h.neg), gs_add(g.neg, h.pos)), gs_add(g.neg, h.neg))


def group_meet(g: GroupElt, h: GroupElt) -> GroupElt:
    """[a,b] ^ [c,d] = [(a+d) ^ (b+c), b+d]."""
    return GroupElt(gs_meet(gs_add(g.pos, h.neg), gs_add(g.neg, h.pos)), gs_add(g.neg, h.neg))


def positive_part(g: GroupElt) -> GroupElt:
    """g v 0 = [a v b, b]."""
    return GroupElt(gs_join(g.pos, g.neg), g.neg)


def support(g: GroupElt) -> int:
    return max(len(g.pos), len(g.neg))


# -- MV-centre decomposition --------------------------------------------------------
def in_S_L(g: GroupElt) -> bool:
    """Membership in the summand of classes whose sides double-negate alike."""
    return dneg_seq(g.pos) == dneg_seq(g.neg)


def in_mv_image(g: GroupElt) -> bool:
    """Both sides consist of MV-centre elements (image of G_{MV(L)})."""
    A = g.algebra
    return all(A._dneg(x) == x for x in g.pos.entries + g.neg.entries)


def theta_decompose(g: GroupElt):
    """Split g into (MV-centre part, S(L) part), both as elements of G_L.

    mv = [~~a, ~~b];  s = [a + ~~b, b + ~~a];  g ~ mv + s.
    """
    a, b = g.pos, g.neg
    da, db = dneg_seq(a), dneg_seq(b)
    return GroupElt(da, db), GroupElt(gs_add(a, db), gs_add(b, da))


def to_mv_center(g: GroupElt, center: Algebra = None) -> GroupElt:
    """Re-tag an element with MV-centre entries as an element of G_{MV(L)}."""
    if not in_mv_image(g):
        raise DomainError(f"{g} has entries outside the MV-centre")
    M = center or mv_center(g.algebra)
    return GroupElt(GoodSeq._raw(M, g.pos.entries), GoodSeq._raw(M, g.neg.entries))


# -- chains -----------------------------------------------------------------------------
def chain_canonical(g: GroupElt):
    """(p, a, q, b) with g = [(1^p, a), (1^q, b)] and a, b nonzero."""
    A = g.algebra
    if not A.is_chain:
        raise UnsupportedShapeError(f"{A.name} is not a chain")
    pos, neg = g.pos, g.neg
    chain_normal_form(pos)
    chain_normal_form(neg)
    if pos.is_zero():
        # [(0), b] = [(1), (1, b)]
        pos, neg = units(A, 1), GoodSeq._raw(A, (A.top,) + neg.entries)
    elif neg.is_zero():
        pos, neg = GoodSeq._raw(A, (A.top,) + pos.entries), units(A, 1)
    return len(pos) - 1, pos.entries[-1], len(neg) - 1, neg.entries[-1]


def canonical_elt(g: GroupElt) -> GroupElt:
    A = g.algebra
    p, a, q, b = chain_canonical(g)
    return GroupElt(GoodSeq._raw(A, (A.top,) * p + (a,)), GoodSeq._raw(A, (A.top,) * q + (b,)))


def format_canonical(g: GroupElt) -> str:
    return str(canonical_elt(g))


def godel_to_int(g: GroupElt) -> int:
    """The isomorphism of G_L onto Z for a Goedel chain: p - q."""
    A = g.algebra
    if not (A.is_chain and is_godel(A)):
        raise UnsupportedShapeError(f"{A.name} is not a Goedel chain")
    p, _, q, _ = chain_canonical(g)
    return p - q


def product_iso(g: GroupElt):
    """(p - q, a / b) in Z x_lex Q+ for the rational product chain."""
    A = g.algebra
    if not is_product_chain(A):
        raise UnsupportedShapeError(f"{A.name} is not the product chain")
    p, a, q, b = chain_canonical(g)
    return p - q, Fraction(a) / Fraction(b)


def product_iso_inverse(A: Algebra, m: int, r) -> GroupElt:
    r = Fraction(r)
    if r <= 0:
        raise DomainError("second coordinate must be a positive rational")
    a, b = (r, Fraction(1)) if r <= 1 else (Fraction(1), 1 / r)
    one = A.top
    if m >= 0:
        return GroupElt(GoodSeq._raw(A, (one,) * m + (a,)), GoodSeq._raw(A, (b,)))
    return GroupElt(GoodSeq._raw(A, (a,)), GoodSeq._raw(A, (one,) * (-m) + (b,)))


def lex_leq(x, y) -> bool:
    return x[0] < y[0] or (x[0] == y[0] and x[1] <= y[1])


def format_phi(v) -> str:
    m, r = v
    r = Fraction(r)
    return f"φ=({m}, {r.numerator}/{r.denominator})"


# -- the o-group of a product chain ---------------------------------------------------
class HGroup:
    """Pairs [a, b] of nonzero elements of a product chain.

    [x,y] = [a,b] iff x*b = a*y;  [a,b] + [c,d] = [a*c, b*d];
    [a,b] <= [c,d] iff a*d <= b*c.
    """

    def __init__(self, A: Algebra):
        if not is_product_chain(A):
            raise UnsupportedShapeError(f"{A.name} is not a product chain")
        self.algebra = A

    def make(self, a, b):
        A = self.algebra
        a, b = A.elt(a), A.elt(b)
        if a == A.bottom or b == A.bottom:
            raise DomainError("entries of the o-group of a product chain must be nonzero")
        return (a, b)

    def zero(self):
        return (self.algebra.top, self.algebra.top)

    def add(self, x, y):
        m = self.algebra._mul
        return (m(x[0], y[0]), m(x[1], y[1]))

    def neg(self, x):
        return (x[1], x[0])

    def eq(self, x, y) -> bool:
        m = self.algebra._mul
        return m(x[0], y[1]) == m(y[0], x[1])

    def leq(self, x, y) -> bool:
        A = self.algebra
        return A._leq(A._mul(x[0], y[1]), A._mul(x[1], y[0]))

    def to_S(self, x) -> GroupElt:
        A = self.algebra
        return GroupElt(GoodSeq._raw(A, (x[0],)), GoodSeq._raw(A, (x[1],)))
