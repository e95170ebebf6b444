"""Unital l-groups, the interval functor Gamma, and the maps linking it to G_L.

Groups are written additively whatever their concrete operation: for
``Qpos`` the "sum" is the rational product and the "zero" is 1.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import Algebra, fmt_rational, mv_center, split_top_level
from .chang import (ChainSearch, Decision, GroupElt, class_eq, group_add, group_join,
                    group_leq, group_meet, group_neg, group_zero, product_iso, strong_unit)
from .errors import (CapacityError, ConstructionError, DomainError, MorphismError, ParseError,
                     StrategyError)
from .goodseq import GoodSeq, map_seq, random_good_seq


class LGroup:
    """A lattice-ordered abelian group with a designated strong unit."""

    name = "lgroup"
    unit = None
    is_total = False
    is_discrete = False

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def join(self, a, b):
        raise NotImplementedError

    def meet(self, a, b):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def parse_val(self, text: str):
        raise NotImplementedError

    def key(self, a):
        return a

    def eq(self, a, b) -> bool:
        return a == b

    def interval(self, lo, hi) -> list:
        raise ConstructionError(f"{self.name} has no enumerable intervals")

    # derived
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, n: int):
        if n < 0:
            return self.scale(self.neg(a), -n)
        acc = self.zero()
        for _ in range(n):
            acc = self.add(acc, a)
        return acc

    def pos(self, a):
        """a+ = a v 0."""
        return self.join(a, self.zero())

    def negpart(self, a):
        """a- = -a v 0."""
        return self.join(self.neg(a), self.zero())

    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise DomainError(f"{x!r} is not an element of {self.name}")

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class Integers(LGroup):
    is_total = True
    is_discrete = True

    def __init__(self, u: int = 1):
        if not isinstance(u, int) or u < 1:
            raise ConstructionError("the unit of Z must be a positive integer")
        self.unit = u
        self.name = f"Z(u={u})"

    def zero(self):
        return 0

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def leq(self, a, b):
        return a <= b

    def join(self, a, b):
        return max(a, b)

    def meet(self, a, b):
        return min(a, b)

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool)

    def sample(self, rng):
        return rng.randint(-2 * self.unit, 3 * self.unit)

    def parse_val(self, text):
        try:
            return int(text.strip())
        except ValueError as exc:
            raise DomainError(f"{text!r} is not an integer") from exc

    def interval(self, lo, hi):
        return list(range(lo, hi + 1))

    def __eq__(self, other):
        return isinstance(other, Integers) and other.unit == self.unit

    def __hash__(self):
        return hash(("Z", self.unit))


class PosRationals(LGroup):
    """(Q+, *) with the usual order; positive cone is [1, oo)."""

    is_total = True

    def __init__(self, u=Fraction(2), denominator_cap: int = 12):
        u = Fraction(u)
        if u <= 1:
            raise ConstructionError("a strong unit of Qpos must exceed 1")
        self.unit = u
        self.denominator_cap = denominator_cap
        self.name = "Qpos" if u == 2 else f"Qpos(u={fmt_rational(u)})"

    def zero(self):
        return Fraction(1)

    def add(self, a, b):
        return a * b

    def neg(self, a):
        return 1 / Fraction(a)

    def leq(self, a, b):
        return a <= b

    def join(self, a, b):
        return max(a, b)

    def meet(self, a, b):
        return min(a, b)

    def contains(self, a):
        return isinstance(a, (int, Fraction)) and not isinstance(a, bool) and a > 0

    def sample(self, rng):
        c = self.denominator_cap
        return Fraction(rng.randint(1, c), rng.randint(1, c))

    def fmt(self, a):
        return fmt_rational(a)

    def parse_val(self, text):
        try:
            v = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"{text!r} is not a rational") from exc
        if v <= 0:
            raise DomainError(f"{text!r} is not positive")
        return v

    def __eq__(self, other):
        return isinstance(other, PosRationals) and other.unit == self.unit

    def __hash__(self):
        return hash(("Qpos", self.unit))


class _Pairing(LGroup):
    factors: tuple

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == len(self.factors)
                and all(f.contains(x) for f, x in zip(self.factors, a)))

    def sample(self, rng):
        return tuple(f.sample(rng) for f in self.factors)

    def fmt(self, a):
        return "(" + ",".join(f.fmt(x) for f, x in zip(self.factors, a)) + ")"

    def parse_val(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise DomainError(f"{text!r} must be a parenthesised tuple")
        parts = split_top_level(text[1:-1])
        if len(parts) != len(self.factors):
            raise DomainError(f"expected {len(self.factors)} coordinates in {text!r}")
        return tuple(f.parse_val(p) for f, p in zip(self.factors, parts))

    def key(self, a):
        return tuple(f.key(x) for f, x in zip(self.factors, a))

    def __eq__(self, other):
        return type(other) is type(self) and other.factors == self.factors

    def __hash__(self):
        return hash((type(self).__name__, self.factors))


class ProductGroup(_Pairing):
    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ConstructionError("empty product of groups")
        self.factors = factors
        self.unit = tuple(f.unit for f in factors)
        self.is_total = len(factors) == 1 and factors[0].is_total
        self.is_discrete = all(f.is_discrete for f in factors)
        self.name = "prod(" + ", ".join(f.name for f in factors) + ")"

    def leq(self, a, b):
        return all(f.leq(x, y) for f, x, y in zip(self.factors, a, b))

    def join(self, a, b):
        return tuple(f.join(x, y) for f, x, y in zip(self.factors, a, b))

    def meet(self, a, b):
        return tuple(f.meet(x, y) for f, x, y in zip(self.factors, a, b))

    def interval(self, lo, hi):
        return list(itertools.product(*(f.interval(x, y) for f, x, y in zip(self.factors, lo, hi))))


class LexGroup(_Pairing):
    """first x_lex second with unit (u_first, 0); both factors must be o-groups."""

    is_total = True

    def __init__(self, first: LGroup, second: LGroup):
        for f in (first, second):
            if not isinstance(f, (Integers, PosRationals)):
                raise ConstructionError(
                    f"lexicographic factors must be Z or Qpos (got {f.name}); nesting is limited to depth 2")
        self.factors = (first, second)
        self.first, self.second = first, second
        self.unit = (first.unit, second.zero())
        self.name = f"lex({first.name}, {second.name})"

    def leq(self, a, b):
        f, s = self.first, self.second
        if a[0] != b[0]:
            return f.leq(a[0], b[0])
        return s.leq(a[1], b[1])

    def join(self, a, b):
        return b if self.leq(a, b) else a

    def meet(self, a, b):
        return a if self.leq(a, b) else b

    def sample(self, rng):
        return (rng.randint(-2, 3) * self.first.unit if isinstance(self.first, Integers)
                else self.first.sample(rng), self.second.sample(rng))


# -- descriptor syntax ------------------------------------------------------------
_CALL = re.compile(r"^(\w+)\s*(?:\((.*)\))?$", re.S)


def parse_group(text: str) -> LGroup:
    """``Z``, ``Z(u=3)``, ``Qpos``, ``Qpos(u=3/2)``, ``lex(A, B)``, ``prod(A, B, ...)``."""
    text = text.strip()
    m = _CALL.match(text)
    if not m:
        raise ParseError(f"cannot read group descriptor {text!r}")
    head, body = m.group(1), m.group(2)
    args = [a for a in split_top_level(body)] if body is not None and body.strip() else []
    if head in ("Z", "Qpos"):
        kw = {}
        for a in args:
            k, eq, v = a.partition("=")
            if not eq or k.strip() != "u":
                raise ParseError(f"unexpected argument {a!r} in {text!r}")
            kw["u"] = v.strip()
        try:
            if head == "Z":
                return Integers(int(kw.get("u", "1")))
            return PosRationals(Fraction(kw["u"])) if "u" in kw else PosRationals()
        except (ValueError, ZeroDivisionError, ConstructionError) as exc:
            raise ParseError(f"bad unit in {text!r}: {exc}") from exc
    if head in ("lex", "prod"):
        subs = [parse_group(a) for a in args]
        if head == "lex":
            if len(subs) != 2:
                raise ParseError("lex takes exactly two factors")
            try:
                return LexGroup(*subs)
            except ConstructionError as exc:
                raise ParseError(str(exc)) from exc
        if not subs:
            raise ParseError("prod needs at least one factor")
        return ProductGroup(subs)
    raise ParseError(f"unknown group {head!r}")


# -- Gamma --------------------------------------------------------------------------
def gamma_mul(G: LGroup, x, y):
    """u - ((2u - x - y) ^ u)."""
    u = G.unit
    return G.sub(u, G.meet(G.sub(G.add(u, u), G.add(x, y)), u))


def gamma_imp(G: LGroup, x, y):
    """(u - x + y) ^ u."""
    u = G.unit
    return G.meet(G.add(G.sub(u, x), y), u)


class UnitInterval(Algebra):
    """[0, u] of a unital l-group with

    x * y = u - ((2u - x - y) ^ u),   x -> y = (u - x + y) ^ u.
    """

    known_mv = True

    def __init__(self, G: LGroup):
        super().__init__()
        self.group = G
        self.top = G.unit
        self.bottom = G.zero()
        self.name = f"Gamma({G.name})"
        self._elements = None
        self._enable_memo()

    @property
    def is_finite(self):
        return self.group.is_discrete

    @property
    def is_chain(self):
        return self.group.is_total

    def elements(self):
        if not self.is_finite:
            return super().elements()
        if self._elements is None:
            self._elements = tuple(sorted(self.group.interval(self.bottom, self.top), key=self.group.key))
        return self._elements

    def contains(self, x):
        G = self.group
        return G.contains(x) and G.leq(self.bottom, x) and G.leq(x, self.top)

    def sample(self, rng):
        r = rng.random()
        if r < 0.08:
            return self.bottom
        if r < 0.16:
            return self.top
        G = self.group
        return G.meet(G.join(G.sample(rng), self.bottom), self.top)

    def key(self, x):
        return self.group.key(x)

    def fmt(self, x):
        return self.group.fmt(x)

    def parse_elt(self, text):
        return self.group.parse_val(text)

    def _mul(self, x, y):
        return gamma_mul(self.group, x, y)

    def _imp(self, x, y):
        return gamma_imp(self.group, x, y)

    def _leq(self, x, y):
        return self.group.leq(x, y)

    def _meet(self, x, y):
        return self.group.meet(x, y)

    def _join(self, x, y):
        return self.group.join(x, y)

    def _neg(self, x):
        return self.group.sub(self.top, x)

    def _add(self, x, y):
        # truncated sum; equals (x (/) y) ^ (y (/) x) in any MV-algebra
        return self.group.meet(self.group.add(x, y), self.top)


_GAMMA_CACHE: dict = {}


def gamma_interval(G: LGroup) -> UnitInterval:
    """Gamma(G, u); one shared instance per group so elements can be compared."""
    hit = _GAMMA_CACHE.get(G)
    if hit is None:
        hit = _GAMMA_CACHE[G] = UnitInterval(G)
    return hit


def good_seq_of_positive(G: LGroup, a, gamma: Optional[UnitInterval] = None, max_steps: int = 100_000) -> GoodSeq:
    """The good sequence (a_1, ..., a_n) over Gamma(G) summing to ``a`` >= 0.

    Greedy: a_1 = a ^ u, then recurse on a - a_1.
    """
    G.check(a)
    if not G.leq(G.zero(), a):
        raise DomainError(f"{G.fmt(a)} is not in the positive cone of {G.name}")
    gamma = gamma or gamma_interval(G)
    out = []
    zero = G.zero()
    while not G.eq(a, zero):
        if len(out) >= max_steps:
            raise CapacityError(f"decomposition of {G.fmt(a)} exceeds {max_steps} terms")
        head = G.meet(a, G.unit)
        out.append(head)
        a = G.sub(a, head)
    return GoodSeq._raw(gamma, out)


def seq_total(G: LGroup, seq: GoodSeq):
    acc = G.zero()
    for e in seq.entries:
        acc = G.add(acc, e)
    return acc


def psi(G: LGroup, a, gamma: Optional[UnitInterval] = None) -> GroupElt:
    """a |-> [g(a+), g(a-)] in G_{Gamma(G)}."""
    gamma = gamma or gamma_interval(G)
    return GroupElt(good_seq_of_positive(G, G.pos(a), gamma), good_seq_of_positive(G, G.negpart(a), gamma))


def psi_inverse(G: LGroup, g: GroupElt):
    """Sum the entries of each side in G and subtract."""
    return G.sub(seq_total(G, g.pos), seq_total(G, g.neg))


def eta(L: Algebra, a) -> GroupElt:
    """a |-> [(~~a), (0)]."""
    L.check(a)
    return GroupElt(GoodSeq._raw(L, (L._dneg(a),)), GoodSeq._raw(L, ()))


# -- BL-morphisms -------------------------------------------------------------------
@dataclass
class MorphismCheck:
    ok: bool
    exhaustive: bool
    cases: int
    seed: Optional[int] = None
    witness: Optional[tuple] = None
    reason: str = ""


def check_morphism(dom: Algebra, cod: Algebra, fn: Callable, samples: int = 1000, seed: int = 0) -> MorphismCheck:
    """Does ``fn`` preserve 0, 1, * and ->?  Exhaustive on finite domains."""
    exhaustive = dom.is_finite
    if exhaustive:
        pts = dom.elements()
        pairs = itertools.product(pts, repeat=2)
    else:
        rng = random.Random(seed)
        pts = [dom.sample(rng) for _ in range(samples)]
        pairs = ((pts[i], pts[(i * 7 + 3) % len(pts)]) for i in range(len(pts)))

    def fail(reason, witness):
        return MorphismCheck(False, exhaustive, cases, None if exhaustive else seed, witness, reason)

    cases = 0
    image = {}

    def f(x):
        if x not in image:
            y = fn(x)
            if not cod.contains(y):
                raise DomainError(f"image of {dom.fmt(x)} is {y!r}, outside {cod.name}")
            image[x] = y
        return image[x]

    try:
        if f(dom.bottom) != cod.bottom:
            return fail("0 is not preserved", (dom.bottom,))
        if f(dom.top) != cod.top:
            return fail("1 is not preserved", (dom.top,))
        for x, y in pairs:
            cases += 1
            if f(dom._mul(x, y)) != cod._mul(f(x), f(y)):
                return fail("otimes is not preserved", (x, y))
            if f(dom._imp(x, y)) != cod._imp(f(x), f(y)):
                return fail("imp is not preserved", (x, y))
    except DomainError as exc:
        return fail(str(exc), None)
    return MorphismCheck(True, exhaustive, cases, None if exhaustive else seed)


class Morphism:
    """A BL-morphism, validated when built (raises MorphismError otherwise)."""

    def __init__(self, domain: Algebra, codomain: Algebra, mapping, name: str = "f",
                 samples: int = 1000, seed: int = 0, _check: bool = True):
        self.domain, self.codomain, self.name = domain, codomain, name
        if isinstance(mapping, dict):
            table = dict(mapping)
            if domain.is_finite:
                missing = [x for x in domain.elements() if x not in table]
                if missing:
                    raise MorphismError(f"table for {name} misses {domain.fmt(missing[0])}", (missing[0],))
            self._fn = table.__getitem__
            self._table = table
        else:
            self._fn = mapping
            self._table = None
        self.certificate: Optional[MorphismCheck] = None
        self.validated = False
        if _check:
            cert = check_morphism(domain, codomain, self._fn, samples, seed)
            if not cert.ok:
                w = "" if cert.witness is None else " at " + ", ".join(domain.fmt(x) for x in cert.witness)
                raise MorphismError(f"{name}: {cert.reason}{w}", cert.witness)
            self.certificate = cert
            self.validated = True

    @classmethod
    def unchecked(cls, domain, codomain, mapping, name="f") -> "Morphism":
        return cls(domain, codomain, mapping, name=name, _check=False)

    def __call__(self, x):
        return self._fn(x)

    def table(self) -> tuple:
        return tuple(self._fn(x) for x in self.domain.elements())

    def format(self) -> str:
        D, C = self.domain, self.codomain
        return ", ".join(f"{D.fmt(x)}->{C.fmt(self._fn(x))}" for x in D.elements())

    def __repr__(self):
        return f"<Morphism {self.name}: {self.domain.name} -> {self.codomain.name}>"


def identity_morphism(A: Algebra) -> Morphism:
    return Morphism(A, A, lambda x: x, name="id")


def xi_map(f: Morphism, g: GroupElt) -> GroupElt:
    """[a, b] |-> [f(a), f(b)]."""
    if not f.validated:
        raise MorphismError(f"{f.name} has not been validated as a BL-morphism")
    if g.algebra is not f.domain:
        raise DomainError(f"{g} is not over the domain of {f.name}")
    C = f.codomain
    return GroupElt(map_seq(g.pos, f, C), map_seq(g.neg, f, C))


def enumerate_homs(A: Algebra, B: Algebra, cap: int = 16) -> list:
    """All BL-morphisms A -> B, ordered lexicographically by image table."""
    if not (A.is_finite and B.is_finite):
        raise CapacityError("hom enumeration needs finite algebras")
    if len(A.elements()) > cap or len(B.elements()) > cap:
        raise CapacityError(f"carriers exceed the enumeration cap of {cap} elements")
    dom = list(A.elements())
    targets = B.sorted(B.elements())
    order = [A.bottom, A.top] + [x for x in dom if x not in (A.bottom, A.top)]
    assign = {}

    def consistent(x):
        fx = assign[x]
        for y, fy in assign.items():
            for z, w in ((A._mul(x, y), B._mul(fx, fy)), (A._imp(x, y), B._imp(fx, fy)),
                         (A._imp(y, x), B._imp(fy, fx))):
                if z in assign and assign[z] != w:
                    return False
        return True

    found = []

    def search(k):
        if k == len(order):
            found.append(dict(assign))
            return
        x = order[k]
        choices = [B.bottom] if x == A.bottom else [B.top] if x == A.top else targets
        for v in choices:
            assign[x] = v
            if consistent(x):
                search(k + 1)
            del assign[x]

    search(0)
    homs = [Morphism(A, B, t, name=f"h{i}") for i, t in enumerate(found)]
    homs.sort(key=lambda h: [B.key(v) for v in h.table()])
    for i, h in enumerate(homs):
        h.name = f"h{i}"
    return homs


def collapse_annotations(f: Morphism) -> list:
    """For an MV domain: (a, forced value or None, actual image).

    2a <= u (a <= ~a) forces f(a) = 0 and u <= 2a forces f(a) = 1 when the
    codomain's MV-centre is {0, 1}.
    """
    A, B = f.domain, f.codomain
    out = []
    for a in A.elements():
        na = A._neg(a)
        forced = None
        if A._leq(a, na):
            forced = B.bottom
        elif A._leq(na, a):
            forced = B.top
        out.append((a, forced, f(a)))
    return out


def collapse_holds(f: Morphism) -> bool:
    return all(forced is None or forced == actual for _, forced, actual in collapse_annotations(f))


def extend_from_center(g: Morphism, L: Algebra) -> Morphism:
    """h(x) = g(~~x), the unique extension of g: MV(L) -> A to L."""
    return Morphism(L, g.codomain, lambda x: g(L._dneg(x)), name=f"{g.name}~")


def restrict_to_center(h: Morphism, center: Algebra = None) -> Morphism:
    M = center or mv_center(h.domain)
    return Morphism(M, h.codomain, lambda x: h(x), name=f"{h.name}|MV")


# -- l-groups built from Chang groups, and l-morphisms ---------------------------------
class ChangGroup(LGroup):
    """G_L as an LGroup; equality and order go through a decision strategy."""

    def __init__(self, L: Algebra, strategy=ChainSearch(), max_len: int = 4):
        self.algebra = L
        self.strategy = strategy
        self.max_len = max_len
        self.unit = strong_unit(L)
        self.is_total = L.is_chain
        self.name = f"G({L.name})"

    def zero(self):
        return group_zero(self.algebra)

    def add(self, a, b):
        return group_add(a, b)

    def neg(self, a):
        return group_neg(a)

    def join(self, a, b):
        return group_join(a, b)

    def meet(self, a, b):
        return group_meet(a, b)

    def _must(self, d: Decision, what: str) -> bool:
        if d is Decision.UNKNOWN:
            raise StrategyError(f"{what} is undecided under {self.strategy}")
        return d is Decision.YES

    def leq(self, a, b):
        return self._must(group_leq(a, b, self.strategy), "order")

    def eq(self, a, b):
        return self._must(class_eq(a, b, self.strategy), "class equality")

    def contains(self, a):
        return isinstance(a, GroupElt) and a.algebra is self.algebra

    def sample(self, rng):
        L = self.algebra
        return GroupElt(random_good_seq(L, rng, self.max_len), random_good_seq(L, rng, self.max_len))

    def variant(self, a: GroupElt, rng) -> GroupElt:
        """Another representative of the same class: [a + k, b + k]."""
        k = random_good_seq(self.algebra, rng, self.max_len)
        return GroupElt(a.pos + k, a.neg + k)

    def fmt(self, a):
        return str(a)


@dataclass
class LMorphismCheck:
    ok: bool
    cases: int
    seed: int
    witness: Optional[tuple] = None
    reason: str = ""


def check_lmorphism(dom: LGroup, cod: LGroup, fn: Callable, samples: int = 200, seed: int = 0) -> LMorphismCheck:
    """Sampled check of additivity, unit, join/meet preservation and class invariance."""
    rng = random.Random(seed)
    if not cod.eq(fn(dom.unit), cod.unit):
        return LMorphismCheck(False, 0, seed, (dom.unit,), "unit is not preserved")
    if not cod.eq(fn(dom.zero()), cod.zero()):
        return LMorphismCheck(False, 0, seed, (dom.zero(),), "zero is not preserved")
    for n in range(1, samples + 1):
        a, b = dom.sample(rng), dom.sample(rng)
        fa, fb = fn(a), fn(b)
        if not cod.eq(fn(dom.add(a, b)), cod.add(fa, fb)):
            return LMorphismCheck(False, n, seed, (a, b), "sum is not preserved")
        if not cod.eq(fn(dom.join(a, b)), cod.join(fa, fb)):
            return LMorphismCheck(False, n, seed, (a, b), "join is not preserved")
        if not cod.eq(fn(dom.meet(a, b)), cod.meet(fa, fb)):
            return LMorphismCheck(False, n, seed, (a, b), "meet is not preserved")
        if isinstance(dom, ChangGroup) and not cod.eq(fn(dom.variant(a, rng)), fa):
            return LMorphismCheck(False, n, seed, (a,), "not constant on a class")
    return LMorphismCheck(True, samples, seed)


class LMorphism:
    """A unital l-group morphism with a sampled validation certificate."""

    def __init__(self, domain: LGroup, codomain: LGroup, fn: Callable, name: str = "phi",
                 samples: int = 200, seed: int = 0):
        self.domain, self.codomain, self.fn, self.name = domain, codomain, fn, name
        cert = check_lmorphism(domain, codomain, fn, samples, seed)
        if not cert.ok:
            raise MorphismError(f"{name}: {cert.reason}", cert.witness)
        self.certificate = cert

    def __call__(self, a):
        return self.fn(a)


def lex_z_qpos() -> LexGroup:
    """Z x_lex Qpos with unit (1, 1)."""
    return LexGroup(Integers(1), PosRationals())


def product_chain_lmorphisms(L: Algebra, samples: int = 200, seed: int = 0):
    """Two distinct unital l-morphisms G_L -> Z x_lex Qpos for the product chain L.

    ``phi`` is the isomorphism [(1^p,a),(1^q,b)] |-> (p - q, a/b); ``flat``
    follows it by (m, x) |-> (m, 1).
    """
    dom = ChangGroup(L)
    cod = lex_z_qpos()
    phi = LMorphism(dom, cod, product_iso, name="phi", samples=samples, seed=seed)
    flat = LMorphism(dom, cod, lambda g: (product_iso(g)[0], Fraction(1)), name="flat",
                     samples=samples, seed=seed)
    return phi, flat


def gamma_to_product_chain(G: LexGroup, L: Algebra, samples: int = 1000, seed: int = 0) -> Morphism:
    """Gamma(Z x_lex Qpos) -> L: 0 on {0} x [1, oo), 1 on {1} x (0, 1]."""
    A = gamma_interval(G)
    return Morphism(A, L, lambda x: L.bottom if x[0] == 0 else L.top, name="split",
                    samples=samples, seed=seed)


def center_collapse(L: Algebra, A: Algebra, samples: int = 1000, seed: int = 0) -> Morphism:
    """L -> A sending 0 to 0 and everything else to 1 (MV(L) = {0, 1})."""
    return Morphism(L, A, lambda x: A.bottom if x == L.bottom else A.top, name="collapse",
                    samples=samples, seed=seed)
