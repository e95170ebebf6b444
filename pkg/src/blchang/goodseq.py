"""Good sequences over a BL-algebra and their monoid/lattice structure.

A good sequence is stored trimmed: trailing zeros are dropped, so the
zero sequence ``(0)`` has no entries.  Leading units are kept; over a
chain every good sequence reads ``(1^p, a)``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .algebra import Algebra, DirectProduct, Subalgebra, split_top_level
from .errors import DomainError, ParseError, UnsupportedShapeError


class NotGoodError(DomainError):
    pass


def _trim(A: Algebra, entries) -> tuple:
    entries = list(entries)
    while entries and entries[-1] == A.bottom:
        entries.pop()
    return tuple(entries)


def _is_good_raw(A: Algebra, entries) -> bool:
    for x, y in zip(entries, entries[1:]):
        if A._add(x, y) != x:
            return False
    return True


def is_good(A: Algebra, seq) -> bool:
    """``a_i + a_{i+1} = a_i`` for every i (positions past the end are 0)."""
    seq = list(seq)
    A.check(*seq)
    return _is_good_raw(A, seq)


@dataclass(frozen=True)
class GoodSeq:
    algebra: Algebra
    entries: tuple

    @classmethod
    def of(cls, A: Algebra, entries=()) -> "GoodSeq":
        entries = [A.elt(e) for e in entries]
        if not _is_good_raw(A, entries):
            raise NotGoodError(f"({', '.join(A.fmt(e) for e in entries)}) is not a good sequence in {A.name}")
        return cls(A, _trim(A, entries))

    @classmethod
    def _raw(cls, A, entries) -> "GoodSeq":
        return cls(A, _trim(A, entries))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        """1-based access with zeros past the support, matching a_1, a_2, ..."""
        if i < 1:
            raise IndexError(i)
        return self.entries[i - 1] if i <= len(self.entries) else self.algebra.bottom

    def __add__(self, other):
        return gs_add(self, other)

    def is_zero(self) -> bool:
        return not self.entries

    def __str__(self):
        return format_goodseq(self)


def zero_seq(A: Algebra) -> GoodSeq:
    return GoodSeq(A, ())


def units(A: Algebra, m: int) -> GoodSeq:
    """The sequence (1^m)."""
    return GoodSeq(A, (A.top,) * m)


def _same(a: GoodSeq, b: GoodSeq):
    if a.algebra is not b.algebra:
        raise DomainError(f"good sequences over different algebras ({a.algebra.name} vs {b.algebra.name})")
    return a.algebra


# -- addition ---------------------------------------------------------------
def gs_add_convolution(a: GoodSeq, b: GoodSeq) -> GoodSeq:
    """c_i = a_i + (a_{i-1} * b_1) + ... + (a_1 * b_{i-1}) + b_i."""
    A = _same(a, b)
    add, mul, zero, one = A._add, A._mul, A.bottom, A.top
    n, m = len(a.entries), len(b.entries)
    out = []
    for i in range(1, n + m + 1):
        acc = a[i]
        for j in range(1, i):
            if acc == one:
                break
            if i - j > n or j > m:
                continue
            t = mul(a.entries[i - j - 1], b.entries[j - 1])
            if t != zero:
                acc = add(acc, t)
        if acc != one:
            acc = add(acc, b[i])
        out.append(acc)
    return GoodSeq._raw(A, out)


def chain_normal_form(a: GoodSeq):
    """Return (p, tail) with a = (1^p, tail); tail is 0 when a = (1^p)."""
    A = a.algebra
    if not A.is_chain:
        raise UnsupportedShapeError(f"{A.name} is not a chain")
    p = 0
    for e in a.entries:
        if e != A.top:
            break
        p += 1
    if p < len(a.entries) - 1:
        raise NotGoodError(f"{a} is not of the form (1^p, a)")
    tail = a.entries[p] if p < len(a.entries) else A.bottom
    return p, tail


def from_normal_form(A: Algebra, p: int, tail) -> GoodSeq:
    return GoodSeq._raw(A, (A.top,) * p + (tail,))


def gs_add_chain(a: GoodSeq, b: GoodSeq) -> GoodSeq:
    """(1^p, a) + (1^q, b) = (1^(p+q), a+b, a*b) over a chain."""
    A = _same(a, b)
    p, x = chain_normal_form(a)
    q, y = chain_normal_form(b)
    return GoodSeq._raw(A, (A.top,) * (p + q) + (A._add(x, y), A._mul(x, y)))


def gs_add(a: GoodSeq, b: GoodSeq) -> GoodSeq:
    A = _same(a, b)
    if not a.entries:
        return b
    if not b.entries:
        return a
    if A.is_chain:
        return gs_add_chain(a, b)
    return gs_add_convolution(a, b)


def gs_sum(seqs, A: Algebra) -> GoodSeq:
    acc = zero_seq(A)
    for s in seqs:
        acc = gs_add(acc, s)
    return acc


# -- lattice ----------------------------------------------------------------
def _pad(a: GoodSeq, n: int):
    return a.entries + (a.algebra.bottom,) * (n - len(a.entries))


def gs_join(a: GoodSeq, b: GoodSeq) -> GoodSeq:
    A = _same(a, b)
    n = max(len(a), len(b))
    return GoodSeq._raw(A, [A._join(x, y) for x, y in zip(_pad(a, n), _pad(b, n))])


def gs_meet(a: GoodSeq, b: GoodSeq) -> GoodSeq:
    A = _same(a, b)
    n = max(len(a), len(b))
    return GoodSeq._raw(A, [A._meet(x, y) for x, y in zip(_pad(a, n), _pad(b, n))])


def gs_leq(a: GoodSeq, b: GoodSeq) -> bool:
    A = _same(a, b)
    n = max(len(a), len(b))
    return all(A._leq(x, y) for x, y in zip(_pad(a, n), _pad(b, n)))


# -- structure maps ---------------------------------------------------------
def dneg_seq(a: GoodSeq, target: Algebra = None) -> GoodSeq:
    """Entrywise double negation; good again because + commutes with it."""
    A = a.algebra
    return GoodSeq._raw(target or A, [A._dneg(x) for x in a.entries])


def map_seq(a: GoodSeq, f, target: Algebra) -> GoodSeq:
    return GoodSeq._raw(target, [f(x) for x in a.entries])


def project_goodseq(a: GoodSeq, i: int) -> GoodSeq:
    """Coordinate ``i`` of a good sequence over a (sub)direct product."""
    A = a.algebra
    P = A.parent if isinstance(A, Subalgebra) else A
    if not isinstance(P, DirectProduct):
        raise UnsupportedShapeError(f"{A.name} is not a product")
    if not 0 <= i < len(P.factors):
        raise IndexError(f"factor index {i} out of range for {P.name}")
    return GoodSeq._raw(P.factors[i], [x[i] for x in a.entries])


def combine_projections(P: DirectProduct, seqs) -> GoodSeq:
    """Inverse of projection: zip factor sequences into a product sequence."""
    n = max((len(s) for s in seqs), default=0)
    cols = [_pad(s, n) for s in seqs]
    return GoodSeq._raw(P, list(zip(*cols)))


# -- enumeration / sampling -------------------------------------------------
_ENUM_CACHE: dict = {}


def enumerate_good_seqs(A: Algebra, max_len: int, first_not_top: bool = False, values=None) -> list:
    """All good sequences of length <= ``max_len`` in deterministic order.

    ``values`` restricts the entries (defaults to the whole finite carrier).
    """
    cache_key = (id(A), max_len, first_not_top, None if values is None else tuple(values))
    hit = _ENUM_CACHE.get(cache_key)
    if hit is not None and hit[0] is A:
        return hit[1]
    vals = list(values) if values is not None else list(A.elements())
    nonzero = [v for v in vals if v != A.bottom]
    succ = {x: [y for y in nonzero if A._add(x, y) == x] for x in nonzero}
    out = [zero_seq(A)]

    def extend(prefix):
        out.append(GoodSeq(A, tuple(prefix)))
        if len(prefix) < max_len:
            for y in succ[prefix[-1]]:
                prefix.append(y)
                extend(prefix)
                prefix.pop()

    if max_len >= 1:
        for x in nonzero:
            if first_not_top and x == A.top:
                continue
            extend([x])
    _ENUM_CACHE[cache_key] = (A, out)
    return out


def random_good_seq(A: Algebra, rng: random.Random, max_len: int = 6) -> GoodSeq:
    """A seeded random good sequence with support at most ``max_len``."""
    if isinstance(A, DirectProduct) and all(f.is_chain for f in A.factors):
        parts = [random_good_seq(f, rng, max_len) for f in A.factors]
        return combine_projections(A, parts)
    if A.is_chain:
        length = rng.randint(0, max_len)
        if length == 0:
            return zero_seq(A)
        tail = A.sample(rng)
        return GoodSeq._raw(A, (A.top,) * (length - 1) + (tail,))
    if not A.is_finite:
        raise UnsupportedShapeError(f"cannot sample good sequences over {A.name}")
    length = rng.randint(0, max_len)
    entries = []
    nonzero = [x for x in A.elements() if x != A.bottom]
    while len(entries) < length:
        pool = nonzero if not entries else [y for y in nonzero if A._add(entries[-1], y) == entries[-1]]
        if not pool:
            break
        entries.append(rng.choice(pool))
    return GoodSeq._raw(A, entries)


# -- text ---------------------------------------------------------------------
def format_goodseq(a: GoodSeq) -> str:
    A = a.algebra
    if not a.entries:
        return "(0)"
    parts = []
    p = 0
    for e in a.entries:
        if e != A.top:
            break
        p += 1
    if p >= 2:
        parts.append(f"{A.fmt(A.top)}^{p}")
    else:
        parts.extend(A.fmt(A.top) for _ in range(p))
    parts.extend(A.fmt(e) for e in a.entries[p:])
    return "(" + ",".join(parts) + ")"


_RUN = re.compile(r"^(.+)\^(\d+)$")


def parse_goodseq(A: Algebra, text: str) -> GoodSeq:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"good sequence {text!r} must be parenthesised")
    body = text[1:-1].strip()
    entries = []
    if body:
        for tok in split_top_level(body):
            m = _RUN.match(tok.replace(" ", ""))
            if m:
                head = m.group(1)
                if head not in ("1", A.fmt(A.top).replace(" ", "")):
                    raise ParseError(f"run sugar {tok!r} must repeat the top element")
                entries.extend([A.top] * int(m.group(2)))
            else:
                entries.append(A.elt(tok))
    return GoodSeq.of(A, entries)
