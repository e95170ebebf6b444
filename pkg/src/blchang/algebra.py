"""Concrete BL-algebras and their primitive and derived operations.

Five presentations are supported:

* ``FiniteTable``   -- Cayley tables for the monoid product and its residuum.
* ``StandardChain`` -- the Lukasiewicz, Goedel and product t-norms on exact
  rationals in [0, 1] (all of them, or a finite closed subset).
* ``OrdinalSum``    -- a tower of hoops glued along a shared top.
* ``DirectProduct`` -- componentwise structure.
* ``Subalgebra``    -- a closed subset of another algebra.

Element values are plain hashable Python objects (ints, ``Fraction`` s,
tuples).  Every public operation checks membership and raises
``DomainError`` for foreign values; the underscore-prefixed variants skip
the check and are what the rest of the library uses in inner loops.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import ConstructionError, DomainError, UnsupportedShapeError

ZERO = Fraction(0)
ONE = Fraction(1)

_CACHED_OPS = ("_mul", "_imp", "_add", "_meet", "_join")


def _memo2(fn):
    name = fn.__name__

    def wrapper(self, x, y):
        cache = self._caches.get(name)
        if cache is None:
            return fn(self, x, y)
        key = (x, y)
        try:
            return cache[key]
        except KeyError:
            value = cache[key] = fn(self, x, y)
            return value

    wrapper.__name__ = name
    wrapper.__doc__ = fn.__doc__
    return wrapper


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside of parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


class Algebra:
    """A bounded hoop (``bottom`` set) or a plain hoop (``bottom is None``).

    Subclasses provide ``_mul``, ``_imp``, membership, enumeration or
    sampling, and element formatting.  Everything else is derived:

    * ``x ^ y = x * (x -> y)``
    * ``x v y = ((x -> y) -> y) ^ ((y -> x) -> x)``
    * ``~x = x -> 0``, ``x (/) y = ~x -> y``, ``x + y = (x (/) y) ^ (y (/) x)``
    """

    name: str = "algebra"
    top = None
    bottom = None

    def __init__(self):
        self._caches = {}

    def _enable_memo(self):
        if self.is_finite:
            self._caches = {op: {} for op in _CACHED_OPS}

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    # -- structure hooks -------------------------------------------------
    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    @property
    def is_chain(self) -> bool:
        raise NotImplementedError

    def elements(self) -> tuple:
        raise UnsupportedShapeError(f"{self.name} has an infinite carrier")

    def contains(self, x) -> bool:
        raise NotImplementedError

    def sample(self, rng: random.Random):
        return rng.choice(self.elements())

    def key(self, x):
        return x

    def fmt(self, x) -> str:
        return str(x)

    def parse_elt(self, text: str):
        raise NotImplementedError

    def size(self) -> int:
        return len(self.elements())

    # -- raw operations --------------------------------------------------
    def _mul(self, x, y):
        raise NotImplementedError

    def _imp(self, x, y):
        raise NotImplementedError

    def _leq(self, x, y) -> bool:
        return self._imp(x, y) == self.top

    def _meet(self, x, y):
        return self._mul(x, self._imp(x, y))

    def _join(self, x, y):
        imp = self._imp
        return self._meet(imp(imp(x, y), y), imp(imp(y, x), x))

    def _neg(self, x):
        if self.bottom is None:
            raise UnsupportedShapeError(f"{self.name} is unbounded; negation is undefined")
        return self._imp(x, self.bottom)

    def _dneg(self, x):
        return self._neg(self._neg(x))

    def _padd(self, x, y):
        return self._imp(self._neg(x), y)

    def _add(self, x, y):
        return self._meet(self._padd(x, y), self._padd(y, x))

    # -- checked public API ----------------------------------------------
    def check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise DomainError(f"{x!r} is not an element of {self.name}")

    def otimes(self, x, y):
        self.check(x, y)
        return self._mul(x, y)

    def imp(self, x, y):
        self.check(x, y)
        return self._imp(x, y)

    def meet(self, x, y):
        self.check(x, y)
        return self._meet(x, y)

    def join(self, x, y):
        self.check(x, y)
        return self._join(x, y)

    def neg(self, x):
        self.check(x)
        return self._neg(x)

    def dneg(self, x):
        self.check(x)
        return self._dneg(x)

    def pseudo_add(self, x, y):
        self.check(x, y)
        return self._padd(x, y)

    def add(self, x, y):
        self.check(x, y)
        return self._add(x, y)

    def leq(self, x, y) -> bool:
        self.check(x, y)
        return self._leq(x, y)

    def elt(self, value):
        """Coerce ``value`` (possibly a label string) into an element."""
        if isinstance(value, str):
            value = self.parse_elt(value)
        self.check(value)
        return value

    # -- helpers ---------------------------------------------------------
    def sorted(self, xs: Iterable) -> list:
        return sorted(xs, key=self.key)

    def _check_chain_exhaustive(self) -> bool:
        els = self.elements()
        return all(self._leq(x, y) or self._leq(y, x) for x, y in itertools.combinations(els, 2))


# ---------------------------------------------------------------------------
class FiniteTable(Algebra):
    """An algebra given by explicit ``otimes`` and ``imp`` tables over indices.

    Only structural well-formedness is enforced here; algebraic laws are the
    business of :func:`validate_bl_axioms`, so corrupted tables can be built
    and diagnosed.
    """

    def __init__(self, names, bottom, top, otimes, imp, name="table"):
        super().__init__()
        names = list(names)
        n = len(names)
        if n == 0:
            raise ConstructionError("empty carrier")
        if len(set(names)) != n:
            raise ConstructionError("duplicate element labels")
        for label, table in (("otimes", otimes), ("imp", imp)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ConstructionError(f"{label} table is not {n}x{n}")
            for row in table:
                for v in row:
                    if not (isinstance(v, int) and 0 <= v < n):
                        raise ConstructionError(f"{label} table entry {v!r} out of range")
        if not (0 <= bottom < n and 0 <= top < n):
            raise ConstructionError("bottom/top index out of range")
        self.names = tuple(names)
        self.bottom = bottom
        self.top = top
        self.otimes_table = tuple(tuple(r) for r in otimes)
        self.imp_table = tuple(tuple(r) for r in imp)
        self.name = name
        self._index = {label: i for i, label in enumerate(names)}
        self._chain = None

    @property
    def is_finite(self):
        return True

    @property
    def is_chain(self):
        if self._chain is None:
            self._chain = self._check_chain_exhaustive()
        return self._chain

    def elements(self):
        return tuple(range(len(self.names)))

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < len(self.names)

    def fmt(self, x):
        return self.names[x]

    def parse_elt(self, text):
        text = text.strip()
        if text not in self._index:
            raise DomainError(f"unknown element label {text!r} in {self.name}")
        return self._index[text]

    def _mul(self, x, y):
        return self.otimes_table[x][y]

    def _imp(self, x, y):
        return self.imp_table[x][y]

    def mutated(self, op: str, i: int, j: int, value: int, name=None) -> "FiniteTable":
        """Copy with one table cell replaced (mutation testing)."""
        tables = {"otimes": [list(r) for r in self.otimes_table], "imp": [list(r) for r in self.imp_table]}
        tables[op][i][j] = value
        return FiniteTable(self.names, self.bottom, self.top, tables["otimes"], tables["imp"],
                           name=name or f"{self.name}[{op}({i},{j})={value}]")


def tabulate(A: Algebra, name=None) -> FiniteTable:
    """Re-present a finite algebra as a :class:`FiniteTable`."""
    els = A.elements()
    idx = {x: i for i, x in enumerate(els)}
    return FiniteTable(
        [A.fmt(x) for x in els], idx[A.bottom], idx[A.top],
        [[idx[A._mul(x, y)] for y in els] for x in els],
        [[idx[A._imp(x, y)] for y in els] for x in els],
        name=name or A.name,
    )


# ---------------------------------------------------------------------------
LUKASIEWICZ, GODEL, PRODUCT = "lukasiewicz", "godel", "product"
KINDS = (LUKASIEWICZ, GODEL, PRODUCT)


class StandardChain(Algebra):
    """One of the three standard t-norm chains on rationals in [0, 1].

    ``carrier=None`` means every rational in [0, 1]; otherwise a finite
    subset closed under the chain's operations.  ``include_zero=False``
    gives the hoop on (0, 1] (Goedel and product only), which is the
    unbounded kind of component an ordinal sum may use above position 0.
    """

    def __init__(self, kind: str, carrier: Optional[Iterable] = None, include_zero=True,
                 name=None, denominator_cap: int = 64):
        super().__init__()
        if kind not in KINDS:
            raise ConstructionError(f"unknown chain kind {kind!r}")
        if not include_zero and kind == LUKASIEWICZ:
            raise ConstructionError("(0,1] is not closed under the Lukasiewicz t-norm")
        self.kind = kind
        self.include_zero = include_zero
        self.top = ONE
        self.bottom = ZERO if include_zero else None
        self.denominator_cap = denominator_cap
        if carrier is None:
            self.carrier = None
        else:
            vals = frozenset(Fraction(c) for c in carrier)
            if any(not (0 <= v <= 1) for v in vals):
                raise ConstructionError("carrier values must lie in [0, 1]")
            if ONE not in vals:
                raise ConstructionError("carrier must contain 1")
            if include_zero and ZERO not in vals:
                raise ConstructionError("carrier must contain 0")
            if not include_zero and ZERO in vals:
                raise ConstructionError("hoop carrier must not contain 0")
            self.carrier = vals
            self._elements = tuple(sorted(vals))
            for x in self._elements:
                for y in self._elements:
                    if self._mul(x, y) not in vals or self._imp(x, y) not in vals:
                        raise ConstructionError(f"carrier not closed under {kind} operations at ({x}, {y})")
        if name is None:
            if self.carrier is None:
                name = f"{kind}:q" if include_zero else f"{kind}-hoop:q"
            else:
                name = f"{kind}{{{','.join(fmt_rational(v) for v in self._elements)}}}"
        self.name = name

    @classmethod
    def finite(cls, kind: str, n: int, name=None) -> "StandardChain":
        """The ``n``-element chain {0, 1/(n-1), ..., 1}."""
        if n < 2:
            raise ConstructionError("a chain needs at least two elements")
        return cls(kind, [Fraction(i, n - 1) for i in range(n)], name=name or f"{kind}:{n}")

    @property
    def is_finite(self):
        return self.carrier is not None

    @property
    def is_chain(self):
        return True

    def elements(self):
        if self.carrier is None:
            return super().elements()
        return self._elements

    def contains(self, x):
        if not isinstance(x, (Fraction, int)) or isinstance(x, bool):
            return False
        if self.carrier is not None:
            return x in self.carrier
        return (0 <= x <= 1) and (self.include_zero or x > 0)

    def sample(self, rng):
        if self.carrier is not None:
            return rng.choice(self._elements)
        r = rng.random()
        if r < 0.08 and self.include_zero:
            return ZERO
        if r < 0.16:
            return ONE
        d = rng.randint(2, self.denominator_cap)
        return Fraction(rng.randint(1, d - 1), d)

    def fmt(self, x):
        return fmt_rational(x)

    def parse_elt(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"cannot read {text!r} as a rational") from exc

    # closed forms
    def _mul(self, x, y):
        if self.kind == LUKASIEWICZ:
            s = x + y - 1
            return s if s > 0 else ZERO
        if self.kind == GODEL:
            return x if x <= y else y
        return x * y

    def _imp(self, x, y):
        if x <= y:
            return ONE
        if self.kind == LUKASIEWICZ:
            return 1 - x + y
        if self.kind == GODEL:
            return y
        return y / x

    def _leq(self, x, y):
        return x <= y

    def _meet(self, x, y):
        return x if x <= y else y

    def _join(self, x, y):
        return y if x <= y else x

    def _neg(self, x):
        if self.bottom is None:
            return super()._neg(x)
        if self.kind == LUKASIEWICZ:
            return 1 - x
        return ONE if x == 0 else ZERO

    def _add(self, x, y):
        if self.kind == LUKASIEWICZ:
            s = x + y
            return s if s < 1 else ONE
        if x == 0:
            return y
        if y == 0:
            return x
        return ONE


def lukasiewicz(n=None) -> StandardChain:
    return StandardChain(LUKASIEWICZ) if n is None else StandardChain.finite(LUKASIEWICZ, n)


def godel(n=None) -> StandardChain:
    return StandardChain(GODEL) if n is None else StandardChain.finite(GODEL, n)


def product_chain() -> StandardChain:
    return StandardChain(PRODUCT)


def boolean() -> StandardChain:
    return StandardChain.finite(LUKASIEWICZ, 2, name="2")


# ---------------------------------------------------------------------------
class OrdinalSum(Algebra):
    """Ordinal sum of a tower of hoops, component 0 at the bottom.

    Elements are pairs ``(i, v)`` with ``v`` a non-top element of component
    ``i``; the shared top is normalised to ``(0, top_0)``.  Component 0 must
    be bounded; higher components contribute all of their elements
    (including their own least element, which is not the global 0).
    """

    def __init__(self, components, name=None):
        super().__init__()
        components = list(components)
        if len(components) < 2:
            raise ConstructionError("use ordinal_sum() for fewer than two components")
        c0 = components[0]
        if c0.bottom is None:
            raise ConstructionError(f"component 0 ({c0.name}) is unbounded")
        if c0.is_finite and len(c0.elements()) < 2:
            raise ConstructionError("component 0 must be nontrivial")
        self.components = tuple(components)
        self.top = (0, c0.top)
        self.bottom = (0, c0.bottom)
        self.name = name or "(" + " (+) ".join(c.name for c in components) + ")"
        self._enable_memo()

    def _norm(self, i, v):
        return self.top if v == self.components[i].top else (i, v)

    def component_of(self, x) -> Optional[int]:
        """Index of the tower component holding ``x`` (``None`` for the top)."""
        return None if x == self.top else x[0]

    @property
    def is_finite(self):
        return all(c.is_finite for c in self.components)

    @property
    def is_chain(self):
        return all(c.is_chain for c in self.components)

    def elements(self):
        if not self.is_finite:
            return super().elements()
        out = []
        for i, c in enumerate(self.components):
            out.extend((i, v) for v in c.elements() if v != c.top)
        out.append(self.top)
        return tuple(out)

    def contains(self, x):
        if x == self.top:
            return True
        if not (isinstance(x, tuple) and len(x) == 2 and isinstance(x[0], int)):
            return False
        i, v = x
        if not 0 <= i < len(self.components):
            return False
        c = self.components[i]
        return c.contains(v) and v != c.top

    def sample(self, rng):
        if rng.random() < 0.1:
            return self.top
        i = rng.randrange(len(self.components))
        return self._norm(i, self.components[i].sample(rng))

    def key(self, x):
        if x == self.top:
            return (len(self.components),)
        return (x[0], self.components[x[0]].key(x[1]))

    def fmt(self, x):
        if x == self.top:
            return "1"
        i, v = x
        inner = self.components[i].fmt(v)
        return inner if i == 0 else f"{inner}@{i}"

    def parse_elt(self, text):
        text = text.strip()
        if text == "1":
            return self.top
        if "@" in text:
            inner, _, idx = text.rpartition("@")
            i = int(idx)
        else:
            inner, i = text, 0
        if not 0 <= i < len(self.components):
            raise DomainError(f"no component {i} in {self.name}")
        return self._norm(i, self.components[i].parse_elt(inner))

    @_memo2
    def _mul(self, x, y):
        if x == self.top:
            return y
        if y == self.top:
            return x
        (i, v), (j, w) = x, y
        if i == j:
            return self._norm(i, self.components[i]._mul(v, w))
        return x if i < j else y

    @_memo2
    def _imp(self, x, y):
        if x == self.top:
            return y
        if y == self.top:
            return self.top
        (i, v), (j, w) = x, y
        if i == j:
            return self._norm(i, self.components[i]._imp(v, w))
        return self.top if i < j else y

    @_memo2
    def _meet(self, x, y):
        return Algebra._meet(self, x, y)

    @_memo2
    def _join(self, x, y):
        return Algebra._join(self, x, y)

    @_memo2
    def _add(self, x, y):
        return Algebra._add(self, x, y)


def ordinal_sum(components, name=None) -> Algebra:
    components = list(components)
    if not components:
        raise ConstructionError("ordinal sum of an empty family")
    if components[0].bottom is None:
        raise ConstructionError(f"component 0 ({components[0].name}) is unbounded")
    if len(components) == 1:
        return components[0]
    return OrdinalSum(components, name=name)


# ---------------------------------------------------------------------------
class DirectProduct(Algebra):
    def __init__(self, factors, name=None):
        super().__init__()
        factors = tuple(factors)
        if not factors:
            raise ConstructionError("empty product")
        if any(f.bottom is None for f in factors):
            raise ConstructionError("product factors must be bounded")
        self.factors = factors
        self.top = tuple(f.top for f in factors)
        self.bottom = tuple(f.bottom for f in factors)
        self.name = name or " x ".join(f.name for f in factors)
        self._enable_memo()

    @property
    def is_finite(self):
        return all(f.is_finite for f in self.factors)

    @property
    def is_chain(self):
        nontrivial = [f for f in self.factors if not (f.is_finite and len(f.elements()) == 1)]
        return len(nontrivial) <= 1 and all(f.is_chain for f in nontrivial)

    def elements(self):
        if not self.is_finite:
            return super().elements()
        return tuple(itertools.product(*(f.elements() for f in self.factors)))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(f.contains(v) for f, v in zip(self.factors, x)))

    def sample(self, rng):
        return tuple(f.sample(rng) for f in self.factors)

    def key(self, x):
        return tuple(f.key(v) for f, v in zip(self.factors, x))

    def fmt(self, x):
        return "(" + ",".join(f.fmt(v) for f, v in zip(self.factors, x)) + ")"

    def parse_elt(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise DomainError(f"product element {text!r} must be a parenthesised tuple")
        parts = split_top_level(text[1:-1])
        if len(parts) != len(self.factors):
            raise DomainError(f"expected {len(self.factors)} coordinates in {text!r}")
        return tuple(f.parse_elt(p) for f, p in zip(self.factors, parts))

    def _lift(self, op, x, y):
        return tuple(getattr(f, op)(a, b) for f, a, b in zip(self.factors, x, y))

    @_memo2
    def _mul(self, x, y):
        return self._lift("_mul", x, y)

    @_memo2
    def _imp(self, x, y):
        return self._lift("_imp", x, y)

    @_memo2
    def _meet(self, x, y):
        return self._lift("_meet", x, y)

    @_memo2
    def _join(self, x, y):
        return self._lift("_join", x, y)

    @_memo2
    def _add(self, x, y):
        return self._lift("_add", x, y)

    def _neg(self, x):
        return tuple(f._neg(a) for f, a in zip(self.factors, x))

    def _leq(self, x, y):
        return all(f._leq(a, b) for f, a, b in zip(self.factors, x, y))

    def project(self, x, i):
        return x[i]


# ---------------------------------------------------------------------------
class Subalgebra(Algebra):
    """A subset of ``parent`` closed under the operations.

    ``carrier=None`` with ``member=None`` is the whole parent; for infinite
    parents a ``member`` predicate may describe the subset instead.
    """

    def __init__(self, parent: Algebra, carrier: Optional[Iterable] = None, name=None,
                 member: Optional[Callable] = None):
        super().__init__()
        self.parent = parent
        self.top = parent.top
        self.bottom = parent.bottom
        self.name = name or f"sub({parent.name})"
        self._member = member
        if carrier is None:
            self.carrier = None
        else:
            vals = frozenset(carrier)
            for v in vals:
                if not parent.contains(v):
                    raise ConstructionError(f"{v!r} is not in {parent.name}")
            if parent.top not in vals or parent.bottom not in vals:
                raise ConstructionError("subalgebra must contain 0 and 1")
            for x in vals:
                for y in vals:
                    if parent._mul(x, y) not in vals or parent._imp(x, y) not in vals:
                        raise ConstructionError(
                            f"carrier not closed at ({parent.fmt(x)}, {parent.fmt(y)})")
            self.carrier = vals
            self._elements = tuple(parent.sorted(vals))

    @property
    def is_finite(self):
        return self.carrier is not None or (self._member is None and self.parent.is_finite)

    @property
    def is_chain(self):
        if self.parent.is_chain:
            return True
        if self.carrier is not None:
            return self._check_chain_exhaustive()
        return False

    def elements(self):
        if self.carrier is not None:
            return self._elements
        if self._member is None:
            return self.parent.elements()
        return super().elements()

    def contains(self, x):
        if self.carrier is not None:
            return x in self.carrier
        if not self.parent.contains(x):
            return False
        return self._member is None or self._member(x)

    def sample(self, rng):
        if self.carrier is not None:
            return rng.choice(self._elements)
        for _ in range(1000):
            x = self.parent.sample(rng)
            if self.contains(x):
                return x
        return self.top

    def key(self, x):
        return self.parent.key(x)

    def fmt(self, x):
        return self.parent.fmt(x)

    def parse_elt(self, text):
        return self.parent.parse_elt(text)

    def _mul(self, x, y):
        return self.parent._mul(x, y)

    def _imp(self, x, y):
        return self.parent._imp(x, y)

    def _meet(self, x, y):
        return self.parent._meet(x, y)

    def _join(self, x, y):
        return self.parent._join(x, y)

    def _neg(self, x):
        return self.parent._neg(x)

    def _add(self, x, y):
        return self.parent._add(x, y)

    def _leq(self, x, y):
        return self.parent._leq(x, y)


# ---------------------------------------------------------------------------
def mv_center(A: Algebra) -> Subalgebra:
    """The image of double negation, the largest MV-subalgebra of ``A``."""
    name = f"MV({A.name})"
    if A.is_finite:
        return Subalgebra(A, {A._dneg(x) for x in A.elements()}, name=name)
    if getattr(A, "known_mv", False):
        return Subalgebra(A, None, name=name)
    if isinstance(A, StandardChain):
        if A.kind == LUKASIEWICZ:
            return Subalgebra(A, None, name=name)
        return Subalgebra(A, {ZERO, ONE}, name=name)
    if isinstance(A, DirectProduct):
        centers = [mv_center(f) for f in A.factors]
        return Subalgebra(A, None, name=name,
                          member=lambda x: all(c.contains(v) for c, v in zip(centers, x)))
    if isinstance(A, OrdinalSum):
        c0 = mv_center(A.components[0])
        return Subalgebra(A, None, name=name,
                          member=lambda x: x == A.top or (x[0] == 0 and c0.contains(x[1])))
    raise UnsupportedShapeError(f"no MV-center procedure for {A.name}")


def in_first_component(A: Algebra, x) -> bool:
    """Whether ``x`` lies in the bottom (MV) component of a BL-chain's tower.

    Uses the intrinsic description {x : ~x != 0} together with 1, which
    agrees with the component bookkeeping of :class:`OrdinalSum`.
    """
    return x == A.top or A._neg(x) != A.bottom


# ---------------------------------------------------------------------------
@dataclass
class AxiomResult:
    name: str
    passed: bool
    cases: int
    witness: Optional[tuple] = None

    def format(self, A: Algebra) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status}  {self.name}  (cases={self.cases})"
        if self.witness is not None:
            line += "  witness: " + ", ".join(f"{v}={A.fmt(x)}" for v, x in zip("xyzt", self.witness))
        return line


@dataclass
class ValidationReport:
    algebra: str
    exhaustive: bool
    results: list = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def format(self, A: Algebra) -> str:
        mode = "exhaustive" if self.exhaustive else f"sampled (seed={self.seed})"
        lines = [f"algebra: {self.algebra}  [{mode}]"]
        lines += [r.format(A) for r in self.results]
        lines.append("RESULT: " + ("all axioms hold" if self.ok else f"{len(self.failures())} axiom group(s) fail"))
        return "\n".join(lines)


def _implies(p, q):
    return (not p) or q


def _axioms(A: Algebra):
    """(name, arity, predicate) triples; predicates use raw operations."""
    m, i, mt, jn, ng, lq = A._mul, A._imp, A._meet, A._join, A._neg, A._leq
    one, zero = A.top, A.bottom
    dn = A._dneg
    return [
        ("closure of otimes/imp", 2, lambda x, y: A.contains(m(x, y)) and A.contains(i(x, y))),
        ("otimes commutative", 2, lambda x, y: m(x, y) == m(y, x)),
        ("otimes associative", 3, lambda x, y, z: m(m(x, y), z) == m(x, m(y, z))),
        ("top is otimes identity", 1, lambda x: m(x, one) == x),
        ("bottom is least", 1, lambda x: lq(zero, x)),
        ("divisibility x*(x->y) = y*(y->x)", 2, lambda x, y: m(x, i(x, y)) == m(y, i(y, x))),
        ("residuation x*y<=z iff x<=y->z", 3, lambda x, y, z: lq(m(x, y), z) == lq(x, i(y, z))),
        ("BL: (x->y)->z <= ((y->x)->z)->z", 3, lambda x, y, z: lq(i(i(x, y), z), i(i(i(y, x), z), z))),
        ("order is antisymmetric", 2, lambda x, y: _implies(lq(x, y) and lq(y, x), x == y)),
        ("order is transitive", 3, lambda x, y, z: _implies(lq(x, y) and lq(y, z), lq(x, z))),
        ("x*y <= x^y", 2, lambda x, y: lq(m(x, y), mt(x, y))),
        ("meet is greatest lower bound", 3,
         lambda x, y, z: lq(mt(x, y), x) and lq(mt(x, y), y) and _implies(lq(z, x) and lq(z, y), lq(z, mt(x, y)))),
        ("join is least upper bound", 3,
         lambda x, y, z: lq(x, jn(x, y)) and lq(y, jn(x, y)) and _implies(lq(x, z) and lq(y, z), lq(jn(x, y), z))),
        ("currying x->(y->z) = (x*y)->z", 3, lambda x, y, z: i(x, i(y, z)) == i(m(x, y), z)),
        ("exchange x->(y->z) = y->(x->z)", 3, lambda x, y, z: i(x, i(y, z)) == i(y, i(x, z))),
        ("implication antitone/monotone", 3,
         lambda x, y, z: _implies(lq(x, y), lq(i(y, z), i(x, z)) and lq(i(z, x), i(z, y)))),
        ("x <= y->(x*y), x*(x->y) <= y", 2, lambda x, y: lq(x, i(y, m(x, y))) and lq(m(x, i(x, y)), y)),
        ("unit laws and triple negation", 2,
         lambda x, y: i(one, x) == x and i(x, x) == one and i(x, one) == one and lq(x, i(y, x))
         and lq(x, dn(x)) and ng(dn(x)) == ng(x)),
        ("x*~x = 0, x*y = 0 iff x <= ~y", 2,
         lambda x, y: m(x, ng(x)) == zero and ((m(x, y) == zero) == lq(x, ng(y)))),
        ("monotonicity of *, -> and ~", 3,
         lambda x, y, z: _implies(lq(x, y), lq(m(x, z), m(y, z)) and lq(i(z, x), i(z, y))
                                  and lq(i(y, z), i(x, z)) and lq(ng(y), ng(x)))),
        ("negation laws", 2,
         lambda x, y: ng(m(x, y)) == i(x, ng(y)) and ng(mt(x, y)) == jn(ng(x), ng(y))
         and ng(jn(x, y)) == mt(ng(x), ng(y)) and ng(zero) == one and ng(one) == zero),
        ("double negation is a homomorphism", 2,
         lambda x, y: dn(i(x, y)) == i(dn(x), dn(y)) and dn(mt(x, y)) == mt(dn(x), dn(y))
         and dn(jn(x, y)) == jn(dn(x), dn(y)) and m(dn(x), dn(y)) == dn(m(x, y))),
        ("otimes distributes over join/meet", 3,
         lambda x, y, z: m(x, jn(y, z)) == jn(m(x, y), m(x, z)) and m(x, mt(y, z)) == mt(m(x, y), m(x, z))),
        ("imp distributes over meet/join", 3,
         lambda x, y, z: i(x, mt(y, z)) == mt(i(x, y), i(x, z)) and i(x, jn(y, z)) == jn(i(x, y), i(x, z))),
    ]


def validate_bl_axioms(A: Algebra, budget: int = 1000, seed: int = 0) -> ValidationReport:
    """Check the hoop, boundedness and BL axioms plus the standard derived laws.

    Finite carriers are checked exhaustively; infinite ones on ``budget``
    seeded random tuples.  Failures carry the first witness found.
    """
    if A.bottom is None:
        raise UnsupportedShapeError(f"{A.name} is unbounded; not a BL-algebra")
    exhaustive = A.is_finite
    report = ValidationReport(A.name, exhaustive, seed=None if exhaustive else seed)
    if exhaustive:
        els = A.elements()
    else:
        rng = random.Random(seed)
        samples = [tuple(A.sample(rng) for _ in range(3)) for _ in range(budget)]
    for name, arity, pred in _axioms(A):
        cases = itertools.product(els, repeat=arity) if exhaustive else (s[:arity] for s in samples)
        count, witness = 0, None
        for args in cases:
            count += 1
            try:
                ok = pred(*args)
            except Exception:  # corrupted tables can send derived ops out of range
                ok = False
            if not ok:
                witness = tuple(args)
                break
        report.results.append(AxiomResult(name, witness is None, count, witness))
    return report


# ---------------------------------------------------------------------------
@dataclass
class CancellativeVerdict:
    holds: Optional[bool]
    witness: Optional[tuple] = None
    reason: str = ""

    @property
    def decided(self) -> bool:
        return self.holds is not None


def _cancellative_triple(A, x, y, z) -> bool:
    return not (A._add(x, y) == A._add(x, z) and A._mul(x, y) == A._mul(x, z) and y != z)


def _is_mv_finite(A) -> bool:
    return all(A._dneg(x) == x for x in A.elements())


_CANCEL_CACHE: dict = {}


def is_cancellative_type(A: Algebra) -> CancellativeVerdict:
    """Decide whether ``A`` is of cancellative type, with a witness if not.

    Never guesses: shapes without a procedure come back undecided.
    """
    cached = _CANCEL_CACHE.get(id(A))
    if cached is not None and cached[0] is A:
        return cached[1]
    verdict = _cancellative(A)
    _CANCEL_CACHE[id(A)] = (A, verdict)
    return verdict


def _cancellative(A: Algebra) -> CancellativeVerdict:
    if isinstance(A, StandardChain) and not A.is_finite:
        if A.kind == LUKASIEWICZ:
            return CancellativeVerdict(True, reason="MV-algebra")
        if A.kind == PRODUCT:
            return CancellativeVerdict(True, reason="product chain: nonzero part is a cancellative hoop")
        w = (Fraction(1, 2), Fraction(3, 4), Fraction(7, 8))
        assert not _cancellative_triple(A, *w)
        return CancellativeVerdict(False, w, reason="Goedel chain: x+y = x+z = 1 and min(x,y) = min(x,z)")
    if A.is_finite and A.is_chain:
        for x, y, z in itertools.product(A.elements(), repeat=3):
            if not _cancellative_triple(A, x, y, z):
                return CancellativeVerdict(False, (x, y, z), reason="exhaustive triple search")
        return CancellativeVerdict(True, reason="exhaustive triple search")
    if A.is_finite and _is_mv_finite(A):
        return CancellativeVerdict(True, reason="MV-algebra")
    if getattr(A, "known_mv", False):
        return CancellativeVerdict(True, reason="MV-algebra by construction")
    if isinstance(A, DirectProduct):
        verdicts = [is_cancellative_type(f) for f in A.factors]
        for k, v in enumerate(verdicts):
            if v.holds is False:
                # lift the factor's witness, other coordinates fixed at 0
                w = tuple(
                    tuple(v.witness[t] if j == k else f.bottom for j, f in enumerate(A.factors))
                    for t in range(3))
                return CancellativeVerdict(False, w, reason=f"factor {k} ({A.factors[k].name}) is not")
        if all(v.holds for v in verdicts):
            return CancellativeVerdict(True, reason="product of cancellative-type factors")
        return CancellativeVerdict(None, reason="some factor undecided")
    if isinstance(A, Subalgebra):
        pv = is_cancellative_type(A.parent)
        if pv.holds:
            return CancellativeVerdict(True, reason=f"subalgebra of {A.parent.name}")
        return CancellativeVerdict(None, reason="parent is not of cancellative type; no procedure")
    return CancellativeVerdict(None, reason=f"no decision procedure for {type(A).__name__}")


def is_godel(A: Algebra) -> bool:
    if isinstance(A, StandardChain):
        return A.kind == GODEL or (A.is_finite and len(A.elements()) == 2)
    if A.is_finite:
        return all(A._mul(x, x) == x for x in A.elements())
    return False


def is_product_chain(A: Algebra) -> bool:
    return isinstance(A, StandardChain) and A.kind == PRODUCT and A.include_zero
