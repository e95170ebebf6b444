"""Terms and (conditional) equations over the BL signature, with a
counterexample search over a corpus of algebras.

Syntax (loosest binding first)::

    statement := [relation {"," relation} "=>"] relation
    relation  := term ("=" | "!=" | "<=" | "<") term
    term      := join ["->" term]              (right associative)
    join      := meet {"|" meet}
    meet      := sum {"&" sum}
    sum       := prod {("+" | "//") prod}      (+ addition, // pseudo-addition)
    prod      := unary {"*" unary}
    unary     := "~" unary | "(" term ")" | "0" | "1" | variable

Unicode spellings ``⊗ → ∧ ∨ ⊘ ¬ ≤ ≠ ⇒`` are accepted too.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Optional

from .algebra import Algebra
from .errors import ParseError

_UNICODE = {"⊗": "*", "→": "->", "∧": "&", "∨": "|", "⊘": "//", "¬": "~", "≤": "<=", "≠": "!=", "⇒": "=>"}
_TOKEN = re.compile(r"\s*(=>|->|//|<=|!=|[=<~*+&|(),01]|[A-Za-z_]\w*)")


def _tokenize(text: str) -> list:
    for u, a in _UNICODE.items():
        text = text.replace(u, a)
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


@dataclass(frozen=True)
class Term:
    op: str                 # "var", "const", "neg" or a binary operator symbol
    args: tuple = ()
    name: str = ""

    def variables(self) -> set:
        if self.op == "var":
            return {self.name}
        return set().union(*(a.variables() for a in self.args)) if self.args else set()

    def eval(self, A: Algebra, env: dict):
        op = self.op
        if op == "var":
            return env[self.name]
        if op == "const":
            return A.top if self.name == "1" else A.bottom
        if op == "neg":
            return A._neg(self.args[0].eval(A, env))
        x, y = (a.eval(A, env) for a in self.args)
        return _BINARY[op](A, x, y)

    def __str__(self):
        if self.op in ("var", "const"):
            return self.name
        if self.op == "neg":
            return f"~{self.args[0]}"
        return f"({self.args[0]} {self.op} {self.args[1]})"


_BINARY = {
    "*": lambda A, x, y: A._mul(x, y),
    "->": lambda A, x, y: A._imp(x, y),
    "&": lambda A, x, y: A._meet(x, y),
    "|": lambda A, x, y: A._join(x, y),
    "+": lambda A, x, y: A._add(x, y),
    "//": lambda A, x, y: A._padd(x, y),
}

_RELATIONS = {
    "=": lambda A, x, y: x == y,
    "!=": lambda A, x, y: x != y,
    "<=": lambda A, x, y: A._leq(x, y),
    "<": lambda A, x, y: A._leq(x, y) and x != y,
}


@dataclass(frozen=True)
class Relation:
    rel: str
    lhs: Term
    rhs: Term

    def holds(self, A, env) -> bool:
        return _RELATIONS[self.rel](A, self.lhs.eval(A, env), self.rhs.eval(A, env))

    def __str__(self):
        return f"{self.lhs} {self.rel} {self.rhs}"


@dataclass(frozen=True)
class Statement:
    premises: tuple
    conclusion: Relation

    def variables(self) -> list:
        vs = set()
        for r in self.premises + (self.conclusion,):
            vs |= r.lhs.variables() | r.rhs.variables()
        return sorted(vs)

    def holds(self, A, env) -> bool:
        return not all(p.holds(A, env) for p in self.premises) or self.conclusion.holds(A, env)

    def __str__(self):
        if not self.premises:
            return str(self.conclusion)
        return ", ".join(map(str, self.premises)) + " => " + str(self.conclusion)


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'a token'}, found {tok or 'end of input'}")
        self.i += 1
        return tok

    def statement(self):
        rels = [self.relation()]
        while self.peek() == ",":
            self.take()
            rels.append(self.relation())
        if self.peek() == "=>":
            self.take()
            concl = self.relation()
            premises = tuple(rels)
        else:
            if len(rels) != 1:
                raise ParseError("several relations without '=>'")
            concl, premises = rels[0], ()
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return Statement(premises, concl)

    def relation(self):
        lhs = self.term()
        rel = self.peek()
        if rel not in _RELATIONS:
            raise ParseError(f"expected a relation (=, !=, <=, <), found {rel or 'end of input'}")
        self.take()
        return Relation(rel, lhs, self.term())

    def term(self):
        left = self.join()
        if self.peek() == "->":
            self.take()
            return Term("->", (left, self.term()))
        return left

    def _chain(self, sub, ops):
        left = sub()
        while self.peek() in ops:
            op = self.take()
            left = Term(op, (left, sub()))
        return left

    def join(self):
        return self._chain(self.meet, ("|",))

    def meet(self):
        return self._chain(self.sum, ("&",))

    def sum(self):
        return self._chain(self.prod, ("+", "//"))

    def prod(self):
        return self._chain(self.unary, ("*",))

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.take()
            return Term("neg", (self.unary(),))
        if tok == "(":
            self.take()
            t = self.term()
            self.take(")")
            return t
        if tok in ("0", "1"):
            self.take()
            return Term("const", name=tok)
        if tok is not None and re.match(r"[A-Za-z_]", tok):
            self.take()
            return Term("var", name=tok)
        raise ParseError(f"unexpected {tok or 'end of input'} in term")


def parse_statement(text: str) -> Statement:
    return _Parser(text).statement()


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.peek() is not None:
        raise ParseError(f"trailing input at {p.peek()!r}")
    return t


@dataclass
class SearchResult:
    statement: str
    witness: Optional[dict] = None
    algebra: Optional[str] = None
    cases: int = 0
    exhaustive: bool = True
    per_algebra: list = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def format(self) -> str:
        if self.found:
            env = ", ".join(f"{k}={v}" for k, v in self.witness.items())
            return f"counterexample in {self.algebra}: {env}"
        mode = "exhaustion" if self.exhaustive else "sampling"
        return f"no counterexample ({self.cases} cases, {mode})"


def find_counterexample(statement, corpus, samples: int = 1000, seed: int = 0) -> SearchResult:
    """First assignment violating ``statement`` in deterministic order.

    Finite algebras are enumerated in element order with variables sorted by
    name; infinite ones get ``samples`` seeded random assignments.
    """
    st = parse_statement(statement) if isinstance(statement, str) else statement
    names = st.variables()
    result = SearchResult(str(st))
    for A in corpus:
        if A.is_finite:
            envs = itertools.product(A.elements(), repeat=len(names))
        else:
            rng = random.Random(f"{seed}:{A.name}")
            result.exhaustive = False
            envs = (tuple(A.sample(rng) for _ in names) for _ in range(samples))
        count = 0
        for vals in envs:
            count += 1
            env = dict(zip(names, vals))
            if not st.holds(A, env):
                result.cases += count
                result.per_algebra.append((A.name, count))
                result.witness = {k: A.fmt(v) for k, v in env.items()}
                result.algebra = A.name
                return result
        result.cases += count
        result.per_algebra.append((A.name, count))
    return result
