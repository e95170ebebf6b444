"""Property records, suite reports, exhaustive/sampled checking and shrinking."""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..algebra import Algebra
from ..chang import Decision, GroupElt
from ..goodseq import GoodSeq, _is_good_raw, format_goodseq


class Undecided(Exception):
    """A decision strategy answered UNKNOWN while checking a property."""


def yes(d: Decision) -> bool:
    if d is Decision.UNKNOWN:
        raise Undecided()
    return d is Decision.YES


def rng_for(seed, suite: str, prop: str, algebra: str) -> random.Random:
    return random.Random(f"{seed}:{suite}:{prop}:{algebra}")


@dataclass
class PropertyRecord:
    suite: str
    prop: str
    statement: str
    algebra: str
    cases: int = 0
    failures: int = 0
    undecided: int = 0
    mode: str = "exhaustive"
    witness: Optional[str] = None
    note: str = ""

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.undecided:
            return "undecided"
        return "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d

    def format(self) -> str:
        line = f"{self.status.upper():9} {self.suite:4} {self.prop} [{self.algebra}] cases={self.cases} ({self.mode})"
        if self.undecided:
            line += f" undecided={self.undecided}"
        if self.note:
            line += f" -- {self.note}"
        if self.witness is not None:
            line += f"\n          witness: {self.witness}"
        return line


@dataclass
class SuiteReport:
    suite: str
    title: str
    records: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        states = {r.status for r in self.records}
        if "fail" in states:
            return "fail"
        if "undecided" in states:
            return "undecided"
        return "pass"

    def format(self) -> str:
        head = f"== {self.suite}: {self.title} -- {self.status.upper()} ({len(self.records)} records)"
        return "\n".join([head] + [r.format() for r in self.records])

    def to_dict(self, timing: bool = True) -> dict:
        d = {"id": self.suite, "title": self.title, "status": self.status,
             "records": [r.to_dict() for r in self.records]}
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d


@dataclass
class RunReport:
    seed: int
    suites: list
    all_ids: tuple

    @property
    def complete(self) -> bool:
        return {s.suite for s in self.suites} >= set(self.all_ids)

    @property
    def status(self) -> str:
        states = {s.status for s in self.suites}
        if "fail" in states:
            return "FAIL"
        if "undecided" in states:
            return "UNDECIDED"
        return "PASS" if self.complete else "PASS (subset)"

    def format(self) -> str:
        parts = [s.format() for s in self.suites]
        ran = ", ".join(s.suite for s in self.suites)
        tail = f"GLOBAL: {self.status}  (seed={self.seed}; suites run: {ran})"
        if not self.complete:
            missing = [i for i in self.all_ids if i not in {s.suite for s in self.suites}]
            tail += f"\nnot run: {', '.join(missing)} -- global PASS requires every suite"
        return "\n".join(parts + [tail])

    def to_dict(self, timing: bool = True) -> dict:
        return {"seed": self.seed, "status": self.status, "complete": self.complete,
                "suites": [s.to_dict(timing) for s in self.suites]}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


# -- shrinking -------------------------------------------------------------------------
def _complexity(A: Algebra, x):
    if A.is_finite:
        els = A.elements()
        return (els.index(x),) if x in els else (len(els),)
    if isinstance(x, Fraction):
        return (x.denominator, x.numerator)
    return (0,)


def simpler_values(A: Algebra, x) -> list:
    """Candidates strictly simpler than ``x``: 0, 1, then bisection toward them."""
    base = _complexity(A, x)
    cands = [A.bottom, A.top]
    if A.is_finite:
        cands += list(A.elements())
    elif isinstance(x, Fraction):
        cands += [Fraction(1, 2), x / 2, (x + 1) / 2]
        cands += [x.limit_denominator(d) for d in (2, 3, 4, 8, 16)]
    out = []
    for c in cands:
        if c is not None and c != x and A.contains(c) and _complexity(A, c) < base and c not in out:
            out.append(c)
    return out


def shrink_tuple(A: Algebra, values: tuple, fails: Callable[[tuple], bool], limit: int = 200) -> tuple:
    """Greedy shrink of an element tuple; the result still fails."""
    cur = tuple(values)
    for _ in range(limit):
        progressed = False
        for i, x in enumerate(cur):
            for c in simpler_values(A, x):
                cand = cur[:i] + (c,) + cur[i + 1:]
                if _safe(fails, cand):
                    cur, progressed = cand, True
                    break
            if progressed:
                break
        if not progressed:
            return cur
    return cur


def _safe(fails, cand) -> bool:
    try:
        return fails(cand)
    except Undecided:
        return False


def simpler_seqs(s: GoodSeq) -> list:
    A, e = s.algebra, s.entries
    out = []
    for i in range(len(e)):
        cut = e[:i] + e[i + 1:]
        if _is_good_raw(A, cut):
            out.append(GoodSeq._raw(A, cut))
    for i, x in enumerate(e):
        for c in simpler_values(A, x)[:6]:
            cand = e[:i] + (c,) + e[i + 1:]
            if _is_good_raw(A, cand):
                out.append(GoodSeq._raw(A, cand))
    return out


def _seq_size(s: GoodSeq):
    return (len(s.entries), tuple(_complexity(s.algebra, x) for x in s.entries))


def shrink_seqs(seqs: tuple, fails: Callable[[tuple], bool], limit: int = 200) -> tuple:
    """Greedy shrink of a tuple of good sequences / group elements."""
    cur = tuple(seqs)

    def variants(item):
        if isinstance(item, GroupElt):
            return ([GroupElt(p, item.neg) for p in simpler_seqs(item.pos)]
                    + [GroupElt(item.pos, n) for n in simpler_seqs(item.neg)])
        return simpler_seqs(item)

    def size(item):
        if isinstance(item, GroupElt):
            return (_seq_size(item.pos), _seq_size(item.neg))
        return _seq_size(item)

    for _ in range(limit):
        progressed = False
        for i, item in enumerate(cur):
            for v in variants(item):
                if size(v) >= size(item):
                    continue
                cand = cur[:i] + (v,) + cur[i + 1:]
                if _safe(fails, cand):
                    cur, progressed = cand, True
                    break
            if progressed:
                break
        if not progressed:
            return cur
    return cur


def fmt_values(A: Algebra, values, names="xyzt") -> str:
    return ", ".join(f"{n}={A.fmt(v)}" for n, v in zip(names, values))


def fmt_items(items) -> str:
    out = []
    for n, it in zip("abcdefgh", items):
        out.append(f"{n}={it if isinstance(it, GroupElt) else format_goodseq(it)}")
    return ", ".join(out)


# -- checking ----------------------------------------------------------------------------
def check_elements(rec: PropertyRecord, A: Algebra, arity: int, pred: Callable, samples: int,
                   rng: random.Random) -> PropertyRecord:
    """All ``arity``-tuples of a finite ``A``; ``samples`` seeded tuples otherwise."""
    if A.is_finite:
        tuples = itertools.product(A.elements(), repeat=arity)
        rec.mode = "exhaustive"
    else:
        tuples = (tuple(A.sample(rng) for _ in range(arity)) for _ in range(samples))
        rec.mode = f"sampled n={samples}"
    first = None
    for t in tuples:
        rec.cases += 1
        try:
            ok = pred(*t)
        except Undecided:
            rec.undecided += 1
            continue
        if not ok:
            rec.failures += 1
            if first is None:
                first = t
    if first is not None:
        shrunk = shrink_tuple(A, first, lambda c: not pred(*c))
        rec.witness = fmt_values(A, shrunk)
    return rec


def check_items(rec: PropertyRecord, draws, pred: Callable, mode: str) -> PropertyRecord:
    """``draws`` yields tuples of good sequences or group elements."""
    rec.mode = mode
    first = None
    for items in draws:
        rec.cases += 1
        try:
            ok = pred(*items)
        except Undecided:
            rec.undecided += 1
            continue
        if not ok:
            rec.failures += 1
            if first is None:
                first = items
    if first is not None:
        shrunk = shrink_seqs(first, lambda c: not pred(*c))
        rec.witness = fmt_items(shrunk)
    return rec


def check_exists(rec: PropertyRecord, candidates, pred: Callable, describe: Callable, mode: str) -> PropertyRecord:
    """Pass iff some candidate satisfies ``pred``; the witness found is reported."""
    rec.mode = mode
    for c in candidates:
        rec.cases += 1
        try:
            if pred(c):
                rec.note = "found " + describe(c)
                return rec
        except Undecided:
            rec.undecided += 1
    rec.failures = 1
    rec.witness = "no candidate satisfied the existence claim"
    return rec


def check_flag(rec: PropertyRecord, ok: bool, cases: int = 1, witness: Optional[str] = None,
               mode: str = "direct", note: str = "") -> PropertyRecord:
    rec.cases += cases
    rec.mode = mode
    rec.note = note
    if not ok:
        rec.failures += 1
        rec.witness = witness
    return rec
