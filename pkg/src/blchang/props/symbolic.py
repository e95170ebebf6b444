"""Symbolic case analyses over the rational product chain, done with sympy."""
from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp


@dataclass
class CaseProof:
    claim: str
    cases: list = field(default_factory=list)   # (case description, bool)

    @property
    def ok(self) -> bool:
        return bool(self.cases) and all(ok for _, ok in self.cases)

    def format(self) -> str:
        lines = [self.claim]
        lines += [f"  [{'ok' if ok else 'FAILED'}] {desc}" for desc, ok in self.cases]
        return "\n".join(lines)


def _prod_add(x, y):
    """x + y on the product chain: x if y = 0, y if x = 0, else 1."""
    return sp.Piecewise((y, sp.Eq(x, 0)), (x, sp.Eq(y, 0)), (1, True))


def _is_false(expr) -> bool:
    return sp.simplify(expr) == sp.false


def no_half_from_quarter() -> CaseProof:
    """(1/4) + a = (1/2) has no solution a among good sequences of the product chain.

    Every good sequence over a chain is (1^p, x).  For p = 0 the sum is
    (1/4 + x, 1/4 * x); for p >= 1 the first entry is 1.
    """
    q, h = sp.Rational(1, 4), sp.Rational(1, 2)
    x = sp.Symbol("x", positive=True)
    proof = CaseProof("no good sequence a satisfies (1/4) + a = (1/2) over the product chain")

    # p = 0, x = 0: the sum is (1/4)
    first = _prod_add(q, sp.Integer(0))
    proof.cases.append(("a = (0): sum is (1/4), and 1/4 = 1/2 is false", _is_false(sp.Eq(first, h))))

    # p = 0, 0 < x <= 1: sum is (1/4 + x, x/4) = (1, x/4)
    first = sp.simplify(_prod_add(q, x))   # x > 0 decides every branch
    second = sp.simplify(q * x)
    tail_zero = sp.solveset(sp.Eq(second, 0), x, sp.Interval.Lopen(0, 1))
    proof.cases.append(("a = (x), 0 < x <= 1: first entry simplifies to 1, and 1 = 1/2 is false",
                        first == 1 and _is_false(sp.Eq(first, h))))
    proof.cases.append(("a = (x), 0 < x <= 1: second entry x/4 never vanishes, but (1/2) has length 1",
                        tail_zero == sp.S.EmptySet))

    # p >= 1: (1/4) + (1^p, x) = (1^(p+1), ...) starts with 1 + 1/4 = 1
    lead = _prod_add(q, sp.Integer(1))
    proof.cases.append(("a = (1^p, x), p >= 1: first entry 1/4 + 1 = 1, and 1 = 1/2 is false",
                        lead == 1 and _is_false(sp.Eq(lead, h))))
    return proof


def ratio_map_is_additive() -> CaseProof:
    """phi([(a),(b)]) = a/b and phi is additive on such classes, symbolically.

    For nonzero a, b, c, d in (0, 1]: [(a),(b)] + [(c),(d)] = [(1, ac), (1, bd)],
    whose canonical form has p = q = 1, so phi = (0, ac/(bd)).
    """
    a, b, c, d = sp.symbols("a b c d", positive=True)
    proof = CaseProof("phi([(a),(b)]) = a/b is additive into Z x (Q+, *)")
    phi_ab = (0, a / b)
    phi_cd = (0, c / d)
    # sum over the product chain: (a) + (c) = (a + c, a*c) = (1, ac) since both nonzero
    s_pos = (_prod_add(a, c), a * c)
    s_neg = (_prod_add(b, d), b * d)
    lead_ok = sp.simplify(s_pos[0] - 1) == 0 and sp.simplify(s_neg[0] - 1) == 0
    proof.cases.append(("(a)+(c) = (1, ac) and (b)+(d) = (1, bd) for nonzero entries", lead_ok))
    phi_sum = (1 - 1, s_pos[1] / s_neg[1])
    proof.cases.append(("integer parts add: 0 + 0 = 1 - 1", phi_sum[0] == phi_ab[0] + phi_cd[0]))
    proof.cases.append(("ratio parts multiply: ac/(bd) = (a/b)(c/d)",
                        sp.simplify(phi_sum[1] - phi_ab[1] * phi_cd[1]) == 0))
    # [(a),(0)] rewrites to [(1,a),(1)], so phi = (1, a)
    proof.cases.append(("[(a),(0)] = [(1,a),(1)] maps to (1, a/1)", sp.simplify(a / 1 - a) == 0))
    return proof
