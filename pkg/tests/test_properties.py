"""Hypothesis properties on the three rational chains and on (Z, u)."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blchang.algebra import godel, lukasiewicz, product_chain
from blchang.chang import ChainSearch, Decision, class_eq, group_add, group_leq
from blchang.goodseq import GoodSeq, is_good
from blchang.lgroups import Integers, psi

from conftest import unit_rationals

CHAINS = [lukasiewicz(), godel(), product_chain()]
r = unit_rationals()
CS = ChainSearch()


@pytest.mark.parametrize("A", CHAINS, ids=lambda A: A.name)
def test_sum_laws(A):
    @given(r, r, r)
    def run(x, y, z):
        s = A._add
        assert s(x, y) == s(y, x)
        assert s(x, A.bottom) == x and s(x, A.top) == A.top
        assert A._leq(x, s(x, y))
        assert s(s(x, y), z) == s(x, s(y, z))
        assert s(x, A._meet(y, z)) == A._meet(s(x, y), s(x, z))
        assert s(x, A._join(y, z)) == A._join(s(x, y), s(x, z))
        if A._leq(y, z):
            assert A._leq(s(x, y), s(x, z))
    run()


@pytest.mark.parametrize("A", CHAINS, ids=lambda A: A.name)
def test_key_identity_on_standard_chains(A):
    @given(r, r, r)
    def run(x, y, z):
        s, m = A._add, A._mul
        assert s(m(x, y), m(s(x, y), z)) == s(m(x, z), m(s(x, z), y))
    run()


@pytest.mark.parametrize("A", CHAINS, ids=lambda A: A.name)
def test_sum_and_product_of_a_pair_form_a_good_sequence(A):
    @given(r, r)
    def run(x, y):
        assert is_good(A, [A._add(x, y), A._mul(x, y)])
    run()


@given(st.integers(1, 5), st.integers(-30, 30), st.integers(-30, 30))
def test_psi_is_additive_and_monotone(u, a, b):
    Z = Integers(u)
    pa, pb = psi(Z, a), psi(Z, b)
    assert class_eq(group_add(pa, pb), psi(Z, a + b), CS) is Decision.YES
    assert (group_leq(pa, pb, CS) is Decision.YES) == (a <= b)


@given(unit_rationals(positive=True), unit_rationals(positive=True), unit_rationals(positive=True))
def test_product_chain_classes_cancel(a, b, c):
    P = product_chain()
    g = GoodSeq.of(P, [a]) + GoodSeq.of(P, [c])
    h = GoodSeq.of(P, [b]) + GoodSeq.of(P, [c])
    assert (g == h) == (a == b)
