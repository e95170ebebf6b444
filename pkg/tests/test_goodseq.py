from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blchang.algebra import DirectProduct, godel, lukasiewicz, ordinal_sum, product_chain
from blchang.errors import ParseError
from blchang.goodseq import (GoodSeq, NotGoodError, chain_normal_form, enumerate_good_seqs, format_goodseq,
                             gs_add, gs_add_chain, gs_add_convolution, gs_join, gs_leq, gs_meet, is_good,
                             parse_goodseq, project_goodseq, units, zero_seq)
from blchang.lgroups import Integers, gamma_interval

from conftest import unit_rationals

L, G, P = lukasiewicz(), godel(), product_chain()


def seq(A, *xs):
    return GoodSeq.of(A, [F(x) for x in xs])


def test_goodness_examples():
    assert is_good(L, [F(0)]) and is_good(L, [F(1)])
    assert is_good(L, [F(1), F(3, 10)])
    assert not is_good(L, [F(3, 10), F(1, 10)])
    assert is_good(G, [F(1), F(1), F(1, 2)])
    with pytest.raises(NotGoodError):
        GoodSeq.of(L, [F(3, 10), F(1, 10)])


def test_sum_examples():
    assert seq(L, "7/10") + seq(L, "3/5") == seq(L, 1, "3/10")
    assert seq(G, "1/2") + seq(G, "3/4") == seq(G, 1, "1/2")
    a = seq(L, 1, "1/4")
    assert a + zero_seq(L) == a


def test_lattice_examples():
    a, b = seq(L, 1, "1/4"), seq(L, "1/2")
    assert gs_join(a, b) == a
    assert gs_meet(a, b) == b
    assert gs_join(a, zero_seq(L)) == a
    assert gs_join(seq(G, "1/2"), seq(G, 1, 1, "1/3")) == seq(G, 1, 1, "1/3")


def test_normal_form_examples():
    assert chain_normal_form(seq(G, 1, 1, "1/2")) == (2, F(1, 2))
    assert chain_normal_form(zero_seq(G)) == (0, 0)
    assert chain_normal_form(seq(G, 1, 1, 1)) == (3, 0)


def test_projections():
    L3, L2 = lukasiewicz(3), lukasiewicz(2)
    D = DirectProduct([L3, L2])
    a = GoodSeq.of(D, [(F(1), F(1)), (F(1, 2), F(0))])
    b = GoodSeq.of(D, [(F(1, 2), F(1))])
    assert project_goodseq(a, 0) == GoodSeq.of(L3, [F(1), F(1, 2)])
    assert project_goodseq(a, 1) == GoodSeq.of(L2, [F(1)])
    for i in (0, 1):
        assert project_goodseq(zero_seq(D), i).is_zero()
        assert project_goodseq(a + b, i) == project_goodseq(a, i) + project_goodseq(b, i)


def test_prepend_law():
    A = ordinal_sum([lukasiewicz(3), lukasiewicz(3)])
    for s in enumerate_good_seqs(A, 3):
        for m in (1, 2):
            assert gs_add_convolution(units(A, m), s) == GoodSeq._raw(A, (A.top,) * m + s.entries)


def test_format_and_parse():
    s = seq(G, 1, 1, "1/2")
    assert format_goodseq(s) == "(1^2,1/2)"
    assert parse_goodseq(G, "(1^2,1/2)") == s
    assert parse_goodseq(G, "(1,1,1/2)") == s
    Z3 = gamma_interval(Integers(3))
    t = GoodSeq.of(Z3, [3, 3, 1])
    assert format_goodseq(t) == "(3^2,1)"
    assert parse_goodseq(Z3, "(3^2,1)") == t
    with pytest.raises(ParseError):
        parse_goodseq(Z3, "(7^2,1)")


def test_mixing_algebras_rejected():
    with pytest.raises(Exception):
        gs_add(seq(G, "1/2"), seq(L, "1/2"))


def test_enumeration_counts_on_goedel_three_chain():
    seqs = enumerate_good_seqs(godel(3), 2)
    # (0), (1/2), (1), (1,1/2), (1,1)
    assert len(seqs) == 5


rationals = unit_rationals()


def chain_seq(A):
    return st.tuples(st.integers(0, 3), rationals).map(lambda t: GoodSeq.of(A, [F(1)] * t[0] + [t[1]]))


@pytest.mark.parametrize("A", [L, G, P], ids=lambda A: A.name)
def test_fast_path_matches_convolution(A):
    @given(chain_seq(A), chain_seq(A))
    def run(a, b):
        assert gs_add_chain(a, b) == gs_add_convolution(a, b)
        assert gs_leq(a, a + b)
        assert len(a + b) <= len(a) + len(b)
    run()


@pytest.mark.parametrize("A", [L, G, P], ids=lambda A: A.name)
def test_monoid_laws_on_standard_chains(A):
    @given(chain_seq(A), chain_seq(A), chain_seq(A))
    def run(a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert gs_join(a, b) + c == gs_join(a + c, b + c)
        assert gs_meet(a, b) + c == gs_meet(a + c, b + c)
    run()


@given(chain_seq(P), chain_seq(P), chain_seq(P))
def test_cancellation_on_product_chain(a, b, c):
    if a + c == b + c:
        assert a == b


def test_cancellation_fails_on_goedel_chain():
    a, b, c = seq(G, "1/2"), seq(G, "3/4"), seq(G, "1/2")
    assert a + c == b + c and a != b


def test_associativity_fails_below_a_nontrivial_upper_component():
    A = ordinal_sum([lukasiewicz(3), lukasiewicz(2)])
    half = next(x for x in A.elements() if x[0] == 0 and x[1] == F(1, 2))
    b = next(x for x in A.elements() if x[0] == 1)
    a, c = GoodSeq.of(A, [half]), GoodSeq.of(A, [b])
    assert (a + a) + c == GoodSeq.of(A, [A.top, b])
    assert a + (a + c) == GoodSeq.of(A, [A.top, A.top])
