from fractions import Fraction as F

import pytest

from blchang.algebra import godel, lukasiewicz, mv_center, product_chain
from blchang.chang import (BoundedGeneral, Cancellative, ChainSearch, Decision, HGroup, canonical_elt,
                           chain_canonical, class_eq, elt, godel_to_int, group_join, group_leq, group_neg,
                           group_scale, group_zero, in_mv_image, in_S_L, product_iso, product_iso_inverse,
                           strong_unit, theta_decompose, to_mv_center)
from blchang.errors import StrategyError, UnsupportedShapeError
from blchang.goodseq import GoodSeq

L, G, P = lukasiewicz(), godel(), product_chain()
CS = ChainSearch()


def e(A, pos, neg=()):
    return elt(A, [F(x) for x in pos], [F(x) for x in neg])


def test_class_equality_examples():
    assert class_eq(e(L, ["3/4"], ["1/4"]), e(L, ["1/2"]), CS) is Decision.YES
    assert class_eq(e(G, ["1/2"], ["3/4"]), group_zero(G), CS) is Decision.YES
    assert class_eq(e(P, ["1/2"], ["1/4"]), group_zero(P), CS) is Decision.NO
    g = e(P, [1, "1/3"], ["1/2"])
    assert class_eq(g, g, CS) is Decision.YES


def test_goedel_witness_is_half():
    k = GoodSeq.of(G, [F(1, 2)])
    g = e(G, ["1/2"], ["3/4"])
    assert g.pos + k == g.neg + k == GoodSeq.of(G, [F(1), F(1, 2)])


def test_decision_has_no_truth_value_when_unknown():
    with pytest.raises(ValueError):
        bool(Decision.UNKNOWN)


def test_group_examples():
    g = e(L, [1, "1/3"], ["1/2"])
    assert class_eq(g + group_neg(g), group_zero(L), CS) is Decision.YES
    assert e(L, ["1/2"]) + e(L, ["3/4"]) == e(L, [1, "1/4"])
    assert group_leq(e(L, [1, "1/2"]), group_scale(strong_unit(L), 2), CS) is Decision.YES
    assert group_leq(group_zero(L), strong_unit(L), CS) is Decision.YES


def test_product_order_examples():
    lo, hi = e(P, ["1/4"], ["1/2"]), e(P, ["1/2"], ["1/4"])
    assert group_leq(lo, group_zero(P), CS) is Decision.YES
    assert group_leq(group_zero(P), hi, CS) is Decision.YES
    assert group_leq(hi, lo, CS) is Decision.NO


def test_goedel_elements_comparable():
    vals = [F(0), F(1, 3), F(1, 2), F(1)]
    gs = [e(G, [a], [b]) for a in vals for b in vals]
    for g in gs:
        for h in gs:
            assert Decision.YES in (group_leq(g, h, CS), group_leq(h, g, CS))


def test_join_examples():
    g = e(L, ["1/4"], ["1/2"])
    assert class_eq(group_join(g, g), g, CS) is Decision.YES
    j = group_join(g, group_zero(L))
    assert class_eq(j, group_zero(L), CS) is Decision.YES
    h = e(L, ["3/4"])
    assert class_eq(group_join(g, h), h, CS) is Decision.YES


def test_theta_examples():
    mv, s = theta_decompose(e(L, ["1/3"], ["1/5"]))
    assert class_eq(s, group_zero(L), CS) is Decision.YES
    g = e(P, ["1/2"], ["1/4"])
    mv, s = theta_decompose(g)
    assert class_eq(mv, group_zero(P), CS) is Decision.YES
    assert class_eq(s, g, CS) is Decision.YES
    mv, s = theta_decompose(e(G, [1, "1/2"], ["3/4"]))
    assert godel_to_int(mv) == 1
    assert class_eq(s, group_zero(G), CS) is Decision.YES
    assert in_mv_image(mv) and in_S_L(s)


def test_s_l_membership():
    assert in_S_L(group_zero(P))
    assert in_S_L(e(P, ["1/2"], ["1/4"]))
    for A in (L, G, P):
        assert not in_S_L(strong_unit(A))


def test_canonical_forms():
    assert chain_canonical(e(P, [0], ["1/2"])) == (0, F(1), 1, F(1, 2))
    assert canonical_elt(e(P, [0], ["1/2"])) == e(P, [1], [1, "1/2"])
    assert canonical_elt(e(P, ["1/2"], [0])) == e(P, [1, "1/2"], [1])
    g = e(P, [1, "1/3"], ["1/2"])
    assert canonical_elt(g) == g


def test_goedel_integer_map():
    assert godel_to_int(group_zero(G)) == 0
    assert godel_to_int(strong_unit(G)) == 1
    g = e(G, [1, 1, "1/2"], ["1/3"])
    assert godel_to_int(g) == 2
    assert class_eq(g - group_scale(strong_unit(G), 2), group_zero(G), CS) is Decision.YES
    with pytest.raises(UnsupportedShapeError):
        godel_to_int(group_zero(L))


def test_product_iso():
    assert product_iso(group_zero(P)) == (0, 1)
    assert product_iso(e(P, ["1/2"], ["1/4"])) == (0, 2)
    assert product_iso(e(P, [1, 1, "1/3"], [1, "1/2"])) == (1, F(2, 3))
    for m, r in [(0, F(1)), (3, F(5, 2)), (-2, F(1, 7))]:
        assert product_iso(product_iso_inverse(P, m, r)) == (m, r)


def test_h_group():
    H = HGroup(P)
    assert class_eq(H.to_S(H.zero()), group_zero(P), CS) is Decision.YES
    assert H.add(H.make(F(1, 2), F(1, 4)), H.make(F(1, 3), 1)) == (F(1, 6), F(1, 4))
    for a in (F(1, 9), F(1, 2), F(1)):
        assert H.leq(H.make(a, 1), H.zero())


def test_strategies():
    g, h = e(L, ["3/4"], ["1/4"]), e(L, ["1/2"])
    assert class_eq(g, h, Cancellative()) is Decision.YES
    assert class_eq(g, h, BoundedGeneral()) is Decision.YES
    with pytest.raises(StrategyError):
        class_eq(e(G, ["1/2"]), e(G, ["3/4"]), Cancellative())
    # bounded search never refutes
    assert class_eq(e(P, ["1/2"], ["1/4"]), group_zero(P), BoundedGeneral()) is Decision.UNKNOWN


def test_mv_center_retagging():
    A = lukasiewicz(4)
    M = mv_center(A)
    g = to_mv_center(e(A, ["1/3"]), M)
    assert g.algebra is M
