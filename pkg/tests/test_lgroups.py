from fractions import Fraction as F

import pytest

from blchang.algebra import (boolean, godel, lukasiewicz, mv_center, ordinal_sum, product_chain,
                             validate_bl_axioms)
from blchang.chang import ChainSearch, Decision, GroupElt, class_eq, elt, group_zero, strong_unit
from blchang.errors import CapacityError, DomainError, MorphismError, ParseError
from blchang.goodseq import GoodSeq
from blchang.lgroups import (Integers, LexGroup, Morphism, PosRationals, ProductGroup, center_collapse, collapse_holds,
                             enumerate_homs, eta, extend_from_center, gamma_imp, gamma_interval, gamma_mul,
                             good_seq_of_positive, identity_morphism, lex_z_qpos, parse_group,
                             product_chain_lmorphisms, psi, psi_inverse, restrict_to_center, xi_map)

CS = ChainSearch()


def test_gamma_of_integers():
    Z3 = Integers(3)
    assert gamma_mul(Z3, 2, 2) == 1
    assert gamma_imp(Z3, 2, 1) == 2
    A = gamma_interval(Z3)
    assert A.elements() == (0, 1, 2, 3)
    assert validate_bl_axioms(A).ok
    assert gamma_interval(Z3) is A


def test_gamma_of_unit_one_is_boolean():
    A = gamma_interval(Integers(1))
    assert A.elements() == (0, 1)
    assert all(A._mul(x, x) == x for x in A.elements())


def test_lex_carrier():
    G = lex_z_qpos()
    A = gamma_interval(G)
    assert A.contains((0, F(5)))
    assert A.contains((1, F(1, 2))) and A.contains((1, F(1)))
    assert not A.contains((1, F(2)))
    assert not A.contains((0, F(1, 2)))
    assert A.bottom == (0, F(1)) and A.top == (1, F(1))


def test_group_descriptors():
    assert parse_group("Z(u=3)").unit == 3
    assert parse_group("Qpos(u=3/2)").unit == F(3, 2)
    assert isinstance(parse_group("lex(Z, Qpos)"), LexGroup)
    assert isinstance(parse_group("prod(Z(u=2), Z)"), ProductGroup)
    for bad in ("W", "Z(v=1)", "lex(Z)", "Z(u=x)"):
        with pytest.raises(ParseError):
            parse_group(bad)


def test_greedy_decomposition():
    Z3 = Integers(3)
    assert good_seq_of_positive(Z3, 7).entries == (3, 3, 1)
    assert good_seq_of_positive(Z3, 0).entries == ()
    with pytest.raises(DomainError):
        good_seq_of_positive(Z3, -1)
    G = lex_z_qpos()
    assert good_seq_of_positive(G, (2, F(4))).entries == ((1, F(1)), (1, F(1)), (0, F(4)))


def test_greedy_capacity():
    with pytest.raises(CapacityError):
        good_seq_of_positive(Integers(1), 50, max_steps=10)


def test_psi_examples():
    Z = Integers(1)
    A = gamma_interval(Z)
    g = psi(Z, -2)
    assert g.pos.is_zero() and g.neg == GoodSeq.of(A, [1, 1])
    Z3 = Integers(3)
    assert class_eq(psi(Z3, 3), strong_unit(gamma_interval(Z3)), CS) is Decision.YES
    for a in range(-7, 8):
        assert psi_inverse(Z3, psi(Z3, a)) == a


def test_eta_examples():
    G, L = godel(), lukasiewicz()
    assert class_eq(eta(G, F(1, 2)), strong_unit(G), CS) is Decision.YES
    assert eta(L, F(1, 2)) == elt(L, [F(1, 2)])
    assert class_eq(eta(L, L.bottom), group_zero(L), CS) is Decision.YES


def test_collapse_that_ignores_the_middle_is_not_a_morphism():
    with pytest.raises(MorphismError):
        center_collapse(lukasiewicz(4), boolean())


def test_center_collapse_on_product_chain():
    f = center_collapse(product_chain(), boolean())
    assert f.validated and f(F(1, 2)) == boolean().top


def test_center_inclusion_through_xi():
    A = ordinal_sum([lukasiewicz(3), lukasiewicz(2)])
    M = mv_center(A)
    inc = Morphism(M, A, lambda x: x, name="inc")
    g = GoodSeq.of(M, [M.top, M.elements()[1]])
    image = xi_map(inc, elt_from(g))
    assert image.algebra is A and image.pos.entries == g.entries


def elt_from(s):
    return GroupElt(s, GoodSeq._raw(s.algebra, ()))


def test_hom_sets():
    two = boolean()
    homs = enumerate_homs(two, two)
    assert len(homs) == 1 and homs[0].table() == identity_morphism(two).table()
    L4, G3 = lukasiewicz(4), godel(3)
    assert enumerate_homs(L4, G3) == []
    assert len(enumerate_homs(G3, L4)) == 1
    grid = gamma_interval(parse_group("prod(Z(u=2), Z(u=1))"))
    homs = enumerate_homs(grid, G3)
    assert homs and all(collapse_holds(f) for f in homs)


def test_homs_factor_through_center():
    T, two = ordinal_sum([boolean(), lukasiewicz(3)]), boolean()
    M = mv_center(T)
    from_T, from_M = enumerate_homs(T, two), enumerate_homs(M, two)
    assert len(from_T) == len(from_M) >= 1
    assert {restrict_to_center(h, M).table() for h in from_T} == {g.table() for g in from_M}
    assert {extend_from_center(g, T).table() for g in from_M} == {h.table() for h in from_T}


def test_hom_enumeration_cap():
    with pytest.raises(CapacityError):
        enumerate_homs(lukasiewicz(20), boolean())
    with pytest.raises(CapacityError):
        enumerate_homs(lukasiewicz(), boolean())


def test_ratio_map_differs_from_flat_map():
    P = product_chain()
    phi, flat = product_chain_lmorphisms(P, samples=50)
    g = elt(P, [F(1, 2)])
    assert phi(g) == (1, F(1, 2)) and flat(g) == (1, F(1))


def test_pos_rationals_unit_and_order():
    Q = PosRationals()
    assert Q.zero() == 1 and Q.add(F(2), F(3)) == 6
    assert Q.leq(F(1, 2), F(1))
