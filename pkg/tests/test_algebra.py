from fractions import Fraction as F

import pytest

from blchang.algebra import (DirectProduct, StandardChain, boolean, godel, in_first_component,
                             is_cancellative_type, lukasiewicz, mv_center, ordinal_sum, product_chain,
                             tabulate, validate_bl_axioms)
from blchang.errors import ConstructionError, DomainError, UnsupportedShapeError


def test_product_chain_operations():
    P = product_chain()
    assert P.otimes(F(1, 2), F(1, 3)) == F(1, 6)
    assert P.imp(F(1, 2), F(1, 4)) == F(1, 2)
    assert P.imp(F(0), F(1, 4)) == 1


def test_godel_negation():
    G = godel()
    assert G.neg(F(1, 2)) == 0
    assert G.neg(F(0)) == 1


def test_lukasiewicz_product():
    assert lukasiewicz().otimes(F(7, 10), F(3, 5)) == F(3, 10)


def test_addition_examples():
    P, L = product_chain(), lukasiewicz()
    assert P.add(F(1, 2), F(1, 3)) == 1
    assert L.add(F(7, 10), F(3, 5)) == 1
    assert L.add(F(1, 4), F(1, 2)) == F(3, 4)
    for A in (P, L, godel()):
        assert A.add(F(2, 7), F(0)) == F(2, 7)


def test_checked_api_rejects_foreign_values():
    with pytest.raises(DomainError):
        lukasiewicz(4).otimes(F(1, 2), F(1, 3))
    with pytest.raises(DomainError):
        product_chain().neg(F(3, 2))


@pytest.mark.parametrize("A", [lukasiewicz(4), boolean(), godel(5), lukasiewicz(), godel(), product_chain()],
                         ids=lambda A: A.name)
def test_standard_algebras_validate(A):
    rep = validate_bl_axioms(A, budget=300)
    assert rep.ok, rep.format(A)
    assert rep.exhaustive == A.is_finite


def test_mutated_table_is_caught_with_witness():
    T = tabulate(lukasiewicz(4))
    found = 0
    for i in range(4):
        for j in range(4):
            for v in range(4):
                if T.otimes_table[i][j] == v:
                    continue
                rep = validate_bl_axioms(T.mutated("otimes", i, j, v))
                assert not rep.ok
                assert all(r.witness is not None for r in rep.failures())
                found += 1
    assert found == 4 * 4 * 3


def test_ordinal_sum_of_two_booleans_is_goedel_three_chain():
    A = ordinal_sum([boolean(), boolean()])
    assert len(A.elements()) == 3
    m = next(x for x in A.elements() if x not in (A.bottom, A.top))
    assert A.otimes(m, m) == m
    assert validate_bl_axioms(A).ok


def test_ordinal_sum_with_three_element_hoop():
    A = ordinal_sum([boolean(), lukasiewicz(3)])
    els = A.elements()
    assert len(els) == 4
    b, m = els[1], els[2]
    assert A.leq(b, m) and A.otimes(m, m) == b
    assert validate_bl_axioms(A).ok
    assert set(mv_center(A).elements()) == {A.bottom, A.top}


def test_single_component_sum_is_the_component():
    C = lukasiewicz(3)
    assert ordinal_sum([C]) is C


def test_unbounded_bottom_component_rejected():
    with pytest.raises(ConstructionError):
        ordinal_sum([StandardChain("godel", include_zero=False), boolean()])


def test_mv_centers():
    G = godel()
    M = mv_center(G)
    assert M.contains(F(0)) and M.contains(F(1)) and not M.contains(F(1, 2))
    L = lukasiewicz()
    assert all(mv_center(L).contains(F(k, 9)) for k in range(10))


def test_cancellative_type():
    assert is_cancellative_type(lukasiewicz()).holds is True
    assert is_cancellative_type(product_chain()).holds is True
    v = is_cancellative_type(godel())
    assert v.holds is False
    assert v.witness == (F(1, 2), F(3, 4), F(7, 8))
    G = godel()
    x, y, z = v.witness
    assert G.add(x, y) == G.add(x, z) == 1 and G.otimes(x, y) == G.otimes(x, z)


def test_first_component_membership():
    A = ordinal_sum([lukasiewicz(3), lukasiewicz(2)])
    first = [x for x in A.elements() if in_first_component(A, x)]
    assert len(first) == 3


def test_direct_product_componentwise():
    D = DirectProduct([lukasiewicz(2), lukasiewicz(3)])
    assert len(D.elements()) == 6
    assert validate_bl_axioms(D).ok
    x, y = (F(1), F(1, 2)), (F(0), F(1, 2))
    assert D.add(x, y) == (F(1), F(1))
    assert not D.is_chain


def test_unbounded_algebra_cannot_be_validated():
    with pytest.raises(UnsupportedShapeError):
        validate_bl_axioms(StandardChain("product", include_zero=False))
