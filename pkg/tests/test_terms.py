import pytest

from blchang.algebra import godel, lukasiewicz
from blchang.errors import ParseError
from blchang.props.generators import gen_finite_bl_chains
from blchang.terms import find_counterexample, parse_statement, parse_term


def test_double_negation_fails_on_goedel_chain():
    res = find_counterexample("~~x = x", [lukasiewicz(3), godel(3)])
    assert res.found and res.algebra == godel(3).name
    assert res.witness == {"x": "1/2"}


def test_strengthened_negation_law_has_witness():
    res = find_counterexample("x + y = x + z, x * y = x * z => y = z", [godel(4)])
    assert res.found


def test_commutativity_has_no_counterexample():
    res = find_counterexample("x * y = y * x", gen_finite_bl_chains(4))
    assert not res.found and res.exhaustive and res.cases > 0


def test_sampling_on_infinite_chains_is_reported():
    res = find_counterexample("x & y <= x | y", [lukasiewicz()], samples=50)
    assert not res.found and not res.exhaustive and res.cases == 50


def test_unicode_spelling():
    st = parse_statement("x ⊗ (x → y) ≤ y")
    assert sorted(st.variables()) == ["x", "y"]
    assert not find_counterexample(st, [godel(4)]).found


def test_term_variables():
    assert sorted(parse_term("~x // y").variables()) == ["x", "y"]


@pytest.mark.parametrize("text", ["x +", "(x", "x = ", "x ? y", "x = y =>"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_statement(text)
