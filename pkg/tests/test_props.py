from fractions import Fraction as F

import pytest

from blchang.algebra import lukasiewicz
from blchang.errors import ConstructionError
from blchang.props.generators import GeneratorConfig, build_corpus, gen_finite_bl_chains, tower_name
from blchang.props.runner import PropertyRecord, RunReport, SuiteReport, rng_for, shrink_tuple
from blchang.props.suites import ALL_IDS, find_mutation_breaking, run_suite, run_suites, strategy_agreement

SMALL = GeneratorConfig(max_chain_size=3, samples=200, group_samples=20, sandwich_samples=10, iso_samples=50)


def test_generated_chains_by_size():
    assert [A.name for A in gen_finite_bl_chains(2, exact=True)] == ["L2"]
    assert sorted(A.name for A in gen_finite_bl_chains(3, exact=True)) == ["L2(+)L2", "L3"]
    assert sorted(A.name for A in gen_finite_bl_chains(4, exact=True)) == sorted(
        ["L4", "L2(+)L3", "L3(+)L2", "L2(+)L2(+)L2"])
    assert all(len(A.elements()) == 4 for A in gen_finite_bl_chains(4, exact=True))
    assert tower_name((3, 2)) == "L3(+)L2"


def test_generator_limits():
    with pytest.raises(ConstructionError):
        gen_finite_bl_chains(9)
    with pytest.raises(ConstructionError):
        GeneratorConfig(samples=0)
    assert [A.name for A in gen_finite_bl_chains(4, max_components=1, exact=True)] == ["L4"]


def test_corpus_shape():
    c = build_corpus(SMALL)
    assert len(c.chains) == 3 and len(c.products) == 3 and len(c.rationals) == 3
    assert all(not A.is_finite for A in c.rationals)


def test_reports_are_deterministic():
    a = run_suites(["S4", "S6"], SMALL).to_json(timing=False)
    b = run_suites(["S4", "S6"], SMALL).to_json(timing=False)
    assert a == b


def test_unknown_suite_id():
    with pytest.raises(KeyError):
        run_suite("S99")
    with pytest.raises(KeyError):
        run_suites(["S1", "nope"])


def test_corrupted_table_is_caught_with_witness():
    found = find_mutation_breaking(lukasiewicz(3), config=SMALL)
    assert found is not None
    M, rec = found
    assert rec.status == "fail" and rec.witness == "x=0, y=1/2"


def test_shrinking_keeps_the_failure():
    A = lukasiewicz()

    def fails(t):
        return t[0] > F(1, 3)

    out = shrink_tuple(A, (F(37, 41),), fails)
    assert fails(out) and out[0].denominator < 41
    assert shrink_tuple(A, (F(37, 41),), lambda t: True) == (A.bottom,)


def test_global_pass_needs_every_suite():
    ok = SuiteReport("S4", "t", [PropertyRecord("S4", "p", "s", "A", cases=1)])
    assert RunReport(0, [ok], ALL_IDS).status == "PASS (subset)"
    full = [SuiteReport(i, "t", [PropertyRecord(i, "p", "s", "A", cases=1)]) for i in ALL_IDS]
    assert RunReport(0, full, ALL_IDS).status == "PASS"
    bad = PropertyRecord("S4", "p", "s", "A", cases=1, failures=1)
    assert RunReport(0, full + [SuiteReport("S4", "t", [bad])], ALL_IDS).status == "FAIL"


def test_passing_suites_on_small_corpus():
    for sid in ("S1", "S2", "S3", "S4", "S9", "S10"):
        rep = run_suite(sid, None, SMALL)
        assert rep.status == "pass", rep.format()


def test_key_identity_suite_reports_the_tower_witness():
    assert run_suite("S6", None, SMALL).status == "pass"
    rep = run_suite("S6", None, GeneratorConfig(max_chain_size=4, samples=200))
    bad = {r.algebra for r in rep.records if r.status == "fail"}
    assert bad == {"L3(+)L2"}


def test_strong_unit_on_product_chain():
    rep = run_suite("S8", None, SMALL)
    units = [r for r in rep.records if r.prop == "strong unit" and r.algebra.startswith("product")]
    assert units and all(r.status == "pass" for r in units)


def test_strategies_agree_on_small_algebras():
    for A in build_corpus(SMALL).finite:
        cases, bad, first = strategy_agreement(A, rng_for(0, "T", "agree", A.name), 20)
        assert bad == 0, first
        assert cases > 0
