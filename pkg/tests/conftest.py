from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from blchang.props.generators import GeneratorConfig, build_corpus

settings.register_profile("repo", deadline=None, max_examples=150, derandomize=True)
settings.load_profile("repo")


def unit_rationals(max_den: int = 24, positive: bool = False):
    lo = 1 if positive else 0
    return st.integers(2, max_den).flatmap(lambda d: st.integers(lo, d).map(lambda n: Fraction(n, d)))


@pytest.fixture(scope="session")
def corpus():
    return build_corpus(GeneratorConfig())
