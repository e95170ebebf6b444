"""Test corpora: every finite BL-chain built from a tower of finite MV-chains,
a few fixed products, and the three rational chains.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..algebra import (Algebra, DirectProduct, LUKASIEWICZ, StandardChain, boolean, godel,
                       lukasiewicz, ordinal_sum)
from ..errors import ConstructionError


@dataclass(frozen=True)
class GeneratorConfig:
    max_chain_size: int = 5
    max_components: Optional[int] = None
    product_arity: int = 2
    samples: int = 10_000
    group_samples: int = 200
    sandwich_samples: int = 100
    iso_samples: int = 500
    seq_len: int = 6
    seed: int = 0
    denominator_cap: int = 64

    def __post_init__(self):
        for name in ("max_chain_size", "product_arity", "samples", "group_samples",
                     "sandwich_samples", "iso_samples", "seq_len", "denominator_cap"):
            if getattr(self, name) < 1:
                raise ConstructionError(f"{name} must be at least 1")
        if self.max_components is not None and self.max_components < 1:
            raise ConstructionError("max_components must be at least 1")
        if self.max_chain_size > 8:
            raise ConstructionError("finite chains are generated up to size 8")


def _shapes(n: int, max_components: Optional[int]):
    """Tuples (k0, k1, ...) with k0 + sum(kj - 1) == n, all kj >= 2."""
    out = []

    def rest(remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_components is not None and len(prefix) >= max_components:
            return
        for k in range(2, remaining + 2):
            rest(remaining - (k - 1), prefix + [k])

    for k0 in range(2, n + 1):
        rest(n - k0, [k0])
    return out


def tower_name(shape) -> str:
    return "(+)".join(f"L{k}" for k in shape)


def chain_from_shape(shape) -> Algebra:
    """Ordinal sum L_{k0} (+) L_{k1} (+) ...; upper components keep their own least element."""
    if len(shape) == 1:
        return StandardChain.finite(LUKASIEWICZ, shape[0], name=tower_name(shape))
    return ordinal_sum([lukasiewicz(k) for k in shape], name=tower_name(shape))


def gen_finite_bl_chains(n: int, max_components: Optional[int] = None, exact: bool = False) -> list:
    """All tower-built BL-chains with at most ``n`` elements (exactly ``n`` if ``exact``)."""
    if not 2 <= n <= 8:
        raise ConstructionError("chain size must lie between 2 and 8")
    sizes = [n] if exact else range(2, n + 1)
    return [chain_from_shape(s) for size in sizes for s in _shapes(size, max_components)]


def fixed_products() -> list:
    """Three products of small chains, one mixing a non-MV tower."""
    tower = ordinal_sum([boolean(), lukasiewicz(3)], name="L2(+)L3")
    return [
        DirectProduct([lukasiewicz(2), lukasiewicz(3)], name="L2 x L3"),
        DirectProduct([lukasiewicz(3), godel(3)], name="L3 x G3"),
        DirectProduct([lukasiewicz(2), tower], name="L2 x (L2(+)L3)"),
    ]


def rational_chains(denominator_cap: int = 64) -> list:
    return [StandardChain(kind, denominator_cap=denominator_cap) for kind in ("lukasiewicz", "godel", "product")]


def godel_chains(sizes=range(3, 7)) -> list:
    return [godel(n) for n in sizes] + [godel()]


@dataclass
class Corpus:
    chains: list = field(default_factory=list)
    products: list = field(default_factory=list)
    rationals: list = field(default_factory=list)

    @property
    def finite(self) -> list:
        return self.chains + self.products

    @property
    def all(self) -> list:
        return self.chains + self.products + self.rationals

    @property
    def all_chains(self) -> list:
        return self.chains + self.rationals


def build_corpus(config: GeneratorConfig = GeneratorConfig()) -> Corpus:
    return Corpus(
        chains=gen_finite_bl_chains(config.max_chain_size, config.max_components),
        products=fixed_products(),
        rationals=rational_chains(config.denominator_cap),
    )
