"""BL-algebras, good sequences and their Chang lattice-ordered groups."""
from .algebra import (Algebra, DirectProduct, FiniteTable, OrdinalSum, StandardChain, Subalgebra, boolean,
                      godel, in_first_component, is_cancellative_type, lukasiewicz, mv_center, ordinal_sum,
                      product_chain, tabulate, validate_bl_axioms)
from .blalg import format_blalg, parse_blalg, read_blalg, write_blalg
from .chang import (BoundedGeneral, Cancellative, ChainSearch, Componentwise, Decision, GroupElt, HGroup,
                    canonical_elt, chain_canonical, class_eq, elt, godel_to_int, group_join, group_leq,
                    group_meet, group_zero, in_S_L, product_iso, product_iso_inverse, strong_unit,
                    theta_decompose)
from .errors import (BLError, CapacityError, ConstructionError, DomainError, MorphismError, ParseError,
                     StrategyError, UnsupportedShapeError)
from .goodseq import GoodSeq, enumerate_good_seqs, format_goodseq, gs_add, parse_goodseq
from .lgroups import (ChangGroup, Integers, LexGroup, Morphism, PosRationals, ProductGroup, enumerate_homs,
                      eta, gamma_interval, good_seq_of_positive, parse_group, psi, psi_inverse, xi_map)
from .terms import find_counterexample, parse_statement

__all__ = [name for name in dir() if not name.startswith("_")]
