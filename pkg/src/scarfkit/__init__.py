"""Exact computation with generic and cogeneric monomial ideals."""
from ._backend import BACKEND
from .alexander import (
    DualContext,
    alexander_dual,
    algebraic_co_scarf,
    cm_cogeneric,
    co_scarf,
    depth_cogeneric,
    is_cogeneric,
    dual_betti_sweep,
)
from .assoc import associated_primes, check_saturated_chains, connectivity_sequence
from .binomial import Binomial, TermOrder, buchberger, census_initial_ideals, initial_ideal, parse_binomials
from .complexes import LabeledComplex, SimplicialComplex
from .corpus import generate_corpus, optimal, permutahedron, tree
from .errors import (
    ConsistencyError,
    CutoffExceeded,
    IdealError,
    ParseError,
    PreconditionError,
    ScarfkitError,
)
from .hvector import h_polynomial, local_h
from .monomials import (
    IrreducibleComponent,
    MonomialIdeal,
    codim,
    colength,
    intersect,
    irreducible_decomposition_oracle,
    minimalize,
    parse_ideal,
)
from .resolution import (
    BettiTable,
    algebraic_scarf,
    betti_oracle,
    cm_type,
    depth,
    is_CM,
    is_exact,
    is_minimal,
    proj_dim,
    taylor_complex,
)
from .scarf import decompose_generic, extended_scarf_complex, is_generic, scarf_complex, stanley_reisner
from .verify import verify_all

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BettiTable",
    "Binomial",
    "ConsistencyError",
    "CutoffExceeded",
    "DualContext",
    "IdealError",
    "IrreducibleComponent",
    "LabeledComplex",
    "MonomialIdeal",
    "ParseError",
    "PreconditionError",
    "ScarfkitError",
    "SimplicialComplex",
    "TermOrder",
    "alexander_dual",
    "algebraic_co_scarf",
    "algebraic_scarf",
    "associated_primes",
    "betti_oracle",
    "buchberger",
    "census_initial_ideals",
    "check_saturated_chains",
    "cm_cogeneric",
    "cm_type",
    "co_scarf",
    "codim",
    "colength",
    "connectivity_sequence",
    "decompose_generic",
    "depth",
    "depth_cogeneric",
    "extended_scarf_complex",
    "generate_corpus",
    "h_polynomial",
    "initial_ideal",
    "intersect",
    "irreducible_decomposition_oracle",
    "is_CM",
    "is_cogeneric",
    "is_exact",
    "is_generic",
    "is_minimal",
    "local_h",
    "dual_betti_sweep",
    "minimalize",
    "optimal",
    "parse_binomials",
    "parse_ideal",
    "permutahedron",
    "proj_dim",
    "scarf_complex",
    "stanley_reisner",
    "taylor_complex",
    "tree",
    "verify_all",
]
