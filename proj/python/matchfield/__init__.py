"""Matching fields for Gr(k, n), their lattice polytopes, and the mutation chain
from the Gelfand-Tsetlin polytope to the FFLV polytope.

Rationals come back as fractions.Fraction; weight matrices accept ints,
Fractions or "p/q" strings.
"""

from ._matchfield import (
    GrassmannPoset,
    LatticePolytope,
    MatchingField,
    NonGenericError,
    ResourceError,
    VerificationError,
    block_diagonal,
    block_diagonal_weight_matrix,
    coherence_check,
    diagonal,
    diagonal_weight_matrix,
    fflv,
    fflv_weight_matrix,
    gp_relations,
    induce_field,
    induced_weight,
    initial_forms,
    initial_term,
    intermediate_field,
    is_generic,
    map_polytope,
    mutation_data,
    polytope_of_field,
    run_cli,
    swap_step,
    triple_sequence,
    tropical_map,
    tuple_oracle,
    verify_chain,
    verify_fflv_projection,
    verify_gr3_block_projection,
    verify_gt_equivalence,
    verify_step,
    weight_sequence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
