"""Exact qudit graph, hypergraph, multigraph, and multihypergraph states.

States live as integer phase tables f: Z_d^n -> Z_d; diagonal edge gates add
monomials, stabilizer generators are verified exactly, and the correspondence
between phase tables and edge weights is decided by exact linear algebra over
Z_d (Gaussian elimination for prime d, Smith normal form otherwise).
"""

from .correspondence import (
    HYPERGRAPH,
    MULTIHYPERGRAPH,
    BudgetExceeded,
    CensusReport,
    CorrespondenceSystem,
    NonCanonical,
    RoundTripFailure,
    SolveOutcome,
    block_solve_prime,
    build_system,
    census,
    coefficient_block,
    representability_constraints,
    solve_weights,
)
from .graphs import (
    GraphKind,
    MultiHyperedge,
    SchemaError,
    WeightedEdgeMap,
    enumerate_hyperedges,
    enumerate_multihyperedges,
    hyperedge,
    validate_kind,
)
from .residues import (
    Modulus,
    NonPrimeModulus,
    Residue,
    RingMatrix,
    SolutionSet,
    left_nullspace_prime,
    mod_inverse,
    rank_and_consistency,
    smith_normal_form,
    solve_prime,
    solve_residue,
)
from .stabilizers import (
    ConjugationReport,
    GeneratorSpec,
    apply_generator,
    apply_shift,
    conjugation_identity,
    conjugation_report,
    generator,
    verify,
)
from .states import (
    DenseState,
    DimensionMismatch,
    PhaseFunction,
    SizeLimit,
    VertexOutOfRange,
    apply_multi_cz,
    apply_uv,
    build_state,
    canonicalize,
    plus_state,
    states_equal,
    to_dense,
)

__all__ = [
    "HYPERGRAPH",
    "MULTIHYPERGRAPH",
    "BudgetExceeded",
    "CensusReport",
    "ConjugationReport",
    "CorrespondenceSystem",
    "DenseState",
    "DimensionMismatch",
    "GraphKind",
    "GeneratorSpec",
    "Modulus",
    "MultiHyperedge",
    "NonCanonical",
    "NonPrimeModulus",
    "PhaseFunction",
    "Residue",
    "RingMatrix",
    "RoundTripFailure",
    "SchemaError",
    "SizeLimit",
    "SolutionSet",
    "SolveOutcome",
    "VertexOutOfRange",
    "WeightedEdgeMap",
    "apply_generator",
    "apply_multi_cz",
    "apply_shift",
    "apply_uv",
    "block_solve_prime",
    "build_state",
    "build_system",
    "canonicalize",
    "census",
    "coefficient_block",
    "conjugation_identity",
    "conjugation_report",
    "enumerate_hyperedges",
    "enumerate_multihyperedges",
    "generator",
    "hyperedge",
    "left_nullspace_prime",
    "mod_inverse",
    "plus_state",
    "rank_and_consistency",
    "representability_constraints",
    "smith_normal_form",
    "solve_prime",
    "solve_residue",
    "solve_weights",
    "states_equal",
    "to_dense",
    "validate_kind",
    "verify",
]

__version__ = "0.1.0"
