"""Property checks for graph interaction indices and the independence counterexamples."""
from .indices import (
    ALL_INDICES,
    GraphIndexFunction,
    GraphIndexKind,
    alt_index,
    fgn_modified,
    first_order_only,
    scaled_essential,
    squared_game,
)
from .checks import (
    AXIOMS,
    Axiom,
    AxiomReport,
    Verdict,
    Witness,
    check_admissibility,
    check_axiom,
    pairs_from_situations,
)
from .suite import (
    APPENDIX_EDGES,
    COUNTEREXAMPLES,
    EXPECTED_VIOLATIONS,
    KNOWN_DISCREPANCIES,
    IndependenceWitness,
    Mismatch,
    all_graphs,
    companion_pairs,
    compare_to_appendix,
    exhaustive_small_suite,
    expected_verdict,
    fixed_games,
    independence_suite,
    independence_witnesses,
    linearity_pairs,
    random_suite,
)

__all__ = [
    "ALL_INDICES",
    "GraphIndexFunction",
    "GraphIndexKind",
    "alt_index",
    "fgn_modified",
    "first_order_only",
    "scaled_essential",
    "squared_game",
    "AXIOMS",
    "Axiom",
    "AxiomReport",
    "Verdict",
    "Witness",
    "check_admissibility",
    "check_axiom",
    "pairs_from_situations",
    "APPENDIX_EDGES",
    "COUNTEREXAMPLES",
    "EXPECTED_VIOLATIONS",
    "KNOWN_DISCREPANCIES",
    "IndependenceWitness",
    "Mismatch",
    "all_graphs",
    "companion_pairs",
    "compare_to_appendix",
    "exhaustive_small_suite",
    "expected_verdict",
    "fixed_games",
    "independence_suite",
    "independence_witnesses",
    "linearity_pairs",
    "random_suite",
]
