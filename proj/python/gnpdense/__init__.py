"""Dense subgraphs in G(n, 1/2).

Thin Python layer over the C++ core: seeded random graphs, the partitioned
greedy dense-subgraph heuristic, the analytical bound machinery (entropy
schedule, density integral, first-moment threshold) and exact brute-force
oracles for desk-scale validation.
"""

from ._gnpdense import (  # noqa: F401
    BoundReport,
    BudgetError,
    ExperimentConfig,
    ExperimentResult,
    Graph,
    GreedyStep,
    GreedyTrace,
    Mode,
    OracleResult,
    Partition,
    Summary,
    TrialRecord,
    binomial_tail,
    clique_number_estimate,
    count_dense_subgraphs,
    degree_into,
    delta_schedule,
    dense_edge_threshold,
    density,
    density_integral,
    edge_count_between,
    entropy,
    exists_dense_subgraph,
    expected_dense_subgraph_count,
    gap_ratio,
    greedy_dense,
    inverse_entropy,
    lemma1_success_bound,
    log2_binomial_tail,
    make_bound_report,
    make_partition,
    max_clique_exact,
    max_density_subgraph_exact,
    partition_vertices,
    plain_greedy_clique,
    predicted_density,
    predicted_edges_lower_bound,
    run_experiment,
    size_threshold,
    splitmix64_at,
    trial_seed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
