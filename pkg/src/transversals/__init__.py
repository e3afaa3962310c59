"""Exact representation, counting and enumeration of all transversals
(hitting sets) of a hypergraph via disjoint {0,1,2,e}-valued rows."""

from .analytics import (Infeasible, Spectrum, count_at_least, count_total,
                        filter_family, spectrum, transversal_number,
                        transversals_of_size)
from .engine import RowFamily, RunStats, WorkItem, impose, is_extra_feasible, is_feasible, run
from .hypergraph import (Hypergraph, HypergraphError, load_hypergraph,
                         parse_hypergraph, render_hypergraph, subset_reduced,
                         superset_reduced)
from .oracles import (all_rows, bell_numbers, brute_transversals,
                      inclusion_exclusion_count, row_census, row_census_brute)
from .rows import Row, bubble_segment_counts, row_from_tokens

__version__ = "0.1.0"

__all__ = [
    "Hypergraph", "HypergraphError", "parse_hypergraph", "render_hypergraph",
    "load_hypergraph", "subset_reduced", "superset_reduced",
    "Row", "row_from_tokens", "bubble_segment_counts",
    "WorkItem", "RunStats", "RowFamily", "impose", "is_feasible",
    "is_extra_feasible", "run",
    "Infeasible", "Spectrum", "count_total", "spectrum", "count_at_least",
    "transversal_number", "transversals_of_size", "filter_family",
    "brute_transversals", "inclusion_exclusion_count", "bell_numbers",
    "row_census", "row_census_brute", "all_rows",
    "__version__",
]
