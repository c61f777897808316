"""Exact toolkit for anti-Ramsey and Turan problems on hypergraph matchings.

The package is organized around small exact engines:

- :mod:`antiramsey.hypergraph` — bitmask hypergraphs, matchings, cliques;
- :mod:`antiramsey.shifting` — compression operators and stability tests;
- :mod:`antiramsey.constructions` — extremal families and saturation;
- :mod:`antiramsey.rainbow` — edge colorings and rainbow-matching search;
- :mod:`antiramsey.formulas` — closed forms with validity provenance;
- :mod:`antiramsey.oracle` — desk-scale brute-force cross checks;
- :mod:`antiramsey.fileio` — plain-text serialization;
- :mod:`antiramsey.cli` — the ``antiramsey`` command.

Everything is exact: values are Python ints or :class:`fractions.Fraction`,
never floats, so results are reproducible bit for bit.
"""

from .certificates import (
    Certificate,
    certify_matching_number,
    certify_saturated,
    certify_stable,
)
from .constructions import (
    ConstructionSpec,
    clique_family,
    cover_family,
    is_subgraph_of_clique_family,
    is_subgraph_of_cover_family,
    saturate,
    spiked_clique,
)
from .fileio import (
    ParseError,
    format_coloring,
    format_hypergraph,
    load_coloring,
    load_hypergraph,
    parse_coloring,
    parse_hypergraph,
    save_coloring,
    save_hypergraph,
)
from .formulas import (
    CONJECTURED,
    OUT_OF_RANGE,
    PROVED,
    FormulaResult,
    anti_ramsey_matching_3,
    anti_ramsey_matching_large_n,
    crossover_density,
    crossover_index,
    perfect_matching_lower_bound,
    turan_matching_3,
    turan_matching_conjectured,
)
from .hypergraph import (
    MAX_VERTICES,
    Matching,
    SetFamily,
    UniformHypergraph,
    are_cross_intersecting,
    clique_number,
    colex_masks,
    colex_rank,
    degree,
    edge_mask,
    has_matching_of_size,
    induced,
    is_intersecting,
    mask_edge,
    matching_number,
    min_degree,
    neighborhood,
    remove_edges,
    remove_vertices,
)
from .oracle import (
    CROSS_ORACLE_MAX_SETS,
    TURAN_ORACLE_MAX_EDGES,
    InstanceTooLargeError,
    brute_cross_intersecting_extremal,
    brute_cross_intersecting_max,
    brute_turan_stable,
    certify_min_degree_matching,
    epsilon_contains,
    theta_good_vertices,
)
from .rainbow import (
    EdgeColoring,
    all_distinct_coloring,
    certify_no_rainbow_perfect_matching,
    even_lower_bound_coloring,
    find_rainbow_matching,
    odd_lower_bound_coloring,
    perfect_matching_count,
    turan_plus_one_coloring,
)
from .shifting import is_dominance_closed, is_stable, shift, shift_edge, stabilize

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "TURAN_ORACLE_MAX_EDGES",
    "CROSS_ORACLE_MAX_SETS",
    "PROVED",
    "CONJECTURED",
    "OUT_OF_RANGE",
    "UniformHypergraph",
    "Matching",
    "SetFamily",
    "EdgeColoring",
    "Certificate",
    "ConstructionSpec",
    "FormulaResult",
    "ParseError",
    "InstanceTooLargeError",
    "edge_mask",
    "mask_edge",
    "colex_masks",
    "colex_rank",
    "matching_number",
    "has_matching_of_size",
    "clique_number",
    "degree",
    "min_degree",
    "neighborhood",
    "induced",
    "remove_vertices",
    "remove_edges",
    "is_intersecting",
    "are_cross_intersecting",
    "shift",
    "shift_edge",
    "stabilize",
    "is_stable",
    "is_dominance_closed",
    "clique_family",
    "cover_family",
    "spiked_clique",
    "saturate",
    "is_subgraph_of_clique_family",
    "is_subgraph_of_cover_family",
    "odd_lower_bound_coloring",
    "even_lower_bound_coloring",
    "turan_plus_one_coloring",
    "all_distinct_coloring",
    "find_rainbow_matching",
    "perfect_matching_count",
    "certify_no_rainbow_perfect_matching",
    "turan_matching_3",
    "turan_matching_conjectured",
    "anti_ramsey_matching_3",
    "anti_ramsey_matching_large_n",
    "perfect_matching_lower_bound",
    "crossover_index",
    "crossover_density",
    "brute_turan_stable",
    "brute_cross_intersecting_max",
    "brute_cross_intersecting_extremal",
    "epsilon_contains",
    "theta_good_vertices",
    "certify_min_degree_matching",
    "certify_matching_number",
    "certify_stable",
    "certify_saturated",
    "format_hypergraph",
    "parse_hypergraph",
    "format_coloring",
    "parse_coloring",
    "load_hypergraph",
    "save_hypergraph",
    "load_coloring",
    "save_coloring",
]
