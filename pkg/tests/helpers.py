"""Shared test utilities: tiny independent oracles and random instances.

The oracles here are deliberately naive (subset enumeration, no pruning)
so they share no code or ideas with the library's branch-and-bound
solvers; agreement between the two is evidence, not tautology.
"""

from itertools import combinations
from random import Random

from antiramsey import UniformHypergraph


def brute_matching_number(H: UniformHypergraph) -> int:
    """Largest set of pairwise disjoint edges, by trying every edge subset
    from the theoretical maximum size downward."""
    edges = [frozenset(e) for e in H.edges]
    for size in range(H.n // H.k, 0, -1):
        for combo in combinations(edges, size):
            union = set()
            for e in combo:
                union |= e
            if len(union) == size * H.k:
                return size
    return 0


def brute_clique_number(H: UniformHypergraph) -> int:
    """Largest vertex set whose k-subsets are all edges, by trying every
    subset of the support from the top down.  0 when there are no edges."""
    if not H.edges:
        return 0
    eset = H.edge_set()
    support = H.support()
    for size in range(len(support), H.k - 1, -1):
        for cand in combinations(support, size):
            if all(sub in eset for sub in combinations(cand, H.k)):
                return size
    return H.k


def random_hypergraph(rng: Random, n: int, k: int, p: float) -> UniformHypergraph:
    """Each k-subset of [n] kept independently with probability p."""
    edges = [e for e in combinations(range(1, n + 1), k) if rng.random() < p]
    return UniformHypergraph.from_edges(n, k, edges)


def random_coloring_colors(rng: Random, count: int, palette: int) -> tuple:
    """`count` colors drawn uniformly from {0, ..., palette-1}."""
    return tuple(rng.randrange(palette) for _ in range(count))
