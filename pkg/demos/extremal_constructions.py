"""Tour of the extremal families with a given matching number.

Two shapes compete for the most edges once a k-graph on [n] is forbidden
an (s+1)-matching: cover everything with s vertices, or cram everything
into k(s+1) - 1 vertices.  This script builds both across a sweep of s,
shows where the lead changes hands, and finishes with the two odder
constructions: the spiked clique and greedy saturation.
"""

from antiramsey import (
    UniformHypergraph,
    certify_saturated,
    clique_family,
    cover_family,
    crossover_index,
    matching_number,
    saturate,
    spiked_clique,
)


def main() -> None:
    n, k = 30, 3
    print(f"cover vs clique on n = {n}, k = {k}")
    print(f"{'s':>3} {'cover':>8} {'clique':>8}  leader")
    s0 = crossover_index(n, k)
    for s in range(1, 10):
        cover = cover_family(n, k, s).edge_count
        try:
            clique = clique_family(n, k, s).edge_count
        except ValueError:
            clique = None
        leader = "cover" if (clique is None or cover > clique) else "clique"
        mark = "  <- crossover" if s == s0 else ""
        print(f"{s:>3} {cover:>8} {clique if clique is not None else '-':>8}  {leader}{mark}")
    print(f"first s where the clique family catches up: {s0}\n")

    print("spiked clique on 9 vertices, matching number 2:")
    S = spiked_clique(9, 2)
    print(f"  {S.edge_count} edges (clique on 7 vertices has only 35)")
    print(f"  matching number = {matching_number(S)}")
    print(f"  support = {S.support()} -- too wide for any clique family")
    spikes = [e for e in S.edges if e[-1] > 7]
    print(f"  spikes through vertex 1: {spikes[:4]} ... ({len(spikes)} total)\n")

    print("greedy saturation from the empty 3-graph on 6 vertices, s = 1:")
    sat = saturate(UniformHypergraph.empty(6, 3), 1)
    print(f"  settles on {sat.edge_count} edges: {sat.edges}")
    print("  (exactly the clique on the first five vertices)")
    print(f"  certified saturated: {certify_saturated(sat, 1).verdict}")


if __name__ == "__main__":
    main()
