"""(i,j)-compressions, full stabilization, and stability predicates.

The (i,j)-shift moves an edge e with j in e, i not in e down to
e - {j} + {i} unless that target is already an edge, in which case e is
left alone.  Applied to a whole family the map is injective, so the edge
count is preserved; the matching number never increases.  A family fixed
by every shift with i < j is called stable, which is equivalent to being
downward closed under componentwise dominance of sorted vertex tuples.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .hypergraph import UniformHypergraph, edge_mask

__all__ = [
    "shift_edge",
    "shift",
    "stabilize",
    "is_stable",
    "is_dominance_closed",
]


def _check_pair(H: UniformHypergraph, i: int, j: int) -> None:
    if i >= j:
        raise ValueError(f"shift indices must satisfy i < j, got i={i}, j={j}")
    if i < 1 or j > H.n:
        raise ValueError(f"shift indices ({i}, {j}) out of range [1, {H.n}]")


def _shifted(edge: tuple, i: int, j: int, edge_set: frozenset) -> tuple:
    # the shift rule itself; membership is tested against the family the
    # edge came from, never against a partially rewritten one
    if j in edge and i not in edge:
        target = tuple(sorted((set(edge) - {j}) | {i}))
        if target not in edge_set:
            return target
    return edge


def shift_edge(H: UniformHypergraph, i: int, j: int, edge: Iterable[int]) -> tuple:
    """Image of one edge of H under the (i,j)-shift."""
    _check_pair(H, i, j)
    e = tuple(sorted(edge))
    eset = H.edge_set()
    if e not in eset:
        raise ValueError(f"{e} is not an edge of the hypergraph")
    return _shifted(e, i, j, eset)


def shift(H: UniformHypergraph, i: int, j: int) -> UniformHypergraph:
    """Apply the (i,j)-shift to every edge of H simultaneously.

    The rule is injective on families, so the result has exactly as many
    edges as H (``from_edges`` would reject any collision).
    """
    _check_pair(H, i, j)
    eset = H.edge_set()
    return UniformHypergraph.from_edges(
        H.n, H.k, (_shifted(e, i, j, eset) for e in H.edges)
    )


def stabilize(
    H: UniformHypergraph, trace: Optional[list] = None
) -> UniformHypergraph:
    """Apply (i,j)-shifts in lexicographic (i,j) sweeps until no shift
    changes the family.

    Termination: every effective shift strictly decreases the total vertex
    sum over all edges.  When ``trace`` is a list, a ``(i, j, moved)``
    triple is appended for every shift that moved ``moved`` edges, in the
    order applied; this is the sweep log referenced by certificates.
    """
    cur = H
    while True:
        changed = False
        for i in range(1, cur.n):
            for j in range(i + 1, cur.n + 1):
                nxt = shift(cur, i, j)
                if nxt.edges != cur.edges:
                    if trace is not None:
                        moved = len(set(nxt.edges) - set(cur.edges))
                        trace.append((i, j, moved))
                    cur = nxt
                    changed = True
        if not changed:
            return cur


def is_stable(H: UniformHypergraph) -> bool:
    """Definition-literal check: every (i,j)-shift with i < j fixes H."""
    for i in range(1, H.n):
        for j in range(i + 1, H.n + 1):
            if shift(H, i, j).edges != H.edges:
                return False
    return True


def is_dominance_closed(H: UniformHypergraph) -> bool:
    """Alternative stability oracle via dominance downward closure.

    H is stable iff for every edge (v_1 < ... < v_k), lowering any single
    v to v - 1 (when v - 1 is free and positive) lands on another edge.
    Single-step lowerings generate the full componentwise dominance order,
    so checking covers suffices.
    """
    eset = set(H.masks())
    for e in H.edges:
        in_e = set(e)
        for pos, v in enumerate(e):
            w = v - 1
            if w >= 1 and w not in in_e:
                lowered = e[:pos] + (w,) + e[pos + 1 :]
                if edge_mask(lowered) not in eset:
                    return False
    return True
