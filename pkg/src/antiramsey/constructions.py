"""Extremal families with matching number s, greedy saturation, and
membership tests for the two extremal shapes.

Three explicit families recur throughout the library:

* the clique family - all k-subsets of a fixed (k(s+1)-1)-set, which has
  matching number s simply because a (s+1)-matching needs k(s+1) vertices;
* the cover family - all k-subsets meeting a fixed s-set, whose matching
  number is s because the s-set is a vertex cover;
* the spiked clique (k = 3 only) - the complete 3-graph on {1..3s+1} plus,
  for every outside vertex i, all triples {1, x, i} with 2 <= x <= 3s+1.
  It has matching number s and one more edge per outside vertex than any
  subgraph of a clique family can manage, which is what makes it the
  tightness example for stability statements.

Both guaranteed matching numbers assume the family actually fits, i.e.
n >= k(s+1) - 1; the builders accept any n that is structurally valid and
leave the nu = s guarantee to the caller below that threshold.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .hypergraph import (
    UniformHypergraph,
    colex_masks,
    edge_mask,
    mask_edge,
    _matching_search,
)

__all__ = [
    "ConstructionSpec",
    "clique_family",
    "cover_family",
    "spiked_clique",
    "saturate",
    "is_subgraph_of_clique_family",
    "is_subgraph_of_cover_family",
]


def clique_family(
    n: int, k: int, s: int, U: Optional[Iterable[int]] = None
) -> UniformHypergraph:
    """All k-subsets of U, where |U| = k(s+1) - 1 (default: {1, ..., k(s+1)-1}).

    Has C(k(s+1)-1, k) edges and matching number exactly s whenever it fits
    (an (s+1)-matching would need k(s+1) vertices, and U is one short).
    """
    if s < 0:
        raise ValueError(f"matching parameter must be non-negative, got {s}")
    size = k * (s + 1) - 1
    if U is None:
        if size > n:
            raise ValueError(
                f"clique family needs {size} vertices, only n={n} available"
            )
        U = range(1, size + 1)
    verts = sorted(set(U))
    if len(verts) != size:
        raise ValueError(f"U must contain exactly k(s+1)-1 = {size} distinct vertices")
    if verts and (verts[0] < 1 or verts[-1] > n):
        raise ValueError(f"U must be a subset of [1, {n}]")
    return UniformHypergraph.from_edges(n, k, combinations(verts, k))


def cover_family(
    n: int, k: int, s: int, W: Optional[Iterable[int]] = None
) -> UniformHypergraph:
    """All k-subsets of [n] meeting W, where |W| = s (default: {1, ..., s}).

    Has C(n,k) - C(n-s,k) edges; W is a vertex cover, so the matching
    number is at most s, with equality whenever n >= k(s+1) - 1.
    """
    if s < 0:
        raise ValueError(f"cover size must be non-negative, got {s}")
    if s > n:
        raise ValueError(f"cover size {s} exceeds n={n}")
    if W is None:
        W = range(1, s + 1)
    verts = sorted(set(W))
    if len(verts) != s:
        raise ValueError(f"W must contain exactly s = {s} distinct vertices")
    if verts and (verts[0] < 1 or verts[-1] > n):
        raise ValueError(f"W must be a subset of [1, {n}]")
    wmask = edge_mask(verts)
    edges = [mask_edge(m) for m in colex_masks(n, k) if m & wmask]
    return UniformHypergraph(n, k, tuple(edges))


def spiked_clique(n: int, s: int) -> UniformHypergraph:
    """The 3-uniform tightness example on [n]: a complete clique on
    {1, ..., 3s+1} plus the triples {1, x, i} for each i > 3s+1 and
    2 <= x <= 3s+1.

    Requires n >= 3s + 2 so that at least one spike exists.  Edge count is
    C(3s+1, 3) + 3s(n - 3s - 1); the matching number is s.
    """
    if s < 1:
        raise ValueError(f"matching parameter must be positive, got {s}")
    if n < 3 * s + 2:
        raise ValueError(f"spiked clique needs n >= 3s+2 = {3 * s + 2}, got n={n}")
    edges = list(combinations(range(1, 3 * s + 2), 3))
    for i in range(3 * s + 2, n + 1):
        for x in range(2, 3 * s + 2):
            edges.append((1, x, i))
    return UniformHypergraph.from_edges(n, 3, edges)


def saturate(H: UniformHypergraph, s: int) -> UniformHypergraph:
    """Greedy s-saturation: scan the absent k-subsets of [n] in colex order
    and add each one that keeps the matching number at most s.

    The result is s-saturated: adding any still-absent edge creates an
    (s+1)-matching.  One pass suffices because matching numbers only grow
    as edges are added, so an edge rejected early stays rejectable.
    """
    if s < 0:
        raise ValueError(f"saturation level must be non-negative, got {s}")
    masks = H.masks()
    if _matching_search(masks, H.k, target=s + 1) > s:
        raise ValueError(f"hypergraph already has a matching larger than {s}")
    present = set(masks)
    k = H.k
    for cand in colex_masks(H.n, k):
        if cand in present:
            continue
        # adding cand creates an (s+1)-matching iff the current family has
        # an s-matching avoiding cand's vertices
        avoiding = [m for m in masks if m & cand == 0]
        if _matching_search(avoiding, k, target=s) < s:
            present.add(cand)
            masks.append(cand)
    return UniformHypergraph.from_edges(H.n, H.k, (mask_edge(m) for m in present))


def is_subgraph_of_clique_family(H: UniformHypergraph, s: int) -> bool:
    """True iff H fits inside some clique family with parameter s, i.e.
    the support of H spans at most k(s+1) - 1 vertices."""
    if s < 0:
        raise ValueError(f"matching parameter must be non-negative, got {s}")
    return len(H.support()) <= H.k * (s + 1) - 1


def is_subgraph_of_cover_family(H: UniformHypergraph, s: int) -> bool:
    """True iff some s-set of vertices meets every edge of H (exact
    branch-and-bound on the first uncovered edge)."""
    if s < 0:
        raise ValueError(f"cover size must be non-negative, got {s}")

    def covered(masks: list, budget: int) -> bool:
        if not masks:
            return True
        if budget == 0:
            return False
        first = masks[0]
        while first:
            low = first & -first
            if covered([m for m in masks if m & low == 0], budget - 1):
                return True
            first ^= low
        return False

    return covered(H.masks(), s)


_KINDS = ("D", "Hcover", "DScript")


@dataclass(frozen=True)
class ConstructionSpec:
    """Serializable description of one of the three named constructions.

    ``kind`` is one of ``"D"`` (clique family), ``"Hcover"`` (cover
    family) or ``"DScript"`` (spiked clique); ``U``/``W`` optionally pin
    the clique/cover vertex sets.  JSON layout:
    ``{"kind": ..., "n": ..., "k": ..., "s": ..., "U": [...], "W": [...]}``.
    """

    kind: str
    n: int
    k: int
    s: int
    U: Optional[tuple[int, ...]] = None
    W: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown construction kind {self.kind!r}")
        if self.kind == "D" and self.U is not None:
            if len(self.U) != self.k * (self.s + 1) - 1:
                raise ValueError("kind=D requires |U| = k(s+1) - 1")
        if self.kind == "Hcover" and self.W is not None:
            if len(self.W) != self.s:
                raise ValueError("kind=Hcover requires |W| = s")
        if self.kind == "DScript":
            if self.k != 3:
                raise ValueError("kind=DScript is 3-uniform only")
            if self.n < 3 * self.s + 2:
                raise ValueError("kind=DScript requires n >= 3s + 2")

    def build(self) -> UniformHypergraph:
        if self.kind == "D":
            return clique_family(self.n, self.k, self.s, self.U)
        if self.kind == "Hcover":
            return cover_family(self.n, self.k, self.s, self.W)
        return spiked_clique(self.n, self.s)

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": self.kind,
                "n": self.n,
                "k": self.k,
                "s": self.s,
                "U": list(self.U) if self.U is not None else None,
                "W": list(self.W) if self.W is not None else None,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ConstructionSpec":
        raw = json.loads(text)
        try:
            kind = raw["kind"]
            n, k, s = int(raw["n"]), int(raw["k"]), int(raw["s"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed construction spec: {exc}") from exc
        u = raw.get("U")
        w = raw.get("W")
        return cls(
            kind,
            n,
            k,
            s,
            tuple(u) if u is not None else None,
            tuple(w) if w is not None else None,
        )
