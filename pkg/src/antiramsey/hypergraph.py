"""Canonical k-uniform hypergraphs and exact desk-scale solvers.

Vertices are the 1-based integers 1..n with a hard cap of n <= 64, so a
vertex subset always fits a single machine word: bit ``v - 1`` stands for
vertex ``v``.  Edges are k-element subsets stored as ascending tuples and
kept in colexicographic order, which for bitmasks is plain numeric order.
Every solver in this module is exact and deterministic; instances are
small enough that branch-and-bound over word-sized masks is all we need.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64

__all__ = [
    "MAX_VERTICES",
    "UniformHypergraph",
    "Matching",
    "SetFamily",
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
]


def edge_mask(edge: Iterable[int]) -> int:
    """Pack a collection of 1-based vertices into a bitmask."""
    m = 0
    for v in edge:
        m |= 1 << (v - 1)
    return m


def mask_edge(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into the ascending tuple of its 1-based vertices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def colex_masks(n: int, k: int) -> Iterator[int]:
    """Yield the masks of all k-subsets of [n] in colexicographic order.

    Colex order on equal-size sets coincides with numeric order of their
    bitmasks, so Gosper's hack walks the subsets in exactly the order the
    rest of the library assumes.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


def colex_rank(edge: Sequence[int]) -> int:
    """0-based position of an ascending k-tuple in colex order."""
    return sum(comb(v - 1, i + 1) for i, v in enumerate(edge))


def _check_vertex_count(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise ValueError(
            f"vertex count {n} exceeds the hard cap of {MAX_VERTICES} "
            "(edges are single-word bitmasks)"
        )


@dataclass(frozen=True)
class UniformHypergraph:
    """A k-uniform hypergraph on vertex set {1, ..., n}.

    ``edges`` is the canonical representation: strictly ascending k-tuples,
    listed in colexicographic order, duplicate-free.  Construct through
    :meth:`from_edges` unless the input is already canonical.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_vertex_count(self.n)
        if self.k < 2:
            raise ValueError(f"uniformity must be at least 2, got {self.k}")
        prev = -1
        for e in self.edges:
            if len(e) != self.k:
                raise ValueError(f"edge {e} is not a {self.k}-set")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise ValueError(f"edge {e} is not strictly ascending")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"edge {e} leaves the vertex range [1, {self.n}]")
            m = edge_mask(e)
            if m <= prev:
                raise ValueError("edges must be in colex order without duplicates")
            prev = m

    @classmethod
    def from_edges(
        cls, n: int, k: int, edges: Iterable[Iterable[int]]
    ) -> "UniformHypergraph":
        """Normalize arbitrary edge input into the canonical form.

        Each edge is sorted; the edge list is colex-sorted.  Duplicate
        edges are rejected rather than silently merged.
        """
        canon = [tuple(sorted(e)) for e in edges]
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate edges are forbidden")
        canon.sort(key=edge_mask)
        return cls(n, k, tuple(canon))

    @classmethod
    def complete(cls, n: int, k: int) -> "UniformHypergraph":
        """The complete k-graph on [n]."""
        _check_vertex_count(n)
        return cls(n, k, tuple(mask_edge(m) for m in colex_masks(n, k)))

    @classmethod
    def empty(cls, n: int, k: int) -> "UniformHypergraph":
        return cls(n, k, ())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def masks(self) -> list[int]:
        return [edge_mask(e) for e in self.edges]

    def contains_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self.edge_set()

    def support(self) -> tuple[int, ...]:
        """Vertices incident to at least one edge, ascending."""
        m = 0
        for e in self.masks():
            m |= e
        return mask_edge(m)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, kept in colex order."""

    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = 0
        prev = -1
        for e in self.edges:
            m = edge_mask(e)
            if m & seen:
                raise ValueError("matching edges must be pairwise disjoint")
            if m <= prev:
                raise ValueError("matching edges must be in colex order")
            seen |= m
            prev = m

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> tuple[int, ...]:
        m = 0
        for e in self.edges:
            m |= edge_mask(e)
        return mask_edge(m)

    def is_perfect(self, n: int) -> bool:
        return sum(len(e) for e in self.edges) == n


@dataclass(frozen=True)
class SetFamily:
    """A family of ell-subsets of {1, ..., m} (used for link/neighborhood
    families and cross-intersecting checks)."""

    m: int
    ell: int
    members: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_vertex_count(self.m)
        if self.ell < 1 or self.ell > self.m:
            raise ValueError(f"member size {self.ell} out of range for m={self.m}")
        prev = -1
        for f in self.members:
            if len(f) != self.ell:
                raise ValueError(f"member {f} is not an {self.ell}-set")
            if f[0] < 1 or f[-1] > self.m or any(
                f[i] >= f[i + 1] for i in range(len(f) - 1)
            ):
                raise ValueError(f"member {f} is not an ascending subset of [1, {self.m}]")
            w = edge_mask(f)
            if w <= prev:
                raise ValueError("members must be in colex order without duplicates")
            prev = w

    @classmethod
    def from_members(cls, m: int, ell: int, members: Iterable[Iterable[int]]) -> "SetFamily":
        canon = [tuple(sorted(f)) for f in members]
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate members are forbidden")
        canon.sort(key=edge_mask)
        return cls(m, ell, tuple(canon))

    @property
    def size(self) -> int:
        return len(self.members)


# ---------------------------------------------------------------------------
# exact solvers
# ---------------------------------------------------------------------------


def _matching_search(
    masks: Sequence[int],
    k: int,
    target: Optional[int] = None,
    stats: Optional[list] = None,
) -> int:
    """Exact maximum-matching search over bitmask edges.

    Branch on the lowest-indexed vertex still incident to an available
    edge: either match it through one of its edges (tried in colex order)
    or discard it.  ``depth + min(#edges, |support| // k)`` is the greedy
    upper bound used for pruning.  With ``target`` set, the search stops
    as soon as a matching of that size is found.  ``stats[0]``, when
    given, accumulates the number of search nodes visited.
    """
    best = 0

    def visit(avail: list, depth: int) -> bool:
        nonlocal best
        if stats is not None:
            stats[0] += 1
        if depth > best:
            best = depth
        if target is not None and best >= target:
            return True
        if not avail:
            return False
        supp = 0
        for m in avail:
            supp |= m
        bound = depth + min(len(avail), supp.bit_count() // k)
        if target is None:
            if bound <= best:
                return False
        elif bound < target:
            return False
        low = supp & -supp
        for e in avail:
            if e & low:
                if visit([f for f in avail if not f & e], depth + 1):
                    return True
        return visit([f for f in avail if not f & low], depth)

    visit(list(masks), 0)
    return best


def matching_number(H: UniformHypergraph) -> int:
    """nu(H): the maximum number of pairwise disjoint edges."""
    return _matching_search(H.masks(), H.k)


def has_matching_of_size(H: UniformHypergraph, s: int) -> bool:
    """True iff H contains s pairwise disjoint edges (early-exit search)."""
    if s < 0:
        raise ValueError(f"matching size must be non-negative, got {s}")
    if s == 0:
        return True
    return _matching_search(H.masks(), H.k, target=s) >= s


def _matching_number_with_stats(H: UniformHypergraph) -> tuple[int, int]:
    stats = [0]
    value = _matching_search(H.masks(), H.k, stats=stats)
    return value, stats[0]


def clique_number(H: UniformHypergraph) -> int:
    """Largest |U| such that every k-subset of U is an edge of H.

    Subsets smaller than k are complete only vacuously, so by convention
    the answer is 0 when H has no edges and at least k otherwise.
    """
    if not H.edges:
        return 0
    k = H.k
    eset = set(H.masks())
    best = k

    def extends(u: tuple, v: int) -> bool:
        if len(u) < k - 1:
            return True
        vb = 1 << (v - 1)
        return all(edge_mask(f) | vb in eset for f in combinations(u, k - 1))

    def grow(u: tuple, cands: tuple) -> None:
        nonlocal best
        if len(u) > best:
            best = len(u)
        for i, v in enumerate(cands):
            if len(u) + len(cands) - i <= best:
                break
            if extends(u, v):
                grow(u + (v,), cands[i + 1 :])

    grow((), H.support())
    return best


def degree(H: UniformHypergraph, v: int) -> int:
    """Number of edges containing vertex v."""
    if not 1 <= v <= H.n:
        raise ValueError(f"vertex {v} out of range [1, {H.n}]")
    bit = 1 << (v - 1)
    return sum(1 for m in H.masks() if m & bit)


def min_degree(H: UniformHypergraph) -> int:
    """Minimum vertex degree delta_1(H); 0 for a graph with no vertices."""
    if H.n == 0:
        return 0
    masks = H.masks()
    return min(
        sum(1 for m in masks if m & (1 << (v - 1))) for v in range(1, H.n + 1)
    )


def neighborhood(H: UniformHypergraph, v: int) -> SetFamily:
    """The link of v: all (k-1)-sets f with f + {v} an edge of H."""
    if not 1 <= v <= H.n:
        raise ValueError(f"vertex {v} out of range [1, {H.n}]")
    members = [tuple(w for w in e if w != v) for e in H.edges if v in e]
    return SetFamily.from_members(H.n, H.k - 1, members)


def induced(H: UniformHypergraph, vertices: Iterable[int]) -> UniformHypergraph:
    """Keep only edges inside ``vertices``.  Vertex ids and n are unchanged;
    vertices outside the set simply become isolated."""
    vs = set(vertices)
    if not vs <= set(range(1, H.n + 1)):
        raise ValueError("induced set must be a subset of the vertex range")
    keep = edge_mask(vs)
    return UniformHypergraph(
        H.n, H.k, tuple(e for e in H.edges if edge_mask(e) & ~keep == 0)
    )


def remove_vertices(H: UniformHypergraph, vertices: Iterable[int]) -> UniformHypergraph:
    """Drop every edge meeting ``vertices`` (ids and n are preserved)."""
    vs = set(vertices)
    if not vs <= set(range(1, H.n + 1)):
        raise ValueError("removed set must be a subset of the vertex range")
    gone = edge_mask(vs)
    return UniformHypergraph(
        H.n, H.k, tuple(e for e in H.edges if edge_mask(e) & gone == 0)
    )


def remove_edges(H: UniformHypergraph, edges: Iterable[Iterable[int]]) -> UniformHypergraph:
    """Remove the given edges; every one of them must be present."""
    doomed = {tuple(sorted(e)) for e in edges}
    missing = doomed - H.edge_set()
    if missing:
        raise ValueError(f"cannot remove absent edges: {sorted(missing)}")
    return UniformHypergraph(H.n, H.k, tuple(e for e in H.edges if e not in doomed))


def is_intersecting(family: SetFamily) -> bool:
    """True iff every two members share an element (vacuous below 2 members)."""
    masks = [edge_mask(f) for f in family.members]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j] == 0:
                return False
    return True


def are_cross_intersecting(A: SetFamily, B: SetFamily) -> bool:
    """True iff every member of A meets every member of B."""
    if A.m != B.m:
        raise ValueError(f"ground sets differ: m={A.m} vs m={B.m}")
    amasks = [edge_mask(f) for f in A.members]
    bmasks = [edge_mask(f) for f in B.members]
    return all(a & b for a in amasks for b in bmasks)
