"""Edge colorings of complete k-graphs, rainbow-matching search, and the
exhaustive no-rainbow-perfect-matching certifier.

The two lower-bound colorings mirror the anti-Ramsey constructions for
perfect matchings.  Both split the vertex set into a head U (the first
n-k-1 vertices) and a tail W (the last k+1), give every edge inside U its
own color, group the edges with a designated trace on W into classes that
pairwise meet, and dump everything else into the shared color 0.  A
perfect matching must cover W, and counting traces on W shows it either
repeats color 0 or repeats a class color - so no perfect matching is
rainbow, and the palette size is a lower bound witness.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Iterator, Optional

from .certificates import Certificate
from .constructions import clique_family, cover_family
from .hypergraph import (
    MAX_VERTICES,
    Matching,
    colex_masks,
    colex_rank,
    edge_mask,
    mask_edge,
)

__all__ = [
    "EdgeColoring",
    "odd_lower_bound_coloring",
    "even_lower_bound_coloring",
    "turan_plus_one_coloring",
    "all_distinct_coloring",
    "find_rainbow_matching",
    "certify_no_rainbow_perfect_matching",
    "perfect_matching_count",
]


@dataclass(frozen=True)
class EdgeColoring:
    """A total coloring of the edges of the complete k-graph on [n].

    ``colors[r]`` is the color of the edge with colex rank r; colors are
    non-negative integers.  The palette is whatever set of colors actually
    appears.  Constructions in this module emit canonical palettes
    {0, ..., c-1} with 0 reserved for the catch-all class.
    """

    n: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} out of range [0, {MAX_VERTICES}]")
        if self.k < 2 or self.k > max(self.n, 2):
            raise ValueError(f"uniformity {self.k} out of range for n={self.n}")
        if len(self.colors) != comb(self.n, self.k):
            raise ValueError(
                f"need exactly C({self.n},{self.k}) = {comb(self.n, self.k)} colors, "
                f"got {len(self.colors)}"
            )
        for c in self.colors:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"colors must be non-negative integers, got {c!r}")

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def palette(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.colors)))

    def is_canonical(self) -> bool:
        """True iff the palette is exactly {0, ..., palette_size - 1}."""
        return set(self.colors) == set(range(self.palette_size))

    def color_of(self, edge) -> int:
        e = tuple(sorted(edge))
        if len(e) != self.k or len(set(e)) != self.k:
            raise ValueError(f"{e} is not a {self.k}-set")
        if e[0] < 1 or e[-1] > self.n:
            raise ValueError(f"{e} leaves the vertex range [1, {self.n}]")
        return self.colors[colex_rank(e)]

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """All (edge, color) pairs in colex edge order."""
        for rank, m in enumerate(colex_masks(self.n, self.k)):
            yield mask_edge(m), self.colors[rank]


def _tail_window(n: int, k: int) -> tuple[int, ...]:
    # the last k+1 vertices
    return tuple(range(n - k, n + 1))


def _check_perfect_params(n: int, k: int, parity: int) -> int:
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    if k % 2 != parity:
        want = "odd" if parity else "even"
        raise ValueError(f"this coloring needs {want} k, got k={k}")
    if parity == 0 and k < 4:
        raise ValueError(f"the even-k coloring needs k >= 4, got k={k}")
    if n <= 0 or n % k != 0:
        raise ValueError(f"n must be a positive multiple of k, got n={n}, k={k}")
    s = n // k
    if s < 3:
        raise ValueError(f"need n/k >= 3 disjoint edges, got n/k = {s}")
    return s


def odd_lower_bound_coloring(n: int, k: int) -> EdgeColoring:
    """The rainbow-perfect-matching-free coloring for odd k >= 3, n = ks.

    W is the last k+1 vertices.  Edges inside U = [n] - W get bijective
    colors 1..C(n-k-1, k).  The (k+1)/2-subsets of W containing min(W),
    in colex order, define classes: an edge whose W-trace equals such a
    subset or its complement in W gets that class's color.  Everything
    else is color 0.  Palette: C(n-k-1,k) + C(k+1,(k+1)/2)/2 + 1.
    """
    _check_perfect_params(n, k, 1)
    W = _tail_window(n, k)
    wmask = edge_mask(W)
    half = (k + 1) // 2
    u_count = comb(n - k - 1, k)

    class_of = {}
    for i, rest in enumerate(combinations(W[1:], half - 1), start=1):
        a = edge_mask((W[0],) + rest)
        class_of[a] = u_count + i
        class_of[wmask ^ a] = u_count + i

    colors = []
    next_u = 1
    for m in colex_masks(n, k):
        trace = m & wmask
        if trace == 0:
            colors.append(next_u)  # colex order makes this bijective 1..u_count
            next_u += 1
        else:
            colors.append(class_of.get(trace, 0))
    return EdgeColoring(n, k, tuple(colors))


def even_lower_bound_coloring(n: int, k: int) -> EdgeColoring:
    """The rainbow-perfect-matching-free coloring for even k >= 4, n = ks.

    W is the last k+1 vertices and x = n the distinguished one.  For each
    (k/2 - 1)-subset B of W - {x}, the edges whose W-trace is B + {x} and
    those whose W-trace is the complement W - (B + {x}) share one class
    color.  Edges inside U are bijectively colored; the rest get color 0.
    Palette: C(n-k-1,k) + C(k, k/2-1) + 1.
    """
    _check_perfect_params(n, k, 0)
    W = _tail_window(n, k)
    wmask = edge_mask(W)
    xbit = 1 << (n - 1)
    u_count = comb(n - k - 1, k)

    class_of = {}
    for i, b in enumerate(combinations(W[:-1], k // 2 - 1), start=1):
        with_x = edge_mask(b) | xbit
        class_of[with_x] = u_count + i
        class_of[wmask ^ with_x] = u_count + i

    colors = []
    next_u = 1
    for m in colex_masks(n, k):
        trace = m & wmask
        if trace == 0:
            colors.append(next_u)
            next_u += 1
        else:
            colors.append(class_of.get(trace, 0))
    return EdgeColoring(n, k, tuple(colors))


def turan_plus_one_coloring(n: int, k: int, s: int) -> EdgeColoring:
    """Rainbow colors on an extremal family with no (s-1)-matching, one
    shared color elsewhere: the generic anti-Ramsey lower bound coloring
    showing ar >= ex + 2 for the s-matching.

    The extremal family is the larger of the cover family (cover size
    s-2) and the clique family (clique on k(s-1)-1 vertices, when it
    fits); ties go to the cover family.  For k = 3 that family is the true
    extremal one; for other k it is the conjectured one.
    """
    if k < 2:
        raise ValueError(f"uniformity must be at least 2, got {k}")
    if s < 2:
        raise ValueError(f"matching size must be at least 2, got {s}")
    if n < k * s:
        raise ValueError(f"need n >= ks = {k * s}, got n={n}")
    best = cover_family(n, k, s - 2)
    if k * (s - 1) - 1 <= n:
        club = clique_family(n, k, s - 2)
        if club.edge_count > best.edge_count:
            best = club
    rainbow_ranks = {colex_rank(e): i for i, e in enumerate(best.edges, start=1)}
    colors = [
        rainbow_ranks.get(r, 0) for r in range(comb(n, k))
    ]
    return EdgeColoring(n, k, tuple(colors))


def all_distinct_coloring(n: int, k: int) -> EdgeColoring:
    """Every edge its own color (the trivial rainbow-everything coloring)."""
    return EdgeColoring(n, k, tuple(range(comb(n, k))))


def find_rainbow_matching(coloring: EdgeColoring, s: int) -> Optional[Matching]:
    """Search for s pairwise disjoint edges with pairwise distinct colors.

    DFS over edges in colex order; a branch dies when fewer than k * r
    vertices or fewer than r unused palette colors remain for the r edges
    still needed.  Returns a witness Matching or None.
    """
    if s < 1:
        raise ValueError(f"matching size must be positive, got {s}")
    n, k = coloring.n, coloring.k
    items = [(m, c) for m, c in zip(colex_masks(n, k), coloring.colors)]
    palette = coloring.palette_size
    total = len(items)
    chosen: list[int] = []
    used: set[int] = set()

    def dfs(start: int, covered: int) -> bool:
        need = s - len(chosen)
        if need == 0:
            return True
        if n - covered.bit_count() < k * need:
            return False
        if palette - len(used) < need:
            return False
        for t in range(start, total):
            if total - t < need:
                return False
            m, c = items[t]
            if m & covered or c in used:
                continue
            chosen.append(m)
            used.add(c)
            if dfs(t + 1, covered | m):
                return True
            chosen.pop()
            used.remove(c)
        return False

    if dfs(0, 0):
        return Matching(tuple(mask_edge(m) for m in chosen))
    return None


def perfect_matching_count(n: int, k: int) -> int:
    """Number of perfect matchings of the complete k-graph on [n]:
    n! / ((k!)^(n/k) * (n/k)!)."""
    if n < 0 or k < 1 or n % k != 0:
        raise ValueError(f"need k | n with positive k, got n={n}, k={k}")
    s = n // k
    return factorial(n) // (factorial(k) ** s * factorial(s))


def _count_perfect_matchings(
    n: int, k: int, colors: tuple[int, ...], first: Optional[tuple[int, int]] = None
) -> tuple[int, int]:
    """Enumerate every perfect matching of K_n^(k) (optionally only those
    starting with the given first (mask, color)) and count how many are
    rainbow.  Returns (total, rainbow).

    Matchings are enumerated by always extending through the lowest
    uncovered vertex, so each one is produced exactly once.  The last edge
    of a matching is forced, so the recursion stops one level early and
    looks the complement up directly.
    """
    s = n // k
    full = (1 << n) - 1
    by_min = [[] for _ in range(n + 2)]
    color_by_mask = {}
    for rank, m in enumerate(colex_masks(n, k)):
        c = colors[rank]
        by_min[(m & -m).bit_length()].append((m, c))
        color_by_mask[m] = c

    total = 0
    rainbow = 0
    used: set[int] = set()

    def rec(covered: int, depth: int, dup: bool) -> None:
        nonlocal total, rainbow
        free = full & ~covered
        if depth == s - 1:
            total += 1
            if not dup and color_by_mask[free] not in used:
                rainbow += 1
            return
        v = (free & -free).bit_length()
        for m, c in by_min[v]:
            if m & covered:
                continue
            seen = c in used
            if not seen:
                used.add(c)
            rec(covered | m, depth + 1, dup or seen)
            if not seen:
                used.remove(c)

    if s == 0:
        return 1, 1
    if first is None:
        rec(0, 0, False)
    else:
        m0, c0 = first
        if s == 1:
            return 1, 1
        used.add(c0)
        rec(m0, 1, False)
    return total, rainbow


def _certify_shard(args) -> tuple[int, int]:
    n, k, colors, m0, c0 = args
    return _count_perfect_matchings(n, k, colors, first=(m0, c0))


def certify_no_rainbow_perfect_matching(
    coloring: EdgeColoring, workers: int = 1
) -> Certificate:
    """Enumerate ALL perfect matchings of the complete k-graph and check
    each for a repeated color.  Verdict true means no rainbow perfect
    matching exists.  ``search_size`` is the number of matchings examined
    (always the full count).

    ``workers > 1`` shards the enumeration on the first edge (the one
    through vertex 1) across processes; the counts are summed, so the
    verdict is schedule-independent.
    """
    n, k = coloring.n, coloring.k
    if n == 0 or n % k != 0:
        raise ValueError(f"perfect matchings need k | n, got n={n}, k={k}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    t0 = time.perf_counter()
    if workers == 1:
        total, rainbow = _count_perfect_matchings(n, k, coloring.colors)
    else:
        firsts = [
            (m, c)
            for m, c in zip(colex_masks(n, k), coloring.colors)
            if m & 1
        ]
        tasks = [(n, k, coloring.colors, m, c) for m, c in firsts]
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_certify_shard, tasks, chunksize=chunk))
        total = sum(p[0] for p in parts)
        rainbow = sum(p[1] for p in parts)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return Certificate(
        claim="no rainbow perfect matching",
        parameters={
            "n": n,
            "k": k,
            "palette_size": coloring.palette_size,
            "rainbow_perfect_matchings": rainbow,
        },
        search_size=total,
        verdict=rainbow == 0,
        elapsed_ms=elapsed,
    )
