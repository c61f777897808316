"""Brute-force oracles that verify the closed forms on desk-scale
instances, plus the approximate-containment predicates used by the
stability analysis.

The Turan oracle searches stable families only.  That is lossless:
stabilization preserves the edge count and never increases the matching
number, so some extremal family is stable.  Stable families are exactly
the downward-closed sets in the componentwise dominance order on
k-subsets, and colex order is a linear extension of dominance, so a
single include/exclude scan over the k-subsets in colex order enumerates
each stable family exactly once.

Instance-size guards are hard errors (:class:`InstanceTooLargeError`),
not warnings - these searches are exponential and the caps mark the edge
of what finishes on one core in minutes.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Union

from .certificates import Certificate
from .constructions import clique_family, cover_family
from .hypergraph import (
    UniformHypergraph,
    colex_masks,
    mask_edge,
    matching_number,
    min_degree,
    neighborhood,
    _matching_search,
    _matching_number_with_stats,
)

__all__ = [
    "InstanceTooLargeError",
    "TURAN_ORACLE_MAX_EDGES",
    "CROSS_ORACLE_MAX_SETS",
    "brute_turan_stable",
    "brute_cross_intersecting_max",
    "brute_cross_intersecting_extremal",
    "epsilon_contains",
    "theta_good_vertices",
    "certify_min_degree_matching",
]


class InstanceTooLargeError(RuntimeError):
    """Raised when a brute-force oracle is asked for an instance beyond
    its hard cap."""


TURAN_ORACLE_MAX_EDGES = 120
# 2^22 include/exclude leaves is the edge of comfortable; this keeps the
# documented (7,2) cross-intersecting instance legal while rejecting (7,3)
CROSS_ORACLE_MAX_SETS = 22


def _dominates(a: tuple, b: tuple) -> bool:
    # componentwise on ascending tuples: is a <= b?
    return all(x <= y for x, y in zip(a, b))


def brute_turan_stable(n: int, k: int, s: int) -> int:
    """Exact max edge count of a k-graph on [n] with matching number <= s,
    found by exhaustive search over stable families.

    Candidates are scanned in colex order; a k-set may be included only if
    every dominance-predecessor is already in (excluding a set kills all
    its dominance-successors).  Including a set is also vetoed when the
    family would acquire an (s+1)-matching.  The best-known bound starts
    at the larger of the two explicit constructions, which are both
    stable, so the search only has to certify optimality.
    """
    if k < 2:
        raise ValueError(f"uniformity must be at least 2, got {k}")
    if n < 0 or s < 0:
        raise ValueError("n and s must be non-negative")
    total = comb(n, k)
    if total > TURAN_ORACLE_MAX_EDGES:
        raise InstanceTooLargeError(
            f"C({n},{k}) = {total} exceeds the oracle cap of "
            f"{TURAN_ORACLE_MAX_EDGES} candidate edges"
        )
    if s >= n // k:
        # no (s+1)-matching fits in [n] at all
        return total

    cands = list(colex_masks(n, k))
    tuples = [mask_edge(m) for m in cands]
    N = len(cands)

    # succ[i]: bitmask (over candidate indices) of the strict dominance
    # successors of candidate i, plus i itself; excluding i kills them all
    succ = [0] * N
    for i in range(N):
        acc = 1 << i
        for j in range(i + 1, N):
            if _dominates(tuples[i], tuples[j]):
                acc |= 1 << j
        succ[i] = acc

    best = 0
    seed = cover_family(n, k, s)
    best = seed.edge_count
    if k * (s + 1) - 1 <= n:
        best = max(best, clique_family(n, k, s).edge_count)

    family: list[int] = []
    # multiset of footprints of s-matchings inside the current family;
    # only maintained on the fast path (s == 2), where adding edge m is
    # legal iff no footprint avoids m
    footprints: dict[int, int] = {}

    def may_include(m: int) -> bool:
        if s == 2:
            return all(fp & m for fp in footprints)
        if s == 1:
            return all(f & m for f in family)
        return _matching_search(
            [f for f in family if f & m == 0], k, target=s
        ) < s

    def push(m: int) -> list[int]:
        added = []
        if s == 2:
            for f in family:
                if f & m == 0:
                    fp = f | m
                    footprints[fp] = footprints.get(fp, 0) + 1
                    added.append(fp)
        family.append(m)
        return added

    def pop(added: list[int]) -> None:
        family.pop()
        for fp in added:
            left = footprints[fp] - 1
            if left:
                footprints[fp] = left
            else:
                del footprints[fp]

    def search(t: int, dead: int, count: int) -> None:
        nonlocal best
        while t < N and (dead >> t) & 1:
            t += 1
        if t == N:
            if count > best:
                best = count
            return
        if count + (N - t) - (dead >> t).bit_count() <= best:
            return
        m = cands[t]
        if may_include(m):
            added = push(m)
            search(t + 1, dead, count + 1)
            pop(added)
        search(t + 1, dead | succ[t], count)

    search(0, 0, 0)
    return best


def brute_cross_intersecting_max(m: int, ell: int) -> int:
    """Exact maximum of |A| + |B| over pairs of nonempty cross-intersecting
    families of ell-subsets of [m], for m > 2*ell.

    For each nonempty A (grown by include/exclude over the ell-sets), the
    best partner is forced: B(A) = all ell-sets meeting every member of A.
    The search prunes on |A| + |remaining| + |B(A)|.
    """
    _check_cross_params(m, ell)
    sets = list(colex_masks(m, ell))
    N = len(sets)
    # meets[i]: bitmask over set indices of the ell-sets intersecting sets[i]
    meets = []
    for a in sets:
        acc = 0
        for idx, b in enumerate(sets):
            if a & b:
                acc |= 1 << idx
        meets.append(acc)

    full = (1 << N) - 1
    best = 0

    def search(idx: int, count: int, partner: int) -> None:
        nonlocal best
        if partner == 0:
            return  # B must stay nonempty
        if count + (N - idx) + partner.bit_count() <= best:
            return
        if idx == N:
            if count:
                best = max(best, count + partner.bit_count())
            return
        search(idx + 1, count + 1, partner & meets[idx])
        search(idx + 1, count, partner)

    search(0, 0, full)
    return best


def brute_cross_intersecting_extremal(
    m: int, ell: int
) -> tuple[int, list[tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]]]:
    """Like :func:`brute_cross_intersecting_max`, but also return every
    maximizing pair (A, B(A)) with members spelled out, for structure
    checks.  Plain enumeration, so the cap is tighter."""
    _check_cross_params(m, ell)
    sets = list(colex_masks(m, ell))
    N = len(sets)
    if N > 16:
        raise InstanceTooLargeError(
            f"extremal enumeration needs C({m},{ell}) <= 16, got {N}"
        )
    meets = []
    for a in sets:
        acc = 0
        for idx, b in enumerate(sets):
            if a & b:
                acc |= 1 << idx
        meets.append(acc)

    full = (1 << N) - 1
    scored = []
    for amask in range(1, 1 << N):
        partner = full
        rest = amask
        while rest:
            low = rest & -rest
            partner &= meets[low.bit_length() - 1]
            rest ^= low
        if partner:
            scored.append((amask.bit_count() + partner.bit_count(), amask, partner))
    best = max(score for score, _, _ in scored)

    def unpack(mask: int) -> tuple[tuple[int, ...], ...]:
        out = []
        while mask:
            low = mask & -mask
            out.append(mask_edge(sets[low.bit_length() - 1]))
            mask ^= low
        return tuple(out)

    winners = [
        (unpack(amask), unpack(partner))
        for score, amask, partner in scored
        if score == best
    ]
    return best, winners


def _check_cross_params(m: int, ell: int) -> None:
    if ell < 1:
        raise ValueError(f"member size must be positive, got {ell}")
    if m <= 2 * ell:
        raise ValueError(f"need m > 2*ell, got m={m}, ell={ell}")
    if comb(m, ell) > CROSS_ORACLE_MAX_SETS:
        raise InstanceTooLargeError(
            f"C({m},{ell}) = {comb(m, ell)} exceeds the oracle cap of "
            f"{CROSS_ORACLE_MAX_SETS} candidate sets"
        )


def epsilon_contains(
    H1: UniformHypergraph,
    H2: UniformHypergraph,
    eps: Union[Fraction, int, str],
) -> bool:
    """True iff all but at most eps * n^k edges of H1 appear in H2
    (H2 approximately contains H1).  ``eps`` is exact-rational; the
    comparison |E(H1) - E(H2)| <= eps * n^k is done without rounding.
    """
    if H1.n != H2.n or H1.k != H2.k:
        raise ValueError("both hypergraphs must share n and k")
    eps = Fraction(eps)
    missing = len(H1.edge_set() - H2.edge_set())
    return missing <= eps * Fraction(H1.n) ** H1.k


def theta_good_vertices(
    H: UniformHypergraph,
    href: UniformHypergraph,
    theta: Union[Fraction, int, str],
) -> tuple[int, ...]:
    """Vertices v whose link in the reference graph exceeds their link in
    H by at most theta * n^(k-1) sets - the ones H represents well."""
    if H.n != href.n or H.k != href.k:
        raise ValueError("both hypergraphs must share n and k")
    theta = Fraction(theta)
    allowance = theta * Fraction(H.n) ** (H.k - 1)
    good = []
    for v in range(1, H.n + 1):
        mine = set(neighborhood(H, v).members)
        refs = set(neighborhood(href, v).members)
        if len(refs - mine) <= allowance:
            good.append(v)
    return tuple(good)


def certify_min_degree_matching(H: UniformHypergraph, s: int) -> Certificate:
    """Check one instance of the minimum-degree matching threshold for
    3-graphs: if delta_1(H) > C(n-1,2) - C(n-s,2) then nu(H) >= s.

    The hypothesis is tested exactly; when it holds, the conclusion is
    verified by the exact solver rather than trusted (the theorem is
    asymptotic in n).  Verdict true means hypothesis and conclusion both
    checked out; the parameters record the margin and the solver's answer
    either way.
    """
    if H.k != 3:
        raise ValueError(f"the degree threshold is 3-uniform only, got k={H.k}")
    if s < 1:
        raise ValueError(f"target matching size must be positive, got {s}")
    t0 = time.perf_counter()
    delta = min_degree(H)
    threshold = comb(H.n - 1, 2) - comb(max(H.n - s, 0), 2)
    hypothesis = delta > threshold
    value, nodes = _matching_number_with_stats(H)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return Certificate(
        claim="min-degree threshold forces an s-matching",
        parameters={
            "n": H.n,
            "k": H.k,
            "s": s,
            "min_degree": delta,
            "threshold": threshold,
            "margin": delta - threshold,
            "hypothesis_met": hypothesis,
            "matching_number": value,
        },
        search_size=nodes,
        verdict=hypothesis and value >= s,
        elapsed_ms=elapsed,
    )
