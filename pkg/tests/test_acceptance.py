"""End-to-end acceptance checks.

Each test covers one headline capability, prints a single
``[ACCEPTANCE] <name>: PASS|FAIL`` line, and asserts every sub-check at
exact (integer / rational) precision — nothing here is approximate.
The verdict lines bypass output capture so they show up in a plain
``pytest -v`` run.
"""

import time
from fractions import Fraction
from math import comb
from random import Random

from antiramsey import (
    UniformHypergraph,
    anti_ramsey_matching_3,
    anti_ramsey_matching_large_n,
    brute_cross_intersecting_max,
    brute_turan_stable,
    certify_matching_number,
    certify_no_rainbow_perfect_matching,
    certify_saturated,
    clique_family,
    crossover_density,
    crossover_index,
    even_lower_bound_coloring,
    is_dominance_closed,
    is_stable,
    is_subgraph_of_clique_family,
    is_subgraph_of_cover_family,
    matching_number,
    odd_lower_bound_coloring,
    perfect_matching_lower_bound,
    saturate,
    shift,
    spiked_clique,
    stabilize,
    turan_matching_3,
    turan_matching_conjectured,
)
from helpers import random_hypergraph


def _verdict(capsys, name, failures, note=""):
    status = "PASS" if not failures else "FAIL"
    detail = f" ({'; '.join(failures)})" if failures else ""
    with capsys.disabled():
        print(f"\n[ACCEPTANCE] {name}: {status}{detail}{note}")
    assert not failures, f"{name}: {failures}"


def _check(failures, ok, label):
    if not ok:
        failures.append(label)


def test_acceptance_closed_form_values(capsys):
    failures = []
    _check(failures, turan_matching_3(9, 3).value == 56, "turan3(9,3) != 56")
    _check(failures, turan_matching_3(12, 3).value == 100, "turan3(12,3) != 100")
    _check(
        failures, anti_ramsey_matching_3(30, 10).value == 2605, "ar3(30,10) != 2605"
    )
    _check(
        failures,
        anti_ramsey_matching_3(100, 25).value == 88552,
        "ar3(100,25) != 88552",
    )
    _check(
        failures,
        anti_ramsey_matching_large_n(13, 3, 3).value == 68,
        "wide ar(13,3,3) != 68",
    )
    _check(
        failures,
        perfect_matching_lower_bound(9, 3).value == 15,
        "lower bound (9,3) != 15",
    )
    _check(
        failures,
        perfect_matching_lower_bound(16, 4).value == 336,
        "lower bound (16,4) != 336",
    )
    _check(failures, crossover_index(100, 3) == 28, "crossover s0(100,3) != 28")
    _verdict(capsys, "closed-form-values", failures)


def test_acceptance_turan_oracle_grid(capsys):
    failures = []
    for n in range(6, 10):
        for s in range(1, 3):
            value = brute_turan_stable(n, 3, s)
            if n >= 3 * (s + 1):
                want = turan_matching_conjectured(n, 3, s).value
            else:
                want = comb(n, 3)
            _check(failures, value == want, f"brute({n},3,{s}) = {value} != {want}")
    _check(failures, brute_turan_stable(9, 3, 2) == 56, "brute(9,3,2) != 56")
    _verdict(capsys, "turan-oracle-grid", failures)


def test_acceptance_rainbow_free_colorings(capsys):
    failures = []
    t0 = time.perf_counter()
    for n, k, builder, palette, pm_count in [
        (9, 3, odd_lower_bound_coloring, 14, 280),
        (12, 3, odd_lower_bound_coloring, 60, 15400),
        (16, 4, even_lower_bound_coloring, 335, 2627625),
    ]:
        coloring = builder(n, k)
        _check(
            failures,
            coloring.palette_size == palette,
            f"palette({n},{k}) = {coloring.palette_size} != {palette}",
        )
        _check(
            failures,
            coloring.palette_size + 1 == perfect_matching_lower_bound(n, k).value,
            f"palette({n},{k}) + 1 != closed-form bound",
        )
        cert = certify_no_rainbow_perfect_matching(coloring, workers=4)
        _check(failures, cert.verdict, f"rainbow perfect matching found ({n},{k})")
        _check(
            failures,
            cert.search_size == pm_count,
            f"searched {cert.search_size} != {pm_count} matchings ({n},{k})",
        )
    elapsed = time.perf_counter() - t0
    _verdict(capsys, "rainbow-free-colorings", failures, note=f" [{elapsed:.1f}s]")


def test_acceptance_cross_intersecting_oracle(capsys):
    failures = []
    for m, want in [(5, 8), (6, 10), (7, 12)]:
        got = brute_cross_intersecting_max(m, 2)
        _check(failures, got == want, f"cross({m},2) = {got} != {want}")
        bound = comb(m, 2) - comb(m - 2, 2) + 1
        _check(failures, got == bound, f"cross({m},2) misses closed bound {bound}")
    _verdict(capsys, "cross-intersecting-oracle", failures)


def test_acceptance_shift_properties(capsys):
    failures = []
    rng = Random(20240901)
    agree = 0
    for trial in range(1000):
        n = rng.randrange(4, 8)
        H = random_hypergraph(rng, n, rng.choice([2, 3]), rng.uniform(0.1, 0.8))
        i = rng.randrange(1, n)
        j = rng.randrange(i + 1, n + 1)
        G = shift(H, i, j)
        if G.edge_count != H.edge_count:
            failures.append(f"trial {trial}: shift changed edge count")
            break
        if matching_number(G) > matching_number(H):
            failures.append(f"trial {trial}: shift raised the matching number")
            break
        if is_stable(H) != is_dominance_closed(H):
            failures.append(f"trial {trial}: stability oracles disagree")
            break
        agree += 1
        if trial % 25 == 0:
            S = stabilize(H)
            if not is_stable(S) or S.edge_count != H.edge_count:
                failures.append(f"trial {trial}: stabilize broke an invariant")
                break
    _check(failures, agree == 1000, f"only {agree}/1000 trials ran")
    _verdict(capsys, "shift-property-suite", failures)


def test_acceptance_crossover_density(capsys):
    failures = []
    lo, hi = crossover_density(3)
    _check(failures, hi - lo <= Fraction(1, 10**9), "bracket wider than 1e-9")
    # k = 3 root satisfies 26 a^2 + 3 a - 3 = 0; sign change certifies it
    poly = lambda a: 26 * a * a + 3 * a - 3
    _check(failures, poly(lo) < 0 < poly(hi), "k=3 bracket misses the root")
    for k in range(3, 11):
        lo, hi = crossover_density(k, Fraction(1, 10**6))
        inside = (
            Fraction(1, k) - Fraction(1, 2 * k * k) < lo
            and hi < Fraction(1, k) - Fraction(2, 5 * k * k)
        )
        _check(failures, inside, f"k={k} bracket escapes the known window")
    _verdict(capsys, "crossover-density", failures)


def test_acceptance_spiked_clique(capsys):
    failures = []
    S = spiked_clique(9, 2)
    _check(failures, S.edge_count == 47, f"edges = {S.edge_count} != 47")
    cert = certify_matching_number(S, 2)
    _check(failures, cert.verdict, "matching number != 2")
    _check(
        failures,
        not is_subgraph_of_clique_family(S, 2),
        "fits a clique family, should not",
    )
    _check(
        failures,
        not is_subgraph_of_cover_family(S, 2),
        "fits a cover family, should not",
    )
    # the spikes add edges beyond the bare clique on 3s + 1 vertices
    # without raising the matching number
    _check(
        failures,
        S.edge_count > comb(7, 3),
        "no gain over the bare clique",
    )
    _verdict(capsys, "spiked-clique-construction", failures)


def test_acceptance_saturation(capsys):
    failures = []
    S = saturate(UniformHypergraph.empty(6, 3), 1)
    want = clique_family(6, 3, 1)
    _check(failures, S.edges == want.edges, "saturation of the empty 3-graph")
    _check(failures, S.edge_count == 10, f"edge count {S.edge_count} != 10")
    _check(failures, certify_saturated(S, 1).verdict, "result not saturated")
    _check(failures, matching_number(S) == 1, "matching number != 1")
    _verdict(capsys, "greedy-saturation", failures)
