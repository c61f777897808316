"""Closed-form tables: Turan numbers, anti-Ramsey numbers, crossover.

Every value is exact integer arithmetic; the `valid` column says whether
the parameters sit inside a proven range or only the conjectured one.
"""

from fractions import Fraction

from antiramsey import (
    anti_ramsey_matching_3,
    crossover_density,
    crossover_index,
    turan_matching_3,
    turan_matching_conjectured,
)


def main() -> None:
    print("3-uniform Turan numbers (no matching of size s):")
    print(f"{'n':>4} {'s':>3} {'value':>8}  valid")
    for n in (9, 12, 15, 30):
        for s in (2, 3, n // 3):
            r = turan_matching_3(n, s)
            print(f"{n:>4} {s:>3} {r.value:>8}  {r.valid}")
    print()

    print("anti-Ramsey numbers of s-matchings in 3-graphs:")
    print(f"{'n':>4} {'s':>3} {'value':>8}  valid")
    for n, s in [(13, 3), (30, 10), (100, 25), (9, 3), (12, 4)]:
        r = anti_ramsey_matching_3(n, s)
        print(f"{n:>4} {s:>3} {r.value:>8}  {r.valid}")
    print()

    print("the conjectured k-graph maximum (matching number <= s):")
    for n, k, s in [(16, 4, 3), (8, 4, 1), (12, 3, 2), (12, 2, 3)]:
        r = turan_matching_conjectured(n, k, s)
        print(f"  n={n:>3} k={k} s={s}: {r.value:>6}  [{r.valid}] {r.provenance}")
    print()

    print("cover/clique crossover index s0(n, 3):")
    for n in (30, 50, 100, 200):
        print(f"  n={n:>4}: s0 = {crossover_index(n, 3)}")
    print()

    print("crossover density alpha_k (exact rational brackets):")
    for k in range(3, 8):
        lo, hi = crossover_density(k, Fraction(1, 10**12))
        mid = (lo + hi) / 2
        print(f"  k={k}: {float(mid):.10f}  (bracket width {float(hi - lo):.1e})")
        print(f"        vs 1/k = {1 / k:.10f}")


if __name__ == "__main__":
    main()
