"""Brute-force oracles confirming the closed forms where exhaustion is
feasible, and the certificate JSON they produce.

The Turan oracle only enumerates stable families (lossless, since some
extremal family is always stable); the cross-intersecting oracle forces
the optimal partner family.  Both refuse instances beyond their caps --
the whole point is that inside the caps the answer is exact.
"""

from math import comb

from antiramsey import (
    InstanceTooLargeError,
    brute_cross_intersecting_extremal,
    brute_cross_intersecting_max,
    brute_turan_stable,
    certify_matching_number,
    certify_stable,
    spiked_clique,
    turan_matching_conjectured,
)


def main() -> None:
    print("Turan oracle vs closed form (3-uniform):")
    for n in range(6, 10):
        for s in (1, 2):
            got = brute_turan_stable(n, 3, s)
            if n >= 3 * (s + 1):
                want = turan_matching_conjectured(n, 3, s).value
                tag = "formula"
            else:
                want = comb(n, 3)
                tag = "C(n,3), no (s+1)-matching fits"
            flag = "ok" if got == want else "MISMATCH"
            print(f"  n={n} s={s}: oracle {got:>3}  {tag} {want:>3}  {flag}")

    print("\ncross-intersecting pairs vs the Hilton-Milner-type bound:")
    for m in (5, 6, 7):
        got = brute_cross_intersecting_max(m, 2)
        want = comb(m, 2) - comb(m - 2, 2) + 1
        print(f"  m={m}, l=2: oracle {got}  bound {want}  "
              f"{'ok' if got == want else 'MISMATCH'}")
    best, winners = brute_cross_intersecting_extremal(5, 2)
    A, B = winners[0]
    print(f"  an extremal pair for m=5: A = {A}")
    print(f"                            B = {B}")

    print("\nthe caps are hard errors, not silent truncation:")
    try:
        brute_turan_stable(20, 3, 2)
    except InstanceTooLargeError as exc:
        print(f"  {exc}")

    print("\ncertificates serialize to JSON:")
    S = spiked_clique(9, 2)
    print(" ", certify_matching_number(S, 2).to_json())
    print(" ", certify_stable(S).to_json())


if __name__ == "__main__":
    main()
