"""Closed-form values for matching Turan numbers, anti-Ramsey numbers of
matchings, the perfect-matching lower bound, and the cover/clique
crossover.  All arithmetic is exact: big integers via ``math.comb`` and
rationals via ``fractions.Fraction``.

Every calculator returns a :class:`FormulaResult` whose ``valid`` field
says how much to trust the number:

* ``"proved"``      - the parameters sit inside a proven theorem's range;
* ``"conjectured"`` - the formula is the conjectured/asymptotic value and
  the parameters are outside every proven range;
* ``"out-of-range"``- the parameters violate the formula's own
  applicability window; the arithmetic value is still reported.

Conventions worth spelling out once: ``turan_matching_3(n, s)`` takes the
size s of the *forbidden* matching (families counted have matching number
at most s - 1), while ``turan_matching_conjectured(n, k, s)`` takes the
largest *allowed* matching number s (forbidding an (s+1)-matching).  The
two parameterizations differ by one; each docstring restates its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

__all__ = [
    "PROVED",
    "CONJECTURED",
    "OUT_OF_RANGE",
    "FormulaResult",
    "turan_matching_3",
    "turan_matching_conjectured",
    "anti_ramsey_matching_large_n",
    "anti_ramsey_matching_3",
    "perfect_matching_lower_bound",
    "crossover_index",
    "crossover_density",
]

PROVED = "proved"
CONJECTURED = "conjectured"
OUT_OF_RANGE = "out-of-range"


@dataclass(frozen=True)
class FormulaResult:
    """An exact value plus its epistemic status and a one-line source tag."""

    value: int
    valid: str
    provenance: str
    note: str = ""


def _choose(a: int, b: int) -> int:
    """C(a, b) extended by 0 whenever a < b (including negative a)."""
    if a < b:
        return 0
    return comb(a, b)


def turan_matching_3(n: int, s: int) -> FormulaResult:
    """Maximum edges of a 3-graph on [n] with no matching of size s.

    Value: max{ C(n,3) - C(n-s+1,3), C(3s-1,3) } - the larger of the cover
    family (cover size s-1) and the clique family (clique on 3s-1
    vertices).  Exact for s >= 2 and n >= 3s; flagged out-of-range
    otherwise (the arithmetic value is still returned).
    """
    if s < 1:
        raise ValueError(f"forbidden matching size must be positive, got {s}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    value = max(_choose(n, 3) - _choose(n - s + 1, 3), _choose(3 * s - 1, 3))
    valid = PROVED if (s >= 2 and n >= 3 * s) else OUT_OF_RANGE
    return FormulaResult(
        value=value,
        valid=valid,
        provenance="exact 3-uniform matching Turan theorem (s >= 2, n >= 3s)",
    )


def turan_matching_conjectured(n: int, k: int, s: int) -> FormulaResult:
    """Conjectured maximum edges of a k-graph on [n] with matching number
    at most s (equivalently: no (s+1)-matching).

    Note the parameter shift versus :func:`turan_matching_3`: here s is the
    largest allowed matching, so ``turan_matching_conjectured(n, 3, s)``
    equals ``turan_matching_3(n, s + 1)`` in value.

    Value: max{ C(n,k) - C(n-s,k), C(k(s+1)-1, k) }.  Proved for k = 2 and
    k = 3; conjectured for k >= 4; out-of-range when n < k(s+1), where an
    (s+1)-matching cannot even exist and the true maximum is C(n,k).
    """
    if k < 2:
        raise ValueError(f"uniformity must be at least 2, got {k}")
    if s < 0:
        raise ValueError(f"matching cap must be non-negative, got {s}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    value = max(_choose(n, k) - _choose(n - s, k), _choose(k * (s + 1) - 1, k))
    if n < k * (s + 1):
        return FormulaResult(
            value=value,
            valid=OUT_OF_RANGE,
            provenance="matching conjecture for k-graphs",
            note=f"an ({s + 1})-matching needs {k * (s + 1)} vertices; "
            f"with n={n} the true maximum is C(n,k)",
        )
    if k == 3:
        return FormulaResult(
            value=value,
            valid=PROVED,
            provenance="exact 3-uniform matching Turan theorem",
        )
    if k == 2:
        return FormulaResult(
            value=value,
            valid=PROVED,
            provenance="Erdos-Gallai theorem for graph matchings",
        )
    return FormulaResult(
        value=value,
        valid=CONJECTURED,
        provenance="Erdos matching conjecture (open for k >= 4)",
    )


def anti_ramsey_matching_large_n(n: int, k: int, s: int) -> FormulaResult:
    """Anti-Ramsey number of an s-matching in k-graphs for large n:
    C(n,k) - C(n-s+2,k) + 2, proved whenever n >= sk + (s-1)(k-1), k >= 3,
    s >= 2.  Below that range the same expression is reported with an
    out-of-range flag.
    """
    if k < 2:
        raise ValueError(f"uniformity must be at least 2, got {k}")
    if s < 1:
        raise ValueError(f"matching size must be positive, got {s}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    value = _choose(n, k) - _choose(n - s + 2, k) + 2
    bound = s * k + (s - 1) * (k - 1)
    valid = PROVED if (k >= 3 and s >= 2 and n >= bound) else OUT_OF_RANGE
    note = "" if valid == PROVED else f"proved range is n >= {bound} with k >= 3"
    return FormulaResult(
        value=value,
        valid=valid,
        provenance="anti-Ramsey theorem for wide k-graphs "
        "(n >= sk + (s-1)(k-1))",
        note=note,
    )


def anti_ramsey_matching_3(n: int, s: int) -> FormulaResult:
    """Anti-Ramsey number of an s-matching in 3-graphs, piecewise in n.

    With ex = turan_matching_3(n, s-1).value:

    * n = 3s           -> ex + 5   (asymptotic; no explicit threshold, so
                                    always flagged conjectured)
    * 3s < n < 5s - 2  -> ex + 2   (same caveat)
    * n >= 5s - 2      -> proved; delegates to the wide-range theorem,
      whose k = 3 threshold sk + (s-1)(k-1) is exactly 5s - 2, so the
      piecewise split has no gap.

    Requires s >= 2 and n >= 3s.
    """
    if s < 2:
        raise ValueError(f"matching size must be at least 2, got {s}")
    if n < 3 * s:
        raise ValueError(f"need n >= 3s = {3 * s}, got n={n}")
    if n >= 5 * s - 2:
        inner = anti_ramsey_matching_large_n(n, 3, s)
        return FormulaResult(
            value=inner.value,
            valid=PROVED,
            provenance=inner.provenance,
        )
    ex = turan_matching_3(n, s - 1).value
    if n == 3 * s:
        return FormulaResult(
            value=ex + 5,
            valid=CONJECTURED,
            provenance="perfect-matching branch of the 3-uniform "
            "anti-Ramsey theorem (sufficiently large n)",
            note="holds for sufficiently large n; no explicit threshold",
        )
    return FormulaResult(
        value=ex + 2,
        valid=CONJECTURED,
        provenance="near-perfect branch of the 3-uniform anti-Ramsey "
        "theorem (sufficiently large n)",
        note="holds for sufficiently large n; no explicit threshold",
    )


def perfect_matching_lower_bound(n: int, k: int) -> FormulaResult:
    """Lower bound for the anti-Ramsey number of the perfect matching in
    K_n^(k), from the explicit no-rainbow colorings:

    * odd k:  C(n-k-1, k) + C(k+1, (k+1)/2)/2 + 2
    * even k: C(n-k-1, k) + C(k, k/2 - 1) + 2

    Requires k | n; proved for k >= 3 and n/k >= 3, out-of-range otherwise.
    """
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    if n <= 0 or n % k != 0:
        raise ValueError(f"n must be a positive multiple of k, got n={n}, k={k}")
    s = n // k
    if k % 2 == 1:
        extra = comb(k + 1, (k + 1) // 2) // 2
    else:
        extra = comb(k, k // 2 - 1)
    value = _choose(n - k - 1, k) + extra + 2
    valid = PROVED if s >= 3 else OUT_OF_RANGE
    note = "" if valid == PROVED else "the coloring construction needs n/k >= 3"
    return FormulaResult(
        value=value,
        valid=valid,
        provenance="explicit rainbow-free coloring of the complete k-graph",
        note=note,
    )


def crossover_index(n: int, k: int) -> int:
    """Smallest s >= 1 with C(n,k) - C(n-s,k) <= C(k(s+1)-1, k): the point
    where the clique family overtakes the cover family.

    Always exists, because the right side reaches C(n,k) once
    k(s+1) - 1 >= n.
    """
    if k < 2:
        raise ValueError(f"uniformity must be at least 2, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    s = 1
    while comb(n, k) - _choose(n - s, k) > _choose(k * (s + 1) - 1, k):
        s += 1
    return s


def crossover_density(
    k: int, tol: Union[Fraction, float, str] = Fraction(1, 10**9)
) -> tuple[Fraction, Fraction]:
    """Bracket the unique root in (0, 1) of 1 - (1-a)^k = k^k a^k, the
    limit of crossover_index(n, k) / n.

    Pure rational bisection: both endpoints are exact Fractions, the
    bracket width is at most ``tol``, and the sign of the defining
    polynomial is evaluated without rounding.  Starts from [1/(2k), 1/k],
    which straddles the root for every k >= 3.
    """
    if k < 3:
        raise ValueError(f"uniformity must be at least 3, got {k}")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def g(a: Fraction) -> Fraction:
        return 1 - (1 - a) ** k - k**k * a**k

    lo, hi = Fraction(1, 2 * k), Fraction(1, k)
    if not (g(lo) > 0 > g(hi)):  # pragma: no cover - guaranteed for k >= 3
        raise ArithmeticError("initial bracket does not straddle the root")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        sign = g(mid)
        if sign > 0:
            lo = mid
        elif sign < 0:
            hi = mid
        else:
            return mid, mid
    return lo, hi
