"""Closed-form values of the weak k-metric dimension of K_n x K_n.

Maps (n, k) to an exact value, an upper bound, or "unknown", with a tag
naming the result the value comes from.  Dispatch follows the proved
hypotheses of each sub-result, which for the band-complement cases are
narrower than the blanket range 1 <= t <= n-2 of the combined statement:
the even case is proved for 2 <= t <= n-3 (t = 1 separately), the odd
case for n >= 6 and 1 <= t <= n-3.  The k = 4 bound needs n >= 9.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InvalidOrderError, OutOfRangeError

# wdim_k(K_3 x K_3) by exhaustive computer search.
N3_TABLE = {2: 4, 3: 6, 4: 6, 5: 8, 6: 9}


class RegimeStatus(enum.Enum):
    EXACT = "EXACT"
    UPPER_BOUND = "UPPER-BOUND"
    UNKNOWN = "UNKNOWN"
    OUT_OF_RANGE = "OUT-OF-RANGE"


@dataclass(frozen=True)
class Regime:
    """Classification of a (n, k) cell.

    ``value`` is present exactly for EXACT and UPPER-BOUND; ``t`` is the
    band parameter for the complement-of-diagonal-bands cases.
    """

    status: RegimeStatus
    value: int | None
    source: str
    t: int | None = None

    def to_dict(self, n: int, k: int) -> dict:
        return {
            "n": n,
            "k": k,
            "status": self.status.value,
            "value": self.value,
            "source": self.source,
            "t": self.t,
        }


def kappa_formula(n: int) -> int:
    """Largest admissible k: 6 for n = 3, otherwise 2n + 2."""
    if n < 3:
        raise InvalidOrderError(f"side length must be at least 3, got n={n}")
    return 6 if n == 3 else 2 * n + 2


def matching_rules(n: int, k: int) -> list[str]:
    """Names of all dispatch rules whose hypotheses cover (n, k).

    Used by the partition property test: after the gates, at most one
    rule may fire for any cell.
    """
    names = []
    if n == 3 and k in N3_TABLE:
        names.append("n3-table")
    if n >= 4:
        if k == 2:
            names.append("k2-blocks")
        if k == 3:
            names.append("k3-two-diagonals")
        if k == 4 and n >= 9:
            names.append("k4-upper-bound")
        if k in (2 * n + 1, 2 * n + 2):
            names.append("full-set")
        if k == 2 * n:
            names.append("one-hole")
        if k == 2 * n - 1 and n >= 5:
            names.append("diagonal-holes")
        if (n, k) == (4, 7):
            names.append("special-4-7")
        if k == 2 * n - 2:
            names.append("even-t1")
        if k < 2 * n - 2 and k >= 2 and (2 * n - k) % 2 == 0:
            t = (2 * n - k) // 2
            if 2 <= t <= n - 3:
                names.append("even-bands")
        if k < 2 * n - 2 and k >= 2 and (2 * n - k) % 2 == 1:
            t = (2 * n - k - 1) // 2
            if 1 <= t <= n - 3 and n >= 6:
                names.append("odd-bands")
    return names


def classify(n: int, k: int) -> Regime:
    """Exact value, upper bound, or unknown status for wdim_k(K_n x K_n)."""
    if n < 3:
        raise InvalidOrderError(f"side length must be at least 3, got n={n}")
    if k < 1:
        raise OutOfRangeError(f"threshold k must be >= 1, got {k}")
    kappa = kappa_formula(n)
    if k > kappa:
        return Regime(
            RegimeStatus.OUT_OF_RANGE,
            None,
            f"no weak {k}-resolving set exists: kappa({n}) = {kappa}",
        )
    if k == 1:
        # classical metric dimension; handled by prior work, not here
        return Regime(RegimeStatus.UNKNOWN, None, "k=1 is the classical metric dimension (out of scope)")

    rules = matching_rules(n, k)
    assert len(rules) <= 1, f"dispatch overlap for (n={n}, k={k}): {rules}"
    if not rules:
        return Regime(RegimeStatus.UNKNOWN, None, f"no closed form covers (n={n}, k={k})")
    rule = rules[0]

    if rule == "n3-table":
        return Regime(RegimeStatus.EXACT, N3_TABLE[k], "computer search, n=3 table")
    if rule == "k2-blocks":
        return Regime(RegimeStatus.EXACT, n + math.ceil(n / 3), "k=2: n + ceil(n/3)")
    if rule == "k3-two-diagonals":
        return Regime(RegimeStatus.EXACT, 2 * n, "k=3: 2n")
    if rule == "k4-upper-bound":
        return Regime(
            RegimeStatus.UPPER_BOUND,
            2 * n + 1 + n // 4,
            "k=4, n>=9: at most 2n + 1 + floor(n/4) (exact value open)",
        )
    if rule == "full-set":
        return Regime(RegimeStatus.EXACT, n * n, "k in {2n+1, 2n+2}: whole vertex set")
    if rule == "one-hole":
        return Regime(RegimeStatus.EXACT, n * n - 1, "k=2n: n^2 - 1")
    if rule == "diagonal-holes":
        return Regime(RegimeStatus.EXACT, n * n - n, "k=2n-1, n>=5: n^2 - n")
    if rule == "special-4-7":
        return Regime(RegimeStatus.EXACT, 13, "special case (n,k)=(4,7): 13")
    if rule == "even-t1":
        return Regime(RegimeStatus.EXACT, n * n - n - 1, "k=2n-2: n^2 - n - 1", t=1)
    if rule == "even-bands":
        t = (2 * n - k) // 2
        return Regime(
            RegimeStatus.EXACT,
            n * n - t * n,
            f"k=2n-2t, t={t}: n^2 - tn (proved for 2<=t<=n-3; "
            "the blanket statement claims t<=n-2)",
            t=t,
        )
    if rule == "odd-bands":
        t = (2 * n - k - 1) // 2
        return Regime(
            RegimeStatus.EXACT,
            n * n - t * n - n // (t + 1),
            f"k=2n-2t-1, t={t}: n^2 - tn - floor(n/(t+1)) "
            "(proved for n>=6, 1<=t<=n-3; the blanket statement claims t<=n-2)",
            t=t,
        )
    raise AssertionError(f"unhandled rule {rule}")
