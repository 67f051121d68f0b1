"""Named extremal configurations and their predicted non-negative k-sum counts.

Each generator returns the configuration together with its count prediction
evaluated from a formula (never a hard-coded table), so tests can cross-check
the formula against brute-force enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import Configuration, binomial


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    config: Configuration
    predicted_count: int
    prediction_formula: str

    @property
    def n(self) -> int:
        return self.config.n


def star_config(n: int, k: int) -> NamedConstruction:
    """One value n-1 and n-1 values -1; attains C(n-1, k-1) non-negative k-sums."""
    if not 1 <= k <= n:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    values = [Fraction(n - 1)] + [Fraction(-1)] * (n - 1)
    return NamedConstruction(
        name="star",
        config=Configuration.from_values(values),
        predicted_count=binomial(n - 1, k - 1),
        prediction_formula="C(n-1, k-1)",
    )


def mirror_config(n: int, k: int) -> NamedConstruction:
    """n-1 ones and one value -(n-1); attains C(n-1, k) non-negative k-sums.

    Requires n > k: at n = k the single full subset sums to zero, so the
    mirror count formula does not apply there.
    """
    if not 1 <= k < n:
        raise ValueError(f"need n > k >= 1, got n={n}, k={k}")
    values = [Fraction(1)] * (n - 1) + [Fraction(-(n - 1))]
    return NamedConstruction(
        name="mirror",
        config=Configuration.from_values(values),
        predicted_count=binomial(n - 1, k),
        prediction_formula="C(n-1, k)",
    )


def mms_counterexample(k: int) -> NamedConstruction:
    """The n = 3k+1 configuration beating C(n-1, k-1) for k > 2.

    3k-2 copies of 3 and three copies of -(3k-2). Every k-subset touching a
    negative value sums to at most 3(k-1) - (3k-2) = -1, so the non-negative
    k-sums are exactly the k-subsets of the 3's: C(3k-2, k) of them.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    n = 3 * k + 1
    values = [Fraction(3)] * (3 * k - 2) + [Fraction(-(3 * k - 2))] * 3
    return NamedConstruction(
        name="mms_counterexample",
        config=Configuration.from_values(values),
        predicted_count=binomial(n - 3, k),
        prediction_formula="C(n-3, k) at n = 3k+1",
    )


def counterexample_beats_target(k: int) -> bool:
    """Exact check that C(3k-2, k) < C(3k, k-1); equals (k-1)(k-2) > 0.

    The binomial comparison and the algebraic simplification are two
    independent routes; tests assert they agree.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    n = 3 * k + 1
    return binomial(n - 3, k) < binomial(n - 1, k - 1)
