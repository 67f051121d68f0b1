"""Exact arithmetic core: configurations, k-subsets, dominance order, counting.

Everything here is pure and exact. Values are `fractions.Fraction`; counts are
Python ints (arbitrary precision). No floats anywhere in this module.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

#: Default cap on n * C(n,k) for explicit subset enumeration.
DEFAULT_ENUMERATION_BUDGET = 10**7

RationalLike = Fraction | int | str


class BudgetExceededError(RuntimeError):
    """Explicit enumeration would exceed the configured budget."""


class ConfigParseError(ValueError):
    """Malformed configuration text; carries a 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact int; 0 when k < 0 or k > n. Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class KSubset:
    """A k-element index set into a configuration, 1-based, strictly increasing."""

    indices: tuple[int, ...]

    def __post_init__(self):
        ix = self.indices
        if not ix:
            raise ValueError("KSubset must be non-empty")
        prev = 0
        for i in ix:
            if i <= prev:
                raise ValueError(f"indices must be strictly increasing and >= 1: {ix}")
            prev = i

    @property
    def k(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices


def gale_dominates(a: KSubset, b: KSubset) -> bool:
    """True iff a.indices[i] <= b.indices[i] for every position i.

    On a non-increasing configuration, smaller indices mean larger values, so
    a dominating b implies ksum(config, a) >= ksum(config, b).
    """
    if a.k != b.k:
        raise ValueError(f"mismatched subset sizes: {a.k} vs {b.k}")
    return all(x <= y for x, y in zip(a.indices, b.indices))


@dataclass(frozen=True)
class Configuration:
    """A multiset of exact rationals, stored sorted non-increasing."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("configuration must have at least one value")
        for a, b in zip(self.values, self.values[1:]):
            if a < b:
                raise ValueError("values must be sorted non-increasing")

    @classmethod
    def from_values(cls, values) -> Configuration:
        """Build from any iterable of rationals, in any order."""
        vals = sorted((as_rational(v) for v in values), reverse=True)
        return cls(tuple(vals))

    @property
    def n(self) -> int:
        return len(self.values)

    def total_sum(self) -> Fraction:
        return sum(self.values, Fraction(0))

    @cached_property
    def scaled(self) -> tuple[int, ...]:
        """Values times the common denominator: exact integer proxies.

        Sign and ordering agree with the original values, so all comparisons
        against zero may be done on these ints.
        """
        denom = math.lcm(*(v.denominator for v in self.values))
        return tuple(int(v * denom) for v in self.values)

    @cached_property
    def scaled_prefix(self) -> tuple[int, ...]:
        """prefix[i] = sum of the i largest scaled values (prefix[0] = 0)."""
        return tuple(itertools.accumulate(self.scaled, initial=0))

    def scaled_range_sum(self, lo: int, hi: int) -> int:
        """Exact scaled sum of values at 1-based positions lo..hi inclusive."""
        return self.scaled_prefix[hi] - self.scaled_prefix[lo - 1]

    def value(self, index: int) -> Fraction:
        """1-based access."""
        if not 1 <= index <= self.n:
            raise IndexError(f"index {index} out of range [1, {self.n}]")
        return self.values[index - 1]


def ksum(config: Configuration, subset: KSubset) -> Fraction:
    """Exact sum of the values selected by a subset (1-based indices)."""
    if subset.indices[-1] > config.n:
        raise IndexError(
            f"subset index {subset.indices[-1]} out of range for n={config.n}")
    return sum((config.values[i - 1] for i in subset.indices), Fraction(0))


def is_central(config: Configuration, index: int, k: int) -> bool:
    """True iff every k-sum through `index` is non-negative.

    By sortedness this reduces to one check: the value at `index` plus the
    k-1 smallest other values.
    """
    n = config.n
    if not 1 <= index <= n:
        raise IndexError(f"index {index} out of range [1, {n}]")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range [1, {n}]")
    scaled = config.scaled
    tail = [scaled[i] for i in range(n - 1, -1, -1) if i != index - 1][: k - 1]
    return scaled[index - 1] + sum(tail) >= 0


@dataclass(frozen=True)
class SubsetFamily:
    """A family of k-subsets of [n]: explicit members, or an exact count only."""

    n: int
    k: int
    members: frozenset[KSubset] | None
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if self.members is not None:
            if len(self.members) != self.count:
                raise ValueError("count must equal number of enumerated members")
            for s in self.members:
                if s.k != self.k:
                    raise ValueError(f"member {s} has wrong size (expected k={self.k})")
                if s.indices[-1] > self.n:
                    raise ValueError(f"member {s} out of range for n={self.n}")

    @classmethod
    def explicit(cls, n: int, k: int, members) -> SubsetFamily:
        mem = frozenset(members)
        return cls(n=n, k=k, members=mem, count=len(mem))

    @classmethod
    def counted(cls, n: int, k: int, count: int) -> SubsetFamily:
        return cls(n=n, k=k, members=None, count=count)

    @property
    def is_explicit(self) -> bool:
        return self.members is not None

    def sorted_members(self) -> list[KSubset]:
        if self.members is None:
            raise ValueError("family is counted-only; no explicit members")
        return sorted(self.members, key=lambda s: s.indices)

    def __contains__(self, subset: KSubset) -> bool:
        if self.members is None:
            raise ValueError("family is counted-only; no membership test")
        return subset in self.members


def count_nonneg_ksums(
    config: Configuration,
    k: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> tuple[int, SubsetFamily]:
    """Count (and enumerate) the k-subsets with non-negative sum.

    Ties (sum exactly zero) count as non-negative. Raises BudgetExceededError
    when n * C(n,k) exceeds `budget`; callers needing larger instances should
    use counted witness modes instead.
    """
    n = config.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range [1, {n}]")
    work = n * binomial(n, k)
    if work > budget:
        raise BudgetExceededError(
            f"n*C(n,k) = {work} exceeds enumeration budget {budget}")
    scaled = config.scaled
    members = [
        KSubset(tuple(i + 1 for i in combo))
        for combo in itertools.combinations(range(n), k)
        if sum(scaled[i] for i in combo) >= 0
    ]
    family = SubsetFamily.explicit(n, k, members)
    return family.count, family


# --- configuration text format ------------------------------------------
#
# One rational per line, as `p/q` or a bare integer `p`; `#` starts a
# comment; blank lines ignored; order-insensitive.

def parse_config_text(text: str) -> Configuration:
    values = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(Fraction(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigParseError(f"not a rational: {line!r} ({exc})", line_no)
    if not values:
        raise ConfigParseError("no values found")
    return Configuration.from_values(values)


def format_config(config: Configuration) -> str:
    lines = []
    for v in config.values:
        lines.append(str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"
