"""Exact computation of A(n,k) at desk scale, plus heuristic upper-bound search.

A configuration's non-negative family is always an up-set (filter) in the
dominance order that contains the top subset {1..k}; conversely a filter is
attainable iff a linear system over the sorted values is feasible. Strict
negativity of the non-members is encoded as `sum <= -1`: the system is
positively homogeneous apart from that normalization, so any configuration
with strictly negative non-member sums can be scaled to satisfy it, and the
two formulations are equivalent. A(n,k) is therefore the smallest up-closure
size among LP-feasible filters, found by best-first search.
"""
from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .constructions import mms_counterexample, star_config
from .lp import LinRow, check_farkas, check_point, solve_feasibility
from .numerics import (
    Configuration,
    KSubset,
    SubsetFamily,
    binomial,
    count_nonneg_ksums,
)

#: Default cap on C(n,k) for the exact solver.
EXACT_SOLVER_CAP = 120
DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class FilterFamily:
    """An up-set in the dominance order, given by its generating antichain."""

    n: int
    k: int
    minimal_elements: tuple[KSubset, ...]
    implied_members: SubsetFamily

    @property
    def size(self) -> int:
        return self.implied_members.count


@dataclass(frozen=True)
class FeasibilityCertificate:
    kind: str  # "feasible" | "infeasible"
    witness_config: Configuration | None = None
    farkas_multipliers: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class SolverResult:
    n: int
    k: int
    A_value: int
    optimal_family: FilterFamily
    optimal_config: Configuration
    nodes_explored: int
    upper_bound_only: bool = False


# --- dominance-order helpers ---------------------------------------------

def cover_dominators(subset: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Subsets obtained by decrementing one index (the covers from above)."""
    out = []
    for j, idx in enumerate(subset):
        lower = subset[j - 1] if j > 0 else 0
        if idx - 1 > lower:
            out.append(subset[:j] + (idx - 1,) + subset[j + 1:])
    return out


def cover_dominated(subset: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    """Subsets obtained by incrementing one index (the covers from below)."""
    out = []
    k = len(subset)
    for j, idx in enumerate(subset):
        upper = subset[j + 1] if j + 1 < k else n + 1
        if idx + 1 < upper:
            out.append(subset[:j] + (idx + 1,) + subset[j + 1:])
    return out


def minimal_elements_of(members: frozenset[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Generating antichain: members none of whose dominated covers is a member."""
    return sorted(
        m for m in members
        if not any(c in members for c in cover_dominated(m, n))
    )


def maximal_nonmembers_of(members: frozenset[tuple[int, ...]], n: int, k: int) -> list[tuple[int, ...]]:
    """Non-members all of whose dominating covers are members.

    Constraining exactly these to be negative forces, via monotonicity, every
    other non-member negative as well.
    """
    out = []
    for combo in itertools.combinations(range(1, n + 1), k):
        if combo in members:
            continue
        if all(c in members for c in cover_dominators(combo)):
            out.append(combo)
    return out


def filter_system(
    minimal: list[tuple[int, ...]],
    max_nonmembers: list[tuple[int, ...]],
    n: int,
) -> list[LinRow]:
    """Rows (in canonical order) whose feasibility realizes the filter:
    sortedness chain, total sum, minimal members >= 0, maximal non-members <= -1.
    """
    rows = []
    zero = Fraction(0)
    one = Fraction(1)
    for i in range(n - 1):
        c = [zero] * n
        c[i] = one
        c[i + 1] = -one
        rows.append(LinRow(tuple(c), zero))
    rows.append(LinRow((one,) * n, zero))
    for a in minimal:
        c = [zero] * n
        for i in a:
            c[i - 1] = one
        rows.append(LinRow(tuple(c), zero))
    for b in max_nonmembers:
        c = [zero] * n
        for i in b:
            c[i - 1] = -one
        rows.append(LinRow(tuple(c), one))
    return rows


def lp_feasible(filter_family: FilterFamily) -> FeasibilityCertificate:
    """Decide whether any sorted configuration realizes the filter exactly."""
    members = frozenset(s.indices for s in filter_family.implied_members.members)
    return _lp_feasible_raw(members, filter_family.n, filter_family.k)


def _lp_feasible_raw(
    members: frozenset[tuple[int, ...]], n: int, k: int
) -> FeasibilityCertificate:
    minimal = minimal_elements_of(members, n)
    nonmax = maximal_nonmembers_of(members, n, k)
    rows = filter_system(minimal, nonmax, n)
    res = solve_feasibility(rows)
    if res.feasible:
        config = Configuration(tuple(res.point))
        return FeasibilityCertificate(kind="feasible", witness_config=config)
    return FeasibilityCertificate(kind="infeasible", farkas_multipliers=res.farkas)


def verify_certificate(
    cert: FeasibilityCertificate,
    members: frozenset[tuple[int, ...]],
    n: int,
    k: int,
) -> bool:
    """Re-check a certificate against the (rebuilt) canonical system."""
    rows = filter_system(
        minimal_elements_of(members, n), maximal_nonmembers_of(members, n, k), n)
    if cert.kind == "feasible":
        return check_point(rows, cert.witness_config.values)
    return check_farkas(rows, cert.farkas_multipliers)


def _as_filter(members: frozenset[tuple[int, ...]], n: int, k: int) -> FilterFamily:
    return FilterFamily(
        n=n,
        k=k,
        minimal_elements=tuple(KSubset(m) for m in minimal_elements_of(members, n)),
        implied_members=SubsetFamily.explicit(n, k, (KSubset(m) for m in members)),
    )


def exact_A(n: int, k: int, budget: int = DEFAULT_NODE_BUDGET) -> SolverResult:
    """Minimum up-closure size over LP-feasible filters = A(n,k), exactly.

    Filters containing the top subset {1..k} (non-negative whenever the total
    sum is) are enumerated in increasing size; the first feasible one is
    optimal. When k | n, sizes below the partition lower bound C(n-1,k-1) are
    expanded but not LP-tested. If the node budget runs out the best known
    construction is returned flagged `upper_bound_only`.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if binomial(n, k) > EXACT_SOLVER_CAP:
        raise ValueError(
            f"C({n},{k}) = {binomial(n, k)} exceeds exact solver cap {EXACT_SOLVER_CAP}")
    top = tuple(range(1, k + 1))
    lower_cut = binomial(n - 1, k - 1) if n % k == 0 else 1
    start = frozenset([top])
    heap: list[tuple[int, tuple, frozenset]] = [(1, (top,), start)]
    visited = {start}
    nodes = 0
    while heap and nodes < budget:
        size, _, members = heapq.heappop(heap)
        nodes += 1
        if size >= lower_cut:
            cert = _lp_feasible_raw(members, n, k)
            if cert.kind == "feasible":
                config = cert.witness_config
                count, family = count_nonneg_ksums(config, k)
                if count != size or {s.indices for s in family.members} != members:
                    raise AssertionError(
                        "witness configuration does not realize the filter exactly")
                return SolverResult(
                    n=n, k=k, A_value=size,
                    optimal_family=_as_filter(members, n, k),
                    optimal_config=config,
                    nodes_explored=nodes,
                )
        for cand in maximal_nonmembers_of(members, n, k):
            grown = members | {cand}
            if grown not in visited:
                visited.add(grown)
                heapq.heappush(heap, (size + 1, tuple(sorted(grown)), grown))
    # Budget exhausted: fall back to the best constructive upper bound.
    best = star_config(n, k)
    if n == 3 * k + 1 and k > 2:
        alt = mms_counterexample(k)
        if alt.predicted_count < best.predicted_count:
            best = alt
    count, family = count_nonneg_ksums(best.config, k)
    members = frozenset(s.indices for s in family.members)
    return SolverResult(
        n=n, k=k, A_value=count,
        optimal_family=_as_filter(members, n, k),
        optimal_config=best.config,
        nodes_explored=nodes,
        upper_bound_only=True,
    )


# --- heuristic upper-bound search -----------------------------------------

def _count_fast(values: list[int], n: int, k: int) -> int:
    vals = sorted(values, reverse=True)
    return sum(
        1 for combo in itertools.combinations(vals, k) if sum(combo) >= 0)


def search_upper_bound(
    n: int,
    k: int,
    strategy: str = "grid",
    seed: int = 0,
    value_bound: int | None = None,
) -> tuple[int, Configuration]:
    """Heuristically minimize the non-negative k-sum count; exact per candidate.

    `grid` sweeps integer configurations with at most three distinct values
    (two-value patterns over [-(n-1), n-1], three-value over a smaller box);
    `anneal` runs seeded simulated annealing from the star pattern.
    """
    if strategy not in ("grid", "anneal"):
        raise ValueError(f"unknown strategy {strategy!r}")
    best_count = binomial(n - 1, k - 1)
    best_values = list(star_config(n, k).config.scaled)
    if strategy == "grid":
        bound2 = value_bound or (n - 1)
        for hi in range(bound2, -bound2 - 1, -1):
            for lo in range(hi - 1, -bound2 - 1, -1):
                for m in range(n - 1, 0, -1):
                    if hi * m + lo * (n - m) < 0:
                        break  # sum decreases with m here; the rest are negative
                    values = [hi] * m + [lo] * (n - m)
                    c = _count_fast(values, n, k)
                    if c < best_count:
                        best_count, best_values = c, values
        bound3 = min(value_bound or 6, 6)
        span = range(bound3, -bound3 - 1, -1)
        for hi, mid, lo in itertools.combinations(span, 3):
            for m1 in range(1, n - 1):
                for m2 in range(1, n - m1):
                    m3 = n - m1 - m2
                    if hi * m1 + mid * m2 + lo * m3 < 0:
                        continue
                    values = [hi] * m1 + [mid] * m2 + [lo] * m3
                    c = _count_fast(values, n, k)
                    if c < best_count:
                        best_count, best_values = c, values
    else:
        rng = random.Random(seed)
        bound = value_bound or max(n, 8)
        cur = list(best_values)
        cur_count = best_count
        temperature = 2.0
        for step in range(4000):
            temperature *= 0.999
            cand = list(cur)
            pos = rng.randrange(n)
            cand[pos] += rng.choice((-3, -2, -1, 1, 2, 3))
            cand[pos] = max(-bound, min(bound, cand[pos]))
            if sum(cand) < 0:
                continue
            c = _count_fast(cand, n, k)
            if c <= cur_count or rng.random() < pow(2.0, -(c - cur_count) / max(temperature, 1e-9)):
                cur, cur_count = cand, c
                if c < best_count:
                    best_count, best_values = c, list(cand)
    config = Configuration.from_values(best_values)
    verified, _ = count_nonneg_ksums(config, k)
    if verified != best_count:
        raise AssertionError("fast counter disagrees with exact recount")
    return best_count, config


# --- conjecture sweep ------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    n: int
    k: int
    verdict: str  # "equality" | "counterexample" | "undecided"
    lower: int
    upper: int
    a_value: int | None
    equals_target: bool | None
    witness_config: Configuration | None


def verify_conjecture_range(
    n_lo: int,
    n_hi: int,
    k: int,
    exact_cap: int = EXACT_SOLVER_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[SweepRow]:
    """Per-n verdict against the target C(n-1, k-1).

    Equality is proven either by the exact solver or by the pair
    (partition lower bound, star upper bound) when k | n; a counterexample
    verdict carries a configuration whose exact count beats the target.
    """
    out = []
    for n in range(max(n_lo, k), n_hi + 1):
        target = binomial(n - 1, k - 1)
        upper = target
        witness = star_config(n, k).config
        if n == 3 * k + 1 and k > 2:
            ce = mms_counterexample(k)
            if ce.predicted_count < upper:
                upper, witness = ce.predicted_count, ce.config
        lower = binomial(n - 1, k - 1) if n % k == 0 else 1
        a_value = None
        if upper < target:
            verdict = "counterexample"
            equals = False
        elif lower == target:
            verdict = "equality"
            equals = True
            witness = None
        elif binomial(n, k) <= exact_cap:
            res = exact_A(n, k, budget=node_budget)
            if res.upper_bound_only:
                verdict = "undecided"
                equals = None
                upper = min(upper, res.A_value)
                witness = res.optimal_config
            else:
                a_value = res.A_value
                lower = upper = a_value
                equals = a_value == target
                verdict = "equality" if equals else "counterexample"
                witness = None if equals else res.optimal_config
        else:
            verdict = "undecided"
            equals = None
            witness = None
        out.append(SweepRow(
            n=n, k=k, verdict=verdict, lower=lower, upper=upper,
            a_value=a_value, equals_target=equals, witness_config=witness,
        ))
    return out
