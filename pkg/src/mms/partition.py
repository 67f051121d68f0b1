"""Constructive factorization of [n]^(k) into parallel classes (k | n).

The resulting partition has C(n-1, k-1) classes of n/k pairwise-disjoint
k-sets each; picking one non-negative block per class certifies the lower
bound A(n,k) >= C(n-1, k-1) on any configuration with non-negative total sum.

Construction: round-robin circle method for k = 2; for k >= 3 the classic
inductive argument on the ground-set size, realized with an integral
assignment step (greedy plus augmenting paths). The assignment always
succeeds -- the fractional relaxation is exactly feasible and the constraint
matrix is integral -- so no backtracking or restarts are needed. A seeded RNG
only shuffles the greedy order, so output is deterministic given (n, k, seed).
"""
from __future__ import annotations

import itertools
import random
import sys
from dataclasses import dataclass
from functools import lru_cache

from .numerics import Configuration, KSubset, SubsetFamily, binomial, ksum

#: Instances with C(n,k) above this are refused (desk-scale guard).
PARTITION_SIZE_LIMIT = 10**4


class PartitionSizeError(ValueError):
    """Instance exceeds the desk-scale partition limit."""


@dataclass(frozen=True)
class ParallelClass:
    """n/k pairwise-disjoint k-sets covering [n]."""

    blocks: tuple[KSubset, ...]


@dataclass(frozen=True)
class BaranyaiPartition:
    n: int
    k: int
    classes: tuple[ParallelClass, ...]


@dataclass(frozen=True)
class PartitionValidation:
    ok: bool
    diagnostic: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _circle_pairs(n: int) -> list[list[tuple[int, int]]]:
    """Round-robin 1-factorization of K_n for even n: n-1 rounds of n/2 pairs."""
    rounds = []
    m = n - 1
    for r in range(m):
        pairs = [(min(n, r + 1), max(n, r + 1))]
        for i in range(1, n // 2):
            a = (r + i) % m + 1
            b = (r - i) % m + 1
            pairs.append((min(a, b), max(a, b)))
        rounds.append(pairs)
    return rounds


def _inductive_partition(n: int, k: int, rng: random.Random) -> list[list[tuple[int, ...]]]:
    """Grow the ground set one element at a time.

    Invariant after absorbing 1..m: every class holds n/k parts (subsets of
    [m], empty allowed) partitioning [m], and each subset A of [m] occurs
    exactly C(n-m, k-|A|) times across classes. Absorbing m+1 assigns each
    class one incomplete part type; type A must be chosen by exactly
    C(n-m-1, k-|A|-1) classes. Greedy assignment is repaired by augmenting
    paths; integral feasibility is guaranteed, so repair cannot fail.
    """
    num_classes = binomial(n - 1, k - 1)
    classes: list[list[tuple[int, ...]]] = [
        [() for _ in range(n // k)] for _ in range(num_classes)
    ]
    for m in range(n):
        new = m + 1
        demand: dict[tuple[int, ...], int] = {}
        for a in range(k):
            d = binomial(n - new, k - a - 1)
            if d <= 0:
                continue
            for sub in itertools.combinations(range(1, new), a):
                demand[sub] = d
        types_per_class = [
            sorted(set(t for t in parts if len(t) < k)) for parts in classes
        ]
        rem = dict(demand)
        assign: list[tuple[int, ...] | None] = [None] * num_classes
        taken_by: dict[tuple[int, ...], list[int]] = {}
        order = list(range(num_classes))
        rng.shuffle(order)
        pending = []
        for ci in order:
            best = None
            best_rem = 0
            for t in types_per_class[ci]:
                r = rem.get(t, 0)
                if r > best_rem:
                    best, best_rem = t, r
            if best is None:
                pending.append(ci)
            else:
                assign[ci] = best
                rem[best] -= 1
                taken_by.setdefault(best, []).append(ci)

        def augment(ci: int, seen: set[tuple[int, ...]]) -> bool:
            # Kuhn-style alternating search; each type visited at most once,
            # so recursion depth is bounded by the number of distinct types.
            for t in types_per_class[ci]:
                if t in seen:
                    continue
                seen.add(t)
                if rem.get(t, 0) > 0:
                    rem[t] -= 1
                    assign[ci] = t
                    taken_by.setdefault(t, []).append(ci)
                    return True
                for holder in taken_by.get(t, ()):
                    if augment(holder, seen):
                        taken_by[t].remove(holder)
                        assign[ci] = t
                        taken_by[t].append(ci)
                        return True
            return False

        for ci in pending:
            if not augment(ci, set()):
                raise AssertionError(
                    f"assignment infeasible at ground size {new} -- invariant broken")
        for ci in range(num_classes):
            t = assign[ci]
            parts = classes[ci]
            parts[parts.index(t)] = tuple(sorted(t + (new,)))
    return classes


@lru_cache(maxsize=64)
def baranyai_partition(n: int, k: int, seed: int = 0) -> BaranyaiPartition:
    """Partition [n]^(k) into C(n-1,k-1) parallel classes; requires k | n.

    Deterministic given (n, k, seed); results are cached.
    """
    if k < 1 or n < 1 or n % k != 0:
        raise ValueError(f"need k | n with k, n >= 1, got n={n}, k={k}")
    if binomial(n, k) > PARTITION_SIZE_LIMIT:
        raise PartitionSizeError(
            f"C({n},{k}) = {binomial(n, k)} exceeds limit {PARTITION_SIZE_LIMIT}")
    if k == n:
        raw = [[tuple(range(1, n + 1))]]
    elif k == 2:
        raw = _circle_pairs(n)
    else:
        # augmenting-path depth is bounded by the number of part types
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))
        rng = random.Random(seed)
        raw = _inductive_partition(n, k, rng)
    classes = tuple(
        ParallelClass(blocks=tuple(KSubset(b) for b in sorted(cls)))
        for cls in raw
    )
    return BaranyaiPartition(n=n, k=k, classes=classes)


def validate_partition(p: BaranyaiPartition) -> PartitionValidation:
    """Exhaustively re-check every structural invariant.

    Independent of how the partition was constructed; returns the first
    violated condition as a diagnostic.
    """
    n, k = p.n, p.k
    if k < 1 or n < 1 or n % k != 0:
        return PartitionValidation(False, f"invalid parameters n={n}, k={k}")
    expected_classes = binomial(n - 1, k - 1)
    if len(p.classes) != expected_classes:
        return PartitionValidation(
            False, f"expected {expected_classes} classes, found {len(p.classes)}")
    seen: set[tuple[int, ...]] = set()
    ground = set(range(1, n + 1))
    for ci, cls in enumerate(p.classes):
        if len(cls.blocks) != n // k:
            return PartitionValidation(
                False, f"class {ci}: expected {n // k} blocks, found {len(cls.blocks)}")
        covered: list[int] = []
        for b in cls.blocks:
            if b.k != k:
                return PartitionValidation(False, f"class {ci}: block {b.indices} has size {b.k}")
            if b.indices in seen:
                return PartitionValidation(False, f"duplicated block {b.indices}")
            seen.add(b.indices)
            covered.extend(b.indices)
        if set(covered) != ground or len(covered) != n:
            return PartitionValidation(False, f"class {ci} does not partition [n]")
    if len(seen) != binomial(n, k):
        return PartitionValidation(
            False, f"union covers {len(seen)} of {binomial(n, k)} k-sets")
    return PartitionValidation(True)


def partition_lower_bound_witnesses(
    config: Configuration, k: int, seed: int = 0
) -> SubsetFamily:
    """One non-negative block per parallel class: C(n-1,k-1) certified witnesses.

    Within each class the maximum-sum block is chosen (ties broken by
    lexicographically smallest index sequence), and its non-negativity is
    re-checked exactly: a class partitions [n], so its block sums add up to
    the total sum >= 0, forcing the maximum to be >= 0.
    """
    n = config.n
    if n % k != 0:
        raise ValueError(f"need k | n, got n={n}, k={k}")
    total = config.total_sum()
    if total < 0:
        raise ValueError(f"total sum must be non-negative, got {total}")
    partition = baranyai_partition(n, k, seed)
    scaled = config.scaled
    witnesses = []
    for cls in partition.classes:
        best = None
        best_sum = None
        for b in cls.blocks:
            s = sum(scaled[i - 1] for i in b.indices)
            if best_sum is None or s > best_sum or (s == best_sum and b.indices < best.indices):
                best, best_sum = b, s
        if best_sum < 0:
            raise AssertionError(
                f"class maximum-sum block {best.indices} is negative -- "
                "impossible for a configuration with non-negative total sum")
        witnesses.append(best)
    family = SubsetFamily.explicit(n, k, witnesses)
    if family.count != binomial(n - 1, k - 1):
        raise AssertionError("collided witnesses across classes -- partition invalid")
    for w in family.members:
        if ksum(config, w) < 0:
            raise AssertionError(f"witness {w.indices} re-evaluated negative")
    return family
