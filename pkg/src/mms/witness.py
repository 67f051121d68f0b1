"""Certifying witness extraction: explicit or exactly-counted families of
non-negative k-subsets with guaranteed cardinalities.

Both extraction routes share the same discipline: every branch condition is
re-checked in exact arithmetic before any witness is emitted, every explicit
witness is re-summed exactly, and counted families are certified through a
seeded uniform sample plus an exact check of their minimum-sum member. A
violated check raises instead of emitting unsound output.

`log` means the natural logarithm throughout; the k(4e ln k)^k threshold
arises from k^(k/ln k) = e^k, which only holds base-e.
"""
from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .bounds import thm2_threshold_exceeded
from .intervals import RatInterval, decide_less, ln_interval
from .numerics import Configuration, KSubset, SubsetFamily, binomial
from .partition import (
    PARTITION_SIZE_LIMIT,
    partition_lower_bound_witnesses,
)

#: Families up to this size are enumerated; larger ones are counted+sampled.
EXPLICIT_LIMIT = 10**6
DEFAULT_SAMPLE_SIZE = 1000


class RangeInfeasibleError(ValueError):
    """Medium-range indices exceed the surviving working set (possible
    outside the theorem's n-range)."""


class NonCentralStageError(ValueError):
    """Requested a substitution family at a stage whose maximum is not central."""


class WitnessSoundnessError(AssertionError):
    """An emitted witness re-evaluated negative; indicates a bug, never
    tolerated silently."""


@dataclass(frozen=True)
class StageTrace:
    stage_index: int
    surviving_top: int        # original index of the working set's maximum
    removed_bottom: int       # total count of removed smallest elements
    central: bool
    stage_set_size: int       # n - (stage_index - 1) * k


@dataclass(frozen=True)
class WitnessReport:
    branch: str
    witnesses: SubsetFamily
    guaranteed_count: int
    trace: tuple[StageTrace, ...]
    certified: bool
    mode: str                              # "explicit" | "counted"
    sample_size: int                       # members re-checked in counted mode
    below_guarantee: bool                  # count < C(n-1, k-1)
    meets_threshold_target: bool | None    # None when below the theorem threshold
    notes: tuple[str, ...] = ()


def eq2_bound(config: Configuration, j: int) -> Fraction:
    """The sorted-average bound x_1 >= -x_(j+1) (n-j)/j, returned exactly.

    Re-derives its own proof obligation j x_1 + (n-j) x_(j+1) >= sum(X) >= 0
    before returning.
    """
    n = config.n
    total = config.total_sum()
    if total < 0:
        raise ValueError(f"total sum must be non-negative, got {total}")
    if not 1 <= j <= n - 1:
        raise ValueError(f"j={j} out of range [1, {n - 1}]")
    x1 = config.value(1)
    xj1 = config.value(j + 1)
    if j * x1 + (n - j) * xj1 < total:
        raise AssertionError("sorted-average inequality violated -- config not sorted?")
    bound = -xj1 * Fraction(n - j, j)
    if x1 < bound:
        raise AssertionError("x_1 fell below its own averaging bound")
    return bound


def _certify_explicit(
    config: Configuration, members: frozenset[KSubset], workers: int = 1
) -> None:
    """Exact re-evaluation of every member; raises on any negative sum."""
    scaled = config.scaled

    def bad(chunk) -> KSubset | None:
        for s in chunk:
            if sum(scaled[i - 1] for i in s.indices) < 0:
                return s
        return None

    items = list(members)
    if workers > 1 and len(items) > 256:
        size = (len(items) + workers - 1) // workers
        chunks = [items[i:i + size] for i in range(0, len(items), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            failures = [f for f in pool.map(bad, chunks) if f is not None]
        first = min(failures, key=lambda s: s.indices) if failures else None
    else:
        first = bad(items)
    if first is not None:
        raise WitnessSoundnessError(f"witness {first.indices} has negative sum")


def _certify_sample(
    config: Configuration,
    draw,                    # rng -> KSubset
    rng: random.Random,
    sample_size: int,
) -> int:
    scaled = config.scaled
    for _ in range(sample_size):
        s = draw(rng)
        if sum(scaled[i - 1] for i in s.indices) < 0:
            raise WitnessSoundnessError(f"sampled witness {s.indices} has negative sum")
    return sample_size


def _prefixed_combinations(prefix: tuple[int, ...], pool: range, r: int):
    for combo in itertools.combinations(pool, r):
        yield KSubset(tuple(sorted(prefix + combo)))


def _report_common(
    config: Configuration,
    k: int,
    threshold_met: bool,
    witnesses: SubsetFamily,
    **kw,
) -> WitnessReport:
    target = binomial(config.n - 1, k - 1)
    meets = None
    if threshold_met:
        if witnesses.count < target:
            raise AssertionError(
                "count fell below the target inside the theorem range -- bug")
        meets = True
    return WitnessReport(
        witnesses=witnesses,
        below_guarantee=witnesses.count < target,
        meets_threshold_target=meets,
        **kw,
    )


# --- first extraction route (threshold 3 k^(k+1) + k^3) --------------------

def extract_thm1(
    config: Configuration,
    k: int,
    mode: str = "auto",
    sample_size: int = DEFAULT_SAMPLE_SIZE,
    seed: int = 0,
    workers: int = 1,
) -> WitnessReport:
    """Three-branch certified extraction.

    (a) x_1 central: all C(n-1,k-1) k-subsets through index 1.
    (b) fewer than 2k negatives: all k-subsets of the non-negative prefix.
    (c) otherwise: trim x_1 plus the k-1 smallest, then n mod k more, down to
        the largest multiple m of k exceeding n-2k (the extra removals are
        verified negative, so the trimmed sum stays >= 0); take one witness
        per parallel class of the trimmed instance, plus {x_1} with any k-1
        of the floor(n/k) largest remaining values. The families are disjoint
        (index 1 membership differs).
    """
    n = config.n
    total = config.total_sum()
    if total < 0:
        raise ValueError(f"total sum must be non-negative, got {total}")
    if n < 2 * k + 1:
        raise ValueError(f"need n >= 2k+1, got n={n}, k={k}")
    if mode not in ("auto", "explicit", "counted"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    scaled = config.scaled
    threshold_met = n >= 3 * k ** (k + 1) + k**3
    central_sum = scaled[0] + config.scaled_range_sum(n - k + 2, n)
    trace = (StageTrace(
        stage_index=1, surviving_top=1, removed_bottom=0,
        central=central_sum >= 0, stage_set_size=n),)

    if central_sum >= 0:
        count = binomial(n - 1, k - 1)
        family, mode_used, sampled = _materialize(
            config, n, k, count, mode, sample_size, rng, workers,
            enumerate_members=lambda: _prefixed_combinations((1,), range(2, n + 1), k - 1),
            draw=lambda r: KSubset(tuple(sorted((1,) + tuple(r.sample(range(2, n + 1), k - 1))))),
        )
        return _report_common(
            config, k, threshold_met, family,
            branch="central_at_top", guaranteed_count=count, trace=trace,
            certified=True, mode=mode_used, sample_size=sampled,
        )

    neg_count = sum(1 for v in scaled if v < 0)
    if neg_count < 2 * k:
        nonneg = n - neg_count
        count = binomial(nonneg, k)
        family, mode_used, sampled = _materialize(
            config, n, k, count, mode, sample_size, rng, workers,
            enumerate_members=lambda: (
                KSubset(c) for c in itertools.combinations(range(1, nonneg + 1), k)),
            draw=lambda r: KSubset(tuple(sorted(r.sample(range(1, nonneg + 1), k)))),
        )
        return _report_common(
            config, k, threshold_met, family,
            branch="few_negatives", guaranteed_count=count, trace=trace,
            certified=True, mode=mode_used, sample_size=sampled,
        )

    # branch (c): trim to the largest multiple of k exceeding n - 2k
    notes: list[str] = []
    r = n % k
    m = n - k - r
    extra_positions = range(m + 2, m + 2 + r)  # removed after x_1 and the k-1 smallest
    for pos in extra_positions:
        if scaled[pos - 1] >= 0:
            raise AssertionError(
                f"trim removed a non-negative value at position {pos}; "
                "the >= 2k negatives precondition should prevent this")
    trimmed_sum = config.scaled_range_sum(2, m + 1)
    if trimmed_sum < 0:
        raise AssertionError("trimmed configuration has negative sum -- aborting")
    trimmed = Configuration(config.values[1:m + 1])

    part_count = binomial(m - 1, k - 1)
    part_members: frozenset[KSubset] | None = None
    if binomial(m, k) <= PARTITION_SIZE_LIMIT:
        inner = partition_lower_bound_witnesses(trimmed, k, seed)
        part_members = frozenset(
            KSubset(tuple(i + 1 for i in s.indices)) for s in inner.members)
        if len(part_members) != part_count:
            raise AssertionError("partition witness count mismatch")
    else:
        notes.append(
            "partition family counted by the multiple-of-k bound "
            "(instance above the partition size limit)")

    z = n // k  # |Z|, justified by eq2_bound at j = floor(n/k)
    eq2_bound(config, z)
    zone_count = binomial(z, k - 1)
    if zone_count > 0:
        worst = scaled[0] + config.scaled_range_sum(z - k + 3, z + 1)
        if worst < 0:
            raise AssertionError("top-zone worst member negative despite the averaging bound")

    guaranteed = part_count + zone_count
    want_explicit = (
        mode == "explicit"
        or (mode == "auto" and guaranteed <= EXPLICIT_LIMIT and part_members is not None)
    )
    if want_explicit and part_members is None:
        raise ValueError(
            "explicit mode impossible: partition instance above the size limit")
    if want_explicit and guaranteed > EXPLICIT_LIMIT:
        raise ValueError(f"explicit family of {guaranteed} exceeds limit {EXPLICIT_LIMIT}")

    sampled = 0
    if want_explicit:
        zone = frozenset(_prefixed_combinations((1,), range(2, z + 2), k - 1))
        members = part_members | zone
        if len(members) != guaranteed:
            raise AssertionError("trim and top-zone families are not disjoint")
        _certify_explicit(config, members, workers)
        family = SubsetFamily.explicit(n, k, members)
        mode_used = "explicit"
    else:
        if part_members is not None:
            _certify_explicit(config, part_members, workers)
        if zone_count > 0:
            sampled = _certify_sample(
                config,
                lambda r: KSubset(tuple(sorted((1,) + tuple(r.sample(range(2, z + 2), k - 1))))),
                rng, sample_size,
            )
        family = SubsetFamily.counted(n, k, guaranteed)
        mode_used = "counted"

    return _report_common(
        config, k, threshold_met, family,
        branch="trim_and_partition_plus_top_zone", guaranteed_count=guaranteed,
        trace=trace, certified=True, mode=mode_used, sample_size=sampled,
        notes=tuple(notes),
    )


def _materialize(
    config, n, k, count, mode, sample_size, rng, workers, enumerate_members, draw
):
    """Build an explicit family or a counted one with sample certification."""
    if mode == "explicit" and count > EXPLICIT_LIMIT:
        raise ValueError(f"explicit family of {count} exceeds limit {EXPLICIT_LIMIT}")
    if count == 0:
        return SubsetFamily.explicit(n, k, ()), "explicit", 0
    if mode != "counted" and count <= EXPLICIT_LIMIT:
        members = frozenset(enumerate_members())
        if len(members) != count:
            raise AssertionError(f"enumerated {len(members)} members, expected {count}")
        _certify_explicit(config, members, workers)
        return SubsetFamily.explicit(n, k, members), "explicit", 0
    sampled = _certify_sample(config, draw, rng, sample_size)
    return SubsetFamily.counted(n, k, count), "counted", sampled


# --- second extraction route (threshold k (4e ln k)^k) ----------------------

def _smallest_multiplier_exceeding(k: int) -> int:
    """Least integer m with m ln k > k (= ceil(k / ln k); never a tie)."""
    m = 1
    while m < k:
        exceeds = decide_less(
            lambda t: RatInterval.point(k),
            lambda t, m=m: ln_interval(k, t).scale(m),
        )
        if exceeds:
            return m
        m += 1
    return k


def _floor_n_over_2ln(n: int, k: int) -> int:
    """floor(n / (2 ln k)) decided rigorously (2 j ln k = n never happens)."""
    j = max(0, int(n / (2 * math.log(k))))

    def below(c: int) -> bool:
        # is 2 c ln k < n ?
        return decide_less(
            lambda t, c=c: ln_interval(k, t).scale(2 * c),
            lambda t: RatInterval.point(n),
        )

    while j > 0 and not below(j):
        j -= 1
    while below(j + 1):
        j += 1
    return j


def two_range_parameters(n: int, k: int) -> tuple[int, int]:
    """(a, j): a = ceil(k / ln k) clamped to [1, k] (a = k when ln k <= 1),
    j = floor(n / (2 ln k)) (0 when a = k; no medium range is needed)."""
    if k <= 2:  # ln k <= 1
        return k, 0
    a = min(_smallest_multiplier_exceeding(k), k)
    if a == k:
        return k, 0
    return a, _floor_n_over_2ln(n, k)


def extract_thm2(
    config: Configuration,
    k: int,
    mode: str = "auto",
    sample_size: int = DEFAULT_SAMPLE_SIZE,
    seed: int = 0,
    workers: int = 1,
) -> WitnessReport:
    """Iterated-centrality extraction with the two-range fallback.

    Stage i works on X_i = X minus the i-1 previous maxima and (i-1)(k-1)
    smallest elements; its sum only grows while stages stay non-central. The
    first central stage yields the substitution family (every x_j with j <= i
    may replace the stage maximum). If no stage up to floor(n/2k) is central,
    witnesses combine `a` indices from [1, T] with k-a indices from
    (T, T+j]; the worst member is verified exactly, and is non-negative for
    every input meeting the preconditions because a >= k j / |X_T| always
    holds with this choice of a and j.
    """
    n = config.n
    total = config.total_sum()
    if total < 0:
        raise ValueError(f"total sum must be non-negative, got {total}")
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    if n < 4 * k:
        raise ValueError(f"need n >= 4k, got n={n}, k={k}")
    if mode not in ("auto", "explicit", "counted"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    scaled = config.scaled
    threshold_met = thm2_threshold_exceeded(n, k)
    big_t = n // (2 * k)
    trace: list[StageTrace] = []

    for i in range(1, big_t + 1):
        bottom = n - (i - 1) * (k - 1)
        size = bottom - i + 1
        if config.scaled_range_sum(i, bottom) < 0:
            raise AssertionError(f"working set sum negative at stage {i} -- bug")
        central_sum = scaled[i - 1] + config.scaled_range_sum(bottom - k + 2, bottom)
        central = central_sum >= 0
        trace.append(StageTrace(
            stage_index=i, surviving_top=i, removed_bottom=(i - 1) * (k - 1),
            central=central, stage_set_size=size))
        if not central:
            continue
        count = i * binomial(size - 1, k - 1)
        inner = range(i + 1, bottom + 1)

        def members():
            for j_top in range(1, i + 1):
                yield from _prefixed_combinations((j_top,), inner, k - 1)

        def draw(r: random.Random) -> KSubset:
            j_top = r.randint(1, i)
            rest = r.sample(inner, k - 1)
            return KSubset(tuple(sorted((j_top, *rest))))

        family, mode_used, sampled = _materialize(
            config, n, k, count, mode, sample_size, rng, workers, members, draw)
        return _report_common(
            config, k, threshold_met, family,
            branch="central_at_stage_i", guaranteed_count=count,
            trace=tuple(trace), certified=True, mode=mode_used,
            sample_size=sampled,
        )

    # no central stage: two-range family inside X_T
    a, j = two_range_parameters(n, k)
    bottom_t = n - (big_t - 1) * (k - 1)
    if a < k and big_t + j > bottom_t:
        raise RangeInfeasibleError(
            f"medium range (T, T+j] = ({big_t}, {big_t + j}] exceeds the "
            f"surviving working set (last index {bottom_t})")
    count = binomial(big_t, a) * binomial(j, k - a)
    if count > 0:
        worst = config.scaled_range_sum(big_t - a + 1, big_t)
        if a < k:
            worst += config.scaled_range_sum(big_t + j - (k - a) + 1, big_t + j)
        if worst < 0:
            raise WitnessSoundnessError(
                "two-range worst member negative -- impossible when the stage "
                "sums are non-negative")

    top = range(1, big_t + 1)
    medium = range(big_t + 1, big_t + j + 1)

    def members():
        for hi in itertools.combinations(top, a):
            if a == k:
                yield KSubset(hi)
                continue
            for lo in itertools.combinations(medium, k - a):
                yield KSubset(hi + lo)

    def draw(r: random.Random) -> KSubset:
        hi = r.sample(top, a)
        lo = r.sample(medium, k - a) if a < k else []
        return KSubset(tuple(sorted(hi + lo)))

    family, mode_used, sampled = _materialize(
        config, n, k, count, mode, sample_size, rng, workers, members, draw)
    return _report_common(
        config, k, threshold_met, family,
        branch="two_range_family", guaranteed_count=count,
        trace=tuple(trace), certified=True, mode=mode_used,
        sample_size=sampled,
        notes=(f"a={a}, j={j}",),
    )


def substitution_family(config: Configuration, stage: int, k: int) -> SubsetFamily:
    """The explicit stage family: {x_j} union S for every j <= stage and
    every (k-1)-subset S of the stage working set minus its maximum.

    Requires the stage maximum to be central there; each witness is then
    non-negative because x_j >= x_stage. Stage 1 is exactly the family of
    all k-subsets through index 1.
    """
    n = config.n
    if stage < 1:
        raise ValueError(f"stage must be >= 1, got {stage}")
    bottom = n - (stage - 1) * (k - 1)
    if bottom - stage + 1 < k:
        raise ValueError(f"stage {stage} working set smaller than k")
    scaled = config.scaled
    central_sum = scaled[stage - 1] + config.scaled_range_sum(bottom - k + 2, bottom)
    if central_sum < 0:
        raise NonCentralStageError(
            f"stage {stage} maximum is not central (worst sum {central_sum} < 0)")
    count = stage * binomial(bottom - stage, k - 1)
    if count > EXPLICIT_LIMIT:
        raise ValueError(f"explicit family of {count} exceeds limit {EXPLICIT_LIMIT}")
    members = frozenset(
        s
        for j_top in range(1, stage + 1)
        for s in _prefixed_combinations((j_top,), range(stage + 1, bottom + 1), k - 1)
    )
    if len(members) != count:
        raise AssertionError("substitution family size mismatch")
    _certify_explicit(config, members)
    return SubsetFamily.explicit(n, k, members)
