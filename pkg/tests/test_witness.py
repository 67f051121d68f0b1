import random
from fractions import Fraction

import pytest

from mms.constructions import star_config
from mms.numerics import Configuration, binomial, count_nonneg_ksums, ksum
from mms.witness import (
    NonCentralStageError,
    eq2_bound,
    extract_thm1,
    extract_thm2,
    substitution_family,
    two_range_parameters,
)

from genconfig import random_configuration


def recheck_family(config, family):
    """Independent soundness check: exact Fraction re-summation of every
    explicit member (the library certifies through scaled integers)."""
    if not family.is_explicit:
        return
    for s in family.members:
        assert ksum(config, s) >= 0, s.indices


# --- eq2_bound ---------------------------------------------------------------

def test_eq2_examples():
    assert eq2_bound(star_config(8, 3).config, 4) == 1
    ones = Configuration.from_values([1] * 9)
    for j in range(1, 9):
        assert eq2_bound(ones, j) == Fraction(-(9 - j), j)
    assert eq2_bound(Configuration.from_values([3, 3, 3, -4, -4]), 2) == Fraction(-9, 2)


def test_eq2_rejections():
    with pytest.raises(ValueError):
        eq2_bound(Configuration.from_values([1, -5]), 1)
    with pytest.raises(ValueError):
        eq2_bound(Configuration.from_values([1, 1]), 2)


def test_eq2_bound_holds_randomly():
    rng = random.Random(31)
    for _ in range(200):
        config = random_configuration(rng, rng.randint(2, 20))
        j = rng.randint(1, config.n - 1)
        assert config.value(1) >= eq2_bound(config, j)


# --- first route ---------------------------------------------------------------

def test_thm1_star_central():
    rep = extract_thm1(star_config(40, 2).config, 2)
    assert rep.branch == "central_at_top"
    assert rep.witnesses.count == 39 == rep.guaranteed_count
    assert rep.certified and rep.mode == "explicit"
    assert rep.meets_threshold_target is True
    assert all(1 in s for s in rep.witnesses.members)
    recheck_family(star_config(40, 2).config, rep.witnesses)


def test_thm1_all_ones_central_checked_first():
    # centrality is tested before the negativity count
    rep = extract_thm1(Configuration.from_values([1] * 40), 2)
    assert rep.branch == "central_at_top"
    assert rep.witnesses.count == binomial(39, 1)


def test_thm1_few_negatives():
    config = Configuration.from_values([1] * 37 + [-6, -6, -6])
    rep = extract_thm1(config, 2)
    assert rep.branch == "few_negatives"
    assert rep.witnesses.count == binomial(37, 2)
    recheck_family(config, rep.witnesses)


def test_thm1_trim_branch_k2():
    config = Configuration.from_values([1] * 33 + [-4] * 7)
    rep = extract_thm1(config, 2)
    assert rep.branch == "trim_and_partition_plus_top_zone"
    # m = 38, so C(37,1) partition witnesses plus C(20,1) top-zone ones
    assert rep.guaranteed_count == 37 + 20 == rep.witnesses.count
    assert rep.guaranteed_count >= binomial(36, 1) + binomial(20, 1)  # paper-level form
    assert rep.certified and rep.meets_threshold_target is True
    recheck_family(config, rep.witnesses)
    with_1 = {s for s in rep.witnesses.members if 1 in s}
    without_1 = rep.witnesses.members - with_1
    assert len(with_1) == 20 and len(without_1) == 37
    total, _ = count_nonneg_ksums(config, 2)
    assert rep.witnesses.count <= total


def test_thm1_trim_branch_k3():
    config = Configuration.from_values([2] * 20 + [-7] * 8 + [5, 11])
    assert config.total_sum() == 0
    rep = extract_thm1(config, 3)
    assert rep.branch == "trim_and_partition_plus_top_zone"
    m = 3 * (30 // 3) - 3
    assert rep.guaranteed_count == binomial(m - 1, 2) + binomial(10, 2)
    recheck_family(config, rep.witnesses)


def test_thm1_counted_mode():
    rep = extract_thm1(star_config(5200, 3).config, 3, mode="counted", seed=1)
    assert rep.mode == "counted"
    assert rep.witnesses.count == binomial(5199, 2)
    assert rep.sample_size == 1000 and rep.certified


def test_thm1_rejections():
    with pytest.raises(ValueError):
        extract_thm1(Configuration.from_values([1, -5, 1]), 2)  # negative sum
    with pytest.raises(ValueError):
        extract_thm1(Configuration.from_values([1, 1, 1, 1]), 2)  # n < 2k+1


def test_thm1_quantitative_guarantee_k2():
    rng = random.Random(41)
    for n in range(32, 65):
        for pattern in ("uniform", "heavy_tail", "half_split", "near_star"):
            config = random_configuration(rng, n, pattern)
            rep = extract_thm1(config, 2)
            assert rep.certified
            assert rep.witnesses.count >= n - 1, (n, pattern, rep.branch)
            assert rep.meets_threshold_target is True


# --- second route ----------------------------------------------------------------

def test_thm2_star_terminates_at_stage_one():
    rep = extract_thm2(star_config(5200, 3).config, 3)
    assert rep.branch == "central_at_stage_i"
    assert rep.trace[-1].stage_index == 1 and rep.trace[-1].central
    assert rep.guaranteed_count == binomial(5199, 2)
    assert rep.mode == "counted" and rep.sample_size == 1000
    assert rep.meets_threshold_target is True


def test_thm2_second_stage_central():
    # one huge negative defeats stage 1; stage 2 is central
    config = Configuration.from_values([5] * 99 + [-400])
    rep = extract_thm2(config, 3)
    assert rep.branch == "central_at_stage_i"
    assert rep.trace[-1].stage_index == 2
    assert rep.guaranteed_count == 2 * binomial(96, 2) == rep.witnesses.count
    recheck_family(config, rep.witnesses)
    # distinctness of the substitution family
    assert len(rep.witnesses.members) == rep.witnesses.count


def test_thm2_two_range_half_split():
    config = Configuration.from_values([1] * 2600 + [-1] * 2600)
    rep = extract_thm2(config, 3)
    assert rep.branch == "two_range_family"
    assert len(rep.trace) == 866 and not any(t.central for t in rep.trace)
    assert rep.guaranteed_count == binomial(866, 3)
    assert rep.guaranteed_count >= binomial(5199, 2)
    assert rep.certified and rep.meets_threshold_target is True


def test_thm2_two_range_explicit_small():
    # ties count as non-negative, so a k=2 half-split is centrally resolved;
    # a deeper negative defeats every stage instead
    config = Configuration.from_values([1] * 8 + [-2] * 4)
    rep = extract_thm2(config, 2)
    assert rep.branch == "two_range_family"
    a, j = two_range_parameters(12, 2)
    assert (a, j) == (2, 0)
    assert rep.witnesses.count == binomial(3, 2)
    recheck_family(config, rep.witnesses)


def test_thm2_two_range_with_medium_range():
    # k = 4: a = 3, so each witness takes one medium element
    config = Configuration.from_values([1] * 20 + [-1] * 20)
    rep = extract_thm2(config, 4)
    assert rep.branch == "two_range_family"
    a, j = two_range_parameters(40, 4)
    assert a == 3 and j >= 1
    assert rep.witnesses.count == binomial(5, 3) * binomial(j, 1)
    recheck_family(config, rep.witnesses)


def test_thm2_stage_arithmetic():
    config = Configuration.from_values([1] * 30 + [-1] * 30)
    rep = extract_thm2(config, 3)
    for t in rep.trace:
        assert t.stage_set_size == 60 - (t.stage_index - 1) * 3
        assert t.removed_bottom == (t.stage_index - 1) * 2
        assert t.surviving_top == t.stage_index


def test_thm2_witnesses_subset_of_all_nonneg():
    rng = random.Random(53)
    for _ in range(30):
        n = rng.randint(12, 24)
        config = random_configuration(rng, n)
        rep = extract_thm2(config, 3)
        if rep.witnesses.is_explicit:
            total, family = count_nonneg_ksums(config, 3)
            assert rep.witnesses.count <= total
            assert rep.witnesses.members <= family.members


def test_thm2_rejections():
    with pytest.raises(ValueError):
        extract_thm2(Configuration.from_values([1] * 11), 3)  # n < 4k
    with pytest.raises(ValueError):
        extract_thm2(Configuration.from_values([1, 1, -5] + [0] * 9), 3)


def test_two_range_parameters_rigorous():
    import math
    assert two_range_parameters(5200, 2) == (2, 0)
    assert two_range_parameters(5200, 3) == (3, 0)  # ceil(3/ln 3) = 3 = k
    for k in (4, 5, 6, 10, 20):
        a, j = two_range_parameters(5200, k)
        assert a == min(math.ceil(k / math.log(k)), k)
        assert j == int(5200 / (2 * math.log(k)))
        assert 1 <= a < k


# --- substitution families --------------------------------------------------------

def test_substitution_stage_one_equals_top_family():
    fam = substitution_family(star_config(10, 2).config, 1, 2)
    assert fam.count == 9
    assert all(1 in s for s in fam.members)
    rep = extract_thm1(star_config(10, 2).config, 2)
    assert fam.members == rep.witnesses.members


def test_substitution_stage_two():
    config = Configuration.from_values([5] * 99 + [-400])
    fam = substitution_family(config, 2, 3)
    assert fam.count == 2 * binomial(96, 2)
    assert len({s.indices for s in fam.members}) == fam.count
    recheck_family(config, fam)


def test_substitution_rejects_non_central_stage():
    config = Configuration.from_values([1] * 2600 + [-1] * 2600)
    with pytest.raises(NonCentralStageError):
        substitution_family(config, 1, 3)


# --- soundness sweep (the smaller in-module version) -------------------------------

def test_witness_soundness_random_sweep():
    rng = random.Random(97)
    reports = 0
    for _ in range(120):
        k = rng.choice((2, 3, 4))
        n = rng.randint(2 * k + 1, 40)
        config = random_configuration(rng, n)
        rep = extract_thm1(config, k, seed=rng.randint(0, 100))
        recheck_family(config, rep.witnesses)
        reports += 1
        if n >= 4 * k:
            rep = extract_thm2(config, k, seed=rng.randint(0, 100))
            recheck_family(config, rep.witnesses)
            reports += 1
    assert reports >= 150


def test_thm1_witnesses_never_exceed_total_count():
    rng = random.Random(101)
    for _ in range(40):
        k = rng.choice((2, 3))
        n = rng.randint(2 * k + 1, 18)
        config = random_configuration(rng, n)
        rep = extract_thm1(config, k)
        total, family = count_nonneg_ksums(config, k)
        assert rep.witnesses.count <= total
        if rep.witnesses.is_explicit:
            assert rep.witnesses.members <= family.members
