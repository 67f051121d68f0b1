import itertools
import random

import pytest

from mms.lp import fourier_motzkin_feasible
from mms.numerics import KSubset, SubsetFamily, binomial, count_nonneg_ksums
from mms.solver import (
    FilterFamily,
    cover_dominated,
    cover_dominators,
    exact_A,
    filter_system,
    lp_feasible,
    maximal_nonmembers_of,
    minimal_elements_of,
    search_upper_bound,
    verify_conjecture_range,
    verify_certificate,
    _lp_feasible_raw,
)


def up_closure(seeds, n):
    """Oracle closure by breadth-first cover steps."""
    out = set(seeds)
    frontier = list(seeds)
    while frontier:
        cur = frontier.pop()
        for nxt in cover_dominators(cur):
            if nxt not in out:
                out.add(nxt)
                frontier.append(nxt)
    return frozenset(out)


def test_cover_moves_are_inverse():
    n, k = 7, 3
    for combo in itertools.combinations(range(1, n + 1), k):
        for up in cover_dominators(combo):
            assert combo in cover_dominated(up, n)
        for down in cover_dominated(combo, n):
            assert combo in cover_dominators(down)


def test_minimal_and_maximal_elements():
    n, k = 5, 2
    members = up_closure([(2, 3)], n)
    assert members == frozenset({(1, 2), (1, 3), (2, 3)})
    assert minimal_elements_of(members, n) == [(2, 3)]
    assert maximal_nonmembers_of(members, n, k) == [(1, 4)]


def test_lp_feasible_examples():
    n, k = 5, 2
    # the whole cube: trivially feasible with all ones
    all_members = frozenset(itertools.combinations(range(1, n + 1), k))
    cert = _lp_feasible_raw(all_members, n, k)
    assert cert.kind == "feasible"
    assert all(v >= 0 for v in cert.witness_config.values)
    # up-closure of {(1,2)} alone: infeasible
    cert = _lp_feasible_raw(up_closure([(1, 2)], n), n, k)
    assert cert.kind == "infeasible"
    assert cert.farkas_multipliers is not None
    # up-closure of {(2,3)}: feasible
    cert = _lp_feasible_raw(up_closure([(2, 3)], n), n, k)
    assert cert.kind == "feasible"
    count, _ = count_nonneg_ksums(cert.witness_config, k)
    assert count == 3


def test_lp_feasible_public_wrapper():
    n, k = 5, 2
    members = up_closure([(2, 3)], n)
    family = FilterFamily(
        n=n, k=k,
        minimal_elements=tuple(KSubset(m) for m in minimal_elements_of(members, n)),
        implied_members=SubsetFamily.explicit(n, k, (KSubset(m) for m in members)),
    )
    assert family.size == 3
    cert = lp_feasible(family)
    assert cert.kind == "feasible"
    assert verify_certificate(cert, members, n, k)


def test_certificates_recheck_and_fm_crosscheck():
    rng = random.Random(3)
    checked = 0
    for _ in range(60):
        n = rng.randint(3, 6)
        k = rng.randint(2, n - 1)
        seeds = [
            tuple(sorted(rng.sample(range(1, n + 1), k)))
            for _ in range(rng.randint(1, 3))
        ]
        members = up_closure(seeds, n) | up_closure([tuple(range(1, k + 1))], n)
        cert = _lp_feasible_raw(members, n, k)
        assert verify_certificate(cert, members, n, k)
        rows = filter_system(
            minimal_elements_of(members, n),
            maximal_nonmembers_of(members, n, k), n)
        assert fourier_motzkin_feasible(rows) == (cert.kind == "feasible")
        checked += 1
    assert checked == 60


def test_exact_A_spot_values():
    assert exact_A(4, 2).A_value == 3
    res = exact_A(5, 2)
    assert res.A_value == 3
    count, _ = count_nonneg_ksums(res.optimal_config, 2)
    assert count == 3
    assert exact_A(6, 2).A_value == 5
    assert exact_A(7, 2).A_value == 6


def test_exact_A_result_invariants():
    res = exact_A(6, 2)
    count, family = count_nonneg_ksums(res.optimal_config, 2)
    assert count == res.A_value
    assert family.members == res.optimal_family.implied_members.members
    assert not res.upper_bound_only
    assert res.nodes_explored >= 1
    assert res.A_value >= 1


def test_exact_A_baranyai_consistency():
    for n, k in ((4, 2), (6, 2), (8, 2), (6, 3)):
        assert exact_A(n, k).A_value == binomial(n - 1, k - 1)


def test_exact_A_budget_flag():
    res = exact_A(8, 2, budget=3)
    assert res.upper_bound_only
    assert res.A_value == 7  # star construction upper bound
    count, _ = count_nonneg_ksums(res.optimal_config, 2)
    assert count == res.A_value


def test_exact_A_rejects_ranges():
    with pytest.raises(ValueError):
        exact_A(30, 5)
    with pytest.raises(ValueError):
        exact_A(3, 4)


def test_search_upper_bound_examples():
    count, config = search_upper_bound(10, 3, "grid", 0)
    assert count <= 35
    assert config.total_sum() >= 0
    count, _ = search_upper_bound(6, 2, "grid", 0)
    assert count == 5  # cannot beat the partition bound
    count, _ = search_upper_bound(5, 2, "grid", 0)
    assert count == 3
    count, _ = search_upper_bound(5, 2, "anneal", 1)
    assert count == 3


def test_search_deterministic_given_seed():
    a = search_upper_bound(8, 3, "anneal", 5)
    b = search_upper_bound(8, 3, "anneal", 5)
    assert a == b


def test_verify_conjecture_range_k2():
    rows = verify_conjecture_range(4, 10, 2)
    verdicts = {r.n: r.verdict for r in rows}
    assert verdicts[5] == "counterexample"
    assert all(v == "equality" for n, v in verdicts.items() if n != 5)
    row5 = next(r for r in rows if r.n == 5)
    assert row5.a_value == 3 and row5.witness_config is not None
    count, _ = count_nonneg_ksums(row5.witness_config, 2)
    assert count == 3 < binomial(4, 1)


def test_verify_conjecture_range_budget_exhaustion():
    rows = verify_conjecture_range(7, 7, 2, node_budget=2)
    assert rows[0].verdict == "undecided"
    assert rows[0].equals_target is None
    assert rows[0].upper == binomial(6, 1)  # star fallback


def test_verify_conjecture_range_k3():
    rows = verify_conjecture_range(9, 10, 3)
    by_n = {r.n: r for r in rows}
    assert by_n[9].verdict == "equality"
    assert by_n[9].lower == by_n[9].upper == binomial(8, 2) == 28
    assert by_n[10].verdict == "counterexample"
    assert by_n[10].upper == 35
    count, _ = count_nonneg_ksums(by_n[10].witness_config, 3)
    assert count == 35
