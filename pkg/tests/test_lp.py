import random
from fractions import Fraction

from mms.lp import (
    LinRow,
    check_farkas,
    check_point,
    fourier_motzkin_feasible,
    solve_feasibility,
)


def rows_from_ints(data):
    return [LinRow(tuple(Fraction(c) for c in coeffs), Fraction(rhs))
            for coeffs, rhs in data]


def test_trivial_systems():
    assert solve_feasibility([]).feasible
    r = solve_feasibility(rows_from_ints([(((1,)), 5)]))
    assert r.feasible and r.point[0] >= 5
    r = solve_feasibility(rows_from_ints([((1,), 2), ((-1,), -1)]))
    assert not r.feasible


def test_certificates_verify():
    rng = random.Random(5)
    feasible_seen = infeasible_seen = 0
    for _ in range(300):
        nvars = rng.randint(1, 5)
        nrows = rng.randint(1, 7)
        rows = rows_from_ints([
            (tuple(rng.randint(-4, 4) for _ in range(nvars)), rng.randint(-5, 5))
            for _ in range(nrows)
        ])
        res = solve_feasibility(rows)
        if res.feasible:
            feasible_seen += 1
            assert check_point(rows, res.point)
        else:
            infeasible_seen += 1
            assert check_farkas(rows, res.farkas)
    assert feasible_seen > 20 and infeasible_seen > 20


def test_simplex_agrees_with_fourier_motzkin():
    rng = random.Random(9)
    for _ in range(300):
        nvars = rng.randint(1, 4)
        nrows = rng.randint(1, 6)
        rows = rows_from_ints([
            (tuple(rng.randint(-3, 3) for _ in range(nvars)), rng.randint(-4, 4))
            for _ in range(nrows)
        ])
        assert solve_feasibility(rows).feasible == fourier_motzkin_feasible(rows)


def test_rational_coefficients():
    rows = [
        LinRow((Fraction(1, 3), Fraction(-1, 7)), Fraction(2, 5)),
        LinRow((Fraction(-1, 2), Fraction(1)), Fraction(0)),
        LinRow((Fraction(1), Fraction(1)), Fraction(-3)),
    ]
    res = solve_feasibility(rows)
    assert res.feasible and check_point(rows, res.point)
    assert fourier_motzkin_feasible(rows)


def test_degenerate_zero_rows():
    rows = rows_from_ints([((0, 0), 1)])
    res = solve_feasibility(rows)
    assert not res.feasible and check_farkas(rows, res.farkas)
    rows = rows_from_ints([((0, 0), -1), ((1, 1), 0)])
    assert solve_feasibility(rows).feasible


def test_farkas_combines_to_contradiction():
    # x1 >= x2, x2 >= x3, x3 >= x1 + 1 sums to 0 >= 1
    rows = rows_from_ints([
        ((1, -1, 0), 0),
        ((0, 1, -1), 0),
        ((-1, 0, 1), 1),
    ])
    res = solve_feasibility(rows)
    assert not res.feasible
    combined_rhs = sum(y * r.rhs for y, r in zip(res.farkas, rows))
    assert combined_rhs > 0
    for j in range(3):
        assert sum(y * r.coeffs[j] for y, r in zip(res.farkas, rows)) == 0
