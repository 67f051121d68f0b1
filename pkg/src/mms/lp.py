"""Exact rational linear feasibility with certificates.

Systems are lists of rows `coeffs . x >= rhs` over free variables. The main
solver is a Phase-I simplex with Bland's rule (guaranteed termination) run
entirely in Fraction arithmetic; it returns either a satisfying point or
Farkas multipliers y >= 0 with y^T A = 0 and y^T b > 0, i.e. an exact
derivation of the contradiction 0 >= positive. A Fourier-Motzkin eliminator
serves as an independent cross-check for small systems.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LinRow:
    """coeffs . x >= rhs"""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction


@dataclass(frozen=True)
class FeasResult:
    feasible: bool
    point: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


def check_point(rows: list[LinRow], point: tuple[Fraction, ...]) -> bool:
    return all(
        sum(c * x for c, x in zip(r.coeffs, point)) >= r.rhs for r in rows
    )


def check_farkas(rows: list[LinRow], mult: tuple[Fraction, ...]) -> bool:
    """Multipliers must be >= 0, cancel every variable, and combine the
    right-hand sides to something strictly positive."""
    if len(mult) != len(rows) or any(y < 0 for y in mult):
        return False
    nvars = len(rows[0].coeffs)
    for j in range(nvars):
        if sum(y * r.coeffs[j] for y, r in zip(mult, rows)) != 0:
            return False
    return sum(y * r.rhs for y, r in zip(mult, rows)) > 0


def solve_feasibility(rows: list[LinRow]) -> FeasResult:
    """Decide `A x >= b` over free x, in exact rational arithmetic."""
    if not rows:
        return FeasResult(True, point=())
    nvars = len(rows[0].coeffs)
    nrows = len(rows)
    # Standard form: x = u - v (u, v >= 0), surplus s >= 0, one artificial
    # per row. Rows with rhs <= 0 are negated so the right-hand side is
    # non-negative and the artificial basis is primal-feasible.
    sigma = [ONE if r.rhs > 0 else -ONE for r in rows]
    ncols = 2 * nvars + 2 * nrows  # u | v | s | artificials
    art0 = 2 * nvars + nrows
    tableau: list[list[Fraction]] = []
    for i, r in enumerate(rows):
        row = [ZERO] * (ncols + 1)
        for j, c in enumerate(r.coeffs):
            row[j] = sigma[i] * c
            row[nvars + j] = -sigma[i] * c
        row[2 * nvars + i] = -sigma[i]
        row[art0 + i] = ONE
        row[ncols] = sigma[i] * r.rhs
        tableau.append(row)
    basis = [art0 + i for i in range(nrows)]
    cost = [ZERO] * ncols
    for i in range(nrows):
        cost[art0 + i] = ONE

    def entering() -> int | None:
        # Bland: smallest eligible column with negative reduced cost;
        # artificials never re-enter. Only the rows with a basic artificial
        # carry cost, so the reduced cost needs just those rows.
        art_rows = [i for i in range(nrows) if basis[i] >= art0]
        in_basis = set(basis)
        for j in range(art0):
            if j in in_basis:
                continue
            if sum(tableau[i][j] for i in art_rows) > 0:
                return j
        return None

    while True:
        enter = entering()
        if enter is None:
            break
        leave = None
        best_ratio = None
        for i in range(nrows):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][ncols] / a
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leave])):
                    best_ratio = ratio
                    leave = i
        if leave is None:
            raise AssertionError("phase-I objective unbounded -- impossible")
        piv = tableau[leave][enter]
        tableau[leave] = [x / piv for x in tableau[leave]]
        for i in range(nrows):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[leave])]
        basis[leave] = enter

    objective = sum(
        tableau[i][ncols] for i in range(nrows) if basis[i] >= art0)
    if objective == 0:
        point = [ZERO] * nvars
        for i, b in enumerate(basis):
            if b < nvars:
                point[b] += tableau[i][ncols]
            elif b < 2 * nvars:
                point[b - nvars] -= tableau[i][ncols]
        pt = tuple(point)
        if not check_point(rows, pt):
            raise AssertionError("simplex produced an invalid feasible point")
        return FeasResult(True, point=pt)

    # Dual values off the artificial columns (they started as the identity,
    # so those columns now hold B^{-1}); multipliers map back through the
    # row negations.
    cb = [cost[b] for b in basis]
    mult = []
    for i in range(nrows):
        y_i = sum(cb[r] * tableau[r][art0 + i] for r in range(nrows))
        mult.append(sigma[i] * y_i)
    fk = tuple(mult)
    if not check_farkas(rows, fk):
        raise AssertionError("simplex produced an invalid Farkas certificate")
    return FeasResult(False, farkas=fk)


FM_MAX_VARS = 8


def fourier_motzkin_feasible(rows: list[LinRow]) -> bool:
    """Independent feasibility verdict by variable elimination (<= 8 vars)."""
    if not rows:
        return True
    nvars = len(rows[0].coeffs)
    if nvars > FM_MAX_VARS:
        raise ValueError(f"Fourier-Motzkin limited to {FM_MAX_VARS} variables")
    system = {(r.coeffs, r.rhs) for r in rows}
    for v in range(nvars):
        lower, upper, rest = [], [], []
        for coeffs, rhs in system:
            c = coeffs[v]
            if c > 0:
                lower.append((coeffs, rhs))
            elif c < 0:
                upper.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        new = set(rest)
        for lc, lb in lower:
            for uc, ub in upper:
                # scale so the eliminated coefficients cancel
                a, b = lc[v], -uc[v]
                coeffs = tuple(b * x + a * y for x, y in zip(lc, uc))
                new.add((_normalize(coeffs), _normalize_rhs(coeffs, b * lb + a * ub)))
        system = new
    return all(rhs <= 0 for _, rhs in system)


def _normalize(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    scale = _row_scale(coeffs)
    return tuple(c / scale for c in coeffs) if scale != 1 else coeffs


def _normalize_rhs(coeffs: tuple[Fraction, ...], rhs: Fraction) -> Fraction:
    scale = _row_scale(coeffs)
    return rhs / scale if scale != 1 else rhs


def _row_scale(coeffs: tuple[Fraction, ...]) -> Fraction:
    for c in coeffs:
        if c != 0:
            return abs(c)
    return ONE
