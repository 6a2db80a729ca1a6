"""Exact rational linear programming (dense two-phase simplex, Bland's rule).

Small and exact rather than fast: every entry is a fractions.Fraction, Bland's
rule guarantees termination, and optima are certified by the final tableau.
Problem sizes in this package stay in the low hundreds of rows.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _simplex_phase(tableau, basis, nrows, ncols):
    """Run Bland-rule simplex on a tableau in canonical form (min problem).

    tableau: list of rows; row 0 is the objective (reduced costs, rhs last),
    rows 1..nrows are constraints.  Returns OPTIMAL or UNBOUNDED.
    """
    while True:
        enter = -1
        for j in range(ncols):
            if tableau[0][j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL
        leave = -1
        best = None
        for i in range(1, nrows + 1):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i - 1] < basis[leave - 1]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED
        _pivot(tableau, leave, enter)
        basis[leave - 1] = enter


def _pivot(tableau, row, col):
    piv = tableau[row][col]
    inv = Fraction(1) / piv
    tableau[row] = [x * inv for x in tableau[row]]
    prow = tableau[row]
    for i, r in enumerate(tableau):
        if i != row and r[col] != 0:
            f = r[col]
            tableau[i] = [x - f * y for x, y in zip(r, prow)]


def solve(
    c,
    a_eq=None,
    b_eq=None,
    a_ub=None,
    b_ub=None,
    maximize=False,
):
    """Solve min (or max) c.x subject to a_eq x = b_eq, a_ub x <= b_ub, x >= 0.

    All inputs are sequences of ints/Fractions.  Returns (status, x, value)
    where x is a list of Fractions on OPTIMAL and None otherwise.
    """
    c = [Fraction(v) for v in c]
    n = len(c)
    rows = []
    rhs = []
    for a, b in zip(a_eq or [], b_eq or []):
        rows.append([Fraction(v) for v in a])
        rhs.append(Fraction(b))
    nslack = len(a_ub or [])
    for k, (a, b) in enumerate(zip(a_ub or [], b_ub or [])):
        row = [Fraction(v) for v in a] + [Fraction(0)] * nslack
        row[n + k] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(b))
    total = n + nslack
    for i, row in enumerate(rows):
        if len(row) < total:
            rows[i] = row + [Fraction(0)] * (total - len(row))
    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    cost = [-v for v in c] if maximize else list(c)
    obj = cost + [Fraction(0)] * nslack
    # phase 1: artificial variables
    ncols = total + m
    tableau = [[Fraction(0)] * (ncols + 1)]
    basis = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * m + [rhs[i]]
        row[total + i] = Fraction(1)
        tableau.append(row)
        basis.append(total + i)
    # phase-1 objective: minimize sum of artificials -> reduced costs
    p1 = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for j in range(ncols + 1):
            p1[j] -= tableau[i + 1][j]
    for j in range(total + m):
        if total <= j < total + m:
            p1[j] += Fraction(1)
    tableau[0] = p1
    status = _simplex_phase(tableau, basis, m, ncols)
    assert status == OPTIMAL  # phase 1 is bounded below by 0
    if tableau[0][-1] != 0:
        return INFEASIBLE, None, None
    # drive any artificial variables out of the basis
    for i in range(m):
        if basis[i] >= total:
            for j in range(total):
                if tableau[i + 1][j] != 0:
                    _pivot(tableau, i + 1, j)
                    basis[i] = j
                    break
    # drop artificial columns, install phase-2 objective
    keep = list(range(total)) + [ncols]
    tableau = [[row[j] for j in keep] for row in tableau]
    obj_row = obj + [Fraction(0)]
    # reduce objective over current basis
    for i in range(m):
        bj = basis[i]
        if bj < total and obj_row[bj] != 0:
            f = obj_row[bj]
            tableau_row = tableau[i + 1]
            obj_row = [x - f * y for x, y in zip(obj_row, tableau_row)]
    tableau[0] = obj_row
    # redundant rows whose basic variable is still artificial are all-zero; keep
    status = _simplex_phase(tableau, basis, m, total)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tableau[i + 1][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, x, value


def maximize_min_slack(rows, box_vars, extra_eq=None):
    """Maximize d subject to row.h >= d per row, -1 <= h_i <= 1, optional A h = 0.

    `rows` are integer coefficient vectors over `box_vars` variables.  Used for
    strict-feasibility questions (answer > 0 means the open system row.h > 0 is
    solvable inside the box).  Returns (delta, h) with h a list of Fractions.
    """
    n = box_vars
    if not rows:
        return Fraction(1), [Fraction(0)] * n
    # variables: h_i = u_i - 1 with 0 <= u_i <= 2, plus d = d_pos - d_neg
    # encode directly: vars u (n), d_pos, d_neg; h = u - 1.
    nv = n + 2
    a_ub = []
    b_ub = []
    for row in rows:
        # row.(u - 1) - d >= 0  ->  -row.u + d_pos - d_neg <= -sum(row)
        a_ub.append([-Fraction(v) for v in row] + [Fraction(1), Fraction(-1)])
        b_ub.append(-Fraction(sum(row)))
    for i in range(n):
        bound = [Fraction(0)] * nv
        bound[i] = Fraction(1)
        a_ub.append(bound)
        b_ub.append(Fraction(2))
    a_eq = []
    b_eq = []
    for row in extra_eq or []:
        a_eq.append([Fraction(v) for v in row] + [Fraction(0), Fraction(0)])
        b_eq.append(Fraction(sum(row)))
    c = [Fraction(0)] * n + [Fraction(1), Fraction(-1)]
    status, x, value = solve(
        c, a_eq=a_eq or None, b_eq=b_eq or None, a_ub=a_ub, b_ub=b_ub,
        maximize=True,
    )
    if status != OPTIMAL:
        # the box makes the feasible set compact once any h is feasible;
        # infeasible can only come from contradictory equalities
        return Fraction(-1), None
    h = [x[i] - 1 for i in range(n)]
    return value, h


def feasible_nonneg_combination(columns, target):
    """Is target a nonnegative rational combination of the given columns?

    Returns the coefficient list (Fractions) or None.  Exact phase-1 simplex.
    """
    if not columns:
        return [] if all(t == 0 for t in target) else None
    d = len(target)
    a_eq = [[Fraction(col[i]) for col in columns] for i in range(d)]
    b_eq = [Fraction(t) for t in target]
    c = [Fraction(0)] * len(columns)
    status, x, _ = solve(c, a_eq=a_eq, b_eq=b_eq)
    if status != OPTIMAL:
        return None
    return x
