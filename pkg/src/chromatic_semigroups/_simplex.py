"""Exact two-phase simplex over the rationals with Bland's pivot rule.

Small and deterministic; every coefficient is a Fraction, so there is no
tolerance anywhere.  Used for linear feasibility questions (pointedness
witnesses, membership of rational points in cones).
"""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def maximize(objective, constraints):
    """Maximize objective . z subject to row . z <= rhs for each constraint
    and z >= 0.

    `objective` is a sequence of n cost coefficients; `constraints` is a list
    of (row, rhs) pairs with len(row) == n.  Returns (status, value, z) where
    z is a tuple of Fractions (or None unless status == "optimal").
    """
    n = len(objective)
    m = len(constraints)
    rows = []
    rhs = []
    negated = []
    for coeffs, b in constraints:
        coeffs = [Fraction(a) for a in coeffs]
        b = Fraction(b)
        if b < 0:
            coeffs = [-a for a in coeffs]
            b = -b
            negated.append(True)
        else:
            negated.append(False)
        rows.append(coeffs)
        rhs.append(b)

    art_of_row = {}
    n_art = sum(1 for f in negated if f)
    total = n + m + n_art
    tableau = []
    basis = []
    art_seen = 0
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (m + n_art) + [rhs[i]]
        row[n + i] = Fraction(-1) if negated[i] else Fraction(1)
        if negated[i]:
            col = n + m + art_seen
            row[col] = Fraction(1)
            art_of_row[i] = col
            basis.append(col)
            art_seen += 1
        else:
            basis.append(n + i)
        tableau.append(row)

    artificial = set(art_of_row.values())

    if artificial:
        cost1 = [Fraction(0)] * total
        for c in artificial:
            cost1[c] = Fraction(-1)
        _bland(tableau, basis, cost1, total)
        if any(tableau[i][total] != 0 for i in range(m) if basis[i] in artificial):
            return INFEASIBLE, None, None
        # drive basic artificials out or drop redundant rows
        for i in range(m - 1, -1, -1):
            if basis[i] in artificial:
                piv = None
                for j in range(n + m):
                    if tableau[i][j] != 0:
                        piv = j
                        break
                if piv is None:
                    del tableau[i]
                    del basis[i]
                else:
                    _pivot(tableau, basis, i, piv)
        m = len(tableau)

    cost2 = [Fraction(a) for a in objective] + [Fraction(0)] * (total - n)
    status = _bland(tableau, basis, cost2, n + m if artificial else total,
                    forbid=artificial)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    z = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            z[b] = tableau[i][total]
    value = sum(c * x for c, x in zip(objective, z))
    return OPTIMAL, value, tuple(z)


def _bland(tableau, basis, cost, ncols, forbid=()):
    total = len(tableau[0]) - 1 if tableau else ncols
    # objective row maintained under pivots (reduced costs)
    objrow = list(cost) + [Fraction(0)] * (total + 1 - len(cost))
    for i, b in enumerate(basis):
        cb = objrow[b]
        if cb != 0:
            row = tableau[i]
            objrow = [a - cb * r for a, r in zip(objrow, row)]
    while True:
        enter = None
        for j in range(ncols):
            if j in forbid:
                continue
            if objrow[j] > 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(len(tableau)):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][total] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tableau, basis, leave, enter)
        f = objrow[enter]
        if f != 0:
            prow = tableau[leave]
            objrow = [a - f * b for a, b in zip(objrow, prow)]


def _pivot(tableau, basis, r, c):
    piv = tableau[r][c]
    tableau[r] = [a / piv for a in tableau[r]]
    prow = tableau[r]
    for i in range(len(tableau)):
        if i != r and tableau[i][c] != 0:
            f = tableau[i][c]
            tableau[i] = [a - f * b for a, b in zip(tableau[i], prow)]
    basis[r] = c
