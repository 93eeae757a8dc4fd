"""Exact solvers for linear Diophantine systems A x = b, x >= 0, x integer.

Enumeration relies on a pointedness witness w (an integer functional that
is positive on every column), which bounds every branch of the search by
<w, residual> >= 0; membership additionally merges branches that reach the
same residual.  Homogeneous systems get their Hilbert basis geometrically
(see `_hilbert`), with a completion procedure kept as a reference.
"""

from dataclasses import dataclass
from functools import lru_cache

from ._linalg import dot, is_zero, vec_add
from .cones import cone, dd_convert, is_pointed
from .errors import NotPointedError


@dataclass(frozen=True)
class DiophantineInstance:
    """System A x = b with the columns of A stored as generator vectors."""

    columns: tuple
    rhs: tuple

    def __post_init__(self):
        cols = tuple(tuple(int(c) for c in col) for col in self.columns)
        rhs = tuple(int(c) for c in self.rhs)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "rhs", rhs)
        for col in cols:
            if len(col) != len(rhs):
                raise ValueError("column/right-hand-side length mismatch")


def instance(columns, rhs):
    return DiophantineInstance(tuple(columns), tuple(rhs))


@lru_cache(maxsize=None)
def _witness(columns, dim):
    """Integer functional positive on every column, or NotPointedError."""
    pointed, w = is_pointed(cone(columns, dim))
    if not pointed:
        raise NotPointedError(
            "columns do not span a pointed cone; enumeration is unbounded")
    return w


def enumerate_solutions(inst):
    """All nonnegative integer solutions, duplicate-free and lex sorted.

    Requires the conic hull of the columns to be pointed.  An empty list
    means the right-hand side is not in the semigroup of the columns.
    """
    return tuple(sorted(iter_solutions(inst)))


def iter_solutions(inst):
    """Yield the solutions in depth-first search order (not sorted)."""
    return _search(inst)


def is_member(inst):
    """(flag, witness solution or None).

    Decided by a memoized residual search: distinct branch prefixes that
    reach the same remaining target are merged, which keeps membership fast
    on targets whose enumeration tree is enormous.
    """
    plan = _plan(inst)
    if plan is None:
        return (True, ()) if is_zero(inst.rhs) else (False, None)
    order, ocols, wvals, suffix_rows, row_steps, forced = plan
    n = len(ocols)
    memo = {}

    def decide(k, residual, wres):
        if wres < 0:
            return None
        if k == n:
            return () if all(v == 0 for v in residual) else None
        key = (k, residual)
        if key in memo:
            return memo[key]
        col = ocols[k]
        wc = wvals[k]
        rows = suffix_rows[k + 1]
        steps = row_steps[k]
        fj = forced[k]
        result = None
        if fj is not None:
            q, r = divmod(residual[fj], col[fj])
            if r == 0 and q >= 0 and wres - q * wc >= 0:
                res = tuple(a - q * c for a, c in zip(residual, col))
                if all(dot(m, res) >= 0 for m in rows):
                    tail = decide(k + 1, res, wres - q * wc)
                    if tail is not None:
                        result = (q,) + tail
        else:
            vals = [dot(m, residual) for m in rows]
            x = 0
            res = residual
            while wres >= 0:
                skip = False
                stop = False
                for v, mc in zip(vals, steps):
                    if v < 0:
                        if mc >= 0:
                            stop = True
                            break
                        skip = True
                if stop:
                    break
                if not skip:
                    tail = decide(k + 1, res, wres)
                    if tail is not None:
                        result = (x,) + tail
                        break
                x += 1
                wres -= wc
                res = tuple(a - c for a, c in zip(res, col))
                vals = [v - mc for v, mc in zip(vals, steps)]
        memo[key] = result
        return result

    d = len(inst.rhs)
    got = decide(0, tuple(inst.rhs), dot(_witness(inst.columns, d), inst.rhs))
    if got is None:
        return False, None
    sol = [0] * n
    for pos, i in enumerate(order):
        sol[i] = got[pos]
    return True, tuple(sol)


def count_solutions(inst, allowed):
    """Number of solutions supported inside the `allowed` column set."""
    n = len(inst.columns)
    allowed = sorted(set(allowed))
    for i in allowed:
        if not 0 <= i < n:
            raise ValueError(f"column index {i} out of range")
    cols = [inst.columns[i] for i in allowed]
    d = len(inst.rhs)
    if d == 1 and cols and all(c[0] > 0 for c in cols):
        return _denumerant([c[0] for c in cols], inst.rhs[0])
    sub = DiophantineInstance(tuple(cols), inst.rhs)
    return sum(1 for _ in _search(sub))


def _denumerant(coins, b):
    if b < 0:
        return 0
    ways = [0] * (b + 1)
    ways[0] = 1
    for a in coins:
        for v in range(a, b + 1):
            ways[v] += ways[v - a]
    return ways[b]


@lru_cache(maxsize=None)
def _plan_cached(cols, d):
    n = len(cols)
    w = _witness(cols, d)
    # heaviest columns first: large columns branch less, and the residual
    # cone of every suffix stays small
    order = sorted(range(n), key=lambda i: (-dot(w, cols[i]), i))
    ocols = [cols[i] for i in order]
    wvals = [dot(w, c) for c in ocols]
    # facet rows of the cone of each suffix: a residual that violates one
    # can never be completed with the remaining columns
    suffix_rows = []
    for k in range(n + 1):
        sub = ocols[k:]
        if sub:
            rows = dd_convert(cone(sub, d)).inequalities
        else:
            rows = tuple(tuple(s if j == i else 0 for j in range(d))
                         for i in range(d) for s in (1, -1))
        suffix_rows.append(rows)
    # how each facet value moves per copy of the current column
    row_steps = [tuple(dot(m, ocols[k]) for m in suffix_rows[k + 1])
                 for k in range(n)]
    suffix_zero = [[True] * d for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        for j in range(d):
            suffix_zero[k][j] = suffix_zero[k + 1][j] and ocols[k][j] == 0
    # coordinates untouched by later columns force the multiplicity exactly
    forced_coord = [None] * n
    for k in range(n):
        for j in range(d):
            if ocols[k][j] != 0 and suffix_zero[k + 1][j]:
                forced_coord[k] = j
                break
    return order, ocols, wvals, suffix_rows, row_steps, forced_coord


def _plan(inst):
    cols = inst.columns
    for col in cols:
        if is_zero(col):
            raise ValueError(
                "zero column makes the solution set infinite; drop it first")
    if not cols:
        return None
    return _plan_cached(cols, len(inst.rhs))


def _search(inst):
    rhs = inst.rhs
    d = len(rhs)
    plan = _plan(inst)
    if plan is None:
        if is_zero(rhs):
            yield ()
        return
    order, ocols, wvals, suffix_rows, row_steps, forced_coord = plan
    n = len(ocols)
    w = _witness(inst.columns, d)

    acc = [0] * n

    def descend(k, residual, wres):
        if k == n:
            if all(v == 0 for v in residual):
                sol = [0] * n
                for pos, i in enumerate(order):
                    sol[i] = acc[pos]
                yield tuple(sol)
            return
        col = ocols[k]
        wc = wvals[k]
        rows = suffix_rows[k + 1]
        steps = row_steps[k]
        fj = forced_coord[k]
        if fj is not None:
            q, r = divmod(residual[fj], col[fj])
            if r != 0 or q < 0 or wres - q * wc < 0:
                return
            res = [a - q * c for a, c in zip(residual, col)]
            if all(dot(m, res) >= 0 for m in rows):
                acc[k] = q
                yield from descend(k + 1, res, wres - q * wc)
            return
        vals = [dot(m, residual) for m in rows]
        x = 0
        res = residual
        while wres >= 0:
            skip = False
            stop = False
            for v, mc in zip(vals, steps):
                if v < 0:
                    if mc >= 0:
                        stop = True
                        break
                    skip = True
            if stop:
                break
            if not skip:
                acc[k] = x
                yield from descend(k + 1, res, wres)
            x += 1
            wres -= wc
            res = tuple(a - c for a, c in zip(res, col))
            vals = [v - mc for v, mc in zip(vals, steps)]

    yield from descend(0, list(rhs), dot(w, rhs))


def hilbert_basis_homogeneous(rows):
    """Minimal generating set (Hilbert basis) of {z >= 0 integer : B z = 0}.

    The solution monoid is the lattice-point monoid of a pointed cone, so
    the basis is extracted geometrically (rays, triangulation, fundamental
    parallelepipeds, minimality filter); see `hilbert_basis_completion` for
    the slow completion procedure used as an independent cross-check in the
    tests.  The Hilbert basis is unique, so both agree.  Canonically sorted.
    """
    rows = _checked_rows(rows)
    k = len(rows[0])
    if k == 0:
        return ()
    from ._hilbert import hilbert_basis_pointed
    return hilbert_basis_pointed(rows, k)


def _checked_rows(rows):
    rows = [tuple(int(c) for c in r) for r in rows]
    if not rows:
        raise ValueError("empty system; pass at least one row")
    k = len(rows[0])
    for r in rows:
        if len(r) != k:
            raise ValueError("ragged matrix")
    return rows


def hilbert_basis_completion(rows):
    """Hilbert basis by completion over the componentwise order.

    Frontier vectors t grow by one unit step e_j at a time, allowed only
    when <Bt, Be_j> < 0, and are discarded as soon as they dominate a known
    solution.  Exponential on systems whose minimal solutions are large;
    kept as a reference implementation.
    """
    rows = _checked_rows(rows)
    k = len(rows[0])
    if k == 0:
        return ()
    bcols = [tuple(r[j] for r in rows) for j in range(k)]

    basis = []
    frontier = {}
    for j in range(k):
        t = tuple(1 if i == j else 0 for i in range(k))
        frontier[t] = bcols[j]
    while frontier:
        for t, val in frontier.items():
            if all(v == 0 for v in val) and not _dominates_any(t, basis):
                basis.append(t)
        nxt = {}
        for t, val in frontier.items():
            if all(v == 0 for v in val):
                continue
            for j in range(k):
                if dot(val, bcols[j]) < 0:
                    u = t[:j] + (t[j] + 1,) + t[j + 1:]
                    if u in nxt or _dominates_any(u, basis):
                        continue
                    nxt[u] = vec_add(val, bcols[j])
        frontier = nxt
    minimal = [t for t in basis
               if not any(s != t and all(a >= b for a, b in zip(t, s))
                          for s in basis)]
    return tuple(sorted(minimal))


def _dominates_any(t, basis):
    for s in basis:
        if all(a >= b for a, b in zip(t, s)):
            return True
    return False
