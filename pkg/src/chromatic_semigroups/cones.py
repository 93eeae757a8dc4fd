"""Exact rational polyhedral cone arithmetic.

Cones are handled entirely over arbitrary-precision rationals: generator
(V) descriptions, inequality (H) descriptions, conversion between the two
by the double description method, pointedness via a strict-positivity
feasibility problem, and exact intersections with canonically normalized
extreme rays.
"""

from dataclasses import dataclass, replace
from functools import lru_cache

from . import _simplex
from ._linalg import (
    dot,
    is_zero,
    primitive,
    reduce_mod_rows,
    rref,
    sign_canonical,
    vec_neg,
    vec_scale,
    vec_sub,
)
from .errors import DimensionMismatchError, SemigroupError


@dataclass(frozen=True)
class RationalCone:
    """Finitely generated rational cone with an optional cached H-description.

    `generators` spans the cone as nonnegative real combinations;
    `inequalities`, when present, is a minimal canonically ordered list of
    integer rows M with cone == {x : M x >= 0}.
    """

    dimension: int
    generators: tuple
    inequalities: tuple = None
    zero_generators_dropped: bool = False


def cone(generators, dimension=None):
    """Build a cone from integer generator vectors.

    Zero generators are dropped (recorded in `zero_generators_dropped`) and
    exact duplicates are removed.  `dimension` is required when the
    generator list is empty.
    """
    gens = [tuple(int(c) for c in g) for g in generators]
    if dimension is None:
        if not gens:
            raise ValueError("dimension required for a cone with no generators")
        dimension = len(gens[0])
    if dimension < 1:
        raise ValueError("dimension must be >= 1")
    for g in gens:
        if len(g) != dimension:
            raise DimensionMismatchError(
                f"generator {g} does not have dimension {dimension}")
    dropped = any(is_zero(g) for g in gens)
    out = []
    seen = set()
    for g in gens:
        if is_zero(g) or g in seen:
            continue
        seen.add(g)
        out.append(g)
    return RationalCone(dimension, tuple(out), None, dropped)


def cone_from_inequalities(rows, dimension):
    """Cone {x : row . x >= 0 for every row}, with generators computed."""
    rows = tuple(tuple(int(c) for c in r) for r in rows)
    for r in rows:
        if len(r) != dimension:
            raise DimensionMismatchError(f"row {r} does not have dimension {dimension}")
    lin, rays = _generator_description(rows, dimension)
    gens = _canonical_generators(lin, rays)
    return dd_convert(RationalCone(dimension, gens))


def dd_convert(c):
    """Populate (and canonicalize) the inequality description of a cone.

    The dual cone of the generators is converted to generator form by the
    double description method; its rays become facet inequalities and its
    lineality directions become paired inequalities.  Idempotent: a cone
    that already carries inequalities is returned unchanged.
    """
    if c.inequalities is not None:
        return c
    lin, rays = _generator_description(c.generators, c.dimension)
    ineqs = list(rays)
    for l in lin:
        ineqs.append(l)
        ineqs.append(vec_neg(l))
    ineqs = tuple(sorted(ineqs))
    for g in c.generators:
        for row in ineqs:
            if dot(row, g) < 0:
                raise SemigroupError(
                    "internal: generator violates computed inequality")
    return replace(c, inequalities=ineqs)


def ray_description(c):
    """(lineality basis, extreme rays) of the cone, canonically normalized.

    Lineality representatives are RREF-reduced, primitive, first nonzero
    coordinate positive; extreme rays are reduced modulo the lineality,
    primitive, and keep their cone-membership direction; both lists are
    lexicographically sorted.
    """
    c = dd_convert(c)
    return _generator_description(c.inequalities, c.dimension)


def contains_point(c, point):
    """Exact membership of a rational point via the H-description."""
    c = dd_convert(c)
    return all(dot(row, point) >= 0 for row in c.inequalities)


def is_pointed(c):
    """Decide pointedness; returns (flag, witness).

    The witness is an integer functional w with w . g >= 1 for every
    generator, produced by the strict-positivity feasibility problem; it is
    None when the cone contains a line.
    """
    gens = [g for g in c.generators if not is_zero(g)]
    if not gens:
        return True, (1,) * c.dimension
    if c.dimension == 1:
        if all(g[0] > 0 for g in gens):
            return True, (1,)
        if all(g[0] < 0 for g in gens):
            return True, (-1,)
        return False, None
    rows = [tuple(g) + (1,) for g in gens]
    point = rational_feasible(rows)
    if point is None:
        return False, None
    return True, primitive(point)


def intersect_cones(cones):
    """Intersect a nonempty family of cones in one ambient dimension.

    The result carries canonical generators (primitive extreme rays plus
    paired lineality directions, lexicographically sorted) and a minimal
    inequality description.
    """
    cones = list(cones)
    if not cones:
        raise ValueError("empty cone family")
    dim = cones[0].dimension
    for c in cones:
        if c.dimension != dim:
            raise DimensionMismatchError("cones live in different dimensions")
    rows = []
    for c in cones:
        rows.extend(dd_convert(c).inequalities)
    lin, rays = _generator_description(tuple(rows), dim)
    gens = _canonical_generators(lin, rays)
    return dd_convert(RationalCone(dim, gens))


def contains_nonzero(c):
    """Whether the cone strictly contains {0}; returns (flag, witness).

    The witness is a nonzero primitive integer point of the cone (the
    lexicographically least canonical generator).
    """
    if c.generators:
        nonzero = [g for g in c.generators if not is_zero(g)]
        if nonzero:
            return True, primitive(min(nonzero))
    lin, rays = _generator_description(
        dd_convert(c).inequalities, c.dimension)
    gens = _canonical_generators(lin, rays)
    if gens:
        return True, gens[0]
    return False, None


def rational_feasible(rows, strict=()):
    """Exact feasibility for a system of affine inequalities over Q.

    Each row has length m+1 and reads a . x >= c with c the trailing entry;
    row indices listed in `strict` are required to hold strictly.  Returns a
    tuple of Fractions or None; deterministic (Bland's rule throughout).
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return ()
    m = len(rows[0]) - 1
    strict = frozenset(strict)
    use_t = bool(strict)
    nvars = 2 * m + (1 if use_t else 0)
    constraints = []
    for i, r in enumerate(rows):
        if len(r) != m + 1:
            raise ValueError("ragged inequality system")
        a, const = r[:m], r[m]
        coeffs = [-x for x in a] + [x for x in a]
        if use_t:
            coeffs.append(1 if i in strict else 0)
        constraints.append((coeffs, -const))
    objective = [0] * nvars
    if use_t:
        constraints.append(([0] * (2 * m) + [1], 1))
        objective[-1] = 1
    status, value, z = _simplex.maximize(objective, constraints)
    if status != _simplex.OPTIMAL:
        return None
    if use_t and value == 0:
        return None
    return tuple(z[i] - z[m + i] for i in range(m))


# ---------------------------------------------------------------------------
# double description core


@lru_cache(maxsize=None)
def _generator_description(rows, dim):
    """Generators of {x in R^dim : row . x >= 0 for all rows}.

    Returns (lineality, rays): canonical primitive integer vectors, the
    lineality basis in RREF with first nonzero coordinate positive, the
    extreme rays reduced modulo the lineality; both sorted.  Incremental
    double description with the combinatorial adjacency test; zero sets are
    recomputed from scratch at each insertion, trading speed for
    reliability at the small dimensions used here.
    """
    work = []
    seen = set()
    for r in rows:
        if is_zero(r):
            continue
        p = primitive(r)
        if p not in seen:
            seen.add(p)
            work.append(p)

    lineality = [tuple(1 if j == i else 0 for j in range(dim))
                 for i in range(dim)]
    rays = []
    processed = []
    for a in work:
        idx0 = None
        for i, l in enumerate(lineality):
            if dot(a, l) != 0:
                idx0 = i
                break
        if idx0 is not None:
            l0 = lineality.pop(idx0)
            if dot(a, l0) < 0:
                l0 = vec_neg(l0)
            d0 = dot(a, l0)
            folded = []
            for l in lineality:
                dl = dot(a, l)
                folded.append(primitive(vec_sub(vec_scale(d0, l), vec_scale(dl, l0)))
                              if dl != 0 else l)
            lineality = folded
            rays = [primitive(vec_sub(vec_scale(d0, r), vec_scale(dot(a, r), l0)))
                    if dot(a, r) != 0 else r
                    for r in rays]
            rays.append(l0)
        else:
            vals = [dot(a, r) for r in rays]
            if any(v < 0 for v in vals):
                masks = [_zero_mask(r, processed) for r in rays]
                keep = [r for r, v in zip(rays, vals) if v >= 0]
                fresh = []
                for ip, rp in enumerate(rays):
                    if vals[ip] <= 0:
                        continue
                    for im, rm in enumerate(rays):
                        if vals[im] >= 0:
                            continue
                        if not _adjacent(ip, im, masks):
                            continue
                        w = vec_sub(vec_scale(vals[ip], rm),
                                    vec_scale(vals[im], rp))
                        fresh.append(primitive(w))
                rays = keep
                present = set(rays)
                for w in fresh:
                    if w not in present:
                        present.add(w)
                        rays.append(w)
        processed.append(a)

    if lineality:
        lin_rref, pivots = rref(lineality)
        lin = sorted(sign_canonical(primitive(row)) for row in lin_rref)
        red_rays = sorted({primitive(reduce_mod_rows(r, lin_rref, pivots))
                           for r in rays})
    else:
        lin = []
        red_rays = sorted({primitive(r) for r in rays})
    return tuple(lin), tuple(red_rays)


def _zero_mask(ray, processed):
    mask = 0
    for i, row in enumerate(processed):
        if dot(row, ray) == 0:
            mask |= 1 << i
    return mask


def _adjacent(ip, im, masks):
    common = masks[ip] & masks[im]
    for k, mk in enumerate(masks):
        if k == ip or k == im:
            continue
        if common & mk == common:
            return False
    return True


def _canonical_generators(lin, rays):
    gens = list(rays)
    for l in lin:
        gens.append(l)
        gens.append(vec_neg(l))
    return tuple(sorted(gens))
