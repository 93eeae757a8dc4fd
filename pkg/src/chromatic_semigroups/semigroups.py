"""Affine semigroups: membership, intersections, and scaling of cone points.

An affine semigroup is the set of nonnegative integer combinations of a
finite list of integer generators.  Intersections are computed through the
Hilbert basis of the combined homogeneous system (generators x of one side
matched against generators y of the other via A x - B y = 0), whose image
is then reduced to the minimal generating set.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from ._linalg import is_zero, vec_scale
from .cones import (
    cone,
    contains_nonzero,
    contains_point,
    dd_convert,
    intersect_cones,
    is_pointed,
)
from .diophantine import DiophantineInstance, hilbert_basis_homogeneous, is_member
from .errors import DimensionMismatchError, NotPointedError, PointNotInConeError

_SCALE_CAP = 10 ** 6


@dataclass(frozen=True)
class AffineSemigroup:
    """Semigroup generated by integer vectors (deduplicated, zeros dropped)."""

    dimension: int
    generators: tuple

    def __post_init__(self):
        gens = []
        seen = set()
        for g in self.generators:
            t = tuple(int(c) for c in g)
            if len(t) != self.dimension:
                raise DimensionMismatchError(
                    f"generator {t} does not have dimension {self.dimension}")
            if is_zero(t) or t in seen:
                continue
            seen.add(t)
            gens.append(t)
        object.__setattr__(self, "generators", tuple(sorted(gens)))

    @property
    def is_trivial(self):
        return not self.generators


def semigroup(generators, dimension=None):
    gens = [tuple(g) for g in generators]
    if dimension is None:
        if not gens:
            raise ValueError("dimension required for the trivial semigroup")
        dimension = len(gens[0])
    return AffineSemigroup(dimension, tuple(gens))


def cone_of(s):
    """Associated cone: nonnegative real combinations of the generators."""
    return cone(s.generators, s.dimension)


def is_pointed_semigroup(s):
    return is_pointed(cone_of(s))[0]


def member(s, b):
    """(flag, solution vector over s.generators); requires pointedness."""
    return is_member(DiophantineInstance(s.generators, tuple(b)))


def intersect_semigroups(s1, s2):
    """Minimal generating set of the intersection of two affine semigroups.

    Pipeline: Hilbert basis of {(x,y) >= 0 : A x - B y = 0}, image of each
    basis element under (x,y) -> A x, then removal of every image point that
    the remaining ones already generate.  When the intersection is not
    pointed the last reduction step is skipped (a minimal generating set is
    not unique there) and the deduplicated image set is returned.
    """
    return intersect_semigroup_family([s1, s2])


def intersect_semigroup_family(members):
    """Common semigroup of several members through one homogeneous system.

    Generalizes the pairwise pipeline: with one multiplicity block per
    member and the chained equations A_1 x_1 = A_2 x_2 = ... the Hilbert
    basis images A_1 x_1 generate the intersection.  Solving all members at
    once keeps the system dimension at the total generator count, whereas
    chaining pairwise intersections would re-embed every (large)
    intermediate generating set as fresh variables.
    """
    members = list(members)
    if not members:
        raise ValueError("empty family")
    dim = members[0].dimension
    for s in members:
        if s.dimension != dim:
            raise DimensionMismatchError("semigroups live in different dimensions")
    if any(s.is_trivial for s in members):
        return AffineSemigroup(dim, ())
    return _intersect_cached(dim, tuple(s.generators for s in members))


@lru_cache(maxsize=None)
def _intersect_cached(dim, gens_blocks):
    blocks = [list(g) for g in gens_blocks]
    if len(blocks) == 1:
        images = list(blocks[0])
        if is_pointed(cone(images, dim))[0]:
            images = _drop_generated(dim, images)
        return AffineSemigroup(dim, tuple(images))
    if dim == 1 and all(g[0] > 0 for b in blocks for g in b):
        gens = _numerical_intersection([[g[0] for g in b] for b in blocks])
        return AffineSemigroup(1, tuple((g,) for g in gens))
    sizes = [len(b) for b in blocks]
    total = sum(sizes)
    offsets = []
    pos = 0
    for size in sizes:
        offsets.append(pos)
        pos += size
    rows = []
    for b in range(len(blocks) - 1):
        for j in range(dim):
            row = [0] * total
            for i, g in enumerate(blocks[b]):
                row[offsets[b] + i] = g[j]
            for i, g in enumerate(blocks[b + 1]):
                row[offsets[b + 1] + i] = -g[j]
            rows.append(tuple(row))
    basis = hilbert_basis_homogeneous(rows)
    n1 = sizes[0]
    images = set()
    for z in basis:
        img = tuple(sum(z[i] * blocks[0][i][j] for i in range(n1))
                    for j in range(dim))
        if not is_zero(img):
            images.add(img)
    images = sorted(images)
    if not images:
        return AffineSemigroup(dim, ())
    if is_pointed(cone(images, dim))[0]:
        images = _drop_generated(dim, images)
    return AffineSemigroup(dim, tuple(images))


def _drop_generated(dim, points):
    keep = []
    for i, p in enumerate(points):
        others = tuple(q for j, q in enumerate(points) if j != i)
        found, _ = is_member(DiophantineInstance(others, p))
        if not found:
            keep.append(p)
    return keep


def _numerical_intersection(value_blocks):
    """Minimal generators of the common set of several numerical monoids.

    Each monoid is cofinite inside (gcd of its generators) * Z, so the
    intersection is cofinite inside L * Z for L the lcm of those gcds; the
    membership tables are intersected up to a bound that provably covers
    every minimal generator, then reducible elements are dropped.
    """
    gcds = [0] * len(value_blocks)
    for i, block in enumerate(value_blocks):
        for v in block:
            gcds[i] = gcd(gcds[i], v)
    period = 1
    for g in gcds:
        period = period * g // gcd(period, g)

    bound = 4 * period + max(v for b in value_blocks for v in b) * 4
    while True:
        common = bytearray(bound + 1)
        common[0] = 1
        for v in range(period, bound + 1, period):
            common[v] = 1
        for block in value_blocks:
            table = bytearray(bound + 1)
            table[0] = 1
            for a in block:
                for v in range(a, bound + 1):
                    if table[v - a]:
                        table[v] = 1
            for v in range(bound + 1):
                if common[v] and not table[v]:
                    common[v] = 0
        smallest = next((v for v in range(period, bound + 1, period)
                         if common[v]), None)
        if smallest is None:
            bound *= 2
            continue
        largest_gap = 0
        for v in range(bound - bound % period, 0, -period):
            if not common[v]:
                largest_gap = v
                break
        # verified when a full run of `smallest` consecutive multiples sits
        # above the last gap: everything beyond is closed under +smallest
        if largest_gap + smallest + period <= bound and \
                all(common[v] for v in range(largest_gap + period,
                                             largest_gap + smallest + period,
                                             period)):
            break
        bound *= 2
    top = largest_gap + smallest
    gens = []
    members = [v for v in range(period, top + 1, period) if common[v]]
    member_set = set(members)
    for v in members:
        reducible = any(u < v and (v - u) in member_set for u in members)
        if not reducible:
            gens.append((v,))
    return tuple(g[0] for g in gens)


def family_intersection_nontrivial(family):
    """Decide whether a family of semigroups shares a nonzero element.

    Decided on the cone side (never by chaining semigroup intersections):
    the cones are intersected and tested for a nonzero point.  When that
    point exists and every member is pointed, it is scaled into each member
    and the lcm of the scalings gives a common semigroup element, returned
    as the witness; with a non-pointed member the decision is still exact
    but the witness is None.
    """
    family = list(family)
    if not family:
        raise ValueError("empty family")
    dim = family[0].dimension
    for s in family:
        if s.dimension != dim:
            raise DimensionMismatchError("family members differ in dimension")
    inter = intersect_cones([cone_of(s) for s in family])
    nonzero, ray = contains_nonzero(inter)
    if not nonzero:
        return False, None
    if not all(is_pointed_semigroup(s) for s in family):
        return True, None
    scale = 1
    for s in family:
        k = scale_into(s, ray)
        scale = scale * k // gcd(scale, k)
    return True, vec_scale(scale, ray)


def scale_into(s, p):
    """Smallest k >= 1 with k*p in the semigroup.

    `p` must be a nonzero integer point of the associated cone; existence of
    k is guaranteed for such points.  Membership tests require the semigroup
    to be pointed.
    """
    p = tuple(int(c) for c in p)
    if is_zero(p):
        raise PointNotInConeError("the zero vector is excluded")
    if not contains_point(dd_convert(cone_of(s)), p):
        raise PointNotInConeError(f"{p} is not in the cone of the semigroup")
    if not is_pointed_semigroup(s):
        raise NotPointedError("membership search needs a pointed semigroup")
    k = 1
    while k <= _SCALE_CAP:
        found, _ = member(s, vec_scale(k, p))
        if found:
            return k
        k += 1
    raise RuntimeError(f"no multiple of {p} found up to {_SCALE_CAP}")
