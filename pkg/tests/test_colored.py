import random

import pytest

from chromatic_semigroups import (
    ColoredSemigroup,
    DiophantineInstance,
    build_unique_expression_family,
    caratheodory_exceptions,
    classify,
    enumerate_solutions,
    find_colorful,
    find_k_chromatic,
    lift_family,
    monochromatic_profile,
    verify_unique_expressions,
)
from chromatic_semigroups.errors import NotPointedError

from conftest import EXAMPLE_32_TARGET


def test_classify_reference_quadruple(example_one):
    c = classify(example_one, (6, 1, 0, 0, 0, 0))
    assert c.is_monochromatic and not c.is_chromatic and not c.is_colorful
    c = classify(example_one, (3, 1, 0, 1, 0, 1))
    assert c.is_chromatic and not c.is_colorful and c.chromatic_level == 3
    c = classify(example_one, (0, 1, 0, 2, 0, 2))
    assert c.is_chromatic and c.is_colorful
    c = classify(example_one, (0, 0, 2, 0, 4, 0))
    assert c.is_colorful and c.chromatic_level == 2 and not c.is_chromatic


def test_classify_zero_solution(example_one):
    c = classify(example_one, (0,) * 6)
    assert c.colors_used == frozenset()
    assert c.is_monochromatic and c.is_colorful and not c.is_chromatic


def test_classify_length_mismatch(example_one):
    with pytest.raises(ValueError):
        classify(example_one, (1, 2, 3))


def test_find_k_chromatic_example32(example_32):
    assert find_k_chromatic(example_32, EXAMPLE_32_TARGET, 3) is None
    got = find_k_chromatic(example_32, EXAMPLE_32_TARGET, 1)
    assert got is not None


def test_find_k_chromatic_constructed_pair(example_one):
    b = (9 + 11,)  # one generator from each of two distinct classes
    got = find_k_chromatic(example_one, b, 2)
    assert got is not None
    assert classify(example_one, got).chromatic_level >= 2


def test_find_colorful(example_one, example_32):
    got = find_colorful(example_one, (70,))
    assert got is not None
    assert classify(example_one, got).is_colorful
    got = find_colorful(example_one, (9,))
    assert got is not None and sum(got) == 1
    # the lifted family admits no colorful expression of (p, 1)
    fam = build_unique_expression_family(2)
    lifted = lift_family(fam.colored)
    assert find_colorful(lifted, fam.target + (1,)) is None


def test_monochromatic_profile(example_one, example_32):
    prof = monochromatic_profile(example_32, EXAMPLE_32_TARGET)
    assert prof == ((1, 1, 1, 0, 0, 0, 0, 0, 0),
                    (0, 0, 0, 1, 1, 1, 0, 0, 0),
                    (0, 0, 0, 0, 0, 0, 1, 1, 1))
    prof = monochromatic_profile(example_one, (70,))
    assert prof[0] is not None  # e.g. (6,1,0,0,0,0)
    # classes 2 and 3: decided by scan
    sols = enumerate_solutions(DiophantineInstance(example_one.columns, (70,)))
    for ci, cls in enumerate(example_one.classes):
        reachable = any(set(i for i, v in enumerate(x) if v) <= set(cls)
                        for x in sols)
        assert (prof[ci] is not None) == reachable
    prof0 = monochromatic_profile(example_one, (0,))
    assert all(w == (0,) * 6 for w in prof0)


def test_caratheodory_single_color(example_one):
    one = ColoredSemigroup(1, example_one.columns, (tuple(range(6)),))
    rep = caratheodory_exceptions(one)
    assert rep.exceptions == ()


def test_caratheodory_two_singleton_classes():
    s = ColoredSemigroup(1, ((3,), (5,)), ((0,), (1,)))
    rep = caratheodory_exceptions(s)
    assert rep.intersection_generators == ((15,),)
    # oracle: 15 = 3*5 has only the monochromatic expressions 5*3 and 3*5
    assert [b for b, _ in rep.exceptions] == [(15,)]


def test_caratheodory_example32(example_32):
    rep = caratheodory_exceptions(example_32)
    targets = [b for b, _ in rep.exceptions]
    assert EXAMPLE_32_TARGET in targets
    for b, wits in rep.exceptions:
        assert all(w is not None for w in wits)
        assert find_k_chromatic(example_32, b, 3) is None


def test_build_family_n6_reference_values():
    fam = build_unique_expression_family(6)
    assert fam.rows == (
        ((0, 1, 2), (1, 7, 9), (2, 9, 9)),
        ((0, 3, 4), (1, 9, 11), (2, 5, 5)),
        ((0, 7, 8), (1, 13, 15), (2, -3, -3)),
        ((0, 15, 16), (1, 21, 23), (2, -19, -19)),
        ((0, 31, 32), (1, 37, 39), (2, -51, -51)),
        ((0, 63, 64), (1, 69, 71), (2, -115, -115)),
    )
    assert fam.target == (3, 17, 20)


def test_build_family_smallest():
    fam = build_unique_expression_family(1)
    (g, gp, gpp), = fam.rows
    assert (g, gp, gpp) == ((0, 1, 2), (1, 2, 4), (2, -1, -1))
    assert fam.target == (3, 2, 5)
    assert tuple(a + b + c for a, b, c in zip(g, gp, gpp)) == fam.target


def test_row_sums_hit_target():
    for n in (1, 2, 3, 6):
        fam = build_unique_expression_family(n)
        for row in fam.rows:
            assert tuple(sum(col) for col in zip(*row)) == fam.target


def test_verify_unique_expressions_counts():
    for n in (1, 3, 6):
        rep = verify_unique_expressions(n)
        assert rep.matches
        assert len(rep.solutions) == n
        assert rep.all_monochromatic
        # every expression uses one generator of each first coordinate
        for x in rep.solutions:
            firsts = sorted(fam_col[0]
                            for fam_col, mult in
                            zip(build_unique_expression_family(n).colored.columns, x)
                            for _ in range(mult))
            assert firsts == [0, 1, 2]


def test_verify_budget_guard():
    with pytest.raises(ValueError):
        verify_unique_expressions(13)


def test_lift_family_shape():
    fam = build_unique_expression_family(2)
    lifted = lift_family(fam.colored)
    assert lifted.dimension == 4
    assert lifted.classes == ((0, 1, 2, 3), (4, 5, 6, 7))
    unit = (0, 0, 0, 1)
    for cls in lifted.classes:
        assert lifted.columns[cls[-1]] == unit
        for i in cls[:-1]:
            assert lifted.columns[i][3] == 0


def test_lift_family_monochromatic_but_not_colorful():
    fam = build_unique_expression_family(2)
    lifted = lift_family(fam.colored)
    for k in range(3):
        b = fam.target + (k,)
        prof = monochromatic_profile(lifted, b)
        assert all(w is not None for w in prof)
        assert find_colorful(lifted, b) is None


def test_not_pointed_rejected():
    s = ColoredSemigroup(1, ((1,), (-1,)), ((0,), (1,)))
    with pytest.raises(NotPointedError):
        find_k_chromatic(s, (5,), 1)


# ---------------------------------------------------------------------------
# properties


def _random_colored_numerical(rng, max_ell=3, max_gen=20):
    while True:
        ell = rng.randint(1, max_ell)
        values = rng.sample(range(1, max_gen + 1), rng.randint(ell, min(6, max_gen)))
        rng.shuffle(values)
        classes = [[] for _ in range(ell)]
        for i, v in enumerate(values):
            classes[i % ell].append(v)
        cols = []
        idx = []
        pos = 0
        for cls in classes:
            ids = []
            for v in cls:
                cols.append((v,))
                ids.append(pos)
                pos += 1
            idx.append(tuple(ids))
        return ColoredSemigroup(1, tuple(cols), tuple(idx))


def test_classification_consistency_random():
    rng = random.Random(37)
    for _ in range(50):
        s = _random_colored_numerical(rng)
        n = len(s.columns)
        x = tuple(rng.randint(0, 3) for _ in range(n))
        c = classify(s, x)
        if c.is_chromatic:
            assert c.chromatic_level == s.n_colors
        if c.is_monochromatic and c.is_chromatic:
            assert s.n_colors == 1
        assert c.is_monochromatic == (c.chromatic_level <= 1)


def test_find_k_chromatic_matches_enumeration_oracle():
    rng = random.Random(41)
    for _ in range(30):
        s = _random_colored_numerical(rng, max_gen=12)
        b = (rng.randint(0, 40),)
        sols = enumerate_solutions(DiophantineInstance(s.columns, b))
        for k in range(1, s.n_colors + 1):
            oracle = any(classify(s, x).chromatic_level >= k for x in sols)
            got = find_k_chromatic(s, b, k)
            assert (got is not None) == oracle
            if got is not None:
                assert sum(got[i] * s.columns[i][0] for i in range(len(got))) == b[0]
                assert classify(s, got).chromatic_level >= k


def test_exceptions_are_bounded_random():
    # beyond (n_colors - 1) * max generator of the common semigroup every
    # common element has a chromatic expression
    rng = random.Random(43)
    for _ in range(10):
        s = _random_colored_numerical(rng, max_ell=3, max_gen=15)
        rep = caratheodory_exceptions(s)
        if not rep.intersection_generators:
            assert rep.exceptions == ()
            continue
        gens = [g[0] for g in rep.intersection_generators]
        bound = (s.n_colors - 1) * max(gens)
        for b, _ in rep.exceptions:
            assert b[0] <= bound
        # spot-check the positive side: common elements past the bound all
        # admit a chromatic solution
        for mult in (s.n_colors, s.n_colors + 1, 2 * s.n_colors):
            big = mult * max(gens)
            if big > bound:
                assert find_k_chromatic(s, (big,), s.n_colors) is not None
