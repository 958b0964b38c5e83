import random
from fractions import Fraction

import pytest

from quadop.exactlin import LinearMap, Vector
from quadop.operads import (
    OperadFamily,
    build_family,
    compare_families,
    compose,
    family_shell,
    minimal_suboperad,
    verify_axioms,
    verify_relation_morphism,
    _rel_zero,
)


def labels(fam, n):
    return fam.gen_space(n).labels


def test_family_dimensions():
    bkw = build_family("BKW", 6)
    assert bkw.component(4).gdim == 6
    assert bkw.component(4).rdim == 15
    assert bkw.component(2).rdim == 0
    dk = build_family("DK", 6)
    assert dk.component(3).rdim == 2
    assert dk.component(4).rdim == 11
    ehkr = build_family("EHKR", 6)
    assert ehkr.component(5).gdim == 10
    assert ehkr.component(4).rdim == 0
    lhg = build_family("LHG", 8, k=3)
    assert lhg.component(5).gdim == 3


def test_special_cases_coincide():
    for a, b in (
        (build_family("HG", 5, k=2), build_family("BKW", 5)),
        (build_family("RHG", 5, k=2), build_family("DK", 5)),
        (build_family("RHG", 5, k=3), build_family("EHKR", 5)),
        (build_family("LHG", 6, k=2), build_family("LG", 6)),
    ):
        for n in range(6):
            assert a.component(n).generators == b.component(n).generators
            assert a.component(n).relations == b.component(n).relations


def test_composition_spot_checks():
    bkw = build_family("BKW", 6)
    l3 = labels(bkw, 3)
    img = bkw.comp(2, 2, 1).apply_data({0: 1})
    assert img == {l3.index("t_1.3"): Fraction(1), l3.index("t_2.3"): Fraction(1)}
    img = bkw.comp(2, 2, 2).apply_data({1: 1})  # inner generator
    assert img == {l3.index("t_2.3"): Fraction(1)}
    assert bkw.comp(2, 0, 1).apply_data({0: 1}) == {}
    lhg = build_family("LHG", 8, k=3)
    i13 = lhg.gen_indices(5).index((1, 2, 3))
    assert lhg.comp(5, 3, 2).apply_data({i13: 1}) == {}
    # compose() wrapper on an explicit vector
    src = bkw.comp_source(2, 2)
    v = Vector(src.ambient, {0: 1})
    out = compose(bkw, 2, 2, 1, v)
    assert out.data == img if False else out.ambient == bkw.gen_space(3).ambient


def test_deletion_is_fi_consistent():
    bkw = build_family("BKW", 6)
    for n in range(2, 7):
        idx = bkw.gen_indices(n)
        for p in range(1, n + 1):
            c = bkw.comp(n, 0, p)
            tgt = bkw.gen_indices(n - 1)
            for gi, I in enumerate(idx):
                img = c.apply_data({gi: 1})
                if p in I:
                    assert img == {}
                else:
                    J = tuple(v if v < p else v - 1 for v in I)
                    assert img == {tgt.index(J): Fraction(1)}


def test_axioms_pass_small():
    dk = build_family("DK", 5)
    assert all(r.status != "FAIL" for r in verify_axioms(dk, 5))
    assert all(r.passed for r in verify_relation_morphism(dk, 5))
    lg = build_family("LG", 6)
    assert all(r.status != "FAIL" for r in verify_axioms(lg, 6))


def test_axioms_negative_control():
    # flip one sign in a composition table: the sequential axiom must fail
    dk = build_family("DK", 5)
    corrupted = OperadFamily("corrupt", dk.scheme, dk._relation_fn, 5, k=2)
    key = (2, 2, 1)
    good = dk.comp(*key)
    bad_cols = [dict(c) for c in good.cols]
    bad_cols[0] = {k: -v for k, v in bad_cols[0].items()}
    corrupted._comps[key] = LinearMap(good.source, good.target, bad_cols)
    reports = verify_axioms(corrupted, 4)
    assert any(r.status == "FAIL" for r in reports)


def test_relation_morphism_negative_control():
    bkw = build_family("BKW", 5)
    shrunk = OperadFamily("shrunk", bkw.scheme, _rel_zero, 5, k=2)
    # keep generators and maps but declare empty relations in every arity:
    # the bracket image escapes the (empty) target relation space
    reports = verify_relation_morphism(shrunk, 4)
    assert any(not r.passed for r in reports)


def test_minimality_bkw_to_dk():
    shell = family_shell(build_family("BKW", 5))
    mini = minimal_suboperad(shell, 4)
    dk = build_family("DK", 5)
    assert mini.component(4).rdim == 11
    for n in range(5):
        assert mini.component(n).relations == dk.component(n).relations


def test_minimality_confluence():
    shell = family_shell(build_family("BKW", 5))
    base = minimal_suboperad(shell, 4)
    for seed in (1, 5, 9):
        alt = minimal_suboperad(shell, 4, schedule_rng=random.Random(seed))
        for n in range(5):
            assert alt.component(n).relations == base.component(n).relations


def test_action_preserves_relations():
    from quadop.operads import transpositions
    from quadop.qd import square_apply_rows

    for fam in (build_family("DK", 5), build_family("RHG", 5, k=3)):
        for n in range(2, 6):
            comp = fam.component(n)
            if comp.gdim == 0:
                continue
            for sigma in transpositions(n):
                act = fam.action(n, sigma)
                imgs = square_apply_rows(
                    act, comp.relations.rows, comp.generators, comp.generators
                )
                for img in imgs:
                    assert comp.relations.contains(img)


def test_compare_families():
    dk = build_family("DK", 5)
    bkw = build_family("BKW", 5)
    reports = compare_families(dk, bkw, 4)
    assert all(r.passed for r in reports)
    assert any("PROPER INCLUSION" in r.details for r in reports)


def test_nonsymmetric_rejects_arity_zero():
    lg = build_family("LG", 6)
    with pytest.raises(ValueError):
        lg.comp(3, 0, 1)
    with pytest.raises(ValueError):
        lg.action(3, (1, 2, 3))


def test_bracket_image_spot():
    # the wedge of the two outer/inner copies of the single arity-2 generator
    # maps to span{(t_13 + t_23) wedge t_12}, a one-dimensional image
    from quadop.graded import mixed_bracket, square
    from quadop.qd import square_apply_rows
    from quadop.exactlin import Subspace
    from quadop.operads import _tagged

    bkw = build_family("BKW", 4)
    ta = _tagged(bkw.gen_space(2), "o:")
    tb = _tagged(bkw.gen_space(2), "i:")
    bracket = mixed_bracket(ta, tb, -1)
    assert bracket.dim == 1
    c = bkw.comp(2, 2, 1)
    src = bkw.comp_source(2, 2)
    imgs = square_apply_rows(c, bracket.rows, src, bkw.gen_space(3))
    img = Subspace(square(bkw.gen_space(3)).ambient, imgs)
    assert img.dim == 1
    l3 = bkw.gen_space(3).labels
    i12, i13, i23 = (l3.index(x) for x in ("t_1.2", "t_1.3", "t_2.3"))
    n = 3
    want = {}
    for a in (i13, i23):
        want[a * n + i12] = want.get(a * n + i12, 0) + 1
        want[i12 * n + a] = want.get(i12 * n + a, 0) - 1
    assert img.contains(want)


def test_fixpoint_is_bounded_by_full():
    bkw = build_family("BKW", 5)
    mini = minimal_suboperad(family_shell(bkw), 4)
    for n in range(5):
        full = bkw.component(n)
        assert full.relations.contains_subspace(mini.component(n).relations)
        assert mini.component(n).rdim <= full.rdim
