import random

import pytest

from quadop.graded import ArityError, GradedSpace
from quadop.qd import apply_functor, make_qd
from quadop.rand import random_qd
from quadop.realize import (
    FlavorExpected,
    hilbert_series,
    koszul_euler_check,
    lyndon_basis,
    ue_compare,
    weight_component,
)
from quadop.catalog import aos_data, named_qd


def test_free_and_cofree_extremes():
    free = make_qd("plain", GradedSpace.from_labels(["x", "y"]), [])
    assert [weight_component("A", free, w).dim for w in range(5)] == [1, 2, 4, 8, 16]
    assert [weight_component("Tc", free, w).dim for w in range(4)] == [1, 2, 0, 0]
    full = make_qd(
        "plain", GradedSpace.from_labels(["x", "y"]), [{c: 1} for c in range(4)]
    )
    assert [weight_component("Tc", full, w).dim for w in range(4)] == [1, 2, 4, 8]
    assert [weight_component("A", full, w).dim for w in range(4)] == [1, 2, 0, 0]


def test_tc_intersection_example():
    # relations generated by x(x)x: the cofree weight-3 part is its triple
    q = make_qd("plain", GradedSpace.from_labels(["x", "y"]), [{0: 1}])
    comp = weight_component("Tc", q, 3)
    assert comp.dim == 1


def test_s_aos_and_l_dk_dims():
    a = aos_data(3)
    assert [weight_component("S", a, w).dim for w in range(5)] == [1, 3, 2, 0, 0]
    dk = named_qd("DK", 3)
    assert [weight_component("L", dk, w).dim for w in range(1, 5)] == [3, 1, 2, 3]
    assert [weight_component("A", dk, w).dim for w in range(5)] == [1, 3, 7, 15, 31]


def test_weight_component_flavor_guards():
    dk = named_qd("DK", 3)
    with pytest.raises(FlavorExpected):
        weight_component("S", dk, 2)
    with pytest.raises(ArityError):
        weight_component("A", dk, -1)


def test_lyndon_counts():
    two = GradedSpace.from_labels(["x", "y"])
    for w, expect in ((1, 2), (2, 1), (3, 2), (4, 3)):
        assert len(lyndon_basis(two, w)) == expect
    # one odd generator: the square survives at weight 2 and nothing above
    odd = GradedSpace((("z", 1),))
    assert len(lyndon_basis(odd, 2)) == 1
    free_odd = make_qd("skew", odd, [])
    assert [weight_component("L", free_odd, w).dim for w in range(1, 4)] == [1, 1, 0]


def test_lyndon_rank_matches_count():
    from quadop.kernel import rank_of_rows

    two = GradedSpace.from_labels(["x", "y", "z"])
    for w in (2, 3, 4):
        rows = [r for r, _ in lyndon_basis(two, w)]
        assert rank_of_rows(rows) == len(rows)


def test_ue_compare_cases():
    dk = named_qd("DK", 3)
    assert ue_compare(dk, 4).passed
    v = GradedSpace.from_labels(["x", "y"])
    from quadop.graded import alt_square

    abelian = make_qd("skew", v, alt_square(v))
    assert ue_compare(abelian, 4).passed
    free = make_qd("skew", v, [])
    assert ue_compare(free, 4).passed


def test_ue_compare_random_graded():
    rng = random.Random(12)
    for _ in range(12):
        q = random_qd(rng, "skew", "s", 2)
        assert ue_compare(q, 4).passed


def test_koszul_euler():
    dk = named_qd("DK", 3)
    rep = koszul_euler_check(dk, 4)
    assert rep.status == "PASS"
    full = make_qd(
        "plain", GradedSpace.from_labels(["x"]), [{0: 1}]
    )
    assert koszul_euler_check(full, 3).status == "PASS"


def test_hilbert_series_matches_components():
    q = named_qd("DK", 4)
    hs = hilbert_series("A", q, 3)
    assert hs.truncation() == [weight_component("A", q, w).dim for w in range(4)]


def test_duality_of_components_random():
    rng = random.Random(17)
    for _ in range(20):
        pl = random_qd(rng, "plain", "p", 2)
        dual = apply_functor("star", pl)
        for w in range(4):
            assert weight_component("Tc", pl, w).dim == \
                weight_component("A", dual, w).dim
        sy = random_qd(rng, "symmetric", "y", 2)
        dual_sy = apply_functor("star", sy)
        for w in range(5):
            d = weight_component("Sc", sy, w).dim
            assert d == weight_component("S", dual_sy, w).dim
            assert d == weight_component(
                "Tc", apply_functor("sigma", sy), w
            ).dim


def test_lie_weight_two_is_alt_mod_relations():
    rng = random.Random(23)
    from quadop.graded import alt_square

    for _ in range(15):
        q = random_qd(rng, "skew", "s", 2)
        expect = alt_square(q.generators).dim - q.rdim
        assert weight_component("L", q, 2).dim == expect


def test_tc_weight3_is_triple_word():
    from quadop.graded import GradedSpace

    q = make_qd("plain", GradedSpace.from_labels(["x", "y"]), [{0: 1}])
    comp = weight_component("Tc", q, 3)
    # the single cofree element is x(x)x(x)x, word code 0
    assert comp.dim == 1
    (row,) = comp.rep_columns
    assert dict(row) == {0: 1}


def test_lyndon_basis_vectors_labeled():
    from quadop.realize import lyndon_basis_vectors
    from quadop.graded import GradedSpace

    sp = GradedSpace.from_labels(["x", "y"])
    vecs = lyndon_basis_vectors(sp, 2)
    assert len(vecs) == 1
    v, deg = vecs[0]
    assert deg == 0
    assert repr(v) == "1*x⊗y + -1*y⊗x"
