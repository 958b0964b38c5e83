import random
from fractions import Fraction

import pytest

from quadop.exactlin import (
    AmbientBasis,
    AmbientMismatch,
    LinearMap,
    PairingMissing,
    Subspace,
    Vector,
    annihilator,
    apply_map,
    basis_vector,
    declare_pairing,
    full_space,
    intersect,
    span,
    zero_space,
)


def rand_subspace(rng, amb, max_rank=None):
    n = amb.dim
    rows = []
    for _ in range(rng.randint(0, max_rank or n)):
        row = {rng.randrange(n): Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))}
        rows.append({c: v for c, v in row.items() if v})
    return Subspace(amb, rows)


def test_span_basics():
    A = AmbientBasis(("x", "y"))
    v1, v2, v3 = Vector(A, [1, 0]), Vector(A, [0, 1]), Vector(A, [1, 1])
    assert span([v1, v2, v3]).dim == 2
    assert span([], A).dim == 0
    assert span([v1, v2]) == span([v3, v2, v1])


def test_span_rejects_mixed_ambients():
    A = AmbientBasis(("x", "y"))
    B = AmbientBasis(("u", "v"))
    with pytest.raises(AmbientMismatch):
        span([basis_vector(A, "x"), basis_vector(B, "u")])


def test_intersect_examples():
    A = AmbientBasis(("x", "y"))
    sx = span([basis_vector(A, "x")])
    sy = span([basis_vector(A, "y")])
    assert intersect(sx, sx) == sx
    assert intersect(sx, sy).dim == 0


def test_dimension_formula_random():
    rng = random.Random(7)
    amb = AmbientBasis(tuple("abcdefg"))
    for _ in range(40):
        a = rand_subspace(rng, amb)
        b = rand_subspace(rng, amb)
        assert (a + b).dim + intersect(a, b).dim == a.dim + b.dim


def test_annihilator_trivial_and_double():
    amb = AmbientBasis(tuple("abcd"))
    dual = AmbientBasis(tuple(l + "*" for l in "abcd"))
    declare_pairing(amb, dual, (1, 1, 1, 1))
    assert annihilator(zero_space(amb)) == full_space(dual)
    assert annihilator(full_space(amb)).dim == 0
    rng = random.Random(3)
    for _ in range(30):
        a = rand_subspace(rng, amb)
        ann = annihilator(a)
        assert ann.dim == amb.dim - a.dim
        assert annihilator(ann) == a


def test_double_annihilator_dim_30():
    n = 30
    amb = AmbientBasis(tuple("e%d" % i for i in range(n)))
    dual = AmbientBasis(tuple("e%d*" % i for i in range(n)))
    declare_pairing(amb, dual, (1,) * n)
    rng = random.Random(5)
    a = rand_subspace(rng, amb, max_rank=17)
    assert annihilator(annihilator(a)) == a


def test_pairing_missing():
    amb = AmbientBasis(("p", "q"))
    with pytest.raises(PairingMissing):
        annihilator(full_space(amb))


def test_apply_map_composition_and_identity():
    rng = random.Random(11)
    A = AmbientBasis(tuple("abc"))
    B = AmbientBasis(tuple("uvwx"))
    C = AmbientBasis(tuple("pq"))
    f = LinearMap(A, B, [{0: 1, 2: 2}, {1: Fraction(1, 2)}, {3: -1}])
    g = LinearMap(B, C, [{0: 1}, {1: 3}, {0: -1}, {1: 1}])
    ident = LinearMap.identity(A)
    for _ in range(25):
        s = rand_subspace(rng, A)
        assert apply_map(ident, s) == s
        assert apply_map(g.compose(f), s) == apply_map(g, apply_map(f, s))
        assert apply_map(f, s).dim <= s.dim


def test_vector_coords_roundtrip():
    A = AmbientBasis(("x", "y", "z"))
    v = Vector(A, [Fraction(1, 2), 0, -3])
    assert v.coords == [Fraction(1, 2), Fraction(0), Fraction(-3)]
    assert Vector(A, {0: Fraction(1, 2), 2: -3}) == v
