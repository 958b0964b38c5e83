import random
from fractions import Fraction

import pytest

from quadop.graphs import (
    GraphSum,
    compose_graphs,
    coproduct,
    gerstenhaber_dim_check,
    graph,
    graph_action,
    graph_operad_axioms,
    holonomy_dims,
    hopf_check,
    sc_iso_check,
    serialize_graph,
)
from quadop.operads import build_family


def test_canonical_form_and_serialization():
    g = graph(4, 2, True, [(3, 4), (2, 1)])
    assert g.edges == ((1, 2), (3, 4))
    assert serialize_graph(g) == "n=4;k=2;edges=12,34"
    with pytest.raises(ValueError):
        graph(4, 2, True, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        graph(4, 2, False, [(1, 3)])  # not an interval


def test_displayed_insertion_sum():
    g1 = graph(2, 2, True, [(1, 2)])
    g2 = graph(3, 2, True, [(1, 2), (1, 3)])
    out = compose_graphs(g1, 1, g2)
    assert out.terms == {
        graph(4, 2, True, [(1, 2), (1, 3), (1, 4)]): Fraction(1),
        graph(4, 2, True, [(1, 2), (1, 3), (2, 4)]): Fraction(1),
        graph(4, 2, True, [(1, 2), (1, 3), (3, 4)]): Fraction(1),
    }


def test_displayed_linear_insertion():
    l1 = graph(4, 2, False, [(1, 2), (3, 4)])
    l2 = graph(3, 2, False, [(1, 2)])
    out = compose_graphs(l1, 3, l2)
    target = graph(6, 2, False, [(1, 2), (3, 4), (5, 6)])
    assert list(out.terms) == [target]
    # the edge-sorting signature convention puts the sign at -1 here
    assert out.terms[target] == -1


def test_edgeless_insertions():
    g1 = graph(3, 2, True, [(2, 3)])
    empty = graph(2, 2, True, ())
    out = compose_graphs(g1, 1, empty)
    assert out.terms == {graph(4, 2, True, [(3, 4)]): Fraction(1)}


def test_reconnection_counts():
    # two slot-incident edges each choose among m vertices independently
    g1 = graph(3, 2, True, [(1, 2), (1, 3)])
    g2 = graph(3, 2, True, ())
    out = compose_graphs(g1, 1, g2)
    assert len(out.terms) == 9
    assert all(abs(c) == 1 for c in out.terms.values())
    # unit insertion at an incident vertex reproduces the graph
    unit = graph(1, 2, True, ())
    assert compose_graphs(g1, 1, unit).terms == {g1: Fraction(1)}


def test_coproduct_signs():
    g = graph(3, 2, True, [(1, 2), (1, 3)])
    table = {
        (tuple(l.edges), tuple(r.edges)): s for s, l, r in coproduct(g)
    }
    assert table[((1, 2), (1, 3)), ()] == 1
    assert table[(), ((1, 2), (1, 3))] == 1
    assert table[((1, 2),), ((1, 3),)] == 1
    assert table[((1, 3),), ((1, 2),)] == -1


def test_sign_consistency_under_permuted_inputs():
    rng = random.Random(3)
    g1 = graph(3, 2, True, [(1, 2), (2, 3)])
    g2 = graph(2, 2, True, [(1, 2)])
    base = compose_graphs(g1, 2, g2)
    # composing after acting by a transposition and acting back must agree
    sigma = (2, 1, 3)
    acted = graph_action(g1, sigma)
    back = GraphSum()
    for g, c in acted.terms.items():
        for gg, cc in graph_action(g, sigma).terms.items():
            back.add(gg, c * cc)
    assert back == GraphSum({g1: 1})


def test_hopf_checks():
    assert all(r.passed for r in hopf_check(2, True, 4, 3))
    assert all(r.passed for r in hopf_check(3, True, 5, 2))
    assert all(r.passed for r in hopf_check(2, False, 7, 2))


def test_hopf_negative_control():
    # dropping the unshuffle sign breaks Hopf compatibility on a weight-2 pair
    g1 = graph(2, 2, True, [(1, 2)])
    g2 = graph(2, 2, True, [(1, 2)])
    p = 1
    lhs = {}
    for g, c in compose_graphs(g1, p, g2).terms.items():
        for s, gl, gr in coproduct(g):
            key = (gl, gr)
            lhs[key] = lhs.get(key, 0) + c * abs(s)  # sign dropped
    rhs = {}
    for s1, g1l, g1r in coproduct(g1):
        for s2, g2l, g2r in coproduct(g2):
            mid = (-1) ** (g1r.degree * g2l.degree)
            for gl, cl in compose_graphs(g1l, p, g2l).terms.items():
                for gr, cr in compose_graphs(g1r, p, g2r).terms.items():
                    key = (gl, gr)
                    rhs[key] = rhs.get(key, 0) + s1 * s2 * mid * cl * cr
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    assert lhs != rhs


def test_graph_operad_axioms():
    for k, sym, nmax in ((2, True, 5), (2, False, 6), (3, True, 5)):
        reps = graph_operad_axioms(k, sym, nmax, 2)
        assert all(r.passed for r in reps), (k, sym)


def test_sc_iso_all_three_pairs():
    assert all(r.passed for r in sc_iso_check(build_family("BKW", 6), 2, True, 4, 3))
    assert all(
        r.passed for r in sc_iso_check(build_family("HG", 6, k=3), 3, True, 5, 2)
    )
    assert all(r.passed for r in sc_iso_check(build_family("LG", 8), 2, False, 8, 2))


def test_holonomy_dims():
    assert holonomy_dims(build_family("DK", 6), 3, 4) == (3, 1, 2, 3)
    assert holonomy_dims(build_family("BKW", 6), 4, 2) == (6, 0)
    assert holonomy_dims(build_family("LG", 8), 4, 2) == (3, 0)


def test_gerstenhaber_dims():
    reps = gerstenhaber_dim_check(2, 5)
    assert all(r.passed for r in reps)
    reps3 = gerstenhaber_dim_check(3, 5)
    assert all(r.status in ("PASS", "INFO") for r in reps3)


def test_graph_serialization_round_trip():
    from quadop.graphs import graph_sum_to_json, parse_graph, serialize_graph

    g = graph(4, 2, True, [(1, 2), (3, 4)])
    assert parse_graph(serialize_graph(g)) == g
    big = graph(12, 3, True, [(1, 2, 10), (3, 11, 12)])
    assert parse_graph(serialize_graph(big)) == big
    s = GraphSum({g: Fraction(-1, 2)})
    assert graph_sum_to_json(s) == [
        {"coeff": "-1/2", "graph": "n=4;k=2;edges=12,34"}
    ]
