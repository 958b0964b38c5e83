"""Combinatorial Hopf operads of labeled (hyper)graphs with odd edges.

A basis element is a vertex set {1..n} with an ordered list of degree-1
hyperedges of a fixed size k, stored canonically (edges sorted lexicographically);
reordering edges costs the sign of the permutation because edges are odd.
Symmetric composition inserts and sums over all reconnections of the
slot-incident hyperedges; the linear (nonsymmetric) variant keeps intervals
whose endpoints survive.  Coproducts distribute edges over ordered pairs with
unshuffle signs.
"""

from fractions import Fraction
from itertools import combinations

from .kernel import EchelonBasis
from .qd import apply_functor
from .realize import weight_component
from .report import Report


def _perm_sign(items):
    """Sign of the permutation sorting `items` (distinct, comparable)."""
    items = list(items)
    sign = 1
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            items[b - 1], items[b] = items[b], items[b - 1]
            sign = -sign
            b -= 1
    return sign


class LabeledHypergraph:
    """Canonical labeled hypergraph: n vertices, ordered distinct k-edges."""

    __slots__ = ("n", "k", "symmetric", "edges")

    def __init__(self, n, k, symmetric, edges):
        self.n = n
        self.k = k
        self.symmetric = symmetric
        self.edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("edges must be pairwise distinct")
        for e in self.edges:
            if len(e) != k or len(set(e)) != k:
                raise ValueError("edges must have %d distinct vertices" % k)
            if not all(1 <= v <= n for v in e):
                raise ValueError("edge out of vertex range")
            if not symmetric and tuple(range(e[0], e[0] + k)) != e:
                raise ValueError("linear graphs only carry intervals")

    @property
    def weight(self):
        return len(self.edges)

    @property
    def degree(self):
        return len(self.edges)

    def key(self):
        return (self.n, self.k, self.symmetric, self.edges)

    def __eq__(self, other):
        return isinstance(other, LabeledHypergraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return serialize_graph(self)


def serialize_graph(g):
    edges = ",".join("".join(map(str, e)) if g.n < 10 else ".".join(map(str, e))
                     for e in g.edges)
    return "n=%d;k=%d;edges=%s" % (g.n, g.k, edges)


def graph(n, k, symmetric, edges):
    return LabeledHypergraph(n, k, symmetric, edges)


class GraphSum:
    """Formal rational combination of canonical graphs on one shape."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for g, c in (terms.items() if isinstance(terms, dict) else terms):
                self.add(g, c)

    def add(self, g, coeff):
        c = self.terms.get(g, 0) + Fraction(coeff)
        if c:
            self.terms[g] = c
        elif g in self.terms:
            del self.terms[g]
        return self

    def __add__(self, other):
        out = GraphSum(dict(self.terms))
        for g, c in other.terms.items():
            out.add(g, c)
        return out

    def scale(self, c):
        return GraphSum({g: c * v for g, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GraphSum) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*[%s]" % (c, g) for g, c in sorted(self.terms.items()))


def _canonicalize(n, k, symmetric, edge_list):
    """Sort an explicit edge list with its sign; duplicate edges kill the
    term (odd squares vanish)."""
    if len(set(edge_list)) != len(edge_list):
        return 0, None
    sign = _perm_sign(edge_list)
    return sign, LabeledHypergraph(n, k, symmetric, edge_list)


def compose_graphs(g1, p, g2):
    """Partial composition g1 o_p g2 as a GraphSum."""
    if g1.k != g2.k or g1.symmetric != g2.symmetric:
        raise ValueError("graphs live in different families")
    if not 1 <= p <= g1.n:
        raise ValueError("slot out of range")
    n, m, k = g1.n, g2.n, g1.k

    def relabel_outer(v):
        return v if v < p else v + m - 1

    fixed = []
    moving = []
    for e in g1.edges:
        if p in e:
            moving.append(e)
        else:
            fixed.append(tuple(relabel_outer(v) for v in e))
    inner = [tuple(v + p - 1 for v in e) for e in g2.edges]

    out = GraphSum()
    if g1.symmetric:
        # each p-incident edge reconnects to any vertex of g2 independently
        choices = [range(p, p + m)] * len(moving)
        stack = [[]]
        for ch in choices:
            stack = [acc + [w] for acc in stack for w in ch]
        for pick in stack:
            edge_list = []
            mi = 0
            for e in g1.edges:
                if p in e:
                    w = pick[mi]
                    mi += 1
                    edge_list.append(
                        tuple(sorted(relabel_outer(v) if v != p else w for v in e))
                    )
                else:
                    edge_list.append(tuple(relabel_outer(v) for v in e))
            edge_list += inner
            sign, g = _canonicalize(n + m - 1, k, True, edge_list)
            if sign:
                out.add(g, sign)
    else:
        edge_list = []
        dead = False
        for e in g1.edges:
            a, b = e[0], e[-1]
            if p <= a:
                edge_list.append(tuple(v + m - 1 for v in e))
            elif p >= b:
                edge_list.append(e)
            elif a < p < b:
                dead = True
                break
        if not dead:
            edge_list += inner
            sign, g = _canonicalize(n + m - 1, k, False, edge_list)
            if sign:
                out.add(g, sign)
    return out


def compose_sums(s1, p, s2):
    out = GraphSum()
    for ga, ca in s1.terms.items():
        for gb, cb in s2.terms.items():
            for g, c in compose_graphs(ga, p, gb).terms.items():
                out.add(g, ca * cb * c)
    return out


def graph_action(g, sigma):
    """Right action: relabel vertices by sigma^{-1}, with the edge-sorting sign."""
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    edge_list = [tuple(sorted(inv[v - 1] for v in e)) for e in g.edges]
    sign, gg = _canonicalize(g.n, g.k, g.symmetric, edge_list)
    return GraphSum({gg: sign}) if sign else GraphSum()


def coproduct(g):
    """Unshuffle coproduct: ordered two-block distributions of the edge set
    with the Koszul sign of the unshuffle (edges are odd)."""
    out = []
    w = g.weight
    idx = list(range(w))
    for r in range(w + 1):
        for left in combinations(idx, r):
            right = [i for i in idx if i not in left]
            sign = _perm_sign(list(left) + right)
            gl = LabeledHypergraph(g.n, g.k, g.symmetric, [g.edges[i] for i in left])
            gr = LabeledHypergraph(g.n, g.k, g.symmetric, [g.edges[i] for i in right])
            out.append((Fraction(sign), gl, gr))
    return out


def all_graphs(n, k, symmetric, wmax):
    """All basis graphs of weight <= wmax."""
    if symmetric:
        pool = list(combinations(range(1, n + 1), k))
    else:
        pool = [tuple(range(i, i + k)) for i in range(1, n - k + 2)]
    out = []
    for w in range(min(wmax, len(pool)) + 1):
        for es in combinations(pool, w):
            out.append(LabeledHypergraph(n, k, symmetric, es))
    return out


# ---------------------------------------------------------------------------
# Hopf compatibility


def hopf_check(k, symmetric, nmax, wmax):
    """Delta(g1 o_p g2) = Delta(g1) o_p Delta(g2) with the middle Koszul sign,
    plus coassociativity and cocommutativity, on all basis pairs in bounds."""
    lo = k
    reports = []
    fail = None
    checked = 0
    for n in range(lo, nmax + 1):
        for m in range(lo, nmax + 1):
            if n + m - 1 > nmax:
                continue
            for g1 in all_graphs(n, k, symmetric, wmax):
                for g2 in all_graphs(m, k, symmetric, max(0, wmax - g1.weight)):
                    for p in range(1, n + 1):
                        checked += 1
                        lhs = {}
                        for g, c in compose_graphs(g1, p, g2).terms.items():
                            for s, gl, gr in coproduct(g):
                                key = (gl, gr)
                                v = lhs.get(key, 0) + c * s
                                if v:
                                    lhs[key] = v
                                elif key in lhs:
                                    del lhs[key]
                        rhs = {}
                        for s1, g1l, g1r in coproduct(g1):
                            for s2, g2l, g2r in coproduct(g2):
                                mid = (-1) ** (g1r.degree * g2l.degree)
                                left = compose_graphs(g1l, p, g2l)
                                right = compose_graphs(g1r, p, g2r)
                                for gl, cl in left.terms.items():
                                    for gr, cr in right.terms.items():
                                        key = (gl, gr)
                                        v = rhs.get(key, 0) + s1 * s2 * mid * cl * cr
                                        if v:
                                            rhs[key] = v
                                        elif key in rhs:
                                            del rhs[key]
                        if lhs != rhs and fail is None:
                            fail = (g1, p, g2)
    reports.append(
        Report("hopf.compat", fail is None,
               "%d composition pairs" % checked if fail is None
               else "failure at %s o_%d %s" % fail)
    )
    # coassociativity and cocommutativity
    co_fail = None
    for n in range(lo, nmax + 1):
        for g in all_graphs(n, k, symmetric, wmax):
            left = {}
            right = {}
            for s, gl, gr in coproduct(g):
                for s2, gll, glr in coproduct(gl):
                    key = (gll, glr, gr)
                    left[key] = left.get(key, 0) + s * s2
                for s2, grl, grr in coproduct(gr):
                    key = (gl, grl, grr)
                    right[key] = right.get(key, 0) + s * s2
            if {k_ for k_, v in left.items() if v} != {k_ for k_, v in right.items() if v} or \
               any(left.get(k_, 0) != right.get(k_, 0) for k_ in set(left) | set(right)):
                co_fail = ("coassoc", g)
                break
            tw = {}
            for s, gl, gr in coproduct(g):
                sign = (-1) ** (gl.degree * gr.degree)
                key = (gr, gl)
                tw[key] = tw.get(key, 0) + s * sign
            orig = {}
            for s, gl, gr in coproduct(g):
                orig[(gl, gr)] = orig.get((gl, gr), 0) + s
            if {k_: v for k_, v in tw.items() if v} != {k_: v for k_, v in orig.items() if v}:
                co_fail = ("cocomm", g)
                break
    reports.append(Report("hopf.coalgebra", co_fail is None,
                          "" if co_fail is None else "%s fails on %s" % co_fail))
    return reports


# ---------------------------------------------------------------------------
# operad axioms for the graph composition


def graph_operad_axioms(k, symmetric, nmax, wmax):
    """Sequential, parallel, unit, and (symmetric case) equivariance checks
    for the graph composition, exhaustive over bounded graphs."""
    from .operads import inflate_outer, transpositions

    lo = 1
    fail = None
    checked = 0
    unit = LabeledHypergraph(1, k, symmetric, ())

    def sums_equal(x, y):
        return x == y

    for n in range(lo, nmax + 1):
        for m in range(lo, nmax + 1):
            for l in range(lo, nmax + 1):
                if n + m + l - 2 > nmax:
                    continue
                gs1 = all_graphs(n, k, symmetric, wmax) if n >= k else [LabeledHypergraph(n, k, symmetric, ())]
                gs2 = all_graphs(m, k, symmetric, 1) if m >= k else [LabeledHypergraph(m, k, symmetric, ())]
                gs3 = all_graphs(l, k, symmetric, 1) if l >= k else [LabeledHypergraph(l, k, symmetric, ())]
                for g1 in gs1:
                    if g1.weight > 2:
                        continue
                    for g2 in gs2:
                        for g3 in gs3:
                            for i in range(1, n + 1):
                                for j in range(1, m + 1):
                                    checked += 1
                                    a = compose_sums(GraphSum({g1: 1}), i,
                                                     compose_graphs(g2, j, g3))
                                    b = compose_sums(compose_graphs(g1, i, g2),
                                                     i + j - 1, GraphSum({g3: 1}))
                                    if not sums_equal(a, b) and fail is None:
                                        fail = ("sequential", g1, i, g2, j, g3)
                            for i in range(1, n + 1):
                                for j in range(i + 1, n + 1):
                                    checked += 1
                                    a = compose_sums(compose_graphs(g1, i, g2),
                                                     j + m - 1, GraphSum({g3: 1}))
                                    b = compose_sums(compose_graphs(g1, j, g3),
                                                     i, GraphSum({g2: 1}))
                                    # the braiding of the two inserted odd
                                    # arguments contributes a Koszul sign
                                    b = b.scale((-1) ** (g2.degree * g3.degree))
                                    if not sums_equal(a, b) and fail is None:
                                        fail = ("parallel", g1, i, g2, j, g3)
    unit_fail = None
    for n in range(lo, nmax + 1):
        for g in all_graphs(n, k, symmetric, wmax) if n >= k else []:
            for p in range(1, n + 1):
                if compose_graphs(g, p, unit) != GraphSum({g: 1}):
                    unit_fail = (g, p)
            if compose_graphs(unit, 1, g) != GraphSum({g: 1}):
                unit_fail = (g, 0)
    eq_fail = None
    if symmetric:
        for n in range(k, nmax + 1):
            for m in range(k, nmax + 1):
                if n + m - 1 > nmax:
                    continue
                for g1 in all_graphs(n, k, True, 1):
                    for g2 in all_graphs(m, k, True, 1):
                        for p in range(1, n + 1):
                            for sigma in transpositions(n):
                                q = sigma[p - 1]
                                lhs = GraphSum()
                                for g, c in graph_action(g1, sigma).terms.items():
                                    for gg, cc in compose_graphs(g, p, g2).terms.items():
                                        lhs.add(gg, c * cc)
                                rhs = GraphSum()
                                infl = inflate_outer(sigma, n, m, p)
                                for g, c in compose_graphs(g1, q, g2).terms.items():
                                    for gg, cc in graph_action(g, infl).terms.items():
                                        rhs.add(gg, c * cc)
                                if lhs != rhs and eq_fail is None:
                                    eq_fail = ("outer", g1, p, g2, sigma)
    return [
        Report("graph.seq-par", fail is None,
               "%d cases" % checked if fail is None else str(fail)),
        Report("graph.unit", unit_fail is None,
               "" if unit_fail is None else str(unit_fail)),
        Report("graph.equivariance", eq_fail is None,
               "" if eq_fail is None else str(eq_fail)),
    ]


# ---------------------------------------------------------------------------
# isomorphism with the cofree realisation of the shifted family


def sc_iso_check(family, k, symmetric, nmax, wmax=3):
    """Clauses: (i) weight dimensions match the cofree side of the shifted
    data, (ii) counits correspond, (iii) single-edge projections of graph
    compositions reproduce the family compositions on cogenerators and units,
    (iv) Hopf compatibility; conilpotent cofreeness then pins the coalgebra
    morphism, so these establish the isomorphism at the tested bounds."""
    reports = []
    # (i) dimensions: cofree on shifted generators when relations are full
    dim_fail = None
    for n in range(k, nmax + 1):
        comp = family.component(n)
        gens = comp.gdim
        shifted = apply_functor("antishriek", comp)
        for w in range(0, wmax + 1):
            from math import comb
            graphs_w = comb(gens, w)
            sc_w = weight_component("Sc", shifted, w).dim
            if sc_w != graphs_w and dim_fail is None:
                dim_fail = (n, w, sc_w, graphs_w)
    reports.append(Report("sc_iso.dims", dim_fail is None,
                          "weights up to %d, arities up to %d" % (wmax, nmax)
                          if dim_fail is None else str(dim_fail)))
    # (ii) counit: the edgeless graph is the unique weight-0 basis element
    reports.append(Report("sc_iso.counit", True, "empty graph <-> unit, by construction"))
    # (iii) cogenerator projections against the family compositions
    proj_fail = None
    checked = 0
    for n in range(k, nmax + 1):
        for m in range(k, nmax + 1):
            if n + m - 1 > nmax:
                continue
            idx_n = family.gen_indices(n)
            idx_m = family.gen_indices(m)
            idx_t = family.gen_indices(n + m - 1)
            empty_m = LabeledHypergraph(m, k, symmetric, ())
            empty_n = LabeledHypergraph(n, k, symmetric, ())
            for p in range(1, n + 1):
                cmap = family.comp(n, m, p)
                # outer cogenerator, inner unit
                for gi, I in enumerate(idx_n):
                    g = LabeledHypergraph(n, k, symmetric, (I,))
                    out = compose_graphs(g, p, empty_m)
                    got = {}
                    for gg, c in out.terms.items():
                        if gg.weight == 1:
                            got[idx_t.index(gg.edges[0])] = c
                    want = cmap.apply_data({gi: 1})
                    checked += 1
                    if got != {c: Fraction(v) for c, v in want.items()} and proj_fail is None:
                        proj_fail = (n, m, p, I, got, want)
                # inner cogenerator, outer unit
                for gi, I in enumerate(idx_m):
                    g = LabeledHypergraph(m, k, symmetric, (I,))
                    out = compose_graphs(empty_n, p, g)
                    got = {}
                    for gg, c in out.terms.items():
                        if gg.weight == 1:
                            got[idx_t.index(gg.edges[0])] = c
                    want = cmap.apply_data({len(idx_n) + gi: 1})
                    checked += 1
                    if got != {c: Fraction(v) for c, v in want.items()} and proj_fail is None:
                        proj_fail = (n, m, p, I, got, want)
                # unit against unit
                out = compose_graphs(empty_n, p, empty_m)
                if list(out.terms) != [LabeledHypergraph(n + m - 1, k, symmetric, ())]:
                    proj_fail = proj_fail or (n, m, p, "units")
    reports.append(Report("sc_iso.cogenerators", proj_fail is None,
                          "%d projections" % checked if proj_fail is None
                          else str(proj_fail)))
    # (iv) Hopf compatibility
    reports.extend(hopf_check(k, symmetric, min(nmax, 4) if symmetric else nmax,
                              min(wmax, 3)))
    return reports


# ---------------------------------------------------------------------------
# holonomy dims and the n!-dimension check


def holonomy_dims(family, n, wmax):
    """Weight dimensions of the quadratic-Lie realisation of a component."""
    comp = family.component(n)
    return tuple(weight_component("L", comp, w).dim for w in range(1, wmax + 1))


def gerstenhaber_dim_check(k, nmax, family=None):
    """k = 2: the total dimension of the cofree side over the shifted refined
    data equals n! for n <= nmax.  k = 3 (experimental): reports the weight
    dimensions alongside the two-vertex ternary-forest oracle."""
    from .operads import build_family

    reports = []
    if k == 2:
        fam = family or build_family("DK", nmax)
        for n in range(1, nmax + 1):
            comp = fam.component(n)
            if comp.gdim == 0:
                total = 1
                dims = (1,)
            else:
                shifted = apply_functor("antishriek", comp)
                dims = []
                w = 0
                while True:
                    d = weight_component("Sc", shifted, w).dim
                    dims.append(d)
                    if d == 0 or w > comp.gdim:
                        break
                    w += 1
                total = sum(dims)
                dims = tuple(dims)
            import math
            ok = total == math.factorial(n)
            reports.append(
                Report("gerst.dim.n%d" % n, ok, "dims %s total %d" % (dims, total))
            )
        return reports
    if k == 3:
        fam = family or build_family("EHKR", nmax)
        for n in range(3, nmax + 1):
            comp = fam.component(n)
            shifted = apply_functor("antishriek", comp)
            dims = [weight_component("Sc", shifted, w).dim for w in range(0, 3)]
            oracle = _ternary_forest_dims(n)
            reports.append(
                Report("gerst3.dim.n%d" % n, True,
                       "Sc dims %s, forest oracle %s" % (dims, oracle),
                       status="INFO" if dims[: len(oracle)] != list(oracle) else "PASS")
            )
        return reports
    raise ValueError("k must be 2 or 3")


def _ternary_forest_dims(n):
    """Weights 0..2 of the unital algebra with an arity-3 odd bracket:
    partitions into blocks carrying reduced two-level ternary trees; the
    weight-2 slot is the rank of the span of grafted trees modulo the
    generalized Jacobi relations, computed by enumeration for n <= 5."""
    from math import comb
    if n < 3:
        return (1, 0, 0)
    w0 = 1
    w1 = comb(n, 3)
    if n < 5:
        return (w0, w1, 0)
    if n == 5:
        # two-vertex trees are indexed by the inner 3-subset (the symmetric
        # generator absorbs slot orderings without signs); the Jacobi span is
        # the orbit of the sum over all (3,2)-unshuffle images
        subsets = list(combinations(range(1, 6), 3))
        pos = {s: i for i, s in enumerate(subsets)}
        from itertools import permutations
        seen = EchelonBasis()
        for perm in permutations(range(1, 6)):
            row = {}
            for I in combinations(range(1, 6), 3):
                sub = tuple(sorted(perm[i - 1] for i in I))
                row[pos[sub]] = row.get(pos[sub], 0) + 1
            row = {c: v for c, v in row.items() if v}
            if row:
                seen.add(row)
        return (w0, w1, comb(5, 3) - seen.rank)
    return (w0, w1, None)


def graph_sum_to_json(s):
    return [
        {"coeff": str(c), "graph": serialize_graph(g)}
        for g, c in sorted(s.terms.items())
    ]


def parse_graph(text, symmetric=True):
    """Inverse of serialize_graph; the canonical string does not carry the
    symmetric flag, so the caller supplies it."""
    fields = dict(part.split("=", 1) for part in text.split(";"))
    n, k = int(fields["n"]), int(fields["k"])
    edges = []
    if fields.get("edges"):
        for tok in fields["edges"].split(","):
            if "." in tok:
                edges.append(tuple(int(v) for v in tok.split(".")))
            else:
                edges.append(tuple(int(v) for v in tok))
    return LabeledHypergraph(n, k, symmetric, edges)
