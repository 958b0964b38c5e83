"""Named quadratic data and the comparison spans used by the duality checks."""

from itertools import combinations, product as iproduct

from .graded import GradedSpace
from .operads import build_family
from .qd import QDFlavor, make_qd


def _edge_pairs(n):
    return list(combinations(range(1, n + 1), 2))


def aos_data(n):
    """Generators one per edge in degree -1; relations the three-term cyclic
    sums over increasing vertex triples."""
    edges = _edge_pairs(n)
    pos = {e: i for i, e in enumerate(edges)}
    gens = GradedSpace(tuple(("w_%d.%d" % e, -1) for e in edges))
    d = len(edges)

    def odot(a, b):
        # odd generators: x odot y = x(x)y - y(x)x
        return ((a * d + b, 1), (b * d + a, -1))

    rows = []
    for i, j, k in combinations(range(1, n + 1), 3):
        row = {}
        for (e, f) in (((i, j), (j, k)), ((j, k), (i, k)), ((i, k), (i, j))):
            for c, v in odot(pos[e], pos[f]):
                row[c] = row.get(c, 0) + v
        rows.append({c: v for c, v in row.items() if v})
    return make_qd(QDFlavor.SYM, gens, rows)


def arnold_rows(n, pos, d):
    """The same three-term sums expressed on an arbitrary edge indexing of a
    d-dimensional generator space (used to compare against computed duals)."""
    rows = []
    for i, j, k in combinations(range(1, n + 1), 3):
        row = {}
        for (e, f) in (((i, j), (j, k)), ((j, k), (i, k)), ((i, k), (i, j))):
            a, b = pos[e], pos[f]
            for c, v in ((a * d + b, 1), (b * d + a, -1)):
                row[c] = row.get(c, 0) + v
        rows.append({c: v for c, v in row.items() if v})
    return rows


def pentagon_rows(n, pos, d):
    """The five-term cyclic sums of the shifted-hypergraph dual presentation,
    over all index tuples with repeats allowed; terms whose hyperedge labels
    collide drop out, which yields the degenerate overlap relations."""
    rows = []
    for t in iproduct(range(1, n + 1), repeat=5):
        i, j, k, l, m = t
        row = {}
        for (A, B) in (
            ((i, j, k), (k, l, m)),
            ((j, k, l), (l, m, i)),
            ((k, l, m), (m, i, j)),
            ((l, m, i), (i, j, k)),
            ((m, i, j), (j, k, l)),
        ):
            sa, sb = tuple(sorted(set(A))), tuple(sorted(set(B)))
            if len(sa) != 3 or len(sb) != 3:
                continue
            a, b = pos[sa], pos[sb]
            for c, v in ((a * d + b, 1), (b * d + a, -1)):
                row[c] = row.get(c, 0) + v
        row = {c: v for c, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def named_qd(name, n, k=None, max_arity=None):
    """Resolve a named quadratic datum: a family component or AOS."""
    name = name.upper()
    if name == "AOS":
        return aos_data(n)
    fam = build_family(name, max_arity or max(n, k or 2), k=k)
    return fam.component(n)
