"""Compare the compiled and pure-Python echelon kernels on the workloads
that dominate the verification suites.

Run:  python benchmarks/bench_echelon.py
"""

import time

from quadop.kernel import _echelon_py

try:
    from quadop.kernel import _echelon_cy
except ImportError:
    _echelon_cy = None

from quadop.catalog import aos_data
from quadop.operads import build_family
from quadop.realize import _ideal_slice_rows, _project_rel_to_sym, _sym_monomials
from quadop.qd import apply_functor


def sym_slice_rows(n, w):
    """Ideal-slice rows of the commutative quotient on the n-vertex edge
    data (the weight-w computation behind the factorial dimension checks)."""
    q = aos_data(n)
    degrees = q.generators.degrees
    monos = _sym_monomials(degrees, w)
    index = {m: k for k, m in enumerate(monos)}
    rel = _project_rel_to_sym([dict(r) for r in q.relations.rows], degrees)
    rows = []
    from quadop.realize import _sort_mono

    for m in _sym_monomials(degrees, w - 2):
        for row in rel:
            acc = {}
            for mono2, v in row.items():
                sign, full = _sort_mono(m + mono2, degrees)
                if not sign:
                    continue
                col = index[full]
                acc[col] = acc.get(col, 0) + sign * v
            acc = {c: x for c, x in acc.items() if x}
            if acc:
                rows.append(acc)
    return rows, len(monos)


def tensor_slice_rows(n, w):
    """Ideal-slice rows of the associative realisation of the chord data."""
    fam = build_family("DK", n)
    comp = apply_functor("lambda", fam.component(n))
    rel = [dict(r) for r in comp.relations.rows]
    return list(_ideal_slice_rows(rel, comp.gdim, w)), comp.gdim ** w


def run(kernel, rows):
    basis = kernel.EchelonBasis()
    t0 = time.time()
    for r in rows:
        basis.add(dict(r))
    return basis.rank, time.time() - t0


def main():
    workloads = [
        ("sym quotient n=6 w=4", *sym_slice_rows(6, 4)),
        ("sym quotient n=6 w=5", *sym_slice_rows(6, 5)),
        ("tensor quotient n=4 w=4", *tensor_slice_rows(4, 4)),
        ("tensor quotient n=5 w=3", *tensor_slice_rows(5, 3)),
        ("tensor quotient n=5 w=4", *tensor_slice_rows(5, 4)),
    ]
    print("%-26s %8s %8s %10s %10s %8s" % (
        "workload", "rows", "cols", "pure (s)", "compiled", "speedup"))
    for name, rows, ncols in workloads:
        rank_py, t_py = run(_echelon_py, rows)
        if _echelon_cy is None:
            print("%-26s %8d %8d %10.2f %10s" % (name, len(rows), ncols, t_py, "n/a"))
            continue
        rank_cy, t_cy = run(_echelon_cy, rows)
        assert rank_py == rank_cy, (rank_py, rank_cy)
        print("%-26s %8d %8d %10.2f %10.2f %7.1fx" % (
            name, len(rows), ncols, t_py, t_cy, t_py / max(t_cy, 1e-9)))


if __name__ == "__main__":
    main()
