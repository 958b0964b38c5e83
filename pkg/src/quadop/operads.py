"""Operads valued in skew quadratic data with the direct-sum product.

Built-in families are indexed by combinatorics on the vertex set {1..n}:
edges for BKW and DK, k-element subsets for HG(k) and its refinement RHG(k)
(RHG(2) is DK, RHG(3) is EHKR), and length-k intervals for the nonsymmetric
LG and LHG(k).  Partial compositions insert m vertices at a slot and follow
the family's per-generator formula; the axiom verifier checks everything
exhaustively at bounded arity on generator bases.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exactlin import LinearMap, Subspace
from .graded import GradedSpace, alt_square, direct_sum, mixed_bracket, square
from .kernel import EchelonBasis
from .qd import QDFlavor, QuadraticData, _embed_square, make_qd, qd_zero, square_apply_rows
from .report import Report


# ---------------------------------------------------------------------------
# permutations (1-based tuples: perm[i-1] = sigma(i))


def identity_perm(n):
    return tuple(range(1, n + 1))


def transpositions(n):
    out = []
    for i in range(1, n):
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        out.append(tuple(p))
    return out


def perm_inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def inflate_outer(sigma, n, m, p):
    """sigma' in S_{n+m-1} with (mu.sigma) o_p nu = (mu o_{sigma(p)} nu).sigma'."""
    q = sigma[p - 1]
    lhs_tags = (
        [("m", sigma[x - 1]) for x in range(1, p)]
        + [("n", i) for i in range(1, m + 1)]
        + [("m", sigma[x - 1]) for x in range(p + 1, n + 1)]
    )
    rhs_tags = (
        [("m", x) for x in range(1, q)]
        + [("n", i) for i in range(1, m + 1)]
        + [("m", x) for x in range(q + 1, n + 1)]
    )
    pos = {t: i + 1 for i, t in enumerate(rhs_tags)}
    return tuple(pos[t] for t in lhs_tags)


def inflate_inner(tau, n, m, p):
    """tau' in S_{n+m-1} with mu o_p (nu.tau) = (mu o_p nu).tau'."""
    out = []
    for v in range(1, n + m):
        if v < p or v >= p + m:
            out.append(v)
        else:
            out.append(p - 1 + tau[v - p])
    return tuple(out)


# ---------------------------------------------------------------------------
# generator index schemes


class _SubsetScheme:
    """Hyperedges: sorted k-subsets of {1..n}."""

    def __init__(self, k):
        self.k = k
        self.symmetric = True

    def indices(self, n):
        if n < self.k:
            return []
        return list(combinations(range(1, n + 1), self.k))

    def compose_outer(self, I, n, m, p):
        if p in I:
            out = []
            for j in range(m):
                term = tuple(
                    (i if i < p else i + m - 1) if i != p else p + j for i in I
                )
                out.append((1, tuple(sorted(term))))
            return out
        return [(1, tuple(i if i < p else i + m - 1 for i in I))]

    def compose_inner(self, I, n, m, p):
        return [(1, tuple(i + p - 1 for i in I))]

    def act(self, I, sigma_inv):
        return tuple(sorted(sigma_inv[i - 1] for i in I))


class _IntervalScheme:
    """Linear hyperedges: intervals [i, i+k-1] in {1..n}."""

    def __init__(self, k):
        self.k = k
        self.symmetric = False

    def indices(self, n):
        if n < self.k:
            return []
        return [tuple(range(i, i + self.k)) for i in range(1, n - self.k + 2)]

    def compose_outer(self, I, n, m, p):
        a, b = I[0], I[-1]
        if m == 1:
            return [(1, I)]
        if p <= a:
            return [(1, tuple(i + m - 1 for i in I))]
        if p >= b:
            return [(1, I)]
        return []

    def compose_inner(self, I, n, m, p):
        return [(1, tuple(i + p - 1 for i in I))]

    def act(self, I, sigma_inv):
        raise ValueError("nonsymmetric family has no symmetric-group action")


def _label(I):
    return "t_" + ".".join(str(i) for i in I)


def _tagged(space, tag):
    return GradedSpace(tuple((tag + l, d) for l, d in space.basis), space.words)


class OperadFamily:
    """Arity-indexed skew quadratic data with partial compositions and,
    for symmetric families, the vertex-relabeling group action."""

    def __init__(self, name, scheme, relation_fn, max_arity, k=None):
        self.name = name
        self.scheme = scheme
        self.symmetric = scheme.symmetric
        self.max_arity = max_arity
        self.k = k
        self._relation_fn = relation_fn
        self._components = {}
        self._comps = {}
        self._actions = {}

    def gen_indices(self, n):
        return self.scheme.indices(n)

    def gen_space(self, n):
        return self.component(n).generators

    def component(self, n):
        if n not in self._components:
            idx = self.gen_indices(n)
            if not idx:
                self._components[n] = qd_zero(QDFlavor.SKEW)
            else:
                gens = GradedSpace(tuple((_label(I), 0) for I in idx))
                rows = self._relation_fn(self, n, idx, gens)
                self._components[n] = make_qd(QDFlavor.SKEW, gens, rows)
        return self._components[n]

    def comp_source(self, n, m):
        """Generator space of V(n) ⊕ V(m), outer/inner tagged to keep labels
        distinct when n = m."""
        return direct_sum(
            _tagged(self.gen_space(n), "o:"), _tagged(self.gen_space(m), "i:")
        )

    def comp(self, n, m, p):
        """The partial composition V(n) ⊕ V(m) -> V(n+m-1) at slot p."""
        if not 1 <= p <= n:
            raise ValueError("slot out of range")
        if m == 0 and not self.symmetric:
            # deletion needs the reconnection sum of the symmetric case to be
            # associative; linear families have no arity-0 insertions
            raise ValueError("nonsymmetric families do not compose with arity 0")
        key = (n, m, p)
        if key not in self._comps:
            src = self.comp_source(n, m)
            tgt_idx = self.gen_indices(n + m - 1)
            tgt = self.gen_space(n + m - 1)
            pos = {I: i for i, I in enumerate(tgt_idx)}
            cols = []
            for I in self.gen_indices(n):
                col = {}
                for coeff, J in self.scheme.compose_outer(I, n, m, p):
                    col[pos[J]] = col.get(pos[J], 0) + coeff
                cols.append({c: Fraction(v) for c, v in col.items() if v})
            for I in self.gen_indices(m):
                col = {}
                for coeff, J in self.scheme.compose_inner(I, n, m, p):
                    col[pos[J]] = col.get(pos[J], 0) + coeff
                cols.append({c: Fraction(v) for c, v in col.items() if v})
            self._comps[key] = LinearMap(src.ambient, tgt.ambient, cols)
        return self._comps[key]

    def action(self, n, sigma):
        """Right action t_I . sigma = t_{sigma^{-1}(I)} as a LinearMap."""
        if not self.symmetric:
            raise ValueError("nonsymmetric family has no symmetric-group action")
        key = (n, tuple(sigma))
        if key not in self._actions:
            idx = self.gen_indices(n)
            pos = {I: i for i, I in enumerate(idx)}
            inv = perm_inverse(sigma)
            amb = self.gen_space(n).ambient
            cols = [{pos[self.scheme.act(I, inv)]: 1} for I in idx]
            self._actions[key] = LinearMap(amb, amb, cols)
        return self._actions[key]


# relation builders ---------------------------------------------------------


def _wedge_row(pos, n, terms):
    """Wedge of two linear combinations of degree-0 generators: terms is a
    pair of {index-tuple: coeff} dicts; returns a sparse square row."""
    left, right = terms
    row = {}
    for I, a in left.items():
        for J, b in right.items():
            i, j = pos[I], pos[J]
            for c, v in ((i * n + j, a * b), (j * n + i, -a * b)):
                w = row.get(c, 0) + v
                if w:
                    row[c] = w
                elif c in row:
                    del row[c]
    return row


def _rel_full(family, n, idx, gens):
    return list(alt_square(gens).rows)


def _rel_refined(family, n, idx, gens):
    """Disjoint wedges plus the second-type sums over (hyperedge, disjoint
    (k-1)-set) pairs; for k = 2 this is the triangle presentation."""
    k = family.k
    nn = len(idx)
    pos = {I: i for i, I in enumerate(idx)}
    rows = []
    for a in range(nn):
        for b in range(a + 1, nn):
            I, J = idx[a], idx[b]
            if not set(I) & set(J):
                rows.append(_wedge_row(pos, nn, ({I: 1}, {J: 1})))
    vertices = range(1, n + 1)
    for I in idx:
        others = [v for v in vertices if v not in I]
        for J in combinations(others, k - 1):
            right = {tuple(sorted(J + (i,))): 1 for i in I}
            rows.append(_wedge_row(pos, nn, ({I: 1}, right)))
    return rows


def _rel_zero(family, n, idx, gens):
    return []


@lru_cache(maxsize=64)
def build_family(name, max_arity, k=None):
    """Built-in families; RHG(2) = DK, RHG(3) = EHKR, HG(2) = BKW, LHG(2) = LG."""
    name = name.upper()
    if name == "BKW":
        return OperadFamily("BKW", _SubsetScheme(2), _rel_full, max_arity, k=2)
    if name == "DK":
        return OperadFamily("DK", _SubsetScheme(2), _rel_refined, max_arity, k=2)
    if name == "EHKR":
        return OperadFamily("EHKR", _SubsetScheme(3), _rel_refined, max_arity, k=3)
    if name == "HG":
        if not k or k < 2:
            raise ValueError("HG needs k >= 2")
        return OperadFamily("HG(%d)" % k, _SubsetScheme(k), _rel_full, max_arity, k=k)
    if name == "RHG":
        if not k or k < 2:
            raise ValueError("RHG needs k >= 2")
        return OperadFamily(
            "RHG(%d)" % k, _SubsetScheme(k), _rel_refined, max_arity, k=k
        )
    if name == "LG":
        return OperadFamily("LG", _IntervalScheme(2), _rel_full, max_arity, k=2)
    if name == "LHG":
        if not k or k < 2:
            raise ValueError("LHG needs k >= 2")
        return OperadFamily(
            "LHG(%d)" % k, _IntervalScheme(k), _rel_full, max_arity, k=k
        )
    raise ValueError("unknown family %r" % name)


def family_shell(family):
    """Same generators, compositions and actions, but empty relations."""
    shell = OperadFamily(
        family.name + "-shell", family.scheme, _rel_zero, family.max_arity, family.k
    )
    return shell


# ---------------------------------------------------------------------------
# composition evaluation and exhaustive axiom checks


def compose(family, n, m, p, x):
    """Apply the partial composition to a vector of V(n) ⊕ V(m)."""
    return family.comp(n, m, p)(x)


def _gen_vectors(space):
    from .exactlin import Vector

    return [Vector(space.ambient, {i: 1}) for i in range(space.dim)]


def _embed_left(family, n, m, x):
    """V(n) basis data -> direct_sum(V(n), V(m)) data (same indices)."""
    return x


def _sequential_cases(family, n, m, l, i, j):
    """Both composites on every generator of the three components."""
    N = n + m + l - 2
    cml = family.comp(m, l, j)
    c1 = family.comp(n, m + l - 1, i)
    cnm = family.comp(n, m, i)
    c2 = family.comp(n + m - 1, l, i + j - 1)
    dn = family.gen_space(n).dim
    dm = family.gen_space(m).dim
    dl = family.gen_space(l).dim
    dml = family.gen_space(m + l - 1).dim
    dnm = family.gen_space(n + m - 1).dim
    for src, ofs in (("n", 0), ("m", dn), ("l", dn + dm)):
        count = {"n": dn, "m": dm, "l": dl}[src]
        for g in range(count):
            if src == "n":
                v1 = c1.apply_data({g: 1})
                v2 = c2.apply_data(cnm.apply_data({g: 1}))
            elif src == "m":
                inner = cml.apply_data({g: 1})
                v1 = c1.apply_data({dn + c: v for c, v in inner.items()})
                mid = cnm.apply_data({dn + g: 1})
                v2 = c2.apply_data(mid)
            else:
                inner = cml.apply_data({dm + g: 1})
                v1 = c1.apply_data({dn + c: v for c, v in inner.items()})
                v2 = c2.apply_data({dnm + g: 1})
            if v1 != v2:
                return (src, g, v1, v2)
    return None


def _parallel_cases(family, n, m, l, i, j):
    """(x o_i y) o_{j+m-1} z against (x o_j z) o_i y for i < j."""
    cnm = family.comp(n, m, i)
    c1 = family.comp(n + m - 1, l, j + m - 1)
    cnl = family.comp(n, l, j)
    c2 = family.comp(n + l - 1, m, i)
    dn = family.gen_space(n).dim
    dm = family.gen_space(m).dim
    dl = family.gen_space(l).dim
    dnm = family.gen_space(n + m - 1).dim
    dnl = family.gen_space(n + l - 1).dim
    for src in ("n", "m", "l"):
        count = {"n": dn, "m": dm, "l": dl}[src]
        for g in range(count):
            if src == "n":
                v1 = c1.apply_data(cnm.apply_data({g: 1}))
                v2 = c2.apply_data(cnl.apply_data({g: 1}))
            elif src == "m":
                v1 = c1.apply_data(cnm.apply_data({dn + g: 1}))
                v2 = c2.apply_data({dnl + g: 1})
            else:
                v1 = c1.apply_data({dnm + g: 1})
                v2 = c2.apply_data(cnl.apply_data({dn + g: 1}))
            if v1 != v2:
                return (src, g, v1, v2)
    return None


def verify_axioms(family, nmax):
    """Sequential, parallel, unit, and (for symmetric families) both
    equivariance axioms, exhaustively on generator bases for all admissible
    arity/slot combinations with output arity <= nmax."""
    reports = []
    skipped = 0
    lo = 0 if family.symmetric else 1
    arities = range(lo, nmax + 1)
    # unit laws
    ok = True
    for n in arities:
        dn = family.gen_space(n).dim
        if dn == 0:
            continue
        for p in range(1, n + 1):
            c = family.comp(n, 1, p)
            for g in range(dn):
                if c.apply_data({g: 1}) != {g: Fraction(1)}:
                    ok = False
                    reports.append(
                        Report("unit.right.n%d.p%d" % (n, p), False,
                               "composition with the arity-1 unit moved a generator")
                    )
        c = family.comp(1, n, 1)
        for g in range(dn):
            if c.apply_data({g: 1}) != {g: Fraction(1)}:
                ok = False
                reports.append(Report("unit.left.n%d" % n, False, ""))
    if ok:
        reports.append(Report("unit", True, "left/right unit laws on all generators"))

    # sequential + parallel
    seq_fail = par_fail = None
    checked_seq = checked_par = 0
    for n in arities:
        for m in arities:
            for l in arities:
                if n + m + l - 2 > nmax or n < 1 or m < 1:
                    if n >= 1 and m >= 1 and l >= lo and n + m + l - 2 > nmax:
                        skipped += 1
                    continue
                for i in range(1, n + 1):
                    for j in range(1, m + 1):
                        bad = _sequential_cases(family, n, m, l, i, j)
                        checked_seq += 1
                        if bad and seq_fail is None:
                            seq_fail = (n, m, l, i, j, bad)
                for i in range(1, n + 1):
                    for j in range(i + 1, n + 1):
                        bad = _parallel_cases(family, n, m, l, i, j)
                        checked_par += 1
                        if bad and par_fail is None:
                            par_fail = (n, m, l, i, j, bad)
    reports.append(
        Report("sequential", seq_fail is None,
               "%d cases" % checked_seq if seq_fail is None
               else "first failure at (n,m,l,i,j)=%s" % (seq_fail[:5],),
               witness=None if seq_fail is None else seq_fail[5][2:])
    )
    reports.append(
        Report("parallel", par_fail is None,
               "%d cases" % checked_par if par_fail is None
               else "first failure at (n,m,l,i,j)=%s" % (par_fail[:5],),
               witness=None if par_fail is None else par_fail[5][2:])
    )

    # equivariance
    if family.symmetric:
        eq_fail = None
        checked = 0
        for n in range(1, nmax + 1):
            for m in range(0, nmax + 1):
                if n + m - 1 > nmax or n + m - 1 < 0:
                    continue
                N = n + m - 1
                dn = family.gen_space(n).dim
                dm = family.gen_space(m).dim
                for p in range(1, n + 1):
                    c = family.comp(n, m, p)
                    for sigma in transpositions(n):
                        q = sigma[p - 1]
                        cq = family.comp(n, m, q)
                        infl = family.action(N, inflate_outer(sigma, n, m, p)) if N >= 1 else None
                        act_n = family.action(n, sigma)
                        for g in range(dn):
                            lhs = c.apply_data(act_n.apply_data({g: 1}))
                            rhs = cq.apply_data({g: 1})
                            if infl is not None:
                                rhs = infl.apply_data(rhs)
                            checked += 1
                            if lhs != rhs and eq_fail is None:
                                eq_fail = ("outer", n, m, p, sigma, g)
                    for tau in transpositions(m):
                        infl = family.action(N, inflate_inner(tau, n, m, p)) if N >= 1 else None
                        act_m = family.action(m, tau)
                        for g in range(dm):
                            lhs = c.apply_data(
                                {dn + r: v for r, v in act_m.apply_data({g: 1}).items()}
                            )
                            rhs = c.apply_data({dn + g: 1})
                            if infl is not None:
                                rhs = infl.apply_data(rhs)
                            checked += 1
                            if lhs != rhs and eq_fail is None:
                                eq_fail = ("inner", n, m, p, tau, g)
        reports.append(
            Report("equivariance", eq_fail is None,
                   "%d cases over generating transpositions" % checked
                   if eq_fail is None else "first failure %s" % (eq_fail,))
        )
    if skipped:
        reports.append(
            Report("skipped", True, "%d arity combinations above the bound" % skipped,
                   status="SKIPPED")
        )
    return reports


def _morphism_source_rows(family, n, m):
    """R(n) ⊕ [V(n),V(m)]_- ⊕ R(m) inside square(V(n) ⊕ V(m))."""
    a = family.component(n)
    b = family.component(m)
    ta = _tagged(a.generators, "o:")
    tb = _tagged(b.generators, "i:")
    gens = direct_sum(ta, tb)
    na, nb, nt = a.gdim, b.gdim, gens.dim
    rows = _embed_square([dict(r) for r in a.relations.rows], list(range(na)), na, nt)
    rows += _embed_square(
        [dict(r) for r in b.relations.rows], [na + i for i in range(nb)], nb, nt
    )
    if na and nb:
        rows += [dict(r) for r in mixed_bracket(ta, tb, -1).rows]
    return gens, rows


def verify_relation_morphism(family, nmax):
    """(o_p)^(x)2 maps R(n) ⊕ [V(n),V(m)]_- ⊕ R(m) into R(n+m-1)."""
    fail = None
    checked = 0
    lo = 0 if family.symmetric else 1
    for n in range(1, nmax + 1):
        for m in range(lo, nmax + 1):
            if n + m - 1 > nmax:
                continue
            gens, rows = _morphism_source_rows(family, n, m)
            if not rows:
                continue
            target = family.component(n + m - 1)
            for p in range(1, n + 1):
                c = family.comp(n, m, p)
                images = square_apply_rows(c, rows, gens, target.generators)
                checked += len(images)
                for img in images:
                    if img and not target.relations.contains(img):
                        if fail is None:
                            fail = (n, m, p, img)
    return [
        Report(
            "relation-morphism",
            fail is None,
            "%d relation images checked" % checked
            if fail is None
            else "escape at (n,m,p)=%s" % (fail[:3],),
            witness=None if fail is None else fail[3],
        )
    ]


def minimal_suboperad(shell, nmax, schedule_rng=None):
    """Fixpoint closure: the smallest arity-wise relation spaces containing
    all composition images of lower data and closed under the group action.
    Returns a family with the same compositions and the computed relations.
    schedule_rng shuffles the processing order per round; the result is
    schedule-independent (confluence)."""
    bases = {n: EchelonBasis() for n in range(nmax + 1)}

    def current_rows(n):
        return [dict(r) for r in bases[n].rref()]

    changed = True
    while changed:
        changed = False
        order = list(range(nmax + 1))
        if schedule_rng is not None:
            schedule_rng.shuffle(order)
        for n in order:
            target = shell.gen_space(n)
            if target.dim == 0:
                continue
            # group closure
            if shell.symmetric:
                for sigma in transpositions(n):
                    act = shell.action(n, sigma)
                    for row in current_rows(n):
                        img = _square_apply_single(act, row, target.dim)
                        if bases[n].add(img):
                            changed = True
            # composition images
            for a in range(1, n + 2):
                b = n + 1 - a
                if b < 0 or a > nmax or b > nmax:
                    continue
                if b == 0 and not shell.symmetric:
                    continue
                ga = _tagged(shell.gen_space(a), "o:")
                gb = _tagged(shell.gen_space(b), "i:")
                gens = direct_sum(ga, gb)
                na, nb, nt = ga.dim, gb.dim, gens.dim
                rows = _embed_square(current_rows(a), list(range(na)), na, nt)
                rows += _embed_square(
                    current_rows(b), [na + i for i in range(nb)], nb, nt
                )
                if na and nb:
                    rows += [dict(r) for r in mixed_bracket(ga, gb, -1).rows]
                if not rows:
                    continue
                for p in range(1, a + 1):
                    c = shell.comp(a, b, p)
                    for img in square_apply_rows(c, rows, gens, target):
                        if img and bases[n].add(img):
                            changed = True

    out = OperadFamily(
        shell.name + "-min", shell.scheme, _rel_zero, shell.max_arity, shell.k
    )
    for n in range(nmax + 1):
        gens = shell.gen_space(n)
        if gens.dim == 0:
            out._components[n] = qd_zero(QDFlavor.SKEW)
        else:
            out._components[n] = QuadraticData(
                QDFlavor.SKEW, gens, Subspace(square(gens).ambient, current_rows(n))
            )
    return out


def _square_apply_single(f, row, n):
    acc = {}
    for col, coeff in row.items():
        i, j = divmod(col, n)
        for r1, v1 in f.cols[i].items():
            for r2, v2 in f.cols[j].items():
                k = r1 * n + r2
                w = acc.get(k, 0) + coeff * v1 * v2
                if w:
                    acc[k] = w
                elif k in acc:
                    del acc[k]
    return acc


def compare_families(a, b, nmax):
    """Arity-wise relation comparison; reports EQUAL / PROPER INCLUSION /
    DIFFER per arity and checks that inclusions are operad morphisms."""
    reports = []
    for n in range(nmax + 1):
        ca, cb = a.component(n), b.component(n)
        if ca.generators.labels != cb.generators.labels:
            reports.append(Report("arity-%d" % n, False, "generator mismatch"))
            continue
        if ca.relations == cb.relations:
            reports.append(Report("arity-%d" % n, True, "EQUAL (dim %d)" % ca.rdim))
        elif cb.relations.contains_subspace(ca.relations):
            reports.append(
                Report("arity-%d" % n, True,
                       "PROPER INCLUSION (dim %d < %d)" % (ca.rdim, cb.rdim))
            )
        else:
            reports.append(Report("arity-%d" % n, False, "relation spaces differ"))
    return reports
