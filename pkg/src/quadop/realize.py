"""Weight-graded realisations of quadratic data.

The associative realisation is the tensor algebra modulo the two-sided ideal
on R, the cofree side is the intersection of the shifted relation slices, the
commutative realisation works directly in the signed symmetric-power monomial
basis, and the Lie realisation runs over a (super-)Lyndon basis embedded in
the tensor ambient.  Everything is weight-by-weight exact linear algebra; the
column index of a tensor word is its base-n value, so no labels are
materialised in the hot loops.
"""

from dataclasses import dataclass
from functools import lru_cache

from .kernel import EchelonBasis
from .qd import FunctorName, QDFlavor, apply_functor
from .graded import ArityError
from .report import Report


REALIZATIONS = ("A", "S", "Tc", "Sc", "L")


@dataclass(frozen=True)
class WeightComponent:
    realization: str
    weight: int
    dim: int
    ambient_dim: int
    rep_columns: tuple  # representatives: monomial columns for quotients,
    #                     echelon rows for sub-objects (None when implicit)


@dataclass(frozen=True)
class HilbertSeries:
    dims: tuple

    def __getitem__(self, w):
        return self.dims[w]

    def truncation(self):
        return list(self.dims)


# ---------------------------------------------------------------------------
# tensor side


def _ideal_slice_rows(rel_rows, n, w):
    """Spanning rows of sum_i V^i (x) R (x) V^j inside V^(x)w, base-n coded."""
    if w < 2:
        return
    npow = [n ** k for k in range(w + 1)]
    for i in range(w - 1):
        j = w - 2 - i
        # column of u (x) (p,q) (x) v = ((u*n + p)*n + q)*n^j + v
        for u in range(npow[i]):
            base_u = u * npow[2]
            for row in rel_rows:
                shifted = {(base_u + c) * npow[j]: v for c, v in row.items()}
                if j == 0:
                    yield shifted
                else:
                    for v_word in range(npow[j]):
                        yield {c + v_word: x for c, x in shifted.items()}


def tensor_quotient_dim(rel_rows, n, w):
    """dim of weight w of T(V)/(R): words minus the rank of the ideal slice."""
    if w == 0:
        return 1, ()
    if w == 1:
        return n, ()
    basis = EchelonBasis()
    for row in _ideal_slice_rows(rel_rows, n, w):
        basis.add(row)
    pivots = set(basis.pivot_columns())
    total = n ** w
    dim = total - basis.rank
    reps = tuple(c for c in range(total) if c not in pivots) if total <= 20000 else ()
    return dim, reps


def _intersect_raw(rows_a, rows_b, ncols):
    """Zassenhaus intersection on raw row lists."""
    basis = EchelonBasis()
    for r in rows_a:
        row = dict(r)
        row.update({c + ncols: v for c, v in r.items()})
        basis.add(row)
    for r in rows_b:
        basis.add(dict(r))
    out = []
    for row in basis.rref():
        if min(row) >= ncols:
            out.append({c - ncols: v for c, v in row.items()})
    return out


def tensor_cofree_rows(rel_rows, n, w):
    """Echelon rows of the weight-w component of the cofree side: the
    intersection of all slices V^i (x) R (x) V^j."""
    if w == 0 or w == 1:
        raise ArityError("cofree components below weight 2 are implicit")
    npow = [n ** k for k in range(w + 1)]
    slices = []
    for i in range(w - 1):
        j = w - 2 - i
        rows = []
        for u in range(npow[i]):
            base_u = u * npow[2]
            for row in rel_rows:
                shifted = {(base_u + c) * npow[j]: v for c, v in row.items()}
                if j == 0:
                    rows.append(shifted)
                else:
                    rows.extend(
                        {c + v_word: x for c, x in shifted.items()}
                        for v_word in range(npow[j])
                    )
        slices.append(rows)
    acc = None
    for rows in slices:
        if acc is None:
            acc = EchelonBasis().add_many(rows).rref()
        else:
            acc = _intersect_raw(acc, EchelonBasis().add_many(rows).rref(), n ** w)
        if not acc:
            return []
    return acc


# ---------------------------------------------------------------------------
# symmetric side


def _sym_monomials(degrees, w):
    """Signed symmetric-power basis: multisets with odd letters squarefree."""
    n = len(degrees)
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for i in range(start, n):
            if degrees[i] % 2:
                rec(i + 1, left - 1, acc + [i])
            else:
                for k in range(1, left + 1):
                    rec(i + 1, left - k, acc + [i] * k)

    rec(0, w, [])
    return sorted(out)


def _sort_mono(letters, degrees):
    """Canonical form of a formal symmetric product: (sign, sorted tuple) or
    (0, None) when an odd letter repeats."""
    sign = 1
    letters = list(letters)
    # insertion sort tracking odd-odd transpositions
    for a in range(1, len(letters)):
        b = a
        while b > 0 and letters[b - 1] > letters[b]:
            if degrees[letters[b - 1]] % 2 and degrees[letters[b]] % 2:
                sign = -sign
            letters[b - 1], letters[b] = letters[b], letters[b - 1]
            b -= 1
    for a in range(1, len(letters)):
        if letters[a] == letters[a - 1] and degrees[letters[a]] % 2:
            return 0, None
    return sign, tuple(letters)


def _project_rel_to_sym(rel_rows, degrees):
    """Image of tensor-square relation rows under V(x)V -> S^2(V)."""
    n = len(degrees)
    out = []
    for row in rel_rows:
        acc = {}
        for col, v in row.items():
            i, j = divmod(col, n)
            sign, mono = _sort_mono((i, j), degrees)
            if not sign:
                continue
            w = acc.get(mono, 0) + sign * v
            if w:
                acc[mono] = w
            elif mono in acc:
                del acc[mono]
        if acc:
            out.append(acc)
    return out


def sym_quotient_dim(rel_rows, degrees, w):
    """dim of weight w of S(V)/(R) in the signed monomial basis."""
    if w == 0:
        return 1, ()
    if w == 1:
        return len(degrees), ()
    monos = _sym_monomials(degrees, w)
    index = {m: k for k, m in enumerate(monos)}
    rel_sym = _project_rel_to_sym(rel_rows, degrees)
    basis = EchelonBasis()
    for m in _sym_monomials(degrees, w - 2):
        for row in rel_sym:
            acc = {}
            for mono2, v in row.items():
                sign, full = _sort_mono(m + mono2, degrees)
                if not sign:
                    continue
                col = index[full]
                x = acc.get(col, 0) + sign * v
                if x:
                    acc[col] = x
                elif col in acc:
                    del acc[col]
            if acc:
                basis.add(acc)
    pivots = set(basis.pivot_columns())
    dim = len(monos) - basis.rank
    reps = tuple(c for c in range(len(monos)) if c not in pivots) if len(monos) <= 20000 else ()
    return dim, reps


# ---------------------------------------------------------------------------
# Lie side: (super-)Lyndon basis and ideal slices


def _lyndon_words(n, w):
    """Duval's generator of Lyndon words of length w over 0..n-1."""
    out = []
    word = [-1]
    while word:
        word[-1] += 1
        m = len(word)
        if m == w:
            out.append(tuple(word))
        while len(word) < w:
            word.append(word[-m])
        while word and word[-1] == n - 1:
            word.pop()
    return out


def _standard_factor(word):
    """Standard factorization: split before the longest proper Lyndon suffix."""
    for cut in range(1, len(word)):
        if _is_lyndon(word[cut:]):
            return word[:cut], word[cut:]
    raise ValueError("not a Lyndon word")


def _is_lyndon(word):
    if not word:
        return False
    return all(word < word[k:] + word[:k] for k in range(1, len(word)))


def _bracket_rows(x, y, degx, degy, n, wx, wy):
    """[x, y] = x(x)y - (-1)^{|x||y|} y(x)x on base-n coded rows."""
    sign = -1 if (degx * degy) % 2 else 1
    acc = {}
    shift_y = n ** wy
    shift_x = n ** wx
    for cx, vx in x.items():
        for cy, vy in y.items():
            c1 = cx * shift_y + cy
            acc[c1] = acc.get(c1, 0) + vx * vy
            c2 = cy * shift_x + cx
            acc[c2] = acc.get(c2, 0) - sign * vx * vy
    return {c: v for c, v in acc.items() if v}


def _expand_lyndon(word, degrees, n):
    """Expand the standard bracketing into the tensor ambient; returns
    (row, total degree)."""
    if len(word) == 1:
        return {word[0]: 1}, degrees[word[0]]
    u, v = _standard_factor(word)
    ru, du = _expand_lyndon(u, degrees, n)
    rv, dv = _expand_lyndon(v, degrees, n)
    return _bracket_rows(ru, rv, du, dv, n, len(u), len(v)), du + dv


def lyndon_basis_rows(degrees, w):
    """(row, degree) pairs of the free-Lie weight-w basis: standard Lyndon
    bracketings plus squares of odd-degree Lyndon elements (the super part)."""
    n = len(degrees)
    if w < 1 or n == 0:
        return []
    out = []
    for word in _lyndon_words(n, w):
        out.append(_expand_lyndon(word, degrees, n))
    if w % 2 == 0:
        for word in _lyndon_words(n, w // 2):
            row, d = _expand_lyndon(word, degrees, n)
            if d % 2:
                out.append((_bracket_rows(row, row, d, d, n, w // 2, w // 2), 2 * d))
    return out


def _row_degree(row, degrees, n, w):
    degs = set()
    for col in row:
        total = 0
        c = col
        for _ in range(w):
            c, letter = divmod(c, n)
            total += degrees[letter]
        degs.add(total)
    if len(degs) != 1:
        raise ValueError("non-homogeneous row in a graded computation")
    return degs.pop()


def lie_weight_rows(rel_rows, degrees, w):
    """Echelon rows (with degrees) of the free part F_w and the ideal slice
    I_w inside V^(x)w; the quotient dims come from ranks per degree."""
    n = len(degrees)
    free = lyndon_basis_rows(degrees, w)
    # ideal slices: I_2 = R, I_u = [V, I_{u-1}]
    slices = {2: [(dict(r), _row_degree(r, degrees, n, 2)) for r in rel_rows]}
    for u in range(3, w + 1):
        prev = slices[u - 1]
        rows = []
        basis = EchelonBasis()
        for s, ds in prev:
            for g in range(n):
                row = _bracket_rows({g: 1}, s, degrees[g], ds, n, 1, u - 1)
                if row and basis.add(dict(row)):
                    rows.append((row, degrees[g] + ds))
        slices[u] = rows
    return free, slices.get(w, [])


def lie_weight_dims_by_parity(rel_rows, degrees, w):
    """(even dim, odd dim) of L(V,R) at weight w."""
    if w == 1:
        ev = sum(1 for d in degrees if d % 2 == 0)
        od = len(degrees) - ev
        return ev, od
    free, ideal = lie_weight_rows(rel_rows, degrees, w)
    dims = {}
    for group, sign in ((free, +1), (ideal, -1)):
        bydeg = {}
        for row, d in group:
            bydeg.setdefault(d % 2, []).append(row)
        for p, rows in bydeg.items():
            basis = EchelonBasis()
            for r in rows:
                basis.add(dict(r))
            dims[p] = dims.get(p, 0) + sign * basis.rank
    return dims.get(0, 0), dims.get(1, 0)


# ---------------------------------------------------------------------------
# public weight components


def _as_plain_for_A(q):
    if q.flavor is QDFlavor.PLAIN:
        return q
    if q.flavor is QDFlavor.SKEW:
        return apply_functor(FunctorName.LAMBDA, q)
    return apply_functor(FunctorName.SCRIPT_S, q)


def _as_plain_for_Tc(q):
    if q.flavor is QDFlavor.PLAIN:
        return q
    if q.flavor is QDFlavor.SYM:
        return apply_functor(FunctorName.SIGMA, q)
    return apply_functor(FunctorName.LAMBDA, q)


@lru_cache(maxsize=4096)
def _component_cached(realization, q, w):
    if w < 0:
        raise ArityError("weight must be non-negative")
    if realization == "A":
        qq = _as_plain_for_A(q)
        n = qq.gdim
        if w == 0:
            return WeightComponent("A", 0, 1, 1, ())
        dim, reps = tensor_quotient_dim(
            [dict(r) for r in qq.relations.rows], n, w
        )
        return WeightComponent("A", w, dim, n ** w, reps)
    if realization == "Tc":
        qq = _as_plain_for_Tc(q)
        n = qq.gdim
        if w == 0:
            return WeightComponent("Tc", 0, 1, 1, ())
        if w == 1:
            return WeightComponent("Tc", 1, n, n, ())
        rows = tensor_cofree_rows([dict(r) for r in qq.relations.rows], n, w)
        return WeightComponent(
            "Tc", w, len(rows), n ** w,
            tuple(tuple(sorted(r.items())) for r in rows),
        )
    if realization == "S":
        if q.flavor is not QDFlavor.SYM:
            raise FlavorExpected("S realisation needs symmetric data")
        dim, reps = sym_quotient_dim(
            [dict(r) for r in q.relations.rows], q.generators.degrees, w
        )
        amb = len(_sym_monomials(q.generators.degrees, w))
        return WeightComponent("S", w, dim, amb, reps)
    if realization == "Sc":
        if q.flavor is not QDFlavor.SYM:
            raise FlavorExpected("Sc realisation needs symmetric data")
        dual = apply_functor(FunctorName.STAR, q)
        comp = _component_cached("S", dual, w)
        return WeightComponent("Sc", w, comp.dim, comp.ambient_dim, ())
    if realization == "L":
        if q.flavor is not QDFlavor.SKEW:
            raise FlavorExpected("L realisation needs skew data")
        if w == 0:
            return WeightComponent("L", 0, 0, 1, ())
        ev, od = lie_weight_dims_by_parity(
            [dict(r) for r in q.relations.rows], q.generators.degrees, w
        )
        return WeightComponent("L", w, ev + od, q.gdim ** w, ())
    raise ValueError(realization)


class FlavorExpected(ValueError):
    pass


def weight_component(realization, q, w):
    return _component_cached(realization, q, w)


def hilbert_series(realization, q, wmax):
    return HilbertSeries(
        tuple(weight_component(realization, q, w).dim for w in range(wmax + 1))
    )


def lyndon_basis(space, w):
    """Expanded free-Lie basis at weight w for a graded generator space,
    as base-n coded sparse rows paired with their degrees."""
    if w < 1:
        raise ArityError("weight must be at least 1")
    return lyndon_basis_rows(space.degrees, w)


# ---------------------------------------------------------------------------
# PBW comparison and the Koszul-Euler diagnostic


def _poly_mul(a, b, cap):
    out = [0] * (cap + 1)
    for i, x in enumerate(a):
        if i > cap or not x:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += x * y
    return out


def pbw_series(lie_dims_by_parity, wmax):
    """Weight series of the enveloping algebra from Lie dims split by parity:
    prod_w (1+t^w)^{odd_w} / (1-t^w)^{even_w}."""
    out = [0] * (wmax + 1)
    out[0] = 1
    for w, (ev, od) in lie_dims_by_parity.items():
        for _ in range(od):
            factor = [0] * (wmax + 1)
            factor[0] = 1
            if w <= wmax:
                factor[w] = 1
            out = _poly_mul(out, factor, wmax)
        for _ in range(ev):
            # 1/(1-t^w) = 1 + t^w + t^{2w} + ...
            geo = [1 if (k % w == 0) else 0 for k in range(wmax + 1)]
            out = _poly_mul(out, geo, wmax)
    return out


def ue_compare(q, wmax):
    """PBW check: weight dims of A(Lambda(q)) against the enveloping-algebra
    prediction from the Lie dims of L(q)."""
    if q.flavor is not QDFlavor.SKEW:
        raise FlavorExpected("ue_compare needs skew data")
    by_parity = {}
    for w in range(1, wmax + 1):
        by_parity[w] = lie_weight_dims_by_parity(
            [dict(r) for r in q.relations.rows], q.generators.degrees, w
        )
    predicted = pbw_series(by_parity, wmax)
    actual = [weight_component("A", q, w).dim for w in range(wmax + 1)]
    ok = actual == predicted
    return Report(
        "ue_compare",
        ok,
        details="A(Lambda(q))=%s PBW=%s" % (actual, predicted),
    )


def koszul_euler_check(q, wmax):
    """Numerical Koszulity diagnostic: the product of the weight series of
    the realisation of q and of its second Koszul dual at -t must be 1 up to
    the cap; reported as PASS when it is, INFO otherwise."""
    bang = apply_functor(FunctorName.SHRIEK, q)
    if q.flavor is QDFlavor.SKEW:
        h1 = [weight_component("A", q, w).dim for w in range(wmax + 1)]
        h2 = [weight_component("S", bang, w).dim for w in range(wmax + 1)]
    elif q.flavor is QDFlavor.SYM:
        h1 = [weight_component("S", q, w).dim for w in range(wmax + 1)]
        h2 = [weight_component("A", bang, w).dim for w in range(wmax + 1)]
    else:
        h1 = [weight_component("A", q, w).dim for w in range(wmax + 1)]
        h2 = [weight_component("A", bang, w).dim for w in range(wmax + 1)]
    signed = [(-1) ** w * d for w, d in enumerate(h2)]
    prod = _poly_mul(h1, signed, wmax)
    ok = prod[0] == 1 and all(x == 0 for x in prod[1:])
    return Report(
        "koszul_euler",
        True,
        details="h(t)*h^!(-t) coefficients %s" % prod,
        status="PASS" if ok else "INFO",
    )


def lyndon_basis_vectors(space, w):
    """Labeled embedding of the free-Lie basis at weight w, for small spaces:
    pairs (Vector in the labeled tensor-power ambient, degree)."""
    from .exactlin import AmbientBasis, Vector
    from .graded import TENSOR_SEP

    n = space.dim
    if n ** w > 100000:
        raise ValueError("tensor power too large to label explicitly")
    labels = []
    degs = []
    for code in range(n ** w):
        word = []
        c = code
        for _ in range(w):
            c, letter = divmod(c, n)
            word.append(letter)
        word.reverse()
        labels.append(TENSOR_SEP.join(space.labels[l] for l in word))
        degs.append(sum(space.degrees[l] for l in word))
    amb = AmbientBasis(tuple(labels), tuple(degs))

    # the base-n code of a word is big-endian in the letters
    def recode(row):
        return {c: v for c, v in row.items()}

    return [
        (Vector(amb, recode(row)), d) for row, d in lyndon_basis_rows(space.degrees, w)
    ]
