"""Pure-Python sparse echelon kernel over exact rationals.

Rows are sparse dicts {column: coefficient}.  Elimination is fraction-free:
rows are kept with integer coefficients, content gcd 1 and positive leading
coefficient, and each reduction step is a cross-multiplication followed by a
gcd pass.  A final normalization produces the reduced row-echelon form with
Fraction entries, which is the canonical representative used for subspace
equality everywhere else.

A compiled twin of this module lives in _echelon_cy.pyx; both must stay
behaviourally identical (tests run the pure kernel against the compiled one).
"""

from fractions import Fraction
from math import gcd


def _normalize(row):
    """Divide an integer row by its content and make the leading entry > 0."""
    if not row:
        return row
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        for k in row:
            row[k] //= g
    return row


def _int_row(row):
    """Clear denominators of a {col: Fraction|int} row into an int row."""
    out = {}
    lcm = 1
    for c, v in row.items():
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
    for c, v in row.items():
        if isinstance(v, Fraction):
            iv = int(v * lcm)
        else:
            iv = v * lcm
        if iv:
            out[c] = iv
    return out


class EchelonBasis:
    """Incremental row-echelon accumulator for sparse rational rows.

    add() folds one row in and reports whether the rank grew; reduce()
    returns the residual of a row modulo the current basis (empty dict
    means membership).  rref() emits the canonical reduced form.
    """

    def __init__(self):
        self.pivots = {}  # pivot column -> normalized int row

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce_int(self, row):
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                return row
            a = piv[c]
            b = row[c]
            g = gcd(a, b)
            a //= g
            b //= g
            # row <- a*row - b*piv, in place
            if a != 1:
                for k in row:
                    row[k] *= a
            for k, v in piv.items():
                w = row.get(k, 0) - b * v
                if w:
                    row[k] = w
                elif k in row:
                    del row[k]
            row = _normalize(row)
        return row

    def add(self, row):
        """Fold a {col: int|Fraction} row in; True iff the rank increased."""
        row = self._reduce_int(_normalize(_int_row(row)))
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def add_many(self, rows):
        for row in rows:
            self.add(row)
        return self

    def contains(self, row):
        return not self._reduce_int(_normalize(_int_row(row)))

    def reduce(self, row):
        """Residual of row modulo the basis, as a Fraction row (not canonical)."""
        res = self._reduce_int(_normalize(_int_row(row)))
        return {c: Fraction(v) for c, v in res.items()}

    def pivot_columns(self):
        return sorted(self.pivots)

    def rref(self):
        """Canonical reduced row-echelon form: list of {col: Fraction} rows.

        Rows are sorted by pivot column, pivot entries are 1 and every pivot
        column is cleared in all other rows.  A stored row's minimum column is
        its pivot, so cleaning in decreasing pivot order only ever meets
        already-cleaned rows.
        """
        cols = sorted(self.pivots)
        reduced = {}
        for c in reversed(cols):
            row = self.pivots[c]
            acc = {k: Fraction(v, row[c]) for k, v in row.items()}
            for k in sorted(acc):
                if k == c or k not in reduced or k not in acc:
                    continue
                coef = acc.pop(k)
                for kk, vv in reduced[k].items():
                    if kk == k:
                        continue
                    w = acc.get(kk, 0) - coef * vv
                    if w:
                        acc[kk] = w
                    elif kk in acc:
                        del acc[kk]
            reduced[c] = acc
        return [dict(sorted(reduced[c].items())) for c in cols]


def echelon_rows(rows):
    """RREF of a list of sparse rows; the canonical form of their span."""
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.rref()


def rank_of_rows(rows):
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.rank
