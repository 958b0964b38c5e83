# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the pure-Python sparse echelon kernel.

Same row representation (dicts keyed by column with arbitrary-precision
integer coefficients during elimination) and the same fraction-free
reduction; the win is the C-level control flow in the inner loops.  Any
behavioural divergence from _echelon_py is a bug, enforced by the
twin-equivalence tests.
"""

from fractions import Fraction
from math import gcd


cdef object _normalize(dict row):
    cdef object g, lead, c, k
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
            row[k] = row[k] // g
    return row


cdef dict _int_row(object row):
    cdef dict out = {}
    cdef object lcm = 1
    cdef object c, v, d, iv
    for v in row.values():
        if isinstance(v, Fraction):
            d = (<object> v).denominator
            lcm = lcm // gcd(lcm, d) * d
    for c, v in row.items():
        if isinstance(v, Fraction):
            iv = int(v * lcm)
        else:
            iv = v * lcm
        if iv:
            out[c] = iv
    return out


cdef class EchelonBasis:
    """Incremental row-echelon accumulator for sparse rational rows."""

    cdef public dict pivots

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    cdef dict _reduce_int(self, dict row):
        cdef dict pivots = self.pivots
        cdef dict piv
        cdef object c, a, b, g, k, v, w
        while row:
            c = min(row)
            piv = <dict> pivots.get(c)
            if piv is None:
                return row
            a = piv[c]
            b = row[c]
            g = gcd(a, b)
            a = a // g
            b = b // g
            # row <- a*row - b*piv, in place
            if a != 1:
                for k in row:
                    row[k] = row[k] * a
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
        cdef dict r = self._reduce_int(_normalize(_int_row(row)))
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    def add_many(self, rows):
        for row in rows:
            self.add(row)
        return self

    def contains(self, row):
        return not self._reduce_int(_normalize(_int_row(row)))

    def reduce(self, row):
        cdef dict res = self._reduce_int(_normalize(_int_row(row)))
        return {c: Fraction(v) for c, v in res.items()}

    def pivot_columns(self):
        return sorted(self.pivots)

    def rref(self):
        """Canonical reduced row-echelon form (pivot 1, fully cleared)."""
        cdef list cols = sorted(self.pivots)
        cdef dict reduced = {}
        cdef dict row, acc, other
        cdef object c, k, kk, vv, coef, w
        for c in reversed(cols):
            row = <dict> self.pivots[c]
            acc = {}
            for k, vv in row.items():
                acc[k] = Fraction(vv, row[c])
            for k in sorted(acc):
                if k == c or k not in reduced or k not in acc:
                    continue
                coef = acc.pop(k)
                other = <dict> reduced[k]
                for kk, vv in other.items():
                    if kk == k:
                        continue
                    w = acc.get(kk, 0) - coef * vv
                    if w:
                        acc[kk] = w
                    elif kk in acc:
                        del acc[kk]
            reduced[c] = acc
        return [dict(sorted((<dict> reduced[c]).items())) for c in cols]


def echelon_rows(rows):
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.rref()


def rank_of_rows(rows):
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return basis.rank
