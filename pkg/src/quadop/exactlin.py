"""Exact rational linear algebra on labeled ambient bases.

Subspaces are canonical: stored as the reduced row-echelon form of their
span, so two subspaces of the same ambient are equal iff their stored rows
are equal.  All values are immutable after construction.
"""

from dataclasses import dataclass
from fractions import Fraction

from .kernel import EchelonBasis

Scalar = Fraction


class AmbientMismatch(ValueError):
    pass


class PairingMissing(ValueError):
    pass


@dataclass(frozen=True)
class AmbientBasis:
    """Ordered basis with stable string labels and integer degrees."""

    labels: tuple
    degrees: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.degrees is None:
            object.__setattr__(self, "degrees", (0,) * len(self.labels))
        else:
            object.__setattr__(self, "degrees", tuple(self.degrees))
        if len(self.labels) != len(set(self.labels)):
            raise ValueError("ambient labels must be pairwise distinct")
        if len(self.degrees) != len(self.labels):
            raise ValueError("degree list does not match label list")

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[label]
        except AttributeError:
            object.__setattr__(
                self, "_index", {l: i for i, l in enumerate(self.labels)}
            )
            return self._index[label]

    def __repr__(self):
        return "AmbientBasis(dim=%d)" % len(self.labels)


# Declared dual pairings: (labels, degrees) of the primal ambient maps to
# (dual ambient, diagonal signs).  Declarations are idempotent.
_PAIRINGS = {}


def declare_pairing(primal, dual, signs):
    """Register a diagonal pairing between primal and its dual ambient."""
    if primal.dim != dual.dim or len(signs) != primal.dim:
        raise ValueError("pairing shape mismatch")
    _PAIRINGS[(primal.labels, primal.degrees)] = (dual, tuple(signs))
    _PAIRINGS[(dual.labels, dual.degrees)] = (primal, tuple(signs))


def pairing_of(ambient):
    try:
        return _PAIRINGS[(ambient.labels, ambient.degrees)]
    except KeyError:
        raise PairingMissing("no dual pairing declared for this ambient")


class Vector:
    """Exact vector with coordinates relative to a labeled ambient basis."""

    __slots__ = ("ambient", "data")

    def __init__(self, ambient, data):
        self.ambient = ambient
        if isinstance(data, dict):
            self.data = {c: Fraction(v) for c, v in data.items() if v}
        else:
            if len(data) != ambient.dim:
                raise ValueError("coordinate list does not match ambient dimension")
            self.data = {i: Fraction(v) for i, v in enumerate(data) if v}

    @property
    def coords(self):
        out = [Fraction(0)] * self.ambient.dim
        for c, v in self.data.items():
            out[c] = v
        return out

    def is_zero(self):
        return not self.data

    def __add__(self, other):
        if other.ambient != self.ambient:
            raise AmbientMismatch("vectors live in different ambients")
        data = dict(self.data)
        for c, v in other.data.items():
            w = data.get(c, 0) + v
            if w:
                data[c] = w
            elif c in data:
                del data[c]
        return Vector(self.ambient, data)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        s = Fraction(scalar)
        return Vector(self.ambient, {c: s * v for c, v in self.data.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and self.ambient == other.ambient
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ambient.labels, tuple(sorted(self.data.items()))))

    def __repr__(self):
        terms = [
            "%s*%s" % (v, self.ambient.labels[c])
            for c, v in sorted(self.data.items())
        ]
        return " + ".join(terms) if terms else "0"


def basis_vector(ambient, label):
    return Vector(ambient, {ambient.index(label): 1})


class Subspace:
    """Canonical echelon-form subspace of a labeled ambient."""

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient, rows, _canonical=False):
        self.ambient = ambient
        if _canonical:
            self.rows = tuple(rows)
        else:
            basis = EchelonBasis()
            for r in rows:
                basis.add(r.data if isinstance(r, Vector) else r)
            self.rows = tuple(basis.rref())

    @property
    def dim(self):
        return len(self.rows)

    def basis_vectors(self):
        return [Vector(self.ambient, dict(r)) for r in self.rows]

    def contains(self, v):
        if isinstance(v, Vector):
            if v.ambient != self.ambient:
                raise AmbientMismatch("vector is not in this ambient")
            v = v.data
        basis = EchelonBasis()
        for r in self.rows:
            basis.add(r)
        return basis.contains(v)

    def contains_subspace(self, other):
        if other.ambient != self.ambient:
            raise AmbientMismatch("subspaces live in different ambients")
        basis = EchelonBasis()
        for r in self.rows:
            basis.add(r)
        return all(basis.contains(r) for r in other.rows)

    def reduce(self, v):
        """Residual of v modulo the subspace (zero iff contained); the
        residual is only canonical up to a positive rational scale."""
        if isinstance(v, Vector):
            v = v.data
        basis = EchelonBasis()
        for r in self.rows:
            basis.add(r)
        return Vector(self.ambient, basis.reduce(v))

    def __add__(self, other):
        if other.ambient != self.ambient:
            raise AmbientMismatch("subspaces live in different ambients")
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(
            (self.ambient.labels, tuple(tuple(sorted(r.items())) for r in self.rows))
        )

    def __repr__(self):
        return "Subspace(dim=%d of %d)" % (self.dim, self.ambient.dim)


def span(vectors, ambient=None):
    """Canonical span; with an empty vector list the ambient is required."""
    vectors = list(vectors)
    if ambient is None:
        if not vectors:
            raise ValueError("ambient required for an empty span")
        ambient = vectors[0].ambient
    for v in vectors:
        if v.ambient != ambient:
            raise AmbientMismatch("span of vectors over mixed ambients")
    return Subspace(ambient, vectors)


def full_space(ambient):
    return Subspace(ambient, [{i: 1} for i in range(ambient.dim)], _canonical=False)


def zero_space(ambient):
    return Subspace(ambient, [], _canonical=True)


def intersect(a, b):
    """Intersection via the Zassenhaus double-block trick."""
    if a.ambient != b.ambient:
        raise AmbientMismatch("subspaces live in different ambients")
    n = a.ambient.dim
    stacked = []
    for r in a.rows:
        row = dict(r)
        row.update({c + n: v for c, v in r.items()})
        stacked.append(row)
    for r in b.rows:
        stacked.append(dict(r))
    basis = EchelonBasis()
    for row in stacked:
        basis.add(row)
    inter = []
    for row in basis.rref():
        if min(row) >= n:
            inter.append({c - n: v for c, v in row.items()})
    return Subspace(a.ambient, inter)


def nullspace_rows(rows, ncols):
    """Basis of {x : row.x = 0 for all rows}, as sparse rows over ncols."""
    basis = EchelonBasis()
    for r in rows:
        basis.add(r)
    rref = basis.rref()
    pivots = [min(r) for r in rref]
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = {f: Fraction(1)}
        for r in rref:
            coef = r.get(f)
            if coef:
                vec[min(r)] = -coef
        out.append(vec)
    return out


def annihilator(a):
    """All functionals in the declared dual ambient vanishing on a."""
    dual, signs = pairing_of(a.ambient)
    constraints = [{c: v * signs[c] for c, v in r.items()} for r in a.rows]
    return Subspace(dual, nullspace_rows(constraints, a.ambient.dim))


class LinearMap:
    """Basis-to-basis linear map between labeled ambients.

    Stored column-wise and sparse: cols[i] is the image of the i-th source
    basis vector as a {target index: Fraction} dict.
    """

    __slots__ = ("source", "target", "cols")

    def __init__(self, source, target, cols):
        self.source = source
        self.target = target
        if len(cols) != source.dim:
            raise ValueError("column count does not match source dimension")
        self.cols = tuple(
            {c: Fraction(v) for c, v in col.items() if v} for col in cols
        )

    @classmethod
    def from_label_map(cls, source, target, images):
        """images: source label -> {target label: coeff}; missing labels map to 0."""
        cols = []
        for l in source.labels:
            img = images.get(l, {})
            cols.append({target.index(tl): Fraction(v) for tl, v in img.items()})
        return cls(source, target, cols)

    @classmethod
    def identity(cls, ambient):
        return cls(ambient, ambient, [{i: 1} for i in range(ambient.dim)])

    def matrix(self):
        out = [
            [Fraction(0)] * self.source.dim for _ in range(self.target.dim)
        ]
        for i, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][i] = v
        return out

    def apply_data(self, data):
        acc = {}
        for c, v in data.items():
            for r, w in self.cols[c].items():
                u = acc.get(r, 0) + v * w
                if u:
                    acc[r] = u
                elif r in acc:
                    del acc[r]
        return acc

    def __call__(self, v):
        if v.ambient != self.source:
            raise AmbientMismatch("vector is not in the source ambient")
        return Vector(self.target, self.apply_data(v.data))

    def compose(self, inner):
        """self o inner."""
        if inner.target != self.source:
            raise AmbientMismatch("maps are not composable")
        return LinearMap(
            inner.source, self.target, [self.apply_data(c) for c in inner.cols]
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.source == other.source
            and self.target == other.target
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.source.labels, self.target.labels,
                     tuple(tuple(sorted(c.items())) for c in self.cols)))


def apply_map(f, a):
    """Image f(a) in canonical form."""
    if a.ambient != f.source:
        raise AmbientMismatch("subspace is not in the source ambient")
    return Subspace(f.target, [f.apply_data(r) for r in a.rows])
