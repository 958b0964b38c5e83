"""Seeded random instances for the property suites.

Every suite derives per-case生成 from one 64-bit seed so reports are
reproducible byte-for-byte.
"""

import random
import zlib

from .graded import GradedSpace, square, square_split
from .qd import QDFlavor, make_qd


def child_rng(seed, name):
    """Deterministic per-case generator derived from the suite seed."""
    return random.Random((seed & 0xFFFFFFFFFFFFFFFF) ^ zlib.crc32(name.encode()))


def random_graded_space(rng, prefix, max_dim=3, degrees=(0, 1)):
    n = rng.randint(1, max_dim)
    return GradedSpace(
        tuple(("%s%d" % (prefix, i), rng.choice(degrees)) for i in range(n))
    )


def random_relation_rows(rng, gens, flavor):
    """Random homogeneous relation rows inside the flavor square of gens."""
    split = square_split(gens)
    if flavor is QDFlavor.PLAIN:
        pool = [{c: 1} for c in range(gens.dim * gens.dim)]
    elif flavor is QDFlavor.SYM:
        pool = [dict(r) for r in split.sym.rows]
    else:
        pool = [dict(r) for r in split.alt.rows]
    amb = square(gens).ambient
    bydeg = {}
    for r in pool:
        degs = {amb.degrees[c] for c in r}
        if len(degs) == 1:
            bydeg.setdefault(degs.pop(), []).append(r)
    rows = []
    if bydeg:
        for _ in range(rng.randint(0, max(1, len(pool) // 2))):
            d = rng.choice(sorted(bydeg))
            combo = {}
            for r in bydeg[d]:
                c0 = rng.randint(-2, 2)
                if c0:
                    for c, v in r.items():
                        combo[c] = combo.get(c, 0) + c0 * v
            combo = {c: v for c, v in combo.items() if v}
            if combo:
                rows.append(combo)
    return rows


def random_qd(rng, flavor, prefix, max_dim=3, degrees=(0, 1)):
    flavor = QDFlavor(flavor)
    gens = random_graded_space(rng, prefix, max_dim, degrees)
    return make_qd(flavor, gens, random_relation_rows(rng, gens, flavor))


def random_s2module(rng, prefix, max_dim=2, degrees=(0, 1)):
    """Random graded involutive module: signed-permutation involutions keep
    the eigenbases rational."""
    from .boqd import S2Module
    from .exactlin import LinearMap

    n = rng.randint(1, max_dim)
    gens = GradedSpace(
        tuple(("%s%d" % (prefix, i), rng.choice(degrees)) for i in range(n))
    )
    cols = [None] * n
    idxs = list(range(n))
    rng.shuffle(idxs)
    used = set()
    for i in idxs:
        if i in used:
            continue
        partners = [
            j
            for j in idxs
            if j not in used and j != i and gens.degrees[j] == gens.degrees[i]
        ]
        if partners and rng.random() < 0.4:
            j = partners[0]
            cols[i] = {j: 1}
            cols[j] = {i: 1}
            used.update((i, j))
        else:
            cols[i] = {i: rng.choice((1, -1))}
            used.add(i)
    return S2Module(gens, LinearMap(gens.ambient, gens.ambient, cols))


def random_boqd(rng, prefix, max_dim=2, degrees=(0, 1)):
    from .boqd import free_arity3, make_boqd, s3_closure_rows

    mod = random_s2module(rng, prefix, max_dim, degrees)
    amb = free_arity3(mod).ambient
    rows = []
    for _ in range(rng.randint(0, 3)):
        d = rng.choice(sorted(set(amb.degrees)))
        cand = {c: rng.randint(-2, 2) for c in range(amb.dim) if amb.degrees[c] == d}
        cand = {c: v for c, v in cand.items() if v}
        if cand:
            rows.append(cand)
    return make_boqd(mod, s3_closure_rows(mod, rows))
