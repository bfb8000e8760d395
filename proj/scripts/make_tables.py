#!/usr/bin/env python3
"""Generate the bundled character-table corpus in corpus/.

Each group is constructed from explicit permutation or matrix generators,
fully enumerated, and split into conjugacy classes.  The complex irreducible
character table is then computed exactly:

  1. class-multiplication matrices A_i with (A_i)[j,k] = #{(x,y) in C_i x C_j
     with xy = rep_k} are assembled by counting;
  2. a linear combination of the A_i is diagonalised over GF(l) for a prime
     l = 1 (mod exponent(G)), l > 2*sqrt(|G|); the common eigenvectors give
     the central character values w(C_j) = |C_j| chi(g_j) / chi(1) (mod l);
  3. degrees are recovered from the second orthogonality relation and a
     modular square root, and each value chi(g) is lifted exactly as a sum
     of root-of-unity eigenvalue multiplicities via a DFT over GF(l).

The result is independent of the modular machinery: eigenvalue
multiplicities are genuine non-negative integers bounded by the degree, so
the lift is exact.  Every table is self-checked (group order, class
equation, degree-square sum, distinct rows, and full row/column
orthogonality evaluated numerically at 50 digits) before it is written.

Usage: python3 scripts/make_tables.py [GROUP ...]   (default: all groups)
"""

import json
import sys
import time
from collections import Counter
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from pathlib import Path

import mpmath
import numpy as np
from sympy import Matrix, isprime, mobius, primitive_root
from sympy.ntheory.residue_ntheory import sqrt_mod

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


# ----------------------------------------------------------------------
# Element arithmetic: permutations, matrices mod p, and (matrix, perm) pairs.
# Elements are numpy int64 arrays; keys are raw bytes (all entries < 256).


class PermOps:
    def __init__(self, npoints):
        self.npoints = npoints

    def identity(self):
        return np.arange(self.npoints, dtype=np.int64)

    def mul(self, a, b):
        return a[b]

    def mul_batch(self, batch, b):
        return batch[:, b]

    def lmul_batch(self, a, batch):
        return a[batch]

    def inv(self, a):
        return np.argsort(a, kind="stable")

    def key(self, a):
        return a.astype(np.uint8).tobytes()

    def keys_batch(self, batch):
        u = np.ascontiguousarray(batch.astype(np.uint8))
        return [u[i].tobytes() for i in range(u.shape[0])]


def mat_inv_mod(a, p):
    d = a.shape[0]
    m = np.concatenate([a % p, np.eye(d, dtype=np.int64)], axis=1)
    for col in range(d):
        piv = next(r for r in range(col, d) if m[r, col] % p)
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
        m[col] = m[col] * pow(int(m[col, col]), p - 2, p) % p
        for r in range(d):
            if r != col and m[r, col]:
                m[r] = (m[r] - m[r, col] * m[col]) % p
    return m[:, d:]


class MatOps:
    def __init__(self, p, dim):
        self.p, self.dim = p, dim

    def identity(self):
        return np.eye(self.dim, dtype=np.int64)

    def mul(self, a, b):
        return (a @ b) % self.p

    def mul_batch(self, batch, b):
        return (batch @ b) % self.p

    def lmul_batch(self, a, batch):
        return (a @ batch) % self.p

    def inv(self, a):
        return mat_inv_mod(a, self.p)

    def key(self, a):
        return a.astype(np.uint8).tobytes()

    def keys_batch(self, batch):
        u = np.ascontiguousarray(batch.astype(np.uint8))
        return [u[i].tobytes() for i in range(u.shape[0])]


class MatPermOps:
    """Pairs (M, s): M a dim x dim matrix mod p, s a permutation of npoints.

    Packed as one flat vector of length dim*dim + npoints so the generic
    enumeration/conjugacy machinery applies unchanged.  Multiplication is
    componentwise; the key covers both parts.
    """

    def __init__(self, p, dim, npoints):
        self.p, self.dim, self.npoints = p, dim, npoints
        self.cut = dim * dim

    def pack(self, m, s):
        return np.concatenate([m.reshape(-1), s]).astype(np.int64)

    def unpack(self, x):
        return x[: self.cut].reshape(self.dim, self.dim), x[self.cut:]

    def identity(self):
        return self.pack(np.eye(self.dim, dtype=np.int64),
                         np.arange(self.npoints, dtype=np.int64))

    def mul(self, a, b):
        ma, pa = self.unpack(a)
        mb, pb = self.unpack(b)
        return self.pack((ma @ mb) % self.p, pa[pb])

    def mul_batch(self, batch, b):
        n = batch.shape[0]
        mbat = batch[:, : self.cut].reshape(n, self.dim, self.dim)
        pbat = batch[:, self.cut:]
        mb, pb = self.unpack(b)
        prod_m = (mbat @ mb) % self.p
        prod_p = pbat[:, pb]
        return np.concatenate([prod_m.reshape(n, -1), prod_p], axis=1)

    def lmul_batch(self, a, batch):
        n = batch.shape[0]
        mbat = batch[:, : self.cut].reshape(n, self.dim, self.dim)
        pbat = batch[:, self.cut:]
        ma, pa = self.unpack(a)
        prod_m = (ma @ mbat) % self.p
        prod_p = pa[pbat]
        return np.concatenate([prod_m.reshape(n, -1), prod_p], axis=1)

    def inv(self, a):
        ma, pa = self.unpack(a)
        return self.pack(mat_inv_mod(ma, self.p), np.argsort(pa, kind="stable"))

    def key(self, a):
        return a.astype(np.uint8).tobytes()

    def keys_batch(self, batch):
        u = np.ascontiguousarray(batch.astype(np.uint8))
        return [u[i].tobytes() for i in range(u.shape[0])]


# ----------------------------------------------------------------------
# Group enumeration and conjugacy classes.


def enumerate_group(ops, gens, limit):
    ident = ops.identity()
    index = {ops.key(ident): 0}
    levels = [ident[np.newaxis]]
    frontier = levels[0]
    count = 1
    while frontier.shape[0]:
        fresh = []
        for g in gens:
            prods = ops.mul_batch(frontier, g)
            keys = ops.keys_batch(prods)
            for row, k in zip(prods, keys):
                if k not in index:
                    index[k] = count
                    count += 1
                    fresh.append(row)
                    if count > limit:
                        raise RuntimeError("group larger than expected (> %d)" % limit)
        frontier = np.stack(fresh) if fresh else frontier[:0]
        if fresh:
            levels.append(frontier)
    return np.concatenate(levels), index


def conjugacy_classes(ops, gens, elems, index):
    n = elems.shape[0]
    ginv = [ops.inv(g) for g in gens]
    class_of = np.full(n, -1, dtype=np.int64)
    classes = []
    for start in range(n):
        if class_of[start] >= 0:
            continue
        cid = len(classes)
        class_of[start] = cid
        members = [start]
        frontier = [start]
        while frontier:
            batch = elems[np.array(frontier, dtype=np.int64)]
            frontier = []
            for g, gi in zip(gens, ginv):
                conj = ops.mul_batch(ops.lmul_batch(gi, batch), g)
                for k in ops.keys_batch(conj):
                    j = index[k]
                    if class_of[j] < 0:
                        class_of[j] = cid
                        members.append(j)
                        frontier.append(j)
        classes.append(np.array(members, dtype=np.int64))
    return classes, class_of


def element_order(ops, x):
    ident = ops.key(ops.identity())
    y, o = x, 1
    while ops.key(y) != ident:
        y = ops.mul(y, x)
        o += 1
    return o


# ----------------------------------------------------------------------
# Exact character table via modular diagonalisation of the class algebra.


def class_matrices(ops, elems, index, classes, class_of, reps, inv_class):
    m = len(classes)
    mats = []
    for i in range(m):
        a = np.zeros((m, m), dtype=np.int64)
        members = elems[classes[inv_class[i]]]
        for k in range(m):
            prods = ops.mul_batch(members, reps[k])
            hit = np.array([class_of[index[key]] for key in ops.keys_batch(prods)])
            a[:, k] = np.bincount(hit, minlength=m)
        mats.append(a)
    return mats


def poly_roots_mod(coeffs, l):
    xs = np.arange(l, dtype=np.int64)
    acc = np.zeros(l, dtype=np.int64)
    for c in coeffs:
        acc = (acc * xs + int(c) % l) % l
    return [int(x) for x in xs[acc == 0]]


def nullspace_vector_mod(b, l):
    m = b.shape[0]
    work = b % l
    pivots = []
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, m) if work[r, col]), None)
        if piv is None:
            continue
        if piv != row:
            work[[row, piv]] = work[[piv, row]]
        work[row] = work[row] * pow(int(work[row, col]), l - 2, l) % l
        for r in range(m):
            if r != row and work[r, col]:
                work[r] = (work[r] - work[r, col] * work[row]) % l
        pivots.append(col)
        row += 1
    free = [c for c in range(m) if c not in pivots]
    if len(free) != 1:
        raise RuntimeError("eigenspace dimension %d != 1" % len(free))
    v = np.zeros(m, dtype=np.int64)
    v[free[0]] = 1
    for r, c in enumerate(pivots):
        v[c] = (-int(work[r, free[0]])) % l
    return v


def split_eigenvectors(mats, l, m):
    rng = np.random.RandomState(12345)
    for attempt in range(500):
        if attempt < 20:
            r = attempt + 1
            coeffs = []
            c = 1
            for _ in range(m):
                c = c * r % l
                coeffs.append(c)
        else:
            coeffs = [int(c) for c in rng.randint(1, l, size=m)]
        comb = np.zeros((m, m), dtype=np.int64)
        for c, a in zip(coeffs, mats):
            comb = (comb + c * (a % l)) % l
        charpoly = Matrix(comb.tolist()).charpoly().all_coeffs()
        roots = poly_roots_mod(charpoly, l)
        if len(roots) == m:
            vecs = []
            for lam in sorted(roots):
                shifted = (comb - lam * np.eye(m, dtype=np.int64)) % l
                v = nullspace_vector_mod(shifted, l)
                if v[0] == 0:
                    raise RuntimeError("eigenvector vanishes on the identity class")
                vecs.append(v * pow(int(v[0]), l - 2, l) % l)
            return vecs
        sys.stderr.write("  splitting attempt %d gave %d distinct eigenvalues, retrying\n"
                         % (attempt, len(roots)))
    raise RuntimeError("no splitting class-matrix combination found")


def choose_prime(exponent, group_order, nclasses):
    threshold = max(2 * isqrt(group_order) + 2, 4 * nclasses ** 3)
    k = 1
    while True:
        l = k * exponent + 1
        if l > threshold and isprime(l):
            return l
        k += 1


def exact_value(o, mults):
    """Value sum_s mults[s] * zeta_o^s as JSON: int if rational, else terms.

    The mults are eigenvalue multiplicities, so the value is rational iff
    they are constant on the sets {s : gcd(s,o) = g}; then the primitive
    (o/g)-th roots in each set sum to the Moebius value mu(o/g).
    """
    buckets = {}
    for s in range(o):
        buckets.setdefault(gcd(s, o), []).append(s)
    if all(len({mults[s] for s in bucket}) == 1 for bucket in buckets.values()):
        total = 0
        for g, bucket in buckets.items():
            total += mults[bucket[0]] * int(mobius(o // g))
        return int(total)
    return {"n": o, "terms": [[s, str(mults[s])] for s in range(o) if mults[s]]}


def value_sort_key(v):
    if isinstance(v, int):
        return (0, v)
    return (1, v["n"], tuple((t[0], Fraction(t[1])) for t in v["terms"]))


def compute_character_table(name, ops, gens, expected_order, expected_classes=None):
    t0 = time.time()
    elems, index = enumerate_group(ops, gens, expected_order)
    order = elems.shape[0]
    if order != expected_order:
        raise RuntimeError("%s: got order %d, expected %d" % (name, order, expected_order))

    classes_raw, class_of_raw = conjugacy_classes(ops, gens, elems, index)
    orders_raw = [element_order(ops, elems[c[0]]) for c in classes_raw]
    sizes_raw = [len(c) for c in classes_raw]
    by = sorted(range(len(classes_raw)),
                key=lambda i: (orders_raw[i], sizes_raw[i], i))
    classes = [classes_raw[i] for i in by]
    orders = [orders_raw[i] for i in by]
    sizes = [sizes_raw[i] for i in by]
    rank = np.zeros(len(by), dtype=np.int64)
    for new, old in enumerate(by):
        rank[old] = new
    class_of = rank[class_of_raw]
    m = len(classes)
    if expected_classes is not None and m != expected_classes:
        raise RuntimeError("%s: got %d classes, expected %d" % (name, m, expected_classes))
    if sum(sizes) != order or any(order % s for s in sizes):
        raise RuntimeError("%s: class equation violated" % name)

    seen = Counter()
    names = []
    for o in orders:
        names.append("%d%s" % (o, chr(ord("a") + seen[o])))
        seen[o] += 1

    reps = [elems[c[0]] for c in classes]
    power_class = []
    for j in range(m):
        y = ops.identity()
        pc = []
        for _ in range(orders[j]):
            pc.append(int(class_of[index[ops.key(y)]]))
            y = ops.mul(y, reps[j])
        power_class.append(pc)
    inv_class = [power_class[j][orders[j] - 1] if orders[j] > 1 else 0 for j in range(m)]

    mats = class_matrices(ops, elems, index, classes, class_of, reps, inv_class)
    exponent = reduce(lambda a, b: a * b // gcd(a, b), orders, 1)
    l = choose_prime(exponent, order, m)
    w = primitive_root(l)
    vecs = split_eigenvectors(mats, l, m)

    inv_mod = lambda x: pow(int(x) % l, l - 2, l)
    degrees = []
    cvals = []
    for v in vecs:
        s = sum(int(v[j]) * int(v[inv_class[j]]) % l * inv_mod(sizes[j]) % l
                for j in range(m)) % l
        d2 = order % l * inv_mod(s) % l
        d = sqrt_mod(d2, l)
        if d is None:
            raise RuntimeError("%s: degree^2 has no square root mod %d" % (name, l))
        d = min(int(d), l - int(d))
        degrees.append(d)
        cvals.append([d * int(v[j]) % l * inv_mod(sizes[j]) % l for j in range(m)])
    if sum(d * d for d in degrees) != order:
        raise RuntimeError("%s: degree squares sum to %d, not %d"
                           % (name, sum(d * d for d in degrees), order))

    rows = []
    for t in range(m):
        row = []
        for j in range(m):
            o = orders[j]
            wo = pow(w, (l - 1) // o, l)
            inv_o = inv_mod(o)
            cu = [cvals[t][power_class[j][u]] for u in range(o)]
            mults = []
            for s in range(o):
                tot = sum(cu[u] * pow(wo, (-s * u) % o, l) for u in range(o))
                ms = tot % l * inv_o % l
                if ms > degrees[t]:
                    raise RuntimeError("%s: eigenvalue multiplicity %d exceeds degree %d"
                                       % (name, ms, degrees[t]))
                mults.append(ms)
            if sum(mults) != degrees[t]:
                raise RuntimeError("%s: multiplicities at class %s sum to %d != degree %d"
                                   % (name, names[j], sum(mults), degrees[t]))
            check = sum(mults[s] * pow(wo, s, l) for s in range(o)) % l
            if check != cvals[t][j]:
                raise RuntimeError("%s: DFT lift inconsistent at class %s" % (name, names[j]))
            row.append(exact_value(o, mults))
        rows.append(row)

    trivial = [t for t in range(m)
               if degrees[t] == 1 and all(v == 1 for v in rows[t])]
    if len(trivial) != 1:
        raise RuntimeError("%s: trivial character not unique" % name)
    rest = [t for t in range(m) if t != trivial[0]]
    rest.sort(key=lambda t: (degrees[t], tuple(value_sort_key(v) for v in rows[t])))
    row_order = trivial + rest
    rows = [rows[t] for t in row_order]
    degrees = [degrees[t] for t in row_order]
    if len({tuple(value_sort_key(v) for v in row) for row in rows}) != m:
        raise RuntimeError("%s: duplicate irreducible rows" % name)
    for j in range(m):
        if rows[0][j] != 1:
            raise RuntimeError("%s: trivial row not all ones" % name)
    for t in range(m):
        if rows[t][0] != degrees[t]:
            raise RuntimeError("%s: first column disagrees with degree" % name)

    doc = {
        "name": name,
        "order": order,
        "classes": [{"name": names[j], "size": sizes[j], "order": orders[j]}
                    for j in range(m)],
        "irreducibles": rows,
    }
    numeric_check(doc)
    sys.stderr.write("%s: order %d, %d classes, degrees %s, prime %d  (%.1fs)\n"
                     % (name, order, m, degrees, l, time.time() - t0))
    return {
        "doc": doc,
        "ops": ops,
        "elems": elems,
        "index": index,
        "classes": classes,
        "class_of": class_of,
        "reps": reps,
    }


def numeric_value(v):
    if isinstance(v, int):
        return mpmath.mpc(v)
    tau = 2 * mpmath.pi / v["n"]
    total = mpmath.mpc(0)
    for s, coeff in v["terms"]:
        f = Fraction(coeff)
        total += mpmath.mpf(f.numerator) / f.denominator * mpmath.exp(1j * tau * s)
    return total


def numeric_check(doc):
    mpmath.mp.dps = 50
    rows = doc["irreducibles"]
    classes = doc["classes"]
    order = doc["order"]
    m = len(classes)
    x = [[numeric_value(v) for v in row] for row in rows]
    tol = mpmath.mpf(10) ** -25
    for i in range(m):
        for k in range(i, m):
            s = sum(classes[j]["size"] * x[i][j] * mpmath.conj(x[k][j]) for j in range(m))
            if abs(s - (order if i == k else 0)) > tol:
                raise RuntimeError("%s: row orthogonality fails at (%d,%d)"
                                   % (doc["name"], i, k))
    for j in range(m):
        for jp in range(j, m):
            s = sum(x[i][j] * mpmath.conj(x[i][jp]) for i in range(m))
            target = mpmath.mpf(order) / classes[j]["size"] if j == jp else 0
            if abs(s - target) > tol:
                raise RuntimeError("%s: column orthogonality fails at (%s,%s)"
                                   % (doc["name"], classes[j]["name"], classes[jp]["name"]))


# ----------------------------------------------------------------------
# Group definitions.


def cycles_perm(npoints, cycles):
    a = np.arange(npoints, dtype=np.int64)
    for cyc in cycles:
        for i, pt in enumerate(cyc):
            a[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
    return a


def spin_cover_a8_gens():
    """Lift the A8 generators (1,2,3) and (2,...,8) to the double cover.

    Uses the spin representation over GF(17): eight pairwise anticommuting
    e_i with e_i^2 = -1 built from 2x2 Kronecker factors (4^2 = -1 and
    6^2 = 2 mod 17), and transposition lifts t_ab = (e_a - e_b)/sqrt(2).
    """
    p = 17
    i2 = np.eye(2, dtype=np.int64)
    sx = np.array([[0, 1], [1, 0]], dtype=np.int64)
    sy = np.array([[0, 13], [4, 0]], dtype=np.int64)
    sz = np.array([[1, 0], [0, 16]], dtype=np.int64)
    gammas = []
    for j in range(1, 5):
        pre, post = [sz] * (j - 1), [i2] * (4 - j)
        gammas.append(reduce(np.kron, pre + [sx] + post) % p)
        gammas.append(reduce(np.kron, pre + [sy] + post) % p)
    eye16 = np.eye(16, dtype=np.int64)
    for a, g in enumerate(gammas):
        assert ((g @ g) % p == eye16).all()
        for h in gammas[a + 1:]:
            assert ((g @ h + h @ g) % p == 0).all()
    es = [4 * g % p for g in gammas]

    def t_mat(a, b):
        return 3 * (es[a - 1] - es[b - 1]) % p

    for a in range(1, 9):
        for b in range(a + 1, 9):
            assert ((t_mat(a, b) @ t_mat(a, b)) % p == (16 * eye16) % p).all()

    ops = MatPermOps(p, 16, 8)
    gen1 = ops.pack((t_mat(1, 2) @ t_mat(2, 3)) % p,
                    cycles_perm(8, [(1, 2)])[cycles_perm(8, [(2, 3)])])
    chain_m = eye16
    chain_p = np.arange(8, dtype=np.int64)
    for a in range(2, 8):
        chain_m = (chain_m @ t_mat(a, a + 1)) % p
        chain_p = chain_p[cycles_perm(8, [(a, a + 1)])]
    gen2 = ops.pack(chain_m, chain_p)
    assert (ops.unpack(gen1)[1] == cycles_perm(8, [(1, 2, 3)])).all()
    assert (ops.unpack(gen2)[1] == cycles_perm(8, [(2, 3, 4, 5, 6, 7, 8)])).all()
    return ops, [gen1, gen2]


def j1_gens():
    y = np.zeros((7, 7), dtype=np.int64)
    for i in range(7):
        y[i][(i + 1) % 7] = 1
    z = np.array([
        [-3,  2, -1, -1, -3, -1, -3],
        [-2,  1,  1,  3,  1,  3,  3],
        [-1, -1, -3, -1, -3, -3,  2],
        [-1, -3, -1, -3, -3,  2, -1],
        [-3, -1, -3, -3,  2, -1, -1],
        [ 1,  3,  3, -2,  1,  1,  3],
        [ 3,  3, -2,  1,  1,  3,  1],
    ], dtype=np.int64) % 11
    return MatOps(11, 7), [y, z]


GROUPS = {
    "C2": lambda: (PermOps(2), [cycles_perm(2, [(1, 2)])], 2, 2),
    "C3": lambda: (PermOps(3), [cycles_perm(3, [(1, 2, 3)])], 3, 3),
    "S3": lambda: (PermOps(3), [cycles_perm(3, [(1, 2)]), cycles_perm(3, [(1, 2, 3)])], 6, 3),
    "D8": lambda: (PermOps(4), [cycles_perm(4, [(1, 2, 3, 4)]), cycles_perm(4, [(1, 3)])], 8, 5),
    "Q8": lambda: (MatOps(5, 2),
                   [np.array([[0, 4], [1, 0]], dtype=np.int64),
                    np.array([[0, 2], [2, 0]], dtype=np.int64)], 8, 5),
    "SL(2,3)": lambda: (MatOps(3, 2),
                        [np.array([[1, 1], [0, 1]], dtype=np.int64),
                         np.array([[0, 2], [1, 0]], dtype=np.int64)], 24, 7),
    "S4": lambda: (PermOps(4), [cycles_perm(4, [(1, 2)]), cycles_perm(4, [(1, 2, 3, 4)])], 24, 5),
    "A5": lambda: (PermOps(5), [cycles_perm(5, [(1, 2, 3)]), cycles_perm(5, [(1, 2, 3, 4, 5)])], 60, 5),
    "L2(7)": lambda: (PermOps(8),
                      [np.array([1, 2, 3, 4, 5, 6, 0, 7], dtype=np.int64),
                       np.array([7, 6, 3, 2, 5, 4, 1, 0], dtype=np.int64)], 168, 6),
    "A8": lambda: (PermOps(8), [cycles_perm(8, [(1, 2, 3)]),
                                cycles_perm(8, [(2, 3, 4, 5, 6, 7, 8)])], 20160, 14),
    "M12": lambda: (PermOps(12),
                    [cycles_perm(12, [(1, 4), (3, 10), (5, 11), (6, 12)]),
                     cycles_perm(12, [(1, 8, 9), (2, 3, 4), (5, 12, 11), (6, 10, 7)])],
                    95040, 15),
    "J1": lambda: (*j1_gens(), 175560, 15),
    "2.A8": lambda: (*spin_cover_a8_gens(), 40320, None),
}

ALL = ["C2", "C3", "S3", "D8", "Q8", "SL(2,3)", "S4", "A5", "L2(7)",
       "A8", "M12", "2.A8", "J1"]


def build_fusion(cover, base, cover_name, base_name):
    cover_ops = cover["ops"]
    base_ops = base["ops"]
    fibre = []
    for cls in cover["classes"]:
        rep = cover["elems"][cls[0]]
        perm = cover_ops.unpack(rep)[1]
        target = int(base["class_of"][base["index"][base_ops.key(perm)]])
        fibre.append(target)
    base_sizes = [c["size"] for c in base["doc"]["classes"]]
    cover_sizes = [c["size"] for c in cover["doc"]["classes"]]
    ratio = cover["doc"]["order"] // base["doc"]["order"]
    for f in range(len(base_sizes)):
        total = sum(cover_sizes[c] for c in range(len(fibre)) if fibre[c] == f)
        if total != ratio * base_sizes[f]:
            raise RuntimeError("fusion fibre over %s has size %d, expected %d"
                               % (base["doc"]["classes"][f]["name"], total,
                                  ratio * base_sizes[f]))
    return {"from": cover_name, "to": base_name, "map": fibre}


def main():
    wanted = sys.argv[1:] or ALL
    CORPUS_DIR.mkdir(parents=True, exist_ok=True)
    bundles = {}
    for name in wanted:
        ops, gens, expected_order, expected_classes = GROUPS[name]()
        bundles[name] = compute_character_table(name, ops, gens,
                                                expected_order, expected_classes)
        out = CORPUS_DIR / (name + ".json")
        with open(out, "w") as fh:
            json.dump(bundles[name]["doc"], fh, indent=1)
            fh.write("\n")
    if "2.A8" in bundles and "A8" in bundles:
        fusion = build_fusion(bundles["2.A8"], bundles["A8"], "2.A8", "A8")
        with open(CORPUS_DIR / "2.A8_to_A8.fusion.json", "w") as fh:
            json.dump(fusion, fh, indent=1)
            fh.write("\n")
        sys.stderr.write("fusion 2.A8 -> A8: %s\n" % fusion["map"])


if __name__ == "__main__":
    main()
