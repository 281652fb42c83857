"""Independent brute-force oracle for frozen test values.

Builds groups from permutations, twisted group algebras over prime fields as
dense structure tensors, and computes Lie series dimensions by plain Gaussian
elimination mod p.  Shares no code with the C++ implementation.

Run: python3 tests/oracles/algebra_oracle.py
"""
import itertools


def perm_group(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(n))
                if y not in elems:
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    idx = {e: i for i, e in enumerate(elems)}
    mul = [[idx[tuple(a[b[i]] for i in range(n))] for b in elems] for a in elems]
    return mul


def rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][c] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank, rows[:rank]


class Alg:
    def __init__(self, mul, lam, p):
        self.mul, self.lam, self.p, self.n = mul, lam, p, len(mul)

    def prod(self, x, y):
        z = [0] * self.n
        for g, a in enumerate(x):
            if a:
                for h, b in enumerate(y):
                    if b:
                        k = self.mul[g][h]
                        z[k] = (z[k] + a * b * self.lam[g][h]) % self.p
        return z

    def br(self, x, y):
        a, b = self.prod(x, y), self.prod(y, x)
        return [(u - v) % self.p for u, v in zip(a, b)]

    def basis(self):
        return [[1 if i == j else 0 for i in range(self.n)] for j in range(self.n)]


def span_basis(vecs, p):
    if not vecs:
        return []
    _, b = rank_mod_p(vecs, p)
    return b


def series(A, kind, steps):
    B = A.basis()
    dims = [A.n]
    gamma = B
    upper = B
    for _ in range(steps):
        if kind == "gamma":
            gamma = span_basis([A.br(u, b) for u in gamma for b in B], A.p)
            dims.append(len(gamma))
            cur = gamma
        elif kind == "lower":
            gamma = span_basis([A.br(u, b) for u in gamma for b in B], A.p)
            cur = span_basis([A.prod(u, b) for u in gamma for b in B], A.p)
            dims.append(len(cur))
        else:
            c = span_basis([A.br(u, b) for u in upper for b in B], A.p)
            upper = span_basis([A.prod(u, b) for u in c for b in B], A.p)
            cur = upper
            dims.append(len(cur))
        if len(cur) == 0 or dims[-1] == dims[-2]:
            break
    return dims


def conj_classes(mul):
    n = len(mul)
    inv = [next(j for j in range(n) if mul[i][j] == 0) for i in range(n)]
    seen, cnt = set(), 0
    for x in range(n):
        if x in seen:
            continue
        cnt += 1
        for g in range(n):
            seen.add(mul[mul[inv[g]][x]][g])
    return cnt


def trivial(n):
    return [[1] * n for _ in range(n)]


def engel_counterexample(A, nmax):
    """Brute-force scan of all pairs; returns True iff some pair violates (n,1)-Engel."""
    vecs = list(itertools.product(range(A.p), repeat=A.n))
    for b in vecs:
        for a in vecs:
            x = list(a)
            for _ in range(nmax):
                x = A.br(x, list(b))
            if any(x):
                return True
    return False


def main():
    # D8 as symmetries of a square: r = (0 1 2 3), s = reflection.
    d8 = perm_group([(1, 2, 3, 0), (0, 3, 2, 1)])
    s3 = perm_group([(1, 2, 0), (1, 0, 2)])
    print("D8 order", len(d8), "conjugacy classes", conj_classes(d8))
    print("S3 order", len(s3), "conjugacy classes", conj_classes(s3))

    A = Alg(d8, trivial(8), 2)
    for kind in ("gamma", "lower", "upper"):
        print("F2[D8]", kind, series(A, kind, 12))

    A = Alg(s3, trivial(6), 3)
    for kind in ("gamma", "lower", "upper"):
        print("F3[S3]", kind, series(A, kind, 12))
    A = Alg(s3, trivial(6), 2)
    for kind in ("gamma", "lower", "upper"):
        print("F2[S3]", kind, series(A, kind, 12))

    # Klein four {1,a,b,c} with quaternion signs over GF(3).
    v4 = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    m = 2
    lam = [[1, 1, 1, 1],
           [1, m, 1, m],
           [1, m, m, 1],
           [1, 1, m, m]]
    Q = Alg(v4, lam, 3)
    for kind in ("gamma", "lower", "upper"):
        print("F3^q[V4]", kind, series(Q, kind, 12))
    print("F3^q[V4] not (8,1)-Engel:", engel_counterexample(Q, 8))
    # exhaustive search for d with d_g d_h / d_gh = lam(g,h)
    found = False
    for d in itertools.product([1, 2], repeat=4):
        if all((d[g] * d[h] * pow(d[v4[g][h]], 1, 3)) % 3 == lam[g][h] for g in range(4) for h in range(4)):
            found = True
    print("F3^q[V4] coboundary exists:", found)

    # normalized cocycles on V4 over GF(3) by brute force, and classes
    cocycles = []
    nonid = [1, 2, 3]
    for vals in itertools.product([1, 2], repeat=9):
        L = [[1] * 4 for _ in range(4)]
        for k, (g, h) in enumerate(itertools.product(nonid, nonid)):
            L[g][h] = vals[k]
        ok = all((L[a][v4[b][c]] * L[b][c]) % 3 == (L[v4[a][b]][c] * L[a][b]) % 3
                 for a in range(4) for b in range(4) for c in range(4))
        if ok:
            cocycles.append(L)
    cobs = set()
    for d in itertools.product([1, 2], repeat=4):
        cobs.add(tuple((d[g] * d[h] * d[v4[g][h]]) % 3 for g in range(4) for h in range(4)))
    normcobs = {c for c in cobs if all(c[i] == 1 for i in range(4)) and all(c[4 * i] == 1 for i in range(4))}
    print("V4/GF(3) normalized cocycles", len(cocycles), "normalized coboundaries", len(normcobs),
          "classes", len(cocycles) // len(normcobs))

    # C2 over GF(3)
    c2 = [[0, 1], [1, 0]]
    cnt = 0
    for v in (1, 2):
        L = [[1, 1], [1, v]]
        if all((L[a][c2[b][c]] * L[b][c]) % 3 == (L[c2[a][b]][c] * L[a][b]) % 3
               for a in range(2) for b in range(2) for c in range(2)):
            cnt += 1
    print("C2/GF(3) normalized cocycles", cnt)

    # Cohomology class counts |Z^2| / |B^2| for normalized cocycles with
    # values in the cyclic group F^* of prime order m (GF(3): m = 2, GF(4): m = 3).
    cyc = lambda k: [[(i + j) % k for j in range(k)] for i in range(k)]
    groups = {"C%d" % k: cyc(k) for k in range(1, 9)}
    groups["V4"] = v4
    groups["D6"] = s3
    groups["D8"] = d8
    groups["Q8"] = perm_group([(1, 2, 3, 0, 5, 6, 7, 4), (4, 7, 6, 5, 2, 1, 0, 3)])
    groups["C2xC4"] = direct(cyc(2), cyc(4))
    groups["C2xC2xC2"] = direct(cyc(2), v4)
    for name, mul in groups.items():
        counts = [class_count(mul, m) for m in (2, 3)]
        print("classes", name, "GF(3):", counts[0], "GF(4):", counts[1])


def direct(a, b):
    na, nb = len(a), len(b)
    return [[a[x // nb][y // nb] * nb + b[x % nb][y % nb] for y in range(na * nb)] for x in range(na * nb)]


def class_count(mul, m):
    n = len(mul)
    k = n - 1
    if k == 0:
        return 1
    var = lambda a, b: (a - 1) * k + (b - 1)
    rows = []
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                row = [0] * (k * k)
                for (x, y, s) in ((a, mul[b][c], 1), (b, c, 1), (mul[a][b], c, -1), (a, b, -1)):
                    if x and y:
                        row[var(x, y)] += s
                rows.append([v % m for v in row])
    rank, _ = rank_mod_p(rows, m)
    cocycles = m ** (k * k - rank)
    cobs = set()
    for d in itertools.product(range(m), repeat=k):
        dd = (0,) + d
        cobs.add(tuple((dd[g] + dd[h] - dd[mul[g][h]]) % m for g in range(1, n) for h in range(1, n)))
    return cocycles // len(cobs)


if __name__ == "__main__":
    main()
