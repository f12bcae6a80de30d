"""Independent rank histograms for small codes over F_3.

Builds F_{3^n} from its own primitive modulus, forms the F_3 operator matrix of
every generator and ranks all F_3-combinations with batched elimination.
Usage: python3 rank_histograms.py
"""
import itertools
import numpy as np

P = 3


class Field:
    def __init__(self, n):
        self.n = n
        self.Q = P ** n
        for v in range(P ** n):
            f = [(v // P ** i) % P for i in range(n)] + [1]
            if f[0] == 0:
                continue
            exp, x, seen = [], 1, set()
            ok = True
            for _ in range(self.Q - 1):
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                exp.append(x)
                x = self._mul_x(x, f)
            if ok and x == 1 and len(seen) == self.Q - 1:
                self.f, self.exp = f, exp
                break
        self.log = {e: i for i, e in enumerate(self.exp)}

    def digits(self, a):
        return [(a // P ** i) % P for i in range(self.n)]

    def pack(self, d):
        return sum(c * P ** i for i, c in enumerate(d))

    def _mul_x(self, a, f):
        d = [0] + self.digits(a)
        top = d[self.n]
        return self.pack([(d[i] - top * f[i]) % P for i in range(self.n)])

    def add(self, a, b):
        return self.pack([(x + y) % P for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.Q - 1)]

    def pw(self, a, e):
        if a == 0:
            return 0
        return self.exp[(self.log[a] * e) % (self.Q - 1)]


def operator_matrix(F, coeffs):
    n = F.n
    m = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        x = P ** c
        y = 0
        for i, a in enumerate(coeffs):
            y = F.add(y, F.mul(a, F.pw(x, P ** i)))
        m[:, c] = F.digits(y)
    return m


def batch_rank(mats):
    a = mats.copy() % P
    count, rows, cols = a.shape
    rank = np.zeros(count, dtype=np.int64)
    inv = np.array([0, 1, 2])
    for c in range(cols):
        r_idx = rank.copy()
        cand = np.full(count, -1)
        for r in range(rows - 1, -1, -1):
            hit = (a[:, r, c] != 0) & (r >= r_idx)
            cand = np.where(hit, r, cand)
        has = cand >= 0
        idx = np.nonzero(has)[0]
        if idx.size == 0:
            continue
        pr = cand[idx]
        tr = r_idx[idx]
        prow = a[idx, pr, :].copy()
        trow = a[idx, tr, :].copy()
        a[idx, tr, :] = prow
        a[idx, pr, :] = trow
        pivot = a[idx, tr, c]
        a[idx, tr, :] = (a[idx, tr, :] * inv[pivot][:, None]) % P
        for r in range(rows):
            f = a[idx, r, c].copy()
            f[r == tr] = 0
            a[idx, r, :] = (a[idx, r, :] - f[:, None] * a[idx, tr, :]) % P
        rank[idx] += 1
    return rank


def histogram(F, gens):
    mats = np.array([operator_matrix(F, g) for g in gens])
    L = len(gens)
    combos = np.array(list(itertools.product(range(P), repeat=L))[1:], dtype=np.int64)
    out = {}
    for start in range(0, len(combos), 50000):
        block = combos[start:start + 50000]
        ms = np.tensordot(block, mats, axes=(1, 0)) % P
        for r, c in zip(*np.unique(batch_rank(ms), return_counts=True)):
            out[int(r)] = out.get(int(r), 0) + int(c)
    return dict(sorted(out.items()))


def t_gens(F, s, eta):
    n, k = F.n, F.n // 2
    w = F.exp[1]
    g = F.pw(w, (F.Q - 1) // (P ** k - 1))

    def poly(b0, b1, b2):
        c = [0] * n
        eb = F.mul(eta, b2)
        c[(s * k) % n] = b0
        c[(s * (k - 1)) % n] = b1
        c[(s * (k + 1)) % n] = F.pw(b1, P ** ((s * (k + 1)) % n))
        c[(s * (k - 2)) % n] = eb
        c[(s * (k + 2)) % n] = F.pw(eb, P ** ((s * (k + 2)) % n))
        return c

    gens = [poly(F.pw(g, j), 0, 0) for j in range(k)]
    gens += [poly(0, F.pw(w, j), 0) for j in range(n)]
    gens += [poly(0, 0, F.pw(g, j)) for j in range(k)]
    return gens


def s_gens(F, d, s):
    n = F.n
    w = F.exp[1]
    gens = []
    for i in range((n - d) // 2 + 1):
        for j in range(n):
            c = [0] * n
            b = F.pw(w, j)
            if i == 0:
                c[0] = b
            else:
                pos = (s * i) % n
                c[pos] = b
                c[n - pos] = F.pw(b, P ** (n - pos))
            gens.append(c)
    return gens


if __name__ == "__main__":
    F = Field(6)
    w = F.exp[1]
    print("T_{6,1,w}", histogram(F, t_gens(F, 1, w)))
    print("S_{6,4,1}", histogram(F, s_gens(F, 4, 1)))
    print("S_{6,6,1}", histogram(F, s_gens(F, 6, 1)))
