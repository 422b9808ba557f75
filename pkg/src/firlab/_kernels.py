"""Table-driven kernels for skew polynomials over small finite fields.

Field elements are integer indices into precomputed tables:

    add[a, b], mul[a, b], neg[a], inv[a]
    tpow[i, c, j]   coefficient of t^j in t^i * c
    sinv[d, a]      S^{-d}(a)

Polynomials are int64 coefficient arrays, lowest degree first.

Every kernel exists twice: a loop version compiled with numba and a
numpy version (vectorised over the batch axis for the batch kernels).
Set ``FIRLAB_DISABLE_NUMBA=1`` to force the numpy path.
"""
import os

import numpy as np

_FLAG = os.environ.get("FIRLAB_DISABLE_NUMBA", "").strip().lower()

try:
    if _FLAG in ("1", "true", "yes"):
        raise ImportError("numba disabled by FIRLAB_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda fn: fn


# ---------------------------------------------------------------------------
# loop kernels (compiled when numba is available)


def _mul_loops(a, b, add, mul, tpow):
    na = a.shape[0]
    nb = b.shape[0]
    out = np.zeros(na + nb - 1, dtype=np.int64)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for k in range(nb):
            bk = b[k]
            if bk == 0:
                continue
            for j in range(i + 1):
                c = tpow[i, bk, j]
                if c != 0:
                    out[j + k] = add[out[j + k], mul[ai, c]]
    return out


def _rdivmod_loops(f, g, add, mul, neg, inv, tpow):
    # f = q*g + r, g need not be monic
    n = f.shape[0] - 1
    d = g.shape[0] - 1
    r = f.copy()
    if n < d:
        return np.zeros(1, dtype=np.int64), r
    q = np.zeros(n - d + 1, dtype=np.int64)
    for m in range(n, d - 1, -1):
        top = r[m]
        if top == 0:
            continue
        k = m - d
        c = mul[top, inv[tpow[k, g[d], k]]]
        q[k] = c
        for gi in range(d + 1):
            gv = g[gi]
            if gv == 0:
                continue
            for j in range(k + 1):
                v = tpow[k, gv, j]
                if v != 0:
                    pos = j + gi
                    r[pos] = add[r[pos], neg[mul[c, v]]]
    return q, r


def _ldivmod_loops(f, g, add, mul, neg, inv, tpow, sinv):
    # f = g*q + r, needs S bijective (sinv table)
    n = f.shape[0] - 1
    d = g.shape[0] - 1
    r = f.copy()
    if n < d:
        return np.zeros(1, dtype=np.int64), r
    q = np.zeros(n - d + 1, dtype=np.int64)
    lginv = inv[g[d]]
    for m in range(n, d - 1, -1):
        top = r[m]
        if top == 0:
            continue
        k = m - d
        c = sinv[d, mul[lginv, top]]
        q[k] = c
        for gi in range(d + 1):
            gv = g[gi]
            if gv == 0:
                continue
            for j in range(gi + 1):
                v = tpow[gi, c, j]
                if v != 0:
                    pos = j + k
                    r[pos] = add[r[pos], neg[mul[gv, v]]]
    return q, r


def _batch_rrem_loops(F, G, add, mul, neg, tpow):
    # rows of G are monic of common degree d
    N = F.shape[0]
    n = F.shape[1] - 1
    d = G.shape[1] - 1
    out = np.zeros((N, d), dtype=np.int64)
    r = np.empty(n + 1, dtype=np.int64)
    for row in range(N):
        for i in range(n + 1):
            r[i] = F[row, i]
        for m in range(n, d - 1, -1):
            c = r[m]
            if c == 0:
                continue
            k = m - d
            for gi in range(d + 1):
                gv = G[row, gi]
                if gv == 0:
                    continue
                for j in range(k + 1):
                    v = tpow[k, gv, j]
                    if v != 0:
                        pos = j + gi
                        r[pos] = add[r[pos], neg[mul[c, v]]]
        for i in range(d):
            out[row, i] = r[i]
    return out


def _batch_lrem_loops(F, G, add, mul, neg, tpow, sinv):
    N = F.shape[0]
    n = F.shape[1] - 1
    d = G.shape[1] - 1
    out = np.zeros((N, d), dtype=np.int64)
    r = np.empty(n + 1, dtype=np.int64)
    for row in range(N):
        for i in range(n + 1):
            r[i] = F[row, i]
        for m in range(n, d - 1, -1):
            top = r[m]
            if top == 0:
                continue
            k = m - d
            c = sinv[d, top]
            for gi in range(d + 1):
                gv = G[row, gi]
                if gv == 0:
                    continue
                for j in range(gi + 1):
                    v = tpow[gi, c, j]
                    if v != 0:
                        pos = j + k
                        r[pos] = add[r[pos], neg[mul[gv, v]]]
        for i in range(d):
            out[row, i] = r[i]
    return out


def _rref_loops(M, p):
    A = M.copy() % p
    rows = A.shape[0]
    cols = A.shape[1]
    pivots = np.full(cols, -1, dtype=np.int64)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for i in range(rank, rows):
            if A[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = A[rank, j]
                A[rank, j] = A[piv, j]
                A[piv, j] = tmp
        # Fermat inverse, p is prime
        x = A[rank, col]
        e = p - 2
        iv = 1
        while e > 0:
            if e & 1:
                iv = (iv * x) % p
            x = (x * x) % p
            e >>= 1
        for j in range(cols):
            A[rank, j] = (A[rank, j] * iv) % p
        for i in range(rows):
            if i != rank and A[i, col] != 0:
                fct = A[i, col]
                for j in range(cols):
                    A[i, j] = (A[i, j] - fct * A[rank, j]) % p
        pivots[col] = rank
        rank += 1
    return A[:rank], pivots


# ---------------------------------------------------------------------------
# numpy fallbacks


def _mul_np(a, b, add, mul, tpow):
    return _mul_loops(a, b, add, mul, tpow)


def _rdivmod_np(f, g, add, mul, neg, inv, tpow):
    return _rdivmod_loops(f, g, add, mul, neg, inv, tpow)


def _ldivmod_np(f, g, add, mul, neg, inv, tpow, sinv):
    return _ldivmod_loops(f, g, add, mul, neg, inv, tpow, sinv)


def _batch_rrem_np(F, G, add, mul, neg, tpow):
    n = F.shape[1] - 1
    d = G.shape[1] - 1
    r = F.copy()
    for m in range(n, d - 1, -1):
        c = r[:, m]
        k = m - d
        T = tpow[k][G]  # (N, d+1, L)
        for gi in range(d + 1):
            for j in range(k + 1):
                pos = j + gi
                r[:, pos] = add[r[:, pos], neg[mul[c, T[:, gi, j]]]]
    return r[:, :d].copy()


def _batch_lrem_np(F, G, add, mul, neg, tpow, sinv):
    n = F.shape[1] - 1
    d = G.shape[1] - 1
    r = F.copy()
    for m in range(n, d - 1, -1):
        c = sinv[d][r[:, m]]
        k = m - d
        for gi in range(d + 1):
            gv = G[:, gi]
            T = tpow[gi][c]  # (N, L)
            for j in range(gi + 1):
                pos = j + k
                r[:, pos] = add[r[:, pos], neg[mul[gv, T[:, j]]]]
    return r[:, :d].copy()


def _rref_np(M, p):
    A = M.copy() % p
    rows, cols = A.shape
    pivots = np.full(cols, -1, dtype=np.int64)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        iv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = (A[rank] * iv) % p
        fct = A[:, col].copy()
        fct[rank] = 0
        A = (A - np.outer(fct, A[rank])) % p
        pivots[col] = rank
        rank += 1
    return A[:rank].copy(), pivots


# ---------------------------------------------------------------------------
# dispatch

NUMPY_KERNELS = {
    "mul": _mul_np,
    "rdivmod": _rdivmod_np,
    "ldivmod": _ldivmod_np,
    "batch_rrem": _batch_rrem_np,
    "batch_lrem": _batch_lrem_np,
    "rref": _rref_np,
}
# compiled when numba is present, plain Python loops otherwise
LOOP_KERNELS = {
    "mul": njit(cache=True)(_mul_loops),
    "rdivmod": njit(cache=True)(_rdivmod_loops),
    "ldivmod": njit(cache=True)(_ldivmod_loops),
    "batch_rrem": njit(cache=True)(_batch_rrem_loops),
    "batch_lrem": njit(cache=True)(_batch_lrem_loops),
    "rref": njit(cache=True)(_rref_loops),
}
_ACTIVE = LOOP_KERNELS if HAVE_NUMBA else NUMPY_KERNELS

mul_kernel = _ACTIVE["mul"]
rdivmod_kernel = _ACTIVE["rdivmod"]
ldivmod_kernel = _ACTIVE["ldivmod"]
batch_rrem_kernel = _ACTIVE["batch_rrem"]
batch_lrem_kernel = _ACTIVE["batch_lrem"]
rref_kernel = _ACTIVE["rref"]


def backend_name():
    return "numba" if HAVE_NUMBA else "numpy"
