"""Numba kernels for GF(2^m) arithmetic on int64 arrays.

Every kernel takes the field as ``(mod, m)``: the modulus bit pattern with
the degree-m bit set, and the extension degree.  Polynomials are int64
coefficient arrays, lowest degree first, trimmed (empty array = zero).
"""

import numpy as np
from numba import njit

_I64 = np.int64


@njit(cache=True, inline="always")
def gf_mul(x, y, mod, m):
    r = 0
    top = 1 << m
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & top:
            x ^= mod
    return r


@njit(cache=True)
def gf_inv(x, mod, m):
    # x^(q-2) by square-and-multiply
    e = (1 << m) - 2
    r = 1
    b = x
    while e:
        if e & 1:
            r = gf_mul(r, b, mod, m)
        b = gf_mul(b, b, mod, m)
        e >>= 1
    return r


@njit(cache=True)
def matmul(A, B, mod, m):
    n, k = A.shape
    p = B.shape[1]
    C = np.zeros((n, p), dtype=_I64)
    for i in range(n):
        for t in range(k):
            a = A[i, t]
            if a == 0:
                continue
            for j in range(p):
                b = B[t, j]
                if b != 0:
                    C[i, j] ^= gf_mul(a, b, mod, m)
    return C


@njit(cache=True)
def mat_scale(s, M, mod, m):
    out = np.empty_like(M)
    for i in range(M.shape[0]):
        for j in range(M.shape[1]):
            out[i, j] = gf_mul(s, M[i, j], mod, m)
    return out


@njit(cache=True)
def rref(M, mod, m):
    R = M.copy()
    rows, cols = R.shape
    piv = np.empty(min(rows, cols), dtype=_I64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for j in range(cols):
                tmp = R[r, j]
                R[r, j] = R[p, j]
                R[p, j] = tmp
        inv = gf_inv(R[r, c], mod, m)
        for j in range(c, cols):
            R[r, j] = gf_mul(inv, R[r, j], mod, m)
        for i in range(rows):
            f = R[i, c]
            if i != r and f != 0:
                for j in range(c, cols):
                    if R[r, j] != 0:
                        R[i, j] ^= gf_mul(f, R[r, j], mod, m)
        piv[r] = c
        r += 1
    return R, piv[:r].copy()


@njit(cache=True)
def local_minpoly(A, v, mod, m):
    """Monic generator of {f : f(A) v = 0}, from the Krylov sequence of v."""
    n = v.shape[0]
    R = np.zeros((n + 1, n), dtype=_I64)
    C = np.zeros((n + 1, n + 1), dtype=_I64)
    piv = np.zeros(n + 1, dtype=_I64)
    w = v.copy()
    for k in range(n + 1):
        r = w.copy()
        c = np.zeros(n + 1, dtype=_I64)
        c[k] = 1
        for i in range(k):
            f = r[piv[i]]
            if f != 0:
                for j in range(n):
                    if R[i, j] != 0:
                        r[j] ^= gf_mul(f, R[i, j], mod, m)
                for j in range(k):
                    if C[i, j] != 0:
                        c[j] ^= gf_mul(f, C[i, j], mod, m)
        p = -1
        for j in range(n):
            if r[j] != 0:
                p = j
                break
        if p < 0:
            return c[: k + 1].copy()
        inv = gf_inv(r[p], mod, m)
        for j in range(n):
            R[k, j] = gf_mul(inv, r[j], mod, m)
        for j in range(k + 1):
            C[k, j] = gf_mul(inv, c[j], mod, m)
        piv[k] = p
        nw = np.zeros(n, dtype=_I64)
        for i in range(n):
            acc = 0
            for j in range(n):
                if A[i, j] != 0 and w[j] != 0:
                    acc ^= gf_mul(A[i, j], w[j], mod, m)
            nw[i] = acc
        w = nw
    return c  # unreachable: n + 1 Krylov vectors are always dependent


@njit(cache=True)
def _trim(f):
    d = f.shape[0]
    while d > 0 and f[d - 1] == 0:
        d -= 1
    return f[:d].copy()


@njit(cache=True)
def poly_mul(f, g, mod, m):
    if f.shape[0] == 0 or g.shape[0] == 0:
        return np.zeros(0, dtype=_I64)
    out = np.zeros(f.shape[0] + g.shape[0] - 1, dtype=_I64)
    for i in range(f.shape[0]):
        if f[i] == 0:
            continue
        for j in range(g.shape[0]):
            if g[j] != 0:
                out[i + j] ^= gf_mul(f[i], g[j], mod, m)
    return _trim(out)


@njit(cache=True)
def poly_divrem(f, g, mod, m):
    dg = g.shape[0] - 1
    r = f.copy()
    if r.shape[0] - 1 < dg:
        return np.zeros(0, dtype=_I64), _trim(r)
    qt = np.zeros(r.shape[0] - dg, dtype=_I64)
    inv = gf_inv(g[dg], mod, m)
    for k in range(r.shape[0] - 1, dg - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = gf_mul(c, inv, mod, m)
        qt[k - dg] = c
        for j in range(dg + 1):
            if g[j] != 0:
                r[k - dg + j] ^= gf_mul(c, g[j], mod, m)
    return _trim(qt), _trim(r[:dg].copy())


@njit(cache=True)
def poly_eval_all(f, mod, m):
    q = 1 << m
    out = np.zeros(q, dtype=_I64)
    for x in range(q):
        acc = 0
        for i in range(f.shape[0] - 1, -1, -1):
            acc = gf_mul(acc, x, mod, m) ^ f[i]
        out[x] = acc
    return out


@njit(cache=True)
def poly_frobenius_x(f, mod, m):
    """x^(2^m) mod f, for nonconstant f."""
    d = f.shape[0] - 1
    cur = np.zeros(d, dtype=_I64)
    if d == 1:
        # x mod (f1 x + f0) = f0 / f1
        cur[0] = gf_mul(f[0], gf_inv(f[1], mod, m), mod, m)
    else:
        cur[1] = 1
    inv = gf_inv(f[d], mod, m)
    for _ in range(m):
        sq = np.zeros(2 * d, dtype=_I64)
        for i in range(d):
            sq[2 * i] = gf_mul(cur[i], cur[i], mod, m)
        for k in range(2 * d - 1, d - 1, -1):
            c = sq[k]
            if c == 0:
                continue
            c = gf_mul(c, inv, mod, m)
            for j in range(d + 1):
                if f[j] != 0:
                    sq[k - d + j] ^= gf_mul(c, f[j], mod, m)
        cur = sq[:d].copy()
    return _trim(cur)


@njit(cache=True)
def poly_apply(A, f, v, mod, m):
    """f(A) v by Horner's rule."""
    n = v.shape[0]
    acc = np.zeros(n, dtype=_I64)
    for k in range(f.shape[0] - 1, -1, -1):
        nxt = np.zeros(n, dtype=_I64)
        for i in range(n):
            s = 0
            for j in range(n):
                if A[i, j] != 0 and acc[j] != 0:
                    s ^= gf_mul(A[i, j], acc[j], mod, m)
            nxt[i] = s
        c = f[k]
        if c != 0:
            for i in range(n):
                if v[i] != 0:
                    nxt[i] ^= gf_mul(c, v[i], mod, m)
        acc = nxt
    return acc


@njit(cache=True)
def hessenberg_charpoly(A, mod, m):
    """Characteristic polynomial via similarity to upper Hessenberg form."""
    n = A.shape[0]
    H = A.copy()
    for j in range(n - 2):
        p = -1
        for i in range(j + 1, n):
            if H[i, j] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != j + 1:
            for t in range(n):
                tmp = H[p, t]
                H[p, t] = H[j + 1, t]
                H[j + 1, t] = tmp
            for t in range(n):
                tmp = H[t, p]
                H[t, p] = H[t, j + 1]
                H[t, j + 1] = tmp
        inv = gf_inv(H[j + 1, j], mod, m)
        for r in range(j + 2, n):
            if H[r, j] == 0:
                continue
            f = gf_mul(H[r, j], inv, mod, m)
            for t in range(n):
                H[r, t] ^= gf_mul(f, H[j + 1, t], mod, m)
            for t in range(n):
                H[t, j + 1] ^= gf_mul(f, H[t, r], mod, m)
    # p_k = (x + h_kk) p_{k-1} + sum_i h_{k-i,k} (prod sub-diagonal) p_{k-i-1}
    P = np.zeros((n + 1, n + 1), dtype=_I64)
    P[0, 0] = 1
    for k in range(1, n + 1):
        hkk = H[k - 1, k - 1]
        for t in range(k):
            P[k, t + 1] ^= P[k - 1, t]
            P[k, t] ^= gf_mul(hkk, P[k - 1, t], mod, m)
        prod = 1
        for i in range(1, k):
            prod = gf_mul(prod, H[k - i, k - i - 1], mod, m)
            if prod == 0:
                break
            c = gf_mul(H[k - i - 1, k - 1], prod, mod, m)
            if c == 0:
                continue
            for t in range(k - i):
                P[k, t] ^= gf_mul(c, P[k - i - 1, t], mod, m)
    return P[n].copy()


@njit(cache=True)
def _f2_mul_rows(X, Y, n):
    # X, Y: row bitmasks, bit j of row i = entry (i, j)
    Z = np.zeros(n, dtype=_I64)
    for i in range(n):
        acc = 0
        row = X[i]
        for t in range(n):
            if (row >> t) & 1:
                acc ^= Y[t]
        Z[i] = acc
    return Z


@njit(cache=True)
def _f2_decode(idx, n):
    # first entry (0, 0) is the most significant bit of idx
    rows = np.zeros(n, dtype=_I64)
    nn = n * n
    for t in range(nn):
        if (idx >> (nn - 1 - t)) & 1:
            rows[t // n] |= 1 << (t % n)
    return rows


@njit(cache=True)
def f2_search(A_rows, n, potency, nil_max, start, stop):
    """First E index in [start, stop) with E^potency = E and (A+E)^nil_max = 0."""
    for idx in range(start, stop):
        E = _f2_decode(idx, n)
        P = E.copy()
        for _ in range(potency - 1):
            P = _f2_mul_rows(P, E, n)
        same = True
        for i in range(n):
            if P[i] != E[i]:
                same = False
                break
        if not same:
            continue
        N = np.empty(n, dtype=_I64)
        for i in range(n):
            N[i] = A_rows[i] ^ E[i]
        Q = N.copy()
        for _ in range(nil_max - 1):
            Q = _f2_mul_rows(Q, N, n)
        zero = True
        for i in range(n):
            if Q[i] != 0:
                zero = False
                break
        if zero:
            return idx
    return -1


@njit(cache=True)
def square_zero_scan(n, mod, m, start, stop):
    """Indices in [start, stop) whose decoded n x n matrix squares to zero."""
    q = 1 << m
    nn = n * n
    hits = np.empty(stop - start, dtype=_I64)
    count = 0
    N = np.zeros((n, n), dtype=_I64)
    for idx in range(start, stop):
        rest = idx
        for t in range(nn - 1, -1, -1):
            N[t // n, t % n] = rest % q
            rest //= q
        ok = True
        for i in range(n):
            for j in range(n):
                acc = 0
                for t in range(n):
                    if N[i, t] != 0 and N[t, j] != 0:
                        acc ^= gf_mul(N[i, t], N[t, j], mod, m)
                if acc != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            hits[count] = idx
            count += 1
    return hits[:count].copy()
