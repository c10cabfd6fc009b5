"""Pure-numpy versions of the kernels in ``_jit``.

Same signatures and results; field multiplication is vectorised over whole
arrays with a shift-and-xor loop over the m bits of the multiplier.
"""

import numpy as np

_I64 = np.int64


def vmul(x, y, mod, m):
    x, y = np.broadcast_arrays(np.asarray(x, dtype=_I64), np.asarray(y, dtype=_I64))
    x = x.copy()
    r = np.zeros(x.shape, dtype=_I64)
    top = 1 << m
    for bit in range(m):
        r ^= np.where((y >> bit) & 1, x, 0)
        x <<= 1
        x ^= np.where(x & top, mod, 0)
    return r


def gf_mul(x, y, mod, m):
    return int(vmul(x, y, mod, m))


def gf_inv(x, mod, m):
    e = (1 << m) - 2
    r, b = 1, int(x)
    while e:
        if e & 1:
            r = gf_mul(r, b, mod, m)
        b = gf_mul(b, b, mod, m)
        e >>= 1
    return r


def matmul(A, B, mod, m):
    prod = vmul(A[:, :, None], B[None, :, :], mod, m)
    if prod.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=_I64)
    return np.bitwise_xor.reduce(prod, axis=1)


def mat_scale(s, M, mod, m):
    return vmul(s, M, mod, m)


def rref(M, mod, m):
    R = np.array(M, dtype=_I64, copy=True)
    rows, cols = R.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = vmul(gf_inv(R[r, c], mod, m), R[r], mod, m)
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            R[others] ^= vmul(R[others, c][:, None], R[r][None, :], mod, m)
        piv.append(c)
        r += 1
    return R, np.array(piv, dtype=_I64)


def local_minpoly(A, v, mod, m):
    n = v.shape[0]
    R = np.zeros((n + 1, n), dtype=_I64)
    C = np.zeros((n + 1, n + 1), dtype=_I64)
    piv = []
    w = np.array(v, dtype=_I64)
    for k in range(n + 1):
        r = w.copy()
        c = np.zeros(n + 1, dtype=_I64)
        c[k] = 1
        for i, p in enumerate(piv):
            f = r[p]
            if f:
                r ^= vmul(f, R[i], mod, m)
                c ^= vmul(f, C[i], mod, m)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return c[: k + 1].copy()
        inv = gf_inv(r[nz[0]], mod, m)
        R[k] = vmul(inv, r, mod, m)
        C[k] = vmul(inv, c, mod, m)
        piv.append(nz[0])
        w = matmul(A, w[:, None], mod, m)[:, 0]
    raise AssertionError("Krylov sequence did not terminate")


def _trim(f):
    nz = np.nonzero(f)[0]
    return f[: nz[-1] + 1].copy() if nz.size else np.zeros(0, dtype=_I64)


def poly_mul(f, g, mod, m):
    if f.shape[0] == 0 or g.shape[0] == 0:
        return np.zeros(0, dtype=_I64)
    prod = vmul(f[:, None], g[None, :], mod, m)
    out = np.zeros(f.shape[0] + g.shape[0] - 1, dtype=_I64)
    for i in range(f.shape[0]):
        out[i : i + g.shape[0]] ^= prod[i]
    return _trim(out)


def poly_divrem(f, g, mod, m):
    dg = g.shape[0] - 1
    r = np.array(f, dtype=_I64, copy=True)
    if r.shape[0] - 1 < dg:
        return np.zeros(0, dtype=_I64), _trim(r)
    qt = np.zeros(r.shape[0] - dg, dtype=_I64)
    inv = gf_inv(g[dg], mod, m)
    for k in range(r.shape[0] - 1, dg - 1, -1):
        if r[k] == 0:
            continue
        c = gf_mul(r[k], inv, mod, m)
        qt[k - dg] = c
        r[k - dg : k + 1] ^= vmul(c, g, mod, m)
    return _trim(qt), _trim(r[:dg].copy())


def poly_eval_all(f, mod, m):
    xs = np.arange(1 << m, dtype=_I64)
    acc = np.zeros_like(xs)
    for c in f[::-1]:
        acc = vmul(acc, xs, mod, m) ^ c
    return acc


def poly_frobenius_x(f, mod, m):
    d = f.shape[0] - 1
    cur = np.zeros(d, dtype=_I64)
    if d == 1:
        cur[0] = gf_mul(f[0], gf_inv(f[1], mod, m), mod, m)
    else:
        cur[1] = 1
    for _ in range(m):
        sq = np.zeros(2 * d, dtype=_I64)
        sq[0::2] = vmul(cur, cur, mod, m)
        _, cur = poly_divrem(sq, f, mod, m)
        cur = np.concatenate([cur, np.zeros(d - cur.shape[0], dtype=_I64)])
    return _trim(cur)


def poly_apply(A, f, v, mod, m):
    acc = np.zeros(v.shape[0], dtype=_I64)
    for c in f[::-1]:
        acc = matmul(A, acc[:, None], mod, m)[:, 0] ^ vmul(c, v, mod, m)
    return acc


def hessenberg_charpoly(A, mod, m):
    n = A.shape[0]
    H = np.array(A, dtype=_I64, copy=True)
    for j in range(n - 2):
        nz = np.nonzero(H[j + 1 :, j])[0]
        if nz.size == 0:
            continue
        p = j + 1 + nz[0]
        if p != j + 1:
            H[[p, j + 1]] = H[[j + 1, p]]
            H[:, [p, j + 1]] = H[:, [j + 1, p]]
        inv = gf_inv(H[j + 1, j], mod, m)
        for r in range(j + 2, n):
            if H[r, j] == 0:
                continue
            f = gf_mul(H[r, j], inv, mod, m)
            H[r] ^= vmul(f, H[j + 1], mod, m)
            H[:, j + 1] ^= vmul(f, H[:, r], mod, m)
    P = np.zeros((n + 1, n + 1), dtype=_I64)
    P[0, 0] = 1
    for k in range(1, n + 1):
        P[k, 1 : k + 1] ^= P[k - 1, :k]
        P[k, :k] ^= vmul(H[k - 1, k - 1], P[k - 1, :k], mod, m)
        prod = 1
        for i in range(1, k):
            prod = gf_mul(prod, H[k - i, k - i - 1], mod, m)
            if prod == 0:
                break
            c = gf_mul(H[k - i - 1, k - 1], prod, mod, m)
            if c:
                P[k, : k - i] ^= vmul(c, P[k - i - 1, : k - i], mod, m)
    return P[n].copy()


def _decode(idx, n, q):
    # row-major entries, entry (0, 0) most significant digit
    nn = n * n
    digits = np.empty((idx.shape[0], nn), dtype=_I64)
    rest = idx.copy()
    for t in range(nn - 1, -1, -1):
        digits[:, t] = rest % q
        rest //= q
    return digits.reshape(-1, n, n)


def _f2_matmul(X, Y):
    return (X @ Y) & 1


def f2_search(A_rows, n, potency, nil_max, start, stop):
    A = np.array([[(int(A_rows[i]) >> j) & 1 for j in range(n)] for i in range(n)], dtype=_I64)
    chunk = 1 << 14
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=_I64)
        E = _decode(idx, n, 2)
        P = E.copy()
        for _ in range(potency - 1):
            P = _f2_matmul(P, E)
        N = E ^ A
        Q = N.copy()
        for _ in range(nil_max - 1):
            Q = _f2_matmul(Q, N)
        ok = np.all(P == E, axis=(1, 2)) & np.all(Q == 0, axis=(1, 2))
        hit = np.nonzero(ok)[0]
        if hit.size:
            return int(idx[hit[0]])
    return -1


def square_zero_scan(n, mod, m, start, stop):
    q = 1 << m
    out = []
    chunk = 1 << 12
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=_I64)
        N = _decode(idx, n, q)
        prod = vmul(N[:, :, :, None], N[:, None, :, :], mod, m)
        sq = np.bitwise_xor.reduce(prod, axis=2)
        out.append(idx[np.all(sq == 0, axis=(1, 2))])
    return np.concatenate(out) if out else np.zeros(0, dtype=_I64)
