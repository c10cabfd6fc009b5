"""Companion matrices, minimal/characteristic polynomials and the rational
canonical form with an explicit change of basis."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .matrix import Mat, MatrixError, m_direct_sum, m_hstack, m_inv, m_mul, m_solve, matvec, nullspace
from .poly import Poly, p_divides, p_divrem, p_gcd, p_lcm, p_mul


class NotCyclicError(MatrixError):
    def __init__(self):
        super().__init__("not cyclic")


def companion_of(f: Poly) -> Mat:
    """Ones on the subdiagonal, (u_0, ..., u_{n-1}) in the last column."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    n = f.degree
    C = np.zeros((n, n), dtype=np.int64)
    C[np.arange(1, n), np.arange(n - 1)] = 1
    C[:, n - 1] = f.coeffs[:n]
    return Mat._wrap(C, f.field)


def is_companion(A: Mat) -> bool:
    n = A.n
    expected = np.zeros((n, n), dtype=np.int64)
    expected[np.arange(1, n), np.arange(n - 1)] = 1
    expected[:, n - 1] = A.a[:, n - 1]
    return bool(np.array_equal(A.a, expected))


def companion_coeffs(C: Mat) -> list[int]:
    """u_0, ..., u_{n-1} of a companion matrix."""
    return C.a[:, -1].tolist()


def local_minpoly(A: Mat, v: np.ndarray) -> Poly:
    return Poly.from_array(kernels.local_minpoly(A.a, np.asarray(v, dtype=np.int64), *A.field.args), A.field)


def apply_poly(A: Mat, f: Poly, v: np.ndarray) -> np.ndarray:
    return kernels.poly_apply(A.a, f.array(), np.asarray(v, dtype=np.int64), *A.field.args)


def krylov(A: Mat, v: np.ndarray, d: int) -> Mat:
    cols = [np.asarray(v, dtype=np.int64)]
    for _ in range(d - 1):
        cols.append(matvec(A, cols[-1]))
    return Mat._wrap(np.stack(cols, axis=1), A.field)


def _unit(n: int, i: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.int64)
    e[i] = 1
    return e


def _combine(A: Mat, v, p: Poly, w, q: Poly):
    """A vector whose local minimal polynomial is lcm(p, q), given v with p and w with q.

    lcm(p, q) is split into coprime p1 | p and q1 | q using gcds only: q / gcd(p, q)
    carries exactly the primes where q has the higher power; strip them from p.
    """
    q_rest = p_divrem(q, p_gcd(p, q))[0]
    p1 = p
    h = p_gcd(p1, q_rest)
    while h.degree > 0:
        p1 = p_divrem(p1, h)[0]
        h = p_gcd(p1, q_rest)
    lcm = p_lcm(p, q)
    q1 = p_divrem(lcm, p1)[0]
    v1 = apply_poly(A, p_divrem(p, p1)[0], v)
    w1 = apply_poly(A, p_divrem(q, q1)[0], w)
    return v1 ^ w1, lcm


def maximal_vector(A: Mat) -> tuple[np.ndarray, Poly]:
    """A vector whose local minimal polynomial is minpoly(A); scans e_1, e_2, ... in order."""
    n = A.n
    v, p = None, None
    for i in range(n):
        e = _unit(n, i)
        q = local_minpoly(A, e)
        if v is None:
            v, p = e, q
        elif not p_divides(q, p):
            v, p = _combine(A, v, p, e, q)
        if p.degree == n:
            break
    return v, p


def minpoly(A: Mat) -> Poly:
    return maximal_vector(A)[1]


def charpoly(A: Mat) -> Poly:
    out = Poly.one(A.field)
    for f in rcf(A).factors:
        out = p_mul(out, f)
    return out


def is_nonderogatory(A: Mat) -> bool:
    return minpoly(A).degree == A.n


@dataclass(frozen=True)
class RcfResult:
    factors: tuple[Poly, ...]
    basis: Mat
    blocks: Mat

    def offsets(self) -> list[int]:
        out, pos = [], 0
        for f in self.factors:
            out.append(pos)
            pos += f.degree
        return out


def _rcf(A: Mat) -> tuple[list[Poly], Mat]:
    n = A.n
    v, p = maximal_vector(A)
    d = p.degree
    K = krylov(A, v, d)
    if d == n:
        return [p], K
    # phi with phi(A^i v) = [i == d-1]; its A-orbit cuts out an invariant complement
    phi = m_solve(K.T, _unit(d, d - 1))
    rows = [phi]
    for _ in range(d - 1):
        rows.append(matvec(A.T, rows[-1]))
    W = nullspace(Mat._wrap(np.stack(rows), A.field))
    B = m_hstack(W, K)
    A2 = m_mul(m_mul(m_inv(B), A), B)
    r = n - d
    sub = Mat._wrap(A2.a[:r, :r].copy(), A.field)
    factors, P = _rcf(sub)
    return factors + [p], m_hstack(m_mul(W, P), K)


def rcf(A: Mat) -> RcfResult:
    factors, P = _rcf(A)
    blocks = m_direct_sum(*(companion_of(f) for f in factors))
    return RcfResult(tuple(factors), P, blocks)


def recompanion_cyclic(A: Mat) -> tuple[Mat, Mat]:
    """Q = [e_1 | A e_1 | ... | A^{n-1} e_1] and C = Q^-1 A Q, which is companion."""
    n = A.n
    e1 = _unit(n, 0)
    p = local_minpoly(A, e1)
    if p.degree != n:
        raise NotCyclicError()
    Q = krylov(A, e1, n)
    return Q, companion_of(p)


__all__ = [
    "NotCyclicError",
    "RcfResult",
    "apply_poly",
    "charpoly",
    "companion_coeffs",
    "companion_of",
    "is_companion",
    "is_nonderogatory",
    "krylov",
    "local_minpoly",
    "maximal_vector",
    "minpoly",
    "rcf",
    "recompanion_cyclic",
]
