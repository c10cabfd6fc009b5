"""GF(2) route: each companion block is split over GF(4) with a the root of
a^2 + a + 1 and projected back; D then satisfies D^4 = D.

Trace-1 quartics do not go through GF(4).  x^4 + x^3 + 1 has an explicit
split, x^4 + x^3 + x^2 + x + 1 reduces to it after adding the identity, and
the six remaining trace-1 quartics use a frozen table of square-zero N found
by exhaustive search (see ``quartic_table``).
"""

from __future__ import annotations

import numpy as np

from .. import kernels
from ..canonical import companion_coeffs, companion_of, recompanion_cyclic
from ..field import FieldSpec, make_field
from ..matrix import Mat, m_add, m_inv, m_mul, m_pow
from ..poly import Poly
from .companion import BlockSplit, ConstructionError, split_companion

GF2 = make_field(1)
GF4 = make_field(2)

QUARTIC_N = ((1, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1), (0, 0, 0, 0))
QUARTIC_D = ((1, 1, 0, 1), (0, 1, 0, 0), (0, 1, 0, 1), (0, 0, 1, 1))

# (u0, u1, u2) of x^4 + x^3 + u2 x^2 + u1 x + u0 -> index of N in the
# canonical enumeration of 4x4 GF(2) matrices (entry (0, 0) is the top bit)
QUARTIC_TABLE = {
    (0, 0, 0): 819,
    (0, 1, 0): 14,
    (1, 1, 0): 255,
    (0, 0, 1): 819,
    (1, 0, 1): 119,
    (0, 1, 1): 6,
}


def decode_f2(index: int, n: int) -> np.ndarray:
    nn = n * n
    bits = [(index >> (nn - 1 - t)) & 1 for t in range(nn)]
    return np.array(bits, dtype=np.int64).reshape(n, n)


def quartic_table(field: FieldSpec = GF2) -> dict[tuple[int, int, int], int]:
    """Recompute QUARTIC_TABLE: first square-zero N (enumeration order) with
    (A + N)^4 = A + N, for every trace-1 quartic not covered explicitly."""
    candidates = kernels.square_zero_scan(4, *field.args, 0, 1 << 16)
    table = {}
    for key in QUARTIC_TABLE:
        A = companion_of(Poly([*key, 1, 1], field))
        for idx in candidates.tolist():
            D = m_add(A, Mat(decode_f2(idx, 4), field))
            if m_pow(D, 4) == D:
                table[key] = idx
                break
    return table


def _project(M: Mat) -> Mat:
    if M.a.size and M.a.max() > 1:
        raise ConstructionError("projection failure: entry outside GF(2)")
    return Mat(M.a, GF2)


def _quartic_trace1(C: Mat, u: list[int]) -> BlockSplit:
    key = tuple(u[:3])
    if key == (1, 0, 0):
        return BlockSplit(Mat(QUARTIC_N, GF2), Mat(QUARTIC_D, GF2), "case4-f2-explicit", potency=4)
    if key == (1, 1, 1):
        Q, C1 = recompanion_cyclic(m_add(C, Mat.identity(4, GF2)))
        if companion_coeffs(C1) != [1, 0, 0, 1]:
            raise ConstructionError("x^4+x^3+x^2+x+1 shift did not give x^4+x^3+1")
        Qi = m_inv(Q)
        N = m_mul(m_mul(Q, Mat(QUARTIC_N, GF2)), Qi)
        D = m_add(m_mul(m_mul(Q, Mat(QUARTIC_D, GF2)), Qi), Mat.identity(4, GF2))
        return BlockSplit(N, D, "case4-f2-shift", normalization=("shift", 1), potency=4)
    N = Mat(decode_f2(QUARTIC_TABLE[key], 4), GF2)
    return BlockSplit(N, m_add(C, N), "case4-f2-table", potency=4, extra={"table_index": QUARTIC_TABLE[key]})


def split_f2_block(C: Mat) -> BlockSplit:
    """Split a companion matrix over GF(2) into N + D with N^2 = 0, D^4 = D."""
    u = companion_coeffs(C)
    n = C.n
    if n <= 2:
        out = split_companion(C)
        out.potency = 2
        return out
    if n == 4 and u[3] == 1:
        return _quartic_trace1(C, u)
    lifted = split_companion(C.with_field(GF4), override=GF4.generator)
    lifted.N = _project(lifted.N)
    lifted.D = _project(lifted.D)
    lifted.potency = 4
    return lifted
