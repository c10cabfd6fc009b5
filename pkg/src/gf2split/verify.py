"""Independent certificate checks and brute-force oracles.

Nothing here looks at how a certificate was built.  The minimal polynomial
of D comes from the first linear dependency among I, D, D^2, ..., and the
characteristic polynomial from a Hessenberg reduction, so neither shares
code with the canonical-form machinery the splitter relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from . import kernels
from .certificate import SplitCertificate
from .field import FieldSpec
from .matrix import Mat, m_add, m_mul, m_pow
from .poly import Poly, p_roots, splits_distinct

BRUTE_FORCE_MAX_ORDER = 4
ENUMERATION_LIMIT = 1 << 24
CHUNK = 1 << 16


class SearchLimitError(ValueError):
    def __init__(self):
        super().__init__("search space limit")


@dataclass
class CheckReport:
    """Outcome of check_certificate.  A check that does not apply to the
    certificate's mode is None (e.g. diagonalizable_ok in a potency mode)."""

    sum_ok: bool
    square_zero_ok: bool
    diagonalizable_ok: bool | None
    potency_ok: bool
    potency_claimed: int | None
    eigenvalues: tuple[tuple[int, int], ...] = ()
    failures: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "sum_ok": self.sum_ok,
            "square_zero_ok": self.square_zero_ok,
            "diagonalizable_ok": self.diagonalizable_ok,
            "potency_ok": self.potency_ok,
            "potency_claimed": self.potency_claimed,
            "eigenvalues": [[f"{r:#x}", k] for r, k in self.eigenvalues],
            "failures": list(self.failures),
        }

    def format_text(self) -> str:
        def flag(v):
            return "n/a" if v is None else ("pass" if v else "FAIL")

        lines = [
            f"sum_ok            {flag(self.sum_ok)}",
            f"square_zero_ok    {flag(self.square_zero_ok)}",
            f"diagonalizable_ok {flag(self.diagonalizable_ok)}",
            f"potency_ok        {flag(self.potency_ok)} (s = {self.potency_claimed})",
        ]
        if self.eigenvalues:
            lines.append("eigenvalues       " + " ".join(f"{r:x}^{k}" for r, k in self.eigenvalues))
        lines.append("result            " + ("pass" if self.ok else "FAIL: " + ", ".join(self.failures)))
        return "\n".join(lines) + "\n"


def minpoly_by_powers(D: Mat) -> Poly:
    """Minimal polynomial from the first dependency among vec(I), vec(D), vec(D^2), ..."""
    n = D.n
    ctx = D.field
    cols = [np.eye(n, dtype=np.int64).ravel()]
    P = Mat.identity(n, ctx)
    for _ in range(n):
        P = m_mul(P, D)
        cols.append(P.a.ravel())
    R, piv = kernels.rref(np.stack(cols, axis=1), *ctx.args)
    piv = piv.tolist()
    k = next(j for j in range(n + 1) if j >= len(piv) or piv[j] != j)
    # column k of R expresses vec(D^k) in terms of vec(D^0..D^{k-1})
    return Poly([*R[:k, k].tolist(), 1], ctx)


def charpoly_hessenberg(A: Mat) -> Poly:
    return Poly.from_array(kernels.hessenberg_charpoly(A.a, *A.field.args), A.field)


def _allowed_potencies(cert: SplitCertificate) -> set[int]:
    ctx = cert.field
    if cert.mode == "diag-split":
        return {ctx.q}
    if cert.mode == "potent4-f2":
        return {4}
    d = cert.subfield_degree
    if not isinstance(d, int) or d < 1 or ctx.m % d:
        return set()
    return {1 << d, 3}


def check_certificate(A: Mat, cert: SplitCertificate) -> CheckReport:
    """Re-check every claim of cert about A from scratch; never raises on a bad certificate."""
    failures = []
    N, D = cert.N, cert.D
    if A.field != N.field or A.field != D.field:
        return CheckReport(False, False, None, False, cert.potency_s, failures=["field mismatch"])
    if A.shape != N.shape or A.shape != D.shape or A.shape[0] != A.shape[1]:
        return CheckReport(False, False, None, False, cert.potency_s, failures=["dimension mismatch"])

    sum_ok = m_add(N, D) == A
    if not sum_ok:
        failures.append("A != N + D")
    square_zero_ok = m_mul(N, N).is_zero()
    if not square_zero_ok:
        failures.append("N^2 != 0")
    if cert.mode == "potent4-f2" and A.field.m != 1:
        failures.append("potent4-f2 certificate over a field other than GF(2)")

    s = cert.potency_s
    if s not in _allowed_potencies(cert):
        failures.append(f"potency claim s={s} does not fit mode {cert.mode}")
        potency_ok = False
    else:
        potency_ok = m_pow(D, s) == D
        if not potency_ok:
            failures.append(f"D^{s} != D")

    diagonalizable_ok = None
    eig: tuple = ()
    if cert.mode == "diag-split":
        diagonalizable_ok = splits_distinct(minpoly_by_powers(D))
        if not diagonalizable_ok:
            failures.append("D is not diagonalizable over the field")
        eig = tuple(p_roots(charpoly_hessenberg(D)))
        if diagonalizable_ok and cert.eigenvalues and tuple(cert.eigenvalues) != eig:
            failures.append("stated eigenvalues differ from the roots of charpoly(D)")
    return CheckReport(sum_ok, square_zero_ok, diagonalizable_ok, potency_ok, s, eig, failures)


def _f2_rows(A: Mat) -> np.ndarray:
    # row i as a bitmask, bit j = entry (i, j)
    weights = 1 << np.arange(A.n, dtype=np.int64)
    return (A.a * weights).sum(axis=1).astype(np.int64)


def _decode(idx: int, n: int, q: int) -> np.ndarray:
    out = np.zeros(n * n, dtype=np.int64)
    for t in range(n * n - 1, -1, -1):
        idx, out[t] = divmod(idx, q)
    return out.reshape(n, n)


def brute_force_exists(A: Mat, nil_index_max: int, potency: int) -> tuple[bool, Mat | None]:
    """Is there E with E^potency = E and (A + E)^nil_index_max = 0?  Scans every
    E over GF(2) in bit-pattern order and returns the first witness."""
    if A.field.m != 1:
        raise ValueError("brute force search runs over GF(2) only")
    n = A.n
    if n > BRUTE_FORCE_MAX_ORDER:
        raise SearchLimitError()
    if potency < 1 or nil_index_max < 1:
        raise ValueError("potency and nilpotency index must be positive")
    rows = _f2_rows(A)
    total = 1 << (n * n)
    for start in range(0, total, CHUNK):
        idx = int(kernels.f2_search(rows, n, potency, nil_index_max, start, min(total, start + CHUNK)))
        if idx >= 0:
            return True, Mat(_decode(idx, n, 2), A.field)
    return False, None


def enumerate_square_zero(n: int, ctx: FieldSpec) -> Iterator[Mat]:
    """Every n x n matrix with N^2 = 0, in canonical enumeration order
    (row-major digits base q, entry (0, 0) most significant)."""
    total = ctx.q ** (n * n)
    if total > ENUMERATION_LIMIT:
        raise SearchLimitError()
    for start in range(0, total, CHUNK):
        for idx in kernels.square_zero_scan(n, *ctx.args, start, min(total, start + CHUNK)).tolist():
            yield Mat._wrap(_decode(idx, n, ctx.q), ctx)


def count_square_zero(n: int, ctx: FieldSpec) -> int:
    return sum(1 for _ in enumerate_square_zero(n, ctx))
