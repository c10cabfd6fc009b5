"""Whole-matrix splits: rational canonical form, one split per invariant
factor, direct sum, and conjugation back to the input basis."""

from __future__ import annotations

from dataclasses import dataclass

from ..canonical import companion_coeffs, companion_of, is_companion, minpoly, rcf
from ..certificate import MODES, BlockRecord, SplitCertificate
from ..field import FieldError, fe_in_subfield, subfield_elements
from ..matrix import Mat, m_add, m_direct_sum, m_inv, m_mul, m_pow
from ..poly import p_roots, splits_distinct
from .companion import BlockSplit, ConstructionError, SplitError, split_companion
from .f2 import split_f2_block

TOO_SMALL = "field too small: use potent4-f2 mode"


@dataclass(frozen=True)
class SplitOptions:
    a: int | None = None
    mode: str = "diag-split"
    subfield_degree: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise SplitError(f"unknown mode {self.mode!r}")
        if self.mode == "potent-subfield" and self.subfield_degree is None:
            raise SplitError("potent-subfield mode needs a subfield degree")


def _record(offset: int, C: Mat, bs: BlockSplit) -> BlockRecord:
    factor = (*companion_coeffs(C), 1) if is_companion(C) else ()
    return BlockRecord(offset, C.n, factor, bs.rule, bs.a, bs.normalization, bs.layout, bs.eigenvalues)


def _emit(A: Mat, parts: list[tuple[int, Mat, BlockSplit]], P: Mat | None, mode: str, s: int, d: int | None) -> SplitCertificate:
    N = m_direct_sum(*(bs.N for _, _, bs in parts))
    D = m_direct_sum(*(bs.D for _, _, bs in parts))
    if P is not None:
        Pi = m_inv(P)
        N = m_mul(m_mul(P, N), Pi)
        D = m_mul(m_mul(P, D), Pi)
    checks = {
        "sum_ok": m_add(N, D) == A,
        "square_zero_ok": m_mul(N, N).is_zero(),
    }
    eig: tuple = ()
    if mode == "diag-split":
        forms = rcf(D)
        checks["diagonalizable_ok"] = splits_distinct(forms.factors[-1])
        charpoly = forms.factors[0]
        for f in forms.factors[1:]:
            charpoly = charpoly * f
        eig = tuple(p_roots(charpoly))
    checks["potency_ok"] = m_pow(D, s) == D
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise ConstructionError(", ".join(failed) + " failed on emission")
    return SplitCertificate(
        A=A,
        N=N,
        D=D,
        mode=mode,
        potency_s=s,
        diagonalizable=mode == "diag-split",
        eigenvalues=eig,
        blocks=tuple(_record(off, C, bs) for off, C, bs in parts),
        basis=P,
        subfield_degree=d,
        checks=checks,
    )


def _subfield_block(C: Mat, d: int, override: int | None) -> tuple[BlockSplit, int]:
    """Split with every eigenvalue of D in the subfield K = GF(2^d); returns the split and s."""
    ctx = C.field
    n = C.n
    u = companion_coeffs(C)
    if n == 2 and u[1] == 0:
        N = [[0, u[0] ^ 1], [0, 0]]
        D = [[0, 1], [1, 0]]
        return BlockSplit(Mat(N, ctx), Mat(D, ctx), "subfield-n2-trace0", eigenvalues=(1,), potency=3), 3
    if n % 4 == 2 and n > 2 and u[n - 1] == 0:
        needed, name = u[n - 2], f"u{n - 2}"
    else:
        needed, name = u[n - 1], f"u{n - 1}"
    if not fe_in_subfield(needed, d, ctx):
        raise SplitError(f"subfield hypothesis violated: {name}={needed:#x} is outside GF(2^{d})")
    pool = subfield_elements(d, ctx)
    try:
        bs = split_companion(C, pool=pool, override=override)
    except SplitError as exc:
        if str(exc).startswith("no admissible a"):
            raise SplitError("no admissible a in subfield") from None
        raise
    return bs, 1 << d


def _block(C: Mat, opts: SplitOptions) -> tuple[BlockSplit, int]:
    ctx = C.field
    if opts.mode == "diag-split":
        if ctx.q < 4:
            raise SplitError(TOO_SMALL)
        return split_companion(C, override=opts.a), ctx.q
    if opts.mode == "potent4-f2":
        return split_f2_block(C), 4
    return _subfield_block(C, opts.subfield_degree, opts.a)


def _check_mode(A: Mat, opts: SplitOptions) -> None:
    A.n  # raises on non-square input
    ctx = A.field
    if opts.a is not None:
        ctx.check(opts.a)
    if opts.mode == "diag-split" and ctx.q < 4:
        raise SplitError(TOO_SMALL)
    if opts.mode == "potent4-f2" and ctx.m != 1:
        raise SplitError(f"potent4-f2 mode needs GF(2), got {ctx.designation()}")
    if opts.mode == "potent-subfield":
        if ctx.q < 4:
            raise SplitError("potent-subfield mode needs at least 4 elements")
        d = opts.subfield_degree
        if not isinstance(d, int) or d < 1 or ctx.m % d:
            raise SplitError(f"GF(2^{d}) is not a subfield of {ctx.designation()}")


def split_block(C: Mat, opts: SplitOptions = SplitOptions()) -> SplitCertificate:
    """Certificate for a single companion matrix."""
    if not is_companion(C):
        raise SplitError("not a companion matrix")
    _check_mode(C, opts)
    if opts.mode == "potent-subfield" and C.n < 2:
        raise SplitError("potent-subfield mode needs order >= 2")
    bs, s = _block(C, opts)
    return _emit(C, [(0, C, bs)], None, opts.mode, s, opts.subfield_degree)


def normalize_and_split(C: Mat, opts: SplitOptions = SplitOptions()) -> SplitCertificate:
    """split_block restricted to orders >= 5, where D is built after normalising the trace."""
    if C.n < 5:
        raise SplitError("normalize_and_split needs order >= 5")
    return split_block(C, opts)


def _split_rcf(A: Mat, opts: SplitOptions) -> SplitCertificate:
    forms = rcf(A)
    parts = []
    s = None
    for off, f in zip(forms.offsets(), forms.factors):
        C = companion_of(f)
        bs, s = _block(C, opts)
        parts.append((off, C, bs))
    return _emit(A, parts, forms.basis, opts.mode, s, opts.subfield_degree)


def split_any(A: Mat, opts: SplitOptions = SplitOptions()) -> SplitCertificate:
    """A = N + D with N^2 = 0 and D as the mode requires, for any square A."""
    _check_mode(A, opts)
    if opts.mode == "potent4-f2":
        return split_f2(A, opts)
    if opts.mode == "potent-subfield":
        return split_subfield(A, opts.subfield_degree, opts)
    if splits_distinct(minpoly(A)):
        # already diagonalizable: the split is N = 0, D = A and no block is built
        return _emit(A, [(0, A, BlockSplit(Mat.zeros(A.n, A.field), A, "diagonalizable-input"))], None, opts.mode, A.field.q, None)
    return _split_rcf(A, opts)


def split_f2(A: Mat, opts: SplitOptions | None = None) -> SplitCertificate:
    """A over GF(2) as N + D with N^2 = 0 and D^4 = D."""
    a = opts.a if opts is not None else None
    opts = SplitOptions(a=a, mode="potent4-f2")
    _check_mode(A, opts)
    return _split_rcf(A, opts)


def split_subfield(A: Mat, d: int, opts: SplitOptions | None = None) -> SplitCertificate:
    """Split a non-derogatory A so that D^s = D with s = 2^d (s = 3 for a trace-0 2x2)."""
    a = opts.a if opts is not None else None
    opts = SplitOptions(a=a, mode="potent-subfield", subfield_degree=d)
    try:
        _check_mode(A, opts)
    except FieldError as exc:
        raise SplitError(str(exc)) from None
    if A.n < 2:
        raise SplitError("potent-subfield mode needs order >= 2")
    forms = rcf(A)
    if len(forms.factors) != 1:
        raise SplitError("potent-subfield mode needs a non-derogatory matrix")
    C = forms.blocks
    bs, s = _subfield_block(C, d, opts.a)
    return _emit(A, [(0, C, bs)], forms.basis, opts.mode, s, d)
