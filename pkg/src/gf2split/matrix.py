"""Dense exact matrices over GF(2^m).

Matrices act on column vectors from the left; e_i is the i-th standard
column.  Entries are stored row-major in an int64 numpy array.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .field import FieldError, FieldSpec, parse_field


class MatrixError(ValueError):
    pass


class SingularMatrixError(MatrixError):
    def __init__(self, msg: str = "singular"):
        super().__init__(msg)


class Mat:
    __slots__ = ("a", "field")

    def __init__(self, entries, field: FieldSpec):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise MatrixError("entries must form a 2-d array")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise FieldError(f"entry outside {field.designation()}")
        a.setflags(write=False)
        self.a = a
        self.field = field

    @classmethod
    def _wrap(cls, a: np.ndarray, field: FieldSpec) -> "Mat":
        # trusted constructor for kernel output
        obj = cls.__new__(cls)
        a.setflags(write=False)
        obj.a = a
        obj.field = field
        return obj

    @classmethod
    def zeros(cls, n: int, field: FieldSpec, cols: int | None = None) -> "Mat":
        return cls._wrap(np.zeros((n, n if cols is None else cols), dtype=np.int64), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Mat":
        return cls._wrap(np.eye(n, dtype=np.int64), field)

    @classmethod
    def scalar(cls, n: int, c: int, field: FieldSpec) -> "Mat":
        return cls._wrap(np.eye(n, dtype=np.int64) * c, field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    @property
    def n(self) -> int:
        if self.a.shape[0] != self.a.shape[1]:
            raise MatrixError("matrix is not square")
        return self.a.shape[0]

    def __getitem__(self, idx):
        return int(self.a[idx]) if np.isscalar(self.a[idx]) else self.a[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field == other.field and self.a.shape == other.a.shape and bool(np.array_equal(self.a, other.a))

    def __hash__(self) -> int:
        return hash((self.field, self.a.shape, self.a.tobytes()))

    def __add__(self, other: "Mat") -> "Mat":
        return m_add(self, other)

    __sub__ = __add__

    def __matmul__(self, other: "Mat") -> "Mat":
        return m_mul(self, other)

    def __pow__(self, e: int) -> "Mat":
        return m_pow(self, e)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(f"{int(x):x}" for x in row) for row in self.a)
        return f"Mat([{rows}], {self.field.designation()})"

    @property
    def T(self) -> "Mat":
        return Mat._wrap(self.a.T.copy(), self.field)

    def column(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()

    def is_zero(self) -> bool:
        return not self.a.any()

    def with_field(self, field: FieldSpec) -> "Mat":
        """Same bit patterns read in another field (subfield embedding when the
        patterns are 0/1, e.g. GF(2) into GF(4))."""
        return Mat(self.a, field)


def _check(A: Mat, B: Mat) -> FieldSpec:
    if A.field != B.field:
        raise FieldError("field mismatch")
    return A.field


def m_add(A: Mat, B: Mat) -> Mat:
    _check(A, B)
    if A.shape != B.shape:
        raise MatrixError("dimension mismatch")
    return Mat._wrap(A.a ^ B.a, A.field)


def m_mul(A: Mat, B: Mat) -> Mat:
    ctx = _check(A, B)
    if A.shape[1] != B.shape[0]:
        raise MatrixError("dimension mismatch")
    return Mat._wrap(kernels.matmul(A.a, B.a, *ctx.args), ctx)


def m_scale(c: int, A: Mat) -> Mat:
    return Mat._wrap(kernels.mat_scale(int(A.field.check(c)), A.a, *A.field.args), A.field)


def m_pow(A: Mat, e: int) -> Mat:
    if e < 0:
        raise MatrixError("negative exponent")
    out = Mat.identity(A.n, A.field)
    base = A
    while e:
        if e & 1:
            out = m_mul(out, base)
        e >>= 1
        if e:
            base = m_mul(base, base)
    return out


def m_trace(A: Mat) -> int:
    t = 0
    for i in range(A.n):
        t ^= int(A.a[i, i])
    return t


def m_direct_sum(*blocks: Mat) -> Mat:
    if not blocks:
        raise MatrixError("empty direct sum")
    ctx = blocks[0].field
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for b in blocks:
        if b.field != ctx:
            raise FieldError("field mismatch")
        out[r : r + b.shape[0], c : c + b.shape[1]] = b.a
        r += b.shape[0]
        c += b.shape[1]
    return Mat._wrap(out, ctx)


def m_hstack(*blocks: Mat) -> Mat:
    return Mat._wrap(np.hstack([b.a for b in blocks]), blocks[0].field)


def m_rref(A: Mat) -> tuple[Mat, list[int]]:
    R, piv = kernels.rref(A.a, *A.field.args)
    return Mat._wrap(R, A.field), piv.tolist()


def m_rank(A: Mat) -> int:
    return len(m_rref(A)[1])


def nullspace(A: Mat) -> Mat:
    """Basis of the right kernel, one vector per column (n x nullity)."""
    R, piv = m_rref(A)
    cols = A.shape[1]
    free = [j for j in range(cols) if j not in set(piv)]
    out = np.zeros((cols, len(free)), dtype=np.int64)
    for k, j in enumerate(free):
        out[j, k] = 1
        for r, p in enumerate(piv):
            out[p, k] = R.a[r, j]  # char 2: -x = x
    return Mat._wrap(out, A.field)


def m_inv(A: Mat) -> Mat:
    n = A.n
    aug = np.hstack([A.a, np.eye(n, dtype=np.int64)])
    R, piv = kernels.rref(aug, *A.field.args)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise SingularMatrixError()
    return Mat._wrap(R[:, n:].copy(), A.field)


def m_solve(A: Mat, b: np.ndarray) -> np.ndarray:
    """One solution x of A x = b (free variables set to zero)."""
    rows, cols = A.shape
    aug = np.hstack([A.a, np.asarray(b, dtype=np.int64).reshape(rows, 1)])
    R, piv = kernels.rref(aug, *A.field.args)
    piv = piv.tolist()
    if piv and piv[-1] == cols:
        raise MatrixError("inconsistent system")
    x = np.zeros(cols, dtype=np.int64)
    for r, p in enumerate(piv):
        x[p] = R[r, cols]
    return x


def m_conjugate(P: Mat, M: Mat) -> Mat:
    """P M P^-1."""
    return m_mul(m_mul(P, M), m_inv(P))


def matvec(A: Mat, v: np.ndarray) -> np.ndarray:
    return kernels.matmul(A.a, np.asarray(v, dtype=np.int64).reshape(-1, 1), *A.field.args)[:, 0]


def format_matrix(A: Mat) -> str:
    lines = [f"field {A.field.designation()}", f"n {A.n}"]
    lines += [" ".join(f"{int(x):x}" for x in row) for row in A.a]
    return "\n".join(lines) + "\n"


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


def parse_matrix(text: str, field: FieldSpec | None = None) -> Mat:
    """Parse the matrix file format; blank lines and '#' comments are skipped."""
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) < 2:
        raise ParseError("expected 'field' and 'n' header lines", lines[0][0] if lines else 1)
    lineno, head = lines[0]
    if not head.strip().startswith("field "):
        raise ParseError("expected 'field gf(2^m)[modulus=0x..]'", lineno)
    try:
        ctx = parse_field(head.strip()[len("field ") :])
    except FieldError as exc:
        raise ParseError(str(exc), lineno, 7) from exc
    if field is not None and field != ctx:
        raise FieldError(f"matrix is over {ctx.designation()}, expected {field.designation()}")
    lineno, nline = lines[1]
    parts = nline.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError("expected 'n <order>'", lineno)
    n = int(parts[1])
    body = lines[2:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}", body[-1][0] if body else lineno)
    rows = []
    for lineno, ln in body:
        tokens = ln.split()
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", lineno)
        row = []
        col = 1
        for tok in tokens:
            col = ln.index(tok, col - 1) + 1
            try:
                val = int(tok, 16)
            except ValueError:
                raise ParseError(f"bad hexadecimal entry {tok!r}", lineno, col) from None
            if not 0 <= val < ctx.q:
                raise ParseError(f"entry {tok} outside the field", lineno, col)
            row.append(val)
            col += len(tok)
        rows.append(row)
    return Mat(rows, ctx)


def random_matrix(n: int, field: FieldSpec, rng: np.random.Generator) -> Mat:
    return Mat._wrap(rng.integers(0, field.q, size=(n, n), dtype=np.int64), field)


def random_invertible(n: int, field: FieldSpec, rng: np.random.Generator) -> Mat:
    while True:
        P = random_matrix(n, field, rng)
        if m_rank(P) == n:
            return P
