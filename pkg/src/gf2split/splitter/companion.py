"""Square-zero + diagonalizable split of a single companion matrix.

Orders 1-4 use closed formulas.  From order 5 on, the companion matrix is
first normalised (scaled to trace 1, or shifted by a scalar), brought back
to companion form through its cyclic vector e_1, and then D is assembled
from diagonal blocks D_1..D_4 plus a few coupling entries in the last block
column.  N is never written down: it is A + D, and N^2 = 0 is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

import numpy as np

from ..canonical import companion_coeffs, recompanion_cyclic
from ..field import FieldSpec, fe_inv, fe_mul, fe_sqrt
from ..matrix import Mat, m_add, m_conjugate, m_inv, m_mul, m_scale
from . import blocks


class SplitError(ValueError):
    """A precondition of the requested split does not hold."""


class ConstructionError(RuntimeError):
    """A post-check failed; this is a bug, never a user error."""

    def __init__(self, detail: str):
        super().__init__(f"construction error: {detail}")


@dataclass
class BlockSplit:
    N: Mat
    D: Mat
    rule: str
    a: int | None = None
    normalization: tuple[str, int] = ("none", 0)
    layout: tuple[tuple[str, int], ...] = ()
    eigenvalues: tuple[int, ...] = ()
    potency: int | None = None
    extra: dict = dc_field(default_factory=dict)


# residue class -> diagonal blocks of D (after normalisation)
LAYOUTS = {
    "4k-a": lambda k: ["D4"] * (k - 2) + ["D3", "D3", "D2"],
    "4k-b": lambda k: ["D1"] + ["D4"] * (k - 1) + ["D3"],
    "4k+1": lambda k: ["D4"] * (k - 1) + ["D3", "D2"],
    "4k+2-a": lambda k: ["D4"] * k + ["D2"],
    "4k+2-b": lambda k: ["D4"] * (k - 1) + ["D3", "D3"],
    "4k+3": lambda k: ["D4"] * k + ["D3"],
}

# how each non-final block is tied to the last block column
COUPLING = {
    "4k-a": "pair",
    "4k+1": "pair",
    "4k+2-a": "alt",
    "4k-b": "d3col",
    "4k+3": "d3col",
    "4k+2-b": "diag",
}


def pick_a(forbidden: Iterable[int], pool: Iterable[int], override: int | None = None, where: str = "") -> int:
    """Smallest element of pool outside forbidden, unless an override is given."""
    forbidden = set(forbidden)
    pool = list(pool)
    if override is not None:
        if override in forbidden or override not in pool:
            raise SplitError(f"inadmissible a={override:#x}{where}")
        return override
    for x in pool:
        if x not in forbidden:
            return x
    raise SplitError(f"no admissible a{where}")


def _mat(arr: np.ndarray, ctx: FieldSpec) -> Mat:
    return Mat._wrap(np.asarray(arr, dtype=np.int64), ctx)


def _square_zero_or_die(N: Mat, rule: str) -> None:
    if not m_mul(N, N).is_zero():
        raise ConstructionError(f"N^2 != 0 in rule {rule}")


def _split_order2(C: Mat, u: list[int]) -> BlockSplit:
    ctx = C.field
    u0, u1 = u
    if u1:
        N = [[0, u0], [0, 0]]
        D = blocks.d2(u1)
        return BlockSplit(_mat(N, ctx), _mat(D, ctx), "case2-trace", eigenvalues=tuple(sorted({0, u1})))
    v = fe_sqrt(u0, ctx)
    N = [[v, u0], [1, v]]
    D = [[v, 0], [0, v]]
    return BlockSplit(_mat(N, ctx), _mat(D, ctx), "case2-root", eigenvalues=(v,), extra={"v": v})


def _split_order3(C: Mat, u: list[int], pool, override) -> BlockSplit:
    ctx = C.field
    u2 = u[2]
    a = pick_a({u2, u2 ^ 1}, pool, override)
    D = blocks.d3(a, ctx, u2)
    N = C.a ^ D
    return BlockSplit(_mat(N, ctx), _mat(D, ctx), "case3", a=a, layout=(("D3", 0),), eigenvalues=tuple(sorted({a, a ^ 1, u2 ^ 1})))


def _split_order4(C: Mat, u: list[int], pool, override) -> BlockSplit:
    ctx = C.field
    u0, u1, u2, u3 = u
    if u3:
        a = pick_a({0, u3}, pool, override)
        s = a ^ u3
        sq = fe_mul(a, a, ctx) ^ fe_mul(u3, u3, ctx)
        N = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, s, sq], [0, 0, 1, s]]
        D = [[0, 0, 0, u0], [0, 0, 0, u1], [0, 1, s, u2 ^ sq], [0, 0, 0, a]]
        return BlockSplit(_mat(N, ctx), _mat(D, ctx), "case4-a", a=a, eigenvalues=tuple(sorted({0, a, s})))
    a = pick_a({0, 1}, pool, override)
    D = blocks.d4(a, ctx)
    N = C.a ^ D
    return BlockSplit(_mat(N, ctx), _mat(D, ctx), "case4-b", a=a, layout=(("D4", 0),), eigenvalues=tuple(sorted({0, 1, a, a ^ 1})))


def assemble(u: list[int], rule: str, a: int, ctx: FieldSpec) -> tuple[np.ndarray, tuple[tuple[str, int], ...]]:
    """D for a normalised companion matrix with last column u."""
    n = len(u)
    kinds = LAYOUTS[rule](n // 4)
    style = COUPLING[rule]
    t, t1 = blocks._aa(a, ctx)
    D = np.zeros((n, n), dtype=np.int64)
    layout = []
    pos = 0
    col = n - 1
    for idx, kind in enumerate(kinds):
        s = blocks.ATOMS[kind]
        D[pos : pos + s, pos : pos + s] = blocks.atom(kind, a, ctx)
        layout.append((kind, pos))
        if idx < len(kinds) - 1:
            last = pos + s - 1
            w = u[last]
            if style == "pair":
                D[last - 1, col] = D[last, col] = w
            elif style == "alt":
                D[pos + 1, col] = D[pos + 3, col] = w
            elif style == "d3col":
                if kind == "D1":
                    D[pos, col] = w
                else:
                    D[pos, col] = fe_mul(t, w, ctx)
                    D[pos + 1, col] = fe_mul(t1, w, ctx)
                    D[pos + 3, col] = w
            else:  # diag
                D[last - 1, col - 1] = w
                D[last, col] = w
        pos += s
    if pos != n:
        raise ConstructionError(f"layout of rule {rule} covers {pos} of {n} rows")
    return D, tuple(layout)


def _classify(n: int, c: int, u: list[int], a: int, ctx: FieldSpec) -> tuple[str, tuple[str, int], tuple[int, ...]]:
    """Rule, normalisation and claimed eigenvalue set for order n >= 5."""
    r = n % 4
    base = [0, 1, a, a ^ 1]
    if r == 0 or (r == 2 and c):
        if c:
            rule = "4k-a" if r == 0 else "4k+2-a"
            return rule, ("scale", c), tuple(sorted({fe_mul(c, x, ctx) for x in base}))
        return "4k-b", ("none", 0), tuple(sorted(set(base)))
    if r == 1:
        return "4k+1", ("shift", c ^ 1), tuple(sorted({c ^ x for x in base}))
    if r == 2:
        b = fe_sqrt(u[n - 2] ^ fe_mul(a, a, ctx) ^ a ^ 1, ctx)
        return "4k+2-b", ("shift", b), tuple(sorted({b ^ x for x in base}))
    return "4k+3", ("shift", c), tuple(sorted({c ^ x for x in base}))


def _split_large(C: Mat, u: list[int], pool, override) -> BlockSplit:
    ctx = C.field
    n = C.n
    c = u[n - 1]
    a = pick_a({0, 1}, pool, override)
    rule, (kind, value), eig = _classify(n, c, u, a, ctx)

    Q = None
    A = C
    if kind == "scale" and value != 1:
        A = m_scale(fe_inv(value, ctx), C)
    elif kind == "shift" and value:
        A = m_add(C, Mat.scalar(n, value, ctx))
    if A is not C:
        Q, A = recompanion_cyclic(A)
    ua = companion_coeffs(A)
    expected_trace = {"4k-a": 1, "4k+2-a": 1, "4k+1": 1, "4k-b": 0, "4k+2-b": 0, "4k+3": 0}[rule]
    if ua[n - 1] != expected_trace:
        raise ConstructionError(f"normalised trace {ua[n - 1]:#x} in rule {rule}")

    Darr, layout = assemble(ua, rule, a, ctx)
    D = _mat(Darr, ctx)
    N = _mat(A.a ^ Darr, ctx)
    _square_zero_or_die(N, rule)

    if Q is not None:
        Qi = m_inv(Q)
        N = m_mul(m_mul(Q, N), Qi)
        D = m_mul(m_mul(Q, D), Qi)
    if kind == "scale" and value != 1:
        N = m_scale(value, N)
        D = m_scale(value, D)
    elif kind == "shift" and value:
        D = m_add(D, Mat.scalar(n, value, ctx))
    return BlockSplit(N, D, rule, a=a, normalization=(kind, value), layout=layout, eigenvalues=eig)


def split_companion(C: Mat, pool: Iterable[int] | None = None, override: int | None = None) -> BlockSplit:
    """Split one companion matrix over GF(q), q >= 4 (orders 1 and 2 work over GF(2) too).

    ``pool`` lists the allowed values of the free parameter a in canonical
    order (default: the whole field); ``override`` forces a.
    """
    ctx = C.field
    n = C.n
    u = companion_coeffs(C)
    if pool is None:
        pool = ctx.elements()
    if n == 1:
        return BlockSplit(Mat.zeros(1, ctx), C, "order1", layout=(("D1", 0),), eigenvalues=(u[0],))
    if n == 2:
        out = _split_order2(C, u)
    elif ctx.q < 4:
        raise SplitError("field too small: use potent4-f2 mode")
    elif n == 3:
        out = _split_order3(C, u, pool, override)
    elif n == 4:
        out = _split_order4(C, u, pool, override)
    else:
        out = _split_large(C, u, pool, override)
    _square_zero_or_die(out.N, out.rule)
    return out


def conjugate_split(P: Mat, split: BlockSplit) -> BlockSplit:
    """The same split transported by P (N -> P N P^-1, D -> P D P^-1)."""
    split.N = m_conjugate(P, split.N)
    split.D = m_conjugate(P, split.D)
    return split
