"""Diagonalizable building blocks of orders 1-4 and the square-zero N_3, N_4."""

from __future__ import annotations

import numpy as np

from ..field import FieldSpec, fe_mul


def _aa(a: int, ctx: FieldSpec) -> tuple[int, int]:
    """(a^2 + a, a^2 + a + 1)."""
    t = fe_mul(a, a, ctx) ^ a
    return t, t ^ 1


def d1() -> np.ndarray:
    return np.zeros((1, 1), dtype=np.int64)


def d2(u1: int = 1) -> np.ndarray:
    """[[0, 0], [1, u1]]: eigenvalues 0 and u1 (u1 != 0)."""
    return np.array([[0, 0], [1, u1]], dtype=np.int64)


def d3(a: int, ctx: FieldSpec, u2: int = 0) -> np.ndarray:
    """Companion matrix of (x + u2 + 1)(x + a)(x + a + 1)."""
    t, t1 = _aa(a, ctx)
    return np.array(
        [
            [0, 0, fe_mul(t, u2 ^ 1, ctx)],
            [1, 0, u2 ^ t1],
            [0, 1, u2],
        ],
        dtype=np.int64,
    )


def n3(a: int, ctx: FieldSpec) -> np.ndarray:
    t, t1 = _aa(a, ctx)
    out = np.zeros((3, 3), dtype=np.int64)
    out[0, 2], out[1, 2] = t, t1
    return out


def d4(a: int, ctx: FieldSpec) -> np.ndarray:
    """Eigenvalues 0, 1, a, a + 1."""
    t, t1 = _aa(a, ctx)
    out = np.zeros((4, 4), dtype=np.int64)
    out[1, 0] = out[2, 1] = out[3, 2] = 1
    out[1, 3], out[2, 3] = t, t1
    return out


def n4(a: int, ctx: FieldSpec) -> np.ndarray:
    t, t1 = _aa(a, ctx)
    out = np.zeros((4, 4), dtype=np.int64)
    out[1, 3], out[2, 3] = t, t1
    return out


def q_block(r: int, s: int) -> np.ndarray:
    """r x s with a single 1 in the top-right corner."""
    out = np.zeros((r, s), dtype=np.int64)
    out[0, s - 1] = 1
    return out


ATOMS = {"D1": 1, "D2": 2, "D3": 3, "D4": 4}


def atom(kind: str, a: int, ctx: FieldSpec) -> np.ndarray:
    if kind == "D1":
        return d1()
    if kind == "D2":
        return d2()
    if kind == "D3":
        return d3(a, ctx)
    if kind == "D4":
        return d4(a, ctx)
    raise ValueError(kind)
