"""The numba and numpy kernel paths must agree bit for bit."""

import numpy as np
import pytest

from gf2split import kernels
from gf2split.field import make_field

jit = kernels.load_backend("numba")
npy = kernels.load_backend("numpy")


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


@pytest.mark.parametrize("m", [1, 2, 4, 8, 16])
def test_field_kernels(m, rng):
    F = make_field(m)
    xs = rng.integers(0, F.q, size=50).tolist()
    for x, y in zip(xs, reversed(xs)):
        assert jit.gf_mul(x, y, *F.args) == npy.gf_mul(x, y, *F.args)
        if x:
            assert jit.gf_inv(x, *F.args) == npy.gf_inv(x, *F.args)


@pytest.mark.parametrize("m", [1, 3, 4])
def test_matrix_kernels(m, rng):
    F = make_field(m)
    for n in (1, 3, 7):
        A = rng.integers(0, F.q, size=(n, n))
        B = rng.integers(0, F.q, size=(n, n))
        A[0] = 0  # keep some rank deficiency around
        v = rng.integers(0, F.q, size=n)
        assert same(jit.matmul(A, B, *F.args), npy.matmul(A, B, *F.args))
        assert same(jit.mat_scale(3 % F.q, A, *F.args), npy.mat_scale(3 % F.q, A, *F.args))
        assert same(jit.rref(A, *F.args), npy.rref(A, *F.args))
        assert same(jit.local_minpoly(A, v, *F.args), npy.local_minpoly(A, v, *F.args))
        assert same(jit.hessenberg_charpoly(A, *F.args), npy.hessenberg_charpoly(A, *F.args))


def test_poly_kernels(rng):
    F = make_field(4)
    f = rng.integers(0, 16, size=7)
    f[-1] = 1
    g = rng.integers(0, 16, size=4)
    g[-1] = 5
    A = rng.integers(0, 16, size=(4, 4))
    v = rng.integers(0, 16, size=4)
    assert same(jit.poly_mul(f, g, *F.args), npy.poly_mul(f, g, *F.args))
    assert same(jit.poly_divrem(f, g, *F.args), npy.poly_divrem(f, g, *F.args))
    assert same(jit.poly_eval_all(f, *F.args), npy.poly_eval_all(f, *F.args))
    assert same(jit.poly_frobenius_x(f, *F.args), npy.poly_frobenius_x(f, *F.args))
    assert same(jit.poly_apply(A, g, v, *F.args), npy.poly_apply(A, g, v, *F.args))


def test_search_kernels():
    F2 = make_field(1)
    rows = np.array([0b1000, 0b0001, 0b0010, 0b1100], dtype=np.int64)  # companion of x^4 + x^3 + 1 as row bitmasks
    for args in ((2, 3), (4, 2)):
        assert jit.f2_search(rows, 4, *args, 0, 1 << 16) == npy.f2_search(rows, 4, *args, 0, 1 << 16)
    assert same(jit.square_zero_scan(3, *F2.args, 0, 512), npy.square_zero_scan(3, *F2.args, 0, 512))
    F4 = make_field(2)
    assert same(jit.square_zero_scan(2, *F4.args, 0, 256), npy.square_zero_scan(2, *F4.args, 0, 256))


def test_env_flag_selects_numpy(monkeypatch):
    import importlib

    monkeypatch.setenv("GF2SPLIT_DISABLE_JIT", "1")
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "numpy"
        assert reloaded.matmul is npy.matmul
    finally:
        monkeypatch.delenv("GF2SPLIT_DISABLE_JIT")
        importlib.reload(kernels)
