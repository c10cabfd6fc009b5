import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gf2split.canonical import companion_of
from gf2split.field import make_field
from gf2split.matrix import Mat, m_mul, m_pow, random_matrix
from gf2split.poly import Poly
from gf2split.splitter import QUARTIC_TABLE, SplitError, quartic_table, split_f2, split_f2_block
from gf2split.splitter.f2 import decode_f2
from gf2split.verify import check_certificate

F2 = make_field(1)

OBSTRUCTION_A = [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]]


def companion(coeffs):
    return companion_of(Poly([*coeffs, 1], F2))


def test_quartic_x4_x3_1():
    cert = split_f2(Mat(OBSTRUCTION_A, F2))
    assert cert.N.tolist() == [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
    assert cert.D.tolist() == [[1, 1, 0, 1], [0, 1, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1]]


@pytest.mark.parametrize("u", list(itertools.product((0, 1), repeat=3)))
def test_order3(u):
    u0, u1, u2 = u
    cert = split_f2(companion(u))
    assert cert.D.tolist() == [[0, 0, u2 ^ 1], [1, 0, u2], [0, 1, u2]]
    assert cert.N.tolist() == [[0, 0, u2 ^ 1 ^ u0], [0, 0, u2 ^ u1], [0, 0, 0]]


def test_order2_idempotent():
    cert = split_f2(companion([1, 1]))
    assert cert.N.tolist() == [[0, 1], [0, 0]]
    assert cert.D.tolist() == [[0, 0], [1, 1]]
    assert m_mul(cert.D, cert.D) == cert.D


@pytest.mark.parametrize("code", range(16))
def test_every_quartic(code):
    C = companion([(code >> i) & 1 for i in range(4)])
    bs = split_f2_block(C)
    assert bs.N + bs.D == C
    assert m_mul(bs.N, bs.N).is_zero()
    assert m_pow(bs.D, 4) == bs.D


def test_trace1_quartic_routes():
    assert split_f2_block(companion([1, 0, 0, 1])).rule == "case4-f2-explicit"
    assert split_f2_block(companion([1, 1, 1, 1])).rule == "case4-f2-shift"
    for key in QUARTIC_TABLE:
        assert split_f2_block(companion([*key, 1])).rule == "case4-f2-table"


def test_quartic_table_regenerates():
    assert quartic_table() == QUARTIC_TABLE


def test_decode_order():
    # entry (0, 0) is the most significant bit
    assert decode_f2(1 << 15, 4)[0, 0] == 1
    assert decode_f2(1, 4)[3, 3] == 1
    assert decode_f2(6, 2).tolist() == [[0, 1], [1, 0]]


@given(st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_random_gf2(n, seed):
    A = random_matrix(n, F2, np.random.default_rng(seed))
    cert = split_f2(A)
    assert cert.N.field == F2 and cert.D.field == F2
    assert cert.N + cert.D == A
    assert m_mul(cert.N, cert.N).is_zero()
    assert m_pow(cert.D, 4) == cert.D
    assert check_certificate(A, cert).ok


def test_f2_mode_needs_gf2():
    with pytest.raises(SplitError, match="GF\\(2\\)"):
        split_f2(Mat([[1]], make_field(2)))
