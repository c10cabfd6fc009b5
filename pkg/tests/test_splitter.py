import numpy as np
import pytest
from hypothesis import given, strategies as st

from gf2split.canonical import companion_of
from gf2split.field import fe_mul, fe_sqrt, make_field
from gf2split.matrix import Mat, m_inv, m_mul, m_pow, m_rank, random_invertible, random_matrix
from gf2split.poly import Poly, p_roots
from gf2split.splitter import SplitError, SplitOptions, normalize_and_split, pick_a, split_any, split_block
from gf2split.splitter.companion import LAYOUTS, assemble
from gf2split.verify import charpoly_hessenberg, check_certificate

F4 = make_field(2)
F8 = make_field(3)
a4 = F4.generator  # a^2 + a + 1 = 0


def root_set(D):
    return {r for r, _ in p_roots(charpoly_hessenberg(D))}


def companion(coeffs, F):
    return companion_of(Poly([*coeffs, 1], F))


@pytest.mark.parametrize("u0", range(4))
@pytest.mark.parametrize("u1", range(1, 4))
def test_order2_with_trace(u0, u1):
    cert = split_block(companion([u0, u1], F4))
    assert cert.N == Mat([[0, u0], [0, 0]], F4)
    assert cert.D == Mat([[0, 0], [1, u1]], F4)


@pytest.mark.parametrize("u0", range(4))
def test_order2_trace_zero(u0):
    v = fe_sqrt(u0, F4)
    cert = split_block(companion([u0, 0], F4))
    assert cert.N == Mat([[v, fe_mul(v, v, F4)], [1, v]], F4)
    assert cert.D == Mat.scalar(2, v, F4)


def test_order3_companion_of_x_cubed():
    cert = split_block(companion([0, 0, 0], F4))
    assert cert.chosen_a == [a4]
    assert cert.N == Mat([[0, 0, 1], [0, 0, 0], [0, 0, 0]], F4)
    assert cert.D == companion([1, 0, 0], F4)  # x^3 + 1
    assert m_pow(cert.D, 3) == Mat.identity(3, F4)
    assert root_set(cert.D) == {1, a4, a4 ^ 1}


def test_order8_trace1_layout():
    cert = split_block(companion([1, 0, 3, 0, 2, 0, 0, 1], F4))
    assert cert.block_layout == [("D3", 0), ("D3", 3), ("D2", 6)]
    assert root_set(cert.D) <= {0, 1, a4, a4 ^ 1}


@pytest.mark.parametrize("c", range(4))
def test_order5_eigenvalues(c, rng):
    u = [*rng.integers(0, 4, size=4).tolist(), c]
    cert = normalize_and_split(companion(u, F4))
    assert root_set(cert.D) == {c, c ^ 1, c ^ a4, c ^ a4 ^ 1}


def test_order6_trace0_x6():
    # b^2 = u4 + a^2 + a + 1 = 0, so the shift is b = 0.  The two D3 blocks
    # only carry 1, a, a + 1: the fourth stated eigenvalue b is not reached
    # at this order.
    cert = split_block(companion([0] * 6, F4))
    assert cert.blocks[0].normalization == ("shift", 0)
    assert cert.block_layout == [("D3", 0), ("D3", 3)]
    assert root_set(cert.D) == {1, a4, a4 ^ 1}
    assert m_pow(cert.D, 4) == cert.D
    assert m_mul(cert.N, cert.N).is_zero()


@pytest.mark.parametrize("rule,n", [(r, n) for r in LAYOUTS for n in range(5, 21) if r[:4] in {"4k-a", "4k-b"} and n % 4 == 0 or r.startswith("4k+" + str(n % 4)) and n % 4])
def test_layout_covers_order(rule, n):
    if n < 8 and rule.startswith("4k-"):
        return
    u = [0] * n
    u[-1] = 1 if rule.endswith("-a") or rule == "4k+1" else 0
    D, layout = assemble(u, rule, a4, F4)
    assert D.shape == (n, n)
    assert layout[0][1] == 0


def test_zero_and_diagonal(field, rng):
    for n in (1, 3, 6):
        cert = split_any(Mat.zeros(n, field))
        assert cert.N.is_zero() and cert.D.is_zero()
        A = Mat(np.diag(rng.integers(0, field.q, size=n)), field)
        cert = split_any(A)
        assert cert.N.is_zero() and cert.D == A


def test_random_9x9_over_gf8(rng):
    for _ in range(20):
        A = random_matrix(9, F8, rng)
        assert check_certificate(A, split_any(A)).ok


@given(st.integers(1, 12), st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 4]))
def test_split_any_property(n, seed, m):
    F = make_field(m)
    A = random_matrix(n, F, np.random.default_rng(seed))
    cert = split_any(A)
    assert cert.N + cert.D == A
    assert m_mul(cert.N, cert.N).is_zero()
    assert m_pow(cert.D, F.q) == cert.D
    assert check_certificate(A, cert).ok


def test_similarity_equivariance(field, rng):
    for n in (3, 7, 10):
        A = random_matrix(n, field, rng)
        P = random_invertible(n, field, rng)
        B = m_mul(m_mul(P, A), m_inv(P))
        assert check_certificate(B, split_any(B)).ok
        # conjugating a certificate gives a certificate for the conjugate
        cert = split_any(A)
        cert.A, cert.N, cert.D = B, m_mul(m_mul(P, cert.N), m_inv(P)), m_mul(m_mul(P, cert.D), m_inv(P))
        assert check_certificate(B, cert).ok


def test_low_order_parts_have_rank_one(field, rng):
    for n in (2, 3):
        for _ in range(30):
            C = companion(rng.integers(0, field.q, size=n).tolist(), field)
            assert m_rank(split_block(C).N) <= 1


def test_a_override():
    C = companion([1, 2, 3], F8)  # forbidden: 3 and 2
    assert split_block(C, SplitOptions(a=5)).chosen_a == [5]
    with pytest.raises(SplitError, match="inadmissible a=0x2"):
        split_block(C, SplitOptions(a=2))


def test_pick_a():
    assert pick_a({0, 1}, range(8)) == 2
    assert pick_a({2, 3}, range(8)) == 0
    with pytest.raises(SplitError, match="no admissible a"):
        pick_a({0, 1}, [0, 1])


def test_gf2_is_refused_in_diag_mode():
    A = Mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]], make_field(1))
    with pytest.raises(SplitError, match="field too small: use potent4-f2 mode"):
        split_any(A)


def test_block_input_must_be_companion():
    with pytest.raises(SplitError, match="companion"):
        split_block(Mat([[1, 1], [1, 1]], F4))


def test_certificate_records(rng):
    A = random_matrix(8, F8, rng)
    cert = split_any(A)
    assert cert.potency_s == 8 and cert.diagonalizable
    assert sum(b.degree for b in cert.blocks) == 8
    assert sum(k for _, k in cert.eigenvalues) == 8
    assert all(cert.checks.values())
