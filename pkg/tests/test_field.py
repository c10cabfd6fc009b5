import pytest
import sympy
from hypothesis import given, strategies as st

from gf2split.field import (
    DEFAULT_MODULI,
    FieldError,
    fe_div,
    fe_in_subfield,
    fe_inv,
    fe_mul,
    fe_pow,
    fe_sqrt,
    is_irreducible,
    make_field,
    parse_field,
    subfield_elements,
)

from conftest import naive_mul

x = sympy.symbols("x")


def _sympy_irreducible(p):
    coeffs = [(p >> i) & 1 for i in range(p.bit_length() - 1, -1, -1)]
    return sympy.Poly(coeffs, x, modulus=2).is_irreducible


@pytest.mark.parametrize("m", range(1, 17))
def test_default_modulus_is_smallest_irreducible(m):
    p = DEFAULT_MODULI[m]
    assert p.bit_length() - 1 == m
    assert _sympy_irreducible(p)
    # nothing smaller of the same degree is irreducible
    for smaller in range(1 << m, p):
        assert not _sympy_irreducible(smaller)


def test_is_irreducible_matches_sympy():
    for p in range(2, 1 << 9):
        assert is_irreducible(p) == _sympy_irreducible(p), hex(p)


def test_gf4_generator_relation():
    F = make_field(2)
    a = F.generator
    assert fe_mul(a, a, F) == a ^ 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 8])
def test_mul_matches_schoolbook(m):
    F = make_field(m)
    q = min(F.q, 64)
    for u in range(q):
        for v in range(q):
            assert fe_mul(u, v, F) == naive_mul(u, v, F.modulus)


elements16 = st.integers(0, 15)


@given(elements16, elements16, elements16)
def test_field_axioms_gf16(u, v, w):
    F = make_field(4)
    assert fe_mul(u, fe_mul(v, w, F), F) == fe_mul(fe_mul(u, v, F), w, F)
    assert fe_mul(u, v ^ w, F) == fe_mul(u, v, F) ^ fe_mul(u, w, F)
    assert fe_mul(u, v, F) == fe_mul(v, u, F)


@given(st.integers(1, 255))
def test_inverse_and_division(u):
    F = make_field(8)
    assert fe_mul(u, fe_inv(u, F), F) == 1
    assert fe_div(u, u, F) == 1
    assert fe_pow(u, F.q - 1, F) == 1


@given(st.integers(0, (1 << 16) - 1))
def test_sqrt_squares_back(u):
    F = make_field(16)
    r = fe_sqrt(u, F)
    assert fe_mul(r, r, F) == u


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        fe_inv(0, make_field(3))


@pytest.mark.parametrize("m,d", [(4, 1), (4, 2), (4, 4), (6, 3), (6, 2)])
def test_subfield_has_2_to_d_elements(m, d):
    F = make_field(m)
    K = subfield_elements(d, F)
    assert len(K) == 1 << d
    for u in K:
        for v in K:
            assert fe_in_subfield(fe_mul(u, v, F), d, F)


def test_not_a_subfield():
    with pytest.raises(FieldError, match="not a subfield"):
        fe_in_subfield(1, 3, make_field(4))


def test_invalid_inputs():
    with pytest.raises(FieldError, match="invalid degree"):
        make_field(0)
    with pytest.raises(FieldError, match="invalid degree"):
        make_field(17)
    with pytest.raises(FieldError, match="invalid modulus"):
        make_field(2, 0b101)  # x^2 + 1 = (x + 1)^2


def test_designation_round_trip():
    for m in range(1, 17):
        F = make_field(m)
        assert parse_field(F.designation()) == F
    assert parse_field("gf(2^3)") == make_field(3)
    assert make_field(8, 0x11D).designation() == "gf(2^8)[modulus=0x11d]"
    with pytest.raises(FieldError):
        parse_field("gf(3^2)")
