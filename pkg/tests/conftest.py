import numpy as np
import pytest
from hypothesis import settings

from gf2split.field import make_field

# first calls compile numba kernels; wall-clock deadlines would be noise
settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def naive_mul(x, y, modulus):
    """Schoolbook carry-less product, reduced afterwards."""
    prod = 0
    for i in range(y.bit_length()):
        if (y >> i) & 1:
            prod ^= x << i
    deg = modulus.bit_length() - 1
    while prod.bit_length() - 1 >= deg:
        prod ^= modulus << (prod.bit_length() - 1 - deg)
    return prod


def naive_matmul(A, B, modulus):
    A, B = np.asarray(A).tolist(), np.asarray(B).tolist()
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = 0
            for t, x in enumerate(row):
                acc ^= naive_mul(x, B[t][j], modulus)
            new.append(acc)
        out.append(new)
    return np.array(out, dtype=np.int64)


@pytest.fixture(params=[2, 3, 4], ids=["gf4", "gf8", "gf16"])
def field(request):
    return make_field(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
