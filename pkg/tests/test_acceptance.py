"""Acceptance criteria 1-9 at full size (seed 0).  Each test prints its
criterion line; the lines are repeated in the pytest terminal summary."""

import pytest

from gf2split.selftest import CRITERIA, run_criterion

SEED = 0
RESULTS = []

TITLES = {
    1: "split_any_square_zero_plus_diagonalizable",
    2: "diagonal_part_satisfies_d_to_the_q",
    3: "gf2_square_zero_plus_4_potent",
    4: "golden_decompositions",
    5: "no_idempotent_split_exhaustive",
    6: "eigenvalue_sets_per_residue_class",
    7: "subfield_potency_gf16_over_gf4",
    8: "oracle_equivalence_gf2",
    9: "rcf_contract",
}


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA), ids=[f"{k}-{TITLES[k]}" for k in sorted(CRITERIA)])
def test_criterion(number):
    res = run_criterion(number, seed=SEED, scale=1.0)
    RESULTS.append(res.line())
    print(res.line())
    assert res.passed, res.line()
