from itertools import combinations

import pytest

from griddom import (CapacityError, GridDims, Vertex, coverage_map,
                     exact_gamma_bruteforce, exact_gamma_dp, oracle_vs_formula)


def reference_minimum(m, n, variant="domination"):
    """Reference search built on the verifier, kept independent of the oracle
    module's bitmask machinery."""
    d = GridDims(m, n)
    cells = [Vertex(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    for k in range(len(cells) + 1):
        for combo in combinations(cells, k):
            rep = coverage_map(d, set(combo))
            feasible = rep.is_one_two if variant == "one-two" else rep.is_dominating
            if feasible:
                return k, combo
    raise AssertionError


def test_bruteforce_tiny_values():
    assert exact_gamma_bruteforce(GridDims(1, 1)).value == 1
    assert exact_gamma_bruteforce(GridDims(2, 2)).value == 2
    assert exact_gamma_bruteforce(GridDims(3, 3)).value == 3


def test_bruteforce_lexicographic_witness():
    for (m, n) in [(3, 3), (2, 4), (4, 3)]:
        res = exact_gamma_bruteforce(GridDims(m, n))
        value, combo = reference_minimum(m, n)
        assert res.value == value
        assert res.witness == combo
        assert res.work > 0


def test_bruteforce_one_two_matches_reference():
    for (m, n) in [(2, 3), (3, 4), (1, 6)]:
        res = exact_gamma_bruteforce(GridDims(m, n), "one-two")
        value, _ = reference_minimum(m, n, "one-two")
        assert res.value == value


def test_bruteforce_capacity():
    with pytest.raises(CapacityError, match="exact_gamma_dp"):
        exact_gamma_bruteforce(GridDims(3, 7))


def test_bad_variant_rejected():
    with pytest.raises(ValueError):
        exact_gamma_bruteforce(GridDims(2, 2), "total")
    with pytest.raises(ValueError):
        exact_gamma_dp(GridDims(2, 2), "total")


def test_dp_matches_bruteforce_spot():
    for (m, n) in [(4, 4), (2, 5), (5, 4), (1, 9), (3, 6)]:
        for variant in ("domination", "one-two"):
            b = exact_gamma_bruteforce(GridDims(m, n), variant)
            d = exact_gamma_dp(GridDims(m, n), variant)
            assert b.value == d.value, (m, n, variant)


def test_dp_12x12_value_and_witness():
    # 35 cross-checked against an independent integer-programming solve
    res = exact_gamma_dp(GridDims(12, 12))
    assert res.value == 35
    assert res.witness is not None and len(res.witness) == 35
    assert res.witness == tuple(sorted(res.witness))
    assert coverage_map(GridDims(12, 12), set(res.witness)).is_dominating
    assert res.method == "profile-dp" and res.work > 0


def test_dp_deterministic():
    a = exact_gamma_dp(GridDims(6, 9))
    b = exact_gamma_dp(GridDims(6, 9))
    assert a.witness == b.witness and a.value == b.value


def test_dp_transposes_internally():
    tall = exact_gamma_dp(GridDims(11, 4))
    wide = exact_gamma_dp(GridDims(4, 11))
    assert tall.value == wide.value
    assert coverage_map(GridDims(11, 4), set(tall.witness)).is_dominating


def test_dp_width_caps():
    with pytest.raises(CapacityError, match="3\\*\\*13"):
        exact_gamma_dp(GridDims(13, 40))
    with pytest.raises(CapacityError, match="4\\*\\*11"):
        exact_gamma_dp(GridDims(11, 12), "one-two")
    # the cap is a parameter, not a constant
    with pytest.raises(CapacityError):
        exact_gamma_dp(GridDims(5, 5), width_cap=4)
    assert exact_gamma_dp(GridDims(5, 5), width_cap=5).value == \
        exact_gamma_dp(GridDims(5, 5)).value


def test_dp_witness_dropped_over_budget():
    res = exact_gamma_dp(GridDims(4, 8), backpointer_budget=64)
    full = exact_gamma_dp(GridDims(4, 8))
    assert res.value == full.value
    assert res.witness is None and res.witness_dropped
    assert full.witness is not None and not full.witness_dropped


def test_one_two_at_least_domination():
    for (m, n) in [(3, 5), (4, 6), (2, 9), (6, 6)]:
        g = exact_gamma_dp(GridDims(m, n), "domination").value
        g12 = exact_gamma_dp(GridDims(m, n), "one-two").value
        assert g <= g12


def test_gamma_monotone_in_n():
    for m in (2, 3, 4):
        values = [exact_gamma_dp(GridDims(m, n)).value for n in range(1, 9)]
        assert values == sorted(values)


def test_one_two_witness_feasible():
    res = exact_gamma_dp(GridDims(7, 9), "one-two")
    rep = coverage_map(GridDims(7, 9), set(res.witness))
    assert rep.is_one_two


def test_one_two_10x10_value():
    # 24, cross-checked against an independent integer-programming solve
    res = exact_gamma_dp(GridDims(10, 10), "one-two", return_witness=False)
    assert res.value == 24


def test_oracle_vs_formula_small_grid():
    cmp = oracle_vs_formula(GridDims(4, 4))
    assert cmp.oracle_value == 4
    assert cmp.formula_value is None and cmp.equal is None


def test_oracle_vs_formula_needs_width():
    with pytest.raises(CapacityError):
        oracle_vs_formula(GridDims(16, 16))
