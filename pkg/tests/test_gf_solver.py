"""Count recursion, exact linear solve, recurrences, and cross-agreement."""

from math import inf

import pytest

from bounded_catalan.core_combinatorics import iter_constrained_avoiders
from bounded_catalan.gf_solver import (
    dp_counts,
    generating_function,
    recurrence,
    recurrence_order_bound,
    solve_system,
)
from bounded_catalan.polynomial_algebra import (
    ExactPoly,
    RationalFn,
    rf_reduce,
    series_coeffs,
)
from bounded_catalan.state_system import build_system

A2_SEQ = [1, 1, 2, 5, 8, 12, 18, 26, 37, 53, 76, 109]
A3_SEQ = [1, 1, 2, 5, 14, 28, 55, 108, 214, 412, 787, 1497, 2841, 5364, 10088]

N3 = ExactPoly([1, -1, -1, 1, 4, 0, -4, -3, -3, -5, -3, 2, 2])
D3 = ExactPoly([1, -2, -1, 1, 1, 2, 2, 2, -4, -2, 1, -2, 0, 1])


def test_dp_goldens():
    table = dp_counts(2, 12)
    assert table.unrestricted()[:12] == A2_SEQ
    table3 = dp_counts(3, 14)
    assert table3.unrestricted() == A3_SEQ
    assert table3.values[(inf, inf)][14] == 10088


def test_dp_length_one_counts():
    for m in (1, 2, 3, 4):
        table = dp_counts(m, 3)
        for state, row in table.values.items():
            assert row[1] == 1, state


def test_dp_validates_arguments():
    with pytest.raises(ValueError):
        dp_counts(0, 5)
    with pytest.raises(ValueError):
        dp_counts(2, 0)


def test_solve_system_state_goldens_m2():
    sol = solve_system(build_system(2))
    x = ExactPoly([0, 1])
    one_minus_x = ExactPoly([1, -1])
    p2 = ExactPoly([1, -1, 0, -1])
    assert sol[(0, 1)] == RationalFn(x, one_minus_x)
    assert sol[(1, 0)] == RationalFn(x, one_minus_x)
    assert sol[(inf, 1)] == RationalFn(x, one_minus_x ** 2)
    assert sol[(1, inf)] == rf_reduce(ExactPoly([0, 1, 0, 1, -1]), one_minus_x * p2)
    assert sol[(0, inf)] == rf_reduce(x * ExactPoly([1, -1, 1]), one_minus_x * p2)
    assert len(sol) == 9


def test_generating_function_goldens():
    assert generating_function(1) == RationalFn(ExactPoly([1, 0, 1]), ExactPoly([1, -1]))
    g2 = generating_function(2)
    assert g2.num == ExactPoly([1, -2, 2, 0, -1, 0, -1])
    assert g2.den == ExactPoly([1, -1]) ** 2 * ExactPoly([1, -1, 0, -1])
    g3 = generating_function(3)
    assert g3.num == N3
    assert g3.den == D3


def test_generating_function_agrees_with_full_solve():
    for m in (1, 2, 3, 4):
        sys_m = build_system(m)
        sol = solve_system(sys_m)
        f = sol[sys_m.output_state]
        a = rf_reduce(f.num + f.den, f.den)
        assert a == generating_function(m)


def test_recurrence_goldens():
    r3 = recurrence(3)
    assert r3.order == 13
    assert [int(c) for c in r3.lag_coeffs] == [2, 1, -1, -1, -2, -2, -2, 4, 2, -1, 2, 0, -1]
    assert r3.valid_from == 13
    r1 = recurrence(1)
    assert (r1.order, list(r1.lag_coeffs), r1.valid_from) == (1, [1], 3)
    r2 = recurrence(2)
    assert r2.order == 5
    assert [int(c) for c in r2.lag_coeffs] == [3, -3, 2, -2, 1]


@pytest.mark.parametrize("m", range(1, 7))
def test_recurrence_replay(m):
    rec = recurrence(m)
    seq = dp_counts(m, rec.valid_from + 50).unrestricted()
    assert rec.extend(seq[: rec.valid_from], 50) == seq[rec.valid_from : rec.valid_from + 50]


def test_recurrence_order_bound():
    assert recurrence_order_bound(1) == 1
    assert recurrence_order_bound(2) == 9
    assert recurrence_order_bound(3) == 25


@pytest.mark.parametrize("m", range(2, 9))
def test_reduced_denominator_within_bound(m):
    assert generating_function(m).den.degree <= recurrence_order_bound(m)


@pytest.mark.parametrize("m", range(1, 6))
def test_three_way_agreement_all_states(m):
    """Brute force == count recursion == series coefficients, all states."""
    n_top = 10
    table = dp_counts(m, n_top)
    sys_m = build_system(m)
    series = {
        state: series_coeffs(f, n_top) for state, f in solve_system(sys_m).items()
    }
    thresholds = list(range(m)) + [inf]
    for n in range(1, n_top + 1):
        # one enumeration per n; every threshold pair is a cumulative count
        deficiencies = [
            (n - perm[0], n - perm[-1]) for perm in iter_constrained_avoiders(n, m)
        ]
        for p in thresholds:
            for q in thresholds:
                brute = sum(1 for d1, d2 in deficiencies if d1 <= p and d2 <= q)
                assert table.values[(p, q)][n] == brute, (m, n, p, q)
                assert series[(p, q)][n] == brute, (m, n, p, q)
    # bind the public oracle signature to the same values on a sample
    from bounded_catalan.core_combinatorics import brute_force_count

    for p in (0, m - 1, inf):
        for q in (0, inf):
            assert brute_force_count(m, 6, p, q) == table.values[(p, q)][6]


@pytest.mark.parametrize("m", range(1, 7))
def test_dp_matches_series_deep(m):
    seq = dp_counts(m, 200).unrestricted()
    coeffs = series_coeffs(generating_function(m), 200)
    assert all(c.denominator == 1 for c in coeffs)
    assert [int(c) for c in coeffs] == seq


def test_state_series_are_nonnegative_integers():
    for m in (1, 2, 3, 4):
        sol = solve_system(build_system(m))
        for state, f in sol.items():
            coeffs = series_coeffs(f, 100)
            for n, c in enumerate(coeffs):
                assert c.denominator == 1 and c >= 0, (m, state, n)
