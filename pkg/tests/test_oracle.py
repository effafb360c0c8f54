"""Tests for the direct-summation and stencil-derivative oracles."""

import math

import pytest

from ljchain.energy import riesz_lattice_sum, bipartite_energy
from ljchain.oracle import (
    TruncationPlan,
    plan_truncation,
    direct_bipartite_sum,
    brute_force_energy,
    richardson_derivative,
)
from ljchain.potential import mie_potential


# ------------------------------------------------------------- truncation plan

def test_plan_truncation_basics():
    plan = plan_truncation(6.0, 1e-10)
    assert isinstance(plan, TruncationPlan)
    assert plan.J_max >= 64
    assert plan.target_rel == 1e-10
    # the planned tail bound must land strictly below the requested target
    assert 0.0 < plan.tail_bound < plan.target_rel


@pytest.mark.parametrize("s", [1.5, 2.5, 6.0, 12.0])
def test_plan_truncation_tail_below_target(s):
    for target in (1e-6, 1e-10, 1e-12):
        plan = plan_truncation(s, target)
        assert plan.tail_bound < target


def test_plan_truncation_rejects_bad_args():
    with pytest.raises(ValueError):
        plan_truncation(6.0, 1e-13)
    with pytest.raises(ValueError):
        plan_truncation(1.0)
    with pytest.raises(ValueError):
        plan_truncation(0.5)


# ---------------------------------------------------------------- direct sums

CASES = [
    (6.0, 1.0, 1.0),
    (12.0, 1.1, 1.5),
    (3.5, 0.9, 2.2),
    (7.0, 2.0, 4.0),
    (2.5, 1.3, 1.02),
    (6.0, 1.10865, 1.001),
]


@pytest.mark.parametrize("s,A,Delta", CASES)
def test_direct_sum_matches_closed_form(s, A, Delta):
    closed = riesz_lattice_sum(s, A, Delta)
    direct = direct_bipartite_sum(s, A, Delta, target_rel=1e-10)
    tol = direct.est_error + 1e-12 * abs(closed)
    assert abs(direct.value - closed) <= tol
    assert direct.method == "brute_force"


@pytest.mark.parametrize("s,A,Delta", CASES)
def test_direct_sum_error_bound_is_honest(s, A, Delta):
    # doubling the cutoff must move the value by less than the reported
    # bound (tiny slack for the roundoff floor itself)
    base = direct_bipartite_sum(s, A, Delta, target_rel=1e-10)
    plan = plan_truncation(s, 1e-10)
    finer = direct_bipartite_sum(s, A, Delta, J=2 * plan.J_max)
    assert abs(base.value - finer.value) <= base.est_error * (1.0 + 1e-6) + 1e-300


def test_direct_sum_gap_ratio_symmetry():
    a = direct_bipartite_sum(7.0, 1.2, 3.0)
    b = direct_bipartite_sum(7.0, 1.2, 1.0 / 3.0)
    assert a.value == pytest.approx(b.value, rel=1e-14)


def test_direct_sum_rejects_unreachable_target():
    with pytest.raises(ValueError):
        direct_bipartite_sum(6.0, 1.0, 1.0, target_rel=1e-14)


def test_brute_force_energy_matches_closed():
    spec = mie_potential(12, 6)
    for A, Delta in [(1.0, 1.0), (1.2, 1.3), (1.5, 2.5)]:
        closed = bipartite_energy(spec, A, Delta)
        direct = brute_force_energy(spec, A, Delta)
        assert direct.value == pytest.approx(closed.value, rel=1e-9)
        assert abs(direct.value - closed.value) <= \
            direct.est_error + closed.est_error + 1e-12 * abs(closed.value)


def test_brute_force_energy_hard_core_block():
    spec = mie_potential(12, 6, sigma=1.5)
    r = brute_force_energy(spec, 1.0, 1.0)   # spacing 1.0 < sigma
    assert math.isinf(r.value) and r.value > 0
    assert r.est_error == 0.0


# ------------------------------------------------------- stencil differentiator

def test_richardson_exact_on_matching_degree():
    # d^k/dx^k of x^k is k! and central stencils get it exactly
    for order in range(1, 7):
        val, err = richardson_derivative(lambda x, p=order: x ** p, 1.3,
                                         order, h0=0.5)
        assert val == pytest.approx(math.factorial(order), rel=1e-9)


def test_richardson_on_cubic():
    def f(x):
        return 3.0 * x ** 3 - 2.0 * x ** 2 + x - 5.0

    val, _ = richardson_derivative(f, 0.7, 1, h0=0.1)
    assert val == pytest.approx(9.0 * 0.49 - 4.0 * 0.7 + 1.0, rel=1e-11)
    val, _ = richardson_derivative(f, 0.7, 2, h0=0.1)
    assert val == pytest.approx(18.0 * 0.7 - 4.0, rel=1e-11)
    val, _ = richardson_derivative(f, 0.7, 3, h0=0.1)
    assert val == pytest.approx(18.0, rel=1e-11)


@pytest.mark.parametrize("order,h0,tol", [
    (1, 1e-2, 1e-11), (2, 1e-2, 1e-9), (3, 5e-2, 1e-8),
    (4, 1e-1, 1e-7), (5, 2e-1, 1e-6), (6, 3e-1, 1e-5),
])
def test_richardson_on_exponential(order, h0, tol):
    x0 = 0.3
    val, err = richardson_derivative(math.exp, x0, order, h0=h0)
    want = math.exp(x0)
    assert val == pytest.approx(want, rel=tol)
    # the reported error must not be wildly optimistic
    assert abs(val - want) <= max(100.0 * err, tol * want)


def test_richardson_error_estimate_tracks_difficulty():
    # derivative of a gentle function should report a much smaller error
    # than the same request on a stiff one
    _, easy = richardson_derivative(math.exp, 0.0, 2, h0=1e-2)
    _, hard = richardson_derivative(lambda x: math.exp(40.0 * x), 0.0, 2,
                                    h0=1e-2)
    assert easy < hard


def test_richardson_rejects_bad_args():
    with pytest.raises(ValueError):
        richardson_derivative(math.exp, 0.0, 0)
    with pytest.raises(ValueError):
        richardson_derivative(math.exp, 0.0, 7)
    with pytest.raises(ValueError):
        richardson_derivative(math.exp, 0.0, 1, h0=0.0)
    with pytest.raises(ValueError):
        richardson_derivative(math.exp, 0.0, 1, levels=1)


def test_richardson_propagates_non_finite():
    with pytest.raises(ValueError):
        richardson_derivative(lambda x: math.nan, 1.0, 1)
    with pytest.raises(ValueError):
        richardson_derivative(lambda x: math.inf, 1.0, 2)
