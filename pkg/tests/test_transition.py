"""Tests for the dimerization solver, sweeps and the onset exponent fit."""

import math

import numpy as np
import pytest

from ljchain.energy import bipartite_energy, equidistant_energy
from ljchain.landau import critical_point
from ljchain.potential import mie_potential, PotentialSpec
from ljchain.transition import (
    BracketError,
    DeltaSolution,
    PowerLawFit,
    stationarity_residual,
    solve_delta,
    delta_sweep,
    fit_beta,
    energy_curve,
)

SPEC = mie_potential(12, 6)
A_C = critical_point(SPEC).A_c


# ------------------------------------------------------------------ the solver

def test_trivial_below_crossing():
    for A in (0.5, 0.9, A_C * 0.999, A_C):
        sol = solve_delta(SPEC, A)
        assert sol.branch == "trivial"
        assert sol.Delta == 1.0
        assert sol.residual == 0.0


def test_bipartite_above_crossing():
    sol = solve_delta(SPEC, 1.2)
    assert sol.branch == "bipartite"
    assert sol.Delta > 1.0
    assert sol.residual <= 1e-11


def test_solution_satisfies_public_residual():
    for A in (1.11, 1.3, 2.0, 5.0):
        sol = solve_delta(SPEC, A)
        delta = 1.0 / (1.0 + sol.Delta)
        assert abs(stationarity_residual(SPEC, A, delta)) < 1e-9


def test_solution_is_energy_minimum():
    # scan the energy over Delta at fixed A and compare to the solver;
    # also check positive curvature via a second difference
    A = 2.0
    sol = solve_delta(SPEC, A)
    E_at = bipartite_energy(SPEC, A, sol.Delta).value
    h = 1e-4 * sol.Delta
    E_up = bipartite_energy(SPEC, A, sol.Delta + h).value
    E_dn = bipartite_energy(SPEC, A, sol.Delta - h).value
    assert E_at < E_up and E_at < E_dn
    assert E_up + E_dn - 2.0 * E_at > 0.0
    grid = np.linspace(1.0, 2.0 * A - 1.0, 2001)[1:-1]
    vals = [bipartite_energy(SPEC, A, d).value for d in grid]
    best = grid[int(np.argmin(vals))]
    assert best == pytest.approx(sol.Delta, abs=grid[1] - grid[0])


def test_large_A_asymptote():
    # Delta -> 2A - 1 as the outer gap swallows the whole cell
    sol = solve_delta(SPEC, 50.0)
    assert sol.branch == "bipartite"
    assert abs(sol.Delta - 99.0) < 0.01
    assert sol.Delta < 99.0


def test_asymptote_margin_stays_positive():
    # the bound Delta < 2A - 1 must hold strictly wherever doubles can
    # still represent the margin (it shrinks like (2A)^-m)
    for A in (10.0, 30.0, 55.0):
        sol = solve_delta(SPEC, A)
        assert sol.Delta < 2.0 * A - 1.0
    # far out the margin drops below one ulp; never exceed the bound
    for A in (100.0, 1000.0):
        sol = solve_delta(SPEC, A)
        assert sol.Delta <= 2.0 * A - 1.0


def test_solver_no_bracket_failures_over_wide_range():
    for f in np.geomspace(1.0 + 1e-10, 1e6, 40):
        sol = solve_delta(SPEC, A_C * float(f))
        assert sol.branch == "bipartite"
        assert sol.Delta > 1.0


def test_onset_continuity():
    # just above the crossing the order parameter comes up from zero
    sol = solve_delta(SPEC, A_C + 1e-12)
    assert sol.branch == "bipartite"
    assert 0.0 < sol.Delta - 1.0 < 1e-5


def test_onset_amplitude_matches_square_root_law():
    # Delta - 1 ~ 2 sqrt(-E2'/(2 E4)) sqrt(A - A_c) very close to onset
    from ljchain.landau import landau_E2_E4_closed, E2_slope_closed
    amp_eps = math.sqrt(-E2_slope_closed(SPEC, A_C)
                        / (2.0 * landau_E2_E4_closed(SPEC, A_C).E4))
    x = 1e-10
    sol = solve_delta(SPEC, A_C + x)
    assert sol.Delta - 1.0 == pytest.approx(amp_eps * math.sqrt(x), rel=1e-3)


def test_solver_input_validation():
    with pytest.raises(ValueError):
        solve_delta(SPEC, 0.0)
    with pytest.raises(ValueError):
        solve_delta(PotentialSpec(SPEC.components), 1.2)
    with pytest.raises(ValueError):
        stationarity_residual(SPEC, 1.2, 0.6)
    with pytest.raises(ValueError):
        stationarity_residual(SPEC, 1.2, 0.0)


def test_solution_record_invariants():
    with pytest.raises(ValueError):
        DeltaSolution(1.0, 0.5, 0.0, "bipartite")
    with pytest.raises(ValueError):
        DeltaSolution(1.0, 1.5, 0.0, "nonsense")


# ---------------------------------------------------------------------- sweeps

def test_sweep_monotone_and_bounded():
    grid = np.linspace(1.0, 3.0, 41)
    sols = delta_sweep(SPEC, grid)
    deltas = [s.Delta for s in sols]
    assert all(x <= y for x, y in zip(deltas, deltas[1:]))
    for s in sols:
        assert 1.0 <= s.Delta
        if s.A > 1.0:
            assert s.Delta < 2.0 * s.A - 1.0
        assert (s.branch == "trivial") == (s.Delta == 1.0)
        if s.A <= A_C:
            assert s.branch == "trivial"
        if s.A >= A_C * 1.001:
            assert s.branch == "bipartite"


def test_sweep_other_pair():
    spec = mie_potential(7, 6)
    ac = critical_point(spec).A_c
    sols = delta_sweep(spec, np.linspace(1.0, 3.0, 21))
    for s in sols:
        if s.branch == "bipartite":
            assert s.A > ac
            assert s.residual < 1e-10


# ------------------------------------------------------------------- beta fits

@pytest.mark.parametrize("n,m", [(12, 6), (7, 6)])
def test_beta_fit(n, m):
    fit = fit_beta(mie_potential(n, m))
    assert isinstance(fit, PowerLawFit)
    assert fit.exponent == pytest.approx(0.5, abs=1e-3)
    assert fit.r_squared > 0.99999
    assert fit.theory_exponent == 0.5
    # amplitude: the pinned-exponent refit removes slope leverage and
    # must match the Landau prediction at the percent level
    assert fit.prefactor_at_theory_exponent == \
        pytest.approx(fit.theory_prefactor, rel=1e-2)


def test_beta_fit_window_control():
    fit = fit_beta(SPEC, window=(1e-7, 1e-5), n_points=10)
    assert fit.window == (1e-7, 1e-5)
    assert fit.n_points == 10
    assert fit.exponent == pytest.approx(0.5, abs=1e-3)


def test_beta_fit_rejects_bad_window():
    with pytest.raises(ValueError):
        fit_beta(SPEC, window=(1e-4, 1e-8))
    with pytest.raises(ValueError):
        fit_beta(SPEC, window=(0.0, 1e-4))
    with pytest.raises(ValueError):
        fit_beta(SPEC, n_points=5)


# ---------------------------------------------------------------- energy curve

def test_energy_curve_phases_and_continuity():
    grid = np.linspace(0.95, 1.6, 66)
    rows = energy_curve(SPEC, grid)
    for row in rows:
        if row.A <= A_C:
            assert row.phase == "equidistant"
            assert row.E_ground == row.E_equidistant_continuation
            assert row.Delta == 1.0
        if row.A > A_C * 1.0001:
            assert row.phase == "bipartite"
            # the dimerized state strictly undercuts the symmetric one
            assert row.E_ground < row.E_equidistant_continuation
            assert row.Delta > 1.0


def test_energy_curve_continuous_at_crossing():
    lo = energy_curve(SPEC, [A_C * (1.0 - 1e-11)])[0]
    hi = energy_curve(SPEC, [A_C * (1.0 + 1e-11)])[0]
    assert hi.E_ground == pytest.approx(lo.E_ground, abs=1e-10)


def test_energy_gain_scales_quadratically_in_distance():
    # second-order transition: E_eq - E_ground ~ (A - A_c)^2 near onset
    xs = np.geomspace(1e-4, 1e-2, 9)
    gains = []
    for x in xs:
        row = energy_curve(SPEC, [A_C + float(x)])[0]
        gains.append(row.E_equidistant_continuation - row.E_ground)
    assert all(g > 0.0 for g in gains)
    slope = np.polyfit(np.log(xs), np.log(gains), 1)[0]
    assert slope == pytest.approx(2.0, abs=0.05)
