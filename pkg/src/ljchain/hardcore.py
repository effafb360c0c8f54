"""Dimerization under a hard-core diameter constraint.

Adding a hard core of radius sigma to the n-m potential restricts the
two-periodic chain to min(a, b) >= sigma, i.e. Delta <= 2A/sigma - 1.
Three regimes emerge:

  * sigma <= 1: the constraint never binds (the unconstrained optimum
    always keeps gaps above 1 > sigma), nothing changes.
  * 1 < sigma <= A_c: the unconstrained branch is followed from the
    crossing up to a junction spacing A_star where the growing optimal
    Delta hits the constraint; beyond it the minimizer rides the
    boundary Delta = 2A/sigma - 1.
  * sigma > A_c: the symmetric chain is already squeezed at onset and
    the boundary branch starts right at A = sigma.

The junction condition replaces 2A by sigma/delta in the stationarity
equation (on the boundary the short gap is pinned to sigma), giving a
single equation for delta_star alone.  Its solution behaves like

    delta_star ~ [ (n-m)(sigma-1) / (2 (m+1) zeta(m+2)) ]^{1/(m+2)}

as sigma -> 1, so A_star = sigma/(2 delta_star) diverges with the
non-universal exponent -1/(m+2); fit_tau measures it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .potential import PotentialSpec
from .specfun import half_point_odd_series, small_gap_odd_series, riemann_zeta
from .transition import (
    DeltaSolution,
    PowerLawFit,
    solve_delta,
    _crossing_A,
    _loglog_fit,
)

__all__ = [
    "HardCoreConfig",
    "JunctionPoint",
    "InfeasibleError",
    "NoJunctionError",
    "junction",
    "constrained_delta",
    "hardcore_sweep",
    "tau_theory_prefactor",
    "fit_tau",
]

_EDGE_BAND = 1e-14              # regime edges resolved toward the lower regime
_ONSET_GUARD = 1e-14            # same band as the unconstrained solver


class InfeasibleError(ValueError):
    """No chain of the requested density fits outside the hard core."""


class NoJunctionError(ValueError):
    """Junction point requested outside the regime where one exists."""


@dataclass(frozen=True)
class HardCoreConfig:
    """An n-m potential together with the hard-core radius to enforce."""
    params: PotentialSpec
    sigma: float

    def __post_init__(self):
        if self.params.mie is None:
            raise ValueError("hard-core analysis requires an n-m potential")
        if not self.sigma > 0.0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class JunctionPoint:
    """Where the unconstrained optimum meets the boundary branch."""
    A_star: float
    Delta_star: float
    delta_star: float
    residual: float


def _junction_residual(n: float, m: float, lsig: float, d: float) -> float:
    # stationarity condition with 2A replaced by sigma/delta; decreasing
    # in d, positive as d -> 0+, nonpositive at d = 1/2 when sigma <= A_c
    if d >= 0.25:
        u = 0.5 - d
        return math.log(half_point_odd_series(m + 1.0, u)
                        / half_point_odd_series(n + 1.0, u)) \
            - (m - n) * (lsig - math.log(d))
    vm = small_gap_odd_series(m + 1.0, d)
    vn = small_gap_odd_series(n + 1.0, d)
    return (math.log1p(-d ** (m + 1.0) * vm)
            - math.log1p(-d ** (n + 1.0) * vn)
            + (n - m) * lsig)


@lru_cache(maxsize=None)
def _junction_cached(n: float, m: float, sigma: float) -> JunctionPoint:
    A_c = _crossing_A((n, m))
    if not sigma > 1.0 + _EDGE_BAND:
        raise NoJunctionError("no junction for sigma <= 1 (constraint never binds)")
    if sigma > A_c * (1.0 + _EDGE_BAND):
        raise NoJunctionError("no junction for sigma > A_c (boundary from onset)")
    # log(sigma) through log1p keeps full precision for sigma = 1 + tiny
    lsig = math.log1p(sigma - 1.0)
    lo, hi = 1e-16, 0.5
    f_lo = _junction_residual(n, m, lsig, lo)
    f_hi = _junction_residual(n, m, lsig, hi)
    if not (f_lo > 0.0 >= f_hi):
        raise NoJunctionError(
            f"junction bracket failed for sigma={sigma!r}: "
            f"f({lo:g})={f_lo:g}, f(0.5)={f_hi:g}")
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if _junction_residual(n, m, lsig, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    d = hi
    A_star = 0.5 * sigma / d
    return JunctionPoint(A_star, 1.0 / d - 1.0, d,
                         abs(_junction_residual(n, m, lsig, d)))


def junction(config: HardCoreConfig) -> JunctionPoint:
    """Junction of the unconstrained and boundary branches.

    Exists for 1 < sigma <= A_c; raises NoJunctionError otherwise.  On
    the junction Delta_star = 2 A_star / sigma - 1 by construction.
    """
    n, m = config.params.mie
    return _junction_cached(n, m, config.sigma)


def constrained_delta(config: HardCoreConfig, A: float) -> DeltaSolution:
    """Optimal gap ratio subject to the hard-core feasibility bound.

    Raises InfeasibleError when even the symmetric chain cannot fit
    (A < sigma).  branch is `boundary` wherever the constraint is
    active.
    """
    if not A > 0.0:
        raise ValueError("A must be positive")
    sigma = config.sigma
    if A < sigma * (1.0 - _EDGE_BAND):
        raise InfeasibleError(
            f"A={A!r} below hard-core radius {sigma!r}: no feasible chain")
    n, m = config.params.mie
    A_c = _crossing_A((n, m))
    if sigma <= 1.0 + _EDGE_BAND:
        return solve_delta(config.params, A)
    if sigma <= A_c * (1.0 + _EDGE_BAND):
        if A <= A_c * (1.0 + _ONSET_GUARD):
            return DeltaSolution(A, 1.0, 0.0, "trivial")
        jp = junction(config)
        if A < jp.A_star:
            return solve_delta(config.params, A)
        Delta = 2.0 * A / sigma - 1.0
        return DeltaSolution(A, Delta, 0.0, "boundary")
    # sigma above A_c: boundary branch directly from A = sigma
    Delta = 2.0 * A / sigma - 1.0
    if Delta <= 1.0:
        return DeltaSolution(A, 1.0, 0.0, "trivial")
    return DeltaSolution(A, Delta, 0.0, "boundary")


def hardcore_sweep(config: HardCoreConfig, A_grid) -> list[DeltaSolution]:
    """constrained_delta across a grid of spacings."""
    return [constrained_delta(config, float(A)) for A in A_grid]


def tau_theory_prefactor(spec: PotentialSpec) -> float:
    """Amplitude of A_star ~ C (sigma-1)^{-1/(m+2)} as sigma -> 1.

    From the leading term of the junction condition,
    C = (1/2) [2 (m+1) zeta(m+2) / (n-m)]^{1/(m+2)}.
    """
    if spec.mie is None:
        raise ValueError("requires an n-m potential")
    n, m = spec.mie
    return 0.5 * (2.0 * (m + 1.0) * riemann_zeta(m + 2.0)
                  / (n - m)) ** (1.0 / (m + 2.0))


def fit_tau(spec: PotentialSpec, window: tuple[float, float] = (1e-12, 1e-9),
            n_points: int = 12) -> PowerLawFit:
    """Power-law fit of the junction spacing against sigma - 1.

    Measures the non-universal divergence exponent -1/(m+2); the pinned
    amplitude is the robust estimate to compare against
    tau_theory_prefactor.
    """
    lo, hi = window
    if not 0.0 < lo < hi:
        raise ValueError("bad window")
    n, m = spec.mie if spec.mie is not None else (None, None)
    if n is None:
        raise ValueError("requires an n-m potential")
    xs = np.geomspace(lo, hi, n_points)
    ys = []
    for x in xs:
        jp = junction(HardCoreConfig(spec, 1.0 + float(x)))
        ys.append(jp.A_star)
    slope, intercept, r2 = _loglog_fit(xs, ys)
    theory_exp = -1.0 / (m + 2.0)
    pinned = float(np.exp(np.mean(np.log(ys) - theory_exp * np.log(xs))))
    return PowerLawFit(
        exponent=slope, prefactor=math.exp(intercept), r_squared=r2,
        window=(float(lo), float(hi)), n_points=int(n_points),
        theory_exponent=theory_exp,
        theory_prefactor=tau_theory_prefactor(spec),
        prefactor_at_theory_exponent=pinned)
