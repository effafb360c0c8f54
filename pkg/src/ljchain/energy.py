"""Ground-state energy per particle of periodic chains.

Two configurations are considered.  The equidistant chain has spacing A
(unit density after rescaling by the particle spacing).  The two-periodic
chain keeps the same density but alternates gaps a and b with

    a = 2 A Delta / (1 + Delta),   b = 2 A / (1 + Delta),

so Delta = a/b measures the dimerization and Delta = 1 recovers the
equidistant case.  For a potential sum_k c_k r^{-s_k} the energy per
particle reduces to Hurwitz zeta combinations: with delta = 1/(1+Delta),

    lattice_sum(s) = (2A)^{-s} [zeta(s) + (zeta(s,delta) + zeta(s,1-delta))/2]

and the equidistant value is sum_k c_k zeta(s_k) A^{-s_k}.  The same
quantities have heat-kernel integral forms through theta functions; the
quadrature paths below exist to cross-check the closed forms and to
handle the structure factors appearing in the Landau expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .potential import PotentialSpec, laplace_weight
from .quadrature import integrate_log_axis
from .specfun import (
    hurwitz_zeta,
    riemann_zeta,
    theta3_minus_one,
    theta_offset,
    theta_derivative,
    zeta_log_derivative,
)

__all__ = [
    "BipartiteChain",
    "EnergyResult",
    "riesz_lattice_sum",
    "equidistant_energy",
    "equidistant_energy_quadrature",
    "bipartite_energy",
    "bipartite_energy_quadrature",
    "equidistant_stationarity_integrals",
    "find_A_min",
    "find_A_min_limit",
]

# closed forms are pure zeta arithmetic; this is the honest scale of
# their roundoff, used for est_error bookkeeping
_CLOSED_REL = 1e-13


@dataclass(frozen=True)
class BipartiteChain:
    """Two-periodic chain geometry at half-spacing A and gap ratio Delta."""
    A: float
    Delta: float

    def __post_init__(self):
        if not self.A > 0.0:
            raise ValueError("A must be positive")
        if not self.Delta > 0.0:
            raise ValueError("Delta must be positive")

    @property
    def a(self) -> float:
        return 2.0 * self.A * self.Delta / (1.0 + self.Delta)

    @property
    def b(self) -> float:
        return 2.0 * self.A / (1.0 + self.Delta)

    @property
    def delta(self) -> float:
        return 1.0 / (1.0 + self.Delta)

    @property
    def eps(self) -> float:
        return math.log(self.Delta)

    @property
    def min_gap(self) -> float:
        return min(self.a, self.b)


@dataclass(frozen=True)
class EnergyResult:
    value: float
    method: str            # closed_form | quadrature | brute_force
    est_error: float

    def __post_init__(self):
        if self.method not in ("closed_form", "quadrature", "brute_force"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.est_error < 0.0:
            raise ValueError("est_error must be nonnegative")


def _canonical_gap_ratio(Delta: float) -> float:
    # energies are invariant under Delta -> 1/Delta (relabeling the two
    # gaps); canonicalizing makes that exact in floating point
    if not Delta > 0.0:
        raise ValueError("Delta must be positive")
    return Delta if Delta >= 1.0 else 1.0 / Delta


def riesz_lattice_sum(s: float, A: float, Delta: float) -> float:
    """Energy per particle of the two-periodic chain for a bare r^-s term."""
    if not s > 1.0:
        raise ValueError("needs s > 1")
    if not A > 0.0:
        raise ValueError("A must be positive")
    d = _canonical_gap_ratio(Delta)
    q = 1.0 + d
    return (2.0 * A) ** -s * (
        riemann_zeta(s) + 0.5 * (hurwitz_zeta(s, d / q) + hurwitz_zeta(s, 1.0 / q)))


def _hard_core_blocked(spec: PotentialSpec, gap: float) -> bool:
    return spec.sigma is not None and gap < spec.sigma


def equidistant_energy(spec: PotentialSpec, A: float) -> EnergyResult:
    """Closed-form energy per particle of the equidistant chain."""
    if not A > 0.0:
        raise ValueError("A must be positive")
    if _hard_core_blocked(spec, A):
        return EnergyResult(math.inf, "closed_form", 0.0)
    acc = 0.0
    mag = 0.0
    for c in spec.components:
        term = c.coefficient * riemann_zeta(c.exponent) * A ** -c.exponent
        acc += term
        mag += abs(term)
    return EnergyResult(acc, "closed_form", _CLOSED_REL * mag)


def bipartite_energy(spec: PotentialSpec, A: float, Delta: float) -> EnergyResult:
    """Closed-form energy per particle of the two-periodic chain."""
    chain = BipartiteChain(A, Delta)
    if _hard_core_blocked(spec, chain.min_gap):
        return EnergyResult(math.inf, "closed_form", 0.0)
    acc = 0.0
    mag = 0.0
    for c in spec.components:
        term = c.coefficient * riesz_lattice_sum(c.exponent, A, Delta)
        acc += term
        mag += abs(term)
    return EnergyResult(acc, "closed_form", _CLOSED_REL * mag)


def _lattice_sum_quadrature(s: float, A: float, delta: float,
                            rel_tol: float) -> tuple[float, float]:
    # int_0^inf [theta3m1(x)/2 + theta_offset(delta, x)/2] w_s(t) dt
    # with x = 4 A^2 t equals riesz_lattice_sum(s, A, Delta)
    c = 4.0 * A * A

    def g(u: float) -> float:
        t = math.exp(u)
        x = c * t
        f = 0.5 * theta3_minus_one(x) + 0.5 * theta_offset(delta, x)
        return f * laplace_weight(s, t) * t

    center = math.log(math.pi / c)
    return integrate_log_axis(g, center, rel_tol)


def bipartite_energy_quadrature(spec: PotentialSpec, A: float, Delta: float,
                                rel_tol: float = 1e-11) -> EnergyResult:
    """Heat-kernel quadrature route to the two-periodic energy.

    Component-wise adaptive integration; est_error adds the integrator
    discrepancy estimates on top of a roundoff floor.  Raises
    QuadratureError when a component integral fails to converge.
    """
    chain = BipartiteChain(A, Delta)
    if _hard_core_blocked(spec, chain.min_gap):
        return EnergyResult(math.inf, "quadrature", 0.0)
    d = _canonical_gap_ratio(Delta)
    delta = 1.0 / (1.0 + d)
    acc = 0.0
    err = 0.0
    mag = 0.0
    for c in spec.components:
        v, e = _lattice_sum_quadrature(c.exponent, A, delta, rel_tol)
        acc += c.coefficient * v
        err += abs(c.coefficient) * e
        mag += abs(c.coefficient * v)
    return EnergyResult(acc, "quadrature", err + 1e-15 * mag)


def equidistant_energy_quadrature(spec: PotentialSpec, A: float,
                                  rel_tol: float = 1e-11) -> EnergyResult:
    """Heat-kernel quadrature for the equidistant chain."""
    if not A > 0.0:
        raise ValueError("A must be positive")
    if _hard_core_blocked(spec, A):
        return EnergyResult(math.inf, "quadrature", 0.0)
    c2 = A * A
    acc = 0.0
    err = 0.0
    mag = 0.0
    for c in spec.components:
        s = c.exponent

        def g(u: float) -> float:
            t = math.exp(u)
            return 0.5 * theta3_minus_one(c2 * t) * laplace_weight(s, t) * t

        v, e = integrate_log_axis(g, math.log(math.pi / c2), rel_tol)
        acc += c.coefficient * v
        err += abs(c.coefficient) * e
        mag += abs(c.coefficient * v)
    return EnergyResult(acc, "quadrature", err + 1e-15 * mag)


def equidistant_stationarity_integrals(spec: PotentialSpec, A: float,
                                       rel_tol: float = 1e-11
                                       ) -> tuple[float, float, float]:
    """Moment-integral form of dE/dA and d2E/dA2 for the equidistant chain.

    Returns (first, second, scale) where

        first  = sum_k c_k int t d/dt[theta3(A^2 t)] w_k dt = (dE/dA)/A
        second = first + 2 A^2 sum_k c_k int t^2 theta3''(A^2 t) w_k dt
               = d2E/dA2

    and scale collects the component magnitudes of `first` so callers can
    judge how close to zero it really is.  At the energy minimum the
    first vanishes and the second is positive.
    """
    if not A > 0.0:
        raise ValueError("A must be positive")
    c2 = A * A
    first = 0.0
    curv = 0.0
    scale = 0.0
    for c in spec.components:
        s = c.exponent

        def g1(u: float) -> float:
            t = math.exp(u)
            return t * c2 * theta_derivative(3, 1, c2 * t) * laplace_weight(s, t) * t

        def g2(u: float) -> float:
            t = math.exp(u)
            return t * t * c2 * c2 * theta_derivative(3, 2, c2 * t) * laplace_weight(s, t) * t

        v1, _ = integrate_log_axis(g1, math.log(math.pi / c2), rel_tol)
        v2, _ = integrate_log_axis(g2, math.log(math.pi / c2), rel_tol)
        first += c.coefficient * v1
        curv += c.coefficient * v2
        scale += abs(c.coefficient * v1)
    second = first + 2.0 * c2 * curv
    return first, second, scale


def find_A_min(spec: PotentialSpec) -> tuple[float, float]:
    """Location and value of the equidistant energy minimum over A.

    For the n-m potential the location is (zeta(n)/zeta(m))^(1/(n-m)),
    evaluated in closed form.  Generic multi-component specs fall back
    to a golden-section search of the closed-form energy.
    """
    if spec.mie is not None:
        n, m = spec.mie
        A_min = (riemann_zeta(n) / riemann_zeta(m)) ** (1.0 / (n - m))
    else:
        lo, hi = 0.5, 3.0
        g = (math.sqrt(5.0) - 1.0) / 2.0
        a, b = lo, hi
        x1 = b - g * (b - a)
        x2 = a + g * (b - a)
        f1 = equidistant_energy(spec, x1).value
        f2 = equidistant_energy(spec, x2).value
        while b - a > 1e-12:
            if f1 <= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - g * (b - a)
                f1 = equidistant_energy(spec, x1).value
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + g * (b - a)
                f2 = equidistant_energy(spec, x2).value
        A_min = 0.5 * (a + b)
    return A_min, equidistant_energy(spec, A_min).value


def find_A_min_limit(m: float) -> float:
    """n -> m limit of the minimizing spacing, exp(zeta'(m)/zeta(m))."""
    if not m > 1.0:
        raise ValueError("need m > 1")
    return math.exp(zeta_log_derivative(m))
