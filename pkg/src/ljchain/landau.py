"""Series expansion of the chain energy in the dimerization amplitude.

Writing Delta = exp(eps), the two-periodic energy at fixed density is an
even function of eps and expands as

    E(A, eps) = E_eq(A) + E2(A) eps^2 + E4(A) eps^4 + E6(A) eps^6 + ...

The equidistant chain loses stability where E2 changes sign; with E4 > 0
there the transition is continuous and the new minimum grows like
eps ~ sqrt(-E2/(2 E4)).  For a single r^-s component the coefficients
close in terms of zeta(s+2), zeta(s+4), zeta(s+6):

    E2_c = s(s+1)(2^{s+2}-1) zeta(s+2) / (32 (2A)^s)
    E4_c = s(s+1)(s+2)(s+3)(2^{s+4}-1) zeta(s+4) / (3*2^11 (2A)^s) - E2_c/6
    E6_c = s..(s+5)(2^{s+6}-1) zeta(s+6) / (45*2^16 (2A)^s)
           - 23 E2_c/720 - E4_c/3

which follow from expanding the offset theta sum around the half-integer
lattice and using sum_j (j+1/2)^{-q} = 2(2^q-1) zeta(q).  The module
also evaluates the same coefficients by heat-kernel quadrature as an
independent route.

The sign change of E2 for the n-m potential happens at

    A_c = (1/2) [P(n)/P(m)]^(1/(n-m)),  P(x) = (1+x)(2^{2+x}-1) zeta(2+x)

and E4(A_c) > 0 for every pair n > m exactly when

    quartic_margin_ratio(x) = (2^{2+x}-1) zeta(2+x)
                              / [(2+x)(3+x)(2^{4+x}-1) zeta(4+x)]

is strictly decreasing, which tricritical_scan verifies on a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .potential import PotentialSpec, laplace_weight, mie_potential
from .quadrature import integrate_log_axis
from .specfun import riemann_zeta, theta_derivative, zeta_log_derivative
from .energy import equidistant_energy, equidistant_energy_quadrature

__all__ = [
    "LandauCoefficients",
    "TransitionPoint",
    "TricriticalScanReport",
    "landau_component_closed",
    "landau_E2_E4_closed",
    "landau_closed",
    "landau_coefficients_quadrature",
    "E2_slope_closed",
    "critical_point",
    "critical_point_limit_n_to_m",
    "quartic_margin_ratio",
    "tricritical_scan",
]


@dataclass(frozen=True)
class LandauCoefficients:
    A: float
    E_eq: float
    E2: float
    E4: float
    E6: float | None
    method: str

    def __post_init__(self):
        if self.method not in ("closed_form", "quadrature"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class TransitionPoint:
    A_c: float
    bracket: tuple[float, float]
    sign_change_verified: bool
    E4_at_Ac: float


@dataclass(frozen=True)
class TricriticalScanReport:
    x_lo: float
    x_hi: float
    n_x: int
    monotone: bool
    max_forward_diff: float      # most positive forward difference of the ratio
    pairs_checked: int
    all_E4_positive: bool
    min_E4_at_Ac: float


def _component_E2(s: float, A: float) -> float:
    return s * (s + 1.0) * (2.0 ** (s + 2.0) - 1.0) * riemann_zeta(s + 2.0) \
        / (32.0 * (2.0 * A) ** s)


def _component_E4(s: float, A: float) -> float:
    g = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (2.0 ** (s + 4.0) - 1.0) \
        * riemann_zeta(s + 4.0) / (3.0 * 2.0 ** 11 * (2.0 * A) ** s)
    return g - _component_E2(s, A) / 6.0


def _component_E6(s: float, A: float) -> float:
    h = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * (s + 5.0) \
        * (2.0 ** (s + 6.0) - 1.0) * riemann_zeta(s + 6.0) \
        / (45.0 * 2.0 ** 16 * (2.0 * A) ** s)
    return h - 23.0 / 720.0 * _component_E2(s, A) - _component_E4(s, A) / 3.0


def landau_component_closed(s: float, A: float) -> tuple[float, float, float]:
    """(E2, E4, E6) contributions of a bare r^-s term."""
    if not s > 1.0:
        raise ValueError("needs s > 1")
    if not A > 0.0:
        raise ValueError("A must be positive")
    return _component_E2(s, A), _component_E4(s, A), _component_E6(s, A)


def landau_E2_E4_closed(spec: PotentialSpec, A: float) -> LandauCoefficients:
    """Closed-form E2 and E4 (E6 left unset)."""
    e2 = 0.0
    e4 = 0.0
    for c in spec.components:
        e2 += c.coefficient * _component_E2(c.exponent, A)
        e4 += c.coefficient * _component_E4(c.exponent, A)
    return LandauCoefficients(A, equidistant_energy(spec, A).value,
                              e2, e4, None, "closed_form")


def landau_closed(spec: PotentialSpec, A: float) -> LandauCoefficients:
    """Closed-form coefficients through sixth order."""
    e2 = e4 = e6 = 0.0
    for c in spec.components:
        a2, a4, a6 = landau_component_closed(c.exponent, A)
        e2 += c.coefficient * a2
        e4 += c.coefficient * a4
        e6 += c.coefficient * a6
    return LandauCoefficients(A, equidistant_energy(spec, A).value,
                              e2, e4, e6, "closed_form")


def E2_slope_closed(spec: PotentialSpec, A: float) -> float:
    """dE2/dA in closed form (each component scales as A^-s)."""
    acc = 0.0
    for c in spec.components:
        acc += c.coefficient * (-c.exponent / A) * _component_E2(c.exponent, A)
    return acc


def _quad_component(s: float, A: float, rel_tol: float
                    ) -> tuple[float, float, float, float]:
    # moment integrals of the staggered theta sum.  th(r, t) below is
    # d^r/dt^r theta2(4 A^2 t); the weight polynomials come from pushing
    # the eps-expansion of the offset through the heat kernel at fixed
    # density.  Leading Poisson parts cancel inside each combination.
    A2 = A * A
    c = 4.0 * A2

    def th(r: int, t: float) -> float:
        return c ** r * theta_derivative(2, r, c * t)

    u0 = math.log(math.pi / c)

    def g2(u: float) -> float:
        t = math.exp(u)
        return (0.5 * t * th(0, t) + t * t * th(1, t)) \
            * laplace_weight(s, t) * t

    def g4(u: float) -> float:
        t = math.exp(u)
        t2 = t * t
        return ((t / 3.0 + A2 * t2 / 4.0) * th(0, t)
                + (2.0 * t2 / 3.0 + A2 * t2 * t) * th(1, t)
                + (A2 * t2 * t2 / 3.0) * th(2, t)) * laplace_weight(s, t) * t

    def g6(u: float) -> float:
        t = math.exp(u)
        t2 = t * t
        t3 = t2 * t
        t4 = t2 * t2
        A4 = A2 * A2
        return ((17.0 * t / 1440.0 + A2 * t2 / 48.0 + A4 * t3 / 192.0) * th(0, t)
                + (17.0 * t2 / 720.0 + A2 * t3 / 12.0 + A4 * t4 / 32.0) * th(1, t)
                + (A2 * t4 / 36.0 + A4 * t4 * t / 48.0) * th(2, t)
                + (A4 * t4 * t2 / 360.0) * th(3, t)) * laplace_weight(s, t) * t

    v2, e2 = integrate_log_axis(g2, u0, rel_tol)
    v4, e4 = integrate_log_axis(g4, u0, rel_tol)
    v6, e6 = integrate_log_axis(g6, u0, rel_tol)
    E2 = -0.25 * A2 * v2
    E4 = A2 / 16.0 * v4
    E6 = -0.25 * A2 * v6
    err = 0.25 * A2 * e2 + A2 / 16.0 * e4 + 0.25 * A2 * e6
    return E2, E4, E6, err


def landau_coefficients_quadrature(spec: PotentialSpec, A: float,
                                   rel_tol: float = 1e-11) -> LandauCoefficients:
    """Heat-kernel quadrature route to E2, E4, E6.

    Independent of the closed forms (shares only the theta machinery);
    agrees with them to ~1e-12 relative in practice.
    """
    if not A > 0.0:
        raise ValueError("A must be positive")
    e2 = e4 = e6 = 0.0
    for comp in spec.components:
        a2, a4, a6, _ = _quad_component(comp.exponent, A, rel_tol)
        e2 += comp.coefficient * a2
        e4 += comp.coefficient * a4
        e6 += comp.coefficient * a6
    eq = equidistant_energy_quadrature(spec, A, rel_tol).value
    return LandauCoefficients(A, eq, e2, e4, e6, "quadrature")


def _log_P(x: float) -> float:
    # log of (1+x)(2^{2+x}-1) zeta(2+x), safe for large x
    return math.log1p(x) + (2.0 + x) * math.log(2.0) \
        + math.log1p(-(2.0 ** -(2.0 + x))) + math.log(riemann_zeta(2.0 + x))


@lru_cache(maxsize=None)
def _critical_A(n: float, m: float) -> float:
    return 0.5 * math.exp((_log_P(n) - _log_P(m)) / (n - m))


def critical_point(spec: PotentialSpec) -> TransitionPoint:
    """Sign change of E2 for an n-m potential, in closed form.

    The bracket is A_c (1 -+ 1e-3); the sign change of the closed-form
    E2 across it is verified numerically, as is E4 there.
    """
    if spec.mie is None:
        raise ValueError("critical point is defined for n-m potentials")
    n, m = spec.mie
    A_c = _critical_A(n, m)
    lo = A_c * (1.0 - 1e-3)
    hi = A_c * (1.0 + 1e-3)
    f_lo = landau_E2_E4_closed(spec, lo).E2
    f_hi = landau_E2_E4_closed(spec, hi).E2
    verified = f_lo > 0.0 > f_hi
    e4 = landau_E2_E4_closed(spec, A_c).E4
    return TransitionPoint(A_c, (lo, hi), verified, e4)


def critical_point_limit_n_to_m(m: float) -> float:
    """n -> m limit of the E2 sign-change location.

    log A_c -> -log 2 + (log P)'(m), which collapses to
    log(2)/(2^{2+m}-1) + 1/(1+m) + zeta'(m+2)/zeta(m+2).
    """
    if not m > 1.0:
        raise ValueError("need m > 1")
    return math.exp(math.log(2.0) * 2.0 ** -(2.0 + m) / (1.0 - 2.0 ** -(2.0 + m))
                    + 1.0 / (1.0 + m) + zeta_log_derivative(m + 2.0))


def quartic_margin_ratio(x: float) -> float:
    """Ratio whose strict decrease certifies E4 > 0 at every crossing.

    At A_c the quartic coefficient of the pair (n, m) is positive exactly
    when this ratio is smaller at n than at m.
    """
    if not x > 1.0:
        raise ValueError("need x > 1")
    return (2.0 ** (x + 2.0) - 1.0) * riemann_zeta(x + 2.0) / (
        (x + 2.0) * (x + 3.0) * (2.0 ** (x + 4.0) - 1.0) * riemann_zeta(x + 4.0))


def tricritical_scan(m_grid, n_grid) -> TricriticalScanReport:
    """Check the continuity certificate on grids of exponents.

    quartic_margin_ratio is evaluated on the union of the two grids and
    its forward differences must all be negative; for every pair
    (n, m) with n > m drawn from n_grid x m_grid the closed-form E4 at
    the crossing must be positive.
    """
    raw = sorted(set(float(v) for v in m_grid) | set(float(v) for v in n_grid))
    # merge points closer than the resolvable slope scale, otherwise the
    # strict-decrease test compares roundoff on ulp-separated abscissae
    xs: list[float] = []
    for x in raw:
        if not xs or x - xs[-1] > 1e-9 * max(1.0, x):
            xs.append(x)
    if len(xs) < 2:
        raise ValueError("need at least two distinct exponents")
    g = [quartic_margin_ratio(x) for x in xs]
    diffs = [g[i + 1] - g[i] for i in range(len(g) - 1)]
    max_diff = max(diffs)
    pairs = 0
    min_e4 = math.inf
    for m in m_grid:
        for n in n_grid:
            if not float(n) > float(m):
                continue
            tp = critical_point(mie_potential(float(n), float(m)))
            pairs += 1
            min_e4 = min(min_e4, tp.E4_at_Ac)
    return TricriticalScanReport(
        x_lo=xs[0], x_hi=xs[-1], n_x=len(xs),
        monotone=max_diff < 0.0, max_forward_diff=max_diff,
        pairs_checked=pairs,
        all_E4_positive=pairs > 0 and min_e4 > 0.0,
        min_E4_at_Ac=min_e4 if pairs else math.nan)
