"""Tests for potential construction, parsing and the Laplace weight."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from ljchain.potential import (
    RieszComponent,
    PotentialSpec,
    mie_potential,
    mie_limit_potential,
    evaluate,
    minimum_location,
    laplace_weight,
    parse_potential,
    format_potential,
)
from ljchain.quadrature import integrate_log_axis


def test_mie_normalization():
    # f(1) = -1 and f'(1) = 0 for every admissible pair
    for n, m in [(12, 6), (7, 6), (6, 2), (8, 6), (2.5, 1.5)]:
        spec = mie_potential(n, m)
        assert evaluate(spec, 1.0) == pytest.approx(-1.0, abs=1e-14)
        h = 1e-6
        slope = (evaluate(spec, 1.0 + h) - evaluate(spec, 1.0 - h)) / (2.0 * h)
        assert abs(slope) < 1e-7


def test_mie_component_layout():
    spec = mie_potential(12, 6)
    assert spec.mie == (12.0, 6.0)
    exps = sorted(c.exponent for c in spec.components)
    assert exps == [6.0, 12.0]
    coef = {c.exponent: c.coefficient for c in spec.components}
    assert coef[12.0] == pytest.approx(1.0)      # m/(n-m) = 6/6
    assert coef[6.0] == pytest.approx(-2.0)      # -n/(n-m) = -12/6


def test_mie_rejects_bad_exponents():
    with pytest.raises(ValueError):
        mie_potential(6, 6)
    with pytest.raises(ValueError):
        mie_potential(6, 12)
    with pytest.raises(ValueError):
        mie_potential(12, 1.0)


def test_riesz_component_validation():
    with pytest.raises(ValueError):
        RieszComponent(1.0, 1.0)
    with pytest.raises(ValueError):
        PotentialSpec(())
    with pytest.raises(ValueError):
        PotentialSpec((RieszComponent(1.0, 2.0),), sigma=0.0)


def test_evaluate_hard_core():
    spec = mie_potential(12, 6, sigma=1.1)
    assert evaluate(spec, 1.05) == math.inf
    assert math.isfinite(evaluate(spec, 1.1))
    with pytest.raises(ValueError):
        evaluate(spec, 0.0)


def test_minimum_location_mie():
    # the normalized form has its minimum at exactly r = 1
    # golden section cannot beat the sqrt(eps) flatness floor, a few 1e-9
    for n, m in [(12, 6), (7, 6), (6, 2)]:
        spec = mie_potential(n, m)
        assert minimum_location(spec) == pytest.approx(1.0, abs=2e-8)


def test_minimum_location_generic_combination():
    # 3 r^-4 - 5 r^-2: stationarity -12 r^-5 + 10 r^-3 = 0 gives r^2 = 6/5
    spec = PotentialSpec((RieszComponent(3.0, 4.0), RieszComponent(-5.0, 2.0)))
    want = math.sqrt(6.0 / 5.0)
    assert minimum_location(spec) == pytest.approx(want, abs=2e-8)


def test_mie_limit_potential_values():
    f = mie_limit_potential(6.0)
    assert f(1.0) == pytest.approx(-1.0, abs=1e-15)
    # the limiting form is the n -> m limit of the two-term potential
    spec = mie_potential(6.0 + 1e-7, 6.0)
    for r in (0.8, 1.0, 1.3, 2.0):
        assert f(r) == pytest.approx(evaluate(spec, r), rel=1e-6)


def test_mie_limit_m2_root_is_exact():
    # -(1 + 2 log r)/r^2 vanishes at r = exp(-1/2), exactly in doubles
    f = mie_limit_potential(2.0)
    assert f(math.exp(-0.5)) == 0.0


def test_mie_limit_rejects_bad_m():
    with pytest.raises(ValueError):
        mie_limit_potential(1.0)


# -------------------------------------------------------------- laplace weight

@pytest.mark.parametrize("s", [2.0, 3.5, 6.0, 12.0])
@pytest.mark.parametrize("r", [0.7, 1.0, 1.9])
def test_laplace_weight_reproduces_inverse_power(s, r):
    # int_0^inf exp(-r^2 t) w_s(t) dt = r^(-s)
    def g(u):
        t = math.exp(u)
        return math.exp(-r * r * t) * laplace_weight(s, t) * t

    val, err = integrate_log_axis(g, center=math.log(0.5 * s / (r * r)))
    assert val == pytest.approx(r ** -s, rel=1e-9)


def test_laplace_weight_domain():
    with pytest.raises(ValueError):
        laplace_weight(0.0, 1.0)
    with pytest.raises(ValueError):
        laplace_weight(2.0, 0.0)


# ------------------------------------------------------------------ text form

ROUND_TRIP = [
    "mie:n=12,m=6",
    "mie:n=7,m=6",
    "mie:n=12,m=6,sigma=1.1",
    "riesz:c=1,s=6",
    "riesz:c=1,s=12;c=-2,s=6",
    "riesz:c=1,s=12;c=-2,s=6,sigma=1.05",
]


@pytest.mark.parametrize("text", ROUND_TRIP)
def test_parse_format_round_trip(text):
    spec = parse_potential(text)
    assert format_potential(spec) == text
    again = parse_potential(format_potential(spec))
    assert again == spec


def test_parse_mie_matches_builder():
    assert parse_potential("mie:n=12,m=6") == mie_potential(12, 6)
    assert parse_potential(" mie:n=12,m=6 ") == mie_potential(12, 6)
    assert parse_potential("MIE:n=12,m=6") == mie_potential(12, 6)


def test_parse_riesz_equivalent_to_mie_components():
    spec = parse_potential("riesz:c=1,s=12;c=-2,s=6")
    mie = mie_potential(12, 6)
    assert spec.components == mie.components
    assert spec.mie is None


@pytest.mark.parametrize("bad", [
    "mie:n=12",
    "mie:m=6",
    "mie:n=12,m=6,junk=3",
    "mie:n=twelve,m=6",
    "mie:",
    "riesz:c=1",
    "riesz:s=6",
    "riesz:c=1,s=6,w=2",
    "lj:n=12,m=6",
    "mie",
    "",
    "mie:n=12,m=6,sigma=",
])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_potential(bad)


@settings(max_examples=100, deadline=None)
@given(st.floats(1.5, 40.0), st.floats(1.01, 20.0))
def test_format_parse_is_text_stable(n, m):
    # %g formatting truncates digits, so the value round trip is lossy by
    # design; the TEXT round trip must be a fixed point after one pass.
    # keep the pair separated by more than the 6-digit print resolution
    if n <= m + 1e-3:
        return
    text = format_potential(mie_potential(n, m))
    assert format_potential(parse_potential(text)) == text
