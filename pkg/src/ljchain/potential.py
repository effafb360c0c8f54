"""Pair potentials built from sums of inverse powers.

A potential is a finite signed combination sum_k c_k r^{-s_k} with all
exponents s_k > 1, optionally cut off by a hard core of radius sigma
(value +inf for r < sigma).  The n-m form

    f(r) = [m r^-n - n r^-m] / (n - m),  n > m > 1

is normalized to f(1) = -1, f'(1) = 0 and is the main object of study;
its n -> m limit is -(1 + m log r) / r^m.

Each inverse power carries the Laplace weight t^{s/2-1}/Gamma(s/2),
r^-s = int_0^inf exp(-r^2 t) w_s(t) dt, which is what turns lattice
sums over these potentials into theta-function integrals.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = [
    "RieszComponent",
    "PotentialSpec",
    "mie_potential",
    "mie_limit_potential",
    "evaluate",
    "minimum_location",
    "laplace_weight",
    "parse_potential",
    "format_potential",
]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RieszComponent:
    """One c * r^(-s) term."""
    coefficient: float
    exponent: float

    def __post_init__(self):
        if not self.exponent > 1.0:
            raise ValueError("exponent must exceed 1 for summable chains")


@dataclass(frozen=True)
class PotentialSpec:
    """Signed combination of inverse powers, with optional hard core.

    `mie` records the (n, m) pair when the spec was built by
    mie_potential, so the canonical text form can round-trip.
    """
    components: tuple[RieszComponent, ...]
    sigma: float | None = None
    mie: tuple[float, float] | None = None

    def __post_init__(self):
        if not self.components:
            raise ValueError("potential needs at least one component")
        if self.sigma is not None and not self.sigma > 0.0:
            raise ValueError("hard-core radius must be positive")


def mie_potential(n: float, m: float, sigma: float | None = None) -> PotentialSpec:
    """The normalized n-m potential as a two-component spec."""
    if not (n > m > 1.0):
        raise ValueError("need n > m > 1")
    comps = (
        RieszComponent(m / (n - m), n),
        RieszComponent(-n / (n - m), m),
    )
    return PotentialSpec(comps, sigma=sigma, mie=(float(n), float(m)))


def mie_limit_potential(m: float):
    """n -> m limit of the n-m potential, as a callable of r.

    Returns r |-> -(1 + m log r) / r^m.  For m = 2 the root sits at
    r = exp(-1/2) exactly.
    """
    if not m > 1.0:
        raise ValueError("need m > 1")

    def f(r: float) -> float:
        if not r > 0.0:
            raise ValueError("r must be positive")
        return -(1.0 + m * math.log(r)) / r ** m

    return f


def evaluate(spec: PotentialSpec, r: float) -> float:
    """Potential value at separation r; +inf inside the hard core."""
    if not r > 0.0:
        raise ValueError("r must be positive")
    if spec.sigma is not None and r < spec.sigma:
        return math.inf
    acc = 0.0
    for c in spec.components:
        acc += c.coefficient * r ** -c.exponent
    return acc


def minimum_location(spec: PotentialSpec, lo: float = 0.5, hi: float = 3.0,
                     tol: float = 1e-10) -> float:
    """Golden-section minimizer of evaluate(spec, .) on [lo, hi].

    Assumes a single interior minimum, which holds for all n-m type
    combinations used here.
    """
    a, b = lo, hi
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1 = evaluate(spec, x1)
    f2 = evaluate(spec, x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = evaluate(spec, x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = evaluate(spec, x2)
    return 0.5 * (a + b)


def laplace_weight(s: float, t: float) -> float:
    """Density t^(s/2-1)/Gamma(s/2) of the heat-kernel representation."""
    if not s > 0.0:
        raise ValueError("s must be positive")
    if not t > 0.0:
        raise ValueError("t must be positive")
    return t ** (0.5 * s - 1.0) / math.gamma(0.5 * s)


# text round-trip: "mie:n=12,m=6" / "mie:n=12,m=6,sigma=1.1"
#                  "riesz:c=1,s=6;c=-2,s=3" (sigma key allowed in any chunk)

_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"


def _fmt_num(v: float) -> str:
    return f"{v:g}"


def parse_potential(text: str) -> PotentialSpec:
    """Parse the canonical text form of a potential."""
    text = text.strip()
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if not body:
        raise ValueError(f"malformed potential {text!r}")
    if kind == "mie":
        fields = dict()
        for piece in body.split(","):
            k, _, v = piece.partition("=")
            if not v or not re.fullmatch(_NUM, v.strip()):
                raise ValueError(f"malformed potential field {piece!r}")
            fields[k.strip()] = float(v)
        extra = set(fields) - {"n", "m", "sigma"}
        if extra or "n" not in fields or "m" not in fields:
            raise ValueError(f"mie form needs n= and m=, got {text!r}")
        return mie_potential(fields["n"], fields["m"], fields.get("sigma"))
    if kind == "riesz":
        comps = []
        sigma = None
        for chunk in body.split(";"):
            c_val = None
            s_val = None
            for piece in chunk.split(","):
                k, _, v = piece.partition("=")
                k = k.strip()
                if not v or not re.fullmatch(_NUM, v.strip()):
                    raise ValueError(f"malformed potential field {piece!r}")
                if k == "c":
                    c_val = float(v)
                elif k == "s":
                    s_val = float(v)
                elif k == "sigma":
                    sigma = float(v)
                else:
                    raise ValueError(f"unknown potential field {k!r}")
            if c_val is None or s_val is None:
                raise ValueError(f"riesz chunk needs c= and s=: {chunk!r}")
            comps.append(RieszComponent(c_val, s_val))
        return PotentialSpec(tuple(comps), sigma=sigma)
    raise ValueError(f"unknown potential kind {kind!r}")


def format_potential(spec: PotentialSpec) -> str:
    """Canonical text form, inverse of parse_potential."""
    tail = f",sigma={_fmt_num(spec.sigma)}" if spec.sigma is not None else ""
    if spec.mie is not None:
        n, m = spec.mie
        return f"mie:n={_fmt_num(n)},m={_fmt_num(m)}{tail}"
    body = ";".join(
        f"c={_fmt_num(c.coefficient)},s={_fmt_num(c.exponent)}"
        for c in spec.components)
    return f"riesz:{body}{tail}"
