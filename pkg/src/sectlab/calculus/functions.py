"""Holomorphic test functions with the decay data that contour truncation needs.

Each function knows, for a ray at angle ``theta`` in the open right half-plane,
an upper bound for ``int_R^inf |f(rho e^{i theta})| drho/rho`` (``tail``) and,
when ``f`` vanishes at 0, for ``int_0^r |f| drho/rho`` (``head``). Together with
``||R(z, A)|| <= M/|z|`` on the ray these certify the truncated parts of a
Riesz-Dunford integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special

from ..specfn import exp_int

Bound = Callable[[float, float], float]


@dataclass(frozen=True)
class HolFunction:
    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    radius0: float
    tail: Bound
    ray_sup: Callable[[float], float]
    head: Bound | None = None
    eps: float | None = None

    def __call__(self, z):
        return self.fn(np.asarray(z, dtype=complex))

    def __mul__(self, other: "HolFunction") -> "HolFunction":
        f, g = self, other

        def tail(theta, R):
            return min(f.tail(theta, R) * g.ray_sup(theta), g.tail(theta, R) * f.ray_sup(theta))

        heads = [
            (lambda th, r, a=a, b=b: a.head(th, r) * b.ray_sup(th))
            for a, b in ((f, g), (g, f))
            if a.head is not None
        ]
        head = None
        if heads:
            def head(theta, r):
                return min(h(theta, r) for h in heads)

        eps = f.eps if f.eps is not None else g.eps
        return HolFunction(
            name=f"{f.name}*{g.name}",
            fn=lambda z: f.fn(z) * g.fn(z),
            radius0=min(f.radius0, g.radius0),
            tail=tail,
            ray_sup=lambda theta: f.ray_sup(theta) * g.ray_sup(theta),
            head=head,
            eps=eps,
        )


def exp_eps(eps: float) -> HolFunction:
    """z -> exp(-eps z)."""
    eps = float(eps)

    def tail(theta, R):
        x = eps * R * math.cos(theta)
        return exp_int(x) if x > 0 else math.inf

    return HolFunction(
        name=f"e_{eps:g}",
        fn=lambda z: np.exp(-eps * z),
        radius0=math.inf,
        tail=tail,
        ray_sup=lambda theta: 1.0,
        eps=eps,
    )


def constant(value: complex = 1.0) -> HolFunction:
    return HolFunction(
        name=f"const_{value}",
        fn=lambda z: np.full_like(z, value, dtype=complex),
        radius0=math.inf,
        tail=lambda theta, R: math.inf,
        ray_sup=lambda theta: abs(value),
    )


def bump() -> HolFunction:
    """z -> z/(1+z)^2; on right-half-plane rays |f| <= rho/(1+rho^2) <= 1/2."""
    return HolFunction(
        name="bump",
        fn=lambda z: z / (1.0 + z) ** 2,
        radius0=1.0,
        tail=lambda theta, R: math.pi / 2 - math.atan(R),
        ray_sup=lambda theta: 0.5,
        head=lambda theta, r: math.atan(r),
    )


def resolvent_at_minus_one() -> HolFunction:
    """z -> 1/(1+z); |f| <= (1+rho^2)^{-1/2} on right-half-plane rays."""
    return HolFunction(
        name="inv1pz",
        fn=lambda z: 1.0 / (1.0 + z),
        radius0=1.0,
        tail=lambda theta, R: math.asinh(1.0 / R),
        ray_sup=lambda theta: 1.0,
    )


def cayley() -> HolFunction:
    """z -> (z-1)/(z+1), bounded by 1 on the right half-plane."""
    return HolFunction(
        name="cayley",
        fn=lambda z: (z - 1.0) / (z + 1.0),
        radius0=1.0,
        tail=lambda theta, R: math.inf,
        ray_sup=lambda theta: 1.0,
    )


def power_exp(alpha: float, t: float = 1.0) -> HolFunction:
    """z -> z^alpha exp(-t z) with the principal branch; singular at 0 unless alpha is a natural number."""
    alpha, t = float(alpha), float(t)

    def tail(theta, R):
        ct = t * math.cos(theta)
        # int_R^inf rho^{alpha-1} e^{-ct rho} drho = ct^{-alpha} Gamma(alpha, ct R)
        return ct ** (-alpha) * special.gamma(alpha) * special.gammaincc(alpha, ct * R)

    def sup(theta):
        ct = t * math.cos(theta)
        return (alpha / (math.e * ct)) ** alpha

    integer = float(alpha).is_integer()
    return HolFunction(
        name=f"z^{alpha:g}e_{t:g}",
        fn=(lambda z: z**int(alpha) * np.exp(-t * z)) if integer else (lambda z: z**alpha * np.exp(-t * z)),
        radius0=math.inf if integer else 0.0,
        tail=tail,
        ray_sup=sup,
        head=lambda theta, r: r**alpha / alpha,
    )


def sqrt_exp(t: float = 1.0) -> HolFunction:
    """z -> z^{1/2} exp(-t z)."""
    f = power_exp(0.5, t)
    return HolFunction(**{**f.__dict__, "name": f"sqrt_z_e_{t:g}"})


def z_exp(t: float = 1.0) -> HolFunction:
    f = power_exp(1.0, t)
    return HolFunction(**{**f.__dict__, "name": f"z_e_{t:g}"})


#: square-function generators by name
PSI = {"sqrt_z_exp": sqrt_exp, "z_exp": z_exp}
