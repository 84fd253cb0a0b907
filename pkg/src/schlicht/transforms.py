"""Transforms that carry normalized univalent functions to normalized
univalent functions, plus the averaging operators on both the
normalized and the positive-real-part side.

Each transform exists twice: as a small spec record (for dispatch
through apply, which guarantees a normalized result) and, where it is
an everyday map, as a plain function.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import (
    InvalidParameter,
    NotCaratheodoryNormalized,
    OmittedValueAttained,
)
from .probe import ProbeGrid
from .series import (
    NormalizedSeries,
    TruncatedSeries,
    compose,
    divide,
    evaluate_many,
    mobius_recompose,
    require_normalized,
    sqrt_even_transform,
)


def _require_real(x, what: str) -> float:
    if isinstance(x, numbers.Real) and math.isfinite(float(x)):
        return float(x)
    raise InvalidParameter(f"{what} must be a finite real number")


@dataclass(frozen=True)
class Conjugation:
    """f(z) -> conj(f(conj(z))): conjugates all coefficients."""


@dataclass(frozen=True)
class Rotation:
    """f(z) -> e^{-i theta} f(e^{i theta} z)."""

    theta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", _require_real(self.theta, "theta"))


@dataclass(frozen=True)
class Dilation:
    """f(z) -> f(r z)/r for r in (0, 1)."""

    r: float

    def __post_init__(self) -> None:
        r = _require_real(self.r, "r")
        if not 0 < r < 1:
            raise InvalidParameter("dilation factor must lie in (0, 1)")
        object.__setattr__(self, "r", r)


@dataclass(frozen=True)
class DiskAutomorphism:
    """Recenter at sigma, |sigma| < 1:
    [f((z + sigma)/(1 + conj(sigma) z)) - f(sigma)] / [(1 - |sigma|^2) f'(sigma)].
    """

    sigma: complex

    def __post_init__(self) -> None:
        s = complex(self.sigma)
        if abs(s) >= 1:
            raise InvalidParameter("automorphism center must satisfy |sigma| < 1")
        object.__setattr__(self, "sigma", s)


@dataclass(frozen=True)
class OmittedValue:
    """f -> xi f/(xi - f), valid when f omits the value xi != 0."""

    xi: complex

    def __post_init__(self) -> None:
        x = complex(self.xi)
        if x == 0:
            raise InvalidParameter("omitted value must be nonzero")
        object.__setattr__(self, "xi", x)


@dataclass(frozen=True)
class SquareRoot:
    """Odd square-root transform, truncated back to the input order."""


@dataclass(frozen=True)
class RangeCompose:
    """f -> phi(f) for a normalized phi univalent on the range of f
    (the caller vouches for the range condition)."""

    phi: TruncatedSeries

    def __post_init__(self) -> None:
        require_normalized(self.phi)


@dataclass(frozen=True)
class Libera:
    """The averaging map (2/z) integral_0^z f."""


@dataclass(frozen=True)
class Bernardi:
    """The one-parameter averaging family ((1+gamma)/z^gamma)
    integral_0^z t^{gamma-1} f(t) dt, gamma > -1."""

    gamma: float

    def __post_init__(self) -> None:
        g = _require_real(self.gamma, "gamma")
        if g <= -1:
            raise InvalidParameter("bernardi needs gamma > -1")
        object.__setattr__(self, "gamma", g)


@dataclass(frozen=True)
class LinearSum:
    """f -> (1 - t) f + t other, t in [0, 1], other normalized."""

    t: float
    other: TruncatedSeries

    def __post_init__(self) -> None:
        t = _require_real(self.t, "t")
        if not 0 <= t <= 1:
            raise InvalidParameter("linear sum weight must lie in [0, 1]")
        object.__setattr__(self, "t", t)
        require_normalized(self.other)


TransformSpec = Union[
    Conjugation,
    Rotation,
    Dilation,
    DiskAutomorphism,
    OmittedValue,
    SquareRoot,
    RangeCompose,
    Libera,
    Bernardi,
    LinearSum,
]


def _finish_normalized(coeffs: np.ndarray) -> NormalizedSeries:
    """Validate near-normalization (1e-10) and snap c_0, c_1 exactly."""
    arr = np.array(coeffs)
    if abs(arr[0]) > 1e-10 or abs(arr[1] - 1.0) > 1e-10:
        raise InvalidParameter("transform failed to preserve normalization")
    arr[0] = 0.0
    arr[1] = 1.0
    return NormalizedSeries(arr)


def apply(spec: TransformSpec, f: TruncatedSeries) -> NormalizedSeries:
    """Apply a transform spec to a normalized series.

    Output order equals input order for every kind.
    """
    require_normalized(f)
    n = f.order
    if isinstance(spec, Conjugation):
        return NormalizedSeries(np.conj(f.coeffs))
    if isinstance(spec, Rotation):
        factors = np.exp(1j * spec.theta * (np.arange(n + 1) - 1))
        return NormalizedSeries(f.coeffs * factors)
    if isinstance(spec, Dilation):
        factors = spec.r ** (np.arange(n + 1) - 1.0)
        return NormalizedSeries(f.coeffs * factors)
    if isinstance(spec, DiskAutomorphism):
        if spec.sigma == 0:
            return NormalizedSeries(f.coeffs)
        moved = mobius_recompose(f, spec.sigma)
        arr = np.array(moved.coeffs)
        arr[0] = 0.0  # subtract f(sigma)
        d = arr[1]  # (1 - |sigma|^2) f'(sigma)
        if abs(d) <= 1e-12:
            raise InvalidParameter("derivative vanishes at the automorphism center")
        return _finish_normalized(arr / d)
    if isinstance(spec, OmittedValue):
        vals = evaluate_many(f, ProbeGrid.default().points())
        if float(np.min(np.abs(vals - spec.xi))) <= 1e-9:
            raise OmittedValueAttained(
                "value is attained on the probe grid; transform undefined"
            )
        return _finish_normalized(divide(spec.xi * f, spec.xi - f).coeffs)
    if isinstance(spec, SquareRoot):
        g = sqrt_even_transform(f)
        return NormalizedSeries(g.coeffs[: n + 1])
    if isinstance(spec, RangeCompose):
        return _finish_normalized(compose(spec.phi, f).coeffs)
    if isinstance(spec, Libera):
        return libera(f)
    if isinstance(spec, Bernardi):
        return bernardi(f, spec.gamma)
    if isinstance(spec, LinearSum):
        return _finish_normalized(linear_sum(f, spec.other, spec.t).coeffs)
    raise InvalidParameter(f"unknown transform spec: {spec!r}")


def libera(f: TruncatedSeries) -> NormalizedSeries:
    """(2/z) integral_0^z f: coefficient map a_k -> 2 a_k/(k + 1)."""
    require_normalized(f)
    out = np.zeros(f.order + 1, dtype=complex)
    k = np.arange(1, f.order + 1)
    out[1:] = f.coeffs[1:] * (2.0 / (k + 1.0))
    return NormalizedSeries(out)


def bernardi(f: TruncatedSeries, gamma: float) -> NormalizedSeries:
    """((1+gamma)/z^gamma) integral_0^z t^{gamma-1} f(t) dt:
    coefficient map a_k -> (1+gamma) a_k/(k+gamma).  gamma = 1 is libera."""
    gamma = _require_real(gamma, "gamma")
    if gamma <= -1:
        raise InvalidParameter("bernardi needs gamma > -1")
    require_normalized(f)
    out = np.zeros(f.order + 1, dtype=complex)
    k = np.arange(1, f.order + 1)
    out[1:] = f.coeffs[1:] * ((1.0 + gamma) / (k + gamma))
    return NormalizedSeries(out)


def libera_kernel(order: int) -> NormalizedSeries:
    """The series whose Hadamard product implements libera:
    z + sum_{k>=2} 2/(k+1) z^k."""
    if order < 1:
        raise InvalidParameter("kernel needs order >= 1")
    out = np.zeros(order + 1, dtype=complex)
    k = np.arange(1, order + 1)
    out[1:] = 2.0 / (k + 1.0)
    return NormalizedSeries(out)


def convolve(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise (Hadamard) product, truncated to the min order."""
    n = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[: n + 1] * b.coeffs[: n + 1])


def linear_sum(phi: TruncatedSeries, psi: TruncatedSeries, t: float) -> TruncatedSeries:
    """(1 - t) phi + t psi for t in [0, 1], truncated to the min order."""
    t = _require_real(t, "t")
    if not 0 <= t <= 1:
        raise InvalidParameter("linear sum weight must lie in [0, 1]")
    n = min(phi.order, psi.order)
    return TruncatedSeries((1.0 - t) * phi.coeffs[: n + 1] + t * psi.coeffs[: n + 1])


def _require_unit_constant(p: TruncatedSeries) -> None:
    if abs(p.coeffs[0] - 1.0) > 1e-12:
        raise NotCaratheodoryNormalized("iteration needs p(0) = 1")


def iterate_alpha(p: TruncatedSeries, alpha: float, n: int) -> TruncatedSeries:
    """n-fold averaging (alpha/z^alpha) integral_0^z t^{alpha-1} p dt:
    coefficient map c_k -> (alpha/(alpha+k))^n c_k.

    Applied one stage at a time, so iterates compose exactly:
    iterate_alpha(iterate_alpha(p, a, n1), a, n2) equals
    iterate_alpha(p, a, n1 + n2) coefficient for coefficient.
    """
    alpha = _require_real(alpha, "alpha")
    if alpha <= 0:
        raise InvalidParameter("alpha must be positive")
    if not isinstance(n, numbers.Integral) or n < 0:
        raise InvalidParameter("iteration count must be a nonnegative integer")
    _require_unit_constant(p)
    k = np.arange(p.order + 1)
    stage = alpha / (alpha + k)
    out = np.array(p.coeffs)
    for _ in range(int(n)):
        out = out * stage
    return TruncatedSeries(out)


def iterate_sigma(p: TruncatedSeries, sigma: float, n: int) -> TruncatedSeries:
    """Stagewise averaging with decreasing exponents sigma, sigma-1, ...:
    total coefficient map c_k -> c_k prod_{m=1..n} (sigma-m+1)/(sigma-m+1+k).

    Requires sigma > n - 1 so every stage exponent stays positive.
    """
    sigma = _require_real(sigma, "sigma")
    if not isinstance(n, numbers.Integral) or n < 0:
        raise InvalidParameter("iteration count must be a nonnegative integer")
    if sigma <= n - 1:
        raise InvalidParameter("need sigma > n - 1")
    _require_unit_constant(p)
    k = np.arange(p.order + 1)
    out = np.array(p.coeffs)
    for m in range(1, int(n) + 1):
        a = sigma - m + 1
        out = out * (a / (a + k))
    return TruncatedSeries(out)
