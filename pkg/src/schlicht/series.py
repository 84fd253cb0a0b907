"""Arithmetic of truncated Taylor expansions about the origin.

A series is stored as the coefficient vector (c_0, ..., c_N) of its
truncation to order N; the vector always has length N + 1.  Binary
operations truncate to the smaller of the two orders, so results never
claim coefficients that the inputs cannot support.  All values are
immutable; every operation returns a new object.
"""

from __future__ import annotations

import cmath
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import (
    BranchPointAtOrigin,
    CompositionRequiresVanishingConstant,
    DivisionBySingularSeries,
    InvalidParameter,
)

#: Working order used when a caller does not specify one.
DEFAULT_ORDER = 64

#: A constant term with modulus at or below this threshold is treated as
#: zero wherever a nonzero constant term is required.
CONSTANT_TERM_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients c_0..c_N of a power series truncated at order N."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidParameter("coefficient vector must be 1-d and nonempty")
        if not np.all(np.isfinite(arr)):
            raise InvalidParameter("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        tail = ", ..." if self.order > 3 else ""
        return f"{type(self).__name__}(order={self.order}, coeffs={head[:-1]}{tail}])"

    # Small amount of operator sugar; the named module functions are the
    # primary interface.
    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])
        if isinstance(other, numbers.Number):
            out = np.array(self.coeffs)
            out[0] += other
            return TruncatedSeries(out)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, numbers.Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        if isinstance(other, numbers.Number):
            return TruncatedSeries(self.coeffs * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return divide(self, other)
        if isinstance(other, numbers.Number):
            return TruncatedSeries(self.coeffs / other)
        return NotImplemented


@dataclass(frozen=True, eq=False, repr=False)
class NormalizedSeries(TruncatedSeries):
    """Series with c_0 = 0 and c_1 = 1 exactly (disk maps fixing 0 with
    unit derivative)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.order < 1 or self.coeffs[0] != 0 or self.coeffs[1] != 1:
            raise InvalidParameter(
                "normalized series requires c_0 = 0 and c_1 = 1 exactly"
            )


def constant(value: complex, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Constant series of the requested order."""
    if order < 0:
        raise InvalidParameter("order must be nonnegative")
    out = np.zeros(order + 1, dtype=complex)
    out[0] = value
    return TruncatedSeries(out)


def as_normalized(f: TruncatedSeries) -> NormalizedSeries:
    """View f as a normalized series, validating the normalization."""
    if isinstance(f, NormalizedSeries):
        return f
    return NormalizedSeries(f.coeffs)


def require_normalized(f: TruncatedSeries) -> None:
    """Raise InvalidParameter unless c_0 = 0 and c_1 = 1 exactly."""
    as_normalized(f)


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to order min(order(a), order(b))."""
    n = min(a.order, b.order)
    prod = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1]
    return TruncatedSeries(prod)


def divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Series quotient a/b to order min(order(a), order(b)).

    Requires |b_0| > 1e-12.  After the recurrence the quotient is
    multiplied back and the residual against a must stay below 1e-10
    (scaled by the magnitude of a); a larger residual means b is
    effectively singular for this purpose and is rejected.
    """
    n = min(a.order, b.order)
    ac = a.coeffs[: n + 1]
    bc = b.coeffs[: n + 1]
    if abs(bc[0]) <= CONSTANT_TERM_EPS:
        raise DivisionBySingularSeries("divisor constant term is numerically zero")
    q = np.zeros(n + 1, dtype=complex)
    q[0] = ac[0] / bc[0]
    for k in range(1, n + 1):
        q[k] = (ac[k] - np.dot(bc[1 : k + 1], q[k - 1 :: -1])) / bc[0]
    back = np.convolve(q, bc)[: n + 1]
    scale = max(1.0, float(np.max(np.abs(ac))))
    if float(np.max(np.abs(back - ac))) > 1e-10 * scale:
        raise DivisionBySingularSeries(
            "division is numerically unstable for this divisor"
        )
    return TruncatedSeries(q)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Composition outer(inner(z)) to order min of the two orders.

    The inner series must vanish at the origin exactly; otherwise the
    truncated composition is not well defined.  Evaluation is a Horner
    recursion in the inner series, one truncated product per outer
    coefficient.
    """
    if inner.coeffs[0] != 0:
        raise CompositionRequiresVanishingConstant(
            "inner series must have zero constant term"
        )
    n = min(outer.order, inner.order)
    ic = inner.coeffs[: n + 1]
    oc = outer.coeffs[: n + 1]
    acc = np.zeros(n + 1, dtype=complex)
    acc[0] = oc[-1]
    for c in oc[-2::-1]:
        acc = np.convolve(acc, ic)[: n + 1]
        acc[0] += c
    return TruncatedSeries(acc)


def differentiate(f: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; output order is max(order - 1, 0)."""
    if f.order == 0:
        return TruncatedSeries(np.zeros(1, dtype=complex))
    k = np.arange(1, f.order + 1)
    return TruncatedSeries(k * f.coeffs[1:])


def integrate_from_zero(f: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at 0; output order is order + 1."""
    out = np.zeros(f.order + 2, dtype=complex)
    out[1:] = f.coeffs / np.arange(1, f.order + 2)
    return TruncatedSeries(out)


def _require_off_branch_cut(a0: complex) -> None:
    if abs(a0) <= CONSTANT_TERM_EPS or (a0.imag == 0 and a0.real < 0):
        raise BranchPointAtOrigin(
            "constant term lies on the closed negative real axis"
        )


def principal_power(f: TruncatedSeries, t: float) -> TruncatedSeries:
    """Principal branch of f**t, same order as f.

    The constant term must avoid the closed negative real axis (zero
    included) so the principal branch is defined.  Coefficients follow
    the recurrence obtained from g' = t * g * f' / f, which stays in
    series arithmetic instead of composing with a scalar power.
    """
    a = f.coeffs
    _require_off_branch_cut(complex(a[0]))
    n = f.order
    p = np.zeros(n + 1, dtype=complex)
    p[0] = complex(a[0]) ** t
    for k in range(1, n + 1):
        j = np.arange(k)
        w = t * (k - j) - j
        p[k] = np.dot(w * p[:k], a[k - j]) / (k * a[0])
    return TruncatedSeries(p)


def principal_log(f: TruncatedSeries) -> TruncatedSeries:
    """Principal branch of log f, same order as f.

    Same branch restriction as principal_power; the recurrence comes
    from f * (log f)' = f'.
    """
    a = f.coeffs
    _require_off_branch_cut(complex(a[0]))
    n = f.order
    out = np.zeros(n + 1, dtype=complex)
    out[0] = cmath.log(complex(a[0]))
    for k in range(1, n + 1):
        s = 0.0 + 0.0j
        if k > 1:
            j = np.arange(1, k)
            s = np.dot(j * out[j], a[k - j])
        out[k] = (k * a[k] - s) / (k * a[0])
    return TruncatedSeries(out)


def shift_up(f: TruncatedSeries) -> TruncatedSeries:
    """Multiply by z; output order is order + 1."""
    return TruncatedSeries(np.concatenate([[0.0 + 0.0j], f.coeffs]))


def shift_down(f: TruncatedSeries) -> TruncatedSeries:
    """Divide by z.  Requires c_0 = 0 exactly; output order is order - 1."""
    if f.coeffs[0] != 0 or f.order < 1:
        raise InvalidParameter("shift_down requires a series vanishing at 0")
    return TruncatedSeries(f.coeffs[1:])


def sqrt_even_transform(f: TruncatedSeries) -> NormalizedSeries:
    """Odd square-root transform g with g(z)^2 = f(z^2), g'(0) = 1.

    f must be normalized.  Writing f(z)/z = u(z), the output is
    z * sqrt(u)(z^2), an odd normalized series of order 2*order(f) - 1.
    Even coefficients are exactly zero and the branch is canonical
    because u(0) = 1.
    """
    require_normalized(f)
    u = TruncatedSeries(f.coeffs[1:])
    s = principal_power(u, 0.5)
    out = np.zeros(2 * f.order, dtype=complex)
    out[1::2] = s.coeffs
    return NormalizedSeries(out)


def mobius_recompose(f: TruncatedSeries, sigma: complex) -> TruncatedSeries:
    """Series of f((z + sigma)/(1 + conj(sigma) z)) to the order of f.

    Requires |sigma| < 1.  Accumulates sum c_n w(z)^n over the powers of
    the automorphism series w.  Each truncated product is exact (product
    coefficient k only sees factor coefficients up to k), and |w| < 1 on
    the disk keeps every power's coefficients bounded by 1, so no
    cancellation blowup occurs at high order.  Recentering a polynomial
    through its shifted coefficients instead loses all precision beyond
    modest orders: those intermediates grow like (1/(1-|sigma|))^n.
    """
    sigma = complex(sigma)
    if abs(sigma) >= 1:
        raise InvalidParameter("automorphism center must satisfy |sigma| < 1")
    if sigma == 0:
        return TruncatedSeries(f.coeffs)
    n = f.order
    w = np.zeros(n + 1, dtype=complex)
    w[0] = sigma
    if n >= 1:
        w[1:] = (1 - abs(sigma) ** 2) * (-np.conj(sigma)) ** np.arange(n)
    out = np.zeros(n + 1, dtype=complex)
    out[0] = f.coeffs[0]
    power = np.zeros(n + 1, dtype=complex)
    power[0] = 1.0
    for c in f.coeffs[1:]:
        power = np.convolve(power, w)[: n + 1]
        out += c * power
    return TruncatedSeries(out)


def evaluate(f: TruncatedSeries, z: complex) -> complex:
    """Horner evaluation of the truncating polynomial at a point."""
    acc = 0.0 + 0.0j
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)


def evaluate_many(f: TruncatedSeries, zs: np.ndarray) -> np.ndarray:
    """Horner evaluation at an array of points."""
    zs = np.asarray(zs, dtype=complex)
    acc = np.zeros_like(zs)
    for c in f.coeffs[::-1]:
        acc = acc * zs + c
    return acc


def series_to_dict(f: TruncatedSeries) -> dict:
    """JSON-ready encoding: {"order": N, "coeffs": [[re, im], ...]}."""
    return {
        "order": f.order,
        "coeffs": [[float(c.real), float(c.imag)] for c in f.coeffs],
    }


def series_from_dict(data: dict) -> TruncatedSeries:
    """Inverse of series_to_dict, validating the length contract."""
    try:
        order = data["order"]
        rows = data["coeffs"]
    except (TypeError, KeyError) as exc:
        raise InvalidParameter("series record needs 'order' and 'coeffs'") from exc
    if not isinstance(order, int) or order < 0:
        raise InvalidParameter("order must be a nonnegative integer")
    if len(rows) != order + 1:
        raise InvalidParameter("coefficient list must have length order + 1")
    try:
        arr = np.array([complex(re, im) for re, im in rows], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InvalidParameter("coefficients must be [re, im] pairs") from exc
    return TruncatedSeries(arr)
