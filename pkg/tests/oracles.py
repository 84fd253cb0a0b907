"""Independent reference implementations used to cross-check the
library: brute-force coefficient arithmetic, quadrature-based integral
operators, and FFT coefficient extraction from point values.

Nothing here calls back into the package's recurrences; polynomial
evaluation goes through np.polyval so a bug in the library's Horner
loop cannot hide in its own oracle.
"""

from __future__ import annotations

import numpy as np


def polyval(coeffs: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Evaluate sum c_k z^k with numpy's Horner (highest degree first)."""
    return np.polyval(np.asarray(coeffs, dtype=complex)[::-1], zs)


def naive_cauchy(a, b) -> np.ndarray:
    """Full Cauchy product by double loop, length len(a)+len(b)-1."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.zeros(len(a) + len(b) - 1, dtype=complex)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def naive_truncated_product(a, b, order: int) -> np.ndarray:
    full = naive_cauchy(a, b)
    out = np.zeros(order + 1, dtype=complex)
    n = min(order + 1, len(full))
    out[:n] = full[:n]
    return out


def naive_compose(outer, inner, order: int) -> np.ndarray:
    """Coefficients of outer(inner(z)) through `order`, by accumulating
    truncated powers of inner term by term.  Requires inner[0] == 0."""
    outer = np.asarray(outer, dtype=complex)
    inner = np.asarray(inner, dtype=complex)
    assert inner[0] == 0
    out = np.zeros(order + 1, dtype=complex)
    out[0] = outer[0]
    power = np.zeros(order + 1, dtype=complex)
    power[0] = 1.0
    for k in range(1, len(outer)):
        power = naive_truncated_product(power, inner, order)
        out += outer[k] * power
    return out


def fft_coefficients(values_fn, order: int, radius: float = 0.5, n_samples: int = 128) -> np.ndarray:
    """Taylor coefficients 0..order of an analytic function from its
    values on |z| = radius.  Exact (to roundoff) for polynomials of
    degree < n_samples; aliasing decays like radius**n_samples otherwise."""
    zs = radius * np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    hat = np.fft.fft(np.asarray(values_fn(zs), dtype=complex)) / n_samples
    return hat[: order + 1] / radius ** np.arange(order + 1)


def gauss01(n: int = 24):
    """Gauss-Legendre nodes and weights mapped to [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def nested_average_values(coeffs, zs: np.ndarray, exponents) -> np.ndarray:
    """Values of the nested averaging operator applied to a polynomial.

    One stage with exponent a maps g to a * integral_0^1 s^(a-1) g(sz) ds.
    The substitution s = u^2 turns the weight into u^(2a-1), polynomial
    for half-integer a, so Gauss-Legendre is exact for every case used
    in the tests.  Stages apply left to right.
    """
    exponents = list(exponents)
    if not exponents:
        return polyval(coeffs, zs)
    a = exponents[0]
    u, w = gauss01()
    pts = (u[:, None] ** 2) * np.asarray(zs)[None, :]
    inner = nested_average_values(coeffs, pts.ravel(), exponents[1:])
    inner = inner.reshape(len(u), -1)
    return 2.0 * a * np.einsum("i,i,ij->j", w, u ** (2.0 * a - 1.0), inner)


def quadrature_coefficient_map(coeffs, exponents, prefactor: float = 1.0) -> np.ndarray:
    """Coefficients of prefactor * (nested averaging of the polynomial),
    recovered by quadrature plus FFT extraction; fully independent of
    the library's closed-form coefficient maps."""
    order = len(coeffs) - 1
    vals = lambda zs: prefactor * nested_average_values(coeffs, zs, exponents)
    return fft_coefficients(vals, order)


def line_integral_primitive(coeffs, zs: np.ndarray, n_nodes: int = 24) -> np.ndarray:
    """integral_0^z p(t) dt along the straight segment, by Gauss-Legendre;
    exact for polynomials of degree < 2*n_nodes."""
    s, w = gauss01(n_nodes)
    pts = s[:, None] * np.asarray(zs)[None, :]
    vals = polyval(coeffs, pts.ravel()).reshape(len(s), -1)
    return np.asarray(zs) * np.einsum("i,ij->j", w, vals)


def random_coeffs(rng: np.random.Generator, order: int, scale: float = 1.0) -> np.ndarray:
    re = rng.normal(scale=scale, size=order + 1)
    im = rng.normal(scale=scale, size=order + 1)
    return re + 1j * im


def random_normalized_coeffs(rng: np.random.Generator, order: int, scale: float = 0.5) -> np.ndarray:
    c = random_coeffs(rng, order, scale)
    c[0] = 0.0
    c[1] = 1.0
    return c
