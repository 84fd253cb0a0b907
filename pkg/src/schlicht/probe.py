"""Numerical probes on disk grids: positivity predicates, radius
solvers, and boundary-curve injectivity checks.

Everything here samples finitely many points, so a passing check can
refute a property but never certify it.  Thresholds are strict: a
quantity counts as positive only when it clears POSITIVITY_EPS, and a
radius bracket is reported with the predicate trace that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (
    DegenerateAtCenter,
    EvaluationSingularity,
    InvalidParameter,
)
from .series import NormalizedSeries, TruncatedSeries, differentiate, evaluate_many

#: Strictness for "positive real part" style predicates.
POSITIVITY_EPS = 1e-9

#: Radius searches never report beyond this cap.
RADIUS_CAP = 0.999

#: Innermost radius at which predicates are required to hold.
INNER_RADIUS = 1e-3

#: Hard ceiling on bisection steps.
MAX_BISECTIONS = 64


@dataclass(frozen=True)
class ProbeGrid:
    """Concentric sampling circles: strictly increasing radii in (0, 1),
    at least 8 angles per circle."""

    radii: tuple[float, ...]
    angles_per_circle: int = 64

    def __post_init__(self) -> None:
        r = np.asarray(self.radii, dtype=float)
        if r.size == 0 or np.any(r <= 0) or np.any(r >= 1) or np.any(np.diff(r) <= 0):
            raise InvalidParameter("radii must be strictly increasing within (0, 1)")
        if self.angles_per_circle < 8:
            raise InvalidParameter("need at least 8 angles per circle")
        object.__setattr__(self, "radii", tuple(float(x) for x in r))

    @classmethod
    def default(cls) -> "ProbeGrid":
        return cls((0.3, 0.6, 0.9, 0.95), 64)

    def circle(self, r: float) -> np.ndarray:
        theta = 2 * np.pi * np.arange(self.angles_per_circle) / self.angles_per_circle
        return r * np.exp(1j * theta)

    def points(self) -> np.ndarray:
        return np.concatenate([self.circle(r) for r in self.radii])


@dataclass(frozen=True)
class RadiusResult:
    """Certified bracket [lo, hi] for a radius problem.

    The predicate held at lo and failed at hi, except when capped is
    set: then the predicate held all the way to RADIUS_CAP.  The trace
    records every (radius, outcome) pair the solver evaluated.
    """

    lo: float
    hi: float
    iterations: int
    predicate_name: str
    capped: bool = False
    trace: tuple[tuple[float, bool], ...] = field(default=(), repr=False)

    def __post_init__(self) -> None:
        if not (0.0 <= self.lo <= self.hi < 1.0):
            raise InvalidParameter("radius bracket must satisfy 0 <= lo <= hi < 1")

    def to_dict(self, include_trace: bool = False) -> dict:
        out = {
            "lo": self.lo,
            "hi": self.hi,
            "iterations": self.iterations,
            "predicate": self.predicate_name,
            "capped": self.capped,
        }
        if include_trace:
            out["trace"] = [[r, bool(ok)] for r, ok in self.trace]
        return out


def _as_series(f) -> TruncatedSeries:
    obj = getattr(f, "series", f)
    if not isinstance(obj, TruncatedSeries):
        raise InvalidParameter("expected a truncated series or named function")
    return obj


def _as_evaluator(F) -> Callable[[np.ndarray], np.ndarray]:
    """Accept a series, a named function, or an array-capable callable."""
    if isinstance(F, TruncatedSeries):
        return lambda zs: evaluate_many(F, zs)
    cf = getattr(F, "closed_form", None)
    if cf is not None:
        return lambda zs: np.asarray(cf(zs), dtype=complex)
    ser = getattr(F, "series", None)
    if isinstance(ser, TruncatedSeries):
        return lambda zs: evaluate_many(ser, zs)
    if callable(F):

        def call(zs: np.ndarray) -> np.ndarray:
            try:
                return np.asarray(F(zs), dtype=complex)
            except (TypeError, ValueError):
                return np.array([complex(F(z)) for z in zs])

        return call
    raise InvalidParameter("cannot evaluate object of this type")


def min_real_part(F, r: float, n_angles: int = 256) -> float:
    """Minimum of Re F over n_angles equispaced points on |z| = r.

    Raises EvaluationSingularity when a sample lands on a pole (the
    value comes back non-finite).
    """
    if not 0 < r < 1:
        raise InvalidParameter("radius must lie in (0, 1)")
    if n_angles < 8:
        raise InvalidParameter("need at least 8 angles")
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    vals = _as_evaluator(F)(r * np.exp(1j * theta))
    if not np.all(np.isfinite(vals)):
        raise EvaluationSingularity("sample hit a pole of the evaluator")
    return float(np.min(vals.real))


#: Defining quantities for the classical geometric classes, as functions
#: of (f, f', f'', g') evaluated pointwise on the circle.
CLASS_KINDS = (
    "bounded_turning",
    "starlike",
    "convex",
    "close_to_convex",
    "ratio_positive",
    "quasi_convex",
)


def _eval_f(F) -> Callable[[np.ndarray], np.ndarray]:
    """Evaluator for F itself: closed form when carried, else the series."""
    cf = getattr(F, "closed_form", None)
    if cf is not None:
        return lambda zs: np.asarray(cf(zs), dtype=complex)
    s = _as_series(F)
    return lambda zs: evaluate_many(s, zs)


def _eval_fprime(F) -> Callable[[np.ndarray], np.ndarray]:
    """Evaluator for F': closed-form derivative when carried, else the
    differentiated series.  Closed forms matter near |z| = 1, where a
    truncation's tail swamps the defining quantity."""
    cfd = getattr(F, "closed_form_derivative", None)
    if cfd is not None:
        return lambda zs: np.asarray(cfd(zs), dtype=complex)
    sp = differentiate(_as_series(F))
    return lambda zs: evaluate_many(sp, zs)


def _class_quantity(kind: str, f, zs: np.ndarray, g) -> np.ndarray:
    if kind == "bounded_turning":
        return _eval_fprime(f)(zs)
    if kind == "ratio_positive":
        return _safe_quotient(_eval_f(f)(zs), zs)
    if kind == "starlike":
        return _safe_quotient(zs * _eval_fprime(f)(zs), _eval_f(f)(zs))
    # The remaining kinds need f'', which only the series representation
    # supplies; f' comes from the same series for consistency.
    fp = differentiate(_as_series(f))
    if kind == "convex":
        fpp = differentiate(fp)
        return 1.0 + _safe_quotient(
            zs * evaluate_many(fpp, zs), evaluate_many(fp, zs)
        )
    if kind in ("close_to_convex", "quasi_convex"):
        if g is None:
            raise InvalidParameter(f"{kind} needs a reference function g")
        gv = _eval_fprime(g)(zs)
        if kind == "close_to_convex":
            return _safe_quotient(_eval_fprime(f)(zs), gv)
        fpp = differentiate(fp)
        num = evaluate_many(fp, zs) + zs * evaluate_many(fpp, zs)
        return _safe_quotient(num, gv)
    raise InvalidParameter(f"unknown class kind: {kind!r}")


def _safe_quotient(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    if np.min(np.abs(den)) <= 1e-13:
        raise EvaluationSingularity("denominator vanished on a probe sample")
    return num / den


def class_predicate(
    kind: str,
    f,
    r: float,
    n_angles: int = 256,
    g=None,
) -> bool:
    """True when the defining quantity of the class stays strictly
    positive (beyond POSITIVITY_EPS) on the sampled circle |z| = r.

    Positive on a finite grid refutes nothing about the gaps between
    samples; treat a True as evidence, not proof.
    """
    if not 0 < r < 1:
        raise InvalidParameter("radius must lie in (0, 1)")
    if n_angles < 8:
        raise InvalidParameter("need at least 8 angles")
    kind = kind.replace("-", "_")
    if kind not in CLASS_KINDS:
        raise InvalidParameter(f"unknown class kind: {kind!r}")
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    zs = r * np.exp(1j * theta)
    vals = _class_quantity(kind, f, zs, g)
    if not np.all(np.isfinite(vals)):
        raise EvaluationSingularity("class quantity non-finite on a sample")
    return float(np.min(vals.real)) > POSITIVITY_EPS


def partial_sum(f: TruncatedSeries, k: int) -> NormalizedSeries:
    """Truncate a normalized series to order k, 1 <= k <= order."""
    fs = _as_series(f)
    if not 1 <= k <= fs.order:
        raise InvalidParameter("partial sum order must lie in [1, order]")
    return NormalizedSeries(fs.coeffs[: k + 1])


#: Ascending scan radii used to bracket the first predicate failure
#: before bisection refines it.
_LADDER = tuple(round(0.05 * k, 2) for k in range(1, 20)) + (0.97, 0.99, RADIUS_CAP)


def radius_solve(
    predicate: Callable[[float], bool],
    tol: float = 1e-6,
    predicate_name: str = "predicate",
) -> RadiusResult:
    """Bracket the first radius at which a predicate stops holding.

    The predicate must hold at INNER_RADIUS, otherwise the problem is
    degenerate at the center and DegenerateAtCenter is raised.  An
    ascending ladder scan locates the first failure, then bisection
    narrows the bracket to width <= tol.  If the ladder reaches
    RADIUS_CAP with no failure the result is capped there (lo = hi =
    RADIUS_CAP).  Predicates are assumed monotone in r; the ladder keeps
    the solver honest when truncation artifacts re-validate a predicate
    near |z| = 1, and the trace records every evaluation either way.
    """
    if tol <= 0:
        raise InvalidParameter("tolerance must be positive")
    trace: list[tuple[float, bool]] = []

    def run(r: float) -> bool:
        ok = bool(predicate(r))
        trace.append((r, ok))
        return ok

    if not run(INNER_RADIUS):
        raise DegenerateAtCenter(
            f"{predicate_name} already fails at r = {INNER_RADIUS}"
        )
    lo = INNER_RADIUS
    hi = None
    for r in _LADDER:
        if run(r):
            lo = r
        else:
            hi = r
            break
    if hi is None:
        return RadiusResult(
            lo=RADIUS_CAP,
            hi=RADIUS_CAP,
            iterations=0,
            predicate_name=predicate_name,
            capped=True,
            trace=tuple(trace),
        )
    iterations = 0
    while hi - lo > tol and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if run(mid):
            lo = mid
        else:
            hi = mid
        iterations += 1
    return RadiusResult(
        lo=lo,
        hi=hi,
        iterations=iterations,
        predicate_name=predicate_name,
        trace=tuple(trace),
    )


def class_radius(
    kind: str,
    f,
    g=None,
    tol: float = 1e-6,
    n_angles: int = 256,
) -> RadiusResult:
    """Bisection bracket for the largest circle on which a class
    predicate holds."""
    return radius_solve(
        lambda r: class_predicate(kind, f, r, n_angles, g),
        tol=tol,
        predicate_name=kind.replace("-", "_"),
    )


def _winding_number(values: np.ndarray) -> int:
    """Winding of a closed sample loop around 0 via summed turn angles."""
    args = np.angle(values)
    steps = np.diff(np.concatenate([args, args[:1]]))
    steps = (steps + np.pi) % (2 * np.pi) - np.pi
    return int(round(float(steps.sum()) / (2 * np.pi)))


def local_univalence_radius(f, tol: float = 1e-6, n_angles: int = 2048) -> RadiusResult:
    """Bracket the largest disk on which f' stays away from zero.

    The predicate at radius r demands both min |f'| > POSITIVITY_EPS on
    the circle and winding number 0 of f' around it (argument
    principle: no zeros enclosed), which is monotone in r.  A capped
    result means no zero of f' was found up to RADIUS_CAP.
    """
    fprime = _eval_fprime(f)
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    ring = np.exp(1j * theta)

    def no_zero_inside(r: float) -> bool:
        vals = fprime(r * ring)
        if float(np.min(np.abs(vals))) <= POSITIVITY_EPS:
            return False
        return _winding_number(vals) == 0

    return radius_solve(no_zero_inside, tol=tol, predicate_name="local_univalence")


def _min_pairwise_distance(w: np.ndarray) -> float:
    n = len(w)
    best = np.inf
    step = 512
    for i0 in range(0, n, step):
        i1 = min(i0 + step, n)
        block = np.abs(w[i0:i1, None] - w[None, :])
        block[np.arange(i1 - i0), np.arange(i0, i1)] = np.inf
        best = min(best, float(block.min()))
    return best


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u.real * v.imag - u.imag * v.real


def _has_proper_crossing(a: np.ndarray, b: np.ndarray) -> bool:
    """Any pair of segments [a_i, b_i], [a_j, b_j] crossing transversally.

    Shared endpoints (adjacent segments of the polyline) give zero
    orientation products and are excluded by the strict inequalities.
    """
    u = b - a
    n = len(a)
    step = 256
    for i0 in range(0, n, step):
        i1 = min(i0 + step, n)
        ai = a[i0:i1, None]
        bi = b[i0:i1, None]
        ui = u[i0:i1, None]
        d1 = _cross(u[None, :], ai - a[None, :])
        d2 = _cross(u[None, :], bi - a[None, :])
        d3 = _cross(ui, a[None, :] - ai)
        d4 = _cross(ui, b[None, :] - ai)
        if np.any((d1 * d2 < 0) & (d3 * d4 < 0)):
            return True
    return False


def injectivity_probe(f, r: float, n_angles: int = 512) -> bool:
    """Probe whether f looks injective on |z| = r.

    Samples the boundary image, requires all samples pairwise distinct
    beyond 1e-9, and sweeps the closed polyline for transversal
    self-crossings.  Returns False on the first failure.  This is a
    refutation device: True only means no self-contact was detected at
    this resolution.
    """
    if not 0 < r < 1:
        raise InvalidParameter("radius must lie in (0, 1)")
    if not 8 <= n_angles <= 4096:
        raise InvalidParameter("n_angles must lie in [8, 4096]")
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    w = _as_evaluator(f)(r * np.exp(1j * theta))
    if not np.all(np.isfinite(w)):
        raise EvaluationSingularity("boundary sample hit a pole")
    if _min_pairwise_distance(w) <= 1e-9:
        return False
    return not _has_proper_crossing(w, np.roll(w, -1))
