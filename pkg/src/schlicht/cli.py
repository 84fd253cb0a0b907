"""Command line front end.

Verbs:

  build       emit a named function as series JSON
  transform   apply a transform to a series read from a file or stdin
  check       evaluate a one-shot class predicate at a fixed radius
  radius      bisect for the largest radius where a predicate holds
  functional  evaluate a coefficient functional against its sharp bound
  sample      draw a random Herglotz function (or its measure)
  report      run a seeded sampling sweep through every bound check

Series travel as JSON objects {"order": N, "coeffs": [[re, im], ...]}
on stdin/stdout unless --input/--output name files, so verbs compose
under shell pipes.  Output is serialized with sorted keys so identical
inputs give identical bytes.

Exit codes: 0 on success, 2 for validation errors (bad flags, malformed
input, out-of-range parameters), 1 for computation errors (singular
division, degenerate probes, and other runtime failures).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

import numpy as np

from .caratheodory import (
    check_coefficient_bound,
    check_pommerenke,
    measure_to_dict,
    sample,
    sample_measure,
)
from .errors import (
    InvalidMeasure,
    InvalidParameter,
    NotCaratheodoryNormalized,
    OrderTooLow,
    SchlichtError,
)
from .functionals import bieberbach_check, covering_check, fekete_szego, hankel
from .probe import (
    CLASS_KINDS,
    class_predicate,
    class_radius,
    injectivity_probe,
    local_univalence_radius,
)
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    evaluate_many,
    series_from_dict,
    series_to_dict,
)
from .transforms import (
    Bernardi,
    Dilation,
    DiskAutomorphism,
    Libera,
    LinearSum,
    OmittedValue,
    Rotation,
    SquareRoot,
    apply,
    convolve,
    iterate_alpha,
    iterate_sigma,
)
from .zoo import (
    convex_extremal,
    from_bounded_turning,
    from_close_to_convex,
    from_ratio_positive,
    from_starlike,
    named_function,
)

BUILD_TAGS = ("koebe", "moebius", "identity", "thmA", "thmB")

TRANSFORM_KINDS = (
    "rotate",
    "dilate",
    "autom",
    "omit",
    "sqrt",
    "libera",
    "bernardi",
    "convolve",
    "linsum",
    "iterate",
    "iterate-sigma",
)

CHECK_KINDS = tuple(k.replace("_", "-") for k in CLASS_KINDS) + ("injectivity",)

RADIUS_PREDICATES = (
    "local-univalence",
    "bounded-turning",
    "starlike",
    "convex",
    "ratio-positive",
    "close-to-convex",
    "quasi-convex",
)

# Exceptions that indicate bad user input rather than a failed computation.
_VALIDATION_ERRORS = (
    InvalidParameter,
    OrderTooLow,
    NotCaratheodoryNormalized,
    InvalidMeasure,
)


def _read_series(path: Optional[str]) -> TruncatedSeries:
    if path is None:
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"input is not valid JSON: {exc}") from exc
    return series_from_dict(payload)


def _emit(obj: object, path: Optional[str]) -> None:
    text = json.dumps(obj, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_complex(text: str, flag: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise InvalidParameter(f"{flag} must be a complex literal, got {text!r}") from exc


def _resolve_input(args: argparse.Namespace) -> TruncatedSeries:
    """Series for verbs that accept either --function NAME or series JSON."""
    function = getattr(args, "function", None)
    if function is not None:
        if args.input is not None:
            raise InvalidParameter("give --function or --input, not both")
        return named_function(function, order=args.order).series
    return _read_series(args.input)


def _require_flag(value, flag: str, kind: str):
    if value is None:
        raise InvalidParameter(f"transform {kind!r} requires {flag}")
    return value


def _write_boundary_csv(path: str, f: TruncatedSeries, r: float, n_angles: int) -> None:
    theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
    values = evaluate_many(f, r * np.exp(1j * theta))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["theta", "re", "im"])
        for t, w in zip(theta, values):
            writer.writerow([repr(float(t)), repr(float(w.real)), repr(float(w.imag))])


def cmd_build(args: argparse.Namespace) -> int:
    nf = named_function(args.name, order=args.order)
    _emit(series_to_dict(nf.series), args.output)
    return 0


def cmd_transform(args: argparse.Namespace) -> int:
    f = _read_series(args.input)
    kind = args.kind
    if kind == "rotate":
        out = apply(Rotation(_require_flag(args.theta, "--theta", kind)), f)
    elif kind == "dilate":
        out = apply(Dilation(_require_flag(args.r, "--r", kind)), f)
    elif kind == "autom":
        sigma = _parse_complex(_require_flag(args.sigma, "--sigma", kind), "--sigma")
        out = apply(DiskAutomorphism(sigma), f)
    elif kind == "omit":
        xi = _parse_complex(_require_flag(args.xi, "--xi", kind), "--xi")
        out = apply(OmittedValue(xi), f)
    elif kind == "sqrt":
        out = apply(SquareRoot(), f)
    elif kind == "libera":
        out = apply(Libera(), f)
    elif kind == "bernardi":
        out = apply(Bernardi(_require_flag(args.gamma, "--gamma", kind)), f)
    elif kind == "convolve":
        other = _read_series(_require_flag(args.with_path, "--with", kind))
        out = convolve(f, other)
    elif kind == "linsum":
        other = _read_series(_require_flag(args.with_path, "--with", kind))
        t = _require_flag(args.t, "--t", kind)
        out = apply(LinearSum(t, other), f)
    elif kind == "iterate":
        alpha = _require_flag(args.alpha, "--alpha", kind)
        out = iterate_alpha(f, alpha, _require_flag(args.n, "--n", kind))
    elif kind == "iterate-sigma":
        sigma_text = _require_flag(args.sigma, "--sigma", kind)
        try:
            sigma = float(sigma_text)
        except ValueError as exc:
            raise InvalidParameter(f"--sigma must be a real number, got {sigma_text!r}") from exc
        out = iterate_sigma(f, sigma, _require_flag(args.n, "--n", kind))
    else:  # pragma: no cover - argparse choices guard this
        raise InvalidParameter(f"unknown transform kind {kind!r}")
    _emit(series_to_dict(out), args.output)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    f = _resolve_input(args)
    kind = args.klass
    if kind == "injectivity":
        holds = injectivity_probe(f, args.r, n_angles=args.angles)
    else:
        g = _read_series(args.g) if args.g is not None else None
        holds = class_predicate(kind, f, args.r, n_angles=args.angles, g=g)
    if args.boundary is not None:
        _write_boundary_csv(args.boundary, f, args.r, args.angles)
    _emit({"class": kind, "holds": bool(holds), "r": args.r}, args.output)
    return 0


def cmd_radius(args: argparse.Namespace) -> int:
    predicate = args.predicate_flag if args.predicate_flag is not None else args.predicate
    if predicate is None:
        raise InvalidParameter("radius needs a predicate (positional or --predicate)")
    if predicate not in RADIUS_PREDICATES:
        raise InvalidParameter(
            f"unknown predicate {predicate!r}; choose from {', '.join(RADIUS_PREDICATES)}"
        )
    f = _resolve_input(args)
    if predicate == "local-univalence":
        angles = args.angles if args.angles is not None else 2048
        result = local_univalence_radius(f, tol=args.tol, n_angles=angles)
    else:
        angles = args.angles if args.angles is not None else 256
        g = _read_series(args.g) if args.g is not None else None
        result = class_radius(predicate, f, g=g, tol=args.tol, n_angles=angles)
    _emit(result.to_dict(), args.output)
    return 0


def cmd_functional(args: argparse.Namespace) -> int:
    f = _resolve_input(args)
    kind = args.kind
    if kind == "fekete":
        if args.alpha is None:
            raise InvalidParameter("functional fekete requires --alpha")
        report = fekete_szego(f, args.alpha)
        _emit(report.to_dict(), args.output)
    elif kind == "hankel":
        value = hankel(f, args.q, args.n)
        _emit(
            {
                "n": args.n,
                "q": args.q,
                "value": [float(value.real), float(value.imag)],
            },
            args.output,
        )
    elif kind == "bieberbach":
        report = bieberbach_check(f)
        _emit(report.to_dict(), args.output)
    elif kind == "covering":
        if args.xi is None:
            raise InvalidParameter("functional covering requires --xi")
        xi = _parse_complex(args.xi, "--xi")
        report = covering_check(f, xi)
        _emit(report.to_dict(), args.output)
    else:  # pragma: no cover - argparse choices guard this
        raise InvalidParameter(f"unknown functional {kind!r}")
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    if args.measure:
        mu = sample_measure(args.seed, args.atoms)
        _emit(measure_to_dict(mu), args.output)
    else:
        h = sample(args.seed, args.atoms, order=args.order)
        _emit(series_to_dict(h), args.output)
    return 0


def report_suite(seed: int, n_samples: int, order: int = 32) -> dict:
    """Seeded sweep: every sample goes through both coefficient checks and
    all four constructor growth checks.  Returns a JSON-ready summary."""
    if n_samples < 1:
        raise InvalidParameter(f"need at least one sample, got {n_samples}")
    if order < 2:
        raise OrderTooLow(f"report needs order >= 2, got {order}")
    child_seeds = np.random.SeedSequence(seed).generate_state(n_samples, dtype=np.uint64)
    names = (
        "coefficient_bound",
        "pommerenke",
        "ratio_positive",
        "bounded_turning",
        "starlike",
        "close_to_convex",
    )
    worst = {name: np.inf for name in names}
    violations = {name: 0 for name in names}
    g = convex_extremal(order + 1)

    def record(name: str, margin: float) -> None:
        worst[name] = min(worst[name], margin)
        if margin < -1e-9:
            violations[name] += 1

    def growth_margin(f, cap) -> float:
        # cap(k) is the sharp bound on |a_k| for the class at hand
        kk = np.arange(2, f.order + 1, dtype=float)
        return float(np.min(cap(kk) - np.abs(f.coeffs[2:])))

    for i in range(n_samples):
        h = sample(int(child_seeds[i]), i % 8 + 1, order=order)
        record("coefficient_bound", check_coefficient_bound(h).worst)
        record("pommerenke", check_pommerenke(h).worst)
        record("ratio_positive", growth_margin(from_ratio_positive(h), lambda kk: 2.0))
        record("bounded_turning", growth_margin(from_bounded_turning(h), lambda kk: 2.0 / kk))
        record("starlike", growth_margin(from_starlike(h), lambda kk: kk))
        record("close_to_convex", growth_margin(from_close_to_convex(h, g), lambda kk: kk))

    checks = {
        name: {"violations": violations[name], "worst_margin": float(worst[name])}
        for name in names
    }
    return {
        "checks": checks,
        "order": order,
        "samples": n_samples,
        "seed": seed,
        "total_violations": int(sum(violations.values())),
    }


def cmd_report(args: argparse.Namespace) -> int:
    summary = report_suite(args.seed, args.samples, order=args.order)
    _emit(summary, args.output)
    return 0 if summary["total_violations"] == 0 else 1


def _add_io(parser: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        parser.add_argument("--input", help="series JSON file (default: stdin)")
    parser.add_argument("--output", help="output file (default: stdout)")


def _add_function_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--function",
        choices=BUILD_TAGS,
        help="use a named function instead of reading series JSON",
    )
    parser.add_argument(
        "--order",
        type=int,
        default=DEFAULT_ORDER,
        help="truncation order when --function is used (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schlicht",
        description="normalized univalent functions as truncated power series",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="emit a named function as series JSON")
    p.add_argument("name", choices=BUILD_TAGS)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    _add_io(p, with_input=False)
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("transform", help="apply a transform to a series")
    p.add_argument("kind", choices=TRANSFORM_KINDS)
    p.add_argument("--theta", type=float, help="rotation angle in radians")
    p.add_argument("--r", type=float, help="dilation factor in (0, 1)")
    p.add_argument("--sigma", help="disk point (autom) or real exponent (iterate-sigma)")
    p.add_argument("--xi", help="omitted value, nonzero complex literal")
    p.add_argument("--gamma", type=float, help="integral-operator parameter, > -1")
    p.add_argument("--alpha", type=float, help="per-step weight for iterate")
    p.add_argument("--n", type=int, help="iteration count")
    p.add_argument("--t", type=float, help="mixing weight in [0, 1] for linsum")
    p.add_argument("--with", dest="with_path", help="second series JSON file")
    _add_io(p)
    p.set_defaults(handler=cmd_transform)

    p = sub.add_parser("check", help="one-shot class predicate at radius r")
    p.add_argument("--class", dest="klass", required=True, choices=CHECK_KINDS)
    p.add_argument("--r", type=float, required=True, help="test radius in (0, 1)")
    p.add_argument("--angles", type=int, default=256)
    p.add_argument("--g", help="comparison series JSON file for two-function classes")
    p.add_argument("--boundary", help="write boundary samples as CSV (theta,re,im)")
    _add_function_source(p)
    _add_io(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("radius", help="largest radius where a predicate holds")
    p.add_argument("predicate", nargs="?", choices=RADIUS_PREDICATES)
    p.add_argument("--predicate", dest="predicate_flag", choices=RADIUS_PREDICATES)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--angles", type=int, default=None)
    p.add_argument("--g", help="comparison series JSON file for two-function classes")
    _add_function_source(p)
    _add_io(p)
    p.set_defaults(handler=cmd_radius)

    p = sub.add_parser("functional", help="coefficient functional vs sharp bound")
    p.add_argument("kind", choices=("fekete", "hankel", "bieberbach", "covering"))
    p.add_argument("--alpha", type=float, help="weight in [0, 1] for fekete")
    p.add_argument("--q", type=int, default=2, help="hankel block size")
    p.add_argument("--n", type=int, default=1, help="hankel starting index")
    p.add_argument("--xi", help="omitted value for covering, nonzero complex literal")
    _add_function_source(p)
    _add_io(p)
    p.set_defaults(handler=cmd_functional)

    p = sub.add_parser("sample", help="draw a random Herglotz function")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--atoms", type=int, default=4)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--measure", action="store_true", help="emit the measure, not the series")
    _add_io(p, with_input=False)
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("report", help="seeded sweep through every bound check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--order", type=int, default=32)
    _add_io(p, with_input=False)
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SchlichtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
